"""
Gabor systems on Z_L and their adjoints
=======================================

The frame operator of a Gabor system and the Gram matrix of its scaled
adjoint system share their nonzero eigenvalues.  At critical density the
two systems coincide, and only there can they be R-duals of each other.
"""

import numpy as np

from framekit import gabor, rduals

L = 12
g = gabor.window('gaussian', L)

for a, b in [(2, 2), (2, 3), (3, 4), (4, 4)]:
    rep = gabor.duality_check(g, L, a, b)
    card = gabor.cardinality_report(g, L, a, b)
    print('a=%d b=%d  %3d vectors vs %2d adjoint  bounds (%.4f, %.4f)  spectra agree: %s'
          % (a, b, card['count'], card['adjoint_count'], *rep.frame_bounds, rep.verdict))
    for flag in card['flags']:
        print('      ' + flag)

# each eigenvalue of the adjoint Gram appears L/(ab) times in the frame operator
rep = gabor.duality_check(g, L, 2, 2)
print('distinct eigenvalues:', np.unique(np.round(rep.frame_spectrum, 10)))
print('rank %d vs %d, ratio L/(ab) = %d' % (rep.frame_rank, rep.adjoint_rank, L // 4))

# S, S^1/2 and S^-1/2 commute with time-frequency shifts in the lattice
comm = gabor.commutation_check(g, L, 2, 3)
print('largest relative commutator %.1e' % comm['max_relative_commutator'])

# critical density: the system is a Riesz basis and its own R-dual
F = gabor.gabor_system(g, L, 3, 4)
print('type III at ab = L:', rduals.check_type3(F, gabor.adjoint_system(g, L, 3, 4)).verdict)
