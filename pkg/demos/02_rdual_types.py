"""
The four kinds of R-dual
========================

R-duals trade a frame with redundancy for a Riesz sequence with a
deficit.  Build each type for a random frame in C^6 and look at the
bounds, the dimension count and the inversion formula.
"""

import numpy as np

from framekit import linalg, rduals
from framekit.frames import canonical_dual, classify, frame_operator, is_biorthogonal

rng = np.random.default_rng(7)
D = 6


def unitary():
    Z = rng.standard_normal((D, D)) + 1j * rng.standard_normal((D, D))
    return np.linalg.qr(Z)[0]


# a rank-4 sequence in C^6: two dimensions of kernel, two of deficit
F = (rng.standard_normal((D, 4)) @ rng.standard_normal((4, D))).astype(complex)
E, H = unitary(), unitary()
print('F:', classify(F).describe())

omega1 = rduals.construct_type1(F, E, H)
print('type I  :', classify(omega1).describe())

# type I twice, with the bases swapped, gives F back
print('involution error', np.abs(rduals.construct_type1(omega1, H, E) - F).max())

# type II needs S^1/2 on all of C^6; extend it off the span of F
omega2 = rduals.construct_type2(F, E, H, extend=True)
print('type II :', classify(omega2).describe())

# type III: any invertible Q within the norm limits; the extended S^1/2 sits on the boundary
Q = rduals.extended_sqrt(F)
omega3 = rduals.construct_type3(F, E, H, Q)
print('type III:', classify(omega3).describe())
print('Q norm limits: ||Q|| <= %.6g, ||Q^-1|| <= %.6g' % rduals.q_norm_limits(F))

# type IV: arbitrary Riesz bases
omega4 = rduals.construct_type4(F, rng.standard_normal((D, D)), rng.standard_normal((D, D)))
print('type IV :', classify(omega4).describe())

# on a frame for C^6 the type II duals of F and of its canonical dual are biorthogonal
G = rng.standard_normal((D, D)) + 1j * rng.standard_normal((D, D))
print('biorthogonal:', is_biorthogonal(rduals.construct_type2(G, E, H),
                                       rduals.construct_type2(canonical_dual(G), E, H), 1e-9))

# and G comes back from its type III dual, the bases and Q
Qg = linalg.psd_sqrt(frame_operator(G))
W = rduals.RDualWitness(E, H, Qg, 'III')
back = rduals.reconstruct_primal(rduals.construct_type3(G, E, H, Qg), W, frame_operator(G))
print('reconstruction error', np.abs(back - G).max())
