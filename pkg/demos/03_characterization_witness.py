"""
Deciding whether a sequence is an R-dual
========================================

Given a frame and a Riesz sequence, decide whether one is a type II or
type III R-dual of the other and, when it is, produce bases and an
operator that realize the relation.
"""

import numpy as np

from framekit import catalog, rduals

N = 6
f = catalog.sqrt2_frame(N)        # sqrt2 z1, z2, sqrt2 z3, ...
g = catalog.sqrt2_riesz_basis(N)  # sqrt2 z1, z2, z3, ...

t3 = rduals.check_type3(f, g)
print('type III:', t3.verdict)
for c in t3.conditions:
    print('   %-20s %s' % (c.name, 'pass' if c.passed else 'FAIL'))

W = t3.witness
print('witness reproduces g:', np.abs(rduals.construct_type3(f, W.E, W.H, W.Q) - g).max())
print('||Q||^2, ||Q^-1||^-2 =', np.linalg.norm(W.Q, 2) ** 2, np.linalg.norm(np.linalg.inv(W.Q), 2) ** -2)

# the extra condition for type II fails: S^{-1/2} g is not orthonormal
t2 = rduals.check_type2(f, g)
c = t2['orthonormality_of_normalized_dual']
print('type II :', t2.verdict, '(orthonormality defect %.3g)' % c.lhs)

# for this non-tight pair the type I question is left open
print('type I  :', rduals.check_type1_tight(f, g).verdict)

# the relation is symmetric when the optimal bounds agree
print('symmetric:', rduals.check_symmetry(f, g).verdict)

# outside the hypotheses a strict check refuses, a lenient one reports
h = np.diag([3.0] + [1.0] * (N - 1))
try:
    rduals.check_type3(f, h)
except rduals.HypothesisViolated as exc:
    print('strict:', exc)
print('lenient:', rduals.check_type3(f, h, strict=False).verdict)

# the classical truncated examples
for name in catalog.EXAMPLES:
    rep = catalog.run_example(name, 8)
    print('%-26s %s (%d checks)' % (name, 'ok' if rep.passed else 'FAILED', len(rep.assertions)))
