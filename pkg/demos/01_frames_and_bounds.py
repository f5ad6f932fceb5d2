"""
Frames, bounds and the extension trick
======================================

A sequence is a matrix whose columns are the vectors.  We classify a few
small sequences, read off their optimal bounds and extend an operator
defined on a subspace to the whole space without changing its norms.
"""

import numpy as np

from framekit import frames, linalg

e1, e2, e3 = np.eye(3)

# {e1, e1, e2}: spans only two of three dimensions, one redundant vector
F = np.column_stack([e1, e1, e2])
print(frames.classify(F).describe())

# add e3 and it becomes a frame for C^3 (still with one repeated vector)
print(frames.classify(np.column_stack([e1, e2, e3, e1])).describe())

# bounds are squared extreme singular values; compare with the quadratic form
A, B = frames.optimal_bounds(F)
x = np.array([1.0, 0.0, 0.0])
print('A =', A, ' B =', B, ' sum |<e1, f_i>|^2 =', np.sum(np.abs(F.conj().T @ x) ** 2))

# canonical dual and canonical Parseval sequence
print('canonical dual:\n', frames.canonical_dual(F).real)
P = frames.canonical_tight(F)
print('frame operator of the Parseval sequence:\n', frames.frame_operator(P).real.round(12))

# extend the square root of S from span{e1, e2} to C^3
S = frames.frame_operator(F)
root = linalg.psd_sqrt(S)
ext = frames.extend_operator(root, F)
print('extended S^1/2:\n', ext.real.round(12))
print('norm', np.linalg.norm(ext, 2), 'inverse norm', np.linalg.norm(np.linalg.inv(ext), 2))
