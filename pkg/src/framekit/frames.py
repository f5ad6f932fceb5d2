"""
Finite sequences of vectors viewed as frames, frame sequences and Riesz
sequences.

A sequence ``{f_i}`` of ``M`` vectors in ``C^D`` is stored as its ``D x M``
synthesis matrix: column ``i`` is ``f_i``.  Inner products are linear in the
first argument, ``<x, y> = y^* x``.

Bounds are always the optimal bounds over the span of the sequence, i.e. the
squared extreme nonzero singular values of the synthesis matrix.
"""

from dataclasses import dataclass, asdict

import numpy as np

from . import linalg
from .errors import (DimensionMismatch, NotBijectiveOnV, NotONB, SingularQ,
                     ZeroSequence)
from .linalg import TAU_EQ, TAU_RANK

__all__ = ['Classification', 'as_sequence', 'synthesis', 'analysis',
           'frame_operator', 'gram', 'optimal_bounds', 'classify',
           'canonical_dual', 'canonical_tight', 'extend_operator',
           'riesz_from_operator', 'dual_riesz_from_operator', 'is_onb',
           'is_biorthogonal', 'standard_basis']


def as_sequence(F):
    """Coerce ``F`` to a complex ``D x M`` synthesis matrix."""
    return linalg.as_matrix(F)


def standard_basis(D):
    return np.eye(D, dtype=complex)


def synthesis(F):
    return as_sequence(F).copy()


def analysis(F):
    return as_sequence(F).conj().T


def frame_operator(F):
    F = as_sequence(F)
    S = F @ F.conj().T
    return (S + S.conj().T) / 2


def gram(F):
    F = as_sequence(F)
    G = F.conj().T @ F
    return (G + G.conj().T) / 2


def optimal_bounds(F, tau_rank=None):
    """
    Optimal lower and upper bounds of ``F`` over its span.

    ``A`` is the square of the smallest nonzero singular value of the
    synthesis matrix and ``B`` the square of the largest.
    """
    summary = linalg.spectral_summary(as_sequence(F), tau_rank)
    if summary.rank == 0:
        raise ZeroSequence('all vectors of the sequence vanish')
    return summary.sigma_min_nonzero ** 2, summary.sigma_max ** 2


@dataclass(frozen=True)
class Classification:
    ambient_dim: int
    count: int
    rank: int
    is_frame_for_H: bool
    is_frame_sequence: bool
    is_riesz_sequence: bool
    is_riesz_basis: bool
    is_onb: bool
    is_tight: bool
    excess: int
    deficit: int
    bounds: tuple

    def to_dict(self):
        d = asdict(self)
        d['bounds'] = list(self.bounds)
        return d

    def describe(self):
        if self.is_riesz_basis:
            kind = 'Riesz basis'
        elif self.is_frame_for_H:
            kind = 'frame'
        elif self.is_riesz_sequence:
            kind = 'Riesz sequence'
        elif self.is_frame_sequence:
            kind = 'frame sequence'
        else:
            kind = 'zero sequence'
        parts = [kind]
        if self.is_tight:
            parts.append('tight')
        parts.append('bounds (%.12g, %.12g)' % self.bounds)
        parts.append('excess %d' % self.excess)
        parts.append('deficit %d' % self.deficit)
        if self.is_onb:
            parts.append('orthonormal')
        return ', '.join(parts)


def classify(F, tau_rank=None, tau_eq=None):
    F = as_sequence(F)
    tau_eq = TAU_EQ if tau_eq is None else tau_eq
    D, M = F.shape
    summary = linalg.spectral_summary(F, tau_rank)
    r = summary.rank
    if r:
        A, B = summary.sigma_min_nonzero ** 2, summary.sigma_max ** 2
    else:
        A = B = 0.0
    frame_for_H = r == D
    riesz = r == M
    tight = r > 0 and abs(B - A) <= tau_eq * B
    onb = frame_for_H and riesz and D == M and is_onb(F, tau_eq)
    return Classification(ambient_dim=D, count=M, rank=r,
                          is_frame_for_H=frame_for_H,
                          is_frame_sequence=r > 0,
                          is_riesz_sequence=riesz,
                          is_riesz_basis=frame_for_H and riesz,
                          is_onb=onb, is_tight=tight,
                          excess=M - r, deficit=D - r, bounds=(A, B))


def canonical_dual(F, tau_rank=None):
    """Canonical dual ``{S^+ f_i}``, with ``S^+`` the pseudo-inverse on the span."""
    F = as_sequence(F)
    return linalg.psd_pinv(frame_operator(F), tau_rank) @ F


def canonical_tight(F, tau_rank=None):
    """Canonical Parseval sequence ``{S^{-1/2} f_i}`` on the span of ``F``."""
    F = as_sequence(F)
    return linalg.psd_inv_sqrt_on_range(frame_operator(F), tau_rank) @ F


def extend_operator(Phi, V, tau_rank=None, tau_eq=None):
    """
    Extend an operator acting bijectively on ``span(V)`` to the whole space.

    The extension agrees with ``Phi`` on ``span(V)`` and acts as
    ``||Phi^{-1}||^{-1}`` times the identity on the orthogonal complement,
    so that both the norm and the norm of the inverse are preserved.

    Parameters
    ----------
    Phi : (D, D) array
        Operator in ambient coordinates; only its action on ``span(V)`` is used.
    V : (D, k) array
        Spanning set (not necessarily orthonormal) of the subspace.
    """
    Phi = linalg.as_matrix(Phi, square=True)
    V = linalg.as_matrix(V)
    D = Phi.shape[0]
    if V.shape[0] != D:
        raise DimensionMismatch('subspace lives in C^%d, operator in C^%d' % (V.shape[0], D))
    tau_rank = TAU_RANK if tau_rank is None else tau_rank
    tau_eq = TAU_EQ if tau_eq is None else tau_eq
    B = linalg.orthonormal_range(V, tau_rank)
    k = B.shape[1]
    if k == 0:
        raise NotBijectiveOnV('subspace is trivial')
    image = Phi @ B
    leak = image - B @ (B.conj().T @ image)
    if np.linalg.norm(leak, 2) > tau_eq * max(np.linalg.norm(image, 2), 1e-300):
        raise NotBijectiveOnV('operator does not map the subspace into itself')
    restricted = B.conj().T @ image
    s = np.linalg.svd(restricted, compute_uv=False)
    if s[-1] <= tau_rank * s[0]:
        raise NotBijectiveOnV('operator is rank deficient on the subspace')
    P = B @ B.conj().T
    return Phi @ P + s[-1] * (np.eye(D) - P)


def is_onb(E, tau_eq=None):
    E = as_sequence(E)
    return E.shape[0] == E.shape[1] and linalg.is_unitary(E, tau_eq)


def riesz_from_operator(Q, E, tau_rank=None, tau_eq=None):
    """Riesz basis ``{Q e_i}``; its frame operator is ``Q Q^*``."""
    Q, E = _check_operator_basis(Q, E, tau_rank, tau_eq)
    return Q @ E


def dual_riesz_from_operator(Q, E, tau_rank=None, tau_eq=None):
    """Dual Riesz basis ``{(Q^*)^{-1} e_i}`` of ``{Q e_i}``."""
    Q, E = _check_operator_basis(Q, E, tau_rank, tau_eq)
    return np.linalg.solve(Q.conj().T, E)


def _check_operator_basis(Q, E, tau_rank, tau_eq):
    Q = linalg.as_matrix(Q, square=True)
    E = as_sequence(E)
    if E.shape[0] != Q.shape[0]:
        raise DimensionMismatch('operator is %dx%d, basis vectors have length %d'
                                % (Q.shape + (E.shape[0],)))
    if not is_onb(E, tau_eq):
        raise NotONB('basis is not orthonormal')
    if linalg.numerical_rank(Q, tau_rank) < Q.shape[0]:
        raise SingularQ('operator is not invertible')
    return Q, E


def is_biorthogonal(F, G, tau=None, indices=None):
    """
    True iff ``|<f_j, g_k> - delta_jk| <= tau`` for all ``j, k``.

    ``indices`` restricts the test to a subset of positions (used for the
    interior of truncated infinite patterns).
    """
    F, G = as_sequence(F), as_sequence(G)
    if F.shape != G.shape:
        raise DimensionMismatch('sequences have shapes %s and %s' % (F.shape, G.shape))
    if indices is not None:
        F, G = F[:, indices], G[:, indices]
    cross = G.conj().T @ F
    tau = TAU_EQ if tau is None else tau
    return bool(np.abs(cross - np.eye(F.shape[1])).max(initial=0.0) <= tau)
