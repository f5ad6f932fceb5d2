"""
Dense complex linear algebra kernel.

Hermitian eigendecompositions, SVD, square roots of positive semidefinite
matrices (including pseudo-inverse square roots restricted to the range),
operator norms and numerical rank.  Everything works on plain numpy arrays.

Tolerances are relative: ``TAU_RANK`` is measured against the largest
singular value (or eigenvalue), ``TAU_EQ`` against the norm of the matrix
being compared.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NotHermitian, NotPSD

__all__ = ['TAU_RANK', 'TAU_EQ', 'SpectralSummary', 'as_matrix',
           'hermitian_eig', 'psd_sqrt', 'psd_inv_sqrt_on_range',
           'psd_pinv', 'range_projector', 'svd', 'numerical_rank',
           'operator_norm', 'spectral_summary', 'is_hermitian', 'is_unitary',
           'normalize_phases', 'complete_orthonormal_basis', 'orthonormal_range']

TAU_RANK = 1e-10
TAU_EQ = 1e-9


@dataclass(frozen=True)
class SpectralSummary:
    singular_values: np.ndarray
    rank: int
    sigma_max: float
    sigma_min_nonzero: float

    def to_dict(self):
        return {'singular_values': [float(s) for s in self.singular_values],
                'rank': self.rank,
                'sigma_max': self.sigma_max,
                'sigma_min_nonzero': self.sigma_min_nonzero}


def as_matrix(A, square=False):
    A = np.asarray(A, dtype=complex)
    if A.ndim == 1:
        A = A[:, None]
    if A.ndim != 2:
        raise ValueError('expected a 2-d array, got shape %s' % (A.shape,))
    if square and A.shape[0] != A.shape[1]:
        raise ValueError('expected a square matrix, got shape %s' % (A.shape,))
    return A


def _tau(value, default):
    return default if value is None else value


def is_hermitian(A, tau_eq=None):
    A = as_matrix(A, square=True)
    scale = max(np.abs(A).max(initial=0.0), np.finfo(float).tiny)
    return bool(np.abs(A - A.conj().T).max(initial=0.0) <= _tau(tau_eq, TAU_EQ) * scale)


def is_unitary(U, tau_eq=None):
    U = as_matrix(U)
    if U.shape[0] != U.shape[1]:
        return False
    err = np.abs(U.conj().T @ U - np.eye(U.shape[1])).max(initial=0.0)
    return bool(err <= _tau(tau_eq, TAU_EQ))


def normalize_phases(V, tol=1e-12):
    """Rotate each column so its first non-negligible entry is real positive."""
    V = np.array(V, dtype=complex)
    for k in range(V.shape[1]):
        col = V[:, k]
        big = np.flatnonzero(np.abs(col) > tol * max(np.abs(col).max(initial=0.0), 1e-300))
        if big.size:
            z = col[big[0]]
            V[:, k] = col * (abs(z) / z)
    return V


def hermitian_eig(A, tau_eq=None):
    """
    Eigendecomposition of a Hermitian matrix.

    Returns ascending eigenvalues and a unitary matrix of eigenvectors whose
    first non-negligible component is real positive.
    """
    A = as_matrix(A, square=True)
    if not is_hermitian(A, tau_eq):
        raise NotHermitian('matrix is not Hermitian within tau_eq')
    w, V = np.linalg.eigh((A + A.conj().T) / 2)
    return w, normalize_phases(V)


def _psd_eig(S, tau_rank):
    w, V = hermitian_eig(S)
    tau_rank = _tau(tau_rank, TAU_RANK)
    scale = max(np.abs(w).max(initial=0.0), 0.0)
    if w.size and w[0] < -tau_rank * scale:
        raise NotPSD('eigenvalue %.3e below -tau_rank*||S||' % w[0])
    return np.clip(w, 0.0, None), V, scale


def psd_sqrt(S, tau_rank=None):
    """Unique positive semidefinite square root of ``S``."""
    w, V, _ = _psd_eig(S, tau_rank)
    return (V * np.sqrt(w)) @ V.conj().T


def _on_range(S, power, tau_rank):
    w, V, scale = _psd_eig(S, tau_rank)
    keep = w > _tau(tau_rank, TAU_RANK) * scale
    d = np.zeros_like(w)
    d[keep] = w[keep] ** power
    return (V * d) @ V.conj().T


def psd_inv_sqrt_on_range(S, tau_rank=None):
    """
    Inverse square root of ``S`` on its range, zero on its kernel.

    Eigenvalues at or below ``tau_rank * ||S||`` are treated as kernel.
    """
    return _on_range(S, -0.5, tau_rank)


def psd_pinv(S, tau_rank=None):
    """Moore-Penrose pseudo-inverse of a PSD matrix."""
    return _on_range(S, -1.0, tau_rank)


def range_projector(S, tau_rank=None):
    """Orthogonal projector onto the range of a PSD matrix."""
    return _on_range(S, 0.0, tau_rank)


def svd(A):
    """
    Full singular value decomposition ``A = U @ diag(s) @ V^*``.

    Returns ``(U, s, V)`` with ``s`` descending; note ``V`` and not ``V^*``.
    """
    A = as_matrix(A)
    U, s, Vh = np.linalg.svd(A, full_matrices=True)
    return U, s, Vh.conj().T


def operator_norm(A):
    A = as_matrix(A)
    if A.size == 0:
        return 0.0
    return float(np.linalg.norm(A, 2))


def numerical_rank(A, tau_rank=None):
    """Number of singular values above ``tau_rank * sigma_max``."""
    A = as_matrix(A)
    if A.size == 0:
        return 0
    s = np.linalg.svd(A, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > _tau(tau_rank, TAU_RANK) * s[0]))


def spectral_summary(A, tau_rank=None):
    A = as_matrix(A)
    s = np.linalg.svd(A, compute_uv=False) if A.size else np.zeros(0)
    smax = float(s[0]) if s.size else 0.0
    rank = int(np.count_nonzero(s > _tau(tau_rank, TAU_RANK) * smax)) if smax > 0 else 0
    smin = float(s[rank - 1]) if rank else 0.0
    return SpectralSummary(singular_values=s, rank=rank, sigma_max=smax,
                           sigma_min_nonzero=smin)


def orthonormal_range(A, tau_rank=None):
    """Orthonormal basis (as columns) of the numerical range of ``A``."""
    A = as_matrix(A)
    U, s, _ = svd(A)
    r = numerical_rank(A, tau_rank)
    return U[:, :r]


def complete_orthonormal_basis(B, dim=None, seed=0):
    """
    Extend the orthonormal columns ``B`` to a unitary matrix.

    The complement comes from a QR factorization of a seeded random block,
    so the result is deterministic for a given ``seed``.  Added columns are
    phase-normalized.
    """
    B = as_matrix(B)
    n = B.shape[0] if dim is None else dim
    k = B.shape[1]
    if k == n:
        return B.copy()
    rng = np.random.default_rng(seed)
    R = rng.standard_normal((n, n - k)) + 1j * rng.standard_normal((n, n - k))
    R -= B @ (B.conj().T @ R)
    R -= B @ (B.conj().T @ R)
    Qc, _ = np.linalg.qr(R)
    return np.hstack([B, normalize_phases(Qc)])
