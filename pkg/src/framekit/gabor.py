"""
Gabor systems on the cyclic group Z_L.

The system generated by a window ``g`` with translation step ``a`` and
modulation step ``b`` (both dividing ``L``) consists of the ``L^2/(ab)``
vectors ``E_{mb} T_{na} g`` with

    (T_c x)(t) = x(t - c mod L),    (E_c x)(t) = exp(2 pi i c t / L) x(t),

ordered modulation-first: ``m = 0..L/b-1`` outer, ``n = 0..L/a-1`` inner.
Its adjoint system is ``sqrt(L/(ab)) E_{mL/a} T_{nL/b} g`` with
``m = 0..a-1``, ``n = 0..b-1``.  The finite duality principle says the
nonzero spectrum of the frame operator of the system equals that of the
Gram matrix of the adjoint system; multiplicities differ by the factor
``L/(ab)``.
"""

from dataclasses import dataclass, asdict

import numpy as np

from . import linalg
from .errors import BadLattice
from .frames import classify, frame_operator, gram
from .linalg import TAU_EQ, TAU_RANK

__all__ = ['translation', 'modulation', 'window', 'gabor_system',
           'adjoint_system', 'DualityReport', 'duality_check',
           'commutation_check', 'cardinality_report', 'WINDOWS']

WINDOWS = ('dirac', 'constant', 'gaussian')


def _check_lattice(L, a, b):
    if L <= 0 or a <= 0 or b <= 0:
        raise BadLattice('L, a, b must be positive (got %r, %r, %r)' % (L, a, b))
    if L % a or L % b:
        raise BadLattice('a = %d and b = %d must divide L = %d' % (a, b, L))


def _check_window(g, L):
    g = np.asarray(g, dtype=complex).ravel()
    if g.shape != (L,):
        raise ValueError('window has length %d, expected %d' % (g.size, L))
    if not np.any(g):
        raise ValueError('window is zero')
    return g


def translation(L, c):
    """Matrix of the cyclic shift ``x(t) -> x(t - c)``."""
    return np.roll(np.eye(L, dtype=complex), c % L, axis=0)


def modulation(L, c):
    """Matrix of ``x(t) -> exp(2 pi i c t / L) x(t)``."""
    return np.diag(np.exp(2j * np.pi * c * np.arange(L) / L))


def _tf_shift(g, L, mod, shift):
    return np.exp(2j * np.pi * mod * np.arange(L) / L) * np.roll(g, shift)


def window(name, L):
    """
    Named windows: ``dirac`` (unit impulse at 0), ``constant`` (``1/sqrt(L)``)
    and ``gaussian`` (periodized, standard deviation ``L/8``, unit norm).
    """
    if name == 'dirac':
        g = np.zeros(L, dtype=complex)
        g[0] = 1
        return g
    if name == 'constant':
        return np.full(L, 1 / np.sqrt(L), dtype=complex)
    if name == 'gaussian':
        t = np.arange(L)
        sigma = L / 8
        g = sum(np.exp(-(t - k * L) ** 2 / (2 * sigma ** 2)) for k in range(-3, 4))
        return (g / np.linalg.norm(g)).astype(complex)
    raise ValueError('unknown window %r; expected one of %s' % (name, ', '.join(WINDOWS)))


def gabor_system(g, L, a, b):
    """Synthesis matrix (``L x L^2/(ab)``) of ``{E_{mb} T_{na} g}``."""
    _check_lattice(L, a, b)
    g = _check_window(g, L)
    cols = [_tf_shift(g, L, m * b, n * a)
            for m in range(L // b) for n in range(L // a)]
    return np.array(cols).T


def adjoint_system(g, L, a, b):
    """Synthesis matrix (``L x ab``) of ``{sqrt(L/(ab)) E_{mL/a} T_{nL/b} g}``."""
    _check_lattice(L, a, b)
    g = _check_window(g, L)
    scale = np.sqrt(L / (a * b))
    cols = [scale * _tf_shift(g, L, m * (L // a), n * (L // b))
            for m in range(a) for n in range(b)]
    return np.array(cols).T


@dataclass
class DualityReport:
    L: int
    a: int
    b: int
    frame_bounds: tuple
    adjoint_bounds: tuple
    frame_spectrum: list
    adjoint_spectrum: list
    spectral_distance: float
    frame_rank: int
    adjoint_rank: int
    ker_dim: int
    adjoint_deficit: int
    verdict: bool

    def to_dict(self):
        d = asdict(self)
        d['frame_bounds'] = list(self.frame_bounds)
        d['adjoint_bounds'] = list(self.adjoint_bounds)
        return d


def _nonzero_eigs(M, tau_rank):
    w = np.linalg.eigvalsh(M)
    top = w.max(initial=0.0)
    return np.sort(w[w > tau_rank * top]) if top > 0 else np.zeros(0)


def duality_check(g, L, a, b, tau=None, tau_rank=None):
    """
    Compare the frame operator of the Gabor system with the adjoint Gram.

    The verdict is true when every nonzero eigenvalue on one side lies
    within ``tau * ||S||`` of one on the other side (both ways) and the
    ranks satisfy ``rank(S) * ab == rank(Gram) * L``.
    """
    tau = TAU_EQ if tau is None else tau
    tau_rank = TAU_RANK if tau_rank is None else tau_rank
    F = gabor_system(g, L, a, b)
    G = adjoint_system(g, L, a, b)
    s = _nonzero_eigs(frame_operator(F), tau_rank)
    r = _nonzero_eigs(gram(G), tau_rank)
    if s.size and r.size:
        dist = max(np.abs(s[:, None] - r[None, :]).min(axis=1).max(),
                   np.abs(r[:, None] - s[None, :]).min(axis=1).max())
    else:
        dist = 0.0 if s.size == r.size else np.inf
    scale = s.max(initial=0.0)
    verdict = bool(dist <= tau * max(scale, 1e-300) and s.size * a * b == r.size * L)

    def bounds(x):
        return (float(x[0]), float(x[-1])) if x.size else (0.0, 0.0)

    return DualityReport(L=L, a=a, b=b, frame_bounds=bounds(s), adjoint_bounds=bounds(r),
                         frame_spectrum=[float(x) for x in s],
                         adjoint_spectrum=[float(x) for x in r],
                         spectral_distance=float(dist),
                         frame_rank=int(s.size), adjoint_rank=int(r.size),
                         ker_dim=F.shape[1] - int(s.size),
                         adjoint_deficit=L - int(r.size), verdict=verdict)


def _commutator(X, U):
    return float(np.linalg.norm(X @ U - U @ X, 2))


def commutation_check(g, L, a, b, tau=None, tau_rank=None):
    """
    Commutators of ``S``, ``S^{1/2}`` and ``S^{-1/2}`` with lattice generators.

    The generators are ``T_a`` and ``E_b``; when ``ab`` divides ``L`` the
    adjoint generators ``T_{L/b}`` and ``E_{L/a}`` belong to the lattice and
    are checked too, otherwise they are marked not applicable.  Each
    commutator norm is measured relative to the norm of the operator.
    """
    tau = TAU_EQ if tau is None else tau
    F = gabor_system(g, L, a, b)
    S = frame_operator(F)
    ops = {'S': S,
           'S^1/2': linalg.psd_sqrt(S, tau_rank),
           'S^-1/2': linalg.psd_inv_sqrt_on_range(S, tau_rank)}
    gens = {'T_%d' % a: translation(L, a), 'E_%d' % b: modulation(L, b)}
    integer = L % (a * b) == 0
    adj = {'T_%d' % (L // b): translation(L, L // b), 'E_%d' % (L // a): modulation(L, L // a)}

    def table(generators):
        out = {}
        for op_name, X in ops.items():
            norm = max(linalg.operator_norm(X), 1e-300)
            for gen_name, U in generators.items():
                out['%s,%s' % (op_name, gen_name)] = _commutator(X, U) / norm
        return out

    lattice = table(gens)
    adjoint = table(adj) if integer else None
    worst = max(lattice.values())
    if adjoint is not None:
        worst = max(worst, max(adjoint.values()))
    return {'L': L, 'a': a, 'b': b, 'tolerance': tau,
            'lattice': lattice,
            'adjoint': adjoint if integer else 'not applicable',
            'integer_oversampled': integer,
            'max_relative_commutator': worst,
            'verdict': bool(worst <= tau)}


def cardinality_report(g, L, a, b, tau_rank=None):
    """
    Counting data behind literal R-duality of a Gabor system and its adjoint.

    An R-dual relation pairs index sets of equal size, one vector per
    dimension; here that means ``L^2/(ab) == ab == L``, i.e. ``ab == L``.
    """
    F = gabor_system(g, L, a, b)
    G = adjoint_system(g, L, a, b)
    cf, cg = classify(F, tau_rank), classify(G, tau_rank)
    count, adj_count = F.shape[1], G.shape[1]
    flags = []
    if a * b > L:
        flags.append('ab > L: the system has rank %d < L and cannot be a frame for C^L' % cf.rank)
    if count != adj_count:
        flags.append('index sets differ in size (%d vs %d): literal R-duality impossible'
                     % (count, adj_count))
    elif not cf.is_frame_for_H:
        flags.append('critical density but the system is not a frame for C^L')
    return {'L': L, 'a': a, 'b': b,
            'count': count, 'adjoint_count': adj_count,
            'rank': cf.rank, 'adjoint_rank': cg.rank,
            'ker_dim': cf.excess, 'adjoint_deficit': cg.deficit,
            'is_frame': cf.is_frame_for_H,
            'adjoint_is_riesz_sequence': cg.is_riesz_sequence,
            'critical_density': a * b == L,
            'literal_rdual_possible': count == adj_count == L,
            'flags': flags}
