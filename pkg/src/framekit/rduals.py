"""
R-duals of finite frames.

Given a sequence ``F = {f_i}`` of ``D`` vectors in ``C^D`` and bases
``E = {e_j}``, ``H = {h_i}`` (columns of square matrices), the four kinds of
R-dual are

    type I    omega_j = sum_i <f_i, e_j> h_i                      (E, H orthonormal)
    type II   omega_j = sum_i <f_i, S^{-1/2} e_j> S^{1/2} h_i     (E, H orthonormal)
    type III  omega_j = sum_i <S^{-1/2} f_i, e_j> Q h_i           (E, H orthonormal,
              ||Q|| <= sqrt(||S||), ||Q^{-1}|| <= sqrt(||S^{-1}||))
    type IV   omega_j = sum_i <f_i, e_j> h_i                      (E, H Riesz bases)

with ``S`` the frame operator of ``F``.  In matrix form every type reads
``Omega = K @ H @ (E^* @ L @ F).T`` for suitable operators ``K`` and ``L``;
note the plain transpose.

Besides the constructions the module decides membership (``check_*``),
recovers explicit bases and operators realizing a type III relation
(``witness_type3``) and inverts the constructions (``reconstruct_primal``).
"""

from dataclasses import dataclass, field
import json

import numpy as np

from . import linalg, matio
from .errors import (DimensionMismatch, HypothesisViolated, NotFrameForH,
                     NotONB, NotRieszBasis, NotType3, QNormViolation,
                     SingularQ, WitnessTypeMismatch)
from .frames import (as_sequence, canonical_tight, extend_operator,
                     frame_operator, is_onb)
from .linalg import TAU_EQ, TAU_RANK

__all__ = ['RDualWitness', 'Condition', 'CheckReport', 'q_norm_limits',
           'construct_type1', 'construct_type2', 'construct_type3',
           'construct_type4', 'canonical_rdual_of_dual', 'check_type1_tight',
           'check_type2', 'check_type3', 'witness_type3', 'reconstruct_primal',
           'check_symmetry', 'extended_sqrt']

DUAL_TYPES = ('I', 'II', 'III', 'IV')


@dataclass
class RDualWitness:
    """Bases ``E``, ``H`` and operator ``Q`` realizing an R-dual relation."""
    E: np.ndarray
    H: np.ndarray
    Q: np.ndarray = None
    dual_type: str = 'III'

    def to_dict(self):
        return {'dual_type': self.dual_type,
                'E': matio.matrix_to_obj(self.E),
                'H': matio.matrix_to_obj(self.H),
                'Q': None if self.Q is None else matio.matrix_to_obj(self.Q)}

    @classmethod
    def from_dict(cls, d):
        Q = d.get('Q')
        return cls(E=matio.matrix_from_obj(d['E']), H=matio.matrix_from_obj(d['H']),
                   Q=None if Q is None else matio.matrix_from_obj(Q),
                   dual_type=d['dual_type'])


@dataclass
class Condition:
    name: str
    passed: bool
    lhs: float
    rhs: float

    def to_dict(self):
        return {'name': self.name, 'pass': bool(self.passed),
                'lhs': matio.finite(self.lhs), 'rhs': matio.finite(self.rhs)}

    @classmethod
    def from_dict(cls, d):
        return cls(d['name'], d['pass'], float(d['lhs']), float(d['rhs']))


@dataclass
class CheckReport:
    verdict: str
    conditions: list = field(default_factory=list)
    witness: RDualWitness = None
    reverse_witness: RDualWitness = None

    def __getitem__(self, name):
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self):
        d = {'verdict': self.verdict,
             'conditions': [c.to_dict() for c in self.conditions],
             'witness': None if self.witness is None else self.witness.to_dict()}
        if self.reverse_witness is not None:
            d['reverse_witness'] = self.reverse_witness.to_dict()
        return d

    @classmethod
    def from_dict(cls, d):
        w, rw = d.get('witness'), d.get('reverse_witness')
        return cls(verdict=d['verdict'],
                   conditions=[Condition.from_dict(c) for c in d['conditions']],
                   witness=None if w is None else RDualWitness.from_dict(w),
                   reverse_witness=None if rw is None else RDualWitness.from_dict(rw))

    def to_json(self, indent=None):
        return json.dumps(self.to_dict(), indent=indent)


# -- helpers ---------------------------------------------------------------

def _tau(value, default):
    return default if value is None else value


def _square(F):
    F = as_sequence(F)
    if F.shape[0] != F.shape[1]:
        raise DimensionMismatch('R-duals need as many vectors as the dimension; got %d vectors in C^%d'
                                % (F.shape[1], F.shape[0]))
    return F


def _onb_pair(F, E, H, tau_eq):
    F = _square(F)
    E, H = as_sequence(E), as_sequence(H)
    for name, B in (('E', E), ('H', H)):
        if B.shape != F.shape:
            raise DimensionMismatch('%s has shape %s, expected %s' % (name, B.shape, F.shape))
        if not is_onb(B, tau_eq):
            raise NotONB('%s is not an orthonormal basis' % name)
    return F, E, H


def _bounds(F, tau_rank):
    summary = linalg.spectral_summary(F, tau_rank)
    if summary.rank == 0:
        return 0.0, 0.0, 0
    return summary.sigma_min_nonzero ** 2, summary.sigma_max ** 2, summary.rank


def _rdual(K, H, E, LF):
    # omega_j = K sum_i <LF_i, e_j> h_i
    return K @ H @ (E.conj().T @ LF).T


def extended_sqrt(F, tau_rank=None, tau_eq=None):
    """``S^{1/2}`` on ``span(F)``, extended to the whole space norm-preservingly."""
    F = as_sequence(F)
    return extend_operator(linalg.psd_sqrt(frame_operator(F), tau_rank), F, tau_rank, tau_eq)


def q_norm_limits(F, tau_rank=None):
    """Largest admissible ``||Q||`` and ``||Q^{-1}||`` for type III duals of ``F``."""
    A, B, r = _bounds(as_sequence(F), tau_rank)
    if r == 0:
        raise NotFrameForH('zero sequence has no type III duals')
    return np.sqrt(B), 1.0 / np.sqrt(A)


def _check_q(F, Q, tau_rank, tau_eq):
    Q = linalg.as_matrix(Q, square=True)
    if Q.shape[0] != F.shape[0]:
        raise DimensionMismatch('Q is %dx%d, ambient dimension is %d' % (Q.shape + (F.shape[0],)))
    s = np.linalg.svd(Q, compute_uv=False)
    if s[-1] <= _tau(tau_rank, TAU_RANK) * s[0]:
        raise SingularQ('Q is not invertible')
    max_norm, max_inv_norm = q_norm_limits(F, tau_rank)
    slack = 1 + _tau(tau_eq, TAU_EQ)
    violations = []
    if s[0] > max_norm * slack:
        violations.append(('||Q||', s[0], max_norm))
    if 1 / s[-1] > max_inv_norm * slack:
        violations.append(('||Q^-1||', 1 / s[-1], max_inv_norm))
    if violations:
        raise QNormViolation(violations)
    return Q


# -- constructions ---------------------------------------------------------

def construct_type1(F, E, H, tau_eq=None):
    """Type I R-dual ``omega_j = sum_i <f_i, e_j> h_i``."""
    F, E, H = _onb_pair(F, E, H, tau_eq)
    return _rdual(np.eye(F.shape[0]), H, E, F)


def construct_type2(F, E, H, extend=False, tau_rank=None, tau_eq=None):
    """
    Type II R-dual ``omega_j = sum_i <f_i, S^{-1/2} e_j> S^{1/2} h_i``.

    Type II duals only exist for frames spanning the space.  With
    ``extend=True`` a frame sequence is accepted and ``S^{1/2}`` is replaced
    by its norm-preserving extension off the span; the result is then the
    type III dual with ``Q`` equal to that extension.
    """
    F, E, H = _onb_pair(F, E, H, tau_eq)
    S = frame_operator(F)
    if linalg.numerical_rank(F, tau_rank) < F.shape[0]:
        if not extend:
            raise NotFrameForH('sequence does not span C^%d' % F.shape[0])
        root = extended_sqrt(F, tau_rank, tau_eq)
    else:
        root = linalg.psd_sqrt(S, tau_rank)
    inv_root = linalg.psd_inv_sqrt_on_range(S, tau_rank)
    return _rdual(root, H, E, inv_root @ F)


def construct_type3(F, E, H, Q, tau_rank=None, tau_eq=None):
    """
    Type III R-dual ``omega_j = sum_i <S^{-1/2} f_i, e_j> Q h_i``.

    ``F`` may be a frame sequence; ``S^{-1/2}`` then acts on the span and the
    norm limits on ``Q`` use ``S`` restricted to the span.

    Raises
    ------
    QNormViolation
        If ``||Q|| > sqrt(||S||)`` or ``||Q^{-1}|| > sqrt(||S^{-1}||)``
        beyond a relative slack of ``tau_eq``.
    """
    F, E, H = _onb_pair(F, E, H, tau_eq)
    Q = _check_q(F, Q, tau_rank, tau_eq)
    return _rdual(Q, H, E, canonical_tight(F, tau_rank))


def construct_type4(F, E, H, tau_rank=None):
    """Type IV R-dual ``omega_j = sum_i <f_i, e_j> h_i`` with Riesz bases ``E``, ``H``."""
    F = _square(F)
    E, H = as_sequence(E), as_sequence(H)
    for name, B in (('E', E), ('H', H)):
        if B.shape != F.shape:
            raise DimensionMismatch('%s has shape %s, expected %s' % (name, B.shape, F.shape))
        if linalg.numerical_rank(B, tau_rank) < B.shape[0]:
            raise NotRieszBasis('%s is not a Riesz basis' % name)
    return _rdual(np.eye(F.shape[0]), H, E, F)


def canonical_rdual_of_dual(F, E, H, Q, tau_rank=None, tau_eq=None):
    """
    Canonical type III R-dual of the canonical dual ``{S^{-1} f_i}``.

    It is taken with respect to ``(E, H, (Q^*)^{-1})`` and equals
    ``gamma_j = sum_i <S^{-1/2} f_i, e_j> (Q^*)^{-1} h_i``; it is
    biorthogonal to ``construct_type3(F, E, H, Q)``.  For a frame sequence
    the two are biorthogonal only at the positions where ``(E^* S^{-1/2} F)^T``
    has orthonormal columns, i.e. away from the truncation edge.
    """
    F, E, H = _onb_pair(F, E, H, tau_eq)
    Q = _check_q(F, Q, tau_rank, tau_eq)
    return _rdual(np.linalg.inv(Q.conj().T), H, E, canonical_tight(F, tau_rank))


# -- witnesses -------------------------------------------------------------

def _type1_bases(Fh, Oh, r, seed):
    """
    Orthonormal bases with ``Oh = H (E^* Fh)^T`` for partial isometries of rank ``r``.

    Unitaries are assembled from the singular vectors; the complements of
    the rank-``r`` parts are completed by seeded QR.
    """
    Uf, _, Vf = linalg.svd(Fh)
    Uo, _, Vo = linalg.svd(Oh)
    D = Fh.shape[0]
    Uf = linalg.complete_orthonormal_basis(Uf[:, :r], D, seed)
    Vf = linalg.complete_orthonormal_basis(Vf[:, :r], D, seed + 1)
    Uo = linalg.complete_orthonormal_basis(Uo[:, :r], D, seed + 2)
    Vo = linalg.complete_orthonormal_basis(Vo[:, :r], D, seed + 3)
    return Uf @ Vo.T, Uo @ Vf.T


def witness_type3(F, Omega, tau=None, tau_rank=None, tau_eq=None, seed=0):
    """
    Construct ``(E, H, Q)`` with ``construct_type3(F, E, H, Q) == Omega``.

    ``Q`` is the norm-preserving extension of ``S_Omega^{1/2}``, so that
    ``||Q|| = sqrt(B_Omega)`` and ``||Q^{-1}|| = 1/sqrt(A_Omega)``.  The bases
    turn the canonical Parseval sequence of ``F`` into the normalized
    sequence ``S_Omega^{-1/2} Omega``.

    Raises
    ------
    NotType3
        If the rank condition or the bounds containment fails.
    """
    F, Omega = _square(F), _square(Omega)
    if F.shape != Omega.shape:
        raise DimensionMismatch('shapes %s and %s differ' % (F.shape, Omega.shape))
    tau = _tau(tau, TAU_EQ)
    A_f, B_f, r_f = _bounds(F, tau_rank)
    A_o, B_o, r_o = _bounds(Omega, tau_rank)
    if r_f == 0 or r_f != r_o:
        raise NotType3('rank condition fails: rank F = %d, rank Omega = %d' % (r_f, r_o))
    if A_o < A_f - tau * B_f or B_o > B_f + tau * B_f:
        raise NotType3('bounds (%g, %g) of Omega are not within (%g, %g)' % (A_o, B_o, A_f, B_f))
    S_o = frame_operator(Omega)
    Oh = linalg.psd_inv_sqrt_on_range(S_o, tau_rank) @ Omega
    E, H = _type1_bases(canonical_tight(F, tau_rank), Oh, r_f, seed)
    Q = extend_operator(linalg.psd_sqrt(S_o, tau_rank), Omega, tau_rank, tau_eq)
    return RDualWitness(E=E, H=H, Q=Q, dual_type='III')


def _type2_witness(F, Omega, r, tau_rank, seed):
    S = frame_operator(F)
    inv_root = linalg.psd_inv_sqrt_on_range(S, tau_rank)
    E, H = _type1_bases(inv_root @ F, inv_root @ Omega, r, seed)
    return RDualWitness(E=E, H=H, Q=None, dual_type='II')


def reconstruct_primal(Omega, W, S, tau_rank=None, tau_eq=None):
    """
    Recover ``F`` from a type II or III dual and its witness.

    Uses ``f_i = sum_j <omega_j, (Q^*)^{-1} h_i> S^{1/2} e_j``, where for
    type II ``Q`` is ``S^{1/2}`` (extended off the range if ``S`` is singular).
    """
    Omega = as_sequence(Omega)
    S = linalg.as_matrix(S, square=True)
    root = linalg.psd_sqrt(S, tau_rank)
    if W.dual_type == 'II':
        Q = extend_operator(root, S, tau_rank, tau_eq) if W.Q is None else W.Q
    elif W.dual_type == 'III':
        if W.Q is None:
            raise WitnessTypeMismatch('type III witness without Q')
        Q = W.Q
    else:
        raise WitnessTypeMismatch('reconstruction needs a type II or III witness, got %s'
                                  % W.dual_type)
    X = np.linalg.solve(linalg.as_matrix(Q).conj().T, W.H)
    return root @ W.E @ (X.conj().T @ Omega).T


# -- checks ----------------------------------------------------------------

def _hypotheses(F, Omega, tau, tau_rank):
    D, M = F.shape
    A_f, B_f, r_f = _bounds(F, tau_rank)
    A_o, B_o, r_o = _bounds(Omega, tau_rank)
    excess = max(A_f - A_o, B_o - B_f) if r_o else np.inf
    hyp = [Condition('frame_check', r_f == D, r_f, D),
           Condition('riesz_check', r_o == M, r_o, M),
           Condition('bounds_containment', excess <= tau * B_f, excess, tau * B_f)]
    dim = Condition('dim_condition', M - r_f == D - r_o, M - r_f, D - r_o)
    return hyp, dim, r_f


def _pair(F, Omega):
    F, Omega = _square(F), _square(Omega)
    if F.shape != Omega.shape:
        raise DimensionMismatch('shapes %s and %s differ' % (F.shape, Omega.shape))
    return F, Omega


def _verdict(hyp, membership, strict):
    failed = [c for c in hyp if not c.passed]
    if failed and strict:
        raise HypothesisViolated(failed)
    ok = all(c.passed for c in membership)
    if failed:
        return 'unknown' if ok else 'no'
    return 'yes' if ok else 'no'


def check_type2(F, Omega, tau=None, strict=True, indices=None, tau_rank=None, seed=0):
    """
    Decide whether ``Omega`` is a type II R-dual of the frame ``F``.

    Under the hypotheses (``F`` a frame, ``Omega`` a Riesz sequence whose
    bounds lie within those of ``F``) this holds iff ``{S^{-1/2} omega_j}``
    is orthonormal and ``dim ker T = deficit(Omega)``.

    With ``strict=False`` failed hypotheses are reported instead of raised;
    the verdict is then ``no`` when a membership condition fails and
    ``unknown`` otherwise.  ``indices`` restricts the orthonormality test to
    the given positions, which is how truncations of infinite patterns are
    checked on their interior.
    """
    F, Omega = _pair(F, Omega)
    tau = _tau(tau, TAU_EQ)
    hyp, dim, r = _hypotheses(F, Omega, tau, tau_rank)
    normalized = linalg.psd_inv_sqrt_on_range(frame_operator(F), tau_rank) @ Omega
    if indices is not None:
        normalized = normalized[:, indices]
    G = normalized.conj().T @ normalized
    dev = float(np.abs(G - np.eye(G.shape[0])).max(initial=0.0))
    ortho = Condition('orthonormality_of_normalized_dual', dev <= tau, dev, tau)
    verdict = _verdict(hyp, [ortho, dim], strict)
    witness = _type2_witness(F, Omega, r, tau_rank, seed) if verdict == 'yes' else None
    return CheckReport(verdict, hyp + [ortho, dim], witness)


def check_type3(F, Omega, tau=None, strict=True, tau_rank=None, seed=0):
    """
    Decide whether ``Omega`` is a type III R-dual of the frame ``F``.

    Under the same hypotheses as :func:`check_type2` the relation holds iff
    ``dim ker T = deficit(Omega)``; on ``yes`` the report carries a witness
    from :func:`witness_type3`.
    """
    F, Omega = _pair(F, Omega)
    tau = _tau(tau, TAU_EQ)
    hyp, dim, _ = _hypotheses(F, Omega, tau, tau_rank)
    verdict = _verdict(hyp, [dim], strict)
    witness = None
    if verdict == 'yes':
        witness = witness_type3(F, Omega, tau, tau_rank, seed=seed)
    return CheckReport(verdict, hyp + [dim], witness)


def check_type1_tight(F, Omega, tau=None, tau_rank=None, seed=0):
    """
    Decide type I membership where that is possible: for tight pairs.

    ``yes`` when ``F`` is a tight frame, ``Omega`` a tight Riesz sequence with
    the same bound and ``dim ker T = deficit(Omega)``.  ``no`` when a
    necessary condition fails (frame iff Riesz sequence, equal optimal
    bounds, the dimension identity).  Otherwise ``unknown``: for non-tight
    frames those conditions are not sufficient.
    """
    F, Omega = _pair(F, Omega)
    tau = _tau(tau, TAU_EQ)
    D, M = F.shape
    A_f, B_f, r_f = _bounds(F, tau_rank)
    A_o, B_o, r_o = _bounds(Omega, tau_rank)
    gap = max(abs(A_f - A_o), abs(B_f - B_o))
    spread = max((B_f - A_f) / B_f if r_f else np.inf,
                 (B_o - A_o) / B_o if r_o else np.inf)
    conds = [Condition('frame_check', r_f == D, r_f, D),
             Condition('riesz_check', r_o == M, r_o, M),
             Condition('bounds_equal', gap <= tau * max(B_f, B_o), gap, tau * max(B_f, B_o)),
             Condition('dim_condition', M - r_f == D - r_o, M - r_f, D - r_o),
             Condition('tightness', spread <= tau, spread, tau)]
    frame, riesz, same, dim, tight = (c.passed for c in conds)
    witness = None
    if frame != riesz or not same or not dim:
        verdict = 'no'
    elif frame and tight:
        verdict = 'yes'
        scale = np.sqrt(B_f)
        E, H = _type1_bases(F / scale, Omega / scale, r_f, seed)
        witness = RDualWitness(E=E, H=H, Q=None, dual_type='I')
    else:
        verdict = 'unknown'
    return CheckReport(verdict, conds, witness)


def check_symmetry(F, Omega, tau=None, tau_rank=None, seed=0):
    """
    Compare ``Omega`` type III of ``F`` with ``F`` type III of ``Omega``.

    Requires a frame ``F`` and a Riesz sequence ``Omega`` with equal optimal
    bounds; both directions then have the same verdict.
    """
    F, Omega = _pair(F, Omega)
    tau = _tau(tau, TAU_EQ)
    D, M = F.shape
    A_f, B_f, r_f = _bounds(F, tau_rank)
    A_o, B_o, r_o = _bounds(Omega, tau_rank)
    gap = max(abs(A_f - A_o), abs(B_f - B_o)) if r_o else np.inf
    hyp = [Condition('frame_check', r_f == D, r_f, D),
           Condition('riesz_check', r_o == M, r_o, M),
           Condition('bounds_equal', gap <= tau * B_f, gap, tau * B_f)]
    failed = [c for c in hyp if not c.passed]
    if failed:
        raise HypothesisViolated(failed)
    forward = check_type3(F, Omega, tau, tau_rank=tau_rank, seed=seed)
    reverse = check_type3(Omega, F, tau, tau_rank=tau_rank, seed=seed)
    agree = forward.verdict == reverse.verdict
    conds = hyp + [Condition('forward_type3', forward.verdict == 'yes', forward.verdict == 'yes', 1),
                   Condition('reverse_type3', reverse.verdict == 'yes', reverse.verdict == 'yes', 1),
                   Condition('symmetric_agreement', agree, forward.verdict == 'yes',
                             reverse.verdict == 'yes')]
    verdict = forward.verdict if agree else 'unknown'
    return CheckReport(verdict, conds, forward.witness, reverse.witness)
