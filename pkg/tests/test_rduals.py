import json

import numpy as np
import pytest

from framekit import catalog, rduals
from framekit.errors import (DimensionMismatch, HypothesisViolated, NotFrameForH, NotONB,
                             NotRieszBasis, NotType3, QNormViolation, SingularQ,
                             WitnessTypeMismatch)
from framekit.frames import canonical_dual, frame_operator, is_biorthogonal, optimal_bounds

from conftest import (inner, random_admissible_q, random_frame, random_matrix,
                      random_tight_frame, random_unitary)


def herm_power(S, p):
    """Eigen-calculus oracle for S^p on the range (independent of framekit.linalg)."""
    w, V = np.linalg.eigh(S)
    keep = w > 1e-10 * w.max()
    return (V[:, keep] * w[keep] ** p) @ V[:, keep].conj().T


def oracle_rdual(F, E, H, left=None, pre=None):
    """omega_j = left sum_i <pre f_i, e_j> h_i, by explicit loops."""
    D = F.shape[0]
    left = np.eye(D) if left is None else left
    pre = np.eye(D) if pre is None else pre
    Omega = np.zeros((D, D), dtype=complex)
    for j in range(D):
        for i in range(D):
            Omega[:, j] += inner(pre @ F[:, i], E[:, j]) * (left @ H[:, i])
    return Omega


@pytest.fixture
def setup(rng):
    F = random_frame(rng, 5)
    return F, random_unitary(rng, 5), random_unitary(rng, 5)


def test_type1_matches_definition(setup):
    F, E, H = setup
    np.testing.assert_allclose(rduals.construct_type1(F, E, H), oracle_rdual(F, E, H), atol=1e-12)


def test_type2_matches_definition(setup):
    F, E, H = setup
    S = F @ F.conj().T
    # <f_i, S^{-1/2} e_j> = <S^{-1/2} f_i, e_j>
    expected = oracle_rdual(F, E, H, left=herm_power(S, 0.5), pre=herm_power(S, -0.5))
    np.testing.assert_allclose(rduals.construct_type2(F, E, H), expected, atol=1e-10)


def test_type3_matches_definition(rng, setup):
    F, E, H = setup
    Q = random_admissible_q(rng, F)
    S = F @ F.conj().T
    expected = oracle_rdual(F, E, H, left=Q, pre=herm_power(S, -0.5))
    np.testing.assert_allclose(rduals.construct_type3(F, E, H, Q), expected, atol=1e-10)


def test_type4_matches_definition(rng, setup):
    F = setup[0]
    E, H = random_matrix(rng, 5), random_matrix(rng, 5)
    np.testing.assert_allclose(rduals.construct_type4(F, E, H), oracle_rdual(F, E, H), atol=1e-10)


def test_type1_with_standard_bases_is_transpose():
    F = catalog.repeated_e1_frame(4)
    np.testing.assert_array_equal(rduals.construct_type1(F, np.eye(4), np.eye(4)), F.T)


def test_construction_errors(rng, setup):
    F, E, H = setup
    with pytest.raises(NotONB):
        rduals.construct_type1(F, 2 * E, H)
    with pytest.raises(DimensionMismatch):
        rduals.construct_type1(F[:, :4], E, H)
    with pytest.raises(NotRieszBasis):
        rduals.construct_type4(F, np.diag([1.0, 1, 1, 1, 0]), H)
    deficient = random_frame(rng, 5, rank=3)
    with pytest.raises(NotFrameForH):
        rduals.construct_type2(deficient, E, H)
    rduals.construct_type2(deficient, E, H, extend=True)
    with pytest.raises(SingularQ):
        rduals.construct_type3(F, E, H, np.diag([1.0, 1, 1, 1, 0]))


def test_q_norm_violation_reports_both_limits(setup):
    F, E, H = setup
    A, B = optimal_bounds(F)
    Q = np.diag([2 * np.sqrt(B), 1, 1, 1, 0.5 * np.sqrt(A)])
    with pytest.raises(QNormViolation) as info:
        rduals.construct_type3(F, E, H, Q)
    names = [v[0] for v in info.value.violations]
    assert names == ['||Q||', '||Q^-1||']


def test_type3_with_root_equals_type2(setup):
    F, E, H = setup
    S = frame_operator(F)
    root = herm_power(S, 0.5)
    np.testing.assert_allclose(rduals.construct_type3(F, E, H, root),
                               rduals.construct_type2(F, E, H), atol=1e-10)


def test_sqrt2_pair_verdicts():
    f, g = catalog.sqrt2_frame(6), catalog.sqrt2_riesz_basis(6)
    t3 = rduals.check_type3(f, g)
    assert t3.verdict == 'yes'
    W = t3.witness
    np.testing.assert_allclose(rduals.construct_type3(f, W.E, W.H, W.Q), g, atol=1e-10)
    t2 = rduals.check_type2(f, g)
    assert t2.verdict == 'no'
    assert not t2['orthonormality_of_normalized_dual'].passed
    assert rduals.check_type1_tight(f, g).verdict == 'unknown'


def test_check_type2_strict_raises_and_non_strict_reports(rng):
    F = random_frame(rng, 4, rank=2)
    Omega = random_frame(rng, 4)
    with pytest.raises(HypothesisViolated) as info:
        rduals.check_type2(F, Omega)
    assert 'frame_check' in [c.name for c in info.value.conditions]
    report = rduals.check_type2(F, Omega, strict=False)
    assert report.verdict in ('no', 'unknown')
    assert not report['frame_check'].passed


def test_check_type3_rejects_bounds_outside(rng):
    F = random_frame(rng, 4)
    with pytest.raises(HypothesisViolated):
        rduals.check_type3(F, 10 * F)


def test_check_type1_tight_yes_with_witness(rng):
    F, _ = random_tight_frame(rng, 5)
    E, H = random_unitary(rng, 5), random_unitary(rng, 5)
    Omega = rduals.construct_type1(F, E, H)
    report = rduals.check_type1_tight(F, Omega)
    assert report.verdict == 'yes'
    W = report.witness
    np.testing.assert_allclose(rduals.construct_type1(F, W.E, W.H), Omega, atol=1e-10)


def test_check_type1_tight_no_on_unequal_bounds(rng):
    F, _ = random_tight_frame(rng, 4, bound=2.0)
    assert rduals.check_type1_tight(F, F / 2).verdict == 'no'


def test_witness_type3_rank_mismatch(rng):
    with pytest.raises(NotType3):
        rduals.witness_type3(random_frame(rng, 4), random_frame(rng, 4, rank=3))


def test_reconstruct_primal_type3(rng, setup):
    F, E, H = setup
    Q = random_admissible_q(rng, F)
    Omega = rduals.construct_type3(F, E, H, Q)
    W = rduals.RDualWitness(E, H, Q, 'III')
    np.testing.assert_allclose(rduals.reconstruct_primal(Omega, W, frame_operator(F)), F,
                               atol=1e-9)
    with pytest.raises(WitnessTypeMismatch):
        rduals.reconstruct_primal(Omega, rduals.RDualWitness(E, H, None, 'I'), frame_operator(F))


def test_canonical_rdual_of_dual_is_biorthogonal(rng, setup):
    F, E, H = setup
    Q = random_admissible_q(rng, F)
    Omega = rduals.construct_type3(F, E, H, Q)
    Gamma = rduals.canonical_rdual_of_dual(F, E, H, Q)
    assert is_biorthogonal(Omega, Gamma, 1e-9)
    # it is also the type III dual of the canonical dual (whose S^{-1/2} g_i agree)
    G = canonical_dual(F)
    expected = oracle_rdual(G, E, H, left=np.linalg.inv(Q.conj().T),
                            pre=herm_power(G @ G.conj().T, -0.5))
    np.testing.assert_allclose(Gamma, expected, atol=1e-9)


def test_symmetry(rng):
    f, g = catalog.sqrt2_frame(5), catalog.sqrt2_riesz_basis(5)
    report = rduals.check_symmetry(f, g)
    assert report.verdict == 'yes'
    assert report['symmetric_agreement'].passed
    assert report.reverse_witness is not None
    with pytest.raises(HypothesisViolated):
        rduals.check_symmetry(f, 2 * g)


def test_report_json_round_trip(rng):
    f, g = catalog.sqrt2_frame(4), catalog.sqrt2_riesz_basis(4)
    report = rduals.check_type3(f, g)
    back = rduals.CheckReport.from_dict(json.loads(report.to_json()))
    assert back.verdict == report.verdict
    assert [c.to_dict() for c in back.conditions] == [c.to_dict() for c in report.conditions]
    np.testing.assert_array_equal(back.witness.Q, report.witness.Q)
    np.testing.assert_array_equal(back.witness.E, report.witness.E)


def test_canonical_rdual_of_dual_on_truncated_pattern():
    N = 8
    F = catalog.repeated_e1_frame(N)
    I = np.eye(N)
    Q = rduals.extended_sqrt(F)
    omega = rduals.construct_type3(F, I, I, Q)
    gamma = rduals.canonical_rdual_of_dual(F, I, I, Q)
    # gamma_1 = (Q^*)^{-1} (e1 + e2)/sqrt2 with Q = diag(sqrt2, 1, ...)
    expected = np.zeros(N)
    expected[0], expected[1] = 0.5, 2 ** -0.5
    np.testing.assert_allclose(gamma[:, 0], expected, atol=1e-12)
    np.testing.assert_allclose(omega[:, 0], [1, 2 ** -0.5] + [0] * (N - 2), atol=1e-12)
    assert is_biorthogonal(omega, gamma, 1e-9, indices=list(range(N - 1)))
    assert not is_biorthogonal(omega, gamma, 1e-9)
