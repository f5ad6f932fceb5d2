import numpy as np
import pytest

from framekit import gabor
from framekit.errors import BadLattice

from conftest import random_matrix


def brute_element(g, L, mod, shift):
    """exp(2 pi i mod t / L) g(t - shift mod L), entry by entry."""
    return np.array([np.exp(2j * np.pi * mod * t / L) * g[(t - shift) % L] for t in range(L)])


def test_operators_act_as_defined(rng):
    L = 6
    x = random_matrix(rng, L, 1)[:, 0]
    np.testing.assert_allclose(gabor.translation(L, 2) @ x, [x[(t - 2) % L] for t in range(L)])
    np.testing.assert_allclose(gabor.modulation(L, 1) @ x,
                               [np.exp(2j * np.pi * t / L) * x[t] for t in range(L)])


def test_system_matches_brute_force(rng):
    L, a, b = 12, 3, 4
    g = random_matrix(rng, L, 1)[:, 0]
    G = gabor.gabor_system(g, L, a, b)
    cols = [brute_element(g, L, m * b, n * a) for m in range(L // b) for n in range(L // a)]
    np.testing.assert_allclose(G, np.array(cols).T, atol=1e-12)
    A = gabor.adjoint_system(g, L, a, b)
    scale = np.sqrt(L / (a * b))
    cols = [scale * brute_element(g, L, m * (L // a), n * (L // b))
            for m in range(a) for n in range(b)]
    np.testing.assert_allclose(A, np.array(cols).T, atol=1e-12)


def test_dirac_window_full_lattice():
    # a = b = 1 at L = 4: every shift of the impulse, each with all 4 modulations
    g = gabor.window('dirac', 4)
    G = gabor.gabor_system(g, 4, 1, 1)
    S = sum(np.outer(G[:, k], G[:, k].conj()) for k in range(G.shape[1]))
    np.testing.assert_allclose(S, 4 * np.eye(4), atol=1e-12)
    rep = gabor.duality_check(g, 4, 1, 1)
    assert rep.verdict and rep.frame_bounds == pytest.approx((4, 4))


def test_full_lattice_is_tight_with_energy_identity(rng):
    # sum over all (m, n) of |<x, E_m T_n g>|^2 = L ||g||^2 ||x||^2
    L = 8
    g = random_matrix(rng, L, 1)[:, 0]
    x = random_matrix(rng, L, 1)[:, 0]
    energy = sum(abs(np.vdot(brute_element(g, L, m, n), x)) ** 2
                 for m in range(L) for n in range(L))
    assert energy == pytest.approx(L * np.linalg.norm(g) ** 2 * np.linalg.norm(x) ** 2)
    S = gabor.gabor_system(g, L, 1, 1)
    np.testing.assert_allclose(S @ S.conj().T, L * np.linalg.norm(g) ** 2 * np.eye(L), atol=1e-9)


@pytest.mark.parametrize('L,a,b', [(8, 2, 2), (12, 2, 3), (12, 3, 3), (12, 4, 3), (8, 4, 4)])
def test_duality_principle(rng, L, a, b):
    g = random_matrix(rng, L, 1)[:, 0]
    rep = gabor.duality_check(g, L, a, b)
    assert rep.verdict
    assert rep.spectral_distance <= 1e-9 * rep.frame_bounds[1]
    assert rep.frame_rank * a * b == rep.adjoint_rank * L


def test_critical_density_adjoint_equals_system(rng):
    L, a, b = 12, 3, 4
    g = random_matrix(rng, L, 1)[:, 0]
    np.testing.assert_allclose(gabor.adjoint_system(g, L, a, b), gabor.gabor_system(g, L, a, b))


def test_commutation(rng):
    g = random_matrix(rng, 12, 1)[:, 0]
    rep = gabor.commutation_check(g, 12, 2, 3)
    assert rep['verdict'] and rep['integer_oversampled']
    assert rep['max_relative_commutator'] <= 1e-9
    rep = gabor.commutation_check(g, 12, 4, 6)
    assert rep['adjoint'] == 'not applicable'


def test_cardinality_flags():
    g = gabor.window('gaussian', 8)
    rep = gabor.cardinality_report(g, 8, 4, 4)
    assert rep['count'] == 4 and rep['adjoint_count'] == 16
    assert any('ab > L' in f for f in rep['flags'])
    rep = gabor.cardinality_report(g, 8, 2, 4)
    assert rep['critical_density'] and rep['literal_rdual_possible']
    rep = gabor.cardinality_report(g, 8, 2, 2)
    assert rep['ker_dim'] == 16 - 8 and rep['adjoint_deficit'] == 8 - 4


def test_windows():
    for name in gabor.WINDOWS:
        assert np.linalg.norm(gabor.window(name, 16)) == pytest.approx(1)
    with pytest.raises(ValueError):
        gabor.window('hann', 8)


def test_bad_lattice():
    g = gabor.window('dirac', 8)
    with pytest.raises(BadLattice):
        gabor.gabor_system(g, 8, 3, 2)
    with pytest.raises(BadLattice):
        gabor.gabor_system(g, 8, 0, 2)
    with pytest.raises(ValueError):
        gabor.gabor_system(np.zeros(8), 8, 2, 2)


def test_adjoint_collapses_on_full_lattice():
    L = 4
    g = gabor.window('dirac', L)
    A = gabor.adjoint_system(g, L, 1, 1)
    np.testing.assert_allclose(A[:, 0], 2 * g)
    assert np.linalg.norm(A[:, 0]) ** 2 == pytest.approx(4)
