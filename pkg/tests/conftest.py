import numpy as np
import pytest


def random_unitary(rng, n):
    Z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    Q, R = np.linalg.qr(Z)
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def random_matrix(rng, rows, cols=None):
    cols = rows if cols is None else cols
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_frame(rng, n, rank=None):
    """Random D = M sequence; with ``rank`` < n it is a rank-deficient frame sequence."""
    F = random_matrix(rng, n)
    if rank is not None and rank < n:
        F = random_matrix(rng, n, rank) @ random_matrix(rng, rank, n)
    return F


def random_tight_frame(rng, n, bound=None):
    A = rng.uniform(0.5, 3.0) if bound is None else bound
    return np.sqrt(A) * random_unitary(rng, n), A


def random_admissible_q(rng, F):
    """Q with singular values inside [sqrt(A), sqrt(B)] of F."""
    s = np.linalg.svd(F, compute_uv=False)
    s = s[s > 1e-10 * s[0]]
    lo, hi = s[-1], s[0]
    sig = rng.uniform(lo, hi, size=F.shape[0])
    sig[0], sig[-1] = hi, lo
    return random_unitary(rng, F.shape[0]) @ np.diag(sig) @ random_unitary(rng, F.shape[0])


def inner(x, y):
    """<x, y>, linear in the first argument."""
    return np.vdot(y, x)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section('acceptance criteria')
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20241016)
