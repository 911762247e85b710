import numpy as np
import pytest

from hankel_lab.coefmap import ALPHA_REGION_MAX, ClassParams, gamma_max
from hankel_lab.schwarz import SchwarzCoeffs, coeffs_from_schur_arrays, random_schur


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def sample_region_params(rng, n):
    out = []
    for _ in range(n):
        a = rng.uniform(1e-3, ALPHA_REGION_MAX - 1e-3)
        out.append(ClassParams(a, rng.uniform(1e-3, 1.0) * gamma_max(a)))
    return out


def sample_params(rng, n, alpha_max=0.9):
    return [ClassParams(rng.uniform(1e-3, alpha_max), rng.uniform(1e-3, 1.0)) for _ in range(n)]


def sample_coeffs(rng, n, boundary=False):
    g = random_schur(rng, n, boundary=boundary)
    return [SchwarzCoeffs(*map(complex, t)) for t in zip(*coeffs_from_schur_arrays(*g))]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
