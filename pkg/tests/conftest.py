import numpy as np
import pytest

from equilines import search_fiducial
from equilines.seidel import lines_from_seidel


@pytest.fixture(scope="session")
def sic_results():
    """Certified SIC search results for the small dimensions, shared."""
    out = {}
    for d in range(2, 7):
        res = search_fiducial(d, seed=7, restarts=50)
        assert res.certificate.passed, f"search failed to converge in d={d}"
        out[d] = res
    return out


@pytest.fixture(scope="session")
def client():
    from fastapi.testclient import TestClient

    from equilines.service import create_app

    return TestClient(create_app())


def random_seidel(n, rng):
    s = np.triu(rng.integers(0, 2, size=(n, n)) * 2 - 1, k=1)
    s = s + s.T
    return s


def random_equiangular_lines(n, rng):
    """A random full-rank equiangular set, via a random sign pattern."""
    s = random_seidel(n, rng)
    lam_min = np.linalg.eigvalsh(s.astype(float)).min()
    alpha = 0.9 / abs(lam_min)
    return lines_from_seidel(s, alpha), s, alpha
