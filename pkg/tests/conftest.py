import numpy as np
import pytest

from gamma_opkit.linalg import Tolerances


@pytest.fixture
def tol():
    return Tolerances()


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_contraction(rng, n, norm_cap=0.9):
    """Random strict contraction with ||P|| <= norm_cap."""
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    s = np.linalg.norm(m, 2)
    return m * (norm_cap * rng.uniform(0.3, 1.0) / s)


def random_psd(rng, n, scale=1.0):
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return scale * (m @ m.conj().T) / n
