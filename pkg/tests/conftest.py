import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from harness.generators import gen_pd  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def pd_pair(rng):
    """A well-conditioned random 4x4 pair."""
    return gen_pd(4, 1e2, rng).base, gen_pd(4, 1e2, rng).base


@pytest.fixture(params=["jacobi", "lapack"])
def eigen_solver(request, monkeypatch):
    import config
    monkeypatch.setattr(config, "EIGEN_SOLVER", request.param)
    return request.param
