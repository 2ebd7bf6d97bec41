import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from minktrig import build_context

settings.register_profile(
    "ci", max_examples=60, deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile("ci")


@pytest.fixture(scope="session")
def euclid():
    return build_context("builtin:euclidean")


@pytest.fixture(scope="session")
def lp4():
    return build_context("builtin:lp:4")


@pytest.fixture(scope="session")
def mixed4():
    return build_context({"kind": "mixed_lp_lq", "p": 4.0}, normalize_radon=True)


@pytest.fixture(scope="session")
def mixed2():
    return build_context({"kind": "mixed_lp_lq", "p": 2.0}, normalize_radon=True)


@pytest.fixture(scope="session")
def all_planes(euclid, lp4, mixed4):
    return {"euclidean": euclid, "lp4": lp4, "mixed4": mixed4}


def unit_angles(n, seed=0):
    rng = np.random.default_rng(seed)
    return rng.uniform(0.0, 2.0 * np.pi, n)


def random_vectors(n, seed=0, lo=0.25, hi=4.0):
    rng = np.random.default_rng(seed)
    theta = rng.uniform(0.0, 2.0 * np.pi, n)
    r = np.exp(rng.uniform(np.log(lo), np.log(hi), n))
    return r[:, None] * np.stack([np.cos(theta), np.sin(theta)], axis=1)
