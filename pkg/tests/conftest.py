import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


def random_complex(rng, shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)
