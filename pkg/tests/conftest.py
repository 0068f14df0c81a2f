import numpy as np
import pytest

from choidetect import MapParams

# The four maps exercised against the 2x4 family.
FOUR_MAPS = (
    MapParams(2, 1, 0, 0),
    MapParams(2, 0, 1, 0),
    MapParams(2, 0, 0, 1),
    MapParams(2, 1, 1, 1),
)

# The five maps with stated detection ranges on the 4x4 family.
RANGE_MAPS = (
    MapParams(2, 1, 0, 0),
    MapParams(2, 1.5, 0, 0),
    MapParams(2, 0, 1, 0),
    MapParams(2, 0, 0, 1),
    MapParams(2, 0.1, 0, 1),
)


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def random_hermitian(rng, dim=4, scale=1.0):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return scale * (g + g.conj().T) / 2.0
