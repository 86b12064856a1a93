import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from torigid import build_atlas, cone_from_generators, hirzebruch_fan, projective_fan


@pytest.fixture(scope="session")
def quadrant():
    return cone_from_generators([(1, 0), (0, 1)], 2)


@pytest.fixture(scope="session")
def p2_fan():
    return projective_fan(2)


@pytest.fixture(scope="session")
def p2_atlas(p2_fan):
    return build_atlas(p2_fan)


@pytest.fixture(scope="session")
def h2_fan():
    return hirzebruch_fan(2)
