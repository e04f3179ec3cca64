import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest

from ptsep.families import FamilySpec, build_family


@pytest.fixture(scope="session")
def quadratic7():
    return build_family(FamilySpec("quadratic", 7))


@pytest.fixture(scope="session")
def quadratic5():
    return build_family(FamilySpec("quadratic", 5))


@pytest.fixture(scope="session")
def exponential0():
    return build_family(FamilySpec("exponential", 0))


@pytest.fixture(scope="session")
def exponential1():
    return build_family(FamilySpec("exponential", 1))
