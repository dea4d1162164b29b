import random

import pytest

from hotgames import GameStore


@pytest.fixture
def store():
    return GameStore()


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
