import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pixtopo import DigitalObject

# Canonical small objects used throughout; values frozen from tests/oracles.py.
DIAMOND = [(1, 0), (0, 1), (2, 1), (1, 2)]
DOMINO = [(0, 0), (1, 0)]
DIAGONAL_PAIR = [(0, 0), (1, 1)]
RING8 = [(x, y) for x in range(3) for y in range(3) if (x, y) != (1, 1)]
SQUARE2 = [(x, y) for x in range(2) for y in range(2)]
SQUARE3 = [(x, y) for x in range(3) for y in range(3)]


@pytest.fixture
def diamond():
    return DigitalObject(DIAMOND)


@pytest.fixture
def domino():
    return DigitalObject(DOMINO)


@pytest.fixture
def diagonal_pair():
    return DigitalObject(DIAGONAL_PAIR)


@pytest.fixture
def ring8():
    return DigitalObject(RING8)


@pytest.fixture
def square2():
    return DigitalObject(SQUARE2)


@pytest.fixture
def square3():
    return DigitalObject(SQUARE3)
