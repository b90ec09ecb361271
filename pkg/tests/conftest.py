import random
from fractions import Fraction

import pytest

from frvkit import space, variable


@pytest.fixture
def three_point():
    """Recurring worked example: weights (1/6, 1/3, 1/2), X folds the first
    two outcomes together, Y folds the last two."""
    sp = space({"w1": Fraction(1, 6), "w2": Fraction(1, 3), "w3": Fraction(1, 2)})
    x = variable(sp, {"w1": "a", "w2": "a", "w3": "b"})
    y = variable(sp, {"w1": "u", "w2": "v", "w3": "v"})
    return sp, x, y


@pytest.fixture
def coin_space():
    return space({"w1": Fraction(1, 2), "w2": Fraction(1, 2)})


@pytest.fixture
def coin(coin_space):
    return variable(coin_space, {"w1": "h", "w2": "t"})


@pytest.fixture
def four_uniform():
    """Two independent fair coins on a four-point uniform space."""
    q = Fraction(1, 4)
    sp = space({"o1": q, "o2": q, "o3": q, "o4": q})
    x = variable(sp, {"o1": "h", "o2": "h", "o3": "t", "o4": "t"})
    y = variable(sp, {"o1": "h", "o2": "t", "o3": "h", "o4": "t"})
    return sp, x, y


@pytest.fixture
def rng():
    return random.Random(1234)
