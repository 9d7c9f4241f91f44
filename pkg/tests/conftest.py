import random

import pytest

from coxbraid.coxeter import CoxeterSystem


@pytest.fixture(scope="session")
def a2():
    return CoxeterSystem(["s", "t"], [[1, 3], [3, 1]])


@pytest.fixture(scope="session")
def b2():
    return CoxeterSystem(["s", "t"], [[1, 4], [4, 1]])


@pytest.fixture(scope="session")
def i2inf():
    return CoxeterSystem(["s", "t"], [[1, 0], [0, 1]])


@pytest.fixture(scope="session")
def a3():
    return CoxeterSystem(["s", "t", "u"], [[1, 3, 2], [3, 1, 3], [2, 3, 1]])


@pytest.fixture(scope="session")
def b3():
    return CoxeterSystem(["s", "t", "u"], [[1, 4, 2], [4, 1, 3], [2, 3, 1]])


@pytest.fixture(scope="session")
def affine_a2():
    return CoxeterSystem(["s", "t", "u"], [[1, 3, 3], [3, 1, 3], [3, 3, 1]])


@pytest.fixture(scope="session")
def a4():
    return CoxeterSystem(
        ["s", "t", "u", "v"],
        [[1, 3, 2, 2], [3, 1, 3, 2], [2, 3, 1, 3], [2, 2, 3, 1]],
    )


def random_signed_word(system, rng, max_len, positive=False):
    n = rng.randint(0, max_len)
    word = []
    for _ in range(n):
        s = rng.choice(system.generators)
        e = 1 if positive else rng.choice((1, -1))
        word.append((s, e))
    return tuple(word)


@pytest.fixture
def rng():
    return random.Random(20240817)
