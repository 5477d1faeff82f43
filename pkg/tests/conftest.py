import random
from itertools import combinations

import pytest

from sigcode.core import BinaryCode


def random_binary_code(rng: random.Random, n: int, size: int) -> BinaryCode:
    pool = list(range(2 ** n))
    rng.shuffle(pool)
    words = [tuple((v >> (n - 1 - i)) & 1 for i in range(n))
             for v in pool[:size]]
    return BinaryCode(n, words)


def random_constant_weight_code(rng: random.Random, n: int, size: int,
                                w: int) -> BinaryCode:
    supports = list(combinations(range(1, n + 1), w))
    rng.shuffle(supports)
    words = []
    for s in supports[:size]:
        word = [0] * n
        for i in s:
            word[i - 1] = 1
        words.append(tuple(word))
    return BinaryCode(n, words)


@pytest.fixture
def rng():
    return random.Random(20240811)
