"""Shared fixtures: the polynomial corpus and a reconstruction cache.

The corpus is the six fixed polynomials plus ten seeded-random ones of
degree <= 12 with constant term 1.  Reconstructions are cached for the
whole session since several suites query the same (P, X) pairs.
"""

import random

import pytest

from parityset import F2Poly, parse_poly, reconstruct

FIXED_POLYS = [
    "1+z",
    "1+z+z^3",
    "1+z^2+z^3",
    "1+z+z^3+z^4+z^5",
    "1+z^7",
    "1+z^3",  # (1+z)(1+z+z^2)
]

RNG_SEED = 20260825


def random_corpus(count=10, max_degree=12, seed=RNG_SEED):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        d = rng.randint(1, max_degree)
        bits = 1 | (1 << d)
        for i in range(1, d):
            if rng.random() < 0.5:
                bits |= 1 << i
        out.append(F2Poly(bits))
    return out


@pytest.fixture(scope="session")
def corpus():
    return [parse_poly(t) for t in FIXED_POLYS] + random_corpus()


@pytest.fixture(scope="session")
def cached_set():
    cache = {}

    def get(p: F2Poly, x: int):
        key = (p.bits, x)
        if key not in cache:
            cache[key] = reconstruct(p, x)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def cubic():
    return parse_poly("1+z+z^3")


@pytest.fixture(scope="session")
def quintic():
    return parse_poly("1+z+z^3+z^4+z^5")
