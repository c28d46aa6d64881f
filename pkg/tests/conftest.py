import json
import random
from itertools import combinations_with_replacement, product

import pytest

from partition_majorization.core import make_instance
from partition_majorization.oracle import random_instance


def partitions_of(length, values):
    """Every nonincreasing tuple of the given length over ``values``."""
    return list(combinations_with_replacement(sorted(values, reverse=True), length))


def small_instances(values=range(4)):
    """All instances with m, n in {1, 2}, s, k in {0, 1, 2}, m + s = n + k,
    entries from ``values`` and c, d sharing no value."""
    for m, n, s in product((1, 2), (1, 2), (0, 1, 2)):
        k = m + s - n
        if not 0 <= k <= 2:
            continue
        for d, c in product(partitions_of(m, values), partitions_of(n, values)):
            if set(c) & set(d):
                continue
            for a, b in product(partitions_of(s, values), partitions_of(k, values)):
                yield make_instance(a, b, c, d)


def random_population(count, seed=2024, max_len=5, min_val=-3, max_val=6):
    rng = random.Random(seed)
    return [random_instance(rng, max_len, min_val, max_val) for _ in range(count)]


@pytest.fixture
def i1():
    return make_instance(a=[1], b=[2], c=[2], d=[3])


@pytest.fixture
def i2():
    return make_instance(a=[0], b=[0], c=[2], d=[3])


@pytest.fixture
def i3():
    return make_instance(a=[0], b=[5], c=[2], d=[1])


@pytest.fixture
def write_instance(tmp_path):
    """Write an instance document and return its path as a string."""

    def write(a, b, c, d, name="instance.json"):
        path = tmp_path / name
        path.write_text(json.dumps({"a": a, "b": b, "c": c, "d": d}))
        return str(path)

    return write


@pytest.fixture(scope="session")
def exhaustive_instances():
    return list(small_instances())


@pytest.fixture(scope="session")
def population():
    """Random instances with lengths up to 5 and values in [-3, 6]."""
    return random_population(10_000)
