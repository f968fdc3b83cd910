import itertools
import random

import pytest

from overlap.family import SetFamily


FAM_A_TEXT = "1 2\n2 3\n3 4\n1 2 3 4\n"


@pytest.fixture
def fam_a():
    from overlap.family import parse_family
    return parse_family(FAM_A_TEXT)


def make_family(*sets, universe=()):
    return SetFamily.from_elements(sets, extra_universe=universe)


def random_family(rng, max_n=40, max_m=60):
    """One random family with mixed densities."""
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_m)
    cap = min(n, rng.choice([2, 3, 5, 8, n]))
    sets = []
    for _ in range(m):
        size = rng.randint(1, cap)
        sets.append(rng.sample(range(n), size))
    return SetFamily.from_elements(sets, extra_universe=range(n))


def exhaustive_families(max_n=4, max_m=3):
    """Every family of up to max_m distinct non-empty sets over <= max_n elements."""
    for n in range(1, max_n + 1):
        subsets = []
        for size in range(1, n + 1):
            subsets.extend(itertools.combinations(range(n), size))
        for m in range(1, max_m + 1):
            for combo in itertools.combinations(subsets, m):
                yield SetFamily.from_elements(combo, extra_universe=range(n))


def seeded_rng(seed=20260826):
    return random.Random(seed)
