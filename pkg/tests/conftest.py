import random

import pytest

from foliar import parse_pd

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIG8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
HOPF = "X[1,3,2,4] X[3,1,4,2]"
KINK = "X[1,1,2,2]"

# trefoil joined to its mirror image along one strand
SQUARE_KNOT = (
    "X[7,4,2,5] X[3,6,4,1] X[5,2,6,3] "
    "X[10,8,11,7] X[12,10,1,9] X[8,12,9,11]"
)

# three positive trefoils joined in a row; the middle one is cut by the
# joining strand into a one-crossing and a two-crossing region that sit
# between the same pair of faces, so edge merging fires on this input
GRANNY3 = (
    "X[7,4,2,5] X[3,6,4,1] X[5,2,6,3] "
    "X[1,10,13,11] X[9,12,10,7] X[11,8,12,9] "
    "X[8,16,14,17] X[15,18,16,13] X[17,14,18,15]"
)

# two opposite twist columns plus a curl on each closure arc; the curls
# break the closure bigons so the columns stay separate regions that
# cancel exactly during edge merging
CANCELLING_COLUMNS = (
    "X[1,2,3,4] X[2,5,6,3] X[9,4,7,8] X[8,7,6,11] "
    "X[1,10,10,9] X[5,12,12,11]"
)


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL)


@pytest.fixture
def fig8():
    return parse_pd(FIG8)


@pytest.fixture
def hopf():
    return parse_pd(HOPF)


@pytest.fixture
def kink():
    return parse_pd(KINK)


def random_tree_text(rng, max_nodes=6, lo=2, hi=4, signed=True):
    """Weighted planar tree with 1..max_nodes vertices as text."""
    n = rng.randint(1, max_nodes)

    def weight():
        w = rng.randint(lo, hi)
        return -w if signed and rng.random() < 0.5 else w

    def grow(budget):
        kids = []
        while budget[0] > 0 and rng.random() < 0.55:
            budget[0] -= 1
            kids.append(grow(budget))
        inner = "".join(" " + k for k in kids)
        return f"({weight()}{inner})"

    return grow([n - 1])


def random_braid_text(rng, max_syllables=4, exps=(-3, -2, 2, 3)):
    n = rng.randint(1, max_syllables)
    parts = []
    for _ in range(n):
        g = rng.choice([1, 2])
        e = rng.choice(exps)
        parts.append(f"s{g}^{e}")
    return " ".join(parts)


def seeded(seed):
    return random.Random(seed)
