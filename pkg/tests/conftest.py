import random
from functools import lru_cache

import pytest

from reflarr import catalog
from reflarr.arrangement import Arrangement, compute_flat_table, arrangement_rank


# every (arrangement, flat table) handed out by the helpers below
CONSTRUCTED = {}


@lru_cache(maxsize=None)
def built(spec: str):
    """(arrangement, flat table) for a catalog spec string, memoized across tests."""
    arr = catalog.build(spec)
    CONSTRUCTED[spec] = arr, compute_flat_table(arr)
    return CONSTRUCTED[spec]


@lru_cache(maxsize=None)
def with_flats(key, normals, order=1):
    arr = Arrangement.from_normals([list(v) for v in normals], order=order)
    CONSTRUCTED[key] = arr, compute_flat_table(arr)
    return CONSTRUCTED[key]


GENERIC3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def generic3():
    return with_flats("generic3", GENERIC3)


def pencil(n):
    """n lines through the origin of C^2 with rational normals (1, k)."""
    normals = tuple((1, k) for k in range(n - 1)) + ((0, 1),)
    return with_flats(("pencil", n), normals)


_SMALL = [(a, b, c) for a in (-1, 0, 1) for b in (-1, 0, 1) for c in (-1, 0, 1)
          if (a, b, c) != (0, 0, 0) and next(x for x in (a, b, c) if x) > 0]


def random_rank3(seed: int, count: int = 50, max_n: int = 8):
    """Pseudo-random rank-3 integer arrangements with at most ``max_n`` planes.

    Normals come from the 13 projective points of {-1,0,1}^3 (plus a few with a 2),
    so multiple points of high multiplicity show up often.
    """
    rng = random.Random(seed)
    pool = _SMALL + [(1, 2, 0), (2, 1, 1), (0, 1, 2), (1, 1, 2), (2, 0, 1)]
    out = []
    while len(out) < count:
        n = rng.randint(4, max_n)
        normals = rng.sample(pool, n)
        arr = Arrangement.from_normals(normals)
        if arrangement_rank(arr) != 3:
            continue
        out.append(arr)
    return out


@pytest.fixture
def rng():
    return random.Random(20141023)


def pytest_terminal_summary(terminalreporter, config):
    lines = getattr(config, "_acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
