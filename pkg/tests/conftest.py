import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))  # makes `import oracles` work

from dialgebra import (RATIONAL, HomDialgebra, LinearMap, MultTable,
                       inverse_map)

DATA = Path(__file__).parent / "data"


def zero_algebra(n, backend=RATIONAL):
    """Both products zero, identity twist."""
    z = MultTable.zero(n, backend)
    return HomDialgebra("zero%d" % n, z, z, LinearMap.identity(n, backend))


def trunc_poly(n, backend=RATIONAL):
    """Nilpotent truncation of polynomial multiplication: e_i e_j = e_{i+j}
    when i+j <= n, else 0.  Associative and commutative; both products
    equal; identity twist."""
    entries = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i + j <= n:
                entries[(i, j)] = {i + j: 1}
    t = MultTable.from_entries(n, entries, backend)
    return HomDialgebra("poly%d" % n, t, t, LinearMap.identity(n, backend))


def rand_invertible(rng, n, backend=RATIONAL, lo=-3, hi=3):
    while True:
        M = LinearMap(n, [[rng.randint(lo, hi) for _ in range(n)]
                          for _ in range(n)], backend)
        if inverse_map(M) is not None:
            return M


def rand_map(rng, n, backend=RATIONAL, lo=-3, hi=3):
    return LinearMap(n, [[rng.randint(lo, hi) for _ in range(n)]
                         for _ in range(n)], backend)


def seeded(seed):
    return random.Random(seed)
