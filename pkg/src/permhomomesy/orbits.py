"""
Exhaustive orbit decomposition of S_n and the structural checks built on it.

Seeds are taken in lexicographic order and every unvisited permutation
starts a new orbit, so each orbit's seed is also its lexicographically
smallest member.  Visited bookkeeping is a bytearray
indexed by lexicographic rank.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator

from .maps import Orbit, OrbitGenerator, orbit_of
from .perm import DEFAULT_MAX_N, ResourceGuardError, enumerate_symmetric_group, rank, unrank

__all__ = [
    "OrbitDecomposition",
    "ZetaSet",
    "iter_orbits",
    "decompose",
    "zeta",
    "pair_sum_multiplicity",
]


@dataclass(frozen=True)
class OrbitDecomposition:
    n: int
    generator: OrbitGenerator
    orbits: tuple[Orbit, ...]

    def __len__(self) -> int:
        return len(self.orbits)

    def __iter__(self):
        return iter(self.orbits)

    def size_histogram(self) -> dict[int, int]:
        """Orbit size -> number of orbits of that size, sorted by size."""
        return dict(sorted(Counter(len(o) for o in self.orbits).items()))


def iter_orbits(n: int, gen: OrbitGenerator, max_n: int = DEFAULT_MAX_N) -> Iterator[Orbit]:
    """Yield orbits as they are completed, seeds in lexicographic order."""
    gen.check_size(n)
    if n > max_n:
        raise ResourceGuardError(n, max_n)
    visited = bytearray(factorial(n))
    for r, p in enumerate(enumerate_symmetric_group(n, max_n)):
        if visited[r]:
            continue
        orbit = orbit_of(gen, p)
        for q in orbit.members:
            visited[rank(q)] = 1
        yield orbit


def _minimal_seed_orbits(args) -> list[Orbit]:
    # Orbits whose lexicographically smallest member has rank in [lo, hi).
    n, gen, lo, hi = args
    out = []
    for r in range(lo, hi):
        p = unrank(r, n)
        orbit = orbit_of(gen, p)
        if min(orbit.members) == p:
            out.append(orbit)
    return out


def decompose(
    n: int,
    gen: OrbitGenerator,
    max_n: int = DEFAULT_MAX_N,
    workers: int = 1,
) -> OrbitDecomposition:
    """
    Partition S_n into orbits of ``gen``.

    With ``workers > 1`` the rank range is split into chunks; each worker
    keeps the orbits whose minimal member falls in its chunk, which yields
    exactly the single-worker result.
    """
    if workers <= 1:
        return _decompose_cached(n, gen, max_n)
    gen.check_size(n)
    if n > max_n:
        raise ResourceGuardError(n, max_n)
    total = factorial(n)
    chunk = -(-total // workers)
    tasks = [(n, gen, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_minimal_seed_orbits, tasks))
    orbits = [o for part in parts for o in part]
    return OrbitDecomposition(n, gen, tuple(orbits))


@lru_cache(maxsize=32)
def _decompose_cached(n: int, gen: OrbitGenerator, max_n: int) -> OrbitDecomposition:
    return OrbitDecomposition(n, gen, tuple(iter_orbits(n, gen, max_n)))


@dataclass(frozen=True)
class ZetaSet:
    """The (position, value) pairs met along an orbit, with multiplicities."""

    n: int
    counts: Counter

    @property
    def pairs(self) -> set[tuple[int, int]]:
        return set(self.counts)

    def is_full_square(self) -> bool:
        """True iff every pair in [n] x [n] occurs exactly once."""
        return len(self.counts) == self.n * self.n and all(c == 1 for c in self.counts.values())


def zeta(orbit: Orbit) -> ZetaSet:
    counts = Counter()
    for p in orbit.members:
        counts.update(enumerate(p.word, start=1))
    return ZetaSet(orbit.n, counts)


def pair_sum_multiplicity(n: int, k: int) -> int:
    """Number of (i, j) in [n] x [n] with i + j = k."""
    if not 2 <= k <= 2 * n:
        raise ValueError(f"k={k} outside [2, {2 * n}]")
    return min(k - 1, 2 * n - k + 1)
