"""
Orbit-generating maps on S_n.

Four of the five families are bijections iterated until they cycle back:
rotation, right multiplication by a fixed n-cycle, pair swapping and parity
rotation.  Valley hopping is a group action by commuting involutions, so its
orbits are produced by toggling every subset of the togglable entries.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .perm import (
    Permutation,
    PermutationError,
    compose,
    is_n_cycle,
)

__all__ = [
    "MapFamily",
    "OrbitGenerator",
    "Orbit",
    "ROTATION",
    "PAIR_SWAP",
    "PARITY_ROTATION",
    "VALLEY_HOPPING",
    "right_multiply",
    "rotate",
    "rotate_inverse",
    "pair_swap",
    "parity_rotate",
    "parity_rotate_inverse",
    "peaks",
    "valleys",
    "togglable_set",
    "foata_strehl_toggle",
    "hop",
    "orbit_of",
]


class MapFamily(enum.Enum):
    ROTATION = "rot"
    COXETER = "coxeter"
    PAIR_SWAP = "ps"
    PARITY_ROTATION = "parrot"
    VALLEY_HOPPING = "vh"


def rotate(p: Permutation) -> Permutation:
    """``p(1) p(2) ... p(n) -> p(2) ... p(n) p(1)``."""
    w = p.word
    return Permutation._trusted(w[1:] + w[:1])


def rotate_inverse(p: Permutation) -> Permutation:
    w = p.word
    return Permutation._trusted(w[-1:] + w[:-1])


def pair_swap(p: Permutation) -> Permutation:
    """Swap positions (1,2), (3,4), ...; the last entry stays put when n is odd."""
    w = list(p.word)
    for i in range(0, len(w) - 1, 2):
        w[i], w[i + 1] = w[i + 1], w[i]
    return Permutation._trusted(tuple(w))


def _shift(seq: tuple[int, ...], step: int) -> tuple[int, ...]:
    if not seq:
        return seq
    k = step % len(seq)
    return seq[k:] + seq[:k]


def _parity_shift(p: Permutation, step: int) -> Permutation:
    w = p.word
    odd = _shift(w[0::2], step)
    even = _shift(w[1::2], step)
    out = [0] * len(w)
    out[0::2] = odd
    out[1::2] = even
    return Permutation._trusted(tuple(out))


def parity_rotate(p: Permutation) -> Permutation:
    """
    Rotate the odd-position entries and the even-position entries separately.

    Even n gives ``p(3) p(4) ... p(n) p(1) p(2)``; odd n gives
    ``p(3) p(4) ... p(n) p(2) p(1)``.
    """
    return _parity_shift(p, 1)


def parity_rotate_inverse(p: Permutation) -> Permutation:
    return _parity_shift(p, -1)


# Valley hopping.  Positions 0 and n+1 hold conceptual +infinity, so p(1) and
# p(n) can be valleys but never peaks.

def _above(w: tuple[int, ...], j: int, x: int) -> bool:
    # True when the entry at 0-based index j exceeds x; out of range is +inf.
    return j < 0 or j >= len(w) or w[j] > x


def peaks(p: Permutation) -> set[int]:
    """Values ``p(i)`` with ``p(i-1) < p(i) > p(i+1)``."""
    w = p.word
    return {
        w[j] for j in range(len(w))
        if not _above(w, j - 1, w[j]) and not _above(w, j + 1, w[j])
    }


def valleys(p: Permutation) -> set[int]:
    w = p.word
    return {w[j] for j in range(len(w)) if _above(w, j - 1, w[j]) and _above(w, j + 1, w[j])}


def togglable_set(p: Permutation) -> set[int]:
    """The double ascents and double descents of ``p``, as values."""
    w = p.word
    return {w[j] for j in range(len(w)) if _above(w, j - 1, w[j]) != _above(w, j + 1, w[j])}


def foata_strehl_toggle(p: Permutation, x: int) -> Permutation:
    """
    Hop the value ``x`` across its neighbouring valley.

    Write ``p = w1 w2 x w4 w5`` with ``w2`` and ``w4`` the maximal runs of
    letters smaller than ``x`` directly left and right of ``x``; the result is
    ``w1 w4 x w2 w5``.  Peaks and valleys are returned unchanged.

    >>> str(foata_strehl_toggle(Permutation.parse("246135"), 5))
    '246513'
    """
    n = p.n
    if not 1 <= x <= n:
        raise PermutationError(f"toggle value {x} outside [1, {n}]")
    w = p.word
    j = w.index(x)
    left_big = _above(w, j - 1, x)
    right_big = _above(w, j + 1, x)
    if left_big == right_big:
        return p
    lo = j
    while lo > 0 and w[lo - 1] < x:
        lo -= 1
    hi = j + 1
    while hi < n and w[hi] < x:
        hi += 1
    w2 = w[lo:j]
    w4 = w[j + 1:hi]
    return Permutation._trusted(w[:lo] + w4 + (x,) + w2 + w[hi:])


def hop(p: Permutation, values) -> Permutation:
    """Apply :func:`foata_strehl_toggle` for each value in ``values``."""
    for x in values:
        p = foata_strehl_toggle(p, x)
    return p


@dataclass(frozen=True)
class OrbitGenerator:
    """
    One of the five map families; ``cycle`` is set only for ``COXETER``.

    Generators are hashable values and print as their CLI spec string
    (``rot``, ``coxeter:2341``, ``ps``, ``parrot``, ``vh``).
    """

    family: MapFamily
    cycle: Permutation | None = None

    def __post_init__(self):
        if self.family is MapFamily.COXETER:
            if self.cycle is None or not is_n_cycle(self.cycle):
                raise PermutationError(f"right multiplication needs an n-cycle, got {self.cycle}")
        elif self.cycle is not None:
            raise PermutationError(f"{self.family.value} takes no cycle")

    @classmethod
    def parse(cls, spec: str) -> OrbitGenerator:
        spec = spec.strip()
        if spec.startswith("coxeter:"):
            return right_multiply(Permutation.parse(spec.split(":", 1)[1]))
        try:
            family = MapFamily(spec)
        except ValueError:
            raise PermutationError(
                f"unknown generator {spec!r}; expected rot, coxeter:<cycle>, ps, parrot or vh"
            ) from None
        if family is MapFamily.COXETER:
            raise PermutationError("coxeter generator needs a cycle, e.g. coxeter:2341")
        return cls(family)

    @property
    def name(self) -> str:
        if self.family is MapFamily.COXETER:
            return f"coxeter:{self.cycle}"
        return self.family.value

    def __str__(self) -> str:
        return self.name

    @property
    def is_stepwise(self) -> bool:
        return self.family is not MapFamily.VALLEY_HOPPING

    def check_size(self, n: int) -> None:
        if self.cycle is not None and self.cycle.n != n:
            raise PermutationError(f"generator {self.name} acts on S_{self.cycle.n}, not S_{n}")

    def step_function(self) -> Callable[[Permutation], Permutation]:
        """The bijection iterated by this generator; valley hopping has none."""
        fam = self.family
        if fam is MapFamily.ROTATION:
            return rotate
        if fam is MapFamily.COXETER:
            c = self.cycle
            return lambda p: compose(p, c)
        if fam is MapFamily.PAIR_SWAP:
            return pair_swap
        if fam is MapFamily.PARITY_ROTATION:
            return parity_rotate
        raise TypeError("valley hopping is not a single bijection; use orbit_of")


ROTATION = OrbitGenerator(MapFamily.ROTATION)
PAIR_SWAP = OrbitGenerator(MapFamily.PAIR_SWAP)
PARITY_ROTATION = OrbitGenerator(MapFamily.PARITY_ROTATION)
VALLEY_HOPPING = OrbitGenerator(MapFamily.VALLEY_HOPPING)


def right_multiply(c: Permutation) -> OrbitGenerator:
    """Generator for ``p -> p * c`` with ``c`` an n-cycle."""
    return OrbitGenerator(MapFamily.COXETER, c)


@dataclass(frozen=True)
class Orbit:
    """
    Orbit members in a fixed order.

    Stepwise orbits run in application order from ``seed``; valley-hopping
    orbits are sorted lexicographically.
    """

    members: tuple[Permutation, ...]
    generator: OrbitGenerator
    seed: Permutation

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, p) -> bool:
        return p in self.members

    @property
    def n(self) -> int:
        return self.seed.n


def orbit_of(gen: OrbitGenerator, p: Permutation) -> Orbit:
    gen.check_size(p.n)
    if gen.is_stepwise:
        step = gen.step_function()
        members = [p]
        q = step(p)
        while q != p:
            members.append(q)
            q = step(q)
        return Orbit(tuple(members), gen, p)
    togglable = sorted(togglable_set(p))
    members = {
        hop(p, subset)
        for k in range(len(togglable) + 1)
        for subset in combinations(togglable, k)
    }
    return Orbit(tuple(sorted(members)), gen, p)
