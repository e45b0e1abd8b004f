"""
Permutations of ``[n] = {1, ..., n}`` stored in one-line notation.

Positions and values are 1-indexed everywhere in the public interface:
``p(i)`` is the entry in position ``i``.  Composition follows
``compose(a, b)(i) == a(b(i))``, so right multiplication ``p * c`` is
``compose(p, c)``.

>>> p = Permutation.parse("231")
>>> str(compose(p, p))
'312'
>>> str(inverse(p))
'312'
>>> long_cycle(4).cycle_string()
'(1 2 3 4)'
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Iterable, Iterator, Sequence

__all__ = [
    "DEFAULT_MAX_N",
    "PermutationError",
    "ResourceGuardError",
    "Permutation",
    "identity",
    "compose",
    "inverse",
    "reverse",
    "simple_transposition",
    "long_cycle",
    "cycle_from_toggle_order",
    "is_n_cycle",
    "n_cycles",
    "enumerate_symmetric_group",
    "rank",
    "unrank",
]

# Exhaustive sweeps over S_n are refused above this size unless overridden.
DEFAULT_MAX_N = 12


class PermutationError(ValueError):
    """Malformed permutation data or incompatible operands."""


class ResourceGuardError(RuntimeError):
    """An exhaustive computation was requested above the configured size limit."""

    def __init__(self, n: int, max_n: int):
        super().__init__(
            f"n={n} exceeds the resource guard max_n={max_n}; "
            f"S_{n} has {factorial(n)} elements. Raise the guard explicitly "
            f"if the machine can afford it."
        )
        self.n = n
        self.max_n = max_n


@dataclass(frozen=True, slots=True, order=True)
class Permutation:
    """A bijection of [n] in one-line notation, ``word[i-1] == p(i)``."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if not word:
            raise PermutationError("a permutation needs n >= 1")
        if sorted(word) != list(range(1, len(word) + 1)):
            raise PermutationError(f"{word} is not a permutation of [{len(word)}]")

    @classmethod
    def _trusted(cls, word: tuple[int, ...]) -> Permutation:
        # Internal fast path for words already known to be bijections.
        p = object.__new__(cls)
        object.__setattr__(p, "word", word)
        return p

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """
        Parse one-line notation: ``"3176524"`` or ``"10,3,1,2,..."``.

        Whitespace-separated words are accepted as well.
        """
        text = text.strip()
        if "," in text:
            parts = [t for t in text.split(",")]
        elif " " in text:
            parts = text.split()
        else:
            parts = list(text)
        try:
            word = tuple(int(t) for t in parts)
        except ValueError:
            raise PermutationError(f"cannot parse permutation {text!r}") from None
        return cls(word)

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.word):
            raise PermutationError(f"position {i} outside [1, {len(self.word)}]")
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __str__(self) -> str:
        if len(self.word) <= 9:
            return "".join(map(str, self.word))
        return ",".join(map(str, self.word))

    def __repr__(self) -> str:
        return f"Permutation('{self}')"

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest element, fixed points included."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = []
            x = start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.word[x - 1]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())


def identity(n: int) -> Permutation:
    return Permutation._trusted(tuple(range(1, n + 1)))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return ``a * b``, the permutation ``i -> a(b(i))``."""
    if a.n != b.n:
        raise PermutationError(f"cannot compose permutations of sizes {a.n} and {b.n}")
    aw = a.word
    return Permutation._trusted(tuple(aw[j - 1] for j in b.word))


def inverse(p: Permutation) -> Permutation:
    out = [0] * p.n
    for i, v in enumerate(p.word, start=1):
        out[v - 1] = i
    return Permutation._trusted(tuple(out))


def reverse(p: Permutation) -> Permutation:
    """Word reversal ``p(n) ... p(1)``."""
    return Permutation._trusted(p.word[::-1])


def simple_transposition(p: Permutation, i: int) -> Permutation:
    """Swap the entries in positions ``i`` and ``i+1``."""
    if not 1 <= i <= p.n - 1:
        raise PermutationError(f"simple transposition index {i} outside [1, {p.n - 1}]")
    w = list(p.word)
    w[i - 1], w[i] = w[i], w[i - 1]
    return Permutation._trusted(tuple(w))


def long_cycle(n: int) -> Permutation:
    """The cycle ``(1 2 ... n)``, one-line word ``23...n1``."""
    if n < 1:
        raise PermutationError("n must be >= 1")
    return Permutation._trusted(tuple(range(2, n + 1)) + (1,))


def cycle_from_toggle_order(order: Sequence[int], n: int | None = None) -> Permutation:
    """
    Apply ``tau_{order[0]}``, then ``tau_{order[1]}``, ... to the identity.

    ``order`` must list each of ``1, ..., n-1`` exactly once; the result is
    always an n-cycle.  ``n`` defaults to ``len(order) + 1`` and only needs
    to be given for the empty order (n = 1).

    Orders differing by swaps of commuting toggles give the same product, so
    the ``(n-1)!`` orders reach only ``2**(n-2)`` distinct cycles for n >= 2.
    """
    order = tuple(order)
    if n is None:
        n = len(order) + 1
    if sorted(order) != list(range(1, n)):
        raise PermutationError(f"toggle order {order} is not a bijection of [{n - 1}]")
    p = identity(n)
    for i in order:
        p = simple_transposition(p, i)
    return p


def is_n_cycle(p: Permutation) -> bool:
    return len(p.cycles()) == 1


def n_cycles(n: int) -> list[Permutation]:
    """All ``(n-1)!`` n-cycles of S_n in lexicographic order of their one-line words."""
    if n == 1:
        return [identity(1)]
    out = []
    # (1 a_2 ... a_n) for each arrangement of 2..n
    for rest in permutations(range(2, n + 1)):
        cyc = (1,) + rest
        w = [0] * n
        for k in range(n):
            w[cyc[k] - 1] = cyc[(k + 1) % n]
        out.append(Permutation._trusted(tuple(w)))
    out.sort()
    return out


def enumerate_symmetric_group(n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[Permutation]:
    """Yield every element of S_n once, in lexicographic order."""
    if n < 1:
        raise PermutationError("n must be >= 1")
    if n > max_n:
        raise ResourceGuardError(n, max_n)
    for w in permutations(range(1, n + 1)):
        yield Permutation._trusted(w)


def rank(p: Permutation | Iterable[int]) -> int:
    """Lexicographic rank in S_n, from 0 to n!-1 (Lehmer code)."""
    w = p.word if isinstance(p, Permutation) else tuple(p)
    n = len(w)
    r = 0
    for i in range(n):
        smaller = 0
        wi = w[i]
        for j in range(i + 1, n):
            if w[j] < wi:
                smaller += 1
        r = r * (n - i) + smaller
    return r


def unrank(r: int, n: int) -> Permutation:
    """Inverse of :func:`rank`."""
    if not 0 <= r < factorial(n):
        raise PermutationError(f"rank {r} outside [0, {n}!)")
    digits = []
    for base in range(1, n + 1):
        r, d = divmod(r, base)
        digits.append(d)
    digits.reverse()
    pool = list(range(1, n + 1))
    return Permutation._trusted(tuple(pool.pop(d) for d in digits))
