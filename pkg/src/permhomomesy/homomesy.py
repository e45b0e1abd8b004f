"""
Exact orbit averages and homomesy verdicts.

Averages are :class:`fractions.Fraction` values and homomesy is exact
equality of every orbit average.  A failed check carries the first two orbits
(in canonical seed order) whose averages differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .arith import format_rational
from .maps import Orbit, OrbitGenerator
from .orbits import OrbitDecomposition, decompose
from .perm import DEFAULT_MAX_N, Permutation, ResourceGuardError, enumerate_symmetric_group
from .stats import StatId, Word, get_statistic

__all__ = [
    "OrbitSummary",
    "HomomesyVerdict",
    "orbit_average",
    "check_homomesy",
    "check_linear_combination",
    "global_average",
    "verdict_for_function",
    "all_averages",
]


@dataclass(frozen=True)
class OrbitSummary:
    seed: Permutation
    size: int
    average: Fraction

    def to_record(self) -> dict:
        return {"seed": str(self.seed), "size": self.size, "average": format_rational(self.average)}

    @classmethod
    def from_record(cls, rec: dict) -> OrbitSummary:
        return cls(Permutation.parse(rec["seed"]), rec["size"], Fraction(rec["average"]))


@dataclass(frozen=True)
class HomomesyVerdict:
    """
    Outcome of a homomesy check.

    ``constant`` is set when every orbit average agrees; otherwise
    ``witnesses`` holds two orbits with different averages.
    """

    n: int
    generator: str
    statistic: StatId
    orbit_count: int
    constant: Fraction | None = None
    witnesses: tuple[OrbitSummary, OrbitSummary] | None = None

    def __post_init__(self):
        if (self.constant is None) == (self.witnesses is None):
            raise ValueError("a verdict has either a constant or a pair of witnesses")
        if self.witnesses is not None and self.witnesses[0].average == self.witnesses[1].average:
            raise ValueError("witness orbits must have different averages")

    @property
    def is_homomesic(self) -> bool:
        return self.constant is not None

    @property
    def outcome(self) -> str:
        return "homomesic" if self.is_homomesic else "not_homomesic"

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "generator": self.generator,
            "statistic": self.statistic,
            "outcome": self.outcome,
            "constant": None if self.constant is None else format_rational(self.constant),
            "witnesses": None if self.witnesses is None else [w.to_record() for w in self.witnesses],
            "orbit_count": self.orbit_count,
        }

    @classmethod
    def from_record(cls, rec: dict) -> HomomesyVerdict:
        witnesses = rec.get("witnesses")
        return cls(
            n=rec["n"],
            generator=rec["generator"],
            statistic=rec["statistic"],
            orbit_count=rec["orbit_count"],
            constant=None if rec.get("constant") is None else Fraction(rec["constant"]),
            witnesses=None if witnesses is None else tuple(OrbitSummary.from_record(w) for w in witnesses),
        )

    def __str__(self) -> str:
        head = f"n={self.n} gen={self.generator} stat={self.statistic}"
        if self.is_homomesic:
            return f"{head}: homomesic, constant {format_rational(self.constant)}"
        a, b = self.witnesses
        return (
            f"{head}: not homomesic, orbit of {a.seed} averages {format_rational(a.average)}"
            f" but orbit of {b.seed} averages {format_rational(b.average)}"
        )


def _average(func: Callable[[Word], int | Fraction], orbit: Orbit) -> Fraction:
    total = sum(func(p.word) for p in orbit.members)
    return Fraction(total, 1) / len(orbit.members)


def orbit_average(stat_id: StatId, orbit: Orbit) -> Fraction:
    return _average(get_statistic(stat_id).func, orbit)


def verdict_for_function(
    decomposition: OrbitDecomposition,
    func: Callable[[Word], int | Fraction],
    label: StatId,
) -> HomomesyVerdict:
    """Homomesy verdict for an arbitrary word function over a decomposition."""
    first: OrbitSummary | None = None
    for orbit in decomposition.orbits:
        avg = _average(func, orbit)
        if first is None:
            first = OrbitSummary(orbit.seed, len(orbit), avg)
        elif avg != first.average:
            other = OrbitSummary(orbit.seed, len(orbit), avg)
            return HomomesyVerdict(
                decomposition.n, decomposition.generator.name, label,
                len(decomposition.orbits), witnesses=(first, other),
            )
    return HomomesyVerdict(
        decomposition.n, decomposition.generator.name, label,
        len(decomposition.orbits), constant=first.average,
    )


def check_homomesy(
    n: int,
    gen: OrbitGenerator,
    stat_id: StatId,
    max_n: int = DEFAULT_MAX_N,
) -> HomomesyVerdict:
    stat = get_statistic(stat_id)
    return verdict_for_function(decompose(n, gen, max_n), stat.func, stat.id)


def check_linear_combination(
    terms: Sequence[tuple[StatId, Fraction | int]],
    n: int,
    gen: OrbitGenerator,
    offset: Fraction | int = 0,
    max_n: int = DEFAULT_MAX_N,
) -> HomomesyVerdict:
    """
    Verdict for ``offset + sum(weight * stat)``.

    The statistic is labelled like ``"1*155+1*703+1*22"`` in the verdict.
    """
    stats = [(get_statistic(sid), Fraction(wt)) for sid, wt in terms]
    offset = Fraction(offset)

    def combo(w: Word) -> Fraction:
        return offset + sum(wt * st.func(w) for st, wt in stats)

    label = "+".join(f"{format_rational(wt)}*{st.id}" for st, wt in stats)
    if offset:
        label += f"{'+' if offset > 0 else ''}{format_rational(offset)}"
    return verdict_for_function(decompose(n, gen, max_n), combo, label)


def global_average(n: int, stat_id: StatId, max_n: int = DEFAULT_MAX_N) -> Fraction:
    if n > max_n:
        raise ResourceGuardError(n, max_n)
    func = get_statistic(stat_id).func
    total = 0
    count = 0
    for p in enumerate_symmetric_group(n, max_n):
        total += func(p.word)
        count += 1
    return Fraction(total, count)


def all_averages(decomposition: OrbitDecomposition, stat_id: StatId) -> list[Fraction]:
    """Every orbit average, in decomposition order."""
    func = get_statistic(stat_id).func
    return [_average(func, o) for o in decomposition.orbits]
