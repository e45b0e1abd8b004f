"""
Closed-form orbit averages, one row per (map family, statistic).

The ``rotation`` family covers rotation and right multiplication by any
n-cycle.  Parity rotation rows only hold for one parity of ``n`` and refuse
the other.  Rows 1287 and 1288 have no closed form and count pairs in
``[n] x [n]`` directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable

from .arith import format_rational, harmonic, is_prime, lcm_upto
from .maps import MapFamily, OrbitGenerator
from .orbits import pair_sum_multiplicity
from .stats import StatId, sort_key

__all__ = [
    "FAMILIES",
    "Formula",
    "FormulaError",
    "FORMULAS",
    "family_of",
    "expected_average",
    "formula_rows",
    "applicable_rows",
    "table_records",
    "harmonic",
    "lcm_upto",
    "is_prime",
]

FAMILIES = ("rotation", "ps", "parrot", "vh")

_FAMILY_OF = {
    MapFamily.ROTATION: "rotation",
    MapFamily.COXETER: "rotation",
    MapFamily.PAIR_SWAP: "ps",
    MapFamily.PARITY_ROTATION: "parrot",
    MapFamily.VALLEY_HOPPING: "vh",
}


class FormulaError(ValueError):
    """No formula row for the request, or ``n`` outside the row's domain."""


def family_of(gen: OrbitGenerator | MapFamily | str) -> str:
    if isinstance(gen, OrbitGenerator):
        return _FAMILY_OF[gen.family]
    if isinstance(gen, MapFamily):
        return _FAMILY_OF[gen]
    if gen in FAMILIES:
        return gen
    if gen == "rot" or gen.startswith("coxeter"):
        return "rotation"
    raise FormulaError(f"unknown map family {gen!r}")


@dataclass(frozen=True)
class Formula:
    family: str
    stat_id: StatId
    text: str
    func: Callable[[int], Fraction]
    parity: str | None = None
    n_min: int = 1

    def applies(self, n: int) -> bool:
        if n < self.n_min:
            return False
        if self.parity == "even":
            return n % 2 == 0
        if self.parity == "odd":
            return n % 2 == 1
        return True

    def __call__(self, n: int) -> Fraction:
        if not self.applies(n):
            dom = f"{self.parity} n >= {self.n_min}" if self.parity else f"n >= {self.n_min}"
            raise FormulaError(
                f"row ({self.family}, {self.stat_id}) holds only for {dom}; got n={n}"
            )
        return Fraction(self.func(n))


F = Fraction


def _prime_column_sums(n: int) -> Fraction:
    return F(sum(pair_sum_multiplicity(n, p) for p in range(2, 2 * n + 1) if is_prime(p)), n)


def _prime_products(shift: int) -> Callable[[int], Fraction]:
    def f(n: int) -> Fraction:
        hits = sum(
            1 for i in range(1, n + 1) for j in range(1, n + 1) if is_prime(i * j + shift)
        )
        return F(hits, n)
    return f


def _lcm_reciprocals(n: int) -> Fraction:
    ell = lcm_upto(2 * n)
    return F(ell, n) * ((2 * n + 1) * harmonic(2 * n) - (2 * n + 2) * harmonic(n))


def _tetra(n: int) -> int:
    return comb(n + 1, 3)


_ROWS: list[Formula] = [
    # entry statistics
    *(Formula("rotation", sid, "(n+1)/2", lambda n: F(n + 1, 2)) for sid in (54, 740, 1806, 1807)),
    # k-excedances
    Formula("rotation", 22, "1", lambda n: F(1)),
    Formula("rotation", 237, "(n-1)/n", lambda n: F(n - 1, n)),
    Formula("rotation", 648, "(n-2)/n", lambda n: F(n - 2, n), n_min=2),
    Formula("rotation", 649, "(n-3)/n", lambda n: F(n - 3, n), n_min=3),
    Formula("rotation", 241, "1", lambda n: F(1)),
    Formula("rotation", 236, "2", lambda n: F(2), n_min=2),
    Formula("rotation", 239, "1+(n-1)/n", lambda n: 1 + F(n - 1, n)),
    Formula("rotation", 235, "n-1", lambda n: F(n - 1)),
    Formula("rotation", 238, "(n-1)^2/n", lambda n: F((n - 1) ** 2, n)),
    Formula("rotation", 240, "n-(n-1)/n", lambda n: n - F(n - 1, n)),
    Formula("rotation", 242, "n-2", lambda n: F(n - 2), n_min=2),
    Formula("rotation", 673, "n-1", lambda n: F(n - 1)),
    # excedances and deficiencies
    Formula("rotation", 155, "(n-1)/2", lambda n: F(n - 1, 2)),
    Formula("rotation", 703, "(n-1)/2", lambda n: F(n - 1, 2)),
    Formula("rotation", 213, "(n+1)/2", lambda n: F(n + 1, 2)),
    Formula("rotation", 702, "(n+1)/2", lambda n: F(n + 1, 2)),
    Formula("rotation", 710, "(n-1)(n-2)/(2n)", lambda n: F((n - 1) * (n - 2), 2 * n)),
    Formula("rotation", 711, "(n-1)(n-2)/(2n)", lambda n: F((n - 1) * (n - 2), 2 * n)),
    Formula("rotation", 1439, "floor((n+2)/2)", lambda n: F((n + 2) // 2)),
    # inversions and displacement
    Formula("rotation", 29, "C(n+1,3)/n", lambda n: F(_tetra(n), n)),
    Formula("rotation", 830, "2*C(n+1,3)/n", lambda n: F(2 * _tetra(n), n)),
    Formula("rotation", 55, "C(n+1,3)/2", lambda n: F(_tetra(n), 2)),
    Formula("rotation", 341, "C(n+1,3)/2", lambda n: F(_tetra(n), 2)),
    Formula("rotation", 828, "C(n+1,3)", lambda n: F(_tetra(n))),
    # miscellaneous
    Formula("rotation", 342, "n(n+1)^2/4", lambda n: F(n * (n + 1) ** 2, 4)),
    Formula("rotation", 1285, "(1/n) sum_{p prime <= 2n} min(p-1, 2n-p+1)", _prime_column_sums),
    Formula("rotation", 1287, "(1/n) #{(i,j) in [n]^2 : ij-1 prime}", _prime_products(-1)),
    Formula("rotation", 1288, "(1/n) #{(i,j) in [n]^2 : ij+1 prime}", _prime_products(1)),
    Formula("rotation", 1293, "(l/n)((2n+1)H_{2n} - (2n+2)H_n), l = lcm{1..2n}", _lcm_reciprocals),
    Formula("rotation", 1801, "floor(n/2)ceil(n/2)/n", lambda n: F((n // 2) * ((n + 1) // 2), n)),
    Formula("rotation", "reflection_trace", "0", lambda n: F(0)),
    # pair swapping
    Formula("ps", 1114, "floor(n/2)/2", lambda n: F(n // 2, 2)),
    Formula("ps", "odd_ascents", "floor(n/2)/2", lambda n: F(n // 2, 2)),
    # parity rotation
    Formula("parrot", 236, "2", lambda n: F(2), parity="even", n_min=2),
    Formula("parrot", 242, "n-2", lambda n: F(n - 2), parity="even", n_min=2),
    Formula("parrot", 21, "(n-1)/2", lambda n: F(n - 1, 2), parity="odd"),
    Formula("parrot", 245, "(n-1)/2", lambda n: F(n - 1, 2), parity="odd"),
    Formula("parrot", 470, "(n+1)/2", lambda n: F(n + 1, 2), parity="odd"),
    Formula("parrot", 325, "(n+1)/2", lambda n: F(n + 1, 2), parity="odd"),
    Formula("parrot", 1520, "(n-3)/2", lambda n: F(n - 3, 2), parity="odd", n_min=3),
    # valley hopping
    Formula("vh", 21, "(n-1)/2", lambda n: F(n - 1, 2)),
    Formula("vh", 245, "(n-1)/2", lambda n: F(n - 1, 2)),
    Formula("vh", 325, "(n+1)/2", lambda n: F(n + 1, 2)),
    Formula("vh", 470, "(n+1)/2", lambda n: F(n + 1, 2)),
]

FORMULAS: dict[tuple[str, StatId], Formula] = {(r.family, r.stat_id): r for r in _ROWS}


def expected_average(family, stat_id: StatId, n: int) -> Fraction:
    fam = family_of(family)
    try:
        row = FORMULAS[fam, stat_id]
    except KeyError:
        raise FormulaError(f"no formula for statistic {stat_id!r} under {fam}") from None
    return row(n)


def formula_rows(family=None) -> list[Formula]:
    """Rows in (family, statistic id) order, optionally for one family."""
    rows = FORMULAS.values()
    if family is not None:
        fam = family_of(family)
        rows = [r for r in rows if r.family == fam]
    return sorted(rows, key=lambda r: (FAMILIES.index(r.family), sort_key(r.stat_id)))


def applicable_rows(family, n: int) -> list[Formula]:
    return [r for r in formula_rows(family) if r.applies(n)]


def table_records(ns: Iterable[int], family=None) -> list[dict]:
    """Oracle values laid out like homomesy verdict records."""
    out = []
    for n in ns:
        for row in formula_rows(family):
            if not row.applies(n):
                continue
            out.append({
                "n": n,
                "generator": row.family,
                "statistic": row.stat_id,
                "outcome": "homomesic",
                "constant": format_rational(row(n)),
                "witnesses": None,
                "orbit_count": None,
                "formula": row.text,
            })
    return out
