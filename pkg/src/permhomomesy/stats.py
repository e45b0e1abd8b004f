"""
Registry of integer-valued permutation statistics, keyed by FindStat number.

Statistics without a FindStat number use a symbolic name (``odd_ascents``,
``inversion_number``, ``reflection_trace``).

Conventions
-----------
* excedance ``p(i) > i``, deficiency ``p(i) < i``; "weak" allows equality;
  "big" excludes ``p(i) = i + 1`` (resp. ``i - 1``).
* ``k``-excedance ``p(i) = i + k``; the cyclical version reads ``i + k``
  modulo ``n`` with values in ``[n]``.
* Descents and ascents live at positions ``1 <= i <= n - 1`` only; position
  ``n`` is neither.
* Statistic 1439 counts *weak* even deficiencies and *weak* odd excedances.
* Statistic 325 (tree width) is evaluated as runs, i.e. descents + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Union

from .arith import is_prime, lcm_upto
from .perm import Permutation

__all__ = [
    "StatId",
    "Statistic",
    "UnknownStatisticError",
    "REGISTRY",
    "ROTATION_STATISTICS",
    "evaluate",
    "get_statistic",
    "list_statistics",
    "parse_stat_id",
    "sort_key",
    "registry_records",
    "CONVENTIONS",
]

StatId = Union[int, str]
Word = tuple[int, ...]


class UnknownStatisticError(KeyError):
    def __init__(self, stat_id):
        known = ", ".join(str(s) for s in sorted(REGISTRY, key=sort_key))
        super().__init__(f"unknown statistic {stat_id!r}; known ids: {known}")
        self.stat_id = stat_id

    def __str__(self):
        return self.args[0]


@dataclass(frozen=True)
class Statistic:
    id: StatId
    name: str
    description: str
    func: Callable[[Word], int]

    def __call__(self, p: Permutation) -> int:
        return self.func(p.word)


# -- evaluators on raw words (1-indexed positions i = j + 1) --

def _count(w: Word, pred) -> int:
    return sum(1 for i, v in enumerate(w, start=1) if pred(i, v))


def _fixed_points(w):
    return _count(w, lambda i, v: v == i)


def _k_excedances(k):
    def f(w):
        return _count(w, lambda i, v: v == i + k)
    return f


def _cyclical_small_excedances(w):
    n = len(w)
    return _count(w, lambda i, v: v == i % n + 1)


def _cyclical_small_weak_excedances(w):
    n = len(w)
    return _count(w, lambda i, v: v == i or v == i % n + 1)


def _small_weak_excedances(w):
    return _count(w, lambda i, v: v == i or v == i + 1)


def _complement(f):
    return lambda w: len(w) - f(w)


def _descents(w):
    return sum(1 for j in range(len(w) - 1) if w[j] > w[j + 1])


def _ascents(w):
    return sum(1 for j in range(len(w) - 1) if w[j] < w[j + 1])


def _odd_descents(w):
    # odd positions i = 1, 3, ... are even 0-based indices
    return sum(1 for j in range(0, len(w) - 1, 2) if w[j] > w[j + 1])


def _odd_ascents(w):
    return sum(1 for j in range(0, len(w) - 1, 2) if w[j] < w[j + 1])


def _strict_3_descents(w):
    return sum(1 for j in range(len(w) - 3) if w[j] > w[j + 3])


def _inversion_pairs(w):
    n = len(w)
    for a in range(n):
        for b in range(a + 1, n):
            if w[b] < w[a]:
                yield a, b


def _inversion_number(w):
    return sum(1 for _ in _inversion_pairs(w))


def _inversion_sum(w):
    return sum(b - a for a, b in _inversion_pairs(w))


def _non_inversion_sum(w):
    n = len(w)
    return sum(b - a for a in range(n) for b in range(a + 1, n) if w[a] < w[b])


def _depth(w):
    return sum(v - i for i, v in enumerate(w, start=1) if v > i)


def _total_displacement(w):
    return sum(abs(v - i) for i, v in enumerate(w, start=1))


def _spearman_rho(w):
    return sum((v - i) ** 2 for i, v in enumerate(w, start=1))


def _cosine(w):
    return sum(i * v for i, v in enumerate(w, start=1))


def _lcm_weighted_reciprocals(w):
    # every i + p(i) lies in 2..2n and divides lcm{1..2n}, so the sum is integral
    ell = lcm_upto(2 * len(w))
    return sum(ell // (i + v) for i, v in enumerate(w, start=1))


def _even_weak_deficiencies_odd_weak_excedances(w):
    return _count(w, lambda i, v: v <= i if i % 2 == 0 else v >= i)


_ENTRIES: list[tuple[StatId, str, str, Callable[[Word], int]]] = [
    # i-th entry statistics
    (54, "first_entry", "The first entry of the permutation, p(1).", lambda w: w[0]),
    (740, "last_entry", "The last entry of the permutation, p(n).", lambda w: w[-1]),
    (1806, "upper_middle_entry", "The upper middle entry p(ceil((n+1)/2)).",
     lambda w: w[(len(w) + 2) // 2 - 1]),
    (1807, "lower_middle_entry", "The lower middle entry p(floor((n+1)/2)).",
     lambda w: w[(len(w) + 1) // 2 - 1]),
    # excedance family
    (22, "fixed_points", "The number of fixed points, p(i) = i.", _fixed_points),
    (155, "excedances", "The number of excedances, p(i) > i.",
     lambda w: _count(w, lambda i, v: v > i)),
    (213, "weak_excedances", "The number of weak excedances, p(i) >= i.",
     lambda w: _count(w, lambda i, v: v >= i)),
    (235, "not_cyclical_small_excedances",
     "The number of indices that are not cyclical small excedances, n - [241].",
     _complement(_cyclical_small_excedances)),
    (236, "cyclical_small_weak_excedances",
     "The number of cyclical small weak excedances, p(i) in {i, (i mod n) + 1}.",
     _cyclical_small_weak_excedances),
    (237, "small_excedances", "The number of small excedances, p(i) = i + 1.", _k_excedances(1)),
    (238, "not_small_weak_excedances",
     "The number of indices that are not small weak excedances, n - [239].",
     _complement(_small_weak_excedances)),
    (239, "small_weak_excedances", "The number of small weak excedances, p(i) in {i, i + 1}.",
     _small_weak_excedances),
    (240, "not_small_excedances", "The number of indices that are not small excedances, n - [237].",
     _complement(_k_excedances(1))),
    (241, "cyclical_small_excedances",
     "The number of cyclical small excedances, p(i) = (i mod n) + 1.", _cyclical_small_excedances),
    (242, "not_cyclical_small_weak_excedances",
     "The number of indices that are not cyclical small weak excedances, n - [236].",
     _complement(_cyclical_small_weak_excedances)),
    (648, "two_excedances", "The number of 2-excedances, p(i) = i + 2.", _k_excedances(2)),
    (649, "three_excedances", "The number of 3-excedances, p(i) = i + 3.", _k_excedances(3)),
    (673, "support_size", "The size of the support (number of non-fixed points), n - [22].",
     _complement(_fixed_points)),
    (702, "weak_deficiencies", "The number of weak deficiencies, p(i) <= i.",
     lambda w: _count(w, lambda i, v: v <= i)),
    (703, "deficiencies", "The number of deficiencies, p(i) < i.",
     lambda w: _count(w, lambda i, v: v < i)),
    (710, "big_deficiencies", "The number of big deficiencies, p(i) < i - 1.",
     lambda w: _count(w, lambda i, v: v < i - 1)),
    (711, "big_excedances", "The number of big excedances, p(i) > i + 1.",
     lambda w: _count(w, lambda i, v: v > i + 1)),
    (1439, "even_weak_deficiencies_odd_weak_excedances",
     "The number of even weak deficiencies and odd weak excedances: "
     "#{i even: p(i) <= i} + #{i odd: p(i) >= i}.",
     _even_weak_deficiencies_odd_weak_excedances),
    # inversion family
    (29, "depth", "The depth, sum of p(i) - i over excedances.", _depth),
    (55, "inversion_sum", "The inversion sum, sum of j - i over inversions i < j.", _inversion_sum),
    (341, "non_inversion_sum", "The non-inversion sum, sum of j - i over non-inversions i < j.",
     _non_inversion_sum),
    (828, "spearmans_rho", "Spearman's rho against the identity, sum of (p(i) - i)^2.",
     _spearman_rho),
    (830, "total_displacement", "The total displacement, sum of |p(i) - i|.", _total_displacement),
    # miscellaneous
    (342, "cosine", "The cosine of the permutation, sum of i * p(i).", _cosine),
    (1285, "prime_column_sums",
     "The number of primes among the column sums i + p(i) of the two-line notation.",
     lambda w: _count(w, lambda i, v: is_prime(i + v))),
    (1287, "prime_products_minus_one", "The number of i with i * p(i) - 1 prime.",
     lambda w: _count(w, lambda i, v: is_prime(i * v - 1))),
    (1288, "prime_products_plus_one", "The number of i with i * p(i) + 1 prime.",
     lambda w: _count(w, lambda i, v: is_prime(i * v + 1))),
    (1293, "lcm_weighted_reciprocal_sum",
     "lcm{1..2n} times the sum of 1/(i + p(i)).", _lcm_weighted_reciprocals),
    (1801, "half_mixed_parity_pairs",
     "Half the number of preimage-image pairs (i, p(i)) of different parity.",
     lambda w: _count(w, lambda i, v: (i + v) % 2 == 1) // 2),
    # descent family
    (21, "descents", "The number of descents, p(i) > p(i+1) for i < n.", _descents),
    (245, "ascents", "The number of ascents, p(i) < p(i+1) for i < n.", _ascents),
    (325, "tree_width", "The width of the tree associated to the permutation (= runs).",
     lambda w: _descents(w) + 1),
    (470, "runs", "The number of runs (maximal increasing factors), descents + 1.",
     lambda w: _descents(w) + 1),
    (1114, "odd_descents", "The number of descents at odd positions i < n.", _odd_descents),
    (1520, "strict_3_descents", "The number of strict 3-descents, p(i) > p(i+3).",
     _strict_3_descents),
    ("odd_ascents", "odd_ascents", "The number of ascents at odd positions i < n.", _odd_ascents),
    # controls and extensions
    ("inversion_number", "inversion_number",
     "The number of inversions i < j with p(j) < p(i).", _inversion_number),
    ("reflection_trace", "reflection_trace",
     "Trace in the reflection representation of S_n, fixed points - 1.",
     lambda w: _fixed_points(w) - 1),
]

REGISTRY: dict[StatId, Statistic] = {
    sid: Statistic(sid, name, desc, func) for sid, name, desc, func in _ENTRIES
}

# The 34 statistics homomesic under rotation and under right multiplication
# by any n-cycle.
ROTATION_STATISTICS: tuple[int, ...] = (
    54, 740, 1806, 1807,
    22, 155, 213, 235, 236, 237, 238, 239, 240, 241, 242, 648, 649, 673, 702, 703, 710, 711, 1439,
    29, 55, 341, 828, 830,
    342, 1285, 1287, 1288, 1293, 1801,
)


def sort_key(stat_id: StatId) -> tuple[int, int, str]:
    """Numeric ids first in numeric order, then symbolic names alphabetically."""
    if isinstance(stat_id, int):
        return (0, stat_id, "")
    return (1, 0, stat_id)


def parse_stat_id(text: str | int) -> StatId:
    """Map ``"22"`` to ``22`` and a registered name (e.g. ``"depth"``) to its id."""
    if isinstance(text, int):
        sid: StatId = text
    else:
        text = text.strip()
        sid = int(text) if text.lstrip("-").isdigit() else text
    if sid in REGISTRY:
        return sid
    for stat in REGISTRY.values():
        if stat.name == sid:
            return stat.id
    raise UnknownStatisticError(sid)


def get_statistic(stat_id: StatId) -> Statistic:
    try:
        return REGISTRY[stat_id]
    except (KeyError, TypeError):
        raise UnknownStatisticError(stat_id) from None


def evaluate(stat_id: StatId, p: Permutation) -> int:
    return get_statistic(stat_id).func(p.word)


def list_statistics() -> list[tuple[StatId, str]]:
    return [(sid, REGISTRY[sid].description) for sid in sorted(REGISTRY, key=sort_key)]


CONVENTIONS: tuple[str, ...] = (
    "positions and values are 1-indexed",
    "excedance p(i) > i; deficiency p(i) < i; weak versions allow equality",
    "big excedance p(i) > i + 1; big deficiency p(i) < i - 1",
    "k-excedance p(i) = i + k; cyclical version p(i) = ((i + k - 1) mod n) + 1",
    "no descent or ascent at position n",
    "1439 counts weak even deficiencies and weak odd excedances",
    "325 (tree width) is evaluated as descents + 1",
)


def registry_records(ids: Iterable[StatId] | None = None) -> list[dict]:
    """Machine-readable registry dump, one record per statistic."""
    ids = sorted(REGISTRY if ids is None else ids, key=sort_key)
    out = []
    for sid in ids:
        stat = REGISTRY[sid]
        out.append({
            "id": sid,
            "findstat": f"St{sid:06d}" if isinstance(sid, int) else None,
            "name": stat.name,
            "description": stat.description,
        })
    return out
