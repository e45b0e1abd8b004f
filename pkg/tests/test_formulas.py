from fractions import Fraction
from itertools import permutations
from math import lcm

import pytest

from permhomomesy.arith import format_rational, harmonic, is_prime, lcm_upto, parse_rational
from permhomomesy.formulas import (
    FORMULAS,
    FormulaError,
    applicable_rows,
    expected_average,
    family_of,
    formula_rows,
    table_records,
)
from permhomomesy.maps import PAIR_SWAP, ROTATION, right_multiply
from permhomomesy.perm import long_cycle

F = Fraction


class TestArith:
    def test_harmonic(self):
        assert harmonic(0) == 0
        assert harmonic(1) == 1
        assert harmonic(3) == F(11, 6)
        assert harmonic(6) == F(49, 20)

    def test_lcm_upto(self):
        assert lcm_upto(1) == 1
        assert lcm_upto(6) == 60
        assert lcm_upto(16) == 720720
        for m in range(1, 30):
            assert lcm_upto(m) == lcm(*range(1, m + 1))

    def test_is_prime(self):
        primes = [v for v in range(200) if all(v % d for d in range(2, v)) and v > 1]
        assert [v for v in range(200) if is_prime(v)] == primes
        assert not is_prime(49) and not is_prime(1) and not is_prime(0) and is_prime(2)

    def test_rational_text(self):
        assert format_rational(F(4, 2)) == "2"
        assert format_rational(F(-6, 4)) == "-3/2"
        assert parse_rational("149/3") == F(149, 3)


def brute_rotation_average(stat, n):
    # average over the rotation orbit of the identity, straight from definitions
    word = list(range(1, n + 1))
    total = 0
    for k in range(n):
        w = word[k:] + word[:k]
        total += stat(w)
    return F(total, n)


class TestRotationRows:
    def test_1293_harmonic_form_vs_direct_sum(self):
        for n in range(1, 13):
            ell = lcm_upto(2 * n)
            direct = F(ell, n) * sum(F(min(k - 1, 2 * n - k + 1), k) for k in range(2, 2 * n + 1))
            assert expected_average(ROTATION, 1293, n) == direct

    def test_1293_vs_orbit_brute_force(self):
        for n in range(1, 13):
            ell = lcm_upto(2 * n)
            brute = brute_rotation_average(
                lambda w: sum(ell // (i + v) for i, v in enumerate(w, start=1)), n)
            assert expected_average(ROTATION, 1293, n) == brute

    def test_1285_vs_brute_force(self):
        for n in range(1, 13):
            brute = sum(1 for i in range(1, n + 1) for j in range(1, n + 1) if is_prime(i + j))
            assert expected_average("rotation", 1285, n) == F(brute, n)

    def test_examples(self):
        assert expected_average(ROTATION, 1293, 3) == F(149, 3)
        for n in range(1, 10):
            assert expected_average(ROTATION, 22, n) == 1

    def test_depth_n3_brute_force(self):
        # average depth over all of S_3, which rotation homomesy forces as the constant
        total = sum(sum(v - i for i, v in enumerate(w, start=1) if v > i)
                    for w in permutations(range(1, 4)))
        assert F(total, 6) == F(4, 3) == expected_average(ROTATION, 29, 3)
        assert expected_average(ROTATION, 830, 3) == F(8, 3)

    def test_coxeter_uses_rotation_rows(self):
        gen = right_multiply(long_cycle(4))
        assert family_of(gen) == "rotation"
        assert expected_average(gen, 342, 4) == 25


class TestDomains:
    def test_parity(self):
        assert expected_average("parrot", 236, 4) == 2
        with pytest.raises(FormulaError):
            expected_average("parrot", 236, 5)
        with pytest.raises(FormulaError):
            expected_average("parrot", 21, 4)
        assert expected_average("parrot", 1520, 5) == 1

    def test_unknown_row(self):
        with pytest.raises(FormulaError):
            expected_average(PAIR_SWAP, 22, 4)
        with pytest.raises(FormulaError):
            expected_average("flip", 22, 4)

    def test_applicable_rows(self):
        fams = {r.stat_id for r in applicable_rows("parrot", 5)}
        assert fams == {21, 245, 470, 325, 1520}
        assert {r.stat_id for r in applicable_rows("parrot", 6)} == {236, 242}


class TestTable:
    def test_rows(self):
        rot = formula_rows("rotation")
        assert len(rot) == 35  # 34 statistics plus the reflection trace
        assert len(FORMULAS) == len(rot) + 2 + 7 + 4

    def test_records(self):
        recs = table_records([3], "rot")
        r22 = next(r for r in recs if r["statistic"] == 22)
        assert r22["constant"] == "1" and r22["outcome"] == "homomesic"
        r1293 = next(r for r in recs if r["statistic"] == 1293)
        assert r1293["constant"] == "149/3"
