from __future__ import annotations

import re

from hypothesis import strategies as st

from permhomomesy.perm import Permutation


def perms(min_n: int = 1, max_n: int = 9):
    """Hypothesis strategy for permutations of [n] with min_n <= n <= max_n."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(Permutation)
    )


def P(text: str) -> Permutation:
    return Permutation.parse(text)


_CRITERIA: dict[str, str] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = f"{int(m.group(1)):2d} {m.group(2)}"
    if report.when == "call" or report.outcome != "passed":
        prev = _CRITERIA.get(key)
        if prev != "FAIL":
            _CRITERIA[key] = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {key}: {_CRITERIA[key]}")
