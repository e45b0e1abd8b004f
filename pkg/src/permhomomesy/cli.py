"""
Command-line driver.

    permhomomesy search  --n 3 --gen rot --stats all
    permhomomesy verify  --n 3 --n-max 6 --gen rot
    permhomomesy orbits  --n 6 --gen vh --seed 246135
    permhomomesy registry
    permhomomesy formulas --n 3 --n-max 5

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 resource
guard exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, TextIO

from .arith import format_rational
from .formulas import applicable_rows, family_of, table_records
from .homomesy import HomomesyVerdict, check_homomesy
from .maps import OrbitGenerator, orbit_of, right_multiply
from .orbits import decompose
from .perm import Permutation, PermutationError, ResourceGuardError, n_cycles
from .stats import (
    CONVENTIONS,
    REGISTRY,
    StatId,
    UnknownStatisticError,
    get_statistic,
    parse_stat_id,
    registry_records,
    sort_key,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

SINGLE_MAP_GUARD = 8
ALL_CYCLES_GUARD = 6
ALL_CYCLES = "coxeter-all"

CSV_COLUMNS = [
    "n", "generator", "stat_id", "stat_name", "verdict", "constant",
    "witness_a_seed", "witness_a_avg", "witness_b_seed", "witness_b_avg",
]


class UsageError(Exception):
    pass


class GuardError(Exception):
    pass


@dataclass
class RunConfig:
    n_min: int
    n_max: int
    generators: list[str]
    statistics: list[StatId] | None = None  # None means every registered statistic
    output_format: str = "jsonl"
    output_path: str | None = None
    workers: int = 1
    max_n_guard: int | None = None
    timing: bool = False
    members: bool = False
    seed: str | None = None

    @property
    def n_range(self) -> range:
        return range(self.n_min, self.n_max + 1)

    def guard_for(self, gen_spec: str) -> int:
        if self.max_n_guard is not None:
            return self.max_n_guard
        return ALL_CYCLES_GUARD if gen_spec == ALL_CYCLES else SINGLE_MAP_GUARD

    def validate(self) -> None:
        if self.n_min < 1 or self.n_max < self.n_min:
            raise UsageError(f"invalid n range {self.n_min}..{self.n_max}")
        if self.workers < 1:
            raise UsageError("--workers must be positive")
        if not self.generators:
            raise UsageError("at least one --gen is required")
        for spec in self.generators:
            if spec != ALL_CYCLES:
                try:
                    gen = OrbitGenerator.parse(spec)
                except PermutationError as exc:
                    raise UsageError(str(exc)) from None
                if gen.cycle is not None and not (self.n_min == self.n_max == gen.cycle.n):
                    raise UsageError(f"{spec} acts on S_{gen.cycle.n} only; set --n accordingly")
            guard = self.guard_for(spec)
            if self.n_max > guard:
                raise GuardError(
                    f"n={self.n_max} exceeds the resource guard {guard} for generator {spec}; "
                    f"pass --max-n-guard to override"
                )

    def expand(self, n: int) -> list[OrbitGenerator]:
        out = []
        for spec in self.generators:
            if spec == ALL_CYCLES:
                out.extend(right_multiply(c) for c in n_cycles(n))
            else:
                out.append(OrbitGenerator.parse(spec))
        return out

    def stat_ids(self) -> list[StatId]:
        if self.statistics is None:
            return sorted(REGISTRY, key=sort_key)
        return list(self.statistics)


# -- parallel task plumbing --

def _run_tasks(func: Callable, tasks: Sequence, workers: int) -> list:
    # Results come back in task order regardless of worker count.
    if workers <= 1 or len(tasks) <= 1:
        return [func(t) for t in tasks]
    chunk = max(1, len(tasks) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, tasks, chunksize=chunk))


def _search_task(task) -> tuple[dict, float]:
    n, gen, sid, guard = task
    start = time.perf_counter()
    verdict = check_homomesy(n, gen, sid, max_n=guard)
    return verdict.to_record(), time.perf_counter() - start


def _verify_task(task) -> tuple[dict, str]:
    n, gen, sid, guard, expected = task
    verdict = check_homomesy(n, gen, sid, max_n=guard)
    return verdict.to_record(), expected


# -- output --

def _open_out(path: str | None) -> TextIO:
    if path is None:
        return sys.stdout
    return open(path, "w", newline="", encoding="utf-8")


def _search_row(rec: dict) -> dict:
    w = rec["witnesses"] or [{}, {}]
    return {
        "n": rec["n"],
        "generator": rec["generator"],
        "stat_id": rec["statistic"],
        "stat_name": rec["stat_name"],
        "verdict": rec["outcome"],
        "constant": rec["constant"] if rec["constant"] is not None else "",
        "witness_a_seed": w[0].get("seed", ""),
        "witness_a_avg": w[0].get("average", ""),
        "witness_b_seed": w[1].get("seed", ""),
        "witness_b_avg": w[1].get("average", ""),
    }


def write_records(records: list[dict], fmt: str, out: TextIO, timing: bool = False) -> None:
    if fmt == "jsonl":
        for rec in records:
            out.write(json.dumps(rec, sort_keys=False) + "\n")
    elif fmt == "csv":
        cols = CSV_COLUMNS + (["elapsed"] if timing else [])
        writer = csv.DictWriter(out, fieldnames=cols, lineterminator="\n")
        writer.writeheader()
        for rec in records:
            row = _search_row(rec)
            if timing:
                row["elapsed"] = rec["elapsed"]
            writer.writerow(row)
    else:
        for rec in records:
            line = str(HomomesyVerdict.from_record(rec))
            if timing:
                line += f" [{rec['elapsed']}s]"
            out.write(line + "\n")


# -- subcommands --

def cmd_search(config: RunConfig) -> int:
    config.validate()
    tasks = []
    for n in config.n_range:
        for spec in config.generators:
            guard = config.guard_for(spec)
            for gen in config.expand(n) if spec == ALL_CYCLES else [OrbitGenerator.parse(spec)]:
                for sid in config.stat_ids():
                    tasks.append((n, gen, sid, guard))
    results = _run_tasks(_search_task, tasks, config.workers)
    records = []
    for rec, elapsed in results:
        rec["stat_name"] = get_statistic(rec["statistic"]).name
        if config.timing:
            rec["elapsed"] = f"{elapsed:.6f}"
        records.append(rec)
    out = _open_out(config.output_path)
    try:
        write_records(records, config.output_format, out, config.timing)
    finally:
        if out is not sys.stdout:
            out.close()
    hom = sum(1 for r in records if r["outcome"] == "homomesic")
    summary = f"search: {len(records)} records, {hom} homomesic, {len(records) - hom} not homomesic"
    if config.output_format == "text" and config.output_path is None:
        print(summary)
    else:
        print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    config.validate()
    wanted = None if config.statistics is None else set(config.statistics)
    tasks = []
    for n in config.n_range:
        for spec in config.generators:
            guard = config.guard_for(spec)
            for gen in config.expand(n) if spec == ALL_CYCLES else [OrbitGenerator.parse(spec)]:
                for row in applicable_rows(family_of(gen), n):
                    if wanted is not None and row.stat_id not in wanted:
                        continue
                    tasks.append((n, gen, row.stat_id, guard, format_rational(row(n))))
    if not tasks:
        raise UsageError("no formula rows apply to the requested generators and n range")
    results = _run_tasks(_verify_task, tasks, config.workers)
    mismatches = 0
    out = _open_out(config.output_path)
    try:
        for rec, expected in results:
            ok = rec["constant"] == expected
            mismatches += not ok
            if config.output_format == "jsonl":
                rec = dict(rec, expected=expected, match=ok)
                out.write(json.dumps(rec) + "\n")
                continue
            got = rec["constant"]
            if got is None:
                a, b = rec["witnesses"]
                got = f"not homomesic ({a['seed']}: {a['average']}, {b['seed']}: {b['average']})"
            status = "ok" if ok else "MISMATCH"
            out.write(
                f"{status} n={rec['n']} gen={rec['generator']} stat={rec['statistic']} "
                f"expected={expected} got={got}\n"
            )
        out.write(f"verify: {len(results)} rows checked, {mismatches} mismatches\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_MISMATCH if mismatches else EXIT_OK


def cmd_orbits(config: RunConfig) -> int:
    config.validate()
    if len(config.generators) != 1 or config.generators[0] == ALL_CYCLES:
        raise UsageError("orbits takes exactly one generator (not coxeter-all)")
    if config.n_min != config.n_max:
        raise UsageError("orbits takes a single --n")
    n = config.n_min
    gen = OrbitGenerator.parse(config.generators[0])
    out = _open_out(config.output_path)
    try:
        if config.seed is not None:
            try:
                seed = Permutation.parse(config.seed)
            except PermutationError as exc:
                raise UsageError(f"malformed seed: {exc}") from None
            if seed.n != n:
                raise UsageError(f"seed {seed} is not in S_{n}")
            orbit = orbit_of(gen, seed)
            if config.output_format == "jsonl":
                out.write(json.dumps({
                    "n": n, "generator": gen.name, "seed": str(seed),
                    "size": len(orbit), "members": [str(p) for p in orbit],
                }) + "\n")
            else:
                for p in orbit:
                    out.write(f"{p}\n")
                out.write(f"orbit size {len(orbit)}\n")
            return EXIT_OK
        decomp = decompose(n, gen, max_n=config.guard_for(config.generators[0]))
        hist = decomp.size_histogram()
        if config.output_format == "jsonl":
            rec = {
                "n": n, "generator": gen.name, "orbit_count": len(decomp),
                "histogram": {str(k): v for k, v in hist.items()},
            }
            if config.members:
                rec["orbits"] = [[str(p) for p in o] for o in decomp]
            out.write(json.dumps(rec) + "\n")
        else:
            out.write(f"n={n} gen={gen.name} orbits={len(decomp)}\n")
            for size, count in hist.items():
                out.write(f"size {size}: {count}\n")
            if config.members:
                for o in decomp:
                    out.write(" ".join(str(p) for p in o) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_registry(config: RunConfig) -> int:
    records = registry_records(config.statistics)
    out = _open_out(config.output_path)
    try:
        if config.output_format == "text":
            for rec in records:
                out.write(f"{rec['id']}\t{rec['name']}\t{rec['description']}\n")
        elif config.output_format == "csv":
            writer = csv.DictWriter(out, fieldnames=list(records[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(records)
        else:
            doc = {"conventions": list(CONVENTIONS), "statistics": records}
            out.write(json.dumps(doc, indent=2) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_formulas(config: RunConfig) -> int:
    if config.n_min < 1 or config.n_max < config.n_min:
        raise UsageError(f"invalid n range {config.n_min}..{config.n_max}")
    families = None
    if config.generators:
        try:
            families = sorted({family_of(g) for g in config.generators})
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    records = []
    for fam in families or [None]:
        records.extend(table_records(config.n_range, fam))
    if config.statistics is not None:
        records = [r for r in records if r["statistic"] in set(config.statistics)]
    records.sort(key=lambda r: r["n"])
    out = _open_out(config.output_path)
    try:
        if config.output_format == "text":
            for r in records:
                out.write(f"n={r['n']} family={r['generator']} stat={r['statistic']} "
                          f"average={r['constant']} [{r['formula']}]\n")
        else:
            for r in records:
                out.write(json.dumps(r) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


COMMANDS = {
    "search": cmd_search,
    "verify": cmd_verify,
    "orbits": cmd_orbits,
    "registry": cmd_registry,
    "formulas": cmd_formulas,
}


def _split(values: Iterable[str] | None) -> list[str]:
    out = []
    for v in values or []:
        out.extend(x for x in v.split(",") if x.strip())
    return [x.strip() for x in out]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permhomomesy",
        description="Exhaustive homomesy checks for maps on permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "search": "check every selected statistic for homomesy",
        "verify": "compare the engine against the closed-form table",
        "orbits": "print an orbit or the orbit size histogram",
        "registry": "dump the statistic registry",
        "formulas": "dump the closed-form table",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        needs_n = name in ("search", "verify", "orbits", "formulas")
        p.add_argument("--n", type=int, required=needs_n, help="size, or lower end of the range")
        p.add_argument("--n-max", type=int, help="upper end of the n range (default: --n)")
        p.add_argument("--gen", action="append",
                       help="rot, coxeter:<cycle>, coxeter-all, ps, parrot, vh (repeatable, comma-separated)")
        p.add_argument("--stats", action="append", help="statistic ids or names, or 'all'")
        default_fmt = {"registry": "json", "orbits": "text", "verify": "text"}.get(name, "jsonl")
        p.add_argument("--format", choices=["jsonl", "json", "csv", "text"], default=default_fmt)
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--max-n-guard", type=int,
                       help=f"largest n allowed (default {SINGLE_MAP_GUARD}, {ALL_CYCLES_GUARD} for coxeter-all)")
        if name == "search":
            p.add_argument("--timing", action="store_true", help="add per-record elapsed seconds")
        if name == "orbits":
            p.add_argument("--seed", help="print the orbit of this permutation")
            p.add_argument("--members", action="store_true", help="list every orbit")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    stats_raw = _split(args.stats)
    if not stats_raw or stats_raw == ["all"]:
        stats = None
    else:
        try:
            stats = [parse_stat_id(s) for s in stats_raw]
        except UnknownStatisticError as exc:
            raise UsageError(str(exc)) from None
    n = args.n if args.n is not None else 1
    fmt = "jsonl" if args.format == "json" and args.command != "registry" else args.format
    return RunConfig(
        n_min=n,
        n_max=args.n_max if args.n_max is not None else n,
        generators=_split(args.gen),
        statistics=stats,
        output_format=fmt,
        output_path=args.out,
        workers=args.workers,
        max_n_guard=args.max_n_guard,
        timing=getattr(args, "timing", False),
        members=getattr(args, "members", False),
        seed=getattr(args, "seed", None),
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        return COMMANDS[args.command](config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GuardError, ResourceGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
