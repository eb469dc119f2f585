"""Command-line front end: tables, verification suites, dumps, Smith form.

Exit codes: 0 all checks pass, 1 a mathematical mismatch was found, 2 bad
usage or unparsable input.  Identical configurations produce byte-identical
JSON so runs can be diffed and gated in CI.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import intlinalg as la
from .abelian import expected_h0, expected_table_entry
from .comparison import (
    f18_counterexample,
    q_kills_boundaries,
    q_matrix,
    verify_h0_iso,
    verify_q_relations,
    verify_theorem,
)
from .complexes import build, homology_of, kunneth_check
from .koszul import derived_sp, generator_presentation, presentation_dimension
from .numtheory import sweep_binomial_lemma

HARD_MAX_N = 12
HARD_MAX_RANK = 6
DEFAULT_MAX_N = 7
DEFAULT_RANK = 2
DEFAULT_PRIMES = (2, 3, 5, 7)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    max_n: int = DEFAULT_MAX_N
    rank: int = DEFAULT_RANK
    jobs: int = 1

    def validate(self) -> None:
        if self.max_n > HARD_MAX_N or self.rank > HARD_MAX_RANK:
            raise UsageError(
                f"ranges capped at n <= {HARD_MAX_N}, rank <= {HARD_MAX_RANK}"
            )
        if self.max_n < 1 or self.rank < 0:
            raise UsageError("ranges must be positive")
        if self.max_n > DEFAULT_MAX_N or self.rank > 4:
            print(
                f"warning: n={self.max_n}, rank={self.rank} is above the "
                "default desk scale; expect longer runtimes",
                file=sys.stderr,
            )


def _jobs_default() -> int:
    try:
        return max(1, int(os.environ.get("DERHAM_JOBS", "1")))
    except ValueError:
        return 1


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _map_cells(fn, cells, jobs: int):
    """Evaluate fn over cells, deterministically ordered regardless of
    completion order."""
    cells = list(cells)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, cells))
    return [fn(c) for c in cells]


# ---------------------------------------------------------------------------
# table


def _table_cell(args):
    q, i, rank = args
    computed = homology_of("C", q, rank).invariants(i)
    expected = expected_table_entry(q, i, rank).invariants()
    if i == 0:
        ok = computed == expected and verify_h0_iso(q, rank)
    else:
        ok = computed == expected and verify_theorem(i, q, rank)
    return {
        "cell": {"n": q, "i": i, "rank": rank},
        "computed": computed.as_dict(),
        "expected": expected.as_dict(),
        "pass": ok,
    }


def cmd_table(ns) -> int:
    config = RunConfig(max_n=ns.max_n, rank=ns.rank, jobs=ns.jobs)
    config.validate()
    if config.max_n > 7:
        raise UsageError("the closed-form table covers weights up to 7")
    cells = [
        (q, i, config.rank) for q in range(2, config.max_n + 1) for i in range(4)
    ]
    records = _map_cells(_table_cell, cells, config.jobs)
    ok = all(rec["pass"] for rec in records)
    if ns.format == "json":
        payload = {
            "command": "table",
            "config": {"max_n": config.max_n, "rank": config.rank},
            "records": records,
            "pass": ok,
        }
        _emit(_json_dumps(payload), ns.output)
    elif ns.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "i", "rank", "computed", "expected", "pass"])
        for rec in records:
            writer.writerow(
                [
                    rec["cell"]["n"],
                    rec["cell"]["i"],
                    rec["cell"]["rank"],
                    _format_invariants(rec["computed"]),
                    _format_invariants(rec["expected"]),
                    rec["pass"],
                ]
            )
        _emit(buf.getvalue(), ns.output)
    else:
        _emit(_render_table_md(records, config), ns.output)
    return 0 if ok else 1


def _format_invariants(inv: dict) -> str:
    parts = []
    if inv["free_rank"] == 1:
        parts.append("Z")
    elif inv["free_rank"] > 1:
        parts.append(f"Z^{inv['free_rank']}")
    parts.extend(f"Z/{m}" for m in inv["torsion"])
    return " + ".join(parts) if parts else "0"


def _render_table_md(records, config: RunConfig) -> str:
    by_cell = {
        (r["cell"]["n"], r["cell"]["i"]): r for r in records
    }
    lines = [
        f"Homology of the weight-q complexes on Z^{config.rank}",
        "",
        "| q | H_0 | H_1 | H_2 | H_3 |",
        "|---|-----|-----|-----|-----|",
    ]
    for q in range(config.max_n, 1, -1):
        row = [f"| {q} |"]
        for i in range(4):
            rec = by_cell[(q, i)]
            mark = "PASS" if rec["pass"] else "FAIL"
            row.append(f" {_format_invariants(rec['computed'])} ({mark}) |")
        lines.append("".join(row))
    lines.append("")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# homology / basis / derived-sp dumps


def cmd_homology(ns) -> int:
    config = RunConfig(max_n=ns.n, rank=ns.rank)
    config.validate()
    cx = build(ns.family, ns.n, ns.rank)
    hom = homology_of(ns.family, ns.n, ns.rank)
    degrees = [ns.degree] if ns.degree is not None else list(range(ns.n + 1))
    records = [
        {
            "cell": {"family": ns.family, "n": ns.n, "i": i, "rank": ns.rank},
            "computed": hom.invariants(i).as_dict(),
        }
        for i in degrees
    ]
    if ns.dump_matrices:
        os.makedirs(ns.dump_matrices, exist_ok=True)
        for i in range(1, ns.n + 1):
            path = os.path.join(ns.dump_matrices, f"d_{i}.txt")
            with open(path, "w") as fh:
                fh.write(la.mat_to_text(cx.d(i)))
    if ns.format == "json":
        _emit(_json_dumps({"command": "homology", "records": records}), ns.output)
    else:
        lines = [f"{ns.family}^{ns.n}(Z^{ns.rank})"]
        for rec in records:
            inv = rec["computed"]
            lines.append(f"  H_{rec['cell']['i']} = {_format_invariants(inv)}")
        _emit("\n".join(lines) + "\n", ns.output)
    return 0


def cmd_basis(ns) -> int:
    from .bases import enumerate_basis

    try:
        labels = enumerate_basis(ns.functor, ns.degree, ns.rank)
    except ValueError as exc:
        raise UsageError(str(exc))
    payload = {
        "functor": ns.functor,
        "degree": ns.degree,
        "rank": ns.rank,
        "size": len(labels),
        "labels": [list(l) for l in labels],
    }
    _emit(_json_dumps(payload), ns.output)
    return 0


def cmd_derived_sp(ns) -> int:
    group = derived_sp(ns.i, ns.n, ns.p, ns.rank)
    pres = generator_presentation(ns.i, ns.n, ns.p, ns.rank)
    payload = {
        "i": ns.i,
        "n": ns.n,
        "p": ns.p,
        "rank": ns.rank,
        "dimension": group.dimension,
        "presentation_dimension": presentation_dimension(pres),
        "representatives": [
            {"wedge": list(w), "monomial": list(m)} for w, m in group.representatives
        ],
    }
    _emit(_json_dumps(payload), ns.output)
    return 0 if payload["dimension"] == payload["presentation_dimension"] else 1


# ---------------------------------------------------------------------------
# verification suites


def _verify_lemma(primes, max_n) -> dict:
    records = [sweep_binomial_lemma(p, max_n) for p in sorted(primes)]
    return {
        "suite": "lemma",
        "records": records,
        "checked": sum(r["checked"] for r in records),
        "failed": sum(r["failed"] for r in records),
        "pass": all(r["failed"] == 0 for r in records),
    }


def _verify_h0(max_n, rank, jobs=1) -> dict:
    def cell(args):
        n, r = args
        q = q_matrix(n, r)
        computed = homology_of("C", n, r).invariants(0)
        expected = expected_h0(n, r).invariants()
        ok = q_kills_boundaries(q) and verify_h0_iso(n, r) and computed == expected
        return {
            "cell": {"n": n, "rank": r},
            "computed": computed.as_dict(),
            "expected": expected.as_dict(),
            "pass": ok,
        }

    cells = [(n, r) for n in range(2, max_n + 1) for r in range(rank + 1)]
    records = _map_cells(cell, cells, jobs)
    return {
        "suite": "h0",
        "records": records,
        "pass": all(r["pass"] for r in records),
    }


def _verify_theorem(max_n, rank, jobs=1) -> dict:
    def cell(args):
        n, i, r = args
        computed = homology_of("C", n, r).invariants(i)
        expected = expected_table_entry(n, i, r).invariants()
        ok = verify_theorem(i, n, r) and computed == expected
        return {
            "cell": {"n": n, "i": i, "rank": r},
            "computed": computed.as_dict(),
            "expected": expected.as_dict(),
            "pass": ok,
        }

    cells = [
        (n, i, r)
        for n in range(2, max_n + 1)
        for i in (1, 2, 3)
        for r in range(1, rank + 1)
    ]
    records = _map_cells(cell, cells, jobs)
    return {
        "suite": "theorem",
        "records": records,
        "pass": all(r["pass"] for r in records),
    }


def _verify_relations(max_n, rank) -> dict:
    records = []
    for n in range(2, max_n + 1):
        for r in range(1, rank + 1):
            rep = verify_q_relations(n, r)
            records.append(
                {
                    "cell": {"n": n, "rank": r},
                    "checked": rep.checked,
                    "failures": len(rep.failures),
                    "pass": rep.ok,
                }
            )
    return {
        "suite": "relations",
        "records": records,
        "pass": all(r["pass"] for r in records),
    }


def _verify_kunneth(max_n, rank_pairs=((1, 1), (1, 2))) -> dict:
    records = []
    for n in range(2, max_n + 1):
        for a, b in rank_pairs:
            for k in range(n + 1):
                ok = kunneth_check(n, a, b, k)
                records.append(
                    {
                        "cell": {"n": n, "rank_a": a, "rank_b": b, "k": k},
                        "pass": ok,
                    }
                )
    return {
        "suite": "kunneth",
        "records": records,
        "pass": all(r["pass"] for r in records),
    }


def cmd_verify(ns) -> int:
    jobs = ns.jobs
    if ns.all:
        suites = {
            "lemma": _verify_lemma(DEFAULT_PRIMES, 60),
            "h0": _verify_h0(DEFAULT_MAX_N, 3, jobs),
            "theorem": _verify_theorem(DEFAULT_MAX_N, DEFAULT_RANK, jobs),
            "relations": _verify_relations(DEFAULT_MAX_N, DEFAULT_RANK),
            "kunneth": _verify_kunneth(6),
        }
        payload = {
            "command": "verify --all",
            "reports": suites,
            "pass": all(s["pass"] for s in suites.values()),
        }
    elif ns.suite == "lemma":
        primes = [ns.p] if ns.p else DEFAULT_PRIMES
        report = _verify_lemma(primes, ns.max_n if ns.max_n else 60)
        payload = {"command": "verify lemma", "reports": {"lemma": report}, "pass": report["pass"]}
    elif ns.suite == "h0":
        config = RunConfig(max_n=ns.max_n or 12, rank=ns.rank if ns.rank is not None else 3, jobs=jobs)
        config.validate()
        report = _verify_h0(config.max_n, config.rank, jobs)
        payload = {"command": "verify h0", "reports": {"h0": report}, "pass": report["pass"]}
    elif ns.suite == "theorem":
        config = RunConfig(max_n=ns.max_n or DEFAULT_MAX_N, rank=ns.rank if ns.rank is not None else 4, jobs=jobs)
        config.validate()
        if config.max_n > 7:
            raise UsageError("the isomorphism range stops at weight 7")
        report = _verify_theorem(config.max_n, config.rank, jobs)
        payload = {"command": "verify theorem", "reports": {"theorem": report}, "pass": report["pass"]}
    elif ns.suite == "relations":
        config = RunConfig(max_n=ns.max_n or 8, rank=ns.rank if ns.rank is not None else 2)
        config.validate()
        report = _verify_relations(config.max_n, config.rank)
        payload = {"command": "verify relations", "reports": {"relations": report}, "pass": report["pass"]}
    elif ns.suite == "kunneth":
        config = RunConfig(max_n=ns.max_n or 6, rank=2)
        config.validate()
        report = _verify_kunneth(config.max_n)
        payload = {"command": "verify kunneth", "reports": {"kunneth": report}, "pass": report["pass"]}
    else:
        raise UsageError("choose a suite (h0, theorem, lemma, relations, kunneth) or --all")
    _emit(_json_dumps(payload), ns.output)
    return 0 if payload["pass"] else 1


def cmd_counterexample(ns) -> int:
    if ns.which != "f18":
        raise UsageError("the only tabulated counterexample is f18")
    report = f18_counterexample(ns.rank)
    expected_breakage = ns.rank >= 2
    ok = (
        report["map_well_defined"]
        and report["source_exponent"] <= 2
        and report["contains_order4"] == expected_breakage
        and report["map_is_iso"] == (not expected_breakage)
    )
    payload = {"command": "counterexample f18", "report": report, "pass": ok}
    _emit(_json_dumps(payload), ns.output)
    return 0 if ok else 1


def cmd_snf(ns) -> int:
    try:
        if ns.input == "-":
            text = sys.stdin.read()
        else:
            with open(ns.input) as fh:
                text = fh.read()
        matrix = la.mat_parse(text)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read matrix: {exc}")
    res = la.smith_normal_form(matrix)
    if ns.output_dir:
        os.makedirs(ns.output_dir, exist_ok=True)
        for name, mat in (("D", res.D), ("U", res.U), ("V", res.V)):
            with open(os.path.join(ns.output_dir, f"{name}.txt"), "w") as fh:
                fh.write(la.mat_to_text(mat))
    else:
        sys.stdout.write(la.mat_to_text(res.D))
        if ns.transforms:
            sys.stdout.write(la.mat_to_text(res.U))
            sys.stdout.write(la.mat_to_text(res.V))
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="derham",
        description="exact homology of divided-power de Rham complexes",
    )
    parser.add_argument("--seed", type=int, default=None,
                        help="ignored; all checks are deterministic")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", default=None, help="write to a file")
        p.add_argument("--jobs", type=int, default=_jobs_default(),
                       help="parallel cells (env DERHAM_JOBS)")

    p = sub.add_parser("table", help="homology table with expected values")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--rank", type=int, default=DEFAULT_RANK)
    p.add_argument("--format", choices=("md", "json", "csv"), default="md")
    common(p)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("homology", help="homology of one complex")
    p.add_argument("--family", choices=("C", "D"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--format", choices=("md", "json"), default="md")
    p.add_argument("--dump-matrices", default=None, metavar="DIR")
    common(p)
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser("basis", help="dump a monomial basis")
    p.add_argument("--functor", choices=("wedge", "sym", "gamma"), required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_basis)

    p = sub.add_parser("derived-sp", help="derived symmetric power over F_p")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_derived_sp)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", nargs="?",
                   choices=("h0", "theorem", "lemma", "relations", "kunneth"))
    p.add_argument("--all", action="store_true", help="every suite at defaults")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--p", type=int, default=None, help="single prime for lemma")
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("counterexample", help="report a failing comparison")
    p.add_argument("which", choices=("f18",))
    p.add_argument("--rank", type=int, default=2)
    common(p)
    p.set_defaults(fn=cmd_counterexample)

    p = sub.add_parser("snf", help="Smith normal form of a matrix file")
    p.add_argument("input", help="matrix in exchange format, or - for stdin")
    p.add_argument("--transforms", action="store_true",
                   help="also print U and V")
    p.add_argument("--output-dir", default=None)
    p.set_defaults(fn=cmd_snf)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.fn(ns)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
