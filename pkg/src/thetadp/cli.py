"""Command-line front end.

Every command builds a :class:`RunReport` whose cells are strings; integers
are written in full decimal so no consumer ever sees a float.  A failed
mathematical verdict exits with 1; usage or budget problems exit with 2.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from thetadp.closed_forms import (
    amgm_bound,
    chromatic_poly_theta,
    dp_theta3,
    dual_dp_generalized,
    sufficiency_check,
)
from thetadp.covers import count_pinned, count_transversals, load_cover, validate_cover
from thetadp.optimizer import BudgetExceeded, DEFAULT_BUDGET, SearchOptions, adherence_scan, maximize, minimize
from thetadp.rearrangement import random_suite, search_k3_reversal_failure
from thetadp.signatures import extremal_signature_max, extremal_signature_min_theta3
from thetadp.theta import ThetaSpec, parse_spec

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

PASS, FAIL, ERROR, EXPLORATORY = "pass", "fail", "error", "exploratory"

COUNTEREXAMPLES = {
    "1": (2, 3, 3, 3, 2),
    "2": (2, 3, 3, 3, 3, 3, 2, 2),
}

WHICH = ("P", "P_DP", "P*_DP", "AMGM")


@dataclass
class RunReport:
    command: str
    inputs: dict
    columns: list
    rows: list = field(default_factory=list)
    elapsed_us: int = 0

    def add(self, **cells) -> None:
        unknown = set(cells) - set(self.columns)
        if unknown:
            raise KeyError(f"unknown columns {sorted(unknown)}")
        self.rows.append({c: _cell(cells.get(c, "")) for c in self.columns})

    @property
    def verdicts(self) -> list:
        if "verdict" not in self.columns:
            return []
        return [r["verdict"] for r in self.rows]

    def exit_code(self) -> int:
        vs = self.verdicts
        if ERROR in vs:
            return EXIT_USAGE
        if FAIL in vs:
            return EXIT_FAIL
        return EXIT_OK

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "inputs": {k: _cell(v) for k, v in self.inputs.items()},
            "columns": list(self.columns),
            "rows": self.rows,
            "elapsed_us": str(self.elapsed_us),
        }
        return json.dumps(doc, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=self.columns, lineterminator="\n")
        w.writeheader()
        w.writerows(self.rows)
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        return self.to_csv() if fmt == "csv" else self.to_json()


def rows_from_json(text: str) -> list:
    return json.loads(text)["rows"]


def rows_from_csv(text: str) -> list:
    return list(csv.DictReader(io.StringIO(text)))


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        raise TypeError("floats are not allowed in reports")
    return str(v)


def parse_m_range(text: str) -> list[int]:
    """``"4"`` or an inclusive range ``"3..6"``."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad m range {text!r}") from None
    if a < 2 or b < a:
        raise argparse.ArgumentTypeError(f"m range must satisfy 2 <= lo <= hi, got {text!r}")
    return list(range(a, b + 1))


def _spec_arg(text: str) -> ThetaSpec:
    try:
        return parse_spec(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _which_arg(text: str) -> list[str]:
    items = [w.strip() for w in text.split(",") if w.strip()]
    bad = [w for w in items if w not in WHICH]
    if bad or not items:
        raise argparse.ArgumentTypeError(f"--which takes a subset of {','.join(WHICH)}, got {text!r}")
    return items


def _options(args) -> SearchOptions:
    return SearchOptions(budget=args.budget, workers=args.workers, symmetry=args.symmetry == "on")


# --- commands ---------------------------------------------------------------


def cmd_values(spec: ThetaSpec, ms: Sequence[int], which: Sequence[str], opts: SearchOptions,
               force_exhaustive: bool = False) -> RunReport:
    cols = ["m"]
    for w in which:
        cols.append(w)
        if w in ("P_DP", "P*_DP"):
            cols += [f"{w}_method", f"{w}_witness"]
    cols += ["verdict", "note"]
    rep = RunReport("values", {"spec": ",".join(map(str, spec.lengths)), "which": ",".join(which),
                               "force_exhaustive": force_exhaustive}, cols)
    for m in ms:
        cells: dict = {"m": m, "verdict": PASS}
        notes = []
        for w in which:
            try:
                if w == "P":
                    cells[w] = chromatic_poly_theta(spec, m)
                elif w == "AMGM":
                    cells[w] = amgm_bound(spec, m) if m >= 3 else "n/a"
                elif w == "P_DP":
                    _min_cells(spec, m, opts, force_exhaustive, cells, notes)
                else:
                    _max_cells(spec, m, opts, force_exhaustive, cells, notes)
            except BudgetExceeded as exc:
                cells[w] = "budget"
                cells["verdict"] = ERROR
                notes.append(str(exc))
        if any("disagrees" in n for n in notes) and cells["verdict"] != ERROR:
            cells["verdict"] = FAIL
        cells["note"] = "; ".join(notes)
        rep.add(**cells)
    return rep


def _min_cells(spec, m, opts, force, cells, notes) -> None:
    closed = dp_theta3(spec, m) if spec.n == 3 else None
    if closed is not None and not force:
        cells["P_DP"] = closed.value
        cells["P_DP_method"] = closed.case.value
        if m >= 3:
            cells["P_DP_witness"] = extremal_signature_min_theta3(spec, m)
        return
    res = minimize(spec, m, opts)
    cells["P_DP"] = res.optimum
    cells["P_DP_method"] = "exhaustive"
    cells["P_DP_witness"] = res.witness
    if closed is not None and closed.value != res.optimum:
        notes.append(f"P_DP closed form {closed.value} disagrees with search")


def _max_cells(spec, m, opts, force, cells, notes) -> None:
    closed = dual_dp_generalized(spec, m)
    if not force:
        cells["P*_DP"] = closed.value
        cells["P*_DP_method"] = closed.case.value
        cells["P*_DP_witness"] = extremal_signature_max(spec, m)
        return
    res = maximize(spec, m, opts)
    cells["P*_DP"] = res.optimum
    cells["P*_DP_method"] = "exhaustive"
    cells["P*_DP_witness"] = res.witness
    if closed.value != res.optimum:
        notes.append(f"P*_DP closed form {closed.value} disagrees with search")


def cmd_verify_counterexamples(graphs: Sequence[str] = ("1", "2"), scan_ms: Sequence[int] = (),
                               opts: SearchOptions = SearchOptions()) -> RunReport:
    cols = ["graph", "m", "P", "AMGM", "sufficient", "P_DP", "witness", "claim", "verdict", "note"]
    rep = RunReport("verify-counterexamples", {"graphs": ",".join(graphs),
                                               "scan": ",".join(map(str, scan_ms))}, cols)
    for g in graphs:
        spec = ThetaSpec(COUNTEREXAMPLES[g])
        suff = sufficiency_check(spec, 3)
        try:
            res = minimize(spec, 3, opts)
        except BudgetExceeded as exc:
            rep.add(graph=spec, m=3, P=suff.chromatic, AMGM=suff.bound, sufficient=suff.holds,
                    claim="P_DP(G,3)=P(G,3)", verdict=ERROR, note=str(exc))
            continue
        ok = suff.holds and res.optimum == suff.chromatic
        rep.add(graph=spec, m=3, P=suff.chromatic, AMGM=suff.bound, sufficient=suff.holds,
                P_DP=res.optimum, witness=res.witness, claim="P_DP(G,3)=P(G,3)",
                verdict=PASS if ok else FAIL)
        for row in adherence_scan(spec, scan_ms, opts):
            rel = "" if row.minimum is None else ("P_DP=P" if row.equal else "P_DP<P")
            rep.add(graph=spec, m=row.m, P=row.chromatic, P_DP=row.minimum, witness=row.witness,
                    claim=rel, verdict=ERROR if row.error else EXPLORATORY, note=row.error)
    return rep


def cmd_scan(spec: ThetaSpec, ms: Sequence[int], opts: SearchOptions) -> RunReport:
    cols = ["m", "P", "P_DP", "witness", "relation", "verdict", "note"]
    rep = RunReport("scan", {"spec": ",".join(map(str, spec.lengths))}, cols)
    for row in adherence_scan(spec, ms, opts):
        if row.error:
            rep.add(m=row.m, P=row.chromatic, verdict=ERROR, note=row.error)
            continue
        rep.add(m=row.m, P=row.chromatic, P_DP=row.minimum, witness=row.witness,
                relation="equal" if row.equal else "strict", verdict=EXPLORATORY)
    return rep


def cmd_oracle(path: Path, pins: Sequence[str] = ()) -> RunReport:
    cols = ["fold", "vertices", "pins", "count", "conflict", "verdict", "note"]
    rep = RunReport("oracle", {"cover": str(path), "pins": ",".join(pins)}, cols)
    cover = load_cover(Path(path).read_text())
    problems = validate_cover(cover)
    if problems:
        rep.add(fold=cover.fold, vertices=len(cover.vertices), verdict=ERROR,
                note="; ".join(str(p) for p in problems))
        return rep
    if pins:
        res = count_pinned(cover, pins)
        rep.add(fold=cover.fold, vertices=len(cover.vertices), pins=" ".join(pins), count=res.count,
                conflict=res.conflict, verdict=PASS)
    else:
        rep.add(fold=cover.fold, vertices=len(cover.vertices), count=count_transversals(cover), verdict=PASS)
    return rep


def cmd_rearrange_check(instances: int = 1000, seed: int = 0, bound: int = 3, n: int = 3) -> RunReport:
    cols = ["check", "instances", "violations", "detail", "verdict"]
    rep = RunReport("rearrange-check", {"instances": instances, "seed": seed, "bound": bound, "n": n}, cols)
    suite = random_suite(instances, seed)
    for name, count in suite.checked.items():
        bad = [v for v in suite.violations if v[0] == name]
        detail = ""
        if name == "staggered":
            detail = " ".join(f"{''.join(p[0] for p in pat)}={hits}" for pat, hits in suite.pattern_hits.items())
        rep.add(check=name, instances=count, violations=len(bad), detail=detail,
                verdict=FAIL if bad else PASS)
    found = search_k3_reversal_failure(bound, n)
    if found is None:
        rep.add(check="k3_reversal_failure", instances=1, violations=0, detail="no witness", verdict=FAIL)
    else:
        rows = " | ".join(",".join(map(str, r)) for r in found.rows)
        perms = " | ".join(",".join(str(i + 1) for i in p) for p in found.perms)
        rep.add(check="k3_reversal_failure", instances=1, violations=0, verdict=PASS,
                detail=f"rows {rows}; perms {perms}; permuted {found.permuted} < reversed {found.reversed}")
    return rep


# --- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--workers", type=int, default=1)
    search.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    search.add_argument("--symmetry", choices=("on", "off"), default="on")

    p = argparse.ArgumentParser(prog="thetadp", description="Exact DP color functions of theta graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("values", parents=[common, search], help="compute P, P_DP, P*_DP and the AM-GM bound")
    v.add_argument("--spec", type=_spec_arg, required=True, help="path lengths, e.g. 2,3,3,3,2")
    g = v.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=parse_m_range)
    g.add_argument("--m-range", type=parse_m_range, dest="m")
    v.add_argument("--which", type=_which_arg, default=list(WHICH))
    v.add_argument("--force-exhaustive", action="store_true", help="use the optimizer even when a closed form exists")

    c = sub.add_parser("verify-counterexamples", parents=[common, search],
                       help="check the two graphs whose DP color function matches P at m=3")
    c.add_argument("--graph", choices=sorted(COUNTEREXAMPLES), action="append")
    c.add_argument("--m", type=parse_m_range, default=[4], help="m values for --scan")
    c.add_argument("--scan", action="store_true", help="add exploratory rows at --m")

    s = sub.add_parser("scan", parents=[common, search], help="compare P with the exhaustive minimum")
    s.add_argument("--spec", type=_spec_arg, required=True)
    s.add_argument("--m-range", "--m", type=parse_m_range, dest="m", required=True)

    o = sub.add_parser("oracle", parents=[common], help="count transversals of a cover file")
    o.add_argument("cover", type=Path)
    o.add_argument("--pin", action="append", default=[], help="cover vertex to pin, e.g. u:1")

    r = sub.add_parser("rearrange-check", parents=[common], help="random rearrangement-inequality suite")
    r.add_argument("--instances", type=int, default=1000)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--bound", type=int, default=3)
    r.add_argument("--n", type=int, default=3)
    return p


def run(argv: Optional[Sequence[str]] = None) -> tuple[RunReport, str]:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter_ns()
    if args.command == "values":
        rep = cmd_values(args.spec, args.m, args.which, _options(args), args.force_exhaustive)
    elif args.command == "verify-counterexamples":
        rep = cmd_verify_counterexamples(args.graph or sorted(COUNTEREXAMPLES),
                                         args.m if args.scan else (), _options(args))
    elif args.command == "scan":
        rep = cmd_scan(args.spec, args.m, _options(args))
    elif args.command == "oracle":
        rep = cmd_oracle(args.cover, args.pin)
    else:
        rep = cmd_rearrange_check(args.instances, args.seed, args.bound, args.n)
    rep.elapsed_us = (time.perf_counter_ns() - t0) // 1000
    return rep, args.format


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        rep, fmt = run(argv)
    except (OSError, ValueError) as exc:
        print(f"thetadp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(rep.render(fmt))
    if fmt == "json":
        sys.stdout.write("\n")
    for row in rep.rows:
        if row.get("verdict") == ERROR and row.get("note"):
            print(f"thetadp: {row['note']}", file=sys.stderr)
    return rep.exit_code()


if __name__ == "__main__":
    sys.exit(main())
