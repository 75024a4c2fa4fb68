"""Command line entry point.

Exit codes: 0 success, 2 invalid input, 3 oracle budget exceeded,
4 verification mismatch.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .families import (
    FamilyReport,
    builtin_families,
    enumerate_triplets,
    get_family,
    load_family,
    verify_family,
)
from .lattice import DInvariantResult, d_invariant, d_invariant_oracle, region_dump
from .oracle import (
    GOOD,
    OracleDisagreement,
    OracleInfeasible,
    classify_terminals,
    default_budget,
    oracle_d,
    window_size,
)
from .plumbing import PlumbingGraph, build_asl_graph
from .triplet import Triplet

EXIT_OK, EXIT_INVALID, EXIT_BUDGET, EXIT_MISMATCH = 0, 2, 3, 4

ASL_LABELLING = ("id 0 = -p vertex; id 1 = centre; ids 2..q = q-arm outward; "
                 "ids q+1..q+r-1 = r-arm outward (q+r-1 is its free end)")


class Mismatch(Exception):
    pass


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        lo = int(lo)
        hi = int(hi) if sep else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def frac_str(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def result_json(res: DInvariantResult) -> dict:
    t = res.triplet
    return {
        "p": t.p, "q": t.q, "r": t.r,
        "d": res.d,
        "method": res.method,
        "argmax": None if res.argmax is None else {"a": res.argmax.a, "m": res.argmax.m},
        "max_f": res.max_f,
        "qhb_obstructed": res.qhb_obstructed,
        "pretzel": res.pretzel_note,
    }


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# -- commands -----------------------------------------------------------------

def cmd_d(args) -> str:
    t = Triplet(args.p, args.q, args.r)
    if args.method == "oracle":
        return _dumps(result_json(d_invariant_oracle(t, args.budget, args.workers)))
    res = d_invariant(t)
    out = result_json(res)
    if args.method == "both":
        orc = d_invariant_oracle(t, args.budget, args.workers)
        out["d_oracle"] = orc.d
        out["match"] = orc.d == res.d
        if not out["match"]:
            raise Mismatch(_dumps(out))
    return _dumps(out)


def triplet_rows(p: int):
    for t in enumerate_triplets(p):
        yield t, t.q - t.p, d_invariant(t).d


def cmd_triplets(args) -> str:
    rows = [(t.p, t.q, t.r, s, d) for t, s, d in triplet_rows(args.p)]
    if args.format == "json":
        return _dumps([dict(zip("pqrsd", row)) for row in rows])
    return _csv(["p", "q", "r", "s", "d"], rows)


def family_csv(report: FamilyReport, with_expected: bool) -> str:
    header = ["n", "p", "q", "r", "d_computed"]
    if with_expected:
        header += ["d_expected", "match"]
    header += ["argmax_a", "argmax_m"]
    rows = []
    for row in report.rows:
        line = [row.n, row.triplet.p, row.triplet.q, row.triplet.r, row.d_computed]
        if with_expected:
            line += [row.d_expected, str(row.match).lower()]
        am = row.argmax
        line += ["" if am is None else am.a, "" if am is None else am.m]
        rows.append(line)
    text = _csv(header, rows)
    positive = sum(1 for row in report.rows if row.d_computed > 0)
    text += (f"# family {report.family}: {len(report.rows)} rows, "
             f"{report.mismatches} mismatches, {positive} with d > 0\n")
    return text


def cmd_family(args) -> str:
    spec = load_family(args.config) if args.config else get_family(args.name)
    report = verify_family(spec, args.n)
    text = family_csv(report, spec.expected_d is not None)
    bad = [row for row in report.rows if row.match is False or not row.bound_ok or row.d_computed <= 0]
    if bad:
        raise Mismatch(text)
    return text


REGION_COLUMNS = ["m", "delta", "center_num", "center_den", "radius_sq_num", "radius_sq_den",
                  "nearest_odd", "tie", "f_at_best", "in_region"]


def region_csv(t: Triplet) -> str:
    slices = region_dump(t)
    rows = [[s.m, s.delta, s.center.numerator, s.center.denominator, s.radius_sq.numerator,
             s.radius_sq.denominator, s.nearest_odd, str(s.tie).lower(), s.f_at_best,
             str(s.in_region).lower()] for s in slices]
    res = d_invariant(t)
    return _csv(REGION_COLUMNS, rows) + (
        f"# argmax a={res.argmax.a} m={res.argmax.m} max_f={res.max_f} d={res.d}\n")


def cmd_region(args) -> str:
    t = Triplet(args.p, args.q, args.r)
    if t.p % 2 == 0:
        raise ValueError("region needs odd p")
    return region_csv(t)


def graph_text(g: PlumbingGraph, fmt: str) -> str:
    if fmt == "dot":
        return f"// {ASL_LABELLING}\n" + g.to_dot()
    return _dumps({"labelling": ASL_LABELLING, **g.to_json()})


def cmd_graph(args) -> str:
    return graph_text(build_asl_graph(Triplet(args.p, args.q, args.r)), args.format)


def _mutate(g: PlumbingGraph) -> PlumbingGraph:
    w = list(g.weights)
    w[0] -= 2
    return PlumbingGraph(w, g.edges)


def simple_linear_check(t: int) -> dict:
    """Good initial vectors on A_t are zero or a single 2; terminals are mirrored."""
    table = classify_terminals(t)
    problems = 0
    for k, out in table.items():
        twos = [i for i, x in enumerate(k) if x == 2]
        expect_good = len(twos) <= 1
        if (out.verdict == GOOD) != expect_good:
            problems += 1
        elif expect_good:
            want = [0] * t
            if twos:
                want[t - 1 - twos[0]] = -2
            problems += out.terminal != tuple(want)
    return {"t": t, "initial_vectors": len(table), "ok": problems == 0}


def oracle_check(max_budget: int, max_p: int = 5, max_t: int = 10,
                 inject_fault: bool = False, workers: int = 1) -> dict:
    checked, skipped = [], []
    for p in range(2, max_p + 1):
        for t in enumerate_triplets(p):
            g = build_asl_graph(t)
            if window_size(g) > max_budget:
                skipped.append([t.p, t.q, t.r])
                continue
            if inject_fault:
                g = _mutate(g)
            start = time.perf_counter()
            rec = {"triplet": [t.p, t.q, t.r], "d_fast": d_invariant(t).d}
            try:
                res = oracle_d(g, budget=max_budget, workers=workers)
                rec["d_oracle"] = int(res.d_value) if res.d_value.denominator == 1 else frac_str(res.d_value)
                rec["match"] = rec["d_oracle"] == rec["d_fast"]
                rec["enumerated"] = res.enumerated
            except (ValueError, OracleDisagreement) as exc:
                rec.update(d_oracle=None, match=False, enumerated=0, error=str(exc))
            rec["seconds"] = round(time.perf_counter() - start, 3)
            checked.append(rec)
    linear = [simple_linear_check(t) for t in range(1, max_t + 1)]
    ok = all(r["match"] for r in checked) and all(r["ok"] for r in linear)
    return {"triplets": checked, "skipped": skipped, "simple_linear": linear, "all_match": ok}


def cmd_oracle_check(args) -> str:
    budget = args.max_budget if args.max_budget is not None else default_budget()
    summary = oracle_check(budget, args.max_p, args.max_t, args.inject_fault, args.workers)
    text = _dumps(summary)
    if not summary["all_match"]:
        raise Mismatch(text)
    return text


# -- wiring -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="brieskorn",
                                 description="d-invariants of Brieskorn spheres with pq+pr-qr=1")
    sub = ap.add_subparsers(dest="command", required=True)

    def triple(sp):
        for name in "pqr":
            sp.add_argument(name, type=int)

    def budget(sp):
        sp.add_argument("--budget", type=int, default=None,
                        help="oracle enumeration cap (default 2^28 or $BRIESKORN_ORACLE_BUDGET)")
        sp.add_argument("--workers", type=int, default=1)

    sp = sub.add_parser("d", help="d-invariant of one triple")
    triple(sp)
    sp.add_argument("--method", choices=["fast", "oracle", "both"], default="fast")
    budget(sp)
    sp.set_defaults(func=cmd_d)

    sp = sub.add_parser("triplets", help="all triplets with a given p")
    sp.add_argument("p", type=int)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.set_defaults(func=cmd_triplets)

    sp = sub.add_parser("family", help="verify a parametric family")
    sp.add_argument("name", nargs="?", default=None,
                    help="one of: " + ", ".join(f.name for f in builtin_families()))
    sp.add_argument("--config", help="JSON family spec instead of a built-in name")
    sp.add_argument("--n", type=parse_range, default=range(1, 11), help="N or A..B")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("region", help="per-slice region data (CSV)")
    triple(sp)
    sp.set_defaults(func=cmd_region)

    sp = sub.add_parser("graph", help="ASL plumbing graph")
    triple(sp)
    sp.add_argument("--format", choices=["json", "dot"], default="json")
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("oracle-check", help="fast method vs brute force on small triples")
    sp.add_argument("--max-budget", type=int, default=None)
    sp.add_argument("--max-p", type=int, default=5)
    sp.add_argument("--max-t", type=int, default=10)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_oracle_check)

    for sp in sub.choices.values():
        sp.add_argument("-o", "--output", help="write to file instead of stdout")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "family" and not (args.name or args.config):
        print("family: give a name or --config", file=sys.stderr)
        return EXIT_INVALID
    try:
        text = args.func(args)
        code = EXIT_OK
    except Mismatch as exc:
        text, code = str(exc), EXIT_MISMATCH
    except OracleInfeasible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OracleDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
