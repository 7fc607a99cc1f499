"""Command-line front end.

Commands: analyze, sweep, verify, hilbert, pullback-check.  All reports
are deterministic: JSON with sorted keys, CSV with fixed column order and
rows sorted by (d, a, prime, seed).  Exit codes: 0 success/consensus,
2 divergence across primes, 1 any error.
"""

import argparse
import io
import json
import sys
import time

from .poly import GradedRing, Polynomial
from .ideals import IdealGens, hilbert_fn, parse_ideal_file
from .betti import (betti_alternating, defect, length_of,
                    pullback_betti_check, NoPlateau)
from .nodal import analyze, build_example, default_kmax
from .verify import DEFAULT_PRIMES, DEFAULT_SEED, run_checks


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_primes(text: str) -> list:
    return [int(x) for x in text.split(",") if x]


def _parse_range(text: str) -> tuple:
    if "-" in text:
        lo, hi = text.split("-", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def consensus_compare(reports: list):
    """(consensus, divergent field names, minority prime per field)."""
    divergent = []
    minority = {}
    if not reports:
        return True, divergent, minority
    keys = [k for k in reports[0] if k != "prime"]
    for key in keys:
        vals = [json.dumps(r.get(key), sort_keys=True) for r in reports]
        if len(set(vals)) > 1:
            divergent.append(key)
            counts = {v: vals.count(v) for v in set(vals)}
            rare = min(counts, key=counts.get)
            minority[key] = [r["prime"] for r, v in zip(reports, vals) if v == rare]
    return not divergent, divergent, minority


def analyze_consensus(d: int, a: int, primes: list, seed: int,
                      kmax: int | None = None) -> dict:
    reports = [analyze(d, a, p, seed, kmax) for p in primes]
    ok, divergent, minority = consensus_compare(reports)
    return {
        "schema": 1,
        "command": "analyze",
        "consensus": ok,
        "divergent_fields": divergent,
        "minority_primes": minority,
        "reports": reports,
    }


SWEEP_COLUMNS = (
    "d", "a", "prime", "seed", "kmax", "length", "h_d", "defect_d",
    "tangent_expected_codim", "tangent_actual_codim", "tangent_excess",
    "jacobian_dim_d", "alexander_exponent", "alexander_bound", "ci_1_4_dm1",
    "dim_L0", "dim_L", "codim_L", "codim_L_vs_length", "codim_L_vs_h_d",
    "error",
)


def sweep_rows(d_lo: int, d_hi: int, a_fixed: int | None,
               primes: list, seed: int) -> list:
    rows = []
    for d in range(d_lo, d_hi + 1):
        a_values = [a_fixed] if a_fixed else list(range(4, d // 2 + 1))
        for a in a_values:
            for p in primes:
                try:
                    rows.append(analyze(d, a, p, seed))
                except Exception as exc:
                    rows.append({"d": d, "a": a, "prime": p, "seed": seed,
                                 "error": f"{type(exc).__name__}: {exc}"})
    rows.sort(key=lambda r: (r["d"], r["a"], r["prime"], r["seed"]))
    return rows


def rows_to_csv(rows: list) -> str:
    buf = io.StringIO()
    buf.write(",".join(SWEEP_COLUMNS) + "\n")
    for r in rows:
        cells = []
        for col in SWEEP_COLUMNS:
            v = r.get(col, "")
            if isinstance(v, bool):
                v = int(v)
            cells.append(str(v))
        buf.write(",".join(cells) + "\n")
    return buf.getvalue()


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def cmd_analyze(args) -> int:
    if args.d is None or args.a is None:
        raise UsageError("analyze requires --d and --a")
    if args.a < 4 or args.a > args.d / 2:
        raise UsageError(f"need 4 <= a <= d/2, got a={args.a} d={args.d}")
    payload = analyze_consensus(args.d, args.a, args.primes, args.seed, args.kmax)
    if args.format == "csv":
        _emit(rows_to_csv(payload["reports"]), args.out)
    else:
        _emit(_json(payload), args.out)
    return 0 if payload["consensus"] else 2


def cmd_sweep(args) -> int:
    d_lo, d_hi = args.d_range
    if d_lo < 8:
        raise UsageError("sweep needs d >= 8")
    rows = sweep_rows(d_lo, d_hi, args.a, args.primes, args.seed)
    if args.format == "json":
        _emit(_json({"schema": 1, "command": "sweep", "rows": rows}), args.out)
    else:
        _emit(rows_to_csv(rows), args.out)
    return 1 if any("error" in r for r in rows) else 0


def cmd_verify(args) -> int:
    t0 = time.time()
    results = run_checks(only=args.only, primes=tuple(args.primes),
                         seed=args.seed)
    if not results:
        raise UsageError(f"no check matches --only {args.only!r}")
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"{status}  {r.name:<{width}}  [{r.seconds:6.2f}s]  {r.detail}")
    lines.append(f"{sum(r.ok for r in results)}/{len(results)} checks passed "
                 f"in {time.time() - t0:.1f}s")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if all(r.ok for r in results) else 1


def cmd_hilbert(args) -> int:
    with open(args.ideal) as fh:
        ideal = parse_ideal_file(fh.read())
    kmax = args.kmax if args.kmax is not None else 12
    h = hilbert_fn(ideal, kmax)
    b = betti_alternating(h)
    lines = ["k h_I(k) B_k"]
    for k in range(kmax + 1):
        lines.append(f"{k} {h.h(k)} {b.b(k)}")
    try:
        length = length_of(h)
        lines.append(f"length {length}")
        for k in range(kmax + 1):
            rep = defect(h, length, k)
            if rep.delta:
                lines.append(f"defect {k} {rep.delta}")
    except NoPlateau:
        lines.append("length - (no plateau: table too short or not 0-dimensional)")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_pullback_check(args) -> int:
    if args.ideal:
        with open(args.ideal) as fh:
            ideal = parse_ideal_file(fh.read())
        d_for_kmax = max(ideal.degrees) + 1
    elif args.d is not None and args.a is not None:
        ring = GradedRing(3, args.primes[0])
        ideal = build_example(args.d, args.a, ring, args.seed).node_ideal
        d_for_kmax = args.d
    else:
        raise UsageError("pullback-check requires --ideal or both --d and --a")
    ring = ideal.ring
    kmax = args.kmax if args.kmax is not None else sum(ideal.degrees)
    t = args.t
    imgs = []
    for i in range(ring.nvars):
        v = Polynomial.variable(ring, i)
        acc = v
        for _ in range(t - 1):
            acc = acc * v
        imgs.append(acc)
    h = hilbert_fn(ideal, kmax)
    length = length_of(h)
    if args.k is not None:
        k = args.k
    else:
        k = max((kk for kk in range(ring.n, kmax + 1)
                 if h.h(kk - ring.n) != length), default=ring.n)
    rep = pullback_betti_check(ideal, t, imgs, k=k, kmax=kmax,
                               entry_guard=args.entry_guard)
    _emit(_json({"schema": 1, "command": "pullback-check", "report": rep}), args.out)
    ok = rep["betti_law_ok"] and rep.get("bound_ok", True)
    return 0 if ok else 1


def build_parser() -> _Parser:
    parser = _Parser(prog="nodalsurf", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
        sp.add_argument("--primes", type=_parse_primes,
                        default=list(DEFAULT_PRIMES))
        sp.add_argument("--kmax", type=int, default=None)
        sp.add_argument("--out", default=None)
        sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = sub.add_parser("analyze", help="full analysis of one (d, a) example")
    sp.add_argument("--d", type=int)
    sp.add_argument("--a", type=int)
    common(sp)
    sp.set_defaults(fn=cmd_analyze)

    sp = sub.add_parser("sweep", help="parameter sweep, CSV rows")
    sp.add_argument("--d", dest="d_range", type=_parse_range, default=(8, 10),
                    help="degree or range LO-HI")
    sp.add_argument("--a", type=int, default=None)
    common(sp)
    sp.set_defaults(fn=cmd_sweep, format="csv")

    sp = sub.add_parser("verify", help="run the theorem-verification suite")
    sp.add_argument("--only", default=None)
    common(sp)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("hilbert", help="Hilbert table of an ideal file")
    sp.add_argument("--ideal", required=True)
    common(sp)
    sp.set_defaults(fn=cmd_hilbert)

    sp = sub.add_parser("pullback-check", help="pullback Betti/defect laws")
    sp.add_argument("--ideal", default=None)
    sp.add_argument("--d", type=int, default=None)
    sp.add_argument("--a", type=int, default=None)
    sp.add_argument("--t", type=int, default=2)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--entry-guard", type=int, default=20_000_000)
    common(sp)
    sp.set_defaults(fn=cmd_pullback_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
