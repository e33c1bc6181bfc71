"""Command-line front end: ``bound``, ``verify``, ``constants`` (and ``kraw``).

Ranges accept comma lists and inclusive spans, e.g. ``--n 4,6..8``.  Machine
formats render rationals as ``p/q`` strings.  Exit codes: 0 success, 1 a
verification check failed, 2 invalid parameters.
"""
import argparse
import csv
import io
import json
import sys
from itertools import product

from .finite_field import is_prime
from .inequality_constants import cw_constants
from .lp_engine import classical_lp_bound, cw_bound, improved_bound
from .polynomials import kraw_table
from .rational import fmt_rational
from .simplex import DEFAULT_PIVOT_LIMIT
from . import suites

BOUND_COLUMNS = ["q", "n", "d", "w", "method", "bound", "real_optimum"]
METHODS = {"classical": "classical", "improved": "improved", "cw": "constant-weight"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_range(text):
    """``"2,4..6"`` -> [2, 4, 5, 6] (sorted, deduplicated)."""
    values = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise UsageError(f"empty item in range {text!r}")
        try:
            if ".." in part:
                lo, hi = (int(v) for v in part.split(".."))
                if lo > hi:
                    raise UsageError(f"empty span {part!r}")
                values.update(range(lo, hi + 1))
            else:
                values.add(int(part))
        except ValueError:
            raise UsageError(f"not an integer range: {text!r}") from None
    return sorted(values)


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj):
    return json.dumps(obj, indent=1) + "\n"


def _table_text(header, rows):
    rows = [[str(v) for v in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(wd) for h, wd in zip(header, widths))]
    lines += ["  ".join(v.rjust(wd) for v, wd in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


def parse_bound_csv(text):
    """Read the CSV emitted by ``bound`` back into header and rows."""
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


def emit_bound_csv(header, rows):
    return _csv_text(header, rows)


# -- bound ---------------------------------------------------------------------

def _bound_params(args):
    method = args.method
    if method == "cw" and args.w is None:
        raise UsageError("--w is required with --method cw")
    if method != "cw" and args.w is not None:
        raise UsageError("--w is only meaningful with --method cw")
    qs, ns, ds = parse_range(args.q), parse_range(args.n), parse_range(args.d)
    ws = parse_range(args.w) if args.w is not None else [None]
    if min(qs) < 2:
        raise UsageError("q must be >= 2")
    combos = [(q, n, d, w) for q, n, d, w in product(qs, ns, ds, ws)
              if n >= 1 and 1 <= d <= n and (w is None or 1 <= w <= n)]
    if not combos:
        raise UsageError("no valid (q, n, d[, w]) combination in the given ranges")
    return combos


def run_bound(args):
    rows, results = [], []
    for q, n, d, w in _bound_params(args):
        if args.method == "classical":
            r = classical_lp_bound(q, n, d, args.pivot_limit)
        elif args.method == "improved":
            r = improved_bound(q, n, d, args.pivot_limit)
        else:
            r = cw_bound(q, n, d, w, binary_parity=False if args.no_binary_parity else None,
                         pivot_limit=args.pivot_limit)
        results.append(r)
        rows.append([q, n, d, "" if w is None else w, r.method, r.bound,
                     "" if r.real_optimum is None else fmt_rational(r.real_optimum)])
    if args.format == "json":
        return _json_text([r.to_json() for r in results])
    if args.format == "csv":
        return _csv_text(BOUND_COLUMNS, rows)
    text = _table_text(BOUND_COLUMNS, rows)
    warnings = sorted({r.warning for r in results if r.warning})
    return text + "".join(f"warning: {w}\n" for w in warnings)


# -- verify --------------------------------------------------------------------

def _verify_report(args):
    suite = args.suite
    if suite in ("delsarte", "cw"):
        qs = parse_range(args.q) if args.q else [2, 3, 5]
        bad = [q for q in qs if not is_prime(q)]
        if bad:
            raise UsageError(f"oracle suites need prime q, got {bad[0]}")
        if args.n_max < 2 or args.size_max < 2 or args.samples < 0:
            raise UsageError("need --n-max >= 2, --size-max >= 2, --samples >= 0")
        return suites.SUITES[suite](qs=qs, n_max=args.n_max, size_max=args.size_max,
                                    samples=args.samples, seed=args.seed)
    if suite == "prop21":
        ps = parse_range(args.p) if args.p else [2, 3, 5, 7]
        bad = [p for p in ps if not is_prime(p)]
        if bad:
            raise UsageError(f"--p values must be prime, got {bad[0]}")
        if args.j_max < 1 or max((p - 1) ** args.j_max for p in ps) > 10**5:
            raise UsageError("--j-max out of range")
        return suites.prop21_suite(ps, args.j_max)
    if suite == "balance":
        return suites.balance_suite()
    return suites.ostergard_suite()


def run_verify(args):
    report = _verify_report(args)
    if args.format == "json":
        text = _json_text(report.to_json())
    elif args.format == "csv":
        text = _csv_text(["check", "params", "expected", "actual", "pass"],
                         [[e["check"], json.dumps(e["params"], sort_keys=True), e["expected"],
                           e["actual"], e["pass"]] for e in report.to_json()])
    else:
        lines = [f"{name}: {p}/{t} passed" for name, (p, t) in report.counts().items()]
        for f in report.failures():
            lines.append(f"FAILED {f.check} {json.dumps(f.params, sort_keys=True)}: "
                         f"actual {fmt_rational(f.actual)} {f.relation} "
                         f"expected {fmt_rational(f.expected)}")
        lines.append("PASS" if report.passed else "FAIL")
        text = "\n".join(lines) + "\n"
    return text, (0 if report.passed else 1)


# -- constants / kraw ------------------------------------------------------------

CONST_COLUMNS = ["q", "n", "w", "M", "k", "q_k", "r_k", "s_k", "t_k", "s1_k", "t1_k",
                 "T1", "T2", "T3", "T"]
KRAW_COLUMNS = ["q", "n", "k", "x", "P", "P_minus", "P_plus"]


def run_kraw(args, fmt):
    qs, ns = parse_range(args.q), parse_range(args.n)
    if min(qs) < 2 or min(ns) < 1:
        raise UsageError("need q >= 2 and n >= 1")
    rows = []
    for q, n in product(qs, ns):
        for k, x, p, pm, pp in kraw_table(q, n):
            rows.append([q, n, k, x, p, pm, pp])
    if fmt == "text":
        return _table_text(KRAW_COLUMNS, rows)
    rows = [r[:4] + [fmt_rational(v) for v in r[4:]] for r in rows]
    if fmt == "csv":
        return _csv_text(KRAW_COLUMNS, rows)
    return _json_text([dict(zip(KRAW_COLUMNS, r)) for r in rows])


def run_constants(args):
    if args.kraw:
        return run_kraw(args, args.format)
    missing = [f for f in ("w", "M", "k") if getattr(args, f) is None]
    if missing:
        raise UsageError(f"missing --{missing[0]} (or pass --kraw)")
    combos = [c for c in product(parse_range(args.q), parse_range(args.n), parse_range(args.w),
                                 parse_range(args.M), parse_range(args.k))
              if c[0] >= 2 and 0 <= c[2] <= c[1] and c[3] >= 1 and 1 <= c[4] <= c[1]]
    if not combos:
        raise UsageError("no valid (q, n, w, M, k) combination in the given ranges")
    sets = [cw_constants(*c) for c in combos]
    rows = [[getattr(s, col) for col in CONST_COLUMNS] for s in sets]
    if args.format == "json":
        return _json_text([s.to_json() for s in sets])
    if args.format == "csv":
        return _csv_text(CONST_COLUMNS, rows)
    return _table_text(CONST_COLUMNS, rows)


# -- entry point -----------------------------------------------------------------

def build_parser():
    parser = _Parser(prog="delsarte", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        p.add_argument("--output", help="write to this path instead of stdout")

    b = sub.add_parser("bound", help="LP upper bounds on code sizes")
    b.add_argument("--q", required=True)
    b.add_argument("--n", required=True)
    b.add_argument("--d", required=True)
    b.add_argument("--w")
    b.add_argument("--method", choices=sorted(METHODS), default="classical")
    b.add_argument("--pivot-limit", type=int, default=DEFAULT_PIVOT_LIMIT)
    b.add_argument("--no-binary-parity", action="store_true",
                   help="do not force B_i = 0 for odd i in binary constant-weight systems")
    common(b)

    v = sub.add_parser("verify", help="check identities and inequalities on explicit codes")
    v.add_argument("--suite", choices=sorted(suites.SUITES), required=True)
    v.add_argument("--q")
    v.add_argument("--p")
    v.add_argument("--n-max", type=int, default=5)
    v.add_argument("--size-max", type=int, default=8)
    v.add_argument("--samples", type=int, default=100)
    v.add_argument("--j-max", type=int, default=4)
    v.add_argument("--seed", type=int, default=0)
    common(v)

    c = sub.add_parser("constants", help="constant-weight constants or Krawtchouk tables")
    c.add_argument("--q", required=True)
    c.add_argument("--n", required=True)
    c.add_argument("--w")
    c.add_argument("--M")
    c.add_argument("--k")
    c.add_argument("--kraw", action="store_true")
    common(c)

    kr = sub.add_parser("kraw", help="P_k, P_k^- and P_k^+ tables")
    kr.add_argument("--q", required=True)
    kr.add_argument("--n", required=True)
    common(kr)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "pivot_limit", 1) < 1:
            raise UsageError("--pivot-limit must be positive")
        code = 0
        if args.command == "bound":
            text = run_bound(args)
        elif args.command == "verify":
            text, code = run_verify(args)
        elif args.command == "constants":
            text = run_constants(args)
        else:
            text = run_kraw(args, args.format)
    except (UsageError, ValueError) as exc:
        print(f"delsarte: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
