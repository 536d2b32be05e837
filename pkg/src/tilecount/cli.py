"""Command-line front end: ``tilecount <command> ...``.

Exit status: 0 success, 1 a verification failed (mismatch, violation or a
probe hit), 2 usage error, 3 work cap exceeded.

CSV outputs:
  sequence  n,total_count,recurrence,match
  bounds    n,alpha,count_bits,bound_log2,verdict          (--table upper)
            n,alpha,p,count_alpha_over_p,count_alpha,verdict  (--table partial)
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence

from . import bounds, checks
from .core import BoxShape, TilingError, format_tiling, tiling_to_json
from .counting import count_full, count_ie, default_counter, divisor_recurrence, total_count
from .enumeration import DEFAULT_LIMIT, enumerate_capped
from .multidim import count_box_total, enumerate_box_total
from .numtheory import divisors, factorize
from .oracle import DEFAULT_NODE_CAP, WorkCapExceeded, conjecture_probe, count_tilings
from .subtile import subtile_bound_check

OK, FAILED, USAGE, CAPPED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _pmap(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (8 * jobs))))


def _box_arg(args) -> BoxShape:
    if args.dims:
        try:
            sides = [int(x) for x in args.dims.split(",")]
        except ValueError:
            raise UsageError(f"bad --dims {args.dims!r}") from None
        return BoxShape(*sides)
    if args.n is None:
        raise UsageError("give --n or --dims")
    return BoxShape(args.n)


def _print_count(label: str | None, value: int, out) -> None:
    text = str(value) if label is None else f"{label}: {value}"
    if value.bit_length() > 64:
        text += f" (bits: {value.bit_length()})"
    print(text, file=out)


# --- commands ---------------------------------------------------------------


def cmd_count(args, out) -> int:
    box = _box_arg(args)
    a = args.alpha
    if a < 1:
        raise UsageError("--alpha must be positive")
    one_dim = box.dim == 1
    methods = {
        "psi": lambda: count_full(a, box.sides[0]) if one_dim else count_box_total(a, box),
        "ie": lambda: count_ie(a, box.sides[0]) if one_dim else count_box_total(a, box, count_ie),
        "oracle": lambda: count_tilings(a, box, node_cap=args.node_cap),
    }
    if args.method != "all":
        _print_count(None, methods[args.method](), out)
        return OK
    values = {name: f() for name, f in methods.items()}
    if len(set(values.values())) == 1:
        _print_count(None, values["psi"], out)
        return OK
    for name, v in values.items():
        _print_count(name, v, out)
    print("MISMATCH", file=out)
    return FAILED


def cmd_enumerate(args, out) -> int:
    box = _box_arg(args)
    limit = args.limit
    if box.dim == 1:
        tilings, truncated = enumerate_capped(args.alpha, box.sides[0], limit)
    else:
        every = enumerate_box_total(args.alpha, box)
        tilings, truncated = every[:limit], len(every) > limit
    if args.format == "json":
        json.dump({"tilings": [tiling_to_json(t) for t in tilings], "truncated": truncated}, out)
        out.write("\n")
    else:
        for t in tilings:
            print(format_tiling(t), file=out)
        if truncated:
            print(f"# truncated after {limit} tilings", file=out)
    return OK


def _sequence_row(n: int) -> tuple[int, int]:
    return n, total_count(n)


def cmd_sequence(args, out) -> int:
    rec = divisor_recurrence(args.max)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "total_count", "recurrence", "match"])
    bad = 0
    for n, t in _pmap(_sequence_row, range(1, args.max + 1), args.jobs):
        ok = t == rec[n]
        bad += not ok
        w.writerow([n, t, rec[n], int(ok)])
    return FAILED if bad else OK


def _bound_rows(n: int) -> list[bounds.BoundRow]:
    return list(bounds.upper_bound_sweep(n, min_n=n))


def _partial_rows(n: int) -> list[tuple]:
    rows = []
    for a in divisors(n):
        for p in factorize(a).primes:
            v = bounds.partial_order_check(a, n, p)
            if v is not bounds.Verdict.HYPOTHESES_FAIL:
                rows.append((n, a, p, count_full(a // p, n), count_full(a, n), v.value))
    return rows


def cmd_bounds(args, out) -> int:
    ns = range(1, args.max_n + 1)
    if args.table == "upper":
        rows = [r for chunk in _pmap(_bound_rows, ns, args.jobs) for r in chunk]
        out.write(bounds.rows_to_csv(rows))
        bad = [r for r in rows if r.verdict is bounds.Verdict.VIOLATION]
        summary = {"table": "upper", "pairs": len(rows), "violations": [(r.n, r.alpha) for r in bad]}
    else:
        rows = [r for chunk in _pmap(_partial_rows, ns, args.jobs) for r in chunk]
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "alpha", "p", "count_alpha_over_p", "count_alpha", "verdict"])
        w.writerows(rows)
        bad = [r[:3] for r in rows if r[-1] == bounds.Verdict.VIOLATION.value]
        summary = {"table": "partial", "checked": len(rows), "violations": bad}
    print(json.dumps(summary), file=sys.stderr)
    return FAILED if bad else OK


def _family_reports(args) -> Iterable[dict]:
    if args.kind == "2k":
        for k in range(1, args.k + 1):
            r = bounds.family_2k(k)
            yield {"k": k, "alpha": r.alpha, "n": r.n, "count": r.count,
                   "threshold": float(r.threshold), "holds": r.holds}
    elif args.kind == "ie9":
        for k in range(1, args.k + 1):
            for j in range(k // 2 + 1):
                yield {"k": k, "alpha": 3 * 2**j, **bounds.ie2k9_check(k, 3 * 2**j).to_dict()}
    elif args.kind == "general":
        m = args.m or 3
        pm = bounds.first_primes(m)[-1]
        for k in range(1, args.k + 1):
            for a in divisors(bounds.family_n(m, k)):
                if a % pm == 0:
                    yield {"m": m, "k": k, "alpha": a, **bounds.ie_general_check(m, k, a).to_dict()}
    else:
        for m in range(1, (args.m or 3) + 1):
            for k in range(1, args.k + 1):
                yield bounds.lower_family_report(m, k).to_dict()


def cmd_family(args, out) -> int:
    if args.k < 1 or (args.m is not None and args.m < 1):
        raise UsageError("--k and --m must be positive")
    failed = False
    for rep in _family_reports(args):
        failed |= rep.get("holds") is False
        print(json.dumps(rep), file=out)
    return FAILED if failed else OK


def _subtile_row(job: tuple) -> dict:
    amb, B, n, ap = job
    r = subtile_bound_check(ap, amb, n, B)
    return {"A": list(amb), "B": list(B), "oracle_count": r.oracle_count, "bound": r.bound,
            "injective": r.injective, "images_valid": r.images_valid, "holds": r.holds}


def cmd_subtile(args, out) -> int:
    if args.n % args.alpha or args.alpha % args.alpha_prime:
        raise UsageError("need alpha | n and alpha_prime | alpha")
    tilings, truncated = enumerate_capped(args.alpha, args.n, DEFAULT_LIMIT)
    if truncated:
        raise WorkCapExceeded(f"more than {DEFAULT_LIMIT} ambient tilings")
    jobs = [(t.A.ints(), t.B.ints(), args.n, args.alpha_prime) for t in tilings]
    failed = False
    for row in _pmap(_subtile_row, jobs, args.jobs):
        failed |= not row["holds"]
        print(json.dumps(row), file=out)
    return FAILED if failed else OK


def cmd_probe(args, out) -> int:
    r = conjecture_probe(args.alpha, args.n, args.window, max_subsets=args.max_subsets,
                         node_cap=args.node_cap)
    print(r.to_json(), file=out)
    if r.violations:
        print(f"found {len(r.violations)} set(s) with more tilings than [{args.n}]", file=sys.stderr)
        return FAILED
    return OK


def cmd_selftest(args, out) -> int:
    names = args.only or None
    if names:
        unknown = set(names) - set(checks.SELFTEST)
        if unknown:
            raise UsageError(f"unknown checks {sorted(unknown)}; choose from {list(checks.SELFTEST)}")
    results = checks.run_selftest(names)
    for r in results:
        print(r.line(), file=out)
    return OK if all(r.ok for r in results) else FAILED


# --- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tilecount",
        description=__doc__.split("\n\n")[0],
        epilog=__doc__.split("\n\n", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    # accepted both before and after the command name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="worker processes for sweeps (default 1)")
    common.add_argument("--node-cap", type=int, default=argparse.SUPPRESS,
                        help=f"search-node limit for the brute-force oracle (default {DEFAULT_NODE_CAP})")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps (default 1)")
    p.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP,
                   help="search-node limit for the brute-force oracle")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    def region(sp):
        sp.add_argument("--alpha", type=int, required=True)
        sp.add_argument("--n", type=int)
        sp.add_argument("--dims", help="box sides, comma separated, e.g. 3,2")

    c = add("count", help="number of tilings")
    region(c)
    c.add_argument("--method", choices=["psi", "ie", "oracle", "all"], default="psi")
    c.set_defaults(fn=cmd_count)

    e = add("enumerate", help="list tilings in tile order")
    region(e)
    e.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.set_defaults(fn=cmd_enumerate)

    s = add("sequence", help="total counts against the divisor recurrence (CSV)")
    s.add_argument("--max", type=int, required=True)
    s.set_defaults(fn=cmd_sequence)

    b = add("bounds", help="upper-bound or partial-order sweep (CSV)")
    b.add_argument("--max-n", type=int, required=True)
    b.add_argument("--table", choices=["upper", "partial"], default="upper")
    b.set_defaults(fn=cmd_bounds)

    f = add("family", help="lower-bound family reports (JSON lines)")
    f.add_argument("--kind", choices=["2k", "ie9", "general", "lower"], required=True)
    f.add_argument("--k", type=int, required=True, help="largest k")
    f.add_argument("--m", type=int, help="number of primes (general, lower)")
    f.set_defaults(fn=cmd_family)

    t = add("subtile", help="tilings of each tile of [n] against tilings of [alpha]")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--alpha", type=int, required=True)
    t.add_argument("--alpha-prime", type=int, required=True)
    t.set_defaults(fn=cmd_subtile)

    q = add("probe", help="search small sets C for more tilings than [|C|]")
    q.add_argument("--alpha", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--window", type=int, required=True)
    q.add_argument("--max-subsets", type=int, default=10**6)
    q.set_defaults(fn=cmd_probe)

    st = add("selftest", help="run the invariant checks at desk scale")
    st.add_argument("--only", nargs="*", metavar="CHECK", help=f"subset of {', '.join(checks.SELFTEST)}")
    st.set_defaults(fn=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be positive")
    try:
        code = args.fn(args, out)
    except UsageError as e:
        parser.error(str(e))
    except WorkCapExceeded as e:
        print(f"work cap exceeded: {e}", file=sys.stderr)
        return CAPPED
    except (TilingError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    counter = default_counter()
    if counter.cache_path:
        counter.save()
    return code


if __name__ == "__main__":
    sys.exit(main())
