"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 "not found" (classify) or an
unexpected FAIL (verify-paper).
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from . import classic, dcong, icong, kcong, published, verify
from .arith import rat_str
from .model import TrapezoidD


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _int(s: str, lo: int) -> int:
    try:
        v = int(float(s)) if "e" in s.lower() else int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}")
    if v < lo:
        raise argparse.ArgumentTypeError(f"must be >= {lo}: {v}")
    return v


def _positive(s: str) -> int:
    return _int(s, 1)


def _nonneg(s: str) -> int:
    return _int(s, 0)


def _emit(obj: dict, as_json: bool, text: str):
    print(json.dumps(obj, sort_keys=True) if as_json else text)


def _tuple(t) -> str:
    return "(" + ",".join(rat_str(v) if not isinstance(v, int) else str(v) for v in t) + ")"


def _classify_i(n: int):
    wits = icong.witness_oracle(n)
    if not wits:
        return None
    return wits, {"n": n, "notion": "i", "congruent": True, "witnesses": [w.to_json() for w in wits]}


def _classify_k(n: int, k: int, bound: int):
    hit = kcong.find_k_witness(n, k, bound)
    if hit is None:
        return None
    t, source = hit
    return [t], {"n": n, "notion": "k", "k": k, "congruent": True, "source": source, "witnesses": [t.to_json()]}


def _classify_d(n: int, d: int, bound: int):
    if d == 0:
        T = classic.find_triangle(n, bound)
        if T is None:
            return None
        t, source = TrapezoidD(T.a, T.b, T.c, 0), "triangle"
    elif n != d * d:
        t, source = dcong.prop41_sides(n, d)
    elif d == 3 * n:
        t, source = dcong.thm16_sides(n), "thm16"
    else:
        t, source = dcong.search_points(n, d, x_bound=bound), "point"
        if t is None:
            return None
    return [t], {"n": n, "notion": "d", "d": d, "congruent": True, "source": source, "witnesses": [t.to_json()]}


def cmd_classify(args) -> int:
    n = args.n
    if args.notion == "i":
        hit = _classify_i(n)
    elif args.notion == "k":
        if args.k is None or args.k < 2:
            print("classify --notion k needs --k K with K >= 2", file=sys.stderr)
            return 1
        hit = _classify_k(n, args.k, args.bound)
    else:
        if args.d is None:
            print("classify --notion d needs --d D", file=sys.stderr)
            return 1
        hit = _classify_d(n, args.d, args.bound)
    label = {"i": "i", "k": f"{args.k}", "d": f"{args.d}"}[args.notion] + "-congruent"
    if hit is None:
        obj = {"n": n, "notion": args.notion, "congruent": False, "witnesses": []}
        _emit(obj, args.json, f"{label}: no witness found")
        return 2
    wits, obj = hit
    sides = wits[0].sides() if hasattr(wits[0], "sides") else (wits[0].a, wits[0].b, wits[0].c, wits[0].d)
    _emit(obj, args.json, f"{label}: yes; witness (a,b,c,d)={_tuple(sides)}")
    return 0


def cmd_verify(args) -> int:
    reports = verify.verify(args.scope)
    if args.json:
        print(json.dumps([r.to_json() for r in reports], sort_keys=True, indent=1))
    else:
        print(verify.render(reports))
    return verify.exit_code(reports, args.allow_errata)


def cmd_count(args) -> int:
    x = args.x
    if args.kind == "f":
        f = icong.count_f(x, args.mode)
        ratio = f * math.log(x) / x
        obj = {"kind": "f", "x": x, "mode": args.mode, "count": f, "ratio": round(ratio, 6),
               "limit": round(icong.C_LIMIT, 6), "gap": round(ratio - icong.C_LIMIT, 6)}
        text = f"f({x}) = {f}  [{args.mode}]\nf*log(x)/x = {ratio:.6f}  (1 + ln 2 = {icong.C_LIMIT:.6f})"
    elif args.kind == "g":
        g = icong.count_g(x)
        lo, hi = icong.g_bounds(x)
        obj = {"kind": "g", "x": x, "count": g, "lower": round(lo, 6), "upper": round(hi, 6)}
        text = f"g({x}) = {g}\nbounds: {lo:.3f} < g < {hi:.3f}"
    else:
        s = icong.intersection_set(x)
        obj = {"kind": "intersection", "x": x, "set": s}
        text = f"intersection up to {x}: {s}"
        if x == 100:
            ref = published.INTERSECTION_LT_100
            obj["missing_from_published"] = [n for n in s if n not in ref]
            obj["published_but_absent"] = [n for n in ref if n not in s]
            text += f"\nnot in published set: {obj['missing_from_published']}; " \
                    f"published but absent: {obj['published_but_absent']}"
    _emit(obj, args.json, text)
    return 0


def cmd_table(args) -> int:
    rows = [r for n in range(args.n_min, args.n_max + 1) for r in kcong.quartic_search(n, args.bound)]
    if args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["n", "k", "alpha", "beta"])
        w.writerows(rows)
    elif args.json:
        print(json.dumps([r._asdict() for r in rows], sort_keys=True))
    else:
        for n in range(args.n_min, args.n_max + 1):
            cells = ", ".join(f"({r.k}, {r.alpha}, {r.beta})" for r in rows if r.n == n)
            print(f"{n:>3}: {cells}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="trapcong", description="Congruent-number variants for right trapezoids.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="find a witness trapezoid for n")
    c.add_argument("n", type=_positive)
    c.add_argument("--notion", choices=["i", "k", "d"], required=True)
    c.add_argument("--k", type=int)
    c.add_argument("--d", type=_nonneg)
    c.add_argument("--bound", type=_positive, default=200, help="search bound for non-closed-form cases")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify-paper", help="recompute published claims and report differences")
    v.add_argument("--scope", choices=["all", *verify.SCOPES], default="all")
    v.add_argument("--json", action="store_true")
    v.add_argument("--allow-errata", action="store_true", help="known errata do not affect the exit code")
    v.set_defaults(func=cmd_verify)

    n = sub.add_parser("count", help="counting functions f, g and the intersection set")
    n.add_argument("kind", choices=["f", "g", "intersection"])
    n.add_argument("x", type=_positive, nargs="?", default=10**5)
    n.add_argument("--mode", choices=["star_forms", "classifier", "oracle"], default="star_forms")
    n.add_argument("--json", action="store_true")
    n.set_defaults(func=cmd_count)

    t = sub.add_parser("table", help="solutions of (k^2-1) n = alpha^4 - beta^4")
    t.add_argument("--bound", type=_positive, default=1000, help="largest k")
    t.add_argument("--n-min", type=_positive, default=2)
    t.add_argument("--n-max", type=_positive, default=10)
    fmt = t.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
