"""Command-line front end.

    cotangent series cone --d 4 --order 4 --json
    cotangent dim t --target cone-multigraded --d 5 --R 5,2
    cotangent verify --d 3 --max-height 4

Exit codes: 0 ok, 1 verification mismatch, 2 bad usage, 3 integrity failure.
"""

from __future__ import annotations

import argparse
import sys

from cotangent import formulas as F
from cotangent import oracle
from cotangent.lattice import ConeContext, MultiDegree, in_lambda_plus
from cotangent.series import IntegrityError, UniSeries, dumps

TARGETS = ["fatpoint", "fatpoint-module", "cone", "cone-multigraded", "partition", "quotient"]
QUANTITIES = ["t", "t0", "t1", "t2", "c", "harr"]


class UsageError(ValueError):
    pass


def _parse_R(text: str) -> MultiDegree:
    try:
        i, k = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"R must look like i,k (got {text!r})")
    return MultiDegree(i, k)


def _m(args) -> int:
    m = args.m if args.m is not None else args.d - 1
    if m < 2:
        raise UsageError(f"m must be >= 2 (got {m})")
    return m


def _ctx(args) -> ConeContext:
    if args.d < 3:
        raise UsageError(f"d must be >= 3 (got {args.d})")
    return ConeContext(args.d)


def _need_tau(args, target):
    if args.tau is None:
        raise UsageError(f"--tau is required for target {target}")
    return args.tau


def _check_order(order: int):
    if order < 0:
        raise UsageError(f"order must be >= 0 (got {order})")


def compute_series(args):
    """The series requested by a ``series`` command, and the d to record in its JSON."""
    t, order = args.target, args.order
    _check_order(order)
    if t == "fatpoint":
        m = _m(args)
        return F.q_fat_point(m, order), m + 1
    if t == "fatpoint-module":
        m = _m(args)
        return F.p_fat_point(m, order), m + 1
    ctx = _ctx(args)
    if t == "cone":
        return F.p_cone(ctx.d, order), ctx.d
    if t == "cone-multigraded":
        cut = args.height_cut if args.height_cut is not None else order
        _check_order(cut)
        return F.p_tilde_cone(ctx, cut), ctx.d
    if t == "partition":
        return F.p_partition_curve(F.PartitionCurveSpec(ctx.d, _need_tau(args, t)), order), ctx.d
    if t == "quotient":
        return F.p_quotient(F.QuotientSpec(ctx.d, _need_tau(args, t)), order), ctx.d
    raise UsageError(f"unknown target {t!r}")


def render_table(series) -> str:
    if isinstance(series, UniSeries):
        rows = [("n", "dim")] + [(str(n), str(c)) for n, c in sorted(series.coeffs.items())]
    else:
        rows = [("i", "k", "dim")] + [(str(R.i), str(R.k), str(c)) for R, c in series.terms()]
    widths = [max(len(r[j]) for r in rows) for j in range(len(rows[0]))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in rows)


def render_json(series, d) -> str:
    return dumps(series, d)


def _require_R(args, ctx, cone_only: bool = True) -> MultiDegree:
    if args.R is None:
        raise UsageError("--R is required")
    if cone_only and not in_lambda_plus(ctx, args.R):
        raise UsageError(f"R={args.R} is not in Lambda_+ for d={ctx.d}")
    return args.R


def compute_dim(args) -> int:
    q = args.quantity
    if q in ("t0", "t1", "t2"):
        ctx = _ctx(args)
        R = _require_R(args, ctx, cone_only=False)
        return {"t0": F.t0_dim, "t1": F.t1_dim, "t2": F.t2_dim}[q](ctx, R)
    if q == "c":
        if args.R is not None:
            ctx = _ctx(args)
            R = _require_R(args, ctx)
            if args.oracle:
                return oracle.shuffle_harrison_dim(ctx.d - 1, R.k, R=R)
            return F.multigraded_harrison_dim(ctx, R)
        m, n = _m(args), _need_n(args)
        return oracle.shuffle_harrison_dim(m, n) if args.oracle else F.fat_point_harrison_dim(m, n)
    if q == "harr":
        m, n = _m(args), _need_n(args)
        if args.oracle:
            return oracle.fat_point_harrison_A_dims(m, n)[n - 1]
        return F.p_fat_point(m, n - 1)[n - 1]
    # q == "t"
    target = args.target
    if target == "cone-multigraded":
        ctx = _ctx(args)
        R = _require_R(args, ctx)
        n = args.n if args.n is not None else R.k
        if args.oracle:
            if n < 2:
                raise UsageError("the toric oracle computes T^n for n >= 2")
            return oracle.toric_T_dim(ctx, R, n)
        return F.p_tilde_cone(ctx, R.k)[R] if n == R.k else 0
    n = _need_n(args, low=0)
    if target == "fatpoint-module" and args.oracle:
        return oracle.fat_point_harrison_A_dims(_m(args), n + 1)[n]
    args.order = n
    series, _ = compute_series(args)
    return series[n]


def _need_n(args, low: int = 1) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < low:
        raise UsageError(f"n must be >= {low} (got {args.n})")
    return args.n


def run_verify(args, out) -> int:
    from cotangent.acceptance import run_all
    from cotangent.verify import verify_cone

    ok = True
    if args.acceptance:
        for r in run_all():
            print(r.line(), file=out)
            ok &= r.ok and r.in_budget
    else:
        _ctx(args)
        if args.max_height < 1:
            raise UsageError("max-height must be >= 1")
        reports, glob = verify_cone(args.d, args.max_height)
        for rep in reports:
            print(rep.line(), file=out)
            ok &= rep.ok
        for c in glob:
            print(f"{'PASS' if c.ok else 'FAIL'} {c.name}", file=out)
            ok &= c.ok
    print("all checks passed" if ok else "MISMATCH", file=out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cotangent", description="Cotangent cohomology series and oracle checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--d", type=int, default=4, help="degree of the rational normal curve (>= 3)")
        sp.add_argument("--m", type=int, default=None, help="fat point embedding dimension (default d-1)")
        sp.add_argument("--tau", type=int, default=None, help="tau_H or tau for partition/quotient")

    s = sub.add_parser("series", help="print a Poincare series")
    s.add_argument("target", choices=TARGETS)
    common(s)
    s.add_argument("--order", type=int, default=4)
    s.add_argument("--height-cut", type=int, default=None)
    s.add_argument("--json", action="store_true")

    dm = sub.add_parser("dim", help="print a single dimension")
    dm.add_argument("quantity", choices=QUANTITIES)
    common(dm)
    dm.add_argument("--target", choices=TARGETS, default="cone-multigraded")
    dm.add_argument("--R", type=_parse_R, default=None, help="multidegree as i,k")
    dm.add_argument("--n", type=int, default=None)
    dm.add_argument("--oracle", action="store_true", help="compute by the direct linear-algebra oracle")

    v = sub.add_parser("verify", help="formula-versus-oracle checks")
    v.add_argument("--d", type=int, default=4)
    v.add_argument("--max-height", type=int, default=4)
    v.add_argument("--acceptance", action="store_true", help="run the acceptance criteria instead")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "series":
            series, d = compute_series(args)
            print(render_json(series, d) if args.json else render_table(series), file=out)
            return 0
        if args.command == "dim":
            print(compute_dim(args), file=out)
            return 0
        return run_verify(args, out)
    except IntegrityError as e:
        print(f"integrity failure at degree {e.degree}: {e}", file=sys.stderr)
        return 3
    except AssertionError as e:
        print(f"internal assertion failed: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        parser.print_usage(sys.stderr)
        print(f"cotangent: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
