"""Command-line front end.

    pntverify pi --x 1000
    pntverify j --x 100.5 --out json
    pntverify perron --x 10.5 --T 2000
    pntverify sweep --x-grid 10.5:1000.5:log:3 --T 2000 --out csv | pntverify fit-c --input -

Exit status: 0 on success, 2 on usage errors, 1 on computation errors.
The effective configuration is echoed to stderr as one ``#`` line.
"""
from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import harness
from .errors import PNTError
from .logint import li_real
from .perron import LineIntegralSpec, f_path, kernel_h, vertical_integral
from .primes import count_pi, riemann_j, sieve_primes
from .serialize import dumps_object, fmt_float
from .zeta import ZetaAccuracy, zeta_em

COMMANDS = ["pi", "j", "li", "zeta", "kernel", "perron", "fpath", "verify", "sweep", "fit-c", "scan-boundary"]


class UsageError(Exception):
    pass


def parse_grid(text: str) -> list[float]:
    """``start:stop:lin|log:count`` -> values snapped to half-odd numbers."""
    try:
        start_s, stop_s, kind, count_s = text.split(":")
        start, stop, count = float(start_s), float(stop_s), int(count_s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}; expected start:stop:lin|log:count")
    if count < 1 or kind not in ("lin", "log") or (kind == "log" and min(start, stop) <= 0):
        raise argparse.ArgumentTypeError(f"bad grid {text!r}")
    raw = np.linspace(start, stop, count) if kind == "lin" else np.geomspace(start, stop, count)
    if count == 1:
        raw = np.array([start])
    out = []
    for v in raw:
        h = harness.half_odd(round(float(v), 9))
        if h not in out:
            out.append(h)
    return out


def _k_value(text: str):
    if text == "auto":
        return None
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--k expects a real or 'auto', got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pntverify", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, *flags, out=("text", "json")):
        sp = sub.add_parser(name)
        sp.add_argument("--out", choices=out, default=out[0])
        sp.add_argument("--seedless", action="store_true", help="reserved; always rejected")
        for f in flags:
            f(sp)
        return sp

    x_req = lambda sp: sp.add_argument("--x", type=float, required=True)
    T_req = lambda sp: sp.add_argument("--T", type=float, required=True)
    T_opt = lambda sp: sp.add_argument("--T", type=float, default=2000.0)
    A = lambda sp: sp.add_argument("--A", type=float, default=harness.DEFAULT_A)
    eps = lambda sp: sp.add_argument("--eps", type=float, default=1e-10)
    k = lambda sp: sp.add_argument("--k", type=_k_value, default=None)
    grid = lambda sp: sp.add_argument("--x-grid", type=parse_grid, dest="x_grid")

    cmd("pi", x_req)
    cmd("j", x_req)
    cmd("li", x_req)
    cmd("zeta", eps, lambda sp: sp.add_argument("--sigma", type=float, required=True),
        lambda sp: sp.add_argument("--t", type=float, default=0.0))
    cmd("kernel", T_req, lambda sp: sp.add_argument("--y", type=float, required=True),
        lambda sp: sp.add_argument("--k", type=float, required=True))
    cmd("perron", x_req, T_req, k, eps)
    cmd("fpath", x_req,
        lambda sp: sp.add_argument("--eta", type=float, required=True),
        lambda sp: sp.add_argument("--sign", type=int, choices=(1, -1), default=1),
        lambda sp: sp.add_argument("--eps-arc", type=float, default=None, dest="eps_arc"))
    cmd("verify", x_req, T_req, A, eps, out=("text", "csv", "json"))
    cmd("sweep", grid, T_opt, A, eps,
        lambda sp: sp.add_argument("--t-mode", choices=("policy", "fixed"), default="fixed", dest="t_mode"),
        out=("csv", "json", "text"))
    cmd("fit-c", grid, lambda sp: sp.add_argument("--input", default=None,
                                                  help="CSV from 'sweep --out csv'; '-' for stdin"))
    cmd("scan-boundary", T_req, A, eps)
    return p


def _echo_config(args: argparse.Namespace) -> None:
    items = sorted((k, v) for k, v in vars(args).items() if k != "command")
    parts = []
    for k, v in items:
        if isinstance(v, float):
            v = fmt_float(v)
        elif isinstance(v, list):
            v = ",".join(fmt_float(x) for x in v)
        parts.append(f"{k}={v}")
    print(f"# pntverify {args.command} " + " ".join(parts), file=sys.stderr)


def _emit(out: str, obj: dict) -> str:
    if out == "json":
        return dumps_object(obj)
    return "\n".join(f"{k}={fmt_float(v) if isinstance(v, float) else v}" for k, v in obj.items())


def _complex(z: complex) -> str:
    return f"{fmt_float(z.real)}{'+' if z.imag >= 0 or math.isnan(z.imag) else '-'}{fmt_float(abs(z.imag))}i"


def _run(args: argparse.Namespace) -> str:
    c = args.command
    if c in ("pi", "j"):
        table = sieve_primes(max(2, math.floor(args.x)))
        if c == "pi":
            n = count_pi(args.x, table)
            return str(n) if args.out == "text" else dumps_object({"pi": n})
        jv = riemann_j(args.x, table)
        exact = f"{jv.exact.numerator}/{jv.exact.denominator}"
        return _emit(args.out, {"exact": exact, "approx": jv.approx})
    if c == "li":
        v = li_real(args.x)
        return fmt_float(v) if args.out == "text" else dumps_object({"li": v})
    if c == "zeta":
        z = zeta_em(complex(args.sigma, args.t), ZetaAccuracy(target_eps=args.eps))
        if args.out == "text":
            return _complex(z)
        return dumps_object({"re": z.real, "im": z.imag})
    if c == "kernel":
        v = kernel_h(args.y, args.k, args.T)
        return _emit(args.out, {"kernel": v, "step": 1.0 if args.y > 1 else 0.0,
                                "bound": args.y**args.k / (args.T * abs(math.log(args.y)))})
    if c == "perron":
        spec = LineIntegralSpec(x=args.x, T=args.T, k=args.k)
        r = vertical_integral(spec, ZetaAccuracy(target_eps=args.eps))
        return _emit(args.out, {"value": r.value, "nodes": r.nodes, "est_error": r.est_error,
                                "k": spec.k_value})
    if c == "fpath":
        z = f_path(args.x, args.eta, args.sign, args.eps_arc)
        if args.out == "text":
            return _complex(z)
        return dumps_object({"re": z.real, "im": z.imag})
    if c == "verify":
        rec = harness.measure_remainders(args.x, args.T, args.A, acc=ZetaAccuracy(target_eps=args.eps))
        if args.out == "text":
            return _emit("text", rec.row())
        return harness.emit([rec], args.out).rstrip("\n")
    if c == "sweep":
        if args.x_grid is None:
            raise UsageError("sweep needs --x-grid")
        cfg = harness.SweepConfig(
            x_grid=args.x_grid, t_mode=args.t_mode,
            T=args.T if args.t_mode == "fixed" else None,
            A=args.A, out_format="json" if args.out == "json" else "csv",
        )
        recs = harness.sweep(cfg, acc=ZetaAccuracy(target_eps=args.eps))
        if args.out == "text":
            return "\n\n".join(_emit("text", r.row()) for r in recs)
        return harness.emit(recs, cfg.out_format).rstrip("\n")
    if c == "fit-c":
        if args.input is not None:
            text = sys.stdin.read() if args.input == "-" else open(args.input).read()
            pts = harness.read_csv_points(text)
        elif args.x_grid is not None:
            pts = harness.direct_points(args.x_grid)
        else:
            raise UsageError("fit-c needs --input or --x-grid")
        fit = harness.fit_c(pts)
        return _emit(args.out, {"c_hat": fit.c_hat, "residual": fit.residual,
                                "points_used": fit.points_used})
    if c == "scan-boundary":
        v = harness.scan_partial_r(args.T, args.A, ZetaAccuracy(target_eps=args.eps))
        return _emit(args.out, {"max_ratio": v, "sigma": 1 - args.A / math.log(args.T)})
    raise UsageError(f"unknown command {c}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.seedless:
        print("pntverify: --seedless is reserved (nothing here is random)", file=sys.stderr)
        return 2
    _echo_config(args)
    try:
        text = _run(args)
    except UsageError as e:
        print(f"pntverify: {e}", file=sys.stderr)
        return 2
    except (PNTError, ValueError, ArithmeticError, OSError) as e:
        print(f"pntverify: error: {e}", file=sys.stderr)
        return 1
    sys.stdout.write(text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
