"""Command-line front end.

Exit codes: 0 on success, 2 on domain errors or bad flags, 3 on capacity or
precision failures. Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np

from . import bounds as B
from .archimedean import i_arch
from .characters import Kronecker, build_characters, conductor_average, orthogonality_sums
from .errors import CapacityError, DomainError, PrecisionError
from .explicit_formula import balance, weil_rhs
from .io import WRITERS, parse_range
from .primes import build_table, chebyshev_psi, weighted_sum
from .testfuncs import evaluate, fourier, make, sigma_weight
from .zerofinder import find_zeros, gamma_stats

COMMANDS = {
    "tf": "test functions: values, Fourier transforms, sigma weights",
    "arch": "archimedean integral of a dilated test function",
    "primes": "Chebyshev psi and weighted prime-power sums",
    "chars": "Dirichlet character tables, conductor average, orthogonality",
    "weil": "explicit-formula right-hand side and zero/prime balance",
    "zeros": "critical-line zeros and lowest-zero statistics",
    "bounds": "lowest-zero, central-order and proportion bounds; figure data",
    "effective": "effective conductor thresholds and the explicit lowest-zero bound",
    "optimize": "optimal FAlpha parameter and the quadratic-family beta maximum",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write(json.dumps({"error": "usage", "message": message}) + "\n")
        raise SystemExit(2)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=sorted(WRITERS), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)


def _tf_args(p, required=True):
    p.add_argument("--tf", "--family", dest="tf", required=required,
                   help="falpha, triangle, galpha, kernel, ltheta, jbeta, gbeta")
    p.add_argument("--param", type=float, default=None)


def _q_args(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--q", type=int)
    g.add_argument("--log-q", type=float)


def build_parser() -> argparse.ArgumentParser:
    epilog = "subcommands:\n" + "\n".join(f"  {k:10s} {v}" for k, v in COMMANDS.items())
    parser = _Parser(prog="lowzeros", description="Explicit-formula numerics for low-lying zeros",
                     epilog=epilog, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    tf = sub.add_parser("tf", help=COMMANDS["tf"]).add_subparsers(dest="action", required=True)
    for name in ("eval", "fourier"):
        p = tf.add_parser(name)
        _tf_args(p)
        p.add_argument("--x" if name == "eval" else "--t", dest="points", required=True,
                       help="value, comma list or lo:hi:step")
        _add_common(p)
    p = tf.add_parser("sigma")
    _tf_args(p)
    _add_common(p)

    p = sub.add_parser("arch", help=COMMANDS["arch"])
    _tf_args(p)
    p.add_argument("--T", required=True, help="value, comma list or lo:hi:step")
    p.add_argument("--shift", type=float, default=0.0)
    _add_common(p)

    pr = sub.add_parser("primes", help=COMMANDS["primes"]).add_subparsers(dest="action", required=True)
    p = pr.add_parser("psi")
    p.add_argument("--x", type=float, required=True)
    _add_common(p)
    p = pr.add_parser("sum")
    _tf_args(p)
    p.add_argument("--T", type=float, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--char", type=int, help="character label (with --q)")
    g.add_argument("--kronecker", type=int, help="discriminant d for the twist (d | n)")
    p.add_argument("--q", type=int)
    _add_common(p)

    ch = sub.add_parser("chars", help=COMMANDS["chars"]).add_subparsers(dest="action", required=True)
    for name in ("build", "conductor", "ortho"):
        p = ch.add_parser(name)
        p.add_argument("--q", type=int, required=True)
        _add_common(p)

    we = sub.add_parser("weil", help=COMMANDS["weil"]).add_subparsers(dest="action", required=True)
    p = we.add_parser("rhs")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--char", type=int)
    _tf_args(p)
    p.add_argument("--T", type=float, required=True)
    _add_common(p)
    p = we.add_parser("balance")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--char", type=int)
    _tf_args(p)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--height", type=float, default=60.0)
    _add_common(p)

    ze = sub.add_parser("zeros", help=COMMANDS["zeros"]).add_subparsers(dest="action", required=True)
    for name in ("find", "stats"):
        p = ze.add_parser(name)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--char", type=int)
        p.add_argument("--height", type=float, default=30.0)
        _add_common(p)

    bo = sub.add_parser("bounds", help=COMMANDS["bounds"]).add_subparsers(dest="action", required=True)
    for name in ("thm1", "thm1-count", "thm2", "thm3", "family"):
        p = bo.add_parser(name)
        _q_args(p)
        if name == "thm1-count":
            p.add_argument("--C", type=float, default=3.0)
        _add_common(p)
    p = bo.add_parser("proportions")
    p.add_argument("--beta", required=True)
    _add_common(p)
    p = bo.add_parser("figure")
    p.add_argument("--which", choices=("fig1", "fig2"), required=True)
    p.add_argument("--beta", required=True)
    _add_common(p)
    p = bo.add_parser("interval")
    p.add_argument("--a", required=True)
    _add_common(p)

    ef = sub.add_parser("effective", help=COMMANDS["effective"]).add_subparsers(dest="action", required=True)
    p = ef.add_parser("q0")
    p.add_argument("--t0", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--step", type=float, default=1e-3)
    _add_common(p)
    p = ef.add_parser("thm14")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--q", type=int)
    g.add_argument("--log-q", type=float)
    _add_common(p)

    op = sub.add_parser("optimize", help=COMMANDS["optimize"]).add_subparsers(dest="action", required=True)
    for name in ("falpha", "section5"):
        p = op.add_parser(name)
        _add_common(p)
    return parser


def _tf(args):
    return make(args.tf, args.param)


def _characters(q: int, label: int | None):
    table = build_characters(q)
    if label is not None:
        if not 0 <= label < len(table):
            raise DomainError(f"character label must lie in [0, {len(table) - 1}]")
        return [table[label]]
    prim = table.primitive_characters()
    if not prim:
        raise DomainError(f"there are no primitive characters mod {q}")
    return prim


def _table_for(f, T: float):
    need = math.exp(f.support_halfwidth * T) if f.compact else math.inf
    if need > 1e9:
        raise CapacityError(f"prime sums need primes up to {need:.4g}")
    return build_table(max(int(need) + 1, 100))


def _run(args) -> list[dict]:
    cmd, act = args.command, getattr(args, "action", None)
    if cmd == "tf":
        f = _tf(args)
        if act == "sigma":
            return [{"family": f.label(), "sigma": sigma_weight(f)}]
        pts = parse_range(args.points)
        fn = evaluate if act == "eval" else fourier
        key = "x" if act == "eval" else "t"
        return [{key: p, "value": float(fn(f, p))} for p in pts]
    if cmd == "arch":
        f = _tf(args)
        return [{"T": T, "shift": args.shift, "value": i_arch(f, T, args.shift)}
                for T in parse_range(args.T)]
    if cmd == "primes":
        if act == "psi":
            table = build_table(max(int(args.x) + 1, 2))
            return [{"x": args.x, "psi": chebyshev_psi(args.x, table)}]
        f = _tf(args)
        twist = None
        if args.kronecker is not None:
            twist = Kronecker(args.kronecker)
        elif args.char is not None:
            if args.q is None:
                raise DomainError("--char needs --q")
            twist = _characters(args.q, args.char)[0]
        return [{"T": args.T, "sum": weighted_sum(f, args.T, _table_for(f, args.T), twist)}]
    if cmd == "chars":
        table = build_characters(args.q)
        if act == "build":
            return [{"label": c.label, "index": " ".join(map(str, c.index)), "order": c.order,
                     "conductor": c.conductor, "parity": c.parity, "primitive": c.primitive}
                    for c in table]
        if act == "conductor":
            lhs, rhs = conductor_average(args.q, table)
            return [{"q": args.q, "lhs": lhs, "rhs": rhs, "difference": lhs - rhs}]
        sums = orthogonality_sums(table)
        return [{"n": n, "real": float(s.real), "imag": float(s.imag)}
                for n, s in enumerate(sums, start=1)]
    if cmd == "weil":
        f = _tf(args)
        chars = _characters(args.q, args.char)
        table = _table_for(f, args.T)
        if act == "rhs":
            out = []
            for c in chars:
                w = weil_rhs(c, f, args.T, table)
                out.append({"q": w.q, "char": c.label, "T": w.T, "log_term": w.log_term,
                            "arch_term": w.arch_term, "prime_term": w.prime_term, "rhs": w.rhs})
            return out

        def one(c):
            b = balance(c, f, args.T, args.height, table)
            return {"q": args.q, "char": c.label, "rhs": b.rhs.rhs, "zero_side": b.zero_side,
                    "residual": b.residual, "tail_bound": b.tail_bound, "ok": b.ok,
                    "zeros_complete": b.zeros_complete}
        return _map(one, chars, args.threads)
    if cmd == "zeros":
        chars = _characters(args.q, args.char)
        lists = _map(lambda c: find_zeros(c, args.height), chars, args.threads)
        if act == "find":
            return [{"q": args.q, "char": z.chi.label, "gamma": float(g),
                     "refined_residual": float(r)}
                    for z in lists for g, r in zip(z.ordinates, z.residuals)]
        out = []
        for z in lists:
            g1, g1n, nc, complete = gamma_stats(z)
            out.append({"q": args.q, "char": z.chi.label, "gamma1": g1, "gamma1_nonreal": g1n,
                        "n_central": nc, "complete": complete})
        return out
    if cmd == "bounds":
        if act in ("thm1", "thm1-count", "thm2", "thm3", "family"):
            kw = {"log_q": args.log_q} if args.q is None else {"q": args.q}
            if act == "family":
                return [r.as_dict() for r in B.family_bounds(**kw).values()]
            fn = {"thm1": B.thm1_gamma_bound, "thm2": B.thm2_n_bound, "thm3": B.thm3_tilde_bound}
            if act == "thm1-count":
                return [B.thm1_zero_count(C=args.C, **kw).as_dict()]
            return [fn[act](**kw).as_dict()]
        if act == "proportions":
            rows = []
            for b in parse_range(args.beta):
                row = {"beta": b}
                if b > 0.5:
                    row.update(hr=B.hr_proportion(b), thm7=B.thm7_proportion(b),
                               general_q=B.remark_general_q(b))
                if 0 <= b <= 0.25:
                    row["ltheta"] = B.ltheta_proportion(b)
                if B.quadratic_feasible_interval(b) is not None:
                    row["quadratic"] = B.quadratic_proportion(b)
                rows.append(row)
            return rows
        if act == "figure":
            return B.figure_data(args.which, parse_range(args.beta))
        return [{"a": a, "bound": B.interval_min_bound(a)} for a in parse_range(args.a)]
    if cmd == "effective":
        if act == "q0":
            r = B.effective_q0(args.t0, args.alpha, step=args.step)
            return [{"t0": r.t0, "alpha": r.alpha, "C": r.C, "q0": r.q0, "T_argmax": r.T_argmax,
                     "T_max": r.T_max, "at_edge": r.at_edge}]
        rows = []
        c = B.thm14_constants()
        rows.append({"kernel_max": c.kernel_max, "kernel_integral": c.kernel_integral,
                     "arch_constant": c.arch_constant, "psi_factor_4": c.psi_factor_4,
                     "psi_factor_2": c.psi_factor_2, "verified": B.thm14_verify()})
        if args.q is not None or args.log_q is not None:
            kw = {"log_q": args.log_q} if args.q is None else {"q": args.q}
            rows.append(B.thm14_bound(**kw).as_dict())
        return rows
    if cmd == "optimize":
        if act == "falpha":
            r = B.thm7_alpha0()
            return [{"alpha0": r.x, "f_alpha0": r.optimum, "beta0": B.thm7_beta0(),
                     "iterations": r.iterations, "unimodal": r.unimodal}]
        beta, t = B.section5_beta_max()
        return [{"beta": beta, "t_coef": t}]
    raise DomainError(f"unknown command {cmd}")


def _map(fn, items, threads: int):
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, items))


def _params(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if v is not None}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    np.random.seed(args.seed)
    try:
        rows = _run(args)
    except ValueError as exc:  # DomainError and malformed ranges
        sys.stderr.write(json.dumps({"error": "domain", "message": str(exc)}) + "\n")
        return 2
    except (CapacityError, PrecisionError) as exc:
        achieved = getattr(exc, "achieved", None)
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc),
                                     "achieved": achieved}) + "\n")
        return 3
    try:
        WRITERS[args.format](rows, _params(args), sys.stdout)
        sys.stdout.flush()
    except BrokenPipeError:
        sys.stderr.close()
    return 0


def run(argv: Sequence[str] | None = None) -> int:
    return main(argv)


if __name__ == "__main__":
    raise SystemExit(main())
