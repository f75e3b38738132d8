"""Command-line entry point.

Output is line-oriented ``key=value``.  Exit status: 0 on success, 1 on a
typed solve/decode failure (details on stdout), 2 on usage or parse errors
(diagnostics on stderr).
"""

from __future__ import annotations

import argparse
import sys
import time

from .field import FieldError, GF, parse_field_spec
from .harness import TrialConfig, bench, run_code_sweep, run_pi_differential
from .partial_inverse import (Inverse, InvalidProblemError, PartialInverseProblem,
                              modular_inverse, solve_with_remainder)
from .poly import Polynomial, _split_top, format_poly, format_word, parse_poly, parse_word
from .prc import PrcCode
from .rs import RsCode


class UsageError(Exception):
    pass


def _emit(**pairs) -> None:
    for k, v in pairs.items():
        print(f"{k}={v}")


def _poly(field, text: str, what: str) -> Polynomial:
    try:
        return parse_poly(field, text)
    except ValueError as exc:
        raise UsageError(f"bad polynomial for {what}: {exc}") from exc


def _poly_list(field, text: str, what: str) -> list[Polynomial]:
    return [_poly(field, part, what) for part in _split_top(text, ";")]


def _format_residues(word) -> str:
    return ";".join(format_poly(r) for r in word)


# subcommands --------------------------------------------------------------------


def cmd_solve(args) -> int:
    f = args.field
    problem = PartialInverseProblem(_poly(f, args.b, "--b"), _poly(f, args.m, "--m"), args.d)
    lam, r = solve_with_remainder(problem, force_generic=args.force_generic)
    _emit(**{"lambda": format_poly(lam)})
    if args.with_remainder:
        _emit(remainder=format_poly(r))
    return 0


def cmd_invert(args) -> int:
    f = args.field
    res = modular_inverse(_poly(f, args.b, "--b"), _poly(f, args.m, "--m"))
    if isinstance(res, Inverse):
        _emit(inverse=format_poly(res.value))
        return 0
    _emit(status="zero_divisor", **{"lambda": format_poly(res.annihilator)})
    return 1


def cmd_oracle_check(args) -> int:
    if not args.exhaustive and args.trials is None:
        raise UsageError("give --exhaustive or --trials")
    config = TrialConfig(seed=args.seed, trials=args.trials or 0, field=args.field,
                         max_deg=args.max_deg, exhaustive=args.exhaustive,
                         m_shape=args.m_shape, compare_paths=args.compare_paths,
                         check=args.check, csv_path=args.csv)
    summary = run_pi_differential(config)
    if summary.mismatch_log:
        _emit(status="mismatch", first=summary.mismatch_log[0])
    else:
        _emit(status="pass")
    print(summary.to_line())
    return 1 if summary.mismatches else 0


def _rs_code(args) -> RsCode:
    betas = parse_word(args.field, args.betas) if args.betas else None
    return RsCode(args.field, args.n, args.k, betas=betas, dft=args.dft)


def _prc_code(args) -> PrcCode:
    return PrcCode(args.field, _poly_list(args.field, args.moduli, "--moduli"), args.k)


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name} is required for '{args.action}'")
    return value


def _report_decode(result, fmt_word) -> int:
    if result.ok:
        _emit(status="ok", codeword=fmt_word(result.codeword), message=format_poly(result.message),
              error=fmt_word(result.error), locator=format_poly(result.locator),
              error_count=result.error_count)
        return 0
    _emit(status="failure", reason=result.failure)
    if result.locator is not None:
        _emit(locator=format_poly(result.locator))
    return 1


def _simulate(args, code) -> int:
    config = TrialConfig(seed=args.seed, trials=args.trials, code=code,
                         weights=(args.errors,), csv_path=args.csv)
    summary = run_code_sweep(config)
    print(summary.to_line())
    return 1 if summary.miscorrections or summary.mismatches else 0


def cmd_rs(args) -> int:
    code = _rs_code(args)
    f = args.field
    fmt = lambda w: format_word(f, w)
    if args.action == "encode":
        _emit(codeword=fmt(code.encode(_poly(f, _need(args, "message"), "--message"))))
        return 0
    if args.action == "decode":
        y = parse_word(f, _need(args, "received"))
        if len(y) != code.n:
            raise UsageError(f"received word has {len(y)} symbols, expected {code.n}")
        return _report_decode(code.decode(y), fmt)
    return _simulate(args, code)


def cmd_prc(args) -> int:
    code = _prc_code(args)
    f = args.field
    if args.action == "encode":
        _emit(codeword=_format_residues(code.encode(_poly(f, _need(args, "message"), "--message"))))
        return 0
    if args.action == "decode":
        y = _poly_list(f, _need(args, "received"), "--received")
        if len(y) != code.n:
            raise UsageError(f"received word has {len(y)} residues, expected {code.n}")
        return _report_decode(code.decode(y), _format_residues)
    return _simulate(args, code)


def cmd_bench(args) -> int:
    code = RsCode(args.field, args.n, args.k, dft=args.dft)
    config = TrialConfig(seed=args.seed, trials=args.trials, code=code,
                         weights=(args.errors if args.errors is not None else code.t,),
                         solve_size=args.solve_size, csv_path=args.csv)
    print(bench(config).to_line())
    return 0


def selftest_suites():
    """(name, thunk) pairs; each thunk returns a TrialSummary."""
    prc_moduli = [Polynomial(GF(2), c) for c in ([0, 1], [1, 1], [1, 1, 1], [1, 1, 0, 1], [1, 0, 1, 1])]
    return [
        ("pi_gf2_deg4", lambda: run_pi_differential(
            TrialConfig(field=GF(2), max_deg=4, exhaustive=True, check=True))),
        ("pi_gf3_deg3", lambda: run_pi_differential(
            TrialConfig(field=GF(3), max_deg=3, exhaustive=True, check=True))),
        ("pi_gf256_xn1_paths", lambda: run_pi_differential(
            TrialConfig(field=GF(2, 8), max_deg=20, trials=100, m_shape="xn1", compare_paths=True))),
        ("rs_7_3_weight2", lambda: run_code_sweep(
            TrialConfig(code=RsCode(GF(2, 3), 7, 3, dft=True), max_weight=2))),
        ("prc_gf2_degsum3", lambda: run_code_sweep(
            TrialConfig(code=PrcCode(GF(2), prc_moduli, 3), max_weight=3))),
    ]


def cmd_selftest(args) -> int:
    failed = 0
    for name, run in selftest_suites():
        t0 = time.perf_counter()
        s = run()
        ok = s.trials > 0 and s.successes == s.trials
        failed += not ok
        print(f"suite={name} status={'pass' if ok else 'fail'} trials={s.trials} "
              f"successes={s.successes} seconds={time.perf_counter() - t0:.2f}")
    _emit(status="pass" if not failed else "fail")
    return 1 if failed else 0


# parser -------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _field_arg(text: str):
    try:
        return parse_field_spec(text)
    except FieldError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rbmdecode", description="Partial-inverse solver and algebraic decoders.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_field(p, default=None):
        p.add_argument("--field", type=_field_arg, required=default is None,
                       default=_field_arg(default) if default else None,
                       help="prime:<p> or ext:<p>:<e>[:<c0,...,ce>]")
        return p

    p = with_field(sub.add_parser("solve", help="minimal partial inverse of b modulo m"))
    p.add_argument("--b", required=True)
    p.add_argument("--m", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--force-generic", action="store_true")
    p.add_argument("--with-remainder", action="store_true")
    p.set_defaults(run=cmd_solve)

    p = with_field(sub.add_parser("invert", help="inverse of b in F[x]/m"))
    p.add_argument("--b", required=True)
    p.add_argument("--m", required=True)
    p.set_defaults(run=cmd_invert)

    p = with_field(sub.add_parser("oracle-check", help="solver vs. linear-system and Euclid oracles"))
    p.add_argument("--max-deg", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--m-shape", choices=["random", "xpow", "xn1"], default="random")
    p.add_argument("--compare-paths", action="store_true")
    p.add_argument("--check", action="store_true", help="enable internal assertions")
    p.add_argument("--csv")
    p.set_defaults(run=cmd_oracle_check)

    def code_common(p):
        p.add_argument("action", choices=["encode", "decode", "simulate"])
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--message")
        p.add_argument("--received")
        p.add_argument("--errors", type=int, default=1)
        p.add_argument("--trials", type=int, default=100)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--csv")

    p = with_field(sub.add_parser("rs", help="Reed-Solomon encode/decode/simulate"))
    p.add_argument("--n", type=int, required=True)
    pts = p.add_mutually_exclusive_group()
    pts.add_argument("--dft", action="store_true")
    pts.add_argument("--betas")
    code_common(p)
    p.set_defaults(run=cmd_rs)

    p = with_field(sub.add_parser("prc", help="polynomial remainder code encode/decode/simulate"))
    p.add_argument("--moduli", required=True, help="semicolon-separated polynomials")
    code_common(p)
    p.set_defaults(run=cmd_prc)

    p = with_field(sub.add_parser("bench", help="decode timings and solve scaling"), default="ext:2:8")
    p.add_argument("--n", type=int, default=255)
    p.add_argument("--k", type=int, default=223)
    p.add_argument("--dft", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--errors", type=int)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--solve-size", type=int, default=64)
    p.add_argument("--csv")
    p.set_defaults(run=cmd_bench)

    p = sub.add_parser("selftest", help="run the built-in exhaustive suites")
    p.set_defaults(run=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args)
    except (UsageError, InvalidProblemError, FieldError, ValueError) as exc:
        print(f"rbmdecode {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"rbmdecode {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
