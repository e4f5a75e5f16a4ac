"""Command line: ``minkbeam {solve,verify,gen,bench,plot}``.

Exit codes: 0 ok, 1 input error, 2 precondition violated, 3 brute-force cap
exceeded, 4 verification mismatch.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import bench, io, oracle
from .beamforming import PreconditionError, psk_fast_path, ris_augment, solve
from .instances import MODELS, gen_document
from .plot import MAX_ANTENNAS, render_svg

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_CAP, EXIT_MISMATCH = 0, 1, 2, 3, 4
VERIFY_RTOL = 1e-9


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _load(path: str):
    try:
        return io.load_problem(path)
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}") from None
    except io.ProblemFormatError as exc:
        raise CliError(f"{path}: {exc}") from None


def _emit(text: str, output) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    try:
        Path(output).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliError(f"{output}: {exc.strerror}") from None


def cmd_solve(args) -> int:
    problem = _load(args.input)
    if args.ris:
        problem = ris_augment(problem)
    t0 = time.perf_counter()
    try:
        sol = psk_fast_path(problem) if args.psk_fast else solve(problem)
    except PreconditionError as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from None
    elapsed = 0.0 if args.no_timing else 1e3 * (time.perf_counter() - t0)
    _emit(io.dumps_json(io.solution_to_dict(sol, elapsed)), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    problem = _load(args.input)
    try:
        brute = oracle.brute_force(problem, cap=args.cap)
    except oracle.InstanceTooLarge as exc:
        raise CliError(f"{exc} ({oracle.tuple_count(problem)} tuples > cap {args.cap})", EXIT_CAP) from None
    vertex = solve(problem).gain
    dual = oracle.support_solve_problem(problem).gain
    ref = brute.gain
    ok = all(abs(g - ref) <= VERIFY_RTOL * max(ref, 1e-300) or g == ref for g in (vertex, dual))
    print(f"solve          {vertex!r}")
    print(f"brute_force    {ref!r}")
    print(f"support_solve  {dual!r}")
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_gen(args) -> int:
    try:
        doc = gen_document(args.n, args.m, args.seed, args.ris, args.model)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    _emit(io.dumps_json(doc), args.output)
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        values = [int(float(t)) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from None
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive")
    return values


def cmd_bench(args) -> int:
    if args.m < 1 or args.repeats < 1:
        raise CliError("--m and --repeats must be >= 1")
    rows = bench.run_bench(args.n_list, args.m, args.repeats, args.seed, args.cap)
    if args.csv in (None, "-"):
        bench.write_csv(rows, sys.stdout)
        return EXIT_OK
    try:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            bench.write_csv(rows, fh)
    except OSError as exc:
        raise CliError(f"{args.csv}: {exc.strerror}") from None
    return EXIT_OK


def cmd_plot(args) -> int:
    problem = _load(args.input)
    if problem.n_antennas > MAX_ANTENNAS:
        raise CliError(
            f"{problem.n_antennas} antennas; plot supports at most {MAX_ANTENNAS}",
            EXIT_PRECONDITION,
        )
    _emit(render_svg(problem, args.show_circles), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minkbeam", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a problem file")
    p.add_argument("input")
    p.add_argument("--ris", action="store_true", help="add the zero (off) element to every set")
    p.add_argument("--psk-fast", action="store_true", help="use the uniform M-PSK fast path")
    p.add_argument("--output", "-o")
    p.add_argument("--no-timing", action="store_true", help="write elapsed_ms as 0 for reproducible output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="compare solve with brute force and the support-function dual")
    p.add_argument("input")
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a random M-PSK problem file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ris", action="store_true")
    p.add_argument("--model", choices=MODELS, default="rayleigh")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time solve against problem size")
    p.add_argument("--n-list", type=_int_list, default=[10, 100, 1000])
    p.add_argument("--m", type=int, default=4)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("plot", help="draw summands and their Minkowski sum as SVG")
    p.add_argument("input")
    p.add_argument("--output", "-o")
    p.add_argument("--show-circles", action="store_true")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"minkbeam {args.command}: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
