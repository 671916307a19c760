"""Initial values and numerical solutions of linear Riemann-Liouville equations.

::

    rlfde analyze "D^{7/3} u + 3*D^{4/3} u + 4*D^{1/3} u = t^3"
    rlfde convert-ic --ic 1,0 "D^{13/4} u + 3*D^{9/4} u + D^{2} u + D^{5/4} u + D^{1} u = t"
    rlfde solve --ic 1 --n 2048 --out u.csv "D^{1/2} u + u = 0"
    rlfde verify --ic 1 "D^{1/2} u + u = 0"

Exit status is 0 on success, 1 for bad input and 2 when the numerics fail.
Negative lists need the ``=`` form, e.g. ``--ic=-1,2``.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Sequence

import numpy as np

from rlfde.analysis import EquationSpec, analyze
from rlfde.dsl import format_equation, parse_equation
from rlfde.icmap import ic_to_source, source_to_ic
from rlfde.io import report_to_dict, solution_to_csv, solution_to_dict
from rlfde.orders import format_order
from rlfde.volterra import build_problem, residual, solve_volterra

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERICAL = 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma separated list of numbers: {text!r}")


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return value


def _grid_size(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"need at least 2 grid cells: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rlfde", description=__doc__.split("\n")[0])
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help: str, solve: bool = False, data: bool = False):
        sub = commands.add_parser(name, help=help)
        sub.add_argument("equation", help="equation text, e.g. \"D^{1/2} u + u = 0\"")
        if data:
            group = sub.add_mutually_exclusive_group()
            group.add_argument("--ic", type=_float_list, help="initial values, lowest order first")
            group.add_argument("--source", type=_float_list, help="source coefficients, lowest power first")
        if solve:
            sub.add_argument("--b", type=_positive_float, default=1.0, help="interval end (default 1)")
            sub.add_argument("--n", type=_grid_size, default=1024, help="grid cells (default 1024)")
        sub.add_argument("--out", type=Path, help="write output here instead of stdout")
        return sub

    add("analyze", "initial values and solution space structure")
    add("convert-ic", "map initial values to source coefficients or back", data=True)
    solve = add("solve", "solve an initial value problem on a uniform grid", solve=True, data=True)
    solve.add_argument("--format", choices=("csv", "json"), default="csv")
    verify = add("verify", "residual and self-convergence of a solve", solve=True, data=True)
    verify.add_argument("--format", choices=("json",), default="json")
    return parser


def _source(spec: EquationSpec, args) -> np.ndarray:
    report = analyze(spec)
    if args.source is not None:
        source = np.asarray(args.source, dtype=np.float64)
        if source.shape != (report.m,):
            raise InputError(f"expected {report.m} source coefficients, got {source.size}")
        return source
    if args.ic is not None:
        return ic_to_source(args.ic, spec, report)
    return np.zeros(report.m)


def _emit(text: str, out: Path | None, stdout) -> None:
    if out is None:
        stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        out.write_text(text if text.endswith("\n") else text + "\n")


def _analyze(spec: EquationSpec, args) -> str:
    report = analyze(spec)
    data = {"equation": format_equation(spec) if _printable(spec) else args.equation}
    data.update(report_to_dict(report))
    data["weak_dimension"] = report.weak_dimension
    data["initial_conditions"] = report.describe_initial_values()
    return json.dumps(data, indent=2)


def _printable(spec: EquationSpec) -> bool:
    try:
        format_equation(spec)
    except ValueError:
        return False
    return True


def _convert(spec: EquationSpec, args) -> str:
    report = analyze(spec)
    if args.ic is not None:
        ic = np.asarray(args.ic, dtype=np.float64)
        source = ic_to_source(ic, spec, report)
    elif args.source is not None:
        source = np.asarray(args.source, dtype=np.float64)
        ic = source_to_ic(source, spec, report)
    else:
        raise InputError("convert-ic needs --ic or --source")

    return json.dumps(
        {
            "ic_orders": [format_order(q) for q in report.ic_orders],
            "initial_conditions": report.describe_initial_values(),
            "ic": ic.tolist(),
            "source_exponents": [format_order(q) for q in report.ic_orders],
            "source": source.tolist(),
        },
        indent=2,
    )


def _solve(spec: EquationSpec, args) -> str:
    problem = build_problem(spec, _source(spec, args), args.b)
    solution = solve_volterra(problem, args.n)
    if args.format == "json":
        return json.dumps(solution_to_dict(solution))
    return solution_to_csv(solution)


def _verify(spec: EquationSpec, args) -> str:
    problem = build_problem(spec, _source(spec, args), args.b)
    sizes = [args.n, 2 * args.n, 4 * args.n]
    with ThreadPoolExecutor(max_workers=len(sizes)) as pool:
        solutions = list(pool.map(lambda n: solve_volterra(problem, n), sizes))

    residuals = [residual(sol, spec) for sol in solutions]

    # compare on the coarse nodes inside [b/10, b]
    coarse = solutions[0].nodes
    mask = coarse >= args.b / 10 * (1 - 1e-12)
    index = np.arange(1, args.n + 1)
    values = [sol.values()[index * 2**i - 1] for i, sol in enumerate(solutions)]
    differences = [
        float(np.max(np.abs(values[i] - values[i + 1])[mask])) for i in range(2)
    ]
    ratio = differences[0] / differences[1] if differences[1] > 0 else float("inf")

    return json.dumps(
        {
            "n": sizes,
            "residual": residuals,
            "differences": differences,
            "convergence_ratio": ratio,
        },
        indent=2,
    )


_COMMANDS = {
    "analyze": _analyze,
    "convert-ic": _convert,
    "solve": _solve,
    "verify": _verify,
}


def run_cli(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    """Run the command line tool and return its exit status."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    argv = sys.argv[1:] if argv is None else list(argv)

    try:
        args = build_parser().parse_args(argv)
        spec = parse_equation(args.equation)
        text = _COMMANDS[args.command](spec, args)
        _emit(text, args.out, stdout)
    except ArithmeticError as exc:
        print(f"rlfde: numerical failure: {exc}", file=stderr)
        return EXIT_NUMERICAL
    except (InputError, ValueError, OSError) as exc:
        print(f"rlfde: error: {exc}", file=stderr)
        return EXIT_INPUT
    except SystemExit as exc:
        # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    return EXIT_OK


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
