"""Reading and writing reports, solutions and sampled data.

Rational orders are written as strings (``"7/3"``) so nothing is lost on the
way through JSON.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import IO, Any

import numpy as np

from rlfde.analysis import AnalysisReport, ICKind
from rlfde.orders import PowerSum, as_order, format_order
from rlfde.sampled import SampledFunction
from rlfde.volterra.solver import GridSolution

SOLUTION_HEADER = ("t", "u", "singular", "regular")


def report_to_dict(report: AnalysisReport) -> dict[str, Any]:
    initial_values = []
    for q, kind in zip(report.ic_orders, report.ic_kinds):
        # integrals are labelled by their (positive) integration order
        shown = -q if kind is ICKind.INTEGRAL else q
        initial_values.append({"kind": kind.value, "order": format_order(shown)})

    return {
        "beta_star": format_order(report.beta_star),
        "m": report.m,
        "codimension": report.codimension,
        "top_order": format_order(report.top_order),
        "kernel_basis_exponents": [format_order(q) for q in report.kernel_basis_exponents],
        "strong_basis_exponents": [format_order(q) for q in report.strong_basis_exponents],
        "ic_orders": [format_order(q) for q in report.ic_orders],
        "initial_values": initial_values,
    }


def report_from_dict(data: dict[str, Any]) -> AnalysisReport:
    kinds = tuple(ICKind(item["kind"]) for item in data["initial_values"])
    return AnalysisReport(
        beta_star=as_order(data["beta_star"]),
        m=int(data["m"]),
        kernel_basis_exponents=tuple(as_order(q) for q in data["kernel_basis_exponents"]),
        strong_basis_exponents=tuple(as_order(q) for q in data["strong_basis_exponents"]),
        ic_orders=tuple(as_order(q) for q in data["ic_orders"]),
        ic_kinds=kinds,
        top_order=as_order(data["top_order"]),
    )


def dumps_report(report: AnalysisReport) -> str:
    return json.dumps(report_to_dict(report), indent=2)


def loads_report(text: str) -> AnalysisReport:
    return report_from_dict(json.loads(text))


def power_sum_to_list(p: PowerSum) -> list[list]:
    return [[format_order(e), c] for c, e in p.terms]


def power_sum_from_list(items) -> PowerSum:
    return PowerSum(tuple((float(c), as_order(e)) for e, c in items))


def write_solution_csv(solution: GridSolution, stream: IO[str]) -> None:
    """Write ``t,u,singular,regular`` rows, one per grid node."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SOLUTION_HEADER)
    singular = solution.singular_samples()
    for t, s, y in zip(solution.nodes, singular, solution.regular_samples):
        writer.writerow((repr(float(t)), repr(float(s + y)), repr(float(s)), repr(float(y))))


def solution_to_csv(solution: GridSolution) -> str:
    buffer = io.StringIO()
    write_solution_csv(solution, buffer)
    return buffer.getvalue()


def read_solution_csv(source: str | Path | IO[str]) -> dict[str, np.ndarray]:
    """Columns of a solution CSV as arrays keyed by header name."""
    if isinstance(source, (str, Path)):
        with open(source, newline="") as fh:
            return read_solution_csv(fh)

    reader = csv.reader(source)
    header = tuple(next(reader))
    if header != SOLUTION_HEADER:
        raise ValueError(f"expected header {','.join(SOLUTION_HEADER)}, got {','.join(header)}")
    rows = np.array([[float(x) for x in row] for row in reader if row])
    return {name: rows[:, i] for i, name in enumerate(header)}


def solution_to_dict(solution: GridSolution) -> dict[str, Any]:
    return {
        "step": solution.step,
        "t": solution.nodes.tolist(),
        "u": solution.values().tolist(),
        "regular": solution.regular_samples.tolist(),
        "regular_origin": solution.regular_origin,
        "singular_part": power_sum_to_list(solution.singular_part),
    }


def solution_from_dict(data: dict[str, Any]) -> GridSolution:
    return GridSolution(
        step=float(data["step"]),
        regular_samples=np.asarray(data["regular"], dtype=np.float64),
        singular_part=power_sum_from_list(data["singular_part"]),
        regular_origin=float(data["regular_origin"]),
    )


def read_sampled_rhs(path: str | Path) -> SampledFunction:
    """Read a two-column ``t,w`` CSV on a uniform grid starting at 0."""
    path = Path(path)
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = [h.strip() for h in next(reader, [])]
        if header != ["t", "w"]:
            raise ValueError(f"{path}: expected header 't,w', got {','.join(header)!r}")
        rows = [row for row in reader if row and any(cell.strip() for cell in row)]

    try:
        data = np.array([[float(a), float(b)] for a, b in rows])
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None
    if data.ndim != 2 or data.shape[0] < 2:
        raise ValueError(f"{path}: need at least two samples")
    return SampledFunction(data[:, 0], data[:, 1], source=str(path))


def write_sampled_rhs(samples: SampledFunction, path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(("t", "w"))
        for t, w in zip(samples.t, samples.values):
            writer.writerow((repr(float(t)), repr(float(w))))
