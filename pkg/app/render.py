"""
Output formatting for the CLI.

Every command produces one of the schemas in app.models; this module
turns it into a human-readable table, JSON or CSV.
"""

import csv
import io
import json
from typing import Callable, Dict, Iterable, List, Sequence, Type

from pydantic import BaseModel

from app.core.errors import ParameterError
from app.models import (
    CSV_COLUMNS,
    ClassificationRead,
    InvariantSetRead,
    KernelRead,
    ResolutionRead,
    SweepRead,
    VerificationRead,
)

FORMATS = ("table", "json", "csv")


def to_json(model: BaseModel) -> str:
    """Serialize as two-space indented JSON, keys in schema order."""
    return json.dumps(model.model_dump(mode="json"), indent=2)


def _csv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _title(model: BaseModel) -> str:
    data = model.model_dump()
    return f"p={data['p']} a={data['a']} b={data['b']} (weight {data['weight']})"


# Tables


def betti_diagram(resolution: ResolutionRead) -> List[str]:
    """
    Betti diagram with columns i and rows j - i.

    Zero entries print as '.'. The header holds the homological index and
    the next row the ranks.
    """
    table: Dict[int, Dict[int, int]] = {}
    for entry in resolution.betti:
        table.setdefault(entry.j - entry.i, {})[entry.i] = entry.count
    columns = range(len(resolution.modules))
    width = max([len(str(count)) for count in resolution.ranks] + [len(str(c)) for c in columns])
    label_width = max([len(str(row)) + 1 for row in table] + [len("total:")])

    def line(label: str, cells: Iterable[str]) -> str:
        return label.rjust(label_width) + " " + " ".join(cell.rjust(width) for cell in cells)

    lines = [line("", [str(i) for i in columns])]
    lines.append(line("total:", [str(rank) for rank in resolution.ranks]))
    for row in sorted(table):
        lines.append(line(f"{row}:", [str(table[row].get(i, ".")) for i in columns]))
    return lines


def invariants_table(model: InvariantSetRead) -> str:
    lines = [f"Invariants of {_title(model)}", "", "  i     c     d  degree"]
    for i, ((c, d), degree) in enumerate(zip(model.points, model.degrees)):
        lines.append(f"{i:>3} {c:>5} {d:>5} {degree:>7}")
    lines.append("")
    lines.append(f"slopes: {', '.join(model.slopes)}")
    for line in model.slope_lines:
        lines.append(f"  {line.slope}: {line.start} .. {line.end}")
    if model.witness is not None:
        lines.append(f"extra generator witness: {model.witness}")
    return "\n".join(lines)


def kernel_table(model: KernelRead) -> str:
    variables = ", ".join(f"{name} (deg {deg})" for name, deg in zip(model.variables, model.degrees))
    lines = [f"Kernel of {_title(model)}", f"ring: {variables}", ""]
    lines.extend(f"  {g}" for g in model.generators)
    if model.reduced_basis is not None:
        lines.append("")
        lines.append("reduced Groebner basis:")
        lines.extend(f"  {g}" for g in model.reduced_basis)
    return "\n".join(lines)


def resolution_table(model: ResolutionRead) -> str:
    lines = [
        f"Resolution of {_title(model)}",
        f"class: {model.label}   method: {model.method}",
        "",
    ]
    for module in model.modules:
        lines.append(f"F_{module.index}: rank {module.rank}  twists {module.twists}")
    lines.append("")
    lines.extend(betti_diagram(model))
    if model.matrices is not None:
        for index, matrix in enumerate(model.matrices, start=1):
            lines.append("")
            lines.append(f"d_{index}:")
            lines.extend("  [" + ", ".join(row) + "]" for row in matrix)
    return "\n".join(lines)


def verification_table(model: VerificationRead) -> str:
    lines = [f"Verification of {_title(model)}"]
    for name, ok in model.checks.items():
        status = "ok" if ok else "FAILED"
        detail = model.details.get(name, "")
        lines.append(f"  {name:<12} {status}" + (f"  {detail}" if detail else ""))
    return "\n".join(lines)


def classification_table(model: ClassificationRead) -> str:
    lines = [f"p={model.p} a={model.a} b={model.b}: {model.label}"]
    for key, value in model.evidence.model_dump().items():
        lines.append(f"  {key:<20} {value}")
    for violation in model.violations:
        lines.append(f"  VIOLATION: {violation}")
    return "\n".join(lines)


def sweep_table(model: SweepRead) -> str:
    header = " ".join(column.rjust(5) for column in CSV_COLUMNS[:-1]) + "  label"
    lines = [header]
    for row in model.rows:
        values = row.csv_values()
        line = " ".join(value.rjust(5) for value in values[:-1]) + "  " + values[-1]
        if row.violations:
            line += "  !! " + "; ".join(row.violations)
        lines.append(line)
    lines.append(f"{len(model.rows)} rows, {model.violations} violation(s)")
    return "\n".join(lines)


# CSV


def invariants_csv(model: InvariantSetRead) -> str:
    return _csv(["c", "d", "degree"], [(c, d, deg) for (c, d), deg in zip(model.points, model.degrees)])


def kernel_csv(model: KernelRead) -> str:
    return _csv(["index", "generator"], enumerate(model.generators))


def resolution_csv(model: ResolutionRead) -> str:
    return _csv(["i", "j", "count"], [(e.i, e.j, e.count) for e in model.betti])


def verification_csv(model: VerificationRead) -> str:
    return _csv(
        ["check", "passed", "detail"],
        [(name, ok, model.details.get(name, "")) for name, ok in model.checks.items()],
    )


def classification_csv(model: ClassificationRead) -> str:
    evidence = model.evidence.model_dump()
    return _csv(CSV_COLUMNS, [[evidence[c] for c in CSV_COLUMNS[:-1]] + [model.label]])


def sweep_csv(model: SweepRead) -> str:
    return _csv(CSV_COLUMNS, [row.csv_values() for row in model.rows])


_RENDERERS: Dict[Type[BaseModel], Dict[str, Callable]] = {
    InvariantSetRead: {"table": invariants_table, "csv": invariants_csv},
    KernelRead: {"table": kernel_table, "csv": kernel_csv},
    ResolutionRead: {"table": resolution_table, "csv": resolution_csv},
    VerificationRead: {"table": verification_table, "csv": verification_csv},
    ClassificationRead: {"table": classification_table, "csv": classification_csv},
    SweepRead: {"table": sweep_table, "csv": sweep_csv},
}


def render(model: BaseModel, fmt: str) -> str:
    """
    Render a result schema in the requested format.

    Raises:
        ParameterError: If the format is unknown
    """
    if fmt == "json":
        return to_json(model)
    try:
        return _RENDERERS[type(model)][fmt](model)
    except KeyError:
        raise ParameterError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}") from None
