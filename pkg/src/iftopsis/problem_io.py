"""Reading and writing decision problems.

The canonical on-disk form is a JSON document:

    {
      "alternatives": ["A1", "A2"],
      "attributes": [{"name": "O1", "kind": "benefit"}, ...],
      "weights": {"scalar": [0.5, 0.5]}  or  {"ifv": [[1.0, 0.0], ...]},
      "matrix": [[[0.6, 0.3], [0.5, 0.2]], ...]
    }

The writer is canonical: fixed key order, two-space indent, LF line
endings, one trailing newline.  A document written by dump_problem
re-parses to an equal problem and re-serializes to identical bytes.

Validation failures raise ProblemFormatError with the source name and
the JSON path of the offending field.  A small CSV importer is included
for spreadsheet users: one alternative per row, cells holding "mu,nu"
pairs.
"""

from __future__ import annotations

import csv
import json
import os
from pathlib import Path
from typing import Any, Sequence

from .errors import IFTopsisError, ProblemFormatError
from .topsis import Attribute, DecisionProblem, IfvWeights, ScalarWeights
from .values import IFV

DATA_DIR_ENV = "IFTOPSIS_DATA"

#: Problems bundled with the package, resolvable by bare name.
BUNDLED_PROBLEMS = ("table2", "table3", "table4", "table7", "table10")


def data_dir() -> Path:
    """Directory of bundled problem files, overridable by environment."""
    override = os.environ.get(DATA_DIR_ENV)
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


def resolve_problem_path(name: str) -> Path:
    """Map a CLI argument to a problem file.

    An existing path wins; otherwise bare names are looked up in the
    data directory, with or without the .json suffix.
    """
    p = Path(name)
    if p.exists():
        return p
    for candidate in (data_dir() / f"{name}.json", data_dir() / name):
        if candidate.exists():
            return candidate
    raise ProblemFormatError(
        f"{name}: no such file and no bundled problem of that name "
        f"(bundled: {', '.join(BUNDLED_PROBLEMS)})"
    )


def _fail(source: str, path: str, message: str) -> None:
    where = f"{source}: {path}: " if path else f"{source}: "
    raise ProblemFormatError(where + message)


def _number(x: Any) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _parse_pair(value: Any, source: str, path: str) -> IFV:
    if not (isinstance(value, list) and len(value) == 2 and all(_number(v) for v in value)):
        _fail(source, path, "expected a [mu, nu] pair of numbers")
    try:
        return IFV(float(value[0]), float(value[1]))
    except IFTopsisError as exc:
        _fail(source, path, str(exc))
    raise AssertionError("unreachable")


def parse_problem(text: str, source: str = "<string>") -> DecisionProblem:
    """Parse and validate a problem document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(
            f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        _fail(source, "", "top level must be an object")
    required = ("alternatives", "attributes", "weights", "matrix")
    for key in required:
        if key not in doc:
            _fail(source, "", f"missing key {key!r}")
    for key in doc:
        if key not in required:
            _fail(source, key, "unknown key")

    alternatives = doc["alternatives"]
    if not (isinstance(alternatives, list) and all(isinstance(a, str) for a in alternatives)):
        _fail(source, "alternatives", "expected a list of strings")

    raw_attrs = doc["attributes"]
    if not isinstance(raw_attrs, list):
        _fail(source, "attributes", "expected a list of objects")
    attributes = []
    for j, item in enumerate(raw_attrs):
        path = f"attributes[{j}]"
        if not isinstance(item, dict) or "name" not in item:
            _fail(source, path, "expected an object with a 'name'")
        if not isinstance(item["name"], str):
            _fail(source, f"{path}.name", "expected a string")
        kind = item.get("kind", "benefit")
        for key in item:
            if key not in ("name", "kind"):
                _fail(source, f"{path}.{key}", "unknown key")
        try:
            attributes.append(Attribute(item["name"], kind))
        except IFTopsisError as exc:
            _fail(source, f"{path}.kind", str(exc))

    raw_weights = doc["weights"]
    if not (isinstance(raw_weights, dict) and len(raw_weights) == 1):
        _fail(source, "weights", "expected an object with exactly one of 'scalar' or 'ifv'")
    (wkind, wvals), = raw_weights.items()
    if wkind == "scalar":
        if not (isinstance(wvals, list) and all(_number(v) for v in wvals)):
            _fail(source, "weights.scalar", "expected a list of numbers")
        try:
            weights: ScalarWeights | IfvWeights = ScalarWeights(tuple(float(v) for v in wvals))
        except IFTopsisError as exc:
            _fail(source, "weights.scalar", str(exc))
    elif wkind == "ifv":
        if not isinstance(wvals, list):
            _fail(source, "weights.ifv", "expected a list of [mu, nu] pairs")
        weights = IfvWeights(
            tuple(
                _parse_pair(v, source, f"weights.ifv[{j}]") for j, v in enumerate(wvals)
            )
        )
    else:
        _fail(source, "weights", f"unknown weight kind {wkind!r}")

    raw_matrix = doc["matrix"]
    if not isinstance(raw_matrix, list):
        _fail(source, "matrix", "expected a list of rows")
    matrix = []
    for i, row in enumerate(raw_matrix):
        if not isinstance(row, list):
            _fail(source, f"matrix[{i}]", "expected a list of [mu, nu] pairs")
        matrix.append(
            tuple(
                _parse_pair(e, source, f"matrix[{i}][{j}]") for j, e in enumerate(row)
            )
        )

    try:
        return DecisionProblem(tuple(alternatives), tuple(attributes), tuple(matrix), weights)
    except IFTopsisError as exc:
        _fail(source, "", str(exc))
    raise AssertionError("unreachable")


def load_problem(path: str | Path) -> DecisionProblem:
    """Load a problem document from a file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ProblemFormatError(f"{path}: {exc.strerror or exc}") from exc
    return parse_problem(text, source=str(path))


def problem_to_dict(problem: DecisionProblem) -> dict[str, Any]:
    """The JSON-ready form of a problem, in canonical key order."""
    if isinstance(problem.weights, ScalarWeights):
        weights: dict[str, Any] = {"scalar": list(problem.weights.values)}
    else:
        weights = {"ifv": [[w.mu, w.nu] for w in problem.weights.values]}
    return {
        "alternatives": list(problem.alternatives),
        "attributes": [{"name": a.name, "kind": a.kind} for a in problem.attributes],
        "weights": weights,
        "matrix": [[[e.mu, e.nu] for e in row] for row in problem.matrix],
    }


def dump_problem(problem: DecisionProblem) -> str:
    """Serialize a problem canonically (stable bytes for equal problems)."""
    return json.dumps(problem_to_dict(problem), indent=2) + "\n"


def save_problem(problem: DecisionProblem, path: str | Path) -> None:
    Path(path).write_text(dump_problem(problem), encoding="utf-8", newline="\n")


# ---------------------------------------------------------------------------
# CSV import.

def load_matrix_csv(path: str | Path) -> tuple[list[str], list[str], list[tuple[IFV, ...]]]:
    """Read an alternatives-by-attributes matrix of "mu,nu" cells.

    The first row is a header: a corner label followed by attribute
    names.  Every following row is an alternative name followed by one
    "mu,nu" cell per attribute.  Returns (alternatives, attribute
    names, matrix rows).
    """
    path = Path(path)
    source = str(path)
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise ProblemFormatError(f"{source}: {exc.strerror or exc}") from exc
    if len(rows) < 2:
        raise ProblemFormatError(f"{source}: need a header row and at least one data row")
    header = rows[0]
    if len(header) < 2:
        raise ProblemFormatError(f"{source}: header needs at least one attribute column")
    attr_names = [h.strip() for h in header[1:]]
    alternatives: list[str] = []
    matrix: list[tuple[IFV, ...]] = []
    for r, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise ProblemFormatError(
                f"{source}: row {r}: expected {len(header)} cells, got {len(row)}"
            )
        alternatives.append(row[0].strip())
        entries = []
        for c, cell in enumerate(row[1:], start=1):
            parts = cell.split(",")
            try:
                if len(parts) != 2:
                    raise ValueError("expected 'mu,nu'")
                entries.append(IFV(float(parts[0]), float(parts[1])))
            except (ValueError, IFTopsisError) as exc:
                raise ProblemFormatError(
                    f"{source}: row {r}, column {attr_names[c-1]!r}: "
                    f"bad cell {cell!r}: {exc}"
                ) from exc
        matrix.append(tuple(entries))
    return alternatives, attr_names, matrix


def problem_from_csv(
    path: str | Path,
    weights: Sequence[float],
    kinds: Sequence[str] | None = None,
) -> DecisionProblem:
    """Build a problem from a CSV matrix plus explicit scalar weights."""
    alternatives, attr_names, matrix = load_matrix_csv(path)
    kind_list = tuple(kinds) if kinds else ("benefit",) * len(attr_names)
    if len(kind_list) != len(attr_names):
        raise ProblemFormatError(
            f"{path}: {len(kind_list)} kinds for {len(attr_names)} attributes"
        )
    try:
        attrs = tuple(Attribute(n, k) for n, k in zip(attr_names, kind_list))
        return DecisionProblem(
            tuple(alternatives), attrs, tuple(matrix), ScalarWeights(tuple(weights))
        )
    except ProblemFormatError:
        raise
    except IFTopsisError as exc:
        raise ProblemFormatError(f"{path}: {exc}") from exc
