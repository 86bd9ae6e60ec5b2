"""JSON-level (de)serialization of every domain object.

Scalars travel as their canonical text syntax; vectors as dense 1-based
lists of scalar strings; families as "canonical" or a list of member
vectors; clopens as {"finite": [...]} / {"cofinite": [...]}.  Parsing
and serializing are exact inverses on canonical forms, which the golden
CLI tests pin down byte for byte.
"""

from __future__ import annotations

from typing import Any

from .c0space import CANONICAL, OrthonormalFamily, Vector
from .errors import ParseError, ValidationError
from .gelfand import NStarFunction, SpectralOperator
from .kfield import Scalar, format_scalar, parse_scalar
from .lt_subalgebra import SigmaClopen, ValueTable
from .nstar_measure import INFINITY_POINT, Clopen, TaggedPartition
from .operators import MatrixOperator


def _fail(path: str, message: str) -> ParseError:
    return ParseError(f"{path}: {message}")


def read_scalar(data: Any, path: str = "scalar") -> Scalar:
    if not isinstance(data, str):
        raise _fail(path, f"expected a scalar string, got {type(data).__name__}")
    try:
        return parse_scalar(data)
    except ParseError as exc:
        raise _fail(path, str(exc)) from exc


def write_scalar(x: Scalar) -> str:
    return format_scalar(x)


def read_vector(data: Any, path: str = "vector") -> Vector:
    if not isinstance(data, list):
        raise _fail(path, "expected a list of scalar strings")
    values = [read_scalar(s, f"{path}[{i}]") for i, s in enumerate(data)]
    return Vector.of(values)


def write_vector(v: Vector) -> list[str]:
    return [write_scalar(v.get(i)) for i in range(1, v.max_index + 1)]


def read_matrix(data: Any, path: str = "matrix") -> MatrixOperator:
    if not isinstance(data, list) or not data:
        raise _fail(path, "expected a non-empty list of rows")
    rows = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != len(data):
            raise _fail(f"{path}[{i}]", "matrix must be square")
        rows.append(tuple(read_scalar(s, f"{path}[{i}][{j}]")
                          for j, s in enumerate(row)))
    return MatrixOperator(tuple(rows))


def write_matrix(m: MatrixOperator) -> list[list[str]]:
    return [[write_scalar(x) for x in row] for row in m.rows]


def read_family(data: Any, path: str = "family") -> OrthonormalFamily:
    if data is None or data == "canonical":
        return CANONICAL
    if not isinstance(data, list):
        raise _fail(path, 'expected "canonical" or a list of vectors')
    members = tuple(read_vector(v, f"{path}[{i}]")
                    for i, v in enumerate(data))
    try:
        return OrthonormalFamily(members)
    except ValueError as exc:
        raise ValidationError(f"{path}: {exc}") from exc


def write_family(fam: OrthonormalFamily) -> Any:
    if fam.canonical:
        return "canonical"
    return [write_vector(y) for y in fam.members]


def read_operator(data: Any, path: str = "operator") -> SpectralOperator:
    if not isinstance(data, dict):
        raise _fail(path, "expected an object with alpha/lambda/family")
    extras = set(data) - {"alpha", "lambda", "family"}
    if extras:
        raise _fail(path, f"unknown keys {sorted(extras)}")
    alpha = read_scalar(data.get("alpha", "0"), f"{path}.alpha")
    lam = read_vector(data.get("lambda", []), f"{path}.lambda")
    family = read_family(data.get("family"), f"{path}.family")
    try:
        return SpectralOperator(alpha, lam, family)
    except ValidationError:
        raise
    except Exception as exc:
        raise ValidationError(f"{path}: {exc}") from exc


def write_operator(h: SpectralOperator) -> dict:
    return {
        "alpha": write_scalar(h.alpha),
        "lambda": write_vector(h.lam),
        "family": write_family(h.family),
    }


def read_function(data: Any, path: str = "function") -> NStarFunction:
    if not isinstance(data, dict):
        raise _fail(path, "expected an object with at_infinity/deviations")
    extras = set(data) - {"at_infinity", "deviations"}
    if extras:
        raise _fail(path, f"unknown keys {sorted(extras)}")
    return NStarFunction(
        read_scalar(data.get("at_infinity", "0"), f"{path}.at_infinity"),
        read_vector(data.get("deviations", []), f"{path}.deviations"))


def write_function(f: NStarFunction) -> dict:
    return {
        "at_infinity": write_scalar(f.at_infinity),
        "deviations": write_vector(f.deviations),
    }


def read_clopen(data: Any, path: str = "clopen") -> Clopen:
    if not isinstance(data, dict) or len(data) != 1:
        raise _fail(path, 'expected {"finite": [...]} or {"cofinite": [...]}')
    (kind, points), = data.items()
    if kind not in ("finite", "cofinite"):
        raise _fail(path, f"unknown clopen kind {kind!r}")
    if not isinstance(points, list) or not all(
            isinstance(p, int) and p >= 1 for p in points):
        raise _fail(path, "points must be positive integers")
    return Clopen(kind == "cofinite", tuple(points))


def write_clopen(c: Clopen) -> dict:
    key = "cofinite" if c.cofinite else "finite"
    return {key: list(c.base)}


def read_partition(data: Any, path: str = "partition") -> TaggedPartition:
    if not isinstance(data, list):
        raise _fail(path, "expected a list of {piece, tag} objects")
    pieces = []
    for i, item in enumerate(data):
        if not isinstance(item, dict) or set(item) != {"piece", "tag"}:
            raise _fail(f"{path}[{i}]", "expected keys piece and tag")
        piece = read_clopen(item["piece"], f"{path}[{i}].piece")
        tag = item["tag"]
        if tag == "inf":
            tag = INFINITY_POINT
        elif not (isinstance(tag, int) and tag >= 1):
            raise _fail(f"{path}[{i}].tag",
                        'expected a positive integer or "inf"')
        pieces.append((piece, tag))
    return TaggedPartition(tuple(pieces))


def write_partition(p: TaggedPartition) -> list[dict]:
    out = []
    for piece, tag in p.pieces:
        written = "inf" if tag == INFINITY_POINT else tag
        out.append({"piece": write_clopen(piece), "tag": written})
    return out


def read_table(data: Any, path: str = "table") -> ValueTable:
    if not isinstance(data, dict):
        raise _fail(path, "expected an object with at_zero/values")
    extras = set(data) - {"at_zero", "values"}
    if extras:
        raise _fail(path, f"unknown keys {sorted(extras)}")
    at_zero = read_scalar(data.get("at_zero", "0"), f"{path}.at_zero")
    pairs = {}
    for i, item in enumerate(data.get("values", [])):
        if not isinstance(item, dict) or set(item) != {"eigenvalue", "value"}:
            raise _fail(f"{path}.values[{i}]",
                        "expected keys eigenvalue and value")
        ev = read_scalar(item["eigenvalue"], f"{path}.values[{i}].eigenvalue")
        pairs[ev] = read_scalar(item["value"], f"{path}.values[{i}].value")
    return ValueTable.from_mapping(at_zero, pairs)


def write_table(t: ValueTable) -> dict:
    return {
        "at_zero": write_scalar(t.at_zero),
        "values": [{"eigenvalue": write_scalar(v), "value": write_scalar(fv)}
                   for v, fv in t.values],
    }


def read_sigma_clopen(data: Any, path: str = "sigma_clopen") -> SigmaClopen:
    if not isinstance(data, dict) or len(data) != 1:
        raise _fail(path,
                    'expected {"values": [...]} or {"without": [...]}')
    (kind, values), = data.items()
    if kind not in ("values", "without"):
        raise _fail(path, f"unknown sigma-clopen kind {kind!r}")
    if not isinstance(values, list):
        raise _fail(path, "expected a list of scalar strings")
    scalars = tuple(read_scalar(s, f"{path}[{i}]")
                    for i, s in enumerate(values))
    return SigmaClopen(kind == "without", scalars)


def write_sigma_clopen(c: SigmaClopen) -> dict:
    key = "without" if c.complemented else "values"
    return {key: [write_scalar(v) for v in c.values]}
