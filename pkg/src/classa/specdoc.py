"""Line-oriented ``key = value`` curve documents.

Raw form::

    # cubic with a diagonal generator
    matrix = 5/4, 0, 0, 1/10
    seed = 1, -1
    degree = 3
    base = 0, 0          # optional

Eigen form replaces ``matrix`` by ``h``, ``phi`` and optionally ``gamma``
(default pi/2) and builds ``M = P (h R(phi)) P^-1`` with
``P = [[1, cos gamma], [0, sin gamma]]``.

Values are arithmetic expressions over numbers, ``pi``, ``sqrt``, ``sin``,
``cos`` and ``tan``.  Integer fractions such as ``3/4`` are evaluated exactly
and rounded once.
"""

from __future__ import annotations

import ast
import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .curve import CurveSpec
from .linalg import from_eigen_data


class DocumentError(ValueError):
    pass


_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}
_FUNCS = {"sqrt": math.sqrt, "sin": math.sin, "cos": math.cos, "tan": math.tan}
_CONSTS = {"pi": math.pi}


def _eval(node):
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
        return Fraction(node.value) if isinstance(node.value, int) else node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.UAdd, ast.USub)):
        x = _eval(node.operand)
        return -x if isinstance(node.op, ast.USub) else x
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        a, b = _eval(node.left), _eval(node.right)
        if isinstance(node.op, ast.Pow) and abs(b) > 64:
            raise DocumentError("exponent too large")
        if isinstance(node.op, ast.Pow) and isinstance(a, Fraction) and not (
            isinstance(b, Fraction) and b.denominator == 1
        ):
            a = float(a)
        try:
            out = _BINOPS[type(node.op)](a, b)
        except (ZeroDivisionError, OverflowError) as exc:
            raise DocumentError(f"arithmetic error: {exc}") from exc
        if isinstance(out, complex):
            raise DocumentError("expression has a complex value")
        return out
    if isinstance(node, ast.Name) and node.id in _CONSTS:
        return _CONSTS[node.id]
    if (
        isinstance(node, ast.Call)
        and isinstance(node.func, ast.Name)
        and node.func.id in _FUNCS
        and len(node.args) == 1
        and not node.keywords
    ):
        try:
            return _FUNCS[node.func.id](float(_eval(node.args[0])))
        except ValueError as exc:
            raise DocumentError(f"{node.func.id}: {exc}") from exc
    raise DocumentError(f"unsupported expression: {ast.dump(node)}")


def parse_number(text: str) -> float:
    """Evaluate one numeric expression, e.g. ``-3*sqrt(3)/4``."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise DocumentError(f"cannot parse number {text!r}") from exc
    value = float(_eval(tree.body))
    if not math.isfinite(value):
        raise DocumentError(f"non-finite value {text!r}")
    return value


def _numbers(text: str, count: int, key: str) -> tuple[float, ...]:
    parts = [p for p in text.split(",")]
    if len(parts) != count:
        raise DocumentError(f"{key} needs {count} comma-separated values, got {len(parts)}")
    return tuple(parse_number(p) for p in parts)


@dataclass(frozen=True)
class RawDocument:
    matrix: tuple
    seed: tuple
    degree: int
    base: tuple = (0.0, 0.0)

    form = "raw"

    def generator(self):
        m = self.matrix
        return [[m[0], m[1]], [m[2], m[3]]]


@dataclass(frozen=True)
class EigenDocument:
    h: float
    phi: float
    seed: tuple
    degree: int
    gamma: float = math.pi / 2
    base: tuple = (0.0, 0.0)

    form = "eigen"

    def generator(self):
        return from_eigen_data(self.h, self.phi, self.gamma)


SpecDocument = RawDocument | EigenDocument

_RAW_KEYS = {"matrix", "seed", "degree", "base"}
_EIGEN_KEYS = {"h", "phi", "gamma", "seed", "degree", "base"}


def _validate(doc):
    if doc.degree < 2:
        raise DocumentError("degree must be >= 2")
    if not any(doc.seed):
        raise DocumentError("seed must be nonzero")
    if isinstance(doc, EigenDocument) and doc.h <= 0:
        raise DocumentError("h must be positive")
    return doc


def parse_document(text: str) -> SpecDocument:
    fields: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DocumentError(f"line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in fields:
            raise DocumentError(f"line {lineno}: duplicate key {key!r}")
        if key not in _RAW_KEYS | _EIGEN_KEYS:
            raise DocumentError(f"line {lineno}: unknown key {key!r}")
        fields[key] = value

    raw, eigen = "matrix" in fields, bool({"h", "phi", "gamma"} & fields.keys())
    if raw == eigen:
        raise DocumentError("document needs exactly one of: matrix, or h/phi[/gamma]")
    missing = {"seed", "degree"} - fields.keys()
    if missing:
        raise DocumentError(f"missing keys: {', '.join(sorted(missing))}")

    degree = parse_number(fields["degree"])
    if degree != int(degree):
        raise DocumentError("degree must be an integer")
    common = {
        "seed": _numbers(fields["seed"], 2, "seed"),
        "degree": int(degree),
        "base": _numbers(fields["base"], 2, "base") if "base" in fields else (0.0, 0.0),
    }
    if raw:
        return _validate(RawDocument(matrix=_numbers(fields["matrix"], 4, "matrix"), **common))
    if not {"h", "phi"} <= fields.keys():
        raise DocumentError("eigen form needs both h and phi")
    gamma = parse_number(fields["gamma"]) if "gamma" in fields else math.pi / 2
    return _validate(
        EigenDocument(h=parse_number(fields["h"]), phi=parse_number(fields["phi"]), gamma=gamma, **common)
    )


def _fmt(xs) -> str:
    return ", ".join(repr(float(x)) for x in xs)


def format_document(doc: SpecDocument) -> str:
    if isinstance(doc, RawDocument):
        lines = [f"matrix = {_fmt(doc.matrix)}"]
    else:
        lines = [f"h = {float(doc.h)!r}", f"phi = {float(doc.phi)!r}", f"gamma = {float(doc.gamma)!r}"]
    lines += [f"seed = {_fmt(doc.seed)}", f"degree = {doc.degree}", f"base = {_fmt(doc.base)}"]
    return "\n".join(lines) + "\n"


def read_document(path) -> SpecDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    return parse_document(text)


def to_spec(doc: SpecDocument) -> CurveSpec:
    return CurveSpec(doc.degree, doc.generator(), doc.seed, doc.base)
