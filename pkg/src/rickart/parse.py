"""Parse construction expressions such as ``unitify(cayley("even.ring"), 2)``.

The grammar is a subset of Python call syntax, so the stdlib ``ast`` module
does the tokenising and reports positions.  Constructor names::

    zmod(n)                      matrix(base, k)
    groupalg(p, o1, o2, ...)     quaternion_z2
    sum(a, b)                    polyquot(p, n)
    triangular(S|A|B|U|V, n, base)
    unitify(base, p)             cayley("path" | "data:name")
"""

from __future__ import annotations

import ast

from .constructions import ConstructionSpec
from .errors import ParseError

ALIASES = {
    "zmod": "zmod", "ZMod": "zmod",
    "matrix": "matrix", "MatrixRing": "matrix",
    "groupalg": "groupalg", "GroupAlgebra": "groupalg",
    "quaternion_z2": "quaternion_z2", "QuaternionZ2": "quaternion_z2",
    "sum": "sum", "dsum": "sum", "DirectSum": "sum",
    "polyquot": "polyquot", "PolyQuotient": "polyquot",
    "triangular": "triangular", "Triangular": "triangular",
    "unitify": "unitify", "Unitify": "unitify",
    "cayley": "cayley", "CayleyTable": "cayley",
}
NULLARY = {"quaternion_z2"}
TRIANGULAR_KINDS = {"S", "A", "B", "U", "V"}


def _fail(node, message):
    raise ParseError(message, getattr(node, "lineno", 1), getattr(node, "col_offset", 0) + 1)


def _convert(node, in_triangular_kind=False):
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, (int, str)):
            _fail(node, f"unsupported literal {node.value!r}")
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub) and isinstance(node.operand, ast.Constant):
        _fail(node, "negative parameters are not allowed")
    if isinstance(node, ast.Name):
        if in_triangular_kind and node.id in TRIANGULAR_KINDS:
            return node.id
        kind = ALIASES.get(node.id)
        if kind in NULLARY:
            return ConstructionSpec(kind)
        _fail(node, f"unknown name {node.id!r}")
    if isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name):
            _fail(node, "constructor must be a plain name")
        kind = ALIASES.get(node.func.id)
        if kind is None:
            _fail(node.func, f"unknown constructor {node.func.id!r}")
        if node.keywords:
            _fail(node.keywords[0], "keyword arguments are not supported")
        args = tuple(
            _convert(a, in_triangular_kind=(kind == "triangular" and i == 0))
            for i, a in enumerate(node.args)
        )
        return ConstructionSpec(kind, args)
    _fail(node, f"unexpected {type(node).__name__}")


def parse_spec(text):
    """Parse an expression into a ConstructionSpec tree (errors carry line/column)."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ParseError(exc.msg, exc.lineno or 1, exc.offset or 1) from None
    result = _convert(tree.body)
    if not isinstance(result, ConstructionSpec):
        _fail(tree.body, "expression must be a ring constructor")
    return result
