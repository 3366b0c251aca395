"""Built-in rings with the classification facts each one is expected to show."""

from __future__ import annotations

from dataclasses import dataclass, field

from .constructions import build_ring
from .parse import parse_spec
from .ring import TABLE_BOUND

LITERATURE = "literature"  # claim stated for this example in the source material
DERIVED = "derived"  # claim established here by an independent exhaustive computation

NOT_RICKART_BUT_GR = {"rickart": False, "generalized_rickart": True}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    expression: str
    expected: dict
    source: str
    note: str = ""
    mode: str = "full"
    witnesses: tuple = field(default=())  # witness files for witness mode

    @property
    def spec(self):
        return parse_spec(self.expression)

    def build(self, table_bound=TABLE_BOUND):
        return build_ring(self.spec, table_bound=table_bound)


def _entry(name, expression, expected, source, note="", **kw):
    return CatalogEntry(name, expression, dict(expected), source, note, **kw)


ENTRIES = (
    _entry("zmod4", "zmod(4)", {**NOT_RICKART_BUT_GR, "projections": ["0", "1"]}, LITERATURE,
           "r(2) = {0,2} is not generated by a projection; r(2^2) = Z4"),
    _entry("zmod12", "zmod(12)", {"generalized_rickart": True, "projections": ["0", "1", "4", "9"]},
           LITERATURE, "GRP(2) = 4, GLP(3) = 9"),
    _entry("m2z3", "matrix(zmod(3), 2)",
           {"parallelogram_law": False, "pc": False, "gc": False, "central_projections": ["[[0,0],[0,0]]", "[[1,0],[0,1]]"]},
           LITERATURE, "E11 and the all-twos matrix are not equivalent"),
    _entry("m4z4", "matrix(zmod(4), 4)", {"generalized_weakly_rickart": False}, LITERATURE,
           "witness A has first row all ones and no GRP", mode="witness", witnesses=("data:m4z4_A.mat",)),
    _entry("quaternion-z2", "quaternion_z2", NOT_RICKART_BUT_GR, LITERATURE,
           "every element is invertible or nilpotent; conjugation is the identity mod 2"),
    _entry("f2c2", "groupalg(2, 2)", NOT_RICKART_BUT_GR, LITERATURE, "r(1+g) = {0, 1+g}"),
    _entry("f2c4", "groupalg(2, 4)", NOT_RICKART_BUT_GR, LITERATURE),
    _entry("f2c2c2", "groupalg(2, 2, 2)", NOT_RICKART_BUT_GR, LITERATURE),
    _entry("f3c3", "groupalg(3, 3)", NOT_RICKART_BUT_GR, LITERATURE),
    _entry("polyquot-2-2", "polyquot(2, 2)", NOT_RICKART_BUT_GR, DERIVED,
           "finite local stand-in for the complex polynomial quotient"),
    _entry("polyquot-2-3", "polyquot(2, 3)", NOT_RICKART_BUT_GR, DERIVED),
    _entry("polyquot-3-2", "polyquot(3, 2)", NOT_RICKART_BUT_GR, DERIVED),
    _entry("zmod2", "zmod(2)", {"rickart": True, "generalized_rickart": True}, DERIVED, "a field"),
    _entry("zmod3", "zmod(3)", {"rickart": True, "generalized_rickart": True}, DERIVED, "a field"),
    _entry("zmod8", "zmod(8)", NOT_RICKART_BUT_GR, LITERATURE),
    _entry("zmod16", "zmod(16)", NOT_RICKART_BUT_GR, LITERATURE),
    _entry("zmod9", "zmod(9)", NOT_RICKART_BUT_GR, LITERATURE),
    _entry("example-sum", "sum(sum(polyquot(2, 2), groupalg(2, 2)), zmod(4))", NOT_RICKART_BUT_GR,
           LITERATURE, "finite analog of the three-summand example"),
    _entry("triangular-s3-z2", "triangular(S, 3, zmod(2))", NOT_RICKART_BUT_GR, LITERATURE),
    _entry("triangular-s3-z3", "triangular(S, 3, zmod(3))", NOT_RICKART_BUT_GR, LITERATURE),
    _entry("triangular-a4-z2", "triangular(A, 4, zmod(2))", NOT_RICKART_BUT_GR, LITERATURE),
    _entry("triangular-b4-z2", "triangular(B, 4, zmod(2))", NOT_RICKART_BUT_GR, LITERATURE),
    _entry("triangular-u4-z2", "triangular(U, 4, zmod(2))", NOT_RICKART_BUT_GR, LITERATURE),
    _entry("triangular-v3-z3", "triangular(V, 3, zmod(3))", NOT_RICKART_BUT_GR, LITERATURE),
    _entry("triangular-v4-z2", "triangular(V, 4, zmod(2))", NOT_RICKART_BUT_GR, LITERATURE),
    _entry("triangular-b3-z2", "triangular(B, 3, zmod(2))", {"generalized_rickart": False}, DERIVED,
           "the floor formulas give all upper triangular matrices at n = 3"),
    _entry("unitify-demo", 'unitify(cayley("data:z4_even.ring"), 2)',
           {"generalized_rickart": True, "unity": "(0,1)"}, DERIVED,
           "unitification of the non-unital ring {0,2} in Z4"),
    _entry("z4-even", 'cayley("data:z4_even.ring")',
           {"generalized_weakly_rickart": True, "generalized_rickart": False, "unity": None}, DERIVED,
           "no unity, every element has GRP 0"),
    _entry("z4+z4", "sum(zmod(4), zmod(4))",
           {"generalized_rickart": True, "central_projections": ["(0,0)", "(1,0)", "(0,1)", "(1,1)"]}, DERIVED),
    _entry("m2z2", "matrix(zmod(2), 2)", {"generalized_weakly_rickart": False, "weakly_proper": False}, DERIVED,
           "x = [[1,1],[0,0]] has x x* = 0 but is idempotent"),
)

BY_NAME = {e.name: e for e in ENTRIES}


def lookup(name):
    return BY_NAME.get(name)


def fragment_of(report):
    """The report's values for the keys catalog fragments may mention."""
    R = report.ring
    out = {name: v.holds for name, v in report.verdicts.items()}
    out["unity"] = None if report.unity is None else R.label(report.unity)
    out["size"] = report.size
    if report.projections is not None:
        out["projections"] = [R.label(e) for e in report.projections]
        out["central_projections"] = [R.label(e) for e in report.central_projections]
    return out


def mismatches(entry, report):
    """``{key: (expected, actual)}`` for every expected key the report contradicts."""
    actual = fragment_of(report)
    return {k: (v, actual.get(k)) for k, v in entry.expected.items() if actual.get(k) != v}
