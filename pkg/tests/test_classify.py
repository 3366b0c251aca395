import pytest

import oracles
from rickart import catalog
from rickart.classify import (PROPERTIES, ClassificationReport, El, ReportInconsistency, Verdict, all_grp,
                              bound_formulas, classify, classify_witness, decompose, glp, grp, grp_certifies,
                              grp_witness, has_gc, is_generalized_rickart, is_generalized_weakly_rickart,
                              is_rickart, orthogonal_decomposition, weakly_proper)
from rickart.cli import witness_code
from rickart.constructions import build_ring
from rickart.errors import NoUnity
from rickart.parse import parse_spec

SMALL = ["zmod(4)", "zmod(12)", "zmod(8)", "zmod(6)", "groupalg(2, 2)", "groupalg(3, 3)", "quaternion_z2",
         "matrix(zmod(2), 2)", "matrix(zmod(3), 2)", "polyquot(2, 2)", "sum(zmod(4), zmod(4))",
         "triangular(S, 3, zmod(2))", "triangular(B, 3, zmod(2))", 'cayley("data:z4_even.ring")',
         'unitify(cayley("data:z4_even.ring"), 2)']


def ring(expr, **kw):
    return build_ring(parse_spec(expr), **kw)


def mcode(rows, q):
    k = len(rows)
    return sum(rows[i][j] * q ** (i * k + j) for i in range(k) for j in range(k))


@pytest.mark.parametrize("expr", SMALL)
def test_grp_and_glp_pairs_match_oracle(expr):
    R = ring(expr)
    for x in range(R.size):
        for side, fn in (("right", grp), ("left", glp)):
            expected = oracles.grp_pairs(R, x, side)
            res = fn(R, x)
            if not expected:
                assert res is None
                continue
            assert res.pairs == tuple(sorted(expected))
            assert (res.n, res.e) == min(expected)
            assert all(grp_certifies(R, x, e, n, side) for n, e in expected)


@pytest.mark.parametrize("expr", SMALL)
def test_rickart_chain_verdicts_match_oracle(expr):
    R = ring(expr)
    assert is_rickart(R).holds == oracles.is_rickart(R)
    assert is_generalized_rickart(R).holds == oracles.is_generalized_rickart(R)
    assert is_generalized_weakly_rickart(R).holds == oracles.is_generalized_weakly_rickart(R)
    assert weakly_proper(R).holds == oracles.weakly_proper(R)


def test_z4_counterexample_and_witness():
    R = ring("zmod(4)")
    v = is_rickart(R)
    assert v.holds is False and v.counterexample == {"x": 2}
    g = is_generalized_rickart(R)
    assert g.holds and g.witness[El(2)] == (2, El(1))


def test_z12_grp_and_glp():
    R = ring("zmod(12)")
    assert (grp(R, 2).n, grp(R, 2).e) == (2, 4)
    left = glp(R, 3)
    assert left.e == 9 and left.n == 1


def test_m2z3_classification():
    report = classify(ring("matrix(zmod(3), 2)"))
    holds = {k: v.holds for k, v in report.verdicts.items()}
    assert holds == {"rickart": True, "generalized_rickart": True, "generalized_weakly_rickart": True,
                     "weakly_proper": True, "parallelogram_law": False, "pc": False, "gc": False,
                     "orthogonal_gc": True}
    assert report.extras["bound_formulas"] == {"applicable": True, "agree": 72, "disagree": 0,
                                               "first_disagreement": None}
    assert len(report.extras["grp_not_unique"]) == 8


def test_m2z3_grp_depends_on_exponent():
    R = ring("matrix(zmod(3), 2)")
    e12, e22 = mcode([[0, 1], [0, 0]], 3), mcode([[0, 0], [0, 1]], 3)
    res = grp(R, e12)
    assert res.pairs == ((1, e22), (2, 0))


def test_m2z2_is_not_gwr():
    R = ring("matrix(zmod(2), 2)")
    x = mcode([[1, 1], [0, 0]], 2)
    assert R.mul(x, R.star(x)) == 0 and R.mul(x, x) == x
    assert weakly_proper(R).holds is False
    assert is_generalized_weakly_rickart(R).holds is False


def test_non_unital_ring_is_gwr_but_not_gr():
    report = classify(ring('cayley("data:z4_even.ring")'))
    assert report.holds("generalized_weakly_rickart") and not report.holds("generalized_rickart")
    assert report.holds("gc") is None and "no unity" in report.verdicts["gc"].note
    assert report.extras["bound_formulas"] == {"applicable": False}
    with pytest.raises(NoUnity):
        has_gc(ring('cayley("data:z4_even.ring")'))


@pytest.mark.parametrize("entry", [e for e in catalog.ENTRIES if e.mode == "full"], ids=lambda e: e.name)
def test_catalog_expectations(entry):
    report = classify(entry.build())
    assert catalog.mismatches(entry, report) == {}
    assert list(report.verdicts) == list(PROPERTIES)


GR_ENTRIES = [e for e in catalog.ENTRIES if e.mode == "full" and e.expected.get("generalized_rickart")]


@pytest.mark.parametrize("entry", GR_ENTRIES, ids=lambda e: e.name)
def test_bound_formulas_agree_with_poset_on_gr_rings(entry):
    bf = bound_formulas(entry.build())
    assert bf["applicable"] and bf["disagree"] == 0 and bf["agree"] > 0


def test_bound_formulas_can_fail_outside_gr():
    bf = bound_formulas(catalog.lookup("triangular-b3-z2").build())
    assert (bf["agree"], bf["disagree"]) == (68, 4)
    assert bf["first_disagreement"]["kind"] == "join"


def test_threads_do_not_change_results():
    R1, R2 = ring("zmod(12)"), ring("zmod(12)")
    assert all_grp(R1, threads=1) == all_grp(R2, threads=4)


def test_report_inconsistency_is_rejected():
    R = ring("zmod(4)")
    verdicts = {name: Verdict(None) for name in PROPERTIES}
    verdicts["rickart"] = Verdict(True)
    verdicts["generalized_rickart"] = Verdict(False)
    with pytest.raises(ReportInconsistency):
        ClassificationReport(R, R.name, 4, 1, [0, 1], [0, 1], verdicts)
    verdicts["rickart"] = Verdict(None)
    verdicts["generalized_weakly_rickart"] = Verdict(True)
    with pytest.raises(ReportInconsistency):
        ClassificationReport(R, R.name, 4, 1, [0, 1], [0, 1], verdicts)


def test_decomposition_fails_for_inequivalent_pair_in_m2z3():
    R = ring("matrix(zmod(3), 2)")
    e11, twos = mcode([[1, 0], [0, 0]], 3), mcode([[2, 2], [2, 2]], 3)
    d = decompose(R, e11, twos)
    assert (d.e1, d.f1) == (e11, twos) and not d.certificates["e1~f1"]
    assert orthogonal_decomposition(R, e11, twos) is None


def test_decomposition_certified_in_direct_sum():
    R = ring("sum(zmod(4), zmod(4))")
    P = oracles.projections(R)
    for e in P:
        for f in P:
            e1, e2, f1, f2 = orthogonal_decomposition(R, e, f)
            assert oracles.equivalence_witnesses(R, e1, f1)
            assert R.mul(e, f2) == 0 and R.mul(f, e2) == 0
            assert R.add(e1, e2) == e and R.add(f1, f2) == f


def test_grp_witness_matches_tabled_search():
    tabled = ring("matrix(zmod(3), 2)")
    evaluated = ring("matrix(zmod(3), 2)", table_bound=10)
    for x in range(0, 81, 5):
        res, stats = grp_witness(evaluated, x)
        assert res == grp(tabled, x)
        assert stats["star_fixed_scanned"] == 3**3


def test_m4z4_witness_has_no_grp():
    entry = catalog.lookup("m4z4")
    R = entry.build()
    A = witness_code(R, entry.witnesses[0])
    report = classify_witness(R, [A])
    assert report.holds("generalized_weakly_rickart") is False
    assert report.holds("generalized_rickart") is False and report.holds("rickart") is False
    assert report.holds("pc") is None
    stats = report.extras["witness_scan"][El(A)]
    assert stats["star_fixed_scanned"] == 4**10 and stats["certified"] == 0 and stats["x_squared_equals_x"]
