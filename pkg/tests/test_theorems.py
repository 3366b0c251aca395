import pytest

import oracles
from rickart import catalog
from rickart import theorems as T
from rickart.classify import El, grp_certifies, has_pc
from rickart.constructions import build_ring
from rickart.parse import parse_spec


def ring(expr, **kw):
    return build_ring(parse_spec(expr), **kw)


def statuses(ledger):
    return {c.id: c.status for c in ledger}


@pytest.mark.parametrize("entry", [e for e in catalog.ENTRIES if e.mode == "full"], ids=lambda e: e.name)
def test_no_check_fails_on_catalog_rings(entry):
    ledger = T.run_suite(entry.build())
    assert [c.id for c in ledger] == T.check_ids()
    assert all(c.status != T.FAIL for c in ledger), [(c.id, c.counterexample) for c in ledger if c.status == T.FAIL]


def test_z4_applicable_checks_pass():
    s = statuses(T.run_suite(ring("zmod(4)")))
    assert {k for k, v in s.items() if v not in (T.PASS, T.NOT_MET)} == set()
    assert all(s[k] == T.PASS for k in T.check_ids() if k.startswith("prop-2"))
    # characteristic 4 is not prime, so there is no F_p-unitification to check
    assert s["thm-3"] == T.NOT_MET


def test_embedding_check_on_unitify_demo():
    [c] = T.run_suite(ring('unitify(cayley("data:z4_even.ring"), 2)'), {"thm-3"})
    assert c.status == T.PASS and c.details["base_size"] == 2 and c.details["R1_size"] == 4


def test_embedding_check_builds_unitification_of_non_unital_ring():
    [c] = T.run_suite(ring('cayley("data:z4_even.ring")'), {"thm-3"})
    assert c.status == T.PASS and c.details["R1_size"] == 4


def test_pc_check_not_met_on_m2z3_and_pc_fails():
    R = ring("matrix(zmod(3), 2)")
    [c] = T.run_suite(R, {"prop-4-pc"})
    assert c.status == T.NOT_MET
    assert has_pc(R).holds is False


def test_m2z3_parallelogram_checks():
    s = statuses(T.run_suite(ring("matrix(zmod(3), 2)")))
    assert s["prop-4-parallelogram"] == T.NOT_MET
    assert s["prop-4-decomposition"] == T.NOT_MET
    assert s["prop-4-parallelogram-iff"] == T.PASS and s["prop-4-pprime"] == T.PASS


def test_zero_product_converse_counterexample_in_z12():
    [c] = T.run_suite(ring("zmod(12)"), {"prop-2.3"})
    assert c.status == T.PASS
    pairs = [tuple(int(v) for v in p) for p in c.details["converse_counterexamples"]]
    assert (2, 3) in pairs
    R = ring("zmod(12)")
    assert R.mul(2, 3) == 6


def test_hypothesis_not_met_on_non_gr_ring():
    s = statuses(T.run_suite(ring("triangular(B, 3, zmod(2))")))
    assert s["prop-2.6"] == T.NOT_MET and s["prop-2.1"] == T.NOT_MET
    assert s["prop-2.7"] == T.PASS and s["prop-2.8"] == T.PASS


def test_selection_is_monotone():
    R = ring("matrix(zmod(2), 2)")
    full = statuses(T.run_suite(R))
    picked = ["prop-2.8", "prop-2.1", "thm-3"]
    assert statuses(T.run_suite(ring("matrix(zmod(2), 2)"), set(picked))) == {k: full[k] for k in picked}


def test_threads_give_same_ledger():
    a = T.run_suite(ring("zmod(12)"))
    b = T.run_suite(ring("zmod(12)"), options=T.SuiteOptions(threads=4))
    assert a == b


def test_unknown_check_id():
    with pytest.raises(KeyError):
        T.run_suite(ring("zmod(4)"), {"prop-9.9"})


def test_untabled_ring_skips_table_checks():
    R = catalog.lookup("m4z4").build()
    s = statuses(T.run_suite(R))
    assert all(v == T.TOO_LARGE for k, v in s.items() if k != "grp-absent")
    assert s["grp-absent"] == T.NOT_MET  # no witnesses supplied


def test_unitification_too_large_is_skipped():
    R = ring("triangular(V, 3, zmod(3))", table_bound=40)
    [c] = T.run_suite(R, {"thm-3"})
    assert c.status == T.TOO_LARGE


def test_fail_counterexample_rechecks_in_isolation():
    R = ring("matrix(zmod(3), 2)")
    e12 = 3  # E12 has GRP E22
    [c] = T.run_suite(R, {"grp-absent"}, T.SuiteOptions(witnesses=(e12,)))
    assert c.status == T.FAIL
    cx = c.counterexample
    assert grp_certifies(R, int(cx["x"]), int(cx["e"]), cx["n"])
    assert (cx["n"], int(cx["e"])) in oracles.grp_pairs(R, e12)


def test_binomial_closed_form_matches_repeated_multiplication():
    base = ring("groupalg(2, 2)")
    _, R1 = T.unitification_pair(base)
    s = R1.structure
    for code in range(R1.size):
        a, lam = (int(v) for v in s.split(code))
        cur = code
        for n in range(1, 7):
            assert T.binomial_closed_form(R1, a, lam, n) == cur
            cur = R1.mul(cur, code)


def test_self_adjoint_subsets_cover_empty_set_and_center():
    R = ring("matrix(zmod(2), 2)")
    subsets = T.self_adjoint_subsets(R, 2)
    masks = [[int(i) for i in m.nonzero()[0]] for _, m in subsets]
    # S = R is merged with any smaller S that already has the center as commutant
    assert list(range(R.size)) in masks
    center = [y for y in range(R.size) if all(R.mul(s, y) == R.mul(y, s) for s in range(R.size))]
    assert center in masks
    for S, mask in subsets:
        assert {R.star(s) for s in S} == set(S)
        expected = [y for y in range(R.size) if all(R.mul(s, y) == R.mul(y, s) for s in S)]
        assert [int(i) for i in mask.nonzero()[0]] == expected
    assert len({m.tobytes() for _, m in subsets}) == len(subsets)


def test_every_fail_path_names_an_element():
    # grp-absent on tabled rings reports an El-coded certificate
    R = ring("zmod(4)")
    [c] = T.run_suite(R, {"grp-absent"}, T.SuiteOptions(witnesses=(2,)))
    assert c.status == T.FAIL and isinstance(c.counterexample["x"], El)
