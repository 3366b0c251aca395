"""Executable instance checks of the propositions about generalized Rickart rings.

Each check is hypothesis => conclusion over one concrete ring.  A check whose
hypothesis fails reports ``hypothesis-not-met`` rather than ``fail``, and every
``fail`` carries a counterexample that can be re-run on its own.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import classify as C
from .classify import El
from .constructions import UnitifyStructure, is_prime, unitify
from .errors import TooLarge
from .projections import (central_projections, enumerate_projections, lattice,
                          position_p_prime, very_orthogonal_witness)
from .ring import center, corner, subring

PASS, FAIL, NOT_MET, TOO_LARGE = "pass", "fail", "hypothesis-not-met", "skipped-too-large"


@dataclass
class TheoremCheck:
    id: str
    hypothesis: str
    conclusion: str
    status: str
    counterexample: object = None
    details: dict = field(default_factory=dict)


@dataclass
class SuiteOptions:
    witnesses: tuple = ()
    subset_size: int = 2
    max_star_scan: int = C.STAR_SCAN_BOUND
    threads: int = 1


CHECKS = {}
PROPERTY_NAMES = {
    "rickart": "the Rickart condition",
    "generalized_rickart": "the generalized Rickart condition",
    "generalized_weakly_rickart": "the generalized weakly Rickart condition",
    "weakly_proper": "weak properness of the involution",
    "parallelogram_law": "the parallelogram law",
    "pc": "partial comparability",
}


def check(check_id, hypothesis, conclusion, *, witness_mode=False):
    def register(fn):
        CHECKS[check_id] = (fn, hypothesis, conclusion, witness_mode)
        return fn

    return register


class _Outcome(Exception):
    """Raised inside a check to finish it early with a status."""

    def __init__(self, status, counterexample=None, **details):
        super().__init__(status)
        self.status = status
        self.counterexample = counterexample
        self.details = details


def _not_met(reason, **details):
    raise _Outcome(NOT_MET, None, reason=reason, **details)


def _fail(counterexample, **details):
    raise _Outcome(FAIL, counterexample, **details)


# -- shared, cached facts ------------------------------------------------------


def verdict(R, name):
    fns = {
        "rickart": C.is_rickart,
        "generalized_rickart": C.is_generalized_rickart,
        "generalized_weakly_rickart": C.is_generalized_weakly_rickart,
        "weakly_proper": C.weakly_proper,
        "parallelogram_law": C.parallelogram_law,
        "pc": C.has_pc,
    }
    return R.cached(f"verdict:{name}", lambda: fns[name](R))


def grp_of(R, x):
    return C.all_grp(R, "right")[x]


def glp_of(R, x):
    return C.all_grp(R, "left")[x]


def certified_projections(res):
    return sorted({e for _, e in res.pairs})


def _require(R, *names):
    for name in names:
        if not verdict(R, name).holds:
            _not_met(f"ring fails {PROPERTY_NAMES[name]}")


def _require_grp_equivalent_glp(R):
    L = lattice(R)
    for x in range(R.size):
        r, l = grp_of(R, x), glp_of(R, x)
        if L.equivalent(r.e, l.e) is None:
            return {"x": El(x), "grp": El(r.e), "glp": El(l.e)}
    return None


def _r_mask(R, x):
    return R.mul_table[x, :] == 0


def _projection_r_masks(R):
    return R.cached("projection_r_masks",
                    lambda: {_r_mask(R, e).tobytes() for e in enumerate_projections(R)})


def _annihilator_matches_projection(R, x):
    """Least n with r(x^n) = r(e) for some projection e, or None."""
    masks = _projection_r_masks(R)
    for n, xn in enumerate(R.distinct_powers(x), 1):
        if _r_mask(R, xn).tobytes() in masks:
            return n
    return None


def _commutation_table(R):
    def compute():
        M = R.mul_table
        return M == M.T  # [s, y]: s y = y s

    return R.cached("commutation_table", compute)


def self_adjoint_subsets(R, max_size=2):
    """Representative self-adjoint subsets S, one per distinct commutant S'.

    Yields ``(S, mask of S')`` over subsets of size <= max_size plus S = R.
    Only S' enters the conclusions, so subsets with equal commutants are merged.
    """
    CT = _commutation_table(R)
    star = R.star_map
    seen = {}

    def offer(S):
        mask = np.all(CT[list(S)], axis=0) if S else np.ones(R.size, dtype=bool)
        seen.setdefault(mask.tobytes(), (tuple(sorted(S)), mask))

    offer(())
    classes = {}
    for s in range(R.size):
        classes.setdefault(CT[s].tobytes(), []).append(s)
    # S' depends only on the commutation rows of the members of S
    fixed_reps = [next(s for s in codes if star[s] == s)
                  for codes in classes.values() if any(star[s] == s for s in codes)]
    if max_size >= 1:
        for s in fixed_reps:
            offer((s,))
    if max_size >= 2:
        for codes in classes.values():
            moved = [s for s in codes if star[s] != s]
            if moved:
                offer((moved[0], int(star[moved[0]])))
        for i, s in enumerate(fixed_reps):
            for t in fixed_reps[i + 1:]:
                offer((s, t))
    offer(tuple(range(R.size)))
    return list(seen.values())


def _parent_mask(R, B):
    mask = np.zeros(R.size, dtype=bool)
    mask[B.structure.codes] = True
    return mask


def candidate_subrings(R, options):
    """Center, every corner eRe and the commutants of small self-adjoint subsets."""
    out = [("center", center(R))]
    for e in enumerate_projections(R):
        out.append((f"corner {R.label(e)}", corner(R, e)))
    for S, mask in self_adjoint_subsets(R, options.subset_size):
        label = "{" + ", ".join(R.label(s) for s in S[:4]) + (", ..." if len(S) > 4 else "") + "}"
        out.append((f"commutant {label}", subring(R, np.flatnonzero(mask), f"commutant({R.name}, {label})")))
    return out


# -- generalized Rickart and weakly Rickart rings ------------------------------


@check("prop-2.1", "generalized Rickart", "ring has a unity")
def _prop_2_1(R, options):
    _require(R, "generalized_rickart")
    if R.unity is None:
        _fail({"ring": R.name})
    return {"unity": El(R.unity)}


@check("prop-2.2", "generalized Rickart",
       "every x has a projection e and n with x^n e = x^n and x^n y = 0 => e y = 0")
def _prop_2_2(R, options):
    _require(R, "generalized_rickart")
    for x in range(R.size):
        res = grp_of(R, x)
        if res is None or not C.grp_certifies(R, x, res.e, res.n):
            _fail({"x": El(x)})
    return {"elements": R.size}


@check("prop-2.3", "generalized Rickart",
       "xy = 0 => GRP(x) GLP(y) = 0, and GRP(x) is the least projection p with x^n p = x^n")
def _prop_2_3(R, options):
    _require(R, "generalized_rickart")
    M = R.mul_table
    P = enumerate_projections(R)
    G = np.array([grp_of(R, x).e for x in range(R.size)])
    H = np.array([glp_of(R, y).e for y in range(R.size)])
    product = M[G[:, None], H[None, :]]
    broken = np.argwhere((M == 0) & (product != 0))
    if len(broken):
        x, y = (int(v) for v in broken[0])
        _fail({"x": El(x), "y": El(y), "grp(x)glp(y)": El(int(product[x, y]))})
    converse_pairs = np.argwhere((M != 0) & (product == 0))
    converse = [(El(int(x)), El(int(y))) for x, y in converse_pairs[:20]]
    count = len(converse_pairs)
    for x in range(R.size):
        res = grp_of(R, x)
        for f in res.alternatives:
            # every certified choice of GRP(x) must also kill r-side products
            for y in np.flatnonzero(M[x, :] == 0).tolist():
                for g in certified_projections(glp_of(R, y)):
                    if M[f, g] != 0:
                        _fail({"x": El(x), "y": El(y), "grp(x)": El(f), "glp(y)": El(g)})
        for n, e in res.pairs:
            xn = R.power(x, n)
            for p in P:
                if M[xn, p] == xn and M[e, p] != e:
                    _fail({"x": El(x), "n": n, "grp": El(e), "p": El(p)})
    return {"converse_counterexamples": converse, "converse_count": count}


@check("prop-2.4", "generalized Rickart; subring B has a unity and contains GRP(x) for x in B",
       "B is generalized Rickart")
def _prop_2_4(R, options):
    _require(R, "generalized_rickart")
    tested, skipped = 0, 0
    for label, B in candidate_subrings(R, options):
        members = _parent_mask(R, B)
        if B.unity is None or any(not members[grp_of(R, int(x)).e] for x in B.structure.codes):
            skipped += 1
            continue
        tested += 1
        v = C.is_generalized_rickart(B)
        if not v.holds:
            _fail({"subring": label, "x": El(B.to_parent(int(v.counterexample["x"])))})
    if not tested:
        _not_met("no candidate subring satisfies the subring hypotheses", skipped=skipped)
    return {"subrings_tested": tested, "subrings_skipped": skipped}


@check("prop-2.5", "generalized Rickart; subring B equals its bicommutant",
       "GRP(x) lies in B for x in B, and B is generalized Rickart")
def _prop_2_5(R, options):
    _require(R, "generalized_rickart")
    CT = _commutation_table(R)
    tested = 0
    for S, mask in self_adjoint_subsets(R, options.subset_size):
        codes = np.flatnonzero(mask)
        prime = np.all(CT[codes], axis=0)
        if not np.array_equal(mask, np.all(CT[np.flatnonzero(prime)], axis=0)):
            continue
        tested += 1
        for x in codes.tolist():
            e = grp_of(R, x).e
            if not mask[e]:
                _fail({"S": tuple(El(s) for s in S[:8]), "x": El(x), "grp": El(e)})
        B = subring(R, codes, "B")
        v = C.is_generalized_rickart(B)
        if not v.holds:
            _fail({"S": tuple(El(s) for s in S[:8]), "x": El(B.to_parent(int(v.counterexample["x"])))})
    return {"subrings_tested": tested}


@check("prop-2.6", "generalized Rickart", "r(x^n) = (1 - GRP(x))R for the certifying n")
def _prop_2_6(R, options):
    _require(R, "generalized_rickart")
    M = R.mul_table
    one = R.unity
    pairs = 0
    for x in range(R.size):
        for n, e in grp_of(R, x).pairs:
            pairs += 1
            g = R.sub(one, e)
            ideal = np.zeros(R.size, dtype=bool)
            ideal[M[g, :]] = True
            if not np.array_equal(ideal, _r_mask(R, R.power(x, n))):
                _fail({"x": El(x), "n": n, "grp": El(e)})
    return {"elements": R.size, "certified_pairs": pairs}


@check("prop-2.7", "none",
       "generalized Rickart <=> unity and every x has n, e with r(x^n) = r(e)")
def _prop_2_7(R, options):
    lhs = verdict(R, "generalized_rickart")
    bad = next((x for x in range(R.size) if _annihilator_matches_projection(R, x) is None), None)
    rhs = R.unity is not None and bad is None
    if lhs.holds != rhs:
        cx = {"x": El(bad)} if bad is not None else (lhs.counterexample or {"unity": R.unity})
        _fail(cx, lhs=lhs.holds, rhs=rhs)
    return {"both_sides": rhs}


@check("prop-2.8", "none", "generalized Rickart <=> generalized weakly Rickart with unity")
def _prop_2_8(R, options):
    lhs = verdict(R, "generalized_rickart").holds
    gwr = verdict(R, "generalized_weakly_rickart")
    rhs = bool(gwr.holds and R.unity is not None)
    if lhs != rhs:
        _fail(gwr.counterexample or {"unity": R.unity}, lhs=lhs, rhs=rhs)
    return {"both_sides": rhs}


@check("prop-2.9", "generalized weakly Rickart", "the center is generalized weakly Rickart")
def _prop_2_9(R, options):
    _require(R, "generalized_weakly_rickart")
    Z = center(R)
    members = _parent_mask(R, Z)
    for x in range(Z.size):
        px = Z.to_parent(x)
        if C.all_grp(Z, "right")[x] is None:
            _fail({"x": El(px)})
        for e in certified_projections(grp_of(R, px)):
            if not members[e]:
                _fail({"x": El(px), "grp": El(e)}, reason="GRP in R is not central")
    return {"center_size": Z.size}


@check("prop-2.10", "generalized weakly Rickart",
       "every x has n with r(x^n) meet (x*)^n R = 0, and the involution is weakly proper")
def _prop_2_10(R, options):
    _require(R, "generalized_weakly_rickart")
    M = R.mul_table
    for x in range(R.size):
        for xn in R.distinct_powers(x):
            ideal = np.zeros(R.size, dtype=bool)
            ideal[M[R.star(xn), :]] = True
            if not np.any(ideal & _r_mask(R, xn) & (np.arange(R.size) != 0)):
                break
        else:
            _fail({"x": El(x)})
    v = verdict(R, "weakly_proper")
    if not v.holds:
        _fail(v.counterexample)
    return {"elements": R.size}


@check("prop-2.11", "none",
       "generalized weakly Rickart <=> weakly proper and every x has n, e with r(x^n) = r(e)")
def _prop_2_11(R, options):
    lhs = verdict(R, "generalized_weakly_rickart")
    wp = verdict(R, "weakly_proper")
    bad = next((x for x in range(R.size) if _annihilator_matches_projection(R, x) is None), None)
    rhs = bool(wp.holds) and bad is None
    if lhs.holds != rhs:
        cx = {"x": El(bad)} if bad is not None else (wp.counterexample or lhs.counterexample)
        _fail(cx, lhs=lhs.holds, rhs=rhs)
    return {"both_sides": rhs}


@check("prop-2.12", "generalized weakly Rickart", "every corner eRe is generalized weakly Rickart")
def _prop_2_12(R, options):
    _require(R, "generalized_weakly_rickart")
    P = enumerate_projections(R)
    for e in P:
        B = corner(R, e)
        members = _parent_mask(R, B)
        for x, res in enumerate(C.all_grp(B, "right")):
            px = B.to_parent(x)
            if res is None:
                _fail({"e": El(e), "x": El(px)})
            for f in certified_projections(grp_of(R, px)):
                if not members[f]:
                    _fail({"e": El(e), "x": El(px), "grp": El(f)}, reason="GRP in R leaves eRe")
    return {"corners": len(P)}


@check("prop-2.13", "generalized weakly Rickart; S self-adjoint; x in S'",
       "s e = e s e = e s for e = GRP(x) and every s in S")
def _prop_2_13(R, options):
    _require(R, "generalized_weakly_rickart")
    M = R.mul_table
    subsets = self_adjoint_subsets(R, options.subset_size)
    for S, mask in subsets:
        for x in np.flatnonzero(mask).tolist():
            e = grp_of(R, x).e
            for s in S:
                se, es = M[s, e], M[e, s]
                if not (se == es == M[es, e]):
                    _fail({"S": tuple(El(t) for t in S[:8]), "x": El(x), "s": El(s), "grp": El(e)})
    return {"commutants": len(subsets)}


@check("lemma-commutant", "generalized weakly Rickart; S self-adjoint",
       "the commutant S' is generalized weakly Rickart")
def _lemma_commutant(R, options):
    _require(R, "generalized_weakly_rickart")
    subsets = self_adjoint_subsets(R, options.subset_size)
    for S, mask in subsets:
        B = subring(R, np.flatnonzero(mask), "S'")
        for x, res in enumerate(C.all_grp(B, "right")):
            if res is None:
                _fail({"S": tuple(El(t) for t in S[:8]), "x": El(B.to_parent(x))})
    return {"commutants": len(subsets)}


# -- unitification -------------------------------------------------------------


def _characteristic_prime(R):
    A = R.add_table
    idx = np.arange(R.size)
    for p in range(2, R.size + 1):
        if R.size % p or not is_prime(p):
            continue
        acc = idx.copy()
        for _ in range(p - 1):
            acc = A[acc, idx]
        if np.all(acc == 0):
            return p
    return None


def unitification_pair(R):
    """``(base, R1)``: R itself if it is a unitification, else R + F_p when R has prime characteristic."""
    if isinstance(R.structure, UnitifyStructure):
        return R.structure.base, R
    p = _characteristic_prime(R)
    if p is None:
        _not_met("ring has no prime characteristic, so it is not an F_p-algebra")
    if R.size * p > R.table_bound:
        raise TooLarge(R.size * p, R.table_bound)
    return R, R.cached("unitification", lambda: unitify(R, p))


@check("prop-3-power", "R1 = R + F_p", "(a,0)^n = (a^n,0) for n <= 6")
def _prop_3_power(R, options):
    base, R1 = unitification_pair(R)
    s = R1.structure
    for a in range(base.size):
        for n in range(1, 7):
            if R1.power(s.embed(a), n) != s.embed(base.power(a, n)):
                _fail({"a": El(s.embed(a)), "n": n})
    return {"base": base.name}


def binomial_closed_form(R1, a, lam, n):
    s = R1.structure
    base, p = s.base, s.p
    first = 0
    for k in range(n):
        coeff = comb(n, k) * pow(lam, k, p) % p
        first = base.add(first, int(s.smul[coeff, base.power(a, n - k)]))
    return int(s.join(first, pow(lam, n, p)))


@check("prop-3-binomial", "R1 = R + F_p",
       "(a,lam)^n = (sum over k < n of C(n,k) lam^k a^(n-k), lam^n) for n <= 5")
def _prop_3_binomial(R, options):
    base, R1 = unitification_pair(R)
    s = R1.structure
    for code in range(R1.size):
        a, lam = (int(v) for v in s.split(code))
        for n in range(1, 6):
            if R1.power(code, n) != binomial_closed_form(R1, a, lam, n):
                _fail({"x": El(code), "n": n})
    return {"elements": R1.size}


@check("lemma-3-weakly-proper", "the involution of R is weakly proper",
       "the involution of R1 = R + F_p is weakly proper")
def _lemma_3_weakly_proper(R, options):
    base, R1 = unitification_pair(R)
    if not verdict(base, "weakly_proper").holds:
        _not_met("base involution is not weakly proper")
    v = C.weakly_proper(R1)
    if not v.holds:
        _fail(v.counterexample)
    return {"base": base.name}


@check("thm-3", "R generalized weakly Rickart; K = F_p (nonzero scalars invertible, so e_lam = 0 works)",
       "R1 has unity (0,1), is generalized Rickart, and GRP((a,0)) = (GRP(a),0)")
def _thm_3(R, options):
    base, R1 = unitification_pair(R)
    if not verdict(base, "generalized_weakly_rickart").holds:
        _not_met("base is not generalized weakly Rickart")
    s = R1.structure
    if R1.unity != int(s.join(0, 1)):
        _fail({"unity": R1.unity})
    v = verdict(R1, "generalized_rickart")
    if not v.holds:
        _fail({"x": El(int(v.counterexample["x"]))})
    for a in range(base.size):
        x = s.embed(a)
        lifted = certified_projections(grp_of(R1, x))
        embedded = sorted(s.embed(e) for e in certified_projections(grp_of(base, a)))
        if lifted != embedded:
            _fail({"x": El(x), "grp_R1": [El(e) for e in lifted], "grp_R": [El(e) for e in embedded]})
    return {"base": base.name, "base_size": base.size, "R1_size": R1.size}


# -- projection comparability -------------------------------------------------


@check("prop-4-parallelogram", "generalized Rickart and GLP(x) ~ GRP(x) for all x",
       "parallelogram law holds")
def _prop_4_parallelogram(R, options):
    _require(R, "generalized_rickart")
    bad = _require_grp_equivalent_glp(R)
    if bad is not None:
        _not_met("GRP(x) is not equivalent to GLP(x)", witness=bad)
    v = verdict(R, "parallelogram_law")
    if not v.holds:
        _fail(v.counterexample)
    return v.witness


def _p_prime_pairs(R):
    """Projection pairs (e, f) where e meet (1-f) and e join (1-f) both exist."""
    L = lattice(R)
    one = R.unity
    meet_t, meet_s = L.meets
    join_t, join_s = L.joins
    pairs, skipped = [], 0
    for e in L.P.tolist():
        for f in L.P.tolist():
            g = R.sub(one, f)
            i, j = L.pos[e], L.pos[g]
            if meet_s[i, j] != "exists" or join_s[i, j] != "exists":
                skipped += 1
                continue
            pairs.append((e, f, position_p_prime(R, e, f)))
    return pairs, skipped


@check("prop-4-pprime", "generalized Rickart",
       "e, f in position p' <=> GLP(ef) = e and GRP(ef) = f")
def _prop_4_pprime(R, options):
    _require(R, "generalized_rickart")
    pairs, skipped = _p_prime_pairs(R)
    count = 0
    for e, f, in_position in pairs:
        ef = R.mul(e, f)
        rhs = glp_of(R, ef).e == e and grp_of(R, ef).e == f
        count += in_position
        if in_position != rhs:
            _fail({"e": El(e), "f": El(f)}, position_p_prime=in_position, projection_identity=rhs)
    return {"pairs_checked": len(pairs), "pairs_in_position": count, "pairs_skipped": skipped}


@check("prop-4-parallelogram-iff", "generalized Rickart",
       "parallelogram law <=> every pair in position p' is equivalent")
def _prop_4_parallelogram_iff(R, options):
    _require(R, "generalized_rickart")
    L = lattice(R)
    lhs = verdict(R, "parallelogram_law")
    pairs, _ = _p_prime_pairs(R)
    bad = next(((e, f) for e, f, pos in pairs if pos and L.equivalent(e, f) is None), None)
    rhs = bad is None
    if lhs.holds != rhs:
        cx = {"e": El(bad[0]), "f": El(bad[1])} if bad else lhs.counterexample
        _fail(cx, lhs=lhs.holds, rhs=rhs)
    detail = {"both_sides": rhs}
    if bad:
        detail["p_prime_not_equivalent"] = {"e": El(bad[0]), "f": El(bad[1])}
    return detail


@check("prop-4-very-orthogonal", "generalized Rickart; projections e, f very orthogonal",
       "ef = 0, GRP(e) GLP(f) = 0 and eRf = 0")
def _prop_4_very_orthogonal(R, options):
    _require(R, "generalized_rickart")
    M = R.mul_table
    P = enumerate_projections(R)
    count = 0
    orthogonal_only = None
    for e in P:
        for f in P:
            if very_orthogonal_witness(R, e, f) is None:
                if orthogonal_only is None and M[e, f] == 0:
                    orthogonal_only = (El(e), El(f))
                continue
            count += 1
            nonzero, a = C.e_R_f_nonzero(R, e, f)
            if M[e, f] != 0 or M[grp_of(R, e).e, glp_of(R, f).e] != 0 or nonzero:
                _fail({"e": El(e), "f": El(f), "a": None if a is None else El(a)})
    return {"very_orthogonal_pairs": count, "orthogonal_not_very_orthogonal": orthogonal_only,
            "central_projections": [El(h) for h in central_projections(R)]}


@check("prop-4-pc", "generalized Rickart and GRP(x) ~ GLP(x) for all x", "ring has PC")
def _prop_4_pc(R, options):
    _require(R, "generalized_rickart")
    bad = _require_grp_equivalent_glp(R)
    if bad is not None:
        _not_met("GRP(x) is not equivalent to GLP(x)", witness=bad, pc=verdict(R, "pc").holds)
    v = verdict(R, "pc")
    if not v.holds:
        _fail(v.counterexample)
    return {"pc": True}


@check("prop-4-decomposition", "generalized Rickart with the parallelogram law",
       "e = e'+e'', f = f'+f'' with e' ~ f' and e f'' = f e'' = 0")
def _prop_4_decomposition(R, options):
    _require(R, "generalized_rickart", "parallelogram_law")
    P = enumerate_projections(R)
    for e in P:
        for f in P:
            d = C.decompose(R, e, f)
            if d is None or not d.certified:
                failed = [] if d is None else [k for k, ok in d.certificates.items() if not ok]
                _fail({"e": El(e), "f": El(f)}, failed_certificates=failed)
    return {"pairs": len(P) ** 2}


@check("grp-absent", "supplied witness elements", "no projection certifies GRP of any witness",
       witness_mode=True)
def _grp_absent(R, options):
    if not options.witnesses:
        _not_met("no witness elements supplied")
    details = {}
    for x in options.witnesses:
        if R.is_tabled:
            res, stats = C._search(R, x, "right"), {}
        else:
            res, stats = C.grp_witness(R, x, options.max_star_scan)
        details[El(x)] = stats
        if res is not None:
            _fail({"x": El(x), "e": El(res.e), "n": res.n}, scan=details)
    return {"scan": details}


# -- driver ---------------------------------------------------------------------


def check_ids():
    return list(CHECKS)


def run_check(R, check_id, options=None):
    options = options or SuiteOptions()
    fn, hypothesis, conclusion, witness_mode = CHECKS[check_id]
    if not R.is_tabled and not witness_mode:
        return TheoremCheck(check_id, hypothesis, conclusion, TOO_LARGE,
                            details={"reason": f"{R.size} elements exceeds table bound {R.table_bound}"})
    try:
        details = fn(R, options) or {}
        return TheoremCheck(check_id, hypothesis, conclusion, PASS, details=details)
    except _Outcome as out:
        return TheoremCheck(check_id, hypothesis, conclusion, out.status, out.counterexample, out.details)
    except TooLarge as exc:
        return TheoremCheck(check_id, hypothesis, conclusion, TOO_LARGE, details={"reason": str(exc)})


def run_suite(R, selection=None, options=None):
    """Run the selected checks (all by default); the ledger follows registry order."""
    options = options or SuiteOptions()
    unknown = sorted(set(selection or ()) - set(CHECKS))
    if unknown:
        raise KeyError(f"unknown check ids: {', '.join(unknown)}")
    chosen = [c for c in CHECKS if not selection or c in set(selection)]
    if options.threads > 1:
        with ThreadPoolExecutor(max_workers=options.threads) as pool:
            return list(pool.map(lambda c: run_check(R, c, options), chosen))
    return [run_check(R, c, options) for c in chosen]
