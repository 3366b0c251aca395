"""Rickart-type classification with certificates.

Every verdict carries either a witness (what makes the property hold) or a
counterexample (a concrete element or pair where it fails).  Element codes
inside certificates are wrapped in :class:`El` so reports can print them
with the ring's own labels.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import NoUnity, TooLarge
from .projections import STAR_SCAN_BOUND, central_projections, enumerate_projections, lattice
from .ring import code_of

PROPERTIES = (
    "rickart",
    "generalized_rickart",
    "generalized_weakly_rickart",
    "weakly_proper",
    "parallelogram_law",
    "pc",
    "gc",
    "orthogonal_gc",
)


class El(int):
    """An element code inside a certificate."""

    def __repr__(self):
        return f"El({int(self)})"


class ReportInconsistency(AssertionError):
    pass


@dataclass(frozen=True)
class GrpResult:
    """A certified generalized right (or left) projection.

    ``n`` is the least certifying exponent, ``exponents`` every certifying
    exponent among the distinct powers of x, ``pairs`` every certifying
    ``(n, e)`` and ``alternatives`` the certifying projections other than ``e``.
    For a fixed exponent the projection is unique; across exponents it need
    not be (in M_2(Z_3), E21 is certified by E11 at n = 1 and by 0 at n = 2).
    """

    e: int
    n: int
    exponents: tuple = ()
    alternatives: tuple = ()
    pairs: tuple = ()


@dataclass
class Verdict:
    holds: bool | None
    witness: object = None
    counterexample: object = None
    note: str = ""


def _map(fn, items, threads):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


# -- generalized projections ---------------------------------------------------


def _projection_arrays(R):
    def compute():
        P = np.asarray(enumerate_projections(R), dtype=np.int64)
        M = R.mul_table
        return P, M[P, :] == 0, (M[:, P] == 0).T

    return R.cached("projection_arrays", compute)


def _search(R, x, side):
    M = R.mul_table
    P, right_of_P, left_of_P = _projection_arrays(R)
    pairs = []
    for n, xn in enumerate(R.distinct_powers(x), 1):
        if side == "right":
            fixes = M[xn, P] == xn
            ann = M[xn, :] == 0
            contained = ~np.any(ann[None, :] & ~right_of_P, axis=1)
        else:
            fixes = M[P, xn] == xn
            ann = M[:, xn] == 0
            contained = ~np.any(ann[None, :] & ~left_of_P, axis=1)
        pairs.extend((n, e) for e in P[fixes & contained].tolist())
    return _result(pairs)


def _result(pairs):
    if not pairs:
        return None
    pairs = tuple(sorted(pairs))
    n, e = pairs[0]
    exponents = tuple(sorted({m for m, _ in pairs}))
    others = tuple(sorted({f for _, f in pairs} - {e}))
    return GrpResult(e, n, exponents, others, pairs)


def grp(R, x):
    """GRP(x): projection e and exponent n with x^n e = x^n and r(x^n) within r(e)."""
    x = code_of(R, x)
    if not R.is_tabled:
        return grp_witness(R, x)[0]
    return _search(R, x, "right")


def glp(R, x):
    """GLP(x): f x^n = x^n and y x^n = 0 forces y f = 0; searched on the left directly."""
    x = code_of(R, x)
    R.require_tabled()
    return _search(R, x, "left")


def all_grp(R, side="right", threads=1):
    R.require_tabled()
    key = f"grp_{side}"

    def compute():
        return _map(lambda x: _search(R, x, side), range(R.size), threads)

    return R.cached(key, compute)


def grp_certifies(R, x, e, n, side="right"):
    """Independent re-check of the defining clauses for one (e, n); tabled rings only."""
    xn = R.power(x, n)
    M = R.mul_table
    if side == "right":
        if M[xn, e] != xn:
            return False
        return bool(np.all(M[e, M[xn, :] == 0] == 0))
    if M[e, xn] != xn:
        return False
    return bool(np.all(M[M[:, xn] == 0, e] == 0))


def grp_witness(R, x, max_star_scan=STAR_SCAN_BOUND):
    """GRP search in an evaluated matrix ring over star-fixed idempotents.

    r(X) consists of the matrices whose columns lie in the column kernel of X,
    so r(X) within r(E) exactly when E kills that kernel.  Returns
    ``(GrpResult or None, stats)``.
    """
    s = R.structure
    if not hasattr(s, "star_fixed_digits"):
        R.require_tabled()
        return _search(R, x, "right"), {}
    count = s.star_fixed_count()
    if count > max_star_scan:
        raise TooLarge(count, max_star_scan, "--max-star-scan")
    powers = R.distinct_powers(x)
    power_digits = [s.digits(xn) for xn in powers]
    kernels = [s.kernel_vectors(xn) for xn in powers]
    stats = {"star_fixed_scanned": 0, "idempotents": 0, "powers": len(powers),
             "x_squared_equals_x": bool(R.mul(x, x) == x)}
    pairs = []
    for D in s.star_fixed_digits():
        stats["star_fixed_scanned"] += len(D)
        E = D[np.all(s.matmul_digits(D, D) == D, axis=(1, 2))]
        stats["idempotents"] += len(E)
        if not len(E):
            continue
        codes = s.encode(E)
        for n, (X, K) in enumerate(zip(power_digits, kernels), 1):
            fixes = np.all(s.matmul_digits(X[None], E) == X[None], axis=(1, 2))
            if len(K):
                killed = np.all(s.matmul_digits(E, K.T[None]) == 0, axis=(1, 2))
            else:
                killed = np.ones(len(E), dtype=bool)
            pairs.extend((n, int(e)) for e in codes[fixes & killed].tolist())
    stats["certified"] = len(pairs)
    return _result(pairs), stats


# -- annihilator generators -----------------------------------------------------


def _generator_lookup(R):
    """Map r-mask bytes of every principal right ideal gR (g a projection) to g."""

    def compute():
        M = R.mul_table
        table = {}
        for g in enumerate_projections(R):
            mask = np.zeros(R.size, dtype=bool)
            mask[M[g, :]] = True
            table.setdefault(mask.tobytes(), g)
        return table

    return R.cached("generator_lookup", compute)


def right_generator(R, mask):
    return _generator_lookup(R).get(np.asarray(mask, dtype=bool).tobytes())


def ann_generator_chain(R, x):
    """Least n and g with r(x^n) = gR, or None, walking the distinct powers of x."""
    M = R.mul_table
    for n, xn in enumerate(R.distinct_powers(x), 1):
        g = right_generator(R, M[xn, :] == 0)
        if g is not None:
            return n, g
    return None


# -- verdicts ----------------------------------------------------------------


def is_rickart(R):
    R.require_tabled()
    M = R.mul_table
    witness = {}
    for x in range(R.size):
        g = right_generator(R, M[x, :] == 0)
        if g is None:
            return Verdict(False, counterexample={"x": El(x)},
                           note="r(x) is not generated by any projection")
        witness[El(x)] = El(g)
    return Verdict(True, witness=witness)


def is_generalized_rickart(R):
    R.require_tabled()
    witness = {}
    for x in range(R.size):
        found = ann_generator_chain(R, x)
        if found is None:
            return Verdict(False, counterexample={"x": El(x)},
                           note="no power of x has a right annihilator generated by a projection")
        n, g = found
        witness[El(x)] = (n, El(g))
    return Verdict(True, witness=witness)


def is_generalized_weakly_rickart(R, threads=1):
    results = all_grp(R, "right", threads)
    witness = {}
    for x, res in enumerate(results):
        if res is None:
            return Verdict(False, counterexample={"x": El(x)}, note="x has no generalized right projection")
        witness[El(x)] = (res.n, El(res.e))
    return Verdict(True, witness=witness)


def weakly_proper(R):
    R.require_tabled()
    M, S = R.mul_table, R.star_map
    for x in range(R.size):
        if M[x, S[x]] == 0 and not R.is_nilpotent(x):
            return Verdict(False, counterexample={"x": El(x)}, note="x x* = 0 but x is not nilpotent")
    return Verdict(True)


def parallelogram_law(R):
    L = lattice(R)
    meet_t, meet_s = L.meets
    join_t, join_s = L.joins
    W = L.equivalence
    checked = skipped = 0
    for i, e in enumerate(L.P.tolist()):
        for j, f in enumerate(L.P.tolist()):
            if meet_s[i, j] != "exists" or join_s[i, j] != "exists":
                skipped += 1
                continue
            checked += 1
            a = R.sub(e, int(meet_t[i, j]))
            b = R.sub(int(join_t[i, j]), f)
            if a not in L.pos or b not in L.pos or W[L.pos[a], L.pos[b]] < 0:
                return Verdict(False, counterexample={"e": El(e), "f": El(f), "e-meet": El(a), "join-f": El(b)},
                               note="e - e meet f is not equivalent to e join f - f")
    return Verdict(True, witness={"pairs_checked": checked, "pairs_skipped": skipped})


def e_R_f_nonzero(R, e, f):
    M = R.mul_table
    row = M[M[e, :], f]
    hits = np.flatnonzero(row != 0)
    return (True, int(hits[0])) if len(hits) else (False, None)


def partially_comparable(R, e, f):
    """Nonzero e0 <= e, f0 <= f with e0 ~ f0, as (e0, f0, w), or None."""
    L = lattice(R)
    W = L.equivalence
    for e0 in L.below(e):
        if e0 == 0:
            continue
        for f0 in L.below(f):
            if f0 != 0 and W[L.pos[e0], L.pos[f0]] >= 0:
                return e0, f0, int(W[L.pos[e0], L.pos[f0]])
    return None


def has_pc(R):
    L = lattice(R)
    witness = {}
    for e in L.P.tolist():
        for f in L.P.tolist():
            nonzero, a = e_R_f_nonzero(R, e, f)
            if not nonzero:
                continue
            found = partially_comparable(R, e, f)
            if found is None:
                return Verdict(False, counterexample={"e": El(e), "f": El(f), "a": El(a)},
                               note="eaf != 0 but no nonzero equivalent subprojections")
            witness[(El(e), El(f))] = tuple(El(c) for c in found[:2])
    return Verdict(True, witness=witness)


def generalized_comparable(R, e, f):
    """Central h with he dominated by hf and (1-h)f dominated by (1-h)e, or None."""
    one = R.unity
    if one is None:
        raise NoUnity(f"{R.name} has no unity")
    L = lattice(R)
    for h in central_projections(R):
        k = R.sub(one, h)
        if (L.dominated(R.mul(h, e), R.mul(h, f)) is not None
                and L.dominated(R.mul(k, f), R.mul(k, e)) is not None):
            return h
    return None


def _gc(R, orthogonal_only):
    if R.unity is None:
        raise NoUnity(f"{R.name} has no unity")
    L = lattice(R)
    witness = {}
    for e in L.P.tolist():
        for f in L.P.tolist():
            if orthogonal_only and R.mul(e, f) != 0:
                continue
            h = generalized_comparable(R, e, f)
            if h is None:
                return Verdict(False, counterexample={"e": El(e), "f": El(f)},
                               note="no central projection splits the pair")
            witness[(El(e), El(f))] = El(h)
    return Verdict(True, witness=witness)


def has_gc(R):
    return _gc(R, False)


def has_orthogonal_gc(R):
    return _gc(R, True)


@dataclass(frozen=True)
class Decomposition:
    e1: int  # GLP(ef)
    e2: int  # e - e1
    f1: int  # GRP(ef)
    f2: int  # f - f1
    w: int | None  # witness of e1 ~ f1
    certificates: dict = field(default_factory=dict)

    @property
    def certified(self):
        return all(self.certificates.values())


def decompose(R, e, f):
    """Candidate orthogonal decomposition with every certificate evaluated, or None."""
    e, f = code_of(R, e), code_of(R, f)
    ef = R.mul(e, f)
    left, right = glp(R, ef), grp(R, ef)
    if left is None or right is None:
        return None
    e1, f1 = left.e, right.e
    e2, f2 = R.sub(e, e1), R.sub(f, f1)
    L = lattice(R)
    eq = L.equivalent(e1, f1)
    certs = {
        "e1~f1": eq is not None,
        "e f2 = 0": R.mul(e, f2) == 0,
        "f e2 = 0": R.mul(f, e2) == 0,
        "e = e1 + e2": R.add(e1, e2) == e,
        "f = f1 + f2": R.add(f1, f2) == f,
    }
    return Decomposition(e1, e2, f1, f2, None if eq is None else eq.w, certs)


def orthogonal_decomposition(R, e, f):
    """(e', e'', f', f'') with e' ~ f', e f'' = f e'' = 0, or None."""
    d = decompose(R, e, f)
    if d is None or not d.certified:
        return None
    return d.e1, d.e2, d.f1, d.f2


def bound_formulas(R):
    """Agreement of poset join/meet with f + GRP(e(1-f)) and e - GLP(e(1-f))."""
    one = R.unity
    if one is None:
        return {"applicable": False}
    L = lattice(R)
    meet_t, meet_s = L.meets
    join_t, join_s = L.joins
    rights, lefts = all_grp(R, "right"), all_grp(R, "left")
    agree = disagree = 0
    first = None
    for i, e in enumerate(L.P.tolist()):
        for j, f in enumerate(L.P.tolist()):
            x = R.mul(e, R.sub(one, f))
            r, l = rights[x], lefts[x]
            pairs = []
            if join_s[i, j] == "exists":
                pairs.append(("join", int(join_t[i, j]), None if r is None else R.add(f, r.e)))
            if meet_s[i, j] == "exists":
                pairs.append(("meet", int(meet_t[i, j]), None if l is None else R.sub(e, l.e)))
            for kind, poset, formula in pairs:
                if poset == formula:
                    agree += 1
                else:
                    disagree += 1
                    if first is None:
                        first = {"kind": kind, "e": El(e), "f": El(f), "poset": El(poset),
                                 "formula": None if formula is None else El(formula)}
    return {"applicable": True, "agree": agree, "disagree": disagree, "first_disagreement": first}


# -- report ------------------------------------------------------------------


@dataclass
class ClassificationReport:
    ring: object = field(repr=False)
    construction: str
    size: int
    unity: int | None
    projections: list | None
    central_projections: list | None
    verdicts: dict
    notes: tuple = ()
    mode: str = "full"
    extras: dict = field(default_factory=dict)

    def __post_init__(self):
        v = {k: self.verdicts[k].holds for k in self.verdicts}
        chain = ("rickart", "generalized_rickart", "generalized_weakly_rickart")
        for a, b in zip(chain, chain[1:]):
            if v.get(a) is True and v.get(b) is False:
                raise ReportInconsistency(f"{a} holds but {b} fails")
        gr, gwr = v.get("generalized_rickart"), v.get("generalized_weakly_rickart")
        if gr is not None and gwr is not None:
            if gr != (gwr and self.unity is not None):
                raise ReportInconsistency("generalized Rickart must equal generalized weakly Rickart with unity")

    def holds(self, name):
        return self.verdicts[name].holds


def _guard(fn, *args):
    try:
        return fn(*args)
    except NoUnity:
        return Verdict(None, note="not applicable: ring has no unity")


def classify(R, threads=1):
    """Full classification of a tabled ring."""
    R.require_tabled()
    verdicts = {
        "rickart": is_rickart(R),
        "generalized_rickart": is_generalized_rickart(R),
        "generalized_weakly_rickart": is_generalized_weakly_rickart(R, threads),
        "weakly_proper": weakly_proper(R),
        "parallelogram_law": parallelogram_law(R),
        "pc": has_pc(R),
        "gc": _guard(has_gc, R),
        "orthogonal_gc": _guard(has_orthogonal_gc, R),
    }
    extras = {"bound_formulas": bound_formulas(R)}
    dup = [(El(x), tuple(El(a) for a in (res.e,) + res.alternatives))
           for x, res in enumerate(all_grp(R, "right", threads)) if res and res.alternatives]
    if dup:
        extras["grp_not_unique"] = dup
    return ClassificationReport(
        ring=R, construction=R.name, size=R.size, unity=R.unity,
        projections=list(enumerate_projections(R)),
        central_projections=list(central_projections(R)),
        verdicts=verdicts, notes=R.notes, extras=extras)


def classify_witness(R, witnesses, max_star_scan=STAR_SCAN_BOUND):
    """Certify or refute GRP existence for the supplied elements only."""
    certified, stats = {}, {}
    refuted = None
    for x in witnesses:
        res, st = grp_witness(R, code_of(R, x), max_star_scan)
        stats[El(x)] = st
        if res is None and refuted is None:
            refuted = x
        elif res is not None:
            certified[El(x)] = (res.n, El(res.e))
    undecided = Verdict(None, note="not decided in witness mode")
    if refuted is not None:
        gwr = Verdict(False, counterexample={"x": El(refuted)},
                      note="no star-fixed idempotent satisfies both GRP clauses")
        implied = "refuted through the chain rickart => generalized_rickart => generalized_weakly_rickart"
        gr, rk = Verdict(False, note=implied), Verdict(False, note=implied)
    else:
        gwr = Verdict(None, witness=certified, note="supplied witnesses all have a GRP; not a full classification")
        gr = rk = undecided
    verdicts = {name: undecided for name in PROPERTIES}
    verdicts.update(rickart=rk, generalized_rickart=gr, generalized_weakly_rickart=gwr)
    unity = getattr(R.structure, "unity_hint", lambda: None)()
    return ClassificationReport(
        ring=R, construction=R.name, size=R.size, unity=unity, projections=None,
        central_projections=None, verdicts=verdicts, notes=R.notes, mode="witness",
        extras={"witness_scan": stats})
