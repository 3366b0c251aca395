"""Projections and the order/equivalence relations between them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import BadParameter, NoUnity, TooLarge
from .ring import code_of

STAR_SCAN_BOUND = 2**22


@dataclass(frozen=True)
class EquivalenceWitness:
    w: int


@dataclass(frozen=True)
class BoundResult:
    """Outcome of a meet/join query.

    ``status`` is ``"exists"``, ``"no-bound"`` (no common lower/upper bound
    at all) or ``"no-extremum"`` (bounds exist but none is greatest/least).
    """

    element: int | None
    status: str

    @property
    def exists(self):
        return self.status == "exists"


def _scan_star_fixed_idempotents(R, bound):
    s = R.structure
    if not hasattr(s, "star_fixed_digits"):
        R.require_tabled()
    count = s.star_fixed_count()
    if count > bound:
        raise TooLarge(count, bound, "--max-star-scan")
    found = []
    for D in s.star_fixed_digits():
        keep = np.all(s.matmul_digits(D, D) == D, axis=(1, 2))
        found.append(s.encode(D[keep]))
    return sorted(int(c) for c in np.concatenate(found))


def enumerate_projections(R, max_star_scan=STAR_SCAN_BOUND):
    """All e with e = e* = e^2 in code order.

    Evaluated matrix rings scan only the star-fixed (self-adjoint) matrices.
    """
    def compute():
        if R.is_tabled:
            idx = np.arange(R.size)
            mask = (R.star_map == idx) & (R.mul_table[idx, idx] == idx)
            return [int(c) for c in np.flatnonzero(mask)]
        return _scan_star_fixed_idempotents(R, max_star_scan)

    return R.cached("projections", compute)


class ProjectionLattice:
    """Order, equivalence and bound tables over the projections of a tabled ring."""

    def __init__(self, R):
        R.require_tabled()
        self.R = R
        self.P = np.asarray(enumerate_projections(R), dtype=np.int64)
        self.pos = {int(p): i for i, p in enumerate(self.P)}
        M = R.mul_table
        self.leq = M[self.P[:, None], self.P[None, :]] == self.P[:, None]

    def index(self, e):
        try:
            return self.pos[e]
        except KeyError:
            raise BadParameter(f"{self.R.label(e)} is not a projection of {self.R.name}") from None

    @cached_property
    def equivalence(self):
        """``W[i, j]`` is the least w with w*w = P[i], ww* = P[j], else -1."""
        R = self.R
        w = np.arange(R.size)
        ws = R.star_map.astype(np.int64)
        a = R.mul_table[ws, w].astype(np.int64)
        b = R.mul_table[w, ws].astype(np.int64)
        lookup = np.full(R.size, -1, dtype=np.int64)
        lookup[self.P] = np.arange(len(self.P))
        ia, ib = lookup[a], lookup[b]
        valid = (ia >= 0) & (ib >= 0)
        keys = ia[valid] * len(self.P) + ib[valid]
        uniq, first = np.unique(keys, return_index=True)
        W = np.full((len(self.P), len(self.P)), -1, dtype=np.int64)
        W.flat[uniq] = w[valid][first]
        return W

    def _bounds(self, kind):
        n = len(self.P)
        leq = self.leq
        table = np.full((n, n), -1, dtype=np.int64)
        status = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(i, n):
                if kind == "meet":
                    cand = leq[:, i] & leq[:, j]
                    idx = np.flatnonzero(cand)
                    good = [k for k in idx if np.all(leq[idx, k])]
                else:
                    cand = leq[i, :] & leq[j, :]
                    idx = np.flatnonzero(cand)
                    good = [k for k in idx if np.all(leq[k, idx])]
                if len(idx) == 0:
                    st = "no-bound"
                elif good:
                    st = "exists"
                    table[i, j] = table[j, i] = self.P[good[0]]
                else:
                    st = "no-extremum"
                status[i, j] = status[j, i] = st
        return table, status

    @cached_property
    def meets(self):
        return self._bounds("meet")

    @cached_property
    def joins(self):
        return self._bounds("join")

    def bound(self, e, f, kind):
        table, status = self.meets if kind == "meet" else self.joins
        i, j = self.index(e), self.index(f)
        value = int(table[i, j])
        return BoundResult(value if value >= 0 else None, status[i, j])

    def equivalent(self, e, f):
        w = int(self.equivalence[self.index(e), self.index(f)])
        return None if w < 0 else EquivalenceWitness(w)

    def dominated(self, e, f):
        """``(g, w)`` with e ~ g <= f via w, or None."""
        i, j = self.index(e), self.index(f)
        W = self.equivalence
        for k in np.flatnonzero(self.leq[:, j]):
            if W[i, k] >= 0:
                return int(self.P[k]), int(W[i, k])
        return None

    def below(self, e):
        return [int(p) for p in self.P[self.leq[:, self.index(e)]]]


def lattice(R):
    return R.cached("lattice", lambda: ProjectionLattice(R))


def proj_leq(R, e, f):
    e, f = code_of(R, e), code_of(R, f)
    return R.mul(e, f) == e


def proj_bound(R, e, f, kind):
    if kind not in ("meet", "join"):
        raise ValueError("kind must be 'meet' or 'join'")
    return lattice(R).bound(code_of(R, e), code_of(R, f), kind)


def equivalent(R, e, f):
    """Witness w with w*w = e and ww* = f by a full scan of R, or None."""
    e, f = code_of(R, e), code_of(R, f)
    R.require_tabled()
    w = np.arange(R.size)
    ws = R.star_map.astype(np.int64)
    hits = np.flatnonzero((R.mul_table[ws, w] == e) & (R.mul_table[w, ws] == f))
    return EquivalenceWitness(int(hits[0])) if len(hits) else None


def dominated(R, e, f):
    return lattice(R).dominated(code_of(R, e), code_of(R, f)) is not None


def central_projections(R):
    def compute():
        M = R.mul_table
        return [e for e in enumerate_projections(R) if np.array_equal(M[e, :], M[:, e])]

    R.require_tabled()
    return R.cached("central_projections", compute)


def very_orthogonal_witness(R, x, y):
    """Central projection h with hx = x and hy = 0, or None; x, y need not be projections."""
    x, y = code_of(R, x), code_of(R, y)
    for h in central_projections(R):
        if R.mul(h, x) == x and R.mul(h, y) == 0:
            return h
    return None


def very_orthogonal(R, x, y):
    return very_orthogonal_witness(R, x, y) is not None


def position_p_prime(R, e, f):
    """e and 1-f are complementary: e meet (1-f) = 0 and e join (1-f) = 1."""
    e, f = code_of(R, e), code_of(R, f)
    one = R.unity
    if one is None:
        raise NoUnity(f"{R.name} has no unity")
    g = R.sub(one, f)
    meet = proj_bound(R, e, g, "meet")
    join = proj_bound(R, e, g, "join")
    return meet.exists and meet.element == 0 and join.exists and join.element == one


def hasse_dot(R):
    """DOT source of the Hasse diagram of the projection poset (edges point upward)."""
    L = lattice(R)
    n = len(L.P)
    lines = ["digraph hasse {", '  label="%s";' % R.name.replace('"', '\\"'), "  rankdir=BT;"]
    for i in range(n):
        lines.append(f'  p{i} [label="{R.label(L.P[i])}"];')
    strict = L.leq & ~np.eye(n, dtype=bool)
    for i in range(n):
        for j in range(n):
            if strict[i, j] and not np.any(strict[i, :] & strict[:, j]):
                lines.append(f"  p{i} -> p{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
