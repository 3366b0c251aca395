"""Finite rings with involution, element handles and structural sub-rings.

A ring is backed by a *structure* object that knows how to add, multiply,
negate and star integer element codes (vectorised over numpy arrays) and
how to print a code.  Rings at or below ``TABLE_BOUND`` elements have their
operation tables materialised; larger rings evaluate structurally.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import AxiomViolation, CrossRingElement, NotAProjection, TooLarge

TABLE_BOUND = 4096
EXHAUSTIVE_BOUND = 256
SAMPLES = 100_000

_ring_ids = itertools.count(1)


def _scalar(r):
    return int(r) if np.ndim(r) == 0 else r


def _int_array(a):
    return np.asarray(a, dtype=np.int64)


class FiniteStarRing:
    """An immutable finite *-ring on the codes ``0 .. size-1``; code 0 is zero."""

    def __init__(self, structure, name, *, table_bound=TABLE_BOUND, validate=True, notes=()):
        self.structure = structure
        self.size = int(structure.size)
        self.name = name
        self.ring_id = next(_ring_ids)
        self.table_bound = table_bound
        self.notes = tuple(getattr(structure, "notes", ())) + tuple(notes)
        self.add_table = self.mul_table = self.star_map = self.neg_map = None
        self._cache = {}
        if self.size <= table_bound:
            self._materialize()
        if validate:
            validate_ring(self)

    def __repr__(self):
        return f"FiniteStarRing({self.name}, size={self.size})"

    def _materialize(self):
        n = self.size
        dtype = np.int16 if n <= 2**15 else np.int32
        codes = np.arange(n, dtype=np.int64)
        add = np.empty((n, n), dtype=dtype)
        mul = np.empty((n, n), dtype=dtype)
        step = max(1, 2**18 // n)
        for lo in range(0, n, step):
            rows = codes[lo:lo + step, None]
            add[lo:lo + step] = self.structure.add(rows, codes[None, :])
            mul[lo:lo + step] = self.structure.mul(rows, codes[None, :])
        self.add_table = add
        self.mul_table = mul
        self.star_map = _int_array(self.structure.star(codes)).astype(dtype)
        self.neg_map = _int_array(self.structure.neg(codes)).astype(dtype)

    @property
    def is_tabled(self):
        return self.mul_table is not None

    @property
    def codes(self):
        return np.arange(self.size, dtype=np.int64)

    def require_tabled(self, bound_flag="--max-scan"):
        if not self.is_tabled:
            raise TooLarge(self.size, self.table_bound, bound_flag)

    def cached(self, key, factory):
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = factory()
            return value

    # arithmetic on codes; ints in, ints out; arrays in, arrays out

    def add(self, a, b):
        if self.is_tabled:
            return _scalar(self.add_table[a, b])
        return _scalar(self.structure.add(_int_array(a), _int_array(b)))

    def mul(self, a, b):
        if self.is_tabled:
            return _scalar(self.mul_table[a, b])
        return _scalar(self.structure.mul(_int_array(a), _int_array(b)))

    def neg(self, a):
        if self.is_tabled:
            return _scalar(self.neg_map[a])
        return _scalar(self.structure.neg(_int_array(a)))

    def star(self, a):
        if self.is_tabled:
            return _scalar(self.star_map[a])
        return _scalar(self.structure.star(_int_array(a)))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def power(self, x, n):
        if n < 1:
            raise ValueError("exponent must be positive")
        result = x
        for _ in range(n - 1):
            result = self.mul(result, x)
        return result

    def distinct_powers(self, x):
        """``[x, x^2, ...]`` up to the first repeated value; covers every power of x."""
        powers = [x]
        seen = {x}
        while True:
            nxt = self.mul(powers[-1], x)
            if nxt in seen:
                return powers
            seen.add(nxt)
            powers.append(nxt)

    def is_nilpotent(self, x):
        return 0 in self.distinct_powers(x)

    @property
    def unity(self):
        return self.cached("unity", lambda: find_unity(self))

    def label(self, code):
        return self.structure.label(int(code))

    def element(self, code):
        code = int(code)
        if not 0 <= code < self.size:
            raise ValueError(f"code {code} outside carrier of {self.name}")
        return RingElement(self, code)

    def elements(self):
        return [RingElement(self, c) for c in range(self.size)]

    @property
    def parent(self):
        return getattr(self.structure, "parent", None)

    def to_parent(self, code):
        return int(self.structure.codes[code])

    def from_parent(self, parent_code):
        return int(self.structure.local(np.int64(parent_code)))


@dataclass(frozen=True)
class RingElement:
    """Handle on one element; arithmetic across different rings is rejected."""

    ring: FiniteStarRing = field(compare=False, repr=False)
    code: int

    @property
    def ring_id(self):
        return self.ring.ring_id

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring.ring_id == other.ring.ring_id and self.code == other.code

    def __hash__(self):
        return hash((self.ring.ring_id, self.code))

    def _check(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.ring.ring_id != self.ring.ring_id:
            raise CrossRingElement(f"{other} does not belong to {self.ring.name}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring.add(self.code, other.code))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring.sub(self.code, other.code))

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring.mul(self.code, other.code))

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.code))

    def __pow__(self, n):
        return RingElement(self.ring, self.ring.power(self.code, n))

    def star(self):
        return RingElement(self.ring, self.ring.star(self.code))

    def __repr__(self):
        return f"<{self.ring.label(self.code)} in {self.ring.name}>"


def arith(R, op, *args):
    """Apply ``add``, ``mul``, ``neg``, ``sub`` or ``star`` to elements of ``R``."""
    for a in args:
        if not isinstance(a, RingElement):
            raise TypeError(f"expected RingElement, got {type(a).__name__}")
        if a.ring.ring_id != R.ring_id:
            raise CrossRingElement(f"{a} does not belong to {R.name}")
    arity = {"add": 2, "mul": 2, "sub": 2, "neg": 1, "star": 1}
    if op not in arity:
        raise ValueError(f"unknown operation {op!r}")
    if len(args) != arity[op]:
        raise TypeError(f"{op} takes {arity[op]} arguments")
    code = getattr(R, op)(*(a.code for a in args))
    return RingElement(R, code)


def code_of(R, x):
    """Accept an int code or a RingElement of ``R``."""
    if isinstance(x, RingElement):
        if x.ring.ring_id != R.ring_id:
            raise CrossRingElement(f"{x} does not belong to {R.name}")
        return x.code
    return int(x)


def find_unity(R):
    if R.is_tabled:
        idx = np.arange(R.size)
        left = np.all(R.mul_table == idx[None, :], axis=1)
        right = np.all(R.mul_table == idx[:, None], axis=0)
        found = np.nonzero(left & right)[0]
        return int(found[0]) if len(found) else None
    hint = getattr(R.structure, "unity_hint", None)
    if hint is None:
        R.require_tabled()
    u = hint()
    if u is None:
        return None
    rng = np.random.default_rng(0)
    xs = rng.integers(0, R.size, size=4096)
    if np.all(R.mul(u, xs) == xs) and np.all(R.mul(xs, u) == xs):
        return u
    return None


def is_projection(R, e):
    return R.star(e) == e and R.mul(e, e) == e


# -- sub-rings -------------------------------------------------------------


class SubringStructure:
    """Structure of a *-closed subset of ``parent``; local code i is ``codes[i]``."""

    def __init__(self, parent, codes, notes=()):
        codes = np.unique(_int_array(codes))
        if codes.size == 0 or codes[0] != 0:
            raise AxiomViolation("subring contains zero", ())
        self.parent = parent
        self.codes = codes
        self.size = len(codes)
        self.notes = tuple(notes)

    def local(self, parent_codes):
        parent_codes = _int_array(parent_codes)
        idx = np.clip(np.searchsorted(self.codes, parent_codes), 0, self.size - 1)
        bad = self.codes[idx] != parent_codes
        if np.any(bad):
            where = int(np.flatnonzero(np.ravel(bad))[0])
            offender = int(np.ravel(parent_codes)[where])
            raise AxiomViolation("subring closure", (self.parent.label(offender),))
        return idx

    def add(self, a, b):
        return self.local(self.parent.add(self.codes[a], self.codes[b]))

    def mul(self, a, b):
        return self.local(self.parent.mul(self.codes[a], self.codes[b]))

    def neg(self, a):
        return self.local(self.parent.neg(self.codes[a]))

    def star(self, a):
        return self.local(self.parent.star(self.codes[a]))

    def label(self, code):
        return self.parent.label(int(self.codes[code]))


def subring(R, codes, name, notes=()):
    """The *-subring on the given parent codes; closure is enforced while tabulating."""
    return FiniteStarRing(SubringStructure(R, codes, notes), name, validate=False)


def _commuting_mask(R, elements):
    R.require_tabled()
    M = R.mul_table
    mask = np.ones(R.size, dtype=bool)
    for s in elements:
        mask &= M[s, :] == M[:, s]
    return mask


def center(R):
    R.require_tabled()
    mask = np.all(R.mul_table == R.mul_table.T, axis=1)
    return subring(R, np.nonzero(mask)[0], f"center({R.name})")


def corner(R, e):
    e = code_of(R, e)
    if not is_projection(R, e):
        raise NotAProjection(f"{R.label(e)} is not a projection of {R.name}")
    R.require_tabled()
    M = R.mul_table
    codes = np.unique(M[M[e, :], e])
    return subring(R, codes, f"corner({R.name}, {R.label(e)})")


def commutant(R, S, name=None):
    S = sorted({code_of(R, s) for s in S})
    mask = _commuting_mask(R, S)
    if name is None:
        name = f"commutant({R.name}, {{{', '.join(R.label(s) for s in S)}}})"
    return subring(R, np.nonzero(mask)[0], name)


# -- validation ------------------------------------------------------------


def _first(mask):
    return tuple(int(i) for i in np.argwhere(mask)[0])


def validate_ring(R, exhaustive_bound=EXHAUSTIVE_BOUND, samples=SAMPLES, seed=0):
    """Check every *-ring axiom; exhaustive for small tabled rings, sampled otherwise."""

    def fail(axiom, codes):
        raise AxiomViolation(axiom, tuple(R.label(c) for c in codes))

    n = R.size
    if R.is_tabled:
        idx = np.arange(n, dtype=np.int64)
        A = R.add_table.astype(np.int64)
        M = R.mul_table.astype(np.int64)
        S = R.star_map.astype(np.int64)
        G = R.neg_map.astype(np.int64)
        if np.any(A[0] != idx):
            fail("zero is additive identity", _first(A[0] != idx))
        if np.any(A != A.T):
            fail("addition commutative", _first(A != A.T))
        if np.any(A[idx, G] != 0):
            fail("additive inverse", _first(A[idx, G] != 0))
        if np.any(S[S] != idx):
            fail("star is an involution", _first(S[S] != idx))
        bad = S[A] != A[np.ix_(S, S)]
        if np.any(bad):
            fail("star additive", _first(bad))
        bad = S[M] != M[np.ix_(S, S)].T
        if np.any(bad):
            fail("star anti-multiplicative", _first(bad))
        if n <= exhaustive_bound:
            for a in range(n):
                Ma, Aa = M[a], A[a]
                checks = (
                    ("addition associative", A[Aa[:, None], idx[None, :]] != A[a, A]),
                    ("multiplication associative", M[Ma, :] != M[a, M]),
                    ("left distributive", M[a, A] != A[Ma[:, None], Ma[None, :]]),
                    ("right distributive", M[Aa, :] != A[Ma[None, :], M]),
                )
                for axiom, bad in checks:
                    if np.any(bad):
                        b, c = _first(bad)
                        fail(axiom, (a, b, c))
            return
    rng = np.random.default_rng(seed)
    a, b, c = (rng.integers(0, n, size=samples) for _ in range(3))
    add, mul, star, neg = R.add, R.mul, R.star, R.neg
    pairs = (
        ("zero is additive identity", add(0, a), a),
        ("addition commutative", add(a, b), add(b, a)),
        ("additive inverse", add(a, neg(a)), np.zeros_like(a)),
        ("star is an involution", star(star(a)), a),
        ("star additive", star(add(a, b)), add(star(a), star(b))),
        ("star anti-multiplicative", star(mul(a, b)), mul(star(b), star(a))),
        ("addition associative", add(add(a, b), c), add(a, add(b, c))),
        ("multiplication associative", mul(mul(a, b), c), mul(a, mul(b, c))),
        ("left distributive", mul(a, add(b, c)), add(mul(a, b), mul(a, c))),
        ("right distributive", mul(add(a, b), c), add(mul(a, c), mul(b, c))),
    )
    for axiom, lhs, rhs in pairs:
        bad = np.asarray(lhs) != np.asarray(rhs)
        if np.any(bad):
            i = int(np.flatnonzero(bad)[0])
            fail(axiom, (a[i], b[i], c[i]))
