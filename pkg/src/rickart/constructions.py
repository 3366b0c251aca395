"""Ring constructors and the construction expression tree.

Every constructor encodes its elements as mixed-radix integers over the
coordinates it naturally has (residues, matrix entries, coefficients on a
basis, pairs) and exposes vectorised operations on those codes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import AxiomViolation, BadParameter, CharacteristicMismatch
from .ring import TABLE_BOUND, FiniteStarRing, SubringStructure

MAX_CODE = 2**62


def is_prime(p):
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class ConstructionSpec:
    """One node of a construction expression, e.g. ``matrix(zmod(3), 2)``."""

    kind: str
    args: tuple = ()

    def __str__(self):
        if self.kind == "triangular":
            kind, n, base = self.args
            return f"triangular({kind}, {n}, {base})"
        return f"{self.kind}({', '.join(_render_arg(a) for a in self.args)})"


def _render_arg(a):
    if isinstance(a, str):
        return json.dumps(a)
    return str(a)


def zmod(n):
    return ConstructionSpec("zmod", (n,))


def matrix(base, k):
    return ConstructionSpec("matrix", (base, k))


def group_algebra(p, *orders):
    return ConstructionSpec("groupalg", (p, *orders))


def quaternion_z2():
    return ConstructionSpec("quaternion_z2")


def direct_sum(a, b):
    return ConstructionSpec("sum", (a, b))


def poly_quotient(p, n):
    return ConstructionSpec("polyquot", (p, n))


def triangular(kind, n, base):
    return ConstructionSpec("triangular", (kind, n, base))


def unitify_spec(base, p):
    return ConstructionSpec("unitify", (base, p))


def cayley(path):
    return ConstructionSpec("cayley", (path,))


# -- structures --------------------------------------------------------------


class ZModStructure:
    def __init__(self, n):
        self.size = n

    def add(self, a, b):
        return (a + b) % self.size

    def mul(self, a, b):
        return (a * b) % self.size

    def neg(self, a):
        return (-a) % self.size

    def star(self, a):
        return a

    def label(self, code):
        return str(code)

    def unity_hint(self):
        return 1 % self.size


class AlgebraStructure:
    """Free Z_m-module on a basis with structure constants and a linear involution."""

    def __init__(self, modulus, constants, star_matrix, basis_labels, notes=()):
        self.modulus = modulus
        self.dim = len(basis_labels)
        self.size = modulus**self.dim
        self.constants = np.asarray(constants, dtype=np.int64) % modulus
        self.star_matrix = np.asarray(star_matrix, dtype=np.int64) % modulus
        self.basis_labels = list(basis_labels)
        self.notes = tuple(notes)
        self._radix = modulus ** np.arange(self.dim, dtype=np.int64)

    def digits(self, codes):
        return (np.asarray(codes, dtype=np.int64)[..., None] // self._radix) % self.modulus

    def encode(self, digits):
        return (np.asarray(digits) % self.modulus * self._radix).sum(axis=-1)

    def add(self, a, b):
        return self.encode(self.digits(a) + self.digits(b))

    def neg(self, a):
        return self.encode(-self.digits(a))

    def mul(self, a, b):
        da, db = np.broadcast_arrays(self.digits(a), self.digits(b))
        outer = da[..., :, None] * db[..., None, :]
        return self.encode(np.tensordot(outer, self.constants, axes=([-2, -1], [0, 1])))

    def star(self, a):
        return self.encode(self.digits(a) @ self.star_matrix.T)

    def label(self, code):
        terms = []
        for c, name in zip(self.digits(code).tolist(), self.basis_labels):
            if c == 0:
                continue
            if name == "1":
                terms.append(str(c))
            else:
                terms.append(name if c == 1 else f"{c}{name}")
        return "+".join(terms) or "0"

    def unity_hint(self):
        return 1


def quaternion_structure(modulus=2):
    # basis 1, i, j, k; products (sign, index)
    table = {
        (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
        (1, 2): (1, 3), (2, 1): (-1, 3),
        (2, 3): (1, 1), (3, 2): (-1, 1),
        (3, 1): (1, 2), (1, 3): (-1, 2),
    }
    c = np.zeros((4, 4, 4), dtype=np.int64)
    for a in range(4):
        c[0, a, a] = c[a, 0, a] = 1
    for (a, b), (sign, k) in table.items():
        c[a, b, k] = sign
    conj = np.diag([1, -1, -1, -1])
    notes = ("quaternion conjugation a0-a1i-a2j-a3k is the identity map over Z2",)
    return AlgebraStructure(modulus, c, conj, ["1", "i", "j", "k"], notes)


def group_algebra_structure(p, orders):
    names = "ghkl"
    if len(orders) > len(names):
        raise BadParameter("at most four cyclic factors are supported")
    group = list(product(*(range(o) for o in orders)))
    index = {g: i for i, g in enumerate(group)}
    d = len(group)
    c = np.zeros((d, d, d), dtype=np.int64)
    inv = np.zeros((d, d), dtype=np.int64)
    for g in group:
        for h in group:
            gh = tuple((x + y) % o for x, y, o in zip(g, h, orders))
            c[index[g], index[h], index[gh]] = 1
        g_inv = tuple((-x) % o for x, o in zip(g, orders))
        inv[index[g_inv], index[g]] = 1

    def name(g):
        parts = [names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(g) if e]
        return "".join(parts) or "1"

    return AlgebraStructure(p, c, inv, [name(g) for g in group])


def poly_quotient_structure(p, n):
    monomials = [(deg - j, j) for deg in range(n) for j in range(deg + 1)]
    index = {m: i for i, m in enumerate(monomials)}
    d = len(monomials)
    c = np.zeros((d, d, d), dtype=np.int64)
    for (a, b), (u, v) in product(monomials, repeat=2):
        if a + u + b + v < n:
            c[index[(a, b)], index[(u, v)], index[(a + u, b + v)]] = 1

    def name(m):
        a, b = m
        part = lambda var, e: "" if e == 0 else var if e == 1 else f"{var}^{e}"
        return (part("x", a) + part("y", b)) or "1"

    notes = (f"F_{p}[x,y]/(x,y)^{n} stands in for the complex construction; "
             "the coefficient involution is the identity",)
    return AlgebraStructure(p, c, np.eye(d, dtype=np.int64), [name(m) for m in monomials], notes)


class MatrixStructure:
    """k x k matrices over a tabled base ring, row-major base-|B| digits."""

    def __init__(self, base, k, involution="transpose"):
        base.require_tabled()
        q = base.size
        if q ** (k * k) > MAX_CODE:
            raise BadParameter(f"|base|^(k^2) = {q}^{k * k} does not fit a 63-bit code")
        self.base = base
        self.k = k
        self.q = q
        self.size = q ** (k * k)
        self.involution = involution
        self._radix = (q ** np.arange(k * k, dtype=np.int64)).reshape(k, k)
        modulus = getattr(base.structure, "size", None)
        self._zmod = modulus if isinstance(base.structure, ZModStructure) else None
        self.notes = ()
        if involution == "antitranspose":
            self.notes = ("involution: entrywise base involution composed with "
                          "transpose about the anti-diagonal",)

    def digits(self, codes):
        codes = np.asarray(codes, dtype=np.int64)
        return (codes[..., None, None] // self._radix) % self.q

    def encode(self, digits):
        return (np.asarray(digits, dtype=np.int64) * self._radix).sum(axis=(-2, -1))

    def matmul_digits(self, A, B):
        if self._zmod is not None:
            return np.matmul(A, B) % self._zmod
        A, B = np.broadcast_arrays(A, B)
        M, Ad = self.base.mul_table, self.base.add_table
        acc = M[A[..., :, 0, None], B[..., None, 0, :]]
        for l in range(1, self.k):
            acc = Ad[acc, M[A[..., :, l, None], B[..., None, l, :]]]
        return acc.astype(np.int64)

    def star_digits(self, A):
        if self.involution == "antitranspose":
            A = A[..., ::-1, ::-1]
        return self.base.star_map[np.swapaxes(A, -1, -2)].astype(np.int64)

    def add(self, a, b):
        return self.encode(self.base.add_table[self.digits(a), self.digits(b)])

    def neg(self, a):
        return self.encode(self.base.neg_map[self.digits(a)])

    def mul(self, a, b):
        return self.encode(self.matmul_digits(self.digits(a), self.digits(b)))

    def star(self, a):
        return self.encode(self.star_digits(self.digits(a)))

    def label(self, code):
        rows = self.digits(code).tolist()
        return "[" + ",".join("[" + ",".join(self.base.label(x) for x in r) + "]" for r in rows) + "]"

    def unity_hint(self):
        one = self.base.unity
        if one is None:
            return None
        return int(self.encode(np.eye(self.k, dtype=np.int64) * one))

    def star_fixed_count(self):
        fixed = int(np.sum(self.base.star_map == np.arange(self.q)))
        return fixed**self.k * self.q ** (self.k * (self.k - 1) // 2)

    def star_fixed_digits(self, chunk=2**16):
        """Yield arrays of star-fixed matrices (digit form) in increasing code order of the free entries."""
        if self.involution != "transpose":
            raise BadParameter("star-fixed scan implemented for transpose involutions")
        k, q = self.k, self.q
        fixed = np.flatnonzero(self.base.star_map == np.arange(q))
        upper = [(i, j) for i in range(k) for j in range(i + 1, k)]
        radices = [len(fixed)] * k + [q] * len(upper)
        total = int(np.prod(radices, dtype=object))
        weights = np.cumprod([1] + radices[:-1]).astype(np.int64)
        for lo in range(0, total, chunk):
            t = np.arange(lo, min(total, lo + chunk), dtype=np.int64)
            coords = (t[:, None] // weights[None, :]) % np.asarray(radices)[None, :]
            D = np.zeros((len(t), k, k), dtype=np.int64)
            for i in range(k):
                D[:, i, i] = fixed[coords[:, i]]
            for m, (i, j) in enumerate(upper):
                D[:, i, j] = coords[:, k + m]
                D[:, j, i] = self.base.star_map[coords[:, k + m]]
            yield D

    def kernel_vectors(self, code):
        """Column vectors v over the base with A v = 0; r(A) is exactly these columns."""
        A = self.digits(code)
        q, k = self.q, self.k
        vecs = (np.arange(q**k, dtype=np.int64)[:, None] // q ** np.arange(k)) % q
        prod = self.matmul_digits(A[None, :, :], vecs[:, :, None])[..., 0]
        return vecs[np.all(prod == 0, axis=1)]


class DirectSumStructure:
    def __init__(self, left, right):
        self.left, self.right = left, right
        self.size = left.size * right.size
        self.notes = tuple(dict.fromkeys(left.notes + right.notes))

    def split(self, c):
        c = np.asarray(c, dtype=np.int64)
        return c % self.left.size, c // self.left.size

    def join(self, a, b):
        return np.asarray(a, dtype=np.int64) + self.left.size * np.asarray(b, dtype=np.int64)

    def add(self, x, y):
        (a, b), (c, d) = self.split(x), self.split(y)
        return self.join(self.left.add(a, c), self.right.add(b, d))

    def mul(self, x, y):
        (a, b), (c, d) = self.split(x), self.split(y)
        return self.join(self.left.mul(a, c), self.right.mul(b, d))

    def neg(self, x):
        a, b = self.split(x)
        return self.join(self.left.neg(a), self.right.neg(b))

    def star(self, x):
        a, b = self.split(x)
        return self.join(self.left.star(a), self.right.star(b))

    def label(self, code):
        a, b = self.split(code)
        return f"({self.left.label(int(a))},{self.right.label(int(b))})"

    def unity_hint(self):
        u, v = self.left.unity, self.right.unity
        return None if u is None or v is None else int(self.join(u, v))


class UnitifyStructure:
    """Pairs (a, lam) in R + F_p with (a,lam)(b,mu) = (ab + mu a + lam b, lam mu)."""

    def __init__(self, base, p):
        base.require_tabled()
        self.base = base
        self.p = p
        self.size = base.size * p
        A = base.add_table.astype(np.int64)
        smul = np.zeros((p, base.size), dtype=np.int64)
        for lam in range(1, p):
            smul[lam] = A[smul[lam - 1], np.arange(base.size)]
        if np.any(A[smul[p - 1], np.arange(base.size)] != 0):
            bad = int(np.flatnonzero(A[smul[p - 1], np.arange(base.size)] != 0)[0])
            raise CharacteristicMismatch(
                f"{p}·{base.label(bad)} != 0 in {base.name}; base is not an F_{p}-algebra")
        self.smul = smul
        self.notes = base.notes + (f"scalars K = F_{p} with identity involution",)

    def split(self, c):
        c = np.asarray(c, dtype=np.int64)
        return c % self.base.size, c // self.base.size

    def join(self, a, lam):
        return np.asarray(a, dtype=np.int64) + self.base.size * (np.asarray(lam, dtype=np.int64) % self.p)

    def add(self, x, y):
        (a, l), (b, m) = self.split(x), self.split(y)
        return self.join(self.base.add(a, b), l + m)

    def mul(self, x, y):
        (a, l), (b, m) = self.split(x), self.split(y)
        a, l, b, m = np.broadcast_arrays(a, l, b, m)
        first = self.base.add(self.base.add(self.base.mul(a, b), self.smul[m, a]), self.smul[l, b])
        return self.join(first, l * m)

    def neg(self, x):
        a, l = self.split(x)
        return self.join(self.base.neg(a), -l)

    def star(self, x):
        a, l = self.split(x)
        return self.join(self.base.star(a), l)

    def scale(self, lam, x):
        a, l = self.split(x)
        return self.join(self.smul[lam % self.p, a], lam * l)

    def embed(self, a):
        return int(self.join(a, 0))

    def label(self, code):
        a, l = self.split(code)
        return f"({self.base.label(int(a))},{int(l)})"

    def unity_hint(self):
        return self.base.size


class CayleyStructure:
    def __init__(self, add, mul, star, labels=None):
        self.add_tab = np.asarray(add, dtype=np.int64)
        self.mul_tab = np.asarray(mul, dtype=np.int64)
        self.star_tab = np.asarray(star, dtype=np.int64)
        self.size = len(self.star_tab)
        n = self.size
        if self.add_tab.shape != (n, n) or self.mul_tab.shape != (n, n):
            raise BadParameter(f"Cayley tables must be {n}x{n}")
        for name, tab in (("add", self.add_tab), ("mul", self.mul_tab), ("star", self.star_tab)):
            if tab.min() < 0 or tab.max() >= n:
                raise BadParameter(f"{name} table entries must lie in 0..{n - 1}")
        zero_hits = self.add_tab == 0
        if not np.all(zero_hits.sum(axis=1) == 1):
            row = int(np.flatnonzero(zero_hits.sum(axis=1) != 1)[0])
            raise AxiomViolation("additive inverse", (str(row),))
        self.neg_tab = np.argmax(zero_hits, axis=1)
        self.labels = list(labels) if labels else [str(i) for i in range(n)]
        self.notes = ()

    def add(self, a, b):
        return self.add_tab[a, b]

    def mul(self, a, b):
        return self.mul_tab[a, b]

    def neg(self, a):
        return self.neg_tab[a]

    def star(self, a):
        return self.star_tab[a]

    def label(self, code):
        return self.labels[code]


# -- triangular families -------------------------------------------------------


def _E(n, i, j):
    m = np.zeros((n, n), dtype=np.int64)
    m[i - 1, j - 1] = 1
    return m


def triangular_generators(kind, n):
    """0/1 matrices whose base-span defines the family, index formulas taken literally."""
    if n < 2:
        raise BadParameter("triangular families need n >= 2")
    eye = np.eye(n, dtype=np.int64)
    V = sum(_E(n, i, i + 1) for i in range(1, n))
    Vp = lambda e: np.linalg.matrix_power(V, e)
    h, h1, hm = n // 2, (n + 1) // 2, (n - 1) // 2
    gens = [eye]
    if kind == "S":
        gens += [_E(n, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    elif kind == "V":
        gens += [Vp(l - 1) for l in range(2, n + 1)]
    elif kind == "A":
        gens += [Vp(l - 1) for l in range(2, h + 1)]
        gens += [_E(n, i, j) for i in range(1, h1 + 1) for j in range(h + i, n + 1)]
    elif kind == "B":
        gens += [Vp(l - 2) for l in range(3, h + 1)]
        gens += [_E(n, i, j) for i in range(1, h1 + 2) for j in range(h + i - 1, n + 1)
                 if i <= n and j >= 1]
    elif kind == "U":
        gens += [_E(n, i, j) for i in range(1, hm + 1) for j in range(h + 1, n + 1)]
        gens += [_E(n, hm + 1, j) for j in range(hm + 2, n + 1)]
    else:
        raise BadParameter(f"unknown triangular kind {kind!r}; expected one of S, A, B, U, V")
    return gens


def triangular_structure(kind, n, base):
    base.require_tabled()
    if np.any(base.mul_table != base.mul_table.T):
        raise BadParameter(f"triangular families need a commutative base; {base.name} is not")
    one = base.unity
    if one is None:
        raise BadParameter(f"triangular families need a unital base; {base.name} has no unity")
    parent = FiniteStarRing(MatrixStructure(base, n, "antitranspose"),
                            f"matrix_antitranspose({base.name}, {n})", validate=False)
    mstruct = parent.structure
    gens = triangular_generators(kind, n)
    q = base.size
    A, M = base.add_table.astype(np.int64), base.mul_table.astype(np.int64)
    span = np.zeros((1, n, n), dtype=np.int64)
    for g in gens:
        # scalar multiples r*g, entries r*1 where g is 1
        multiples = np.where(g[None, :, :] == 1, M[np.arange(q)[:, None, None], one], 0)
        span = A[span[:, None], multiples[None, :]].reshape(-1, n, n)
        span = np.unique(span.reshape(len(span), -1), axis=0).reshape(-1, n, n)
    codes = mstruct.encode(span)
    return SubringStructure(parent, codes, notes=mstruct.notes)


# -- build ---------------------------------------------------------------------


def _int_param(value, what, minimum=None):
    if not isinstance(value, int) or isinstance(value, bool):
        raise BadParameter(f"{what} must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise BadParameter(f"{what} must be >= {minimum}, got {value}")
    return value


def _prime_param(value, what):
    _int_param(value, what)
    if not is_prime(value):
        raise BadParameter(f"{what} must be prime, got {value}")
    return value


def _ring_param(value, what, **kw):
    if isinstance(value, FiniteStarRing):
        return value
    if not isinstance(value, ConstructionSpec):
        raise BadParameter(f"{what} must be a ring construction, got {value!r}")
    return build_ring(value, **kw)


def make_structure(spec, **kw):
    kind, args = spec.kind, spec.args

    def arity(n):
        if len(args) != n:
            raise BadParameter(f"{kind} takes {n} arguments, got {len(args)}")

    if kind == "zmod":
        arity(1)
        return ZModStructure(_int_param(args[0], "zmod modulus", 2))
    if kind == "matrix":
        arity(2)
        base = _ring_param(args[0], "matrix base", **kw)
        return MatrixStructure(base, _int_param(args[1], "matrix size", 1))
    if kind == "groupalg":
        if len(args) < 2:
            raise BadParameter("groupalg takes a prime and at least one cyclic order")
        p = _prime_param(args[0], "group algebra characteristic")
        orders = [_int_param(o, "cyclic order", 2) for o in args[1:]]
        for o in orders:
            if p ** round(math.log(o, p)) != o:
                raise BadParameter(f"cyclic order {o} is not a power of {p}")
        return group_algebra_structure(p, orders)
    if kind == "quaternion_z2":
        arity(0)
        return quaternion_structure(2)
    if kind == "sum":
        arity(2)
        return DirectSumStructure(_ring_param(args[0], "summand", **kw),
                                  _ring_param(args[1], "summand", **kw))
    if kind == "polyquot":
        arity(2)
        return poly_quotient_structure(_prime_param(args[0], "polyquot characteristic"),
                                       _int_param(args[1], "nilpotency index", 1))
    if kind == "triangular":
        arity(3)
        family = args[0]
        if family not in ("S", "A", "B", "U", "V"):
            raise BadParameter(f"unknown triangular kind {family!r}; expected one of S, A, B, U, V")
        return triangular_structure(family, _int_param(args[1], "triangular size", 2),
                                    _ring_param(args[2], "triangular base", **kw))
    if kind == "unitify":
        arity(2)
        return UnitifyStructure(_ring_param(args[0], "unitify base", **kw),
                                _prime_param(args[1], "unitify prime"))
    if kind == "cayley":
        arity(1)
        from .textio import load_cayley
        return load_cayley(args[0])
    raise BadParameter(f"unknown constructor {kind!r}")


def build_ring(spec, *, table_bound=TABLE_BOUND, validate=True):
    """Build and validate the ring described by ``spec``."""
    structure = make_structure(spec, table_bound=table_bound, validate=validate)
    return FiniteStarRing(structure, str(spec), table_bound=table_bound, validate=validate)


def unitify(R, p):
    """The unitification R + F_p of an F_p-algebra R."""
    if not isinstance(p, int) or not is_prime(p):
        raise BadParameter(f"unitify prime must be prime, got {p!r}")
    return FiniteStarRing(UnitifyStructure(R, p), f"unitify({R.name}, {p})")
