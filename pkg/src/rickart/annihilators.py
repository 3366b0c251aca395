"""One-sided annihilators, annihilator chains of powers, projection generators."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ring import code_of


@dataclass(frozen=True)
class AnnihilatorSet:
    side: str
    elements: tuple
    generator_of: tuple

    def __contains__(self, code):
        return code in set(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __le__(self, other):
        return set(self.elements) <= set(other.elements)


@dataclass(frozen=True)
class AnnChainResult:
    x: int
    stabilization_n: int
    chain: tuple  # r(x^n) for n = 1 .. stabilization_n

    @property
    def stable(self):
        return self.chain[-1]


def right_mask(R, x):
    """Boolean mask of r(x) = {a : x a = 0}."""
    R.require_tabled()
    return R.mul_table[x, :] == 0


def left_mask(R, x):
    R.require_tabled()
    return R.mul_table[:, x] == 0


def _annihilator(R, S, side):
    S = tuple(sorted({code_of(R, s) for s in S}))
    R.require_tabled()
    mask = np.ones(R.size, dtype=bool)
    masker = right_mask if side == "right" else left_mask
    for s in S:
        mask &= masker(R, s)
    return AnnihilatorSet(side, tuple(int(a) for a in np.flatnonzero(mask)), S)


def right_annihilator(R, S):
    return _annihilator(R, S, "right")


def left_annihilator(R, S):
    return _annihilator(R, S, "left")


def ann_chain(R, x, side="right"):
    """r(x), r(x^2), ... until two consecutive terms agree.

    The chain ascends, and once r(x^n) = r(x^(n+1)) every later term is equal:
    y in r(x^(n+2)) gives xy in r(x^(n+1)) = r(x^n), so y in r(x^(n+1)).
    """
    x = code_of(R, x)
    make = right_annihilator if side == "right" else left_annihilator
    chain = [make(R, [x])]
    xn = x
    while True:
        xn = R.mul(xn, x)
        nxt = make(R, [xn])
        if nxt.elements == chain[-1].elements:
            return AnnChainResult(x, len(chain), tuple(chain))
        chain.append(nxt)


def projection_generator(R, A):
    """The projection g with A = gR (right) or A = Rg (left), or None.

    g works iff g lies in A, is a projection, and fixes every element of A
    from the generating side; it is unique when it exists.
    """
    R.require_tabled()
    M = R.mul_table
    elems = np.asarray(A.elements, dtype=np.int64)
    for g in A.elements:
        if R.star(g) != g or M[g, g] != g:
            continue
        fixes = M[g, elems] if A.side == "right" else M[elems, g]
        if np.array_equal(fixes, elems):
            return int(g)
    return None


def principal_set(R, g, side="right"):
    """gR (right) or Rg (left) as a sorted tuple; used to re-check generators."""
    R.require_tabled()
    row = R.mul_table[g, :] if side == "right" else R.mul_table[:, g]
    return tuple(int(a) for a in np.unique(row))
