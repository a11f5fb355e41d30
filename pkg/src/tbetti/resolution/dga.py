"""Multiplicative structure on C when every block has a single column.

With b_i = 1 a basis element of C is a pair (S, M): a set S of rows (the
chosen columns) and a marker set M inside S. Elements carry polynomial
coefficients because the differential multiplies by variables; a monomial
is stored as a sorted tuple of row indices.

The product concatenates the marker wedges (sign of the sorting
permutation) and unions the row sets; it vanishes when the row sets meet.
The differential removes one marker, and its row, with sign (-1)^w for
the 0-based marker position w. It is applied down to empty marker sets,
so the algebra also contains the marker-free elements below C_0.

Degree: an element with |M| markers has degree |M|, i.e. q + 1 for C_q.
"""

from __future__ import annotations

import itertools
import random
from collections import defaultdict
from typing import Iterable, Mapping

from ..transversal import BlockShape, ShapeError

Key = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]  # (S, M, monomial)


def perm_sign(seq: Iterable[int]) -> int:
    seq = list(seq)
    sign = 1
    for a, b in itertools.combinations(range(len(seq)), 2):
        if seq[a] > seq[b]:
            sign = -sign
    return sign


class DGElement:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, int] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def basis(cls, rows: Iterable[int], markers: Iterable[int], coef: int = 1) -> "DGElement":
        S, M = tuple(sorted(rows)), tuple(sorted(markers))
        if not set(M) <= set(S):
            raise ValueError("markers must be among the rows")
        return cls({(S, M, ()): coef})

    def __add__(self, other: "DGElement") -> "DGElement":
        acc = defaultdict(int, self.terms)
        for k, v in other.terms.items():
            acc[k] += v
        return DGElement(acc)

    def __neg__(self) -> "DGElement":
        return DGElement({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "DGElement") -> "DGElement":
        return self + (-other)

    def scale(self, c: int) -> "DGElement":
        return DGElement({k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, DGElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {len(M) for _, M, _ in self.terms}

    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError(f"element is not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def row_support(self) -> set[int]:
        return {i for S, _, _ in self.terms for i in S}

    def __repr__(self):
        parts = [f"{v:+d}*{list(m) or ''}(S={list(S)},M={list(M)})"
                 for (S, M, m), v in sorted(self.terms.items())]
        return "DGElement(" + " ".join(parts) + ")"


def _require_single_columns(shape: BlockShape):
    if any(b != 1 for b in shape.blocks):
        raise ShapeError("the product is only defined when every block has one column")


def dg_multiply(shape: BlockShape, a: DGElement, b: DGElement) -> DGElement:
    _require_single_columns(shape)
    acc = defaultdict(int)
    for (S, M, ma), ca in a.terms.items():
        for (T, N, mb), cb in b.terms.items():
            if set(S) & set(T):
                continue
            key = (tuple(sorted(S + T)), tuple(sorted(M + N)), tuple(sorted(ma + mb)))
            acc[key] += perm_sign(M + N) * ca * cb
    return DGElement(acc)


def dg_boundary(shape: BlockShape, a: DGElement) -> DGElement:
    _require_single_columns(shape)
    acc = defaultdict(int)
    for (S, M, mono), c in a.terms.items():
        for w, i in enumerate(M):
            key = (tuple(x for x in S if x != i), M[:w] + M[w + 1:], tuple(sorted(mono + (i,))))
            acc[key] += (-1) ** w * c
    return DGElement(acc)


def random_homogeneous(shape: BlockShape, rng: random.Random, q: int | None = None,
                       terms: int = 2, avoid: Iterable[int] = ()) -> DGElement:
    """A random integer combination of C_q basis elements.

    Rows listed in ``avoid`` are not used; returns zero if no basis element fits.
    """
    _require_single_columns(shape)
    n, t = shape.n, shape.t
    pool = [i for i in range(1, n + 1) if i not in set(avoid)]
    if q is None:
        q = rng.randrange(0, max(1, len(pool) - t + 1))
    if t + q > len(pool):
        return DGElement()
    chosen = {}
    for _ in range(terms):
        S = tuple(sorted(rng.sample(pool, t + q)))
        M = tuple(sorted(rng.sample(S, q + 1)))
        chosen[(S, M, ())] = rng.choice([-3, -2, -1, 1, 2, 3])
    return DGElement(chosen)


def leibniz_defect(shape: BlockShape, a: DGElement, b: DGElement) -> DGElement:
    """d(ab) - d(a) b - (-1)^|a| a d(b); zero when the Leibniz rule holds."""
    if not a or not b:
        return DGElement()
    d = lambda x: dg_boundary(shape, x)
    mul = lambda x, y: dg_multiply(shape, x, y)
    sign = (-1) ** a.degree()
    return d(mul(a, b)) - mul(d(a), b) - mul(a, d(b)).scale(sign)


def commutator_defect(shape: BlockShape, a: DGElement, b: DGElement) -> DGElement:
    """ab - (-1)^(|a||b|) ba."""
    if not a or not b:
        return DGElement()
    sign = (-1) ** (a.degree() * b.degree())
    return dg_multiply(shape, a, b) - dg_multiply(shape, b, a).scale(sign)


def associator_defect(shape: BlockShape, a: DGElement, b: DGElement, c: DGElement) -> DGElement:
    mul = lambda x, y: dg_multiply(shape, x, y)
    return mul(mul(a, b), c) - mul(a, mul(b, c))
