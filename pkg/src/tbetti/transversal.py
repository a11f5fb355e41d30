"""Transversal monomial ideals I_t(D) and their closed-form Betti numbers.

D has one row per block; row i carries the variables y_{i,1..b_i} in its
own columns and zeros elsewhere, so a nonzero t-minor is a product of one
variable from each of t distinct rows.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .combinat import binom, compositions
from .monomial import BettiTable, Monomial, MonomialIdeal, VariableSet


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class BlockShape:
    blocks: tuple[int, ...]
    t: int

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(int(b) for b in self.blocks))
        if not self.blocks or any(b < 1 for b in self.blocks):
            raise ShapeError(f"block sizes must be positive: {self.blocks}")
        if not 1 <= self.t <= len(self.blocks):
            raise ShapeError(f"need 1 <= t <= n = {len(self.blocks)}, got t = {self.t}")

    @classmethod
    def uniform(cls, n: int, b: int, t: int) -> "BlockShape":
        return cls((b,) * n, t)

    @property
    def n(self) -> int:
        return len(self.blocks)

    @property
    def m(self) -> int:
        return sum(self.blocks)

    @property
    def max_q(self) -> int:
        """Top homological index with nonzero Betti number, m - t."""
        return self.m - self.t

    def offsets(self) -> list[int]:
        """0-based position of y_{i,1} in the block-major variable order."""
        out, acc = [], 0
        for b in self.blocks:
            out.append(acc)
            acc += b
        return out

    def var_index(self, i: int, j: int) -> int:
        """0-based position of y_{i,j} (1-based i, j)."""
        return self.offsets()[i - 1] + j - 1

    def variables(self) -> VariableSet:
        return VariableSet(f"y{i}_{j}" for i, b in enumerate(self.blocks, 1)
                           for j in range(1, b + 1))


def gens_transversal(shape: BlockShape) -> MonomialIdeal:
    ring = shape.variables()
    gens = []
    for rows in itertools.combinations(range(1, shape.n + 1), shape.t):
        for cols in itertools.product(*(range(1, shape.blocks[i - 1] + 1) for i in rows)):
            gens.append(Monomial.from_vars(
                shape.m, (shape.var_index(i, j) for i, j in zip(rows, cols))))
    return MonomialIdeal(ring, gens)


def betti_formula_general(shape: BlockShape, q: int) -> int:
    """beta_q(I_t(D)) summed over row selections and bounded compositions."""
    if q < 0:
        raise ValueError("q must be >= 0")
    t, n = shape.t, shape.n
    if q > shape.max_q:
        return 0
    total = 0
    for s in range(t, min(t + q, n) + 1):
        inner = 0
        for rows in itertools.combinations(range(n), s):
            caps = [shape.blocks[i] for i in rows]
            for comp in compositions(t + q, s, caps):
                inner += math.prod(binom(b, r) for b, r in zip(caps, comp.parts))
        total += binom(s - 1, t - 1) * inner
    return total


def betti_formula_uniform(n: int, b: int, t: int, q: int) -> int:
    """Same count for b_1 = ... = b_n = b; row selections collapse to C(n, s)."""
    if q < 0:
        raise ValueError("q must be >= 0")
    total = 0
    for s in range(t, min(t + q, n) + 1):
        inner = sum(math.prod(binom(b, r) for r in comp.parts)
                    for comp in compositions(t + q, s, [b] * s))
        total += binom(s - 1, t - 1) * binom(n, s) * inner
    return total


def betti_formula_b2(n: int, t: int, q: int) -> int:
    """b = 2 closed form: sum_s C(s-1,t-1) C(n,s) C(s,t+q-s) 2^(2s-t-q)."""
    if q < 0:
        raise ValueError("q must be >= 0")
    lo = max(t, -(-(t + q) // 2))
    hi = min(t + q, n)
    return sum(binom(s - 1, t - 1) * binom(n, s) * binom(s, t + q - s) * 2 ** (2 * s - t - q)
               for s in range(lo, hi + 1))


def betti_formula_unconstrained(shape: BlockShape, q: int) -> int:
    """The general formula with the r_v >= 1 condition dropped.

    The composition sum then collapses by Vandermonde convolution to
    C(b_{i_1} + ... + b_{i_s}, t + q) per row selection; this overcounts.
    """
    t, n = shape.t, shape.n
    total = 0
    for s in range(t, min(t + q, n) + 1):
        total += binom(s - 1, t - 1) * sum(
            binom(sum(shape.blocks[i] for i in rows), t + q)
            for rows in itertools.combinations(range(n), s))
    return total


def betti_table_transversal(shape: BlockShape) -> BettiTable:
    totals = [betti_formula_general(shape, q) for q in range(shape.max_q + 1)]
    return BettiTable.from_totals(totals, lambda q: shape.t + q)
