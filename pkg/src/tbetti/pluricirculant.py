"""Initial ideals J_t of t-minors of generic pluri-circulant matrices.

T = [T_1 ... T_b] stacks the first t rows of each circulant block with the
entries below the diagonal set to zero. J_t is generated by the products
T[1,c_1] T[2,c_2] ... T[t,c_t] over column selections c_1 < ... < c_t that
avoid zeros. For b = 2 the variables are re-indexed as z_1, z_2, ... so
that J_t becomes a stable ideal.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .combinat import binom
from .monomial import (BettiTable, Monomial, MonomialIdeal, VariableSet, betti_ek,
                       is_stable, primary_witness, radical)
from .transversal import ShapeError, betti_formula_b2

Var = tuple[int, int]  # x_{ij} as (i, j), 1-based


@dataclass(frozen=True)
class PluriShape:
    n: int
    b: int
    t: int

    def __post_init__(self):
        if self.b < 1 or not 1 <= self.t <= self.n:
            raise ShapeError(f"need b >= 1 and 1 <= t <= n, got n={self.n} b={self.b} t={self.t}")

    @property
    def d(self) -> int:
        return self.n - self.t + 1

    @property
    def num_z(self) -> int:
        """Number of meaningful re-indexed variables, 2d + t - 1 = 2n - t + 1."""
        return 2 * self.d + self.t - 1


def build_T(shape: PluriShape) -> list[list[Optional[Var]]]:
    """t x nb matrix; entry (r, c) of block j is x_{c-r+1, j} for c >= r, else None."""
    rows = []
    for r in range(1, shape.t + 1):
        row: list[Optional[Var]] = []
        for j in range(1, shape.b + 1):
            for c in range(1, shape.n + 1):
                row.append((c - r + 1, j) if c >= r else None)
        rows.append(row)
    return rows


@dataclass
class ReindexMap:
    forward: dict[Var, Optional[int]]   # None marks a starred entry
    backward: dict[int, Var]

    def variables(self) -> VariableSet:
        return VariableSet(f"z{k}" for k in range(1, len(self.backward) + 1))


def _last_row_first_order(shape: PluriShape) -> tuple[list[Var], list[Var]]:
    """Variables ordered by the re-indexing rule, plus the ones that never occur.

    Last-row entries come first, left to right; the remaining first-row
    entries follow left to right, skipping entries that occur in no
    generator.
    """
    T = build_T(shape)
    used = {T[r][c] for sel in _diagonals(T) for r, c in enumerate(sel)}
    order: list[Var] = []
    for v in T[-1]:
        if v is not None and v not in order:
            order.append(v)
    for v in T[0]:
        if v not in order and v in used:
            order.append(v)
    starred = [v for v in T[0] if v not in order]
    return order, starred


def reindex_b2(shape: PluriShape) -> ReindexMap:
    if shape.b != 2:
        raise ShapeError("the z re-indexing is defined for b = 2 only")
    order, starred = _last_row_first_order(shape)
    forward: dict[Var, Optional[int]] = {v: k for k, v in enumerate(order, 1)}
    forward.update({v: None for v in starred})
    return ReindexMap(forward, {k: v for v, k in forward.items() if k is not None})


def _diagonals(T):
    """Column selections c_1 < ... < c_t with every T[r][c_r] nonzero."""
    t, width = len(T), len(T[0])

    def rec(r, start):
        if r == t:
            yield ()
            return
        for c in range(start, width - (t - r - 1)):
            if T[r][c] is not None:
                for rest in rec(r + 1, c + 1):
                    yield (c,) + rest

    return rec(0, 0)


def _ambient(shape: PluriShape) -> tuple[VariableSet, dict[Var, int]]:
    order, _ = _last_row_first_order(shape)
    if shape.b == 2:
        names = [f"z{k}" for k in range(1, len(order) + 1)]
    else:
        names = [f"x{i}_{j}" for i, j in order]
    return VariableSet(names), {v: k for k, v in enumerate(order)}


def gens_jt_diagonals(shape: PluriShape) -> MonomialIdeal:
    """G(J_t) by enumerating nonzero diagonals of t-column selections of T.

    For b = 2 the result is in z-variables; otherwise in x-variables ordered
    last row first.
    """
    T = build_T(shape)
    ring, pos = _ambient(shape)
    gens = [Monomial.from_vars(len(ring), (pos[T[r][c]] for r, c in enumerate(sel)))
            for sel in _diagonals(T)]
    return MonomialIdeal(ring, gens)


def representation_tuples(shape: PluriShape, single_bound: bool = False):
    """All (i-part, j-part, k-part) index tuples of the b = 2 parametrization.

    i-part: weakly increasing in 1..d; k-part: weakly increasing in d+1..2d;
    j-part: weakly increasing from 2d+1; total length t. The l-th j-factor
    sits in row q+l of T'_1, so it is bounded by 2d+t-q-l. With
    ``single_bound`` every j-factor only gets the l = 1 bound 2d+t-1-q,
    which admits monomials that are not diagonals (e.g. z3^2 for n = t = 2).
    """
    if shape.b != 2:
        raise ShapeError("the representation is defined for b = 2 only")
    d, t = shape.d, shape.t
    cwr = itertools.combinations_with_replacement
    for q in range(t + 1):
        for r in range(t - q + 1):
            s = t - q - r
            top = 2 * d + t - 1 - q
            for ip in cwr(range(1, d + 1), q):
                for jp in cwr(range(2 * d + 1, top + 1), r):
                    if not single_bound and any(j > top + 1 - ell for ell, j in enumerate(jp, 1)):
                        continue
                    for kp in cwr(range(d + 1, 2 * d + 1), s):
                        yield ip, jp, kp


def gens_jt_representation(shape: PluriShape, single_bound: bool = False) -> MonomialIdeal:
    """G(J_t) for b = 2 from the (i, j, k) parametrization.

    Raises if two parameter tuples give the same monomial.
    """
    ring = VariableSet(f"z{k}" for k in range(1, shape.num_z + 1))
    seen: dict[Monomial, tuple] = {}
    for ip, jp, kp in representation_tuples(shape, single_bound):
        w = Monomial.from_vars(len(ring), (z - 1 for z in ip + jp + kp))
        if w in seen:
            raise AssertionError(f"representation not unique: {seen[w]} and {(ip, jp, kp)}")
        seen[w] = (ip, jp, kp)
    ideal = MonomialIdeal(ring, seen)
    if len(ideal) != len(seen):
        raise AssertionError("parametrization produced non-minimal generators")
    return ideal


class InvariantViolation(AssertionError):
    pass


def nu_expressions(n: int, t: int, j: int) -> tuple[int, int, int]:
    """The three counts of generators with largest index 2d + j."""
    e1 = sum(binom(n - t + j + k, k) * binom(n - k - 1, n - t) for k in range(t - j))
    e2 = sum(binom(n + tau - 1, t - j - 1) * binom(n - t + j - tau, j - 1)
             for tau in range(1, n - t + 2))
    e3 = sum(binom(n, t - j - tau) * binom(n - t + j, j + tau - 1)
             for tau in range(1, n - t + 2))
    return e1, e2, e3


def nu_first_expression(n: int, t: int, j: int) -> int:
    """First expression alone; it also makes sense for 1 - d <= j <= 0."""
    return sum(binom(n - t + j + k, k) * binom(n - k - 1, n - t) for k in range(t - j))


def nu_counts(shape: PluriShape) -> list[int]:
    """nu_1, ..., nu_{2d+t-1}: generators of J_t counted by largest index."""
    if shape.b != 2:
        raise ShapeError("nu counts are defined for b = 2 only")
    n, t, d = shape.n, shape.t, shape.d
    nu = [binom(t + ell - 2, t - 1) for ell in range(1, 2 * d + 1)]
    for j in range(1, t):
        e1, e2, e3 = nu_expressions(n, t, j)
        if not e1 == e2 == e3:
            raise InvariantViolation(f"nu expressions disagree at n={n} t={t} j={j}: {(e1, e2, e3)}")
        nu.append(e1)
    return nu


def max_index_histogram(I: MonomialIdeal) -> list[int]:
    hist = Counter(g.max_index for g in I.gens)
    return [hist.get(ell, 0) for ell in range(1, len(I.ambient) + 1)]


def betti_jt_totals(shape: PluriShape) -> list[int]:
    nu = nu_counts(shape)
    top = 2 * shape.n - shape.t + 1
    return [sum(binom(ell - 1, q) * nu[ell - 1] for ell in range(q + 1, top + 1))
            for q in range(top - 1 + 1)]


def betti_jt(shape: PluriShape, via: str = "formula") -> BettiTable:
    """Betti numbers of J_t (b = 2) for q = 0..2n-t.

    ``via="formula"`` sums C(l-1, q) nu_l; ``via="ek"`` applies the
    Eliahou-Kervaire count to the enumerated generators.
    """
    if shape.b != 2:
        raise ShapeError("Betti numbers of J_t are only available for b = 2")
    if via == "formula":
        return BettiTable.from_totals(betti_jt_totals(shape), lambda q: shape.t + q)
    if via == "ek":
        return betti_ek(gens_jt_diagonals(shape))
    raise ValueError(f"unknown method {via!r}")


def compare_thm36(n: int, t: int) -> dict:
    """Compare beta_q(J_t) with beta_q(I_t(D)) for b = 2 and q = 0..2n-t.

    Equality is proved for t in {n, n-1, n-2}; other t are reported as
    conjecture rows and never asserted.
    """
    shape = PluriShape(n, 2, t)
    jt = betti_jt_totals(shape)
    tr = [betti_formula_b2(n, t, q) for q in range(2 * n - t + 1)]
    return {
        "n": n,
        "t": t,
        "betti_jt": jt,
        "betti_transversal": tr,
        "equal": jt == tr,
        "proved": t >= n - 2,
    }


def check_radical_q(shape: PluriShape) -> dict:
    """rad(J_t) against Q = (z_1..z_2d), plus whether J_t is actually Q-primary."""
    I = gens_jt_diagonals(shape)
    rad = radical(I)
    ring = I.ambient
    Q = MonomialIdeal(ring, [Monomial.from_vars(len(ring), [k]) for k in range(2 * shape.d)])
    wit = primary_witness(I)
    report = {
        "n": shape.n,
        "t": shape.t,
        "radical": [g.to_text(ring) for g in rad.gens],
        "radical_equals_Q": rad == Q,
        "primary": wit is None,
    }
    if wit is not None:
        u, v = wit
        report["primary_witness"] = {"u": u.to_text(ring), "v": v.to_text(ring),
                                     "uv": (u * v).to_text(ring)}
    return report


def stability_report(shape: PluriShape) -> dict:
    I = gens_jt_diagonals(shape)
    check = is_stable(I)
    out = {"n": shape.n, "b": shape.b, "t": shape.t, "stable": check.ok}
    if not check.ok:
        w, i = check.witness
        out["witness"] = {"generator": w.to_text(I.ambient), "index": i}
    return out
