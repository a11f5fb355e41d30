"""Brute-force multigraded Betti numbers via upper Koszul simplicial complexes.

For a multidegree alpha, beta_{q,alpha}(I) is the dimension of the reduced
homology H~_{q-1} of

    K^alpha(I) = { tau squarefree, tau <= alpha : x^(alpha - tau) in I }.

x^(alpha - tau) is in I iff some generator g | x^alpha has g_i <= alpha_i - 1
on every i in tau, so K^alpha is generated by the facets
F_g = {i : g_i < alpha_i}. Homology depends only on those facets and is
cached on them.
"""

from __future__ import annotations

import functools
import itertools
import math
import operator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .linalg import sparse_rank
from .monomial import BettiTable, Monomial, MonomialIdeal

DEFAULT_BUDGET = 10 ** 6


class BudgetExceeded(RuntimeError):
    def __init__(self, strands: int, budget: int):
        self.strands = strands
        self.budget = budget
        super().__init__(f"oracle needs {strands} strands, budget is {budget}")


@dataclass(frozen=True)
class SimplicialComplexDesc:
    vertices: tuple[int, ...]
    faces: frozenset[frozenset[int]]

    def __post_init__(self):
        for f in self.faces:
            for v in f:
                if f - {v} not in self.faces:
                    raise ValueError(f"not downward closed at {sorted(f)}")

    def is_void(self) -> bool:
        return not self.faces


def _facets(I: MonomialIdeal, alpha: tuple[int, ...]) -> tuple[tuple[int, ...], frozenset[int]]:
    supp = tuple(i for i, a in enumerate(alpha) if a)
    pos = {i: k for k, i in enumerate(supp)}
    facets = set()
    for g in I.gens:
        if all(gi <= ai for gi, ai in zip(g.exps, alpha)):
            mask = 0
            for i in supp:
                if g.exps[i] < alpha[i]:
                    mask |= 1 << pos[i]
            facets.add(mask)
    maximal = frozenset(f for f in facets if not any(f != h and f & h == f for h in facets))
    return supp, maximal


def _down_closure(facets: Iterable[int]) -> set[int]:
    seen: set[int] = set()
    stack = list(facets)
    while stack:
        f = stack.pop()
        if f in seen:
            continue
        seen.add(f)
        b = f
        while b:
            low = b & -b
            stack.append(f ^ low)
            b ^= low
    return seen


def strand_complex(I: MonomialIdeal, alpha: Iterable[int]) -> SimplicialComplexDesc:
    """The upper Koszul complex of I at ``alpha``, on variable indices (0-based)."""
    alpha = tuple(alpha)
    if len(alpha) != len(I.ambient) or any(a < 0 for a in alpha):
        raise ValueError("alpha must be a non-negative vector over the ring's variables")
    supp, facets = _facets(I, alpha)
    faces = frozenset(frozenset(supp[k] for k in range(len(supp)) if mask >> k & 1)
                      for mask in _down_closure(facets))
    return SimplicialComplexDesc(supp, faces)


@functools.lru_cache(maxsize=None)
def _reduced_homology(facets: frozenset[int], prime: int | None) -> tuple[tuple[int, int], ...]:
    """Nonzero (dimension, rank) pairs of reduced homology of the complex."""
    if not facets:
        return ()
    if len(facets) == 1:
        (f,) = facets
        return ((-1, 1),) if f == 0 else ()
    if functools.reduce(operator.and_, facets):
        # every facet contains a common vertex: the complex is a cone
        return ()
    faces = _down_closure(facets)
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(bin(f).count("1"), []).append(f)
    index = {}
    for size, fs in by_size.items():
        fs.sort()
        for k, f in enumerate(fs):
            index[f] = k
    top = max(by_size)
    ranks = {}
    for size in range(1, top + 1):
        rows = []
        for f in by_size.get(size, []):
            row = {}
            b, sign = f, 1
            # boundary of [v_0 < ... < v_k] is sum (-1)^j [.. v_j omitted ..]
            while b:
                low = b & -b
                row[index[f ^ low]] = sign
                sign = -sign
                b ^= low
            rows.append(row)
        ranks[size] = sparse_rank(rows, prime)
    out = []
    for size in range(0, top + 1):
        h = len(by_size.get(size, [])) - ranks.get(size, 0) - ranks.get(size + 1, 0)
        if h:
            out.append((size - 1, h))
    return tuple(out)


def reduced_homology(cx: SimplicialComplexDesc, prime: int | None = None) -> dict[int, int]:
    """Reduced Betti numbers of a simplicial complex, keyed by dimension (-1 included)."""
    verts = sorted({v for f in cx.faces for v in f})
    pos = {v: k for k, v in enumerate(verts)}
    masks = {sum(1 << pos[v] for v in f) for f in cx.faces}
    maximal = frozenset(f for f in masks if not any(f != h and f & h == f for h in masks))
    return dict(_reduced_homology(maximal, prime))


def strand_count(I: MonomialIdeal) -> int:
    return math.prod(a + 1 for a in I.lcm().exps)


def _strand_betti(args):
    I, alphas, prime = args
    out = []
    for alpha in alphas:
        _, facets = _facets(I, alpha)
        for dim, h in _reduced_homology(facets, prime):
            out.append((dim + 1, alpha, h))
    return out


def betti_oracle(I: MonomialIdeal, prime: int | None = None, budget: int = DEFAULT_BUDGET,
                 jobs: int = 1) -> BettiTable:
    """Multigraded, graded and total Betti numbers of I over Q (``prime=None``) or GF(p)."""
    if I.is_zero():
        return BettiTable({}, {})
    count = strand_count(I)
    if count > budget:
        raise BudgetExceeded(count, budget)
    lcm = I.lcm().exps
    alphas = [a for a in itertools.product(*(range(e + 1) for e in lcm))
              if I.contains(Monomial(a))]
    if jobs > 1 and len(alphas) > 1:
        chunk = -(-len(alphas) // (4 * jobs))
        work = [(I, alphas[k:k + chunk], prime) for k in range(0, len(alphas), chunk)]
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_strand_betti, work))
    else:
        parts = [_strand_betti((I, alphas, prime))]
    multi: dict[tuple[int, tuple[int, ...]], int] = {}
    for part in parts:
        for q, alpha, h in part:
            multi[(q, alpha)] = h
    graded: dict[tuple[int, int], int] = {}
    for (q, alpha), h in multi.items():
        key = (q, sum(alpha))
        graded[key] = graded.get(key, 0) + h
    return BettiTable(graded, dict(sorted(multi.items())))
