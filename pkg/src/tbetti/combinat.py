"""Exact binomial arithmetic, bounded compositions and a few summation identities.

Everything here works on Python integers, so values are exact at any size.
Each ``identity_*`` function returns ``(lhs, rhs)`` evaluated independently
so callers can compare the two sides themselves.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence


def binom(a: int, b: int) -> int:
    """C(a, b) with the convention C(a, b) = 0 for b < 0 or b > a."""
    if a < 0:
        raise ValueError(f"binom needs a >= 0, got a={a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]
    total: int

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be >= 1: {self.parts}")
        if sum(self.parts) != self.total:
            raise ValueError(f"parts {self.parts} do not sum to {self.total}")

    def __len__(self):
        return len(self.parts)


def _bounded_parts(total: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if not caps:
        if total == 0:
            yield ()
        return
    rest = len(caps) - 1
    # every later part needs at least 1 and at most its cap
    lo = max(1, total - sum(caps[1:]))
    hi = min(caps[0], total - rest)
    for r in range(lo, hi + 1):
        for tail in _bounded_parts(total - r, caps[1:]):
            yield (r,) + tail


def compositions(total: int, s: int, caps: Sequence[int] | None = None) -> Iterator[Composition]:
    """Yield compositions of ``total`` into ``s`` parts with 1 <= r_v <= caps[v].

    Output is in lexicographic order of the parts. ``caps=None`` means no
    upper bound.
    """
    if total < 0 or s < 1:
        raise ValueError("need total >= 0 and s >= 1")
    if caps is None:
        caps = [total] * s
    if len(caps) != s:
        raise ValueError(f"expected {s} caps, got {len(caps)}")
    for parts in _bounded_parts(total, list(caps)):
        yield Composition(parts, total)


def count_compositions(total: int, caps: Sequence[int]) -> int:
    """Number of bounded compositions, by inclusion-exclusion over the caps."""
    s = len(caps)
    count = 0
    for k in range(s + 1):
        for over in itertools.combinations(range(s), k):
            # force r_v >= caps[v] + 1 on the chosen parts, r_v >= 1 elsewhere
            rem = total - s - sum(caps[v] for v in over)
            if rem >= 0:
                count += (-1) ** k * binom(rem + s - 1, s - 1)
    return count


def identity_absorb(i: int, tau: int, q: int) -> tuple[int, int]:
    """C(i,tau) C(i-tau, q-tau) versus C(q,tau) C(i,q)."""
    lhs = binom(i, tau) * binom(i - tau, q - tau) if i >= tau else 0
    rhs = binom(q, tau) * binom(i, q)
    return lhs, rhs


def identity_shift(n: int, rho: int, q: int) -> tuple[int, int]:
    """C(n+rho, q) versus sum_i C(rho, i) C(n, q-i)."""
    lhs = binom(n + rho, q)
    rhs = sum(binom(rho, i) * binom(n, q - i) for i in range(rho + 1))
    return lhs, rhs


def identity_weighted_sum(n: int, q: int) -> tuple[int, int]:
    """sum_{i=q}^{n} C(i,q) C(n,i) versus C(n,q) 2^(n-q)."""
    if not 0 <= q <= n:
        raise ValueError("need 0 <= q <= n")
    lhs = sum(binom(i, q) * binom(n, i) for i in range(q, n + 1))
    return lhs, binom(n, q) * 2 ** (n - q)


def vandermonde_sums(b_list: Sequence[int]) -> dict[int, int]:
    """{total: sum of prod C(b_i, r_i) over 0 <= r_i <= b_i with sum r = total}."""
    out: dict[int, int] = {}
    for rs in itertools.product(*(range(b + 1) for b in b_list)):
        k = sum(rs)
        out[k] = out.get(k, 0) + math.prod(binom(b, r) for b, r in zip(b_list, rs))
    return out


def identity_vandermonde(b_list: Sequence[int], total: int) -> tuple[int, int]:
    """Sum over non-negative (r_1..r_s) with sum ``total`` of prod C(b_i, r_i),
    versus C(sum b_i, total). Terms with r_i > b_i vanish and are skipped."""
    if total < 0:
        raise ValueError("total must be >= 0")
    return vandermonde_sums(b_list).get(total, 0), binom(sum(b_list), total)


def run_identity_suites(limit: int = 12, weighted_max: int = 20, vandermonde_len: int = 4,
                        vandermonde_entry: int = 4, diagonal_max: int = 8) -> list[dict]:
    """Exhaustively check every binomial identity on its box; one row per identity."""
    rows = []

    def record(name, cases):
        checked = failures = 0
        first = None
        for args, (lhs, rhs) in cases:
            checked += 1
            if lhs != rhs:
                failures += 1
                first = first or {"args": list(args), "lhs": lhs, "rhs": rhs}
        rows.append({"identity": name, "checked": checked, "failures": failures,
                     "passed": failures == 0, "first_failure": first})

    box = range(limit + 1)
    record("absorb", ((a, identity_absorb(*a)) for a in itertools.product(box, repeat=3)))
    record("shift", ((a, identity_shift(*a)) for a in itertools.product(box, repeat=3)))
    record("weighted_sum", (((n, q), identity_weighted_sum(n, q))
                            for n in range(weighted_max + 1) for q in range(n + 1)))

    def vandermonde_cases():
        for length in range(1, vandermonde_len + 1):
            for b_list in itertools.product(range(vandermonde_entry + 1), repeat=length):
                sums = vandermonde_sums(b_list)
                for total in box:
                    yield (list(b_list), total), (sums.get(total, 0), binom(sum(b_list), total))
    record("vandermonde", vandermonde_cases())
    record("diagonal_sum", (((a, m, c, n), identity_diagonal_sum(a, m, c, n))
                            for a in range(diagonal_max + 1) for m in range(a + 1)
                            for c in range(diagonal_max + 1) for n in range(c + 1)))
    return rows


def identity_diagonal_sum(a: int, m: int, c: int, n: int) -> tuple[int, int]:
    """sum_{k=m-a}^{c-n} C(a+k, m) C(c-k, n) versus C(a+c+1, m+n+1)."""
    if not (a >= m >= 0 and c >= n >= 0):
        raise ValueError("need a >= m >= 0 and c >= n >= 0")
    lhs = sum(binom(a + k, m) * binom(c - k, n) for k in range(m - a, c - n + 1))
    return lhs, binom(a + c + 1, m + n + 1)
