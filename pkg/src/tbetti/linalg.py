"""Exact rank of sparse matrices over Q or a prime field.

Rows are dicts ``{column: value}`` with integer values. Over Q the
elimination is fraction-free (integer row combinations, divided by the
row content), so no rationals are ever formed.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping

import numpy as np

DEFAULT_PRIME = 32003


def parse_field(spec) -> int | None:
    """``None``/``"Q"`` -> None (rationals); ``p``/``"GF(p)"`` -> p."""
    if spec is None:
        return None
    if isinstance(spec, int):
        p = spec
    else:
        s = str(spec).strip()
        if s.upper() in ("Q", "QQ", "RATIONALS"):
            return None
        if s.upper().startswith("GF(") and s.endswith(")"):
            s = s[3:-1]
        p = int(s)
    if p <= 2 or not _is_prime(p):
        raise ValueError(f"field characteristic must be an odd prime, got {p}")
    return p


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, math.isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


def field_name(prime: int | None) -> str:
    return "Q" if prime is None else f"GF({prime})"


def sparse_rank(rows: Iterable[Mapping[int, int]], prime: int | None = None) -> int:
    """Rank of the matrix whose rows are given as sparse dicts."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = _clean(row, prime)
        while r:
            lead = min(r)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _normalize(r, prime)
                break
            r = _eliminate(r, piv, lead, prime)
    return len(pivots)


def _clean(row: Mapping[int, int], prime: int | None) -> dict[int, int]:
    if prime is None:
        return {c: v for c, v in row.items() if v}
    return {c: v % prime for c, v in row.items() if v % prime}


def _normalize(r: dict[int, int], prime: int | None) -> dict[int, int]:
    lead = min(r)
    if prime is None:
        g = math.gcd(*r.values())
        if r[lead] < 0:
            g = -g
        return {c: v // g for c, v in r.items()}
    inv = pow(r[lead], -1, prime)
    return {c: v * inv % prime for c, v in r.items()}


def _eliminate(r: dict[int, int], piv: dict[int, int], lead: int, prime: int | None) -> dict[int, int]:
    a, b = piv[lead], r[lead]
    out: dict[int, int] = {}
    if prime is None:
        # a*r - b*piv, then strip the content
        for c, v in r.items():
            out[c] = a * v
        for c, v in piv.items():
            out[c] = out.get(c, 0) - b * v
        out = {c: v for c, v in out.items() if v}
        if out:
            g = math.gcd(*out.values())
            if g > 1:
                out = {c: v // g for c, v in out.items()}
        return out
    # pivot rows are monic mod p
    out = dict(r)
    for c, v in piv.items():
        out[c] = (out.get(c, 0) - b * v) % prime
    return {c: v for c, v in out.items() if v}


def dense_rank_mod_p(mat: np.ndarray, prime: int = DEFAULT_PRIME) -> int:
    """Rank of an integer matrix modulo ``prime`` via vectorized elimination."""
    if prime >= 3037000499:
        raise ValueError("prime too large for int64 elimination")
    a = np.array(mat, dtype=np.int64) % prime
    nrows, ncols = a.shape
    rank = 0
    for c in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        p = rank + nz[0]
        if p != rank:
            a[[rank, p]] = a[[p, rank]]
        inv = pow(int(a[rank, c]), -1, prime)
        a[rank] = a[rank] * inv % prime
        below = a[rank + 1:, c].copy()
        mask = below != 0
        if mask.any():
            a[rank + 1:][mask] = (a[rank + 1:][mask] - np.outer(below[mask], a[rank])) % prime
        rank += 1
    return rank
