"""The explicit linear complex L resolving a transversal ideal.

A basis element of the big complex C is a wedge of chosen columns (at least
one per selected row) tensored with a wedge of "markers", which are row
positions. L = C/K, and K is spanned by alternating sums of marker sets. The
representatives kept for L are the marker sets that contain the last
selected row, so a label stores only the free markers in front of it.

Two sign conventions are available for the diagonal differentiation:

* ``"corrected"`` (default): the term that deletes the marked row at 0-based
  position v, with 0-based marker index w, carries (-1)^(c_v + w + v).
  Here c_v is the number of chosen columns in rows before v.
* ``"literal"``: (-1)^(l + 1), where l counts the singleton-column markers
  up to and including the current one. It agrees with ``"corrected"`` when
  every row has one column, and otherwise can break d o d = 0.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from ..combinat import compositions
from ..monomial import Monomial
from ..transversal import BlockShape, ShapeError

SIGN_CONVENTIONS = ("corrected", "literal")


class InternalConsistencyError(RuntimeError):
    """A boundary term left the enumerated basis, or K was not closed under d."""


@dataclass(frozen=True)
class BasisLabel:
    rows: tuple[int, ...]
    columns: tuple[tuple[int, ...], ...]
    markers: tuple[int, ...] = ()

    def __post_init__(self):
        s = len(self.rows)
        if len(self.columns) != s:
            raise ValueError("one column set per row")
        if any(a >= b for a, b in zip(self.rows, self.rows[1:])):
            raise ValueError(f"rows must increase: {self.rows}")
        for cols in self.columns:
            if not cols or any(a >= b for a, b in zip(cols, cols[1:])):
                raise ValueError(f"column sets must be nonempty and increasing: {self.columns}")
        if any(not 1 <= k < s for k in self.markers) or \
                any(a >= b for a, b in zip(self.markers, self.markers[1:])):
            raise ValueError(f"free markers must increase inside 1..{s - 1}: {self.markers}")

    @property
    def s(self) -> int:
        return len(self.rows)

    @property
    def degree(self) -> int:
        """Number of chosen columns, t + q."""
        return sum(len(c) for c in self.columns)

    @property
    def all_markers(self) -> tuple[int, ...]:
        return self.markers + (self.s,)

    def sort_key(self):
        return (self.s, self.rows, self.columns, self.markers)

    def shift(self, shape: BlockShape) -> tuple[int, ...]:
        """0-based indices of the variables in the multidegree shift."""
        return tuple(shape.var_index(i, j) for i, cols in zip(self.rows, self.columns)
                     for j in cols)

    def to_text(self) -> str:
        cols = "|".join(",".join(map(str, c)) for c in self.columns)
        mk = ",".join(map(str, self.markers)) or "-"
        return f"rows={','.join(map(str, self.rows))} cols={cols} markers={mk}"

    def to_json(self) -> dict:
        return {"rows": list(self.rows), "columns": [list(c) for c in self.columns],
                "markers": list(self.markers)}


class Entry(NamedTuple):
    """Nonzero matrix entry ``sign * variable`` of d_q: L_q -> L_{q-1}."""
    row: int       # index of the target label in L_{q-1}
    col: int       # index of the source label in L_q
    sign: int
    variable: int  # 0-based variable index


def enumerate_basis(shape: BlockShape, q: int) -> list[BasisLabel]:
    if not 0 <= q <= shape.max_q:
        raise ShapeError(f"q must lie in 0..{shape.max_q}, got {q}")
    t, n = shape.t, shape.n
    out = []
    for s in range(t, min(n, t + q) + 1):
        for rows in itertools.combinations(range(1, n + 1), s):
            caps = [shape.blocks[i - 1] for i in rows]
            for comp in compositions(t + q, s, caps):
                choices = [list(itertools.combinations(range(1, b + 1), r))
                           for b, r in zip(caps, comp.parts)]
                for cols in itertools.product(*choices):
                    for mk in itertools.combinations(range(1, s), s - t):
                        out.append(BasisLabel(rows, cols, mk))
    out.sort(key=BasisLabel.sort_key)
    return out


# An element of C is (rows, columns, full marker tuple), with markers as
# 1-based row positions; it is a representative iff its last marker is s.

def _c_boundary(rows, cols, mk, signs: str) -> Iterator[tuple[int, tuple[int, int], tuple, str]]:
    before = 0
    col_offset = []
    for v, cv in enumerate(cols):
        col_offset.append(before)
        r = len(cv)
        if r >= 2:
            for h in range(r):
                new_cols = cols[:v] + (cv[:h] + cv[h + 1:],) + cols[v + 1:]
                yield (-1) ** (before + h), (rows[v], cv[h]), (rows, new_cols, mk), "delta"
        before += r
    if len(mk) < 2:
        return
    ell = 0
    for w, k in enumerate(mk):
        v = k - 1
        if len(cols[v]) != 1:
            continue
        ell += 1
        if signs == "literal":
            sign = (-1) ** (ell + 1)
        else:
            sign = (-1) ** (col_offset[v] + w + v)
        new_mk = tuple(x if x < k else x - 1 for x in mk if x != k)
        yield (sign, (rows[v], cols[v][0]),
               (rows[:v] + rows[v + 1:], cols[:v] + cols[v + 1:], new_mk), "lambda")


def _normal_form(rows, cols, mk) -> list[tuple[int, BasisLabel]]:
    """Rewrite a C element modulo K as a signed sum of representatives."""
    s = len(rows)
    if mk[-1] == s:
        return [(1, BasisLabel(rows, cols, mk[:-1]))]
    full = mk + (s,)
    P = len(full)
    out = []
    for p in range(1, P):
        kept = full[:p - 1] + full[p:]
        out.append((-((-1) ** P) * (-1) ** p, BasisLabel(rows, cols, kept[:-1])))
    return out


def boundary_terms(shape: BlockShape, label: BasisLabel, signs: str = "corrected") -> dict[BasisLabel, tuple[int, int]]:
    """d(label) in L as {target: (coefficient, variable index)}."""
    if signs not in SIGN_CONVENTIONS:
        raise ValueError(f"unknown sign convention {signs!r}")
    acc: dict[BasisLabel, list] = {}
    for sign, (i, j), (r, c, mk), kind in _c_boundary(label.rows, label.columns,
                                                      label.all_markers, signs):
        if mk[-1] != len(r) and kind != "lambda":
            raise InternalConsistencyError(
                f"row differentiation left the representatives at {label.to_text()}")
        var = shape.var_index(i, j)
        for coef, target in _normal_form(r, c, mk):
            slot = acc.setdefault(target, [0, var])
            if slot[1] != var:
                raise InternalConsistencyError(f"two variables on one entry at {label.to_text()}")
            slot[0] += sign * coef
    return {k: (v[0], v[1]) for k, v in acc.items() if v[0]}


def augment(shape: BlockShape, label: BasisLabel) -> Monomial:
    """Determinant map on L_0: the product of the t selected variables."""
    if label.degree != shape.t:
        raise ValueError("augmentation is defined on L_0 only")
    return Monomial.from_vars(shape.m, label.shift(shape))


@dataclass(frozen=True)
class FreeComplex:
    shape: BlockShape
    signs: str
    modules: tuple[tuple[BasisLabel, ...], ...]
    boundaries: tuple[tuple[Entry, ...], ...]  # index q holds d_q; d_0 is empty
    augmentation: tuple[Monomial, ...]
    _index: tuple[dict, ...] = field(default=(), repr=False, compare=False)

    def ranks(self) -> list[int]:
        return [len(m) for m in self.modules]

    def index(self, q: int) -> dict[BasisLabel, int]:
        return self._index[q]

    def columns(self, q: int) -> list[dict[int, int]]:
        """d_q as sparse columns {target index: sign}, one per source label."""
        cols = [dict() for _ in self.modules[q]]
        for e in self.boundaries[q]:
            cols[e.col][e.row] = e.sign
        return cols

    def boundary_json(self, q: int) -> list[dict]:
        names = self.shape.variables().names
        return [{"row": e.row, "col": e.col, "sign": e.sign, "variable": names[e.variable]}
                for e in self.boundaries[q]]

    def to_json(self) -> dict:
        return {
            "blocks": list(self.shape.blocks), "t": self.shape.t, "signs": self.signs,
            "ranks": self.ranks(),
            "modules": [[lab.to_json() for lab in mod] for mod in self.modules],
            "boundaries": [self.boundary_json(q) for q in range(1, len(self.modules))],
            "augmentation": [g.to_text(self.shape.variables()) for g in self.augmentation],
        }


def boundary(shape: BlockShape, q: int, signs: str = "corrected",
             source: list[BasisLabel] | None = None,
             target: list[BasisLabel] | None = None) -> list[Entry]:
    """Sparse matrix of d_q: L_q -> L_{q-1} (q >= 1), sorted by (col, row)."""
    if q < 1:
        raise ShapeError("d_q is defined for q >= 1; use augment for L_0")
    source = enumerate_basis(shape, q) if source is None else source
    target = enumerate_basis(shape, q - 1) if target is None else target
    tindex = {lab: k for k, lab in enumerate(target)}
    entries = []
    for col, lab in enumerate(source):
        for tgt, (coef, var) in boundary_terms(shape, lab, signs).items():
            row = tindex.get(tgt)
            if row is None:
                raise InternalConsistencyError(
                    f"d_{q}({lab.to_text()}) hits {tgt.to_text()}, which is not in the basis")
            entries.append(Entry(row, col, coef, var))
    entries.sort(key=lambda e: (e.col, e.row))
    return entries


def build_complex(shape: BlockShape, signs: str = "corrected") -> FreeComplex:
    top = shape.max_q
    modules = [enumerate_basis(shape, q) for q in range(top + 1)]
    bnds: list[tuple[Entry, ...]] = [()]
    for q in range(1, top + 1):
        bnds.append(tuple(boundary(shape, q, signs, modules[q], modules[q - 1])))
    aug = tuple(augment(shape, lab) for lab in modules[0])
    index = tuple({lab: k for k, lab in enumerate(mod)} for mod in modules)
    return FreeComplex(shape, signs, tuple(tuple(m) for m in modules), tuple(bnds), aug, index)
