"""Monomials, monomial ideals and the structural predicates used on them.

Variable order matters: ``max(w)`` and the stability/Borel tests use the
position of a variable in its :class:`VariableSet` (1-based).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .combinat import binom


class AmbientMismatchError(ValueError):
    pass


class NotStableError(ValueError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"ideal is not stable; witness {witness}")


class VariableSet:
    """Ordered, duplicate-free list of variable names."""

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        self._index = {name: k for k, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        return self._index[name]

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __eq__(self, other):
        return isinstance(other, VariableSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VariableSet({list(self.names)!r})"


@dataclass(frozen=True, order=True)
class Monomial:
    exps: tuple[int, ...]
    degree: int = field(init=False, compare=False)

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise ValueError(f"negative exponent in {self.exps}")
        object.__setattr__(self, "degree", sum(self.exps))

    @classmethod
    def from_vars(cls, nvars: int, indices: Iterable[int]) -> "Monomial":
        """Product of the variables at the given 0-based positions (with repeats)."""
        e = [0] * nvars
        for i in indices:
            e[i] += 1
        return cls(tuple(e))

    def __len__(self):
        return len(self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / other; ``other`` must divide ``self``."""
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def squarefree_part(self) -> "Monomial":
        return Monomial(tuple(min(a, 1) for a in self.exps))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.exps) if a)

    @property
    def max_index(self) -> int:
        """1-based index of the largest variable dividing the monomial (0 for 1)."""
        for i in range(len(self.exps) - 1, -1, -1):
            if self.exps[i]:
                return i + 1
        return 0

    def shift(self, i: int, j: int) -> "Monomial":
        """Replace one factor of variable j by variable i (0-based)."""
        e = list(self.exps)
        e[j] -= 1
        e[i] += 1
        return Monomial(tuple(e))

    def to_text(self, ambient: VariableSet) -> str:
        if not self.degree:
            return "1"
        toks = []
        for name, a in zip(ambient.names, self.exps):
            if a == 1:
                toks.append(name)
            elif a > 1:
                toks.append(f"{name}^{a}")
        return " ".join(toks)


@dataclass
class Check:
    """Outcome of a predicate; ``witness`` explains a failure."""

    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


class MonomialIdeal:
    """Monomial ideal stored by its minimal generators.

    Generators are kept sorted (descending exponent vectors, i.e. lex order
    with the first variable largest), so iteration order is deterministic.
    """

    def __init__(self, ambient: VariableSet, gens: Iterable[Monomial]):
        self.ambient = ambient
        gens = list(gens)
        for g in gens:
            if len(g) != len(ambient):
                raise AmbientMismatchError(
                    f"monomial has {len(g)} exponents, ring has {len(ambient)} variables")
        self.gens = tuple(sorted(_minimal(gens), reverse=True))
        self._genset = frozenset(self.gens)
        self._min_degree = min((g.degree for g in self.gens), default=0)

    def __len__(self):
        return len(self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and self.ambient == other.ambient
                and set(self.gens) == set(other.gens))

    def __hash__(self):
        return hash((self.ambient, frozenset(self.gens)))

    def __repr__(self):
        body = ", ".join(g.to_text(self.ambient) for g in self.gens)
        return f"MonomialIdeal({body})"

    def contains(self, w: Monomial) -> bool:
        if len(w) != len(self.ambient):
            raise AmbientMismatchError("monomial is not in this ring")
        if w.degree <= self._min_degree:
            return w in self._genset
        return any(g.divides(w) for g in self.gens)

    __contains__ = contains

    def is_zero(self) -> bool:
        return not self.gens

    def lcm(self) -> Monomial:
        out = Monomial((0,) * len(self.ambient))
        for g in self.gens:
            out = out.lcm(g)
        return out

    def is_equigenerated(self) -> bool:
        return len({g.degree for g in self.gens}) <= 1

    def relabel(self, ambient: VariableSet) -> "MonomialIdeal":
        """Same exponent vectors over a different variable set of equal size."""
        if len(ambient) != len(self.ambient):
            raise AmbientMismatchError("relabel needs the same number of variables")
        return MonomialIdeal(ambient, self.gens)

    def to_text(self) -> str:
        lines = ["vars: " + " ".join(self.ambient.names)]
        lines += [g.to_text(self.ambient) for g in self.gens]
        return "\n".join(lines) + "\n"


def _minimal(gens: Sequence[Monomial]) -> list[Monomial]:
    by_degree: dict[int, set[Monomial]] = {}
    for g in gens:
        by_degree.setdefault(g.degree, set()).add(g)
    kept: list[Monomial] = []
    for deg in sorted(by_degree):
        # distinct monomials of one degree never divide each other
        kept.extend([g for g in by_degree[deg] if not any(h.divides(g) for h in kept)])
    return kept


def minimalize(gens: Iterable[Monomial], ambient: VariableSet | None = None) -> MonomialIdeal:
    """Ideal generated by ``gens``, keeping only divisibility-minimal elements."""
    gens = list(gens)
    if ambient is None:
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list")
        ambient = VariableSet(f"x{i + 1}" for i in range(len(gens[0])))
    if len({len(g) for g in gens} | {len(ambient)}) > 1:
        raise AmbientMismatchError("generators live in rings of different sizes")
    return MonomialIdeal(ambient, gens)


_TOKEN = re.compile(r"^(?P<name>[^\s^]+)(\^(?P<exp>\d+))?$")


def parse_ideal(text: str) -> MonomialIdeal:
    """Read the ideal text format: a ``vars:`` header, then one monomial per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("vars:"):
        raise ValueError("ideal file must start with a 'vars:' header line")
    ambient = VariableSet(lines[0][len("vars:"):].split())
    gens = []
    for ln in lines[1:]:
        e = [0] * len(ambient)
        if ln != "1":
            for tok in ln.split():
                m = _TOKEN.match(tok)
                if not m or m.group("name") not in ambient._index:
                    raise ValueError(f"bad monomial token {tok!r}")
                e[ambient.index(m.group("name"))] += int(m.group("exp") or 1)
        gens.append(Monomial(tuple(e)))
    return MonomialIdeal(ambient, gens)


def is_stable(I: MonomialIdeal) -> Check:
    """Stability: z_i * w / z_max(w) in I for all w in G(I) and i < max(w)."""
    if I.is_zero():
        raise ValueError("stability is defined for nonzero ideals")
    for w in I.gens:
        top = w.max_index - 1
        for i in range(top):
            if not I.contains(w.shift(i, top)):
                return Check(False, (w, i + 1))
    return Check(True)


def is_borel(I: MonomialIdeal) -> Check:
    """Borel-fixedness: z_i * w / z_j in I whenever z_j | w and i < j."""
    if I.is_zero():
        raise ValueError("Borel-fixedness is defined for nonzero ideals")
    for w in I.gens:
        for j in w.support:
            for i in range(j):
                if not I.contains(w.shift(i, j)):
                    return Check(False, (w, i + 1, j + 1))
    return Check(True)


def colon_generators(previous: Sequence[Monomial], g: Monomial) -> list[Monomial]:
    """Minimal generators of (previous) : g."""
    return _minimal([h.lcm(g).quotient(g) for h in previous])


def has_linear_quotients(I: MonomialIdeal, order: Sequence[Monomial] | None = None) -> bool:
    """Whether every colon (g_1..g_{k-1}) : g_k is generated by variables.

    The default order is the ideal's own (lex, first variable largest).
    """
    order = list(I.gens if order is None else order)
    if sorted(order) != sorted(I.gens):
        raise ValueError("order must be a permutation of G(I)")
    for k in range(1, len(order)):
        if any(c.degree != 1 for c in colon_generators(order[:k], order[k])):
            return False
    return True


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.ambient, (g.squarefree_part() for g in I.gens))


def primary_witness(I: MonomialIdeal):
    """Return (u, v) with u*v in I, u not in I, v not in rad(I), or None if I is primary.

    A monomial ideal is primary iff every variable dividing a minimal
    generator has a pure power in the ideal.
    """
    pure = {g.support[0] for g in I.gens if len(g.support) == 1}
    for g in I.gens:
        for k in g.support:
            if k not in pure:
                v = Monomial(tuple(a if i == k else 0 for i, a in enumerate(g.exps)))
                return g.quotient(v), v
    return None


@dataclass
class BettiTable:
    """Graded Betti numbers beta_{q,j} (j = internal degree), optionally multigraded."""

    graded: dict[tuple[int, int], int] = field(default_factory=dict)
    multigraded: dict[tuple[int, tuple[int, ...]], int] | None = None

    @classmethod
    def from_totals(cls, totals: Sequence[int], degree_of_q) -> "BettiTable":
        """Linear table: put beta_q in internal degree ``degree_of_q(q)``."""
        return cls({(q, degree_of_q(q)): b for q, b in enumerate(totals) if b})

    @property
    def total(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (q, _), b in sorted(self.graded.items()):
            if b:
                out[q] = out.get(q, 0) + b
        return out

    @property
    def max_index(self) -> int:
        qs = [q for q, b in self.total.items() if b]
        return max(qs) if qs else -1

    def totals(self) -> list[int]:
        """beta_0, ..., beta_max as a dense list."""
        tot = self.total
        return [tot.get(q, 0) for q in range(self.max_index + 1)]

    def is_linear(self, t: int) -> bool:
        return all(j == t + q for (q, j), b in self.graded.items() if b)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        a = {k: v for k, v in self.graded.items() if v}
        b = {k: v for k, v in other.graded.items() if v}
        return a == b

    def to_json(self) -> dict:
        out = {
            "total": self.totals(),
            "graded": [{"q": q, "j": j, "beta": b}
                       for (q, j), b in sorted(self.graded.items()) if b],
        }
        if self.multigraded is not None:
            out["multigraded"] = [{"q": q, "alpha": list(a), "dim": b}
                                  for (q, a), b in sorted(self.multigraded.items()) if b]
        return out


def betti_ek(I: MonomialIdeal) -> BettiTable:
    """Betti numbers of a stable ideal: beta_q = sum_w C(max(w)-1, q).

    Generator w contributes to internal degree deg(w) + q.
    """
    check = is_stable(I)
    if not check:
        raise NotStableError(check.witness)
    graded: dict[tuple[int, int], int] = {}
    for w in I.gens:
        for q in range(w.max_index):
            key = (q, w.degree + q)
            graded[key] = graded.get(key, 0) + binom(w.max_index - 1, q)
    return BettiTable(graded)
