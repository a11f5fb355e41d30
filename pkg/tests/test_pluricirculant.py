import pytest

from tbetti.combinat import binom
from tbetti.monomial import MonomialIdeal, is_stable
from tbetti.oracle import betti_oracle
from tbetti.pluricirculant import (InvariantViolation, PluriShape, betti_jt, betti_jt_totals,
                                   build_T, check_radical_q, compare_thm36, gens_jt_diagonals,
                                   gens_jt_representation, max_index_histogram,
                                   nu_counts, nu_expressions, nu_first_expression, reindex_b2,
                                   representation_tuples, stability_report)
from tbetti.transversal import ShapeError, betti_formula_b2


def gens_text(I):
    return sorted(g.to_text(I.ambient) for g in I.gens)


def test_shape():
    s = PluriShape(3, 2, 2)
    assert s.d == 2 and s.num_z == 5
    with pytest.raises(ShapeError):
        PluriShape(2, 2, 3)


def test_build_T():
    assert build_T(PluriShape(2, 2, 2)) == [[(1, 1), (2, 1), (1, 2), (2, 2)],
                                            [None, (1, 1), None, (1, 2)]]
    assert build_T(PluriShape(3, 1, 1)) == [[(1, 1), (2, 1), (3, 1)]]


def test_build_T_is_truncated_circulant():
    n, b, t = 4, 2, 3
    T = build_T(PluriShape(n, b, t))
    for j in range(1, b + 1):
        block = [row[(j - 1) * n: j * n] for row in T]
        for r in range(t):
            for c in range(n):
                # circulant: entry (r, c) is x_{(c - r) mod n + 1, j}; zero below the diagonal
                want = None if c < r else ((c - r) % n + 1, j)
                assert block[r][c] == want


def test_reindex_examples():
    r = reindex_b2(PluriShape(2, 2, 2))
    assert r.forward == {(1, 1): 1, (1, 2): 2, (2, 1): 3, (2, 2): None}
    r = reindex_b2(PluriShape(3, 2, 2))
    assert r.forward == {(1, 1): 1, (2, 1): 2, (1, 2): 3, (2, 2): 4, (3, 1): 5, (3, 2): None}
    for x, z in r.forward.items():
        if z is not None:
            assert r.backward[z] == x
    with pytest.raises(ShapeError):
        reindex_b2(PluriShape(3, 3, 2))


def test_jt_examples():
    J = gens_jt_diagonals(PluriShape(2, 2, 2))
    assert gens_text(J) == ["z1 z2", "z1^2", "z2 z3", "z2^2"]
    assert gens_jt_representation(PluriShape(2, 2, 2)) == J
    assert all(g.degree == 3 for g in gens_jt_diagonals(PluriShape(4, 2, 3)).gens)


def test_single_block_gens():
    # b = 1, n = t = 2: diagonals of [[x11, x21], [0, x11]]
    assert gens_text(gens_jt_diagonals(PluriShape(2, 1, 2))) == ["x1_1^2"]


@pytest.mark.parametrize("n", range(1, 8))
def test_representation_matches_diagonals(n):
    for t in range(1, n + 1):
        shape = PluriShape(n, 2, t)
        assert gens_jt_representation(shape) == gens_jt_diagonals(shape)


def test_count_n3_t2():
    # twelve generators: the diagonal enumeration and the nu counts agree
    shape = PluriShape(3, 2, 2)
    assert len(gens_jt_diagonals(shape)) == 12 == sum(nu_counts(shape))


def test_single_bound_overcounts():
    shape = PluriShape(2, 2, 2)
    tuples = list(representation_tuples(shape, single_bound=True))
    assert len(tuples) > len(gens_jt_diagonals(shape))
    loose = gens_jt_representation(shape, single_bound=True)
    extra = set(gens_text(loose)) - set(gens_text(gens_jt_diagonals(shape)))
    assert extra == {"z3^2"}
    for n in range(2, 6):
        for t in range(2, n + 1):
            shape = PluriShape(n, 2, t)
            assert len(gens_jt_representation(shape, single_bound=True)) > \
                len(gens_jt_diagonals(shape))


def test_nu_examples():
    assert nu_counts(PluriShape(2, 2, 2)) == [1, 2, 1]
    for n in range(1, 6):
        for t in range(1, n + 1):
            assert nu_counts(PluriShape(n, 2, t))[0] == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_nu_matches_histogram(n):
    for t in range(1, n + 1):
        shape = PluriShape(n, 2, t)
        J = gens_jt_diagonals(shape)
        nu = nu_counts(shape)
        assert nu == max_index_histogram(J)
        assert sum(nu) == len(J)


def test_nu_expressions_agree_up_to_12():
    for n in range(1, 13):
        for t in range(1, n + 1):
            for j in range(1, t):
                e1, e2, e3 = nu_expressions(n, t, j)
                assert e1 == e2 == e3


def test_first_expression_reduces_to_part_a():
    for n in range(1, 13):
        for t in range(1, n + 1):
            d = n - t + 1
            for ell in range(d + 1, 2 * d + 1):
                assert nu_first_expression(n, t, ell - 2 * d) == binom(t + ell - 2, t - 1)


def test_nu_rejects_b3():
    with pytest.raises(ShapeError):
        nu_counts(PluriShape(3, 3, 2))


def test_betti_jt_examples():
    assert betti_jt(PluriShape(2, 2, 2)).totals() == [4, 4, 1]
    assert betti_jt(PluriShape(3, 2, 3)).totals() == [8, 12, 6, 1]
    assert betti_jt(PluriShape(3, 2, 3), via="ek") == betti_jt(PluriShape(3, 2, 3))
    for n in range(1, 7):
        for t in range(1, n + 1):
            shape = PluriShape(n, 2, t)
            tot = betti_jt_totals(shape)
            assert len(tot) == 2 * n - t + 1
            assert tot[-1] == nu_counts(shape)[-1] >= 1
    with pytest.raises(ValueError):
        betti_jt(PluriShape(2, 2, 2), via="magic")


def test_betti_jt_matches_oracle_small():
    for n, t in [(2, 2), (2, 1), (3, 3), (3, 2)]:
        shape = PluriShape(n, 2, t)
        assert betti_oracle(gens_jt_diagonals(shape)) == betti_jt(shape)


@pytest.mark.parametrize("n, t", [(5, 4), (6, 4), (2, 2), (7, 5)])
def test_compare_proved(n, t):
    row = compare_thm36(n, t)
    assert row["equal"] and row["proved"]
    assert row["betti_transversal"] == [betti_formula_b2(n, t, q) for q in range(2 * n - t + 1)]


def test_compare_conjecture_rows_are_flagged():
    row = compare_thm36(6, 2)
    assert row["proved"] is False


def test_radical():
    r = check_radical_q(PluriShape(2, 2, 2))
    assert r["radical"] == ["z1", "z2"] and r["radical_equals_Q"]
    r = check_radical_q(PluriShape(4, 2, 3))
    assert r["radical"] == ["z1", "z2", "z3", "z4"] and r["radical_equals_Q"]
    assert not r["primary"]
    w = r["primary_witness"]
    J = gens_jt_diagonals(PluriShape(4, 2, 3))
    ring = J.ambient
    uv = [ring.index(v) for v in w["uv"].split()]
    from tbetti.monomial import Monomial
    assert Monomial.from_vars(len(ring), uv) in J


def test_stability_report():
    assert stability_report(PluriShape(4, 2, 3))["stable"]
    rep = stability_report(PluriShape(3, 3, 3))
    assert not rep["stable"] and "witness" in rep


def test_invariant_violation_is_assertion():
    assert issubclass(InvariantViolation, AssertionError)
