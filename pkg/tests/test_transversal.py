import itertools

import pytest

from tbetti.combinat import binom
from tbetti.transversal import (BlockShape, ShapeError, betti_formula_b2, betti_formula_general,
                                betti_formula_unconstrained, betti_formula_uniform,
                                betti_table_transversal, gens_transversal)


def gens_text(I):
    return sorted(g.to_text(I.ambient) for g in I.gens)


def test_shape_validation():
    with pytest.raises(ShapeError):
        BlockShape((2,), 2)
    with pytest.raises(ShapeError):
        BlockShape((2, 0), 1)
    with pytest.raises(ShapeError):
        BlockShape((), 1)
    s = BlockShape((2, 3), 2)
    assert s.n == 2 and s.m == 5 and s.max_q == 3
    assert s.var_index(2, 1) == 2
    assert list(s.variables()) == ["y1_1", "y1_2", "y2_1", "y2_2", "y2_3"]


def test_gens_examples():
    assert gens_text(gens_transversal(BlockShape((1, 1, 1), 2))) == \
        ["y1_1 y2_1", "y1_1 y3_1", "y2_1 y3_1"]
    I = gens_transversal(BlockShape((2, 2), 2))
    assert gens_text(I) == ["y1_1 y2_1", "y1_1 y2_2", "y1_2 y2_1", "y1_2 y2_2"]
    assert len(gens_transversal(BlockShape((2, 2), 1))) == 4


def test_gens_are_nonzero_minors():
    # brute force over t-subsets of columns of the block matrix D
    blocks, t = (2, 1, 3), 2
    shape = BlockShape(blocks, t)
    cols = [(i, j) for i, b in enumerate(blocks, 1) for j in range(1, b + 1)]
    want = set()
    for sel in itertools.combinations(cols, t):
        rows = [i for i, _ in sel]
        if len(set(rows)) == t:  # otherwise two columns share their only nonzero row
            want.add(tuple(sorted(shape.var_index(i, j) for i, j in sel)))
    got = {tuple(sorted(g.support)) for g in gens_transversal(shape).gens}
    assert got == want


@pytest.mark.parametrize("q, want", [(0, 4), (1, 4), (2, 1), (3, 0)])
def test_general_examples(q, want):
    assert betti_formula_general(BlockShape((2, 2), 2), q) == want


def test_uniform_examples():
    assert betti_formula_uniform(2, 2, 2, 1) == 4
    assert betti_formula_uniform(3, 1, 2, 0) == 3
    assert betti_formula_uniform(3, 2, 3, 1) == 12


def test_b2_examples():
    assert [betti_formula_b2(2, 2, q) for q in range(3)] == [4, 4, 1]
    assert betti_formula_b2(4, 4, 1) == 32
    # top degree: s = 3, r = (2, 2, 2), and the marker factor C(2, 1) = 2
    assert betti_formula_b2(3, 2, 4) == 2


@pytest.mark.parametrize("n", range(1, 7))
def test_formulas_agree(n):
    for t in range(1, n + 1):
        for b in (1, 2, 3):
            shape = BlockShape.uniform(n, b, t)
            for q in range(shape.max_q + 2):
                g = betti_formula_general(shape, q)
                assert g == betti_formula_uniform(n, b, t, q)
                if b == 2:
                    assert g == betti_formula_b2(n, t, q)


@pytest.mark.parametrize("n", range(1, 8))
def test_t_equals_n_closed_form(n):
    for q in range(n + 1):
        assert betti_formula_b2(n, n, q) == binom(n, q) * 2 ** (n - q)


def test_square_free_case():
    # b = 1: the ideal of all square-free degree-t monomials
    for n in range(1, 8):
        for t in range(1, n + 1):
            for q in range(n - t + 1):
                want = binom(n, t + q) * binom(t + q - 1, q)
                assert betti_formula_uniform(n, 1, t, q) == want


def test_top_degree_and_vanishing():
    shape = BlockShape((2, 3, 1), 2)
    assert betti_formula_general(shape, shape.max_q) > 0
    assert betti_formula_general(shape, shape.max_q + 1) == 0
    with pytest.raises(ValueError):
        betti_formula_general(shape, -1)


def test_unconstrained_overcounts():
    shape = BlockShape((2, 2), 2)
    assert betti_formula_unconstrained(shape, 0) == 6  # C(4,2) counts y1_1 y1_2 too
    assert betti_formula_unconstrained(shape, 0) > betti_formula_general(shape, 0)


def test_top_degree_matches_oracle():
    from tbetti.oracle import betti_oracle
    assert betti_oracle(gens_transversal(BlockShape((2, 2, 2), 2))).totals()[-1] == 2


def test_table_is_linear():
    t = betti_table_transversal(BlockShape((2, 2, 2), 2))
    assert t.totals() == [12, 28, 27, 12, 2] and t.is_linear(2)
