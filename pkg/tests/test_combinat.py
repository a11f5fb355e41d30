import itertools
import math

import pytest
from hypothesis import given, strategies as st

from tbetti.combinat import (Composition, binom, compositions, count_compositions,
                             identity_absorb, identity_diagonal_sum, identity_shift,
                             identity_vandermonde, identity_weighted_sum, run_identity_suites,
                             vandermonde_sums)


def pascal(a, b):
    row = [1]
    for _ in range(a):
        row = [x + y for x, y in zip([0] + row, row + [0])]
    return row[b] if 0 <= b <= a else 0


def test_binom_examples():
    assert binom(5, 2) == 10
    assert binom(3, 7) == 0
    assert binom(4, -1) == 0
    assert binom(60, 30) == 118264581564861424 == pascal(60, 30)


def test_binom_rejects_negative_top():
    with pytest.raises(ValueError):
        binom(-1, 0)


@given(st.integers(0, 40), st.integers(-3, 45))
def test_binom_matches_pascal(a, b):
    assert binom(a, b) == pascal(a, b)


def test_compositions_examples():
    assert [c.parts for c in compositions(3, 2, [2, 2])] == [(1, 2), (2, 1)]
    assert [c.parts for c in compositions(4, 2, [2, 2])] == [(2, 2)]
    assert list(compositions(5, 2, [2, 2])) == []


def test_composition_validation():
    with pytest.raises(ValueError):
        Composition((0, 2), 2)
    with pytest.raises(ValueError):
        Composition((1, 2), 4)


@given(st.integers(0, 9), st.lists(st.integers(1, 4), min_size=1, max_size=4))
def test_compositions_bruteforce(total, caps):
    got = [c.parts for c in compositions(total, len(caps), caps)]
    want = [p for p in itertools.product(*(range(1, c + 1) for c in caps)) if sum(p) == total]
    assert got == sorted(want)
    assert count_compositions(total, caps) == len(want)


def test_compositions_unbounded():
    assert len(list(compositions(6, 3))) == math.comb(5, 2)


@pytest.mark.parametrize("args, want", [((5, 2, 3), (30, 30)), ((4, 3, 2), (0, 0))])
def test_identity_absorb(args, want):
    assert identity_absorb(*args) == want


def test_identity_absorb_tau_zero():
    for i in range(8):
        for q in range(8):
            assert identity_absorb(i, 0, q) == (binom(i, q), binom(i, q))


@pytest.mark.parametrize("args, want", [((4, 2, 3), (20, 20)), ((3, 3, 6), (1, 1)),
                                        ((5, 0, 2), (10, 10))])
def test_identity_shift(args, want):
    assert identity_shift(*args) == want


@pytest.mark.parametrize("args, want", [((4, 2), (24, 24)), ((5, 5), (1, 1)), ((5, 0), (32, 32))])
def test_identity_weighted_sum(args, want):
    assert identity_weighted_sum(*args) == want


def test_identity_weighted_sum_domain():
    with pytest.raises(ValueError):
        identity_weighted_sum(3, 4)


@pytest.mark.parametrize("args, want", [(([2, 2], 2), (6, 6)), (([5], 3), (10, 10)),
                                        (([1, 1, 1], 2), (3, 3))])
def test_identity_vandermonde(args, want):
    assert identity_vandermonde(*args) == want


def test_vandermonde_sums_total_mass():
    sums = vandermonde_sums([2, 3, 1])
    assert sum(sums.values()) == 2 ** 6


@pytest.mark.parametrize("args, want", [((1, 1, 1, 1), (1, 1)), ((2, 1, 2, 1), (10, 10)),
                                        ((3, 2, 2, 1), (15, 15))])
def test_identity_diagonal_sum(args, want):
    assert identity_diagonal_sum(*args) == want


@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
def test_identities_property(a, b, c):
    lhs, rhs = identity_absorb(a, b, c)
    assert lhs == rhs
    lhs, rhs = identity_shift(a, b, c)
    assert lhs == rhs


def test_run_identity_suites_all_pass():
    rows = run_identity_suites(limit=6, weighted_max=8, vandermonde_len=3,
                               vandermonde_entry=3, diagonal_max=5)
    assert [r["identity"] for r in rows] == ["absorb", "shift", "weighted_sum",
                                             "vandermonde", "diagonal_sum"]
    assert all(r["passed"] and r["checked"] > 0 for r in rows)
