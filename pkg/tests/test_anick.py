import pytest
from hypothesis import given, settings

from conftest import random_algebras
from monofg.anick import (anick_d_squared_zero, chain_table, left_chains, recognize, recognize_left,
                          right_chains, syzygy_decomposition, syzygy_decomposition_left, tor_dims)
from monofg.named import ck5, gss, lambda_d, truncated_polynomial


def ck5_expected(n: int) -> set[str]:
    """Chains of CK5 in degree n >= 3, as printed in the source text."""
    s, odd = divmod(n + 1, 2)
    if not odd:
        # n = 2s - 1
        return {"bcde" + "abcde" * (s - 2) + "abcd", "de" + "abcde" * (s - 1) + "ab"}
    return {"bcde" + "abcde" * (s - 1) + "ab", "de" + "abcde" * (s - 1) + "abcd"}


def test_ck5_low_degrees():
    t = chain_table(ck5(), 2)
    assert {str(p) for p in t.paths(1)} == {"abcd", "bcde", "deab"}
    assert {str(p) for p in t.paths(2)} == {"abcde", "bcdeab", "deabcd"}


def test_ck5_census_to_30():
    t = chain_table(ck5(), 30)
    assert t.counts()[:3] == [5, 3, 3]
    for n in range(3, 31):
        assert {str(p) for p in t.paths(n)} == ck5_expected(n), n


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_truncated_polynomial_chains(n):
    t = chain_table(truncated_polynomial(n), 6)
    # degree 2k-1 is t^{kn}, degree 2k is t^{kn+1}
    for deg in range(7):
        k, r = divmod(deg + 1, 2)
        length = k * n + (r if deg else 0) if deg else 1
        assert [len(p) for p in t.paths(deg)] == [length]


def test_tor_dims_start_with_vertices():
    assert tor_dims(gss(), 3)[:2] == [7, 7]


def test_left_chain_heads_of_t2():
    t = left_chains(truncated_polynomial(2), 2)
    (c,) = t[2]
    assert str(c.path) == "ttt" and str(c.head) == "t"


def test_recognize_rejects_non_chain():
    alg = ck5()
    assert recognize(alg, alg.path("abc")) is None
    assert recognize(alg, alg.path("deabcdeab")).degree == 3


@settings(max_examples=40, deadline=None)
@given(random_algebras)
def test_left_equals_right(alg):
    r, l = right_chains(alg, 8), left_chains(alg, 8)
    for n in range(9):
        assert set(r.paths(n)) == set(l.paths(n))


@settings(max_examples=40, deadline=None)
@given(random_algebras)
def test_recognition_round_trip(alg):
    t = chain_table(alg, 6)
    for c in t.all_chains():
        assert recognize(alg, c.path).degree == c.degree
        assert recognize_left(alg, c.path).degree == c.degree
        assert alg.compose(c.prefix, c.tail) == c.path
        assert alg.compose(c.head, c.suffix) == c.path


@settings(max_examples=40, deadline=None)
@given(random_algebras)
def test_minimality_of_chains(alg):
    """No proper prefix of an n-chain is an n-chain."""
    t = chain_table(alg, 5)
    for n in range(1, 6):
        level = set(t.paths(n))
        for p in level:
            for k in range(1, len(p)):
                assert alg.make_path(p.arrows[:k]) not in level


@settings(max_examples=30, deadline=None)
@given(random_algebras)
def test_resolution_differential_squares_to_zero(alg):
    assert anick_d_squared_zero(alg, 6)


def test_syzygies_lambda():
    alg = lambda_d(3)
    # the line a1 a2 a3 stops after degree 2, the 2-cycle continues forever
    assert syzygy_decomposition(alg, 6) and syzygy_decomposition_left(alg, 6)
    tails = {str(p) for p in syzygy_decomposition(alg, 8)}
    assert tails <= {"b1", "b2"}
