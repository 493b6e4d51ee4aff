import pytest
from hypothesis import given, settings, strategies as st

from monofg.ainfty import ExtAlgebra, closed_form_exponent, sign_exponent
from monofg.errors import DegreeMismatch, NotSymmetric, OddDegree
from monofg.named import ck5, gss, lambda_d, truncated_polynomial
from monofg.periodicity import Periodicity


@pytest.fixture(scope="module")
def ck5_ext():
    return ExtAlgebra(ck5())


@pytest.mark.parametrize("n", range(5, 13))
def test_ck5_higher_products_nonzero(ck5_ext, n):
    E = ck5_ext
    args = [E.dual("d"), E.dual("e")] + [E.dual("abcde")] * (n - 4) + [E.dual("a"), E.dual("b")]
    res = E.m(*args)
    target = "de" + "abcde" * (n - 4) + "ab"
    assert res.degree == 2 * n - 6
    assert {str(p) for p in res.support} == {target}


def test_ck5_products_vanish_in_written_reverse_order(ck5_ext):
    """The reversed concatenation is not a path of the right shape, so the product is zero."""
    E = ck5_ext
    args = [E.dual("b"), E.dual("a"), E.dual("abcde"), E.dual("e"), E.dual("d")]
    assert E.m(*args).is_zero()


@pytest.mark.parametrize("alg", [ck5(), truncated_polynomial(3)], ids=lambda a: a.name)
def test_vanishing_audit(alg):
    out = ExtAlgebra(alg).vanishing_audit(max_total=14, max_arity=6)
    assert out["violations"] == [] and out["signMismatches"] == []
    assert out["nonzero"] > 0


def test_audit_sizes_frozen():
    assert ExtAlgebra(truncated_polynomial(3)).vanishing_audit(14, 6)["evaluated"] == 6461
    assert ExtAlgebra(ck5()).vanishing_audit(14, 6)["evaluated"] == 2506


@pytest.mark.parametrize("alg", [ck5(), truncated_polynomial(3), gss()], ids=lambda a: a.name)
def test_stasheff_identities(alg):
    assert ExtAlgebra(alg).stasheff_defects(max_total=10, max_arity=5) == []


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 9), min_size=2, max_size=8), st.data())
def test_sign_formulas_agree_on_allowed_patterns(rs, data):
    # products can only be nonzero when every middle input has odd Ext degree (r even)
    rs = [rs[0]] + [2 * (r // 2) for r in rs[1:-1]] + [rs[-1]]
    assert (sign_exponent(rs) - closed_form_exponent(rs)) % 2 == 0


def test_unit_acts_trivially():
    E = ExtAlgebra(truncated_polynomial(3))
    x = E.dual("ttt")
    assert E.m(E.unit(), x) == x and E.m(x, E.unit()) == x
    assert E.m(E.unit(), x, x).is_zero()


def test_degree_mismatch():
    E = ExtAlgebra(truncated_polynomial(3))
    with pytest.raises(DegreeMismatch):
        E.dual("t") + E.dual("ttt")


def test_centrality_rejects_odd_and_open():
    E = ExtAlgebra(ck5())
    with pytest.raises(OddDegree):
        E.centrality_check(E.dual("abcde"), 10)
    with pytest.raises(NotSymmetric):
        E.centrality_check(E.dual("abcd"), 10)


@pytest.mark.parametrize("n", range(2, 7))
def test_gulliksen_centrality_and_commutators(n):
    alg = truncated_polynomial(n)
    E = ExtAlgebra(alg)
    chi = Periodicity(alg).build_chi().chi
    assert E.centrality_check(chi, 20)["pass"]
    sweep = E.commutator_sweep(chi, 20)
    assert sweep["nonzero"] == [] and sweep["evaluated"] > 0


def test_non_central_element_detected():
    E = ExtAlgebra(lambda_d(2))
    a = E.dual("b1 b2")
    assert not E.centrality_check(a, 12)["pass"]
    assert E.commutator_sweep(a, 12)["nonzero"]


def test_chi_power_matches_long_cycle():
    alg = truncated_polynomial(3)
    E = ExtAlgebra(alg)
    chi = E.dual("ttt")
    assert {str(p) for p in E.power(chi, 3).support} == {"ttttttttt"}


@pytest.mark.parametrize("alg_fn, elem, D", [
    (lambda: truncated_polynomial(3), "ttt", 9),
    (lambda: truncated_polynomial(2), "tt", 9),
    (lambda: lambda_d(2), "b1 b2", 8),
])
def test_commutator_sweep_matches_naive(alg_fn, elem, D):
    # every composable tuple within the degree bound, evaluated directly
    E = ExtAlgebra(alg_fn())
    a = E.dual(elem)
    naive = set()
    for tup in E.composable_tuples(D - a.degree, max_arity=D - a.degree, min_arity=1):
        if not E.commutator(a, [E.dual(p) for p in tup]).value.is_zero():
            naive.add(tuple(str(p) for p in tup))
    swept = {tuple(r["tuple"]) for r in E.commutator_sweep(a, D)["nonzero"]}
    assert swept == naive
