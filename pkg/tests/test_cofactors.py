from hypothesis import given, settings

from conftest import random_algebras
from monofg.cofactors import (extend_walk, is_perfect, left_cofactors, perfect_cycles, period,
                              predecessor, right_cofactors, successor)
from monofg.named import ck5, gss, lambda_d, truncated_polynomial


def names(paths):
    return [str(p) for p in paths]


def test_truncated_cubic_cofactors():
    alg = truncated_polynomial(3)
    t, tt = alg.path("t"), alg.path("tt")
    assert names(right_cofactors(alg, t)) == ["tt"]
    assert names(right_cofactors(alg, tt)) == ["t"]
    assert names(extend_walk(alg, t, "right", 4)) == ["t", "tt", "t", "tt"]


def test_gss_single_perfect_cycle():
    (cyc,) = perfect_cycles(gss())
    assert str(cyc) == "(d, ef, g, abc)"
    assert period(gss()).ell == 4


def test_lambda_perfect_cycle():
    (cyc,) = perfect_cycles(lambda_d(4))
    assert str(cyc) == "(b1, b2)"


def test_ck5_has_no_perfect_paths():
    assert perfect_cycles(ck5()) == []


def brute_right(alg, p):
    out = []
    for q in alg.nonzero_paths():
        if q.target != p.source or not alg.is_zero(p.arrows + q.arrows):
            continue
        if all(not alg.is_zero(p.arrows + q.arrows[:k]) for k in range(1, len(q))):
            out.append(q)
    return sorted(out)


def brute_left(alg, p):
    out = []
    for q in alg.nonzero_paths():
        if q.source != p.target or not alg.is_zero(q.arrows + p.arrows):
            continue
        if all(not alg.is_zero(q.arrows[k:] + p.arrows) for k in range(1, len(q))):
            out.append(q)
    return sorted(out)


@settings(max_examples=40, deadline=None)
@given(random_algebras)
def test_cofactors_match_definition(alg):
    for p in alg.nonzero_paths():
        assert list(right_cofactors(alg, p)) == brute_right(alg, p)
        assert list(left_cofactors(alg, p)) == brute_left(alg, p)


@settings(max_examples=40, deadline=None)
@given(random_algebras)
def test_perfect_successor_is_inverse(alg):
    for cyc in perfect_cycles(alg):
        for p in cyc.paths:
            assert is_perfect(alg, p)
            assert predecessor(alg, successor(alg, p)) == p
