import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_algebras
from monofg.algebra import INCOMPOSABLE, MonomialAlgebra, Path, Quiver
from monofg.automaton import RelationAutomaton
from monofg.errors import AntichainViolation, InfiniteDimensional, InvalidAlgebra, ParseError
from monofg.named import ck5, gss, hereditary_a2, truncated_polynomial
from monofg.specfile import parse_algebra


def test_composition_order():
    alg = ck5()
    a, b = alg.path("a"), alg.path("b")
    assert alg.compose(a, b).arrows == ("a", "b")
    assert alg.compose(b, a) is INCOMPOSABLE
    assert alg.path("ab").source == b.source and alg.path("ab").target == a.target


@pytest.mark.parametrize("alg, profile", [
    (ck5(), (22, 17, 4, 20, 17)),
    (truncated_polynomial(2), (2, 1, 1, 1, 1)),
    (hereditary_a2(), (3, 1, 1, 2, 1)),
])
def test_radical_profile(alg, profile):
    p = alg.radical_profile()
    assert (p.dimAlgebra, p.dimRadical, p.K, p.dimModRadK, p.nLambda) == profile


def test_ck5_basis_size():
    assert len(ck5().nonzero_basis()) == 22


def test_rejects_non_antichain():
    q = Quiver(["0"], [("t", "0", "0")])
    with pytest.raises(AntichainViolation):
        MonomialAlgebra(q, ["tt", "ttt"])


def test_rejects_infinite():
    q = Quiver(["0"], [("x", "0", "0"), ("y", "0", "0")])
    with pytest.raises(InfiniteDimensional):
        MonomialAlgebra(q, ["xx", "yy"])


def test_rejects_unknown_arrow():
    with pytest.raises(InvalidAlgebra):
        MonomialAlgebra(Quiver(["0"], [("t", "0", "0")]), ["tq"])


def test_opposite_is_involution():
    alg = gss()
    back = alg.opposite().opposite()
    assert set(back.relations) == set(alg.relations)


# --- file format -----------------------------------------------------------

GSS_TEXT = """\
# seven-cycle
name gss
vertices 0 1 2 3 4 5 6
arrow a: 1 -> 0
arrow b: 2 -> 1
arrow c: 3 -> 2
arrow d: 4 -> 3
arrow e: 5 -> 4
arrow f: 6 -> 5
arrow g: 0 -> 6
relation abcd
relation b c d e
relation def
relation efg
relation fgab
relation gabc
"""


def test_parse_matches_named():
    alg = parse_algebra(GSS_TEXT)
    assert set(alg.relations) == set(gss().relations)
    assert alg.name == "gss"


def test_traversal_order_reverses():
    text = "vertices 0 1 2\narrow a: 0 -> 1\narrow b: 1 -> 2\nrelation a b\n"
    alg = parse_algebra(text, traversal_order=True)
    assert [r.arrows for r in alg.relations] == [("b", "a")]
    alg2 = parse_algebra("order traversal\n" + text)
    assert alg2.relations == alg.relations


@pytest.mark.parametrize("text, line, column", [
    ("vertices 0\narrow t: 0 -> 0\nrelation tq\n", 3, 11),
    ("vertices 0\narrow t: 0 -> 9\n", 2, 15),
    ("vertices 0\nfoo bar\n", 2, 1),
    ("vertices 0 0\n", 1, 12),
])
def test_parse_error_position(text, line, column):
    with pytest.raises(ParseError) as exc:
        parse_algebra(text)
    assert (exc.value.line, exc.value.column) == (line, column)


@settings(max_examples=40, deadline=None)
@given(random_algebras)
def test_spec_text_round_trip(alg):
    again = parse_algebra(alg.spec_text())
    assert again.relations == alg.relations
    assert again.quiver.vertices == alg.quiver.vertices


# --- properties --------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(random_algebras, st.data())
def test_multiplication_associative(alg, data):
    basis = alg.nonzero_basis()
    x, y, z = (data.draw(st.sampled_from(basis)) for _ in range(3))

    def mul(p, q):
        if p is None or q is None:
            return None
        return alg.multiply(p, q)

    assert mul(mul(x, y), z) == mul(x, mul(y, z))


@settings(max_examples=40, deadline=None)
@given(random_algebras, st.data())
def test_zero_paths_form_an_ideal(alg, data):
    """Extending a zero path on either side keeps it zero."""
    rel = data.draw(st.sampled_from(alg.relations)) if alg.relations else None
    if rel is None:
        return
    for a in alg.quiver.into[rel.source]:
        assert alg.is_zero(rel.arrows + (a.id,))
    for a in alg.quiver.out_of[rel.target]:
        assert alg.is_zero((a.id,) + rel.arrows)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.text("abc", min_size=1, max_size=4), min_size=1, max_size=5),
       st.text("abc", max_size=20))
def test_automaton_matches_naive_search(patterns, word):
    pats = [tuple(p) for p in patterns]
    aut = RelationAutomaton(pats)
    w = tuple(word)
    naive = any(w[i:i + len(p)] == p for p in pats for i in range(len(w) - len(p) + 1))
    assert aut.contains_match(w) == naive


def test_basis_is_exactly_the_relation_free_paths():
    alg = ck5()
    basis = {p.arrows for p in alg.nonzero_paths()}
    # brute force over all words on the cycle up to length 6
    words = set()
    frontier = [(a.id,) for a in alg.quiver.arrows]
    while frontier:
        nxt = []
        for w in frontier:
            if alg.is_zero(w):
                continue
            words.add(w)
            for a in alg.quiver.into[alg.quiver.arrow[w[-1]].source]:
                nxt.append(w + (a.id,))
        frontier = nxt
    assert basis == words
