"""Named algebras used throughout the tests and scripts."""
from __future__ import annotations

import re
import string

from .algebra import MonomialAlgebra, Quiver


def cycle_quiver(n_arrows: int, ids: list[str] | None = None) -> tuple[Quiver, list[str]]:
    """Oriented cycle with arrows listed so that consecutive ids compose.

    Arrow ``ids[i]`` goes from vertex i+1 to vertex i (mod n), hence
    ``ids[i] ids[i+1]`` is a path in composition order.
    """
    if ids is None:
        ids = list(string.ascii_lowercase[:n_arrows]) if n_arrows <= 26 else [f"x{i}" for i in range(n_arrows)]
    verts = [str(i) for i in range(n_arrows)]
    arrows = [(ids[i], str((i + 1) % n_arrows), str(i)) for i in range(n_arrows)]
    return Quiver(verts, arrows), ids


def ck5() -> MonomialAlgebra:
    q, _ = cycle_quiver(5)
    return MonomialAlgebra(q, ["abcd", "bcde", "deab"], name="CK5")


def gss() -> MonomialAlgebra:
    q, _ = cycle_quiver(7)
    return MonomialAlgebra(q, ["abcd", "bcde", "def", "efg", "fgab", "gabc"], name="GSS7")


def truncated_polynomial(n: int) -> MonomialAlgebra:
    """k[t]/(t^n)."""
    q = Quiver(["0"], [("t", "0", "0")])
    return MonomialAlgebra(q, [("t",) * n], name=f"k[t]/(t^{n})")


def cyclic_nakayama(m: int, n: int) -> MonomialAlgebra:
    """m-cycle modulo all paths of length n (self-injective)."""
    if m == 1:
        return truncated_polynomial(n)
    ids = [f"x{i}" for i in range(m)]
    q, _ = cycle_quiver(m, ids)
    rels = {tuple(ids[(i + k) % m] for k in range(n)) for i in range(m)}
    return MonomialAlgebra(q, sorted(rels), name=f"Nakayama({m},{n})")


def lambda_d(d: int) -> MonomialAlgebra:
    """Gorenstein algebra of dimension d built from a 2-cycle and a zero path.

    A 2-cycle b1, b2 with both length-2 relations supplies the perfect paths;
    the line a1 ... ad with all consecutive products zero supplies a chain of
    degree d-1 ending in a tail with no right cofactor.  Two free arrows d1, d2
    connect the line to the 2-cycle.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    verts = ["A", "B"] + [f"v{i}" for i in range(d + 1)]
    arrows = [("b1", "A", "B"), ("b2", "B", "A")]
    arrows += [(f"a{i}", f"v{i}", f"v{i - 1}") for i in range(1, d + 1)]
    arrows += [("d1", "B", f"v{d}"), ("d2", "v0", "B")]
    rels = [("b1", "b2"), ("b2", "b1")] + [(f"a{i}", f"a{i + 1}") for i in range(1, d)]
    return MonomialAlgebra(Quiver(verts, arrows), rels, name=f"Lambda_{d}")


def local_zero_square() -> MonomialAlgebra:
    """k<x,y>/(x^2, xy, yx, y^2)."""
    q = Quiver(["0"], [("x", "0", "0"), ("y", "0", "0")])
    return MonomialAlgebra(q, ["xx", "xy", "yx", "yy"], name="k<x,y>/m^2")


def local_algebras() -> list[MonomialAlgebra]:
    q = Quiver(["0"], [("x", "0", "0"), ("y", "0", "0")])
    return [
        local_zero_square(),
        MonomialAlgebra(q, ["xx", "yy", "xyx", "yxy"], name="k<x,y>/(x2,y2,xyx,yxy)"),
        MonomialAlgebra(q, ["xxx", "xy", "yx", "yy"], name="k<x,y>/(x3,xy,yx,y2)"),
        MonomialAlgebra(q, ["xx", "yx", "yyy"], name="k<x,y>/(x2,yx,y3)"),
    ]


def hereditary_a2() -> MonomialAlgebra:
    return MonomialAlgebra(Quiver(["1", "2"], [("a", "2", "1")]), [], name="A2")


def hereditary_algebras() -> list[MonomialAlgebra]:
    return [
        hereditary_a2(),
        MonomialAlgebra(Quiver(["1", "2", "3"], [("a", "2", "1"), ("b", "3", "2")]), [], name="A3"),
        MonomialAlgebra(Quiver(["1", "2"], [("a", "2", "1"), ("b", "2", "1")]), [], name="Kronecker"),
        MonomialAlgebra(Quiver(["0", "1", "2", "3"], [("a", "1", "0"), ("b", "2", "0"), ("c", "3", "0")]), [],
                        name="D4"),
    ]


def all_named() -> list[MonomialAlgebra]:
    out = [ck5(), gss()]
    out += [truncated_polynomial(n) for n in range(2, 7)]
    out += [lambda_d(d) for d in range(2, 7)]
    out += [cyclic_nakayama(m, n) for m in range(1, 4) for n in range(2, 5)]
    out += local_algebras() + hereditary_algebras()
    return out


REGISTRY = {
    "ck5": ck5,
    "gss": gss,
    "a2": hereditary_a2,
    "local": local_zero_square,
}


def by_name(key: str) -> MonomialAlgebra:
    """Resolve short names: ck5, gss, a2, local, poly<n>, lambda<d>, nakayama<m>x<n>."""
    if key in REGISTRY:
        return REGISTRY[key]()
    if m := re.fullmatch(r"poly(\d+)", key):
        return truncated_polynomial(int(m.group(1)))
    if m := re.fullmatch(r"lambda(\d+)", key):
        return lambda_d(int(m.group(1)))
    if m := re.fullmatch(r"nakayama(\d+)x(\d+)", key):
        return cyclic_nakayama(int(m.group(1)), int(m.group(2)))
    raise KeyError(f"unknown named algebra {key!r}")
