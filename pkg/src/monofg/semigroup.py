"""Numerical semigroups given by a finite window of their elements."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from functools import reduce


@dataclass(frozen=True)
class WindowSemigroup:
    elements: tuple[int, ...]   # positive elements up to `window`
    window: int
    generators: tuple[int, ...]
    frobenius: int              # -1 when the semigroup is all of N
    complete: bool              # window contains a run of `multiplicity` consecutive elements

    @property
    def multiplicity(self) -> int:
        return self.elements[0]

    def contains(self, x: int) -> bool:
        if x == 0:
            return True
        if x <= self.window:
            return x in set(self.elements)
        return self.complete

    def describe(self) -> str:
        gens = ", ".join(map(str, self.generators))
        return f"<{gens}>"


def normalise(values) -> tuple[int, list[int]]:
    vals = sorted(set(values))
    g = reduce(gcd, vals, 0)
    return g, [v // g for v in vals]


def from_window(values, window: int | None = None) -> WindowSemigroup:
    """Semigroup data from all elements <= window (positive, gcd 1)."""
    vals = sorted(set(values))
    if not vals:
        raise ValueError("empty semigroup")
    if reduce(gcd, vals, 0) != 1:
        raise ValueError("normalise first: gcd must be 1")
    W = window if window is not None else vals[-1]
    vals = [v for v in vals if v <= W]
    m = vals[0]
    present = set(vals)
    # conductor: start of a run reaching the window end of length >= m
    c = W + 1
    while c - 1 >= 1 and (c - 1) in present:
        c -= 1
    complete = (W - c + 1) >= m
    frob = c - 1 if complete else max((x for x in range(1, W + 1) if x not in present), default=0)
    if complete and c == 1:
        frob = -1
    gens = []
    bound = max(frob + m, m) if complete else W
    for x in vals:
        if x > bound:
            break
        if not any(y in present and (x - y) in present for y in range(m, x // 2 + 1)):
            gens.append(x)
    return WindowSemigroup(tuple(vals), W, tuple(gens), frob, complete)


def closed_in_window(sg: WindowSemigroup) -> bool:
    present = set(sg.elements)
    return all((a + b) in present for a in sg.elements for b in sg.elements if a + b <= sg.window)
