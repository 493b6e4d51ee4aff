"""Tor dimensions from powers of the relation ideal, by monomial set arithmetic.

Everything here works from the quiver and the relation list only; nothing is
imported from the chain code.  A path lies in I^p exactly when it contains p
pairwise disjoint relation occurrences, and the one-sided products with the
arrow ideal m are "drop at least one arrow on that side and stay in I^p".
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import MonomialAlgebra, Path
from .errors import BoundTooSmall

Word = tuple[str, ...]


def occurrences(word: Word, relations: Sequence[Word]) -> list[tuple[int, int]]:
    """Half-open intervals [i, j) where a relation occurs as a factor."""
    out = []
    n = len(word)
    for r in relations:
        k = len(r)
        for i in range(n - k + 1):
            if word[i:i + k] == r:
                out.append((i, i + k))
    return out


def max_disjoint_greedy(word: Word, relations: Sequence[Word]) -> int:
    count, last_end = 0, 0
    for i, j in sorted(occurrences(word, relations), key=lambda iv: (iv[1], iv[0])):
        if i >= last_end:
            count += 1
            last_end = j
    return count


def max_disjoint_dp(word: Word, relations: Sequence[Word]) -> int:
    ends: dict[int, list[int]] = {}
    for i, j in occurrences(word, relations):
        ends.setdefault(j, []).append(i)
    best = [0] * (len(word) + 1)
    for k in range(1, len(word) + 1):
        b = best[k - 1]
        for i in ends.get(k, ()):
            b = max(b, best[i] + 1)
        best[k] = b
    return best[-1]


@dataclass(frozen=True)
class DisjointOccurrenceProfile:
    path: Path
    maxDisjoint: int
    withoutFirst: int
    withoutLast: int
    withoutBoth: int


class GGOracle:
    def __init__(self, alg: MonomialAlgebra):
        self.quiver = alg.quiver
        self.relations: list[Word] = [r.arrows for r in alg.relations]
        self.max_rel_len = max((len(r) for r in self.relations), default=0)
        self._alg = alg  # only for building Path objects in results
        self._md: dict[Word, int] = {}

    def max_disjoint(self, word: Word) -> int:
        got = self._md.get(word)
        if got is None:
            got = max_disjoint_greedy(word, self.relations)
            self._md[word] = got
        return got

    def profile(self, p: Path) -> DisjointOccurrenceProfile:
        w = p.arrows
        return DisjointOccurrenceProfile(p, self.max_disjoint(w), self.max_disjoint(w[1:]),
                                         self.max_disjoint(w[:-1]), self.max_disjoint(w[1:-1]))

    # membership ------------------------------------------------------------
    # I^0 is the whole path algebra (trivial paths included), so a path is in
    # m I^0 iff it has length >= 1, and in m I^0 m iff length >= 2.
    def in_I(self, w: Word, p: int) -> bool:
        return p <= 0 or self.max_disjoint(w) >= p

    def in_mI(self, w: Word, p: int) -> bool:
        return len(w) >= 1 and self.in_I(w[1:], p)

    def in_Im(self, w: Word, p: int) -> bool:
        return len(w) >= 1 and self.in_I(w[:-1], p)

    def in_mIm(self, w: Word, p: int) -> bool:
        return len(w) >= 2 and self.in_I(w[1:-1], p)

    def membership(self, p: Path, tag: str, power: int) -> bool:
        w = p.arrows
        table = {"I": self.in_I, "mI": self.in_mI, "Im": self.in_Im, "mIm": self.in_mIm}
        if tag == "mI(p-1)m":
            return self.in_mIm(w, power - 1)
        return table[tag](w, power)

    def _survives(self, w: Word, n: int) -> bool:
        p, odd = divmod(n, 2)
        if not odd:
            num = self.in_I(w, p) and self.in_mIm(w, p - 1)
            den = self.in_Im(w, p) or self.in_mI(w, p)
        else:
            num = self.in_Im(w, p) and self.in_mI(w, p)
            den = self.in_I(w, p + 1) or self.in_mIm(w, p)
        return num and not den

    def _keep_extending(self, w: Word, n: int) -> bool:
        # prefix-closed superset of the survivors (see module notes in README)
        p, odd = divmod(n, 2)
        if not odd:
            return not self.in_Im(w, p)
        return not self.in_mIm(w, p)

    def tor(self, n: int, bound: int | None = None) -> tuple[int, list[Path]]:
        """(dim Tor_n, surviving paths) for n >= 1."""
        if n < 1:
            raise ValueError("n >= 1")
        B = bound if bound is not None else max(n, 2) * max(self.max_rel_len, 1)
        survivors: list[Word] = []
        q = self.quiver
        stack: list[tuple[Word, str]] = [((a.id,), a.source) for a in q.arrows]
        while stack:
            w, v = stack.pop()
            if self._survives(w, n):
                survivors.append(w)
            if len(w) < B and self._keep_extending(w, n):
                for b in q.into[v]:
                    stack.append((w + (b.id,), b.source))
        for w in survivors:
            if len(w) > B - self.max_rel_len:
                raise BoundTooSmall(f"survivor of length {len(w)} too close to bound {B}")
        paths = sorted(self._alg.make_path(w) for w in survivors)
        return len(paths), paths


def gg_tor_dim(alg: MonomialAlgebra, n: int, bound: int | None = None) -> tuple[int, list[Path]]:
    return GGOracle(alg).tor(n, bound)
