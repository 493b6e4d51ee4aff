"""Quivers, paths and monomial algebras.

Paths are written in composition order: ``ab`` means *b first, then a*, so
``ab`` exists only when ``s(a) == t(b)``.  The target of a path is the target
of its leftmost arrow and the source is the source of its rightmost arrow.
Left divisors are prefixes, right divisors are suffixes.
"""
from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .automaton import RelationAutomaton
from .errors import AntichainViolation, InfiniteDimensional, InvalidAlgebra


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str


class Quiver:
    def __init__(self, vertices: Iterable[str], arrows: Iterable[tuple[str, str, str] | Arrow]):
        self.vertices: tuple[str, ...] = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidAlgebra("duplicate vertex id")
        arr = []
        for a in arrows:
            if not isinstance(a, Arrow):
                a = Arrow(str(a[0]), str(a[1]), str(a[2]))
            arr.append(a)
        self.arrows: tuple[Arrow, ...] = tuple(arr)
        self.arrow: dict[str, Arrow] = {}
        vs = set(self.vertices)
        for a in self.arrows:
            if a.id in self.arrow:
                raise InvalidAlgebra(f"duplicate arrow id {a.id!r}")
            if a.source not in vs or a.target not in vs:
                raise InvalidAlgebra(f"arrow {a.id!r} uses an undeclared vertex")
            self.arrow[a.id] = a
        if not self.vertices:
            raise InvalidAlgebra("quiver has no vertices")
        if not self._connected():
            raise InvalidAlgebra("quiver is not connected")
        # arrows ending at v: these are the ones that can be appended on the right
        # of a path whose source is v
        self.into: dict[str, list[Arrow]] = defaultdict(list)
        self.out_of: dict[str, list[Arrow]] = defaultdict(list)
        for a in sorted(self.arrows, key=lambda x: x.id):
            self.into[a.target].append(a)
            self.out_of[a.source].append(a)

    def _connected(self) -> bool:
        adj = defaultdict(set)
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {self.vertices[0]}
        todo = [self.vertices[0]]
        while todo:
            v = todo.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(self.vertices)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, [(a.id, a.target, a.source) for a in self.arrows])

    def __repr__(self) -> str:
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"


@dataclass(frozen=True)
class Path:
    """A path: ``arrows`` in composition order plus its endpoints.

    A trivial path has no arrows and ``source == target``.
    """

    arrows: tuple[str, ...]
    source: str
    target: str

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def key(self) -> tuple:
        # canonical order: length, then arrow ids, trivial paths by vertex
        return (len(self.arrows), self.arrows, self.source)

    def __lt__(self, other: "Path") -> bool:
        return self.key < other.key

    def is_left_divisor_of(self, other: "Path") -> bool:
        if self.is_trivial:
            return self.target == other.target
        return other.arrows[: len(self.arrows)] == self.arrows

    def is_right_divisor_of(self, other: "Path") -> bool:
        if self.is_trivial:
            return self.source == other.source
        n = len(self.arrows)
        return len(other.arrows) >= n and other.arrows[len(other.arrows) - n:] == self.arrows

    def is_factor_of(self, other: "Path") -> bool:
        if self.is_trivial:
            return self.source in _vertices_on(other)
        n, m = len(self.arrows), len(other.arrows)
        return any(other.arrows[i:i + n] == self.arrows for i in range(m - n + 1))

    def __str__(self) -> str:
        if not self.arrows:
            return f"e_{self.source}"
        if all(len(a) == 1 for a in self.arrows):
            return "".join(self.arrows)
        return " ".join(self.arrows)

    def __repr__(self) -> str:
        return f"Path({self})"


def _vertices_on(p: Path) -> set[str]:
    # endpoints only: the intermediate vertices are not stored on the path
    return {p.source, p.target}


class _Incomposable:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "INCOMPOSABLE"

    def __bool__(self) -> bool:
        return False


INCOMPOSABLE = _Incomposable()


class MonomialAlgebra:
    """kQ/I with I generated by an antichain of paths of length >= 2.

    The constructor checks the antichain condition and finite dimensionality.
    Results of expensive queries are memoised; the algebra is otherwise
    immutable.
    """

    def __init__(self, quiver: Quiver, relations: Iterable, name: str = "", check_finite: bool = True):
        self.quiver = quiver
        self.name = name
        rels = []
        for r in relations:
            p = r if isinstance(r, Path) else self.path(r)
            if len(p) < 2:
                raise InvalidAlgebra(f"relation {p} has length < 2")
            rels.append(p)
        rels = sorted(set(rels))
        for i, r in enumerate(rels):
            for j, s in enumerate(rels):
                if i != j and r.is_factor_of(s):
                    raise AntichainViolation(f"relation {r} is a factor of relation {s}")
        self.relations: tuple[Path, ...] = tuple(rels)
        self.automaton = RelationAutomaton(r.arrows for r in rels)
        self.max_rel_len = max((len(r) for r in rels), default=0)
        self._cache: dict = {}
        if check_finite:
            self.nonzero_basis()

    # --- construction helpers -------------------------------------------
    def arrow_path(self, a: str) -> Path:
        ar = self.quiver.arrow[a]
        return Path((a,), ar.source, ar.target)

    def trivial(self, v: str) -> Path:
        if v not in self.quiver.vertices:
            raise InvalidAlgebra(f"unknown vertex {v!r}")
        return Path((), v, v)

    def path(self, spec: str | Sequence[str]) -> Path:
        """Build a path from arrow ids in composition order.

        A string is split on whitespace; a single token made only of
        one-character arrow ids is split into characters (``"abcd"``).
        """
        if isinstance(spec, str):
            toks = spec.split()
            if len(toks) == 1 and toks[0] not in self.quiver.arrow:
                toks = list(toks[0])
        else:
            toks = [str(t) for t in spec]
        if not toks:
            raise InvalidAlgebra("empty path; use trivial(v)")
        for t in toks:
            if t not in self.quiver.arrow:
                raise InvalidAlgebra(f"unknown arrow {t!r}")
        arrows = tuple(toks)
        for x, y in zip(arrows, arrows[1:]):
            if self.quiver.arrow[x].source != self.quiver.arrow[y].target:
                raise InvalidAlgebra(f"arrows {x}{y} are not composable")
        return Path(arrows, self.quiver.arrow[arrows[-1]].source, self.quiver.arrow[arrows[0]].target)

    def make_path(self, arrows: tuple[str, ...]) -> Path:
        """Unchecked constructor for internal use (arrows known composable)."""
        return Path(arrows, self.quiver.arrow[arrows[-1]].source, self.quiver.arrow[arrows[0]].target)

    # --- basic operations --------------------------------------------------
    def compose(self, p: Path, q: Path):
        if p.source != q.target:
            return INCOMPOSABLE
        if p.is_trivial:
            return q
        if q.is_trivial:
            return p
        return Path(p.arrows + q.arrows, q.source, p.target)

    def is_zero(self, p: Path | Sequence[str]) -> bool:
        arrows = p.arrows if isinstance(p, Path) else tuple(p)
        return self.automaton.contains_match(arrows)

    def multiply(self, p: Path, q: Path):
        """Product in the algebra: a basis path or None for zero."""
        r = self.compose(p, q)
        if r is INCOMPOSABLE or self.is_zero(r):
            return None
        return r

    # --- basis ----------------------------------------------------------------
    def nonzero_basis(self) -> list[Path]:
        got = self._cache.get("basis")
        if got is not None:
            return got
        aut = self.automaton
        # nodes: (automaton state, source vertex of the path read so far)
        start = []
        for a in self.quiver.arrows:
            st = aut.step(0, a.id)
            if not aut.hit[st]:
                start.append((st, a.source))
        self._check_acyclic(start)
        out = [self.trivial(v) for v in self.quiver.vertices]
        layer = []
        for a in self.quiver.arrows:
            st = aut.step(0, a.id)
            if not aut.hit[st]:
                layer.append(((a.id,), st, a.source))
        while layer:
            nxt = []
            for arrows, st, v in layer:
                out.append(Path(arrows, v, self.quiver.arrow[arrows[0]].target))
                for b in self.quiver.into[v]:
                    s2 = aut.step(st, b.id)
                    if not aut.hit[s2]:
                        nxt.append((arrows + (b.id,), s2, b.source))
            layer = nxt
        out.sort()
        self._cache["basis"] = out
        return out

    def _check_acyclic(self, start) -> None:
        aut = self.automaton
        WHITE, GREY, BLACK = 0, 1, 2
        colour: dict = {}

        def succ(node):
            st, v = node
            for b in self.quiver.into[v]:
                s2 = aut.step(st, b.id)
                if not aut.hit[s2]:
                    yield (s2, b.source)

        for root in start:
            if colour.get(root, WHITE) != WHITE:
                continue
            colour[root] = GREY
            stack = [(root, succ(root))]
            while stack:
                node, it = stack[-1]
                for nb in it:
                    c = colour.get(nb, WHITE)
                    if c == GREY:
                        raise InfiniteDimensional(
                            f"relation-avoiding paths are unbounded{' in ' + self.name if self.name else ''}")
                    if c == WHITE:
                        colour[nb] = GREY
                        stack.append((nb, succ(nb)))
                        break
                else:
                    colour[node] = BLACK
                    stack.pop()

    def parallel_basis(self, target: str, source: str) -> list[Path]:
        """Basis of e_target Λ e_source."""
        got = self._cache.get("parallel")
        if got is None:
            got = defaultdict(list)
            for p in self.nonzero_basis():
                got[(p.target, p.source)].append(p)
            self._cache["parallel"] = got
        return got.get((target, source), [])

    def radical_profile(self) -> "RadicalProfile":
        basis = self.nonzero_basis()
        dim = len(basis)
        rad = dim - len(self.quiver.vertices)
        K = max(len(p) for p in basis)
        mod_rad_k = dim - sum(1 for p in basis if len(p) >= K)
        return RadicalProfile(dim, rad, K, mod_rad_k, min(rad, mod_rad_k))

    @cached_property
    def n_lambda(self) -> int:
        return self.radical_profile().nLambda

    # --- derived algebras -------------------------------------------------
    def opposite(self) -> "MonomialAlgebra":
        q = self.quiver.opposite()
        rels = [tuple(reversed(r.arrows)) for r in self.relations]
        return MonomialAlgebra(q, rels, name=(self.name + "^op") if self.name else "")

    def nonzero_paths(self) -> list[Path]:
        return [p for p in self.nonzero_basis() if not p.is_trivial]

    def describe(self) -> dict:
        return {
            "name": self.name,
            "vertices": list(self.quiver.vertices),
            "arrows": [[a.id, a.source, a.target] for a in self.quiver.arrows],
            "relations": [str(r) if all(len(x) == 1 for x in r.arrows) else list(r.arrows) for r in self.relations],
        }

    def spec_text(self) -> str:
        """Render in the input file format (round-trips through the parser)."""
        lines = []
        if self.name and re.fullmatch(r"[A-Za-z0-9_.'^+-]+", self.name):
            lines.append(f"name {self.name}")
        lines.append("vertices " + " ".join(self.quiver.vertices))
        for a in self.quiver.arrows:
            lines.append(f"arrow {a.id}: {a.source} -> {a.target}")
        for r in self.relations:
            lines.append("relation " + " ".join(r.arrows))
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"MonomialAlgebra({self.name or '?'}: {self.quiver!r}, {len(self.relations)} relations)"


@dataclass(frozen=True)
class RadicalProfile:
    dimAlgebra: int
    dimRadical: int
    K: int
    dimModRadK: int
    nLambda: int

    def as_dict(self) -> dict:
        return dict(dimAlgebra=self.dimAlgebra, dimRadical=self.dimRadical, K=self.K,
                    dimModRadK=self.dimModRadK, nLambda=self.nLambda)


def iter_factorizations(p: Path) -> Iterator[tuple[int, int]]:
    """All (i, j) with 0 <= i <= j <= len(p): p = p[:i] p[i:j] p[j:]."""
    n = len(p)
    for i in range(n + 1):
        for j in range(i, n + 1):
            yield i, j
