"""Anick chains (right and left), Tor dimensions, syzygies, resolution differential.

Right chains grow by tails: an n-chain is an (n-1)-chain followed by a
minimal nonzero q such that (old tail)·q ends in a relation.  Those q are
exactly the right cofactors of the old tail, which is how the extension is
implemented.  Left chains grow by heads in the same way using left cofactors.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import MonomialAlgebra, Path
from .cofactors import left_cofactors, right_cofactors
from .errors import InvariantViolation, ResourceBound

DEFAULT_MAX_CHAINS = 250_000


@dataclass(frozen=True)
class Chain:
    path: Path
    degree: int
    tail: Path | None = None
    head: Path | None = None
    # the (n-1)-chain left divisor; trivial path at t(gamma) in degree 0
    prefix: Path | None = None
    # the (n-1)-chain right divisor (left chain structure)
    suffix: Path | None = None

    def __str__(self) -> str:
        return str(self.path)

    def as_dict(self) -> dict:
        d = {"path": str(self.path), "degree": self.degree}
        if self.tail is not None:
            d["tail"] = str(self.tail)
        if self.head is not None:
            d["head"] = str(self.head)
        return d


@dataclass
class ChainTable:
    bound: int
    levels: list[list[Chain]] = field(default_factory=list)

    def __post_init__(self):
        self._index = {c.path: c for lvl in self.levels for c in lvl}

    def __getitem__(self, n: int) -> list[Chain]:
        if n < 0 or n > self.bound:
            raise IndexError(f"degree {n} outside table 0..{self.bound}")
        return self.levels[n]

    def paths(self, n: int) -> list[Path]:
        return [c.path for c in self[n]]

    def counts(self) -> list[int]:
        return [len(x) for x in self.levels]

    def lookup(self, p: Path) -> Chain | None:
        return self._index.get(p)

    def all_chains(self):
        for lvl in self.levels:
            yield from lvl

    def as_dict(self) -> dict:
        return {"bound": self.bound,
                "degrees": [[c.as_dict() for c in lvl] for lvl in self.levels]}


def _check_size(total: int, cap: int | None) -> None:
    if cap is not None and total > cap:
        raise ResourceBound(f"more than {cap} chains; raise the cap or lower the degree bound")


def right_chains(alg: MonomialAlgebra, N: int, max_chains: int | None = DEFAULT_MAX_CHAINS) -> ChainTable:
    levels: list[list[Chain]] = []
    lvl = [Chain(alg.arrow_path(a.id), 0, tail=alg.arrow_path(a.id), prefix=alg.trivial(a.target))
           for a in alg.quiver.arrows]
    lvl.sort(key=lambda c: c.path.key)
    total = len(lvl)
    for n in range(N + 1):
        if n:
            nxt = []
            for c in lvl:
                for q in right_cofactors(alg, c.tail):
                    nxt.append(Chain(alg.compose(c.path, q), n, tail=q, prefix=c.path))
            nxt.sort(key=lambda c: c.path.key)
            lvl = nxt
            total += len(lvl)
            _check_size(total, max_chains)
        levels.append(lvl)
    return ChainTable(N, levels)


def left_chains(alg: MonomialAlgebra, N: int, max_chains: int | None = DEFAULT_MAX_CHAINS) -> ChainTable:
    levels: list[list[Chain]] = []
    lvl = [Chain(alg.arrow_path(a.id), 0, head=alg.arrow_path(a.id), suffix=alg.trivial(a.source))
           for a in alg.quiver.arrows]
    lvl.sort(key=lambda c: c.path.key)
    total = len(lvl)
    for n in range(N + 1):
        if n:
            nxt = []
            for c in lvl:
                for q in left_cofactors(alg, c.head):
                    nxt.append(Chain(alg.compose(q, c.path), n, head=q, suffix=c.path))
            nxt.sort(key=lambda c: c.path.key)
            lvl = nxt
            total += len(lvl)
            _check_size(total, max_chains)
        levels.append(lvl)
    return ChainTable(N, levels)


def chain_table(alg: MonomialAlgebra, N: int, max_chains: int | None = DEFAULT_MAX_CHAINS) -> ChainTable:
    """Right chains with heads and right-divisor chains filled in from the left table.

    Raises InvariantViolation if the two tables disagree as path sets.
    """
    key = ("chains", N)
    got = alg._cache.get(key)
    if got is not None:
        return got
    right = right_chains(alg, N, max_chains)
    left = left_chains(alg, N, max_chains)
    levels = []
    for n in range(N + 1):
        lmap = {c.path: c for c in left[n]}
        if set(lmap) != {c.path for c in right[n]}:
            raise InvariantViolation(f"left and right chains differ in degree {n} for {alg.name or alg}")
        levels.append([Chain(c.path, n, c.tail, lmap[c.path].head, c.prefix, lmap[c.path].suffix)
                       for c in right[n]])
    table = ChainTable(N, levels)
    alg._cache[key] = table
    return table


def recognize(alg: MonomialAlgebra, p: Path) -> Chain | None:
    """Chain structure of p (right version), or None if p is not a chain.

    Greedy: at most one right cofactor of the current tail is a prefix of the
    remaining arrows, since cofactors are minimal.
    """
    if p.is_trivial:
        return None
    cache = alg._cache.setdefault("recognize", {})
    if p.arrows in cache:
        return cache[p.arrows]
    arrows = p.arrows
    tail = alg.make_path(arrows[:1])
    prefix = alg.trivial(tail.target)
    pos, deg = 1, 0
    res: Chain | None = None
    while True:
        if pos == len(arrows):
            res = Chain(p, deg, tail=tail, prefix=prefix)
            break
        step = None
        for q in right_cofactors(alg, tail):
            if arrows[pos:pos + len(q)] == q.arrows:
                step = q
                break
        if step is None:
            break
        prefix = alg.make_path(arrows[:pos])
        pos += len(step)
        tail = step
        deg += 1
    cache[p.arrows] = res
    return res


def recognize_left(alg: MonomialAlgebra, p: Path) -> Chain | None:
    if p.is_trivial:
        return None
    arrows = p.arrows
    head = alg.make_path(arrows[-1:])
    end, deg = len(arrows) - 1, 0
    suffix = alg.trivial(head.source)
    while end > 0:
        step = None
        for q in left_cofactors(alg, head):
            if end - len(q) >= 0 and arrows[end - len(q):end] == q.arrows:
                step = q
                break
        if step is None:
            return None
        suffix = alg.make_path(arrows[end:])
        end -= len(step)
        head = step
        deg += 1
    return Chain(p, deg, head=head, suffix=suffix)


def tor_dims(alg: MonomialAlgebra, N: int) -> list[int]:
    """[dim Tor_0, ..., dim Tor_{N+1}]."""
    t = right_chains(alg, N)
    return [len(alg.quiver.vertices)] + t.counts()


def syzygy_decomposition(alg: MonomialAlgebra, n: int) -> list[Path]:
    """Tails t of the (n-1)-chains; the n-th syzygy of k is the sum of the t·Λ."""
    if n < 1:
        raise ValueError("n >= 1")
    t = right_chains(alg, n - 1)
    return sorted(c.tail for c in t[n - 1])


def syzygy_decomposition_left(alg: MonomialAlgebra, n: int) -> list[Path]:
    t = left_chains(alg, n - 1)
    return sorted(c.head for c in t[n - 1])


@dataclass(frozen=True)
class DifferentialEntry:
    source: Path        # chain of degree n
    target: Path        # chain of degree n-1 (trivial path for n = 0)
    coefficient: Path   # algebra element multiplying on the right


def anick_differential(alg: MonomialAlgebra, n: int, table: ChainTable | None = None) -> list[DifferentialEntry]:
    """d(γ ⊗ 1) = γ' ⊗ t_γ, one entry per n-chain."""
    table = table or right_chains(alg, n)
    return [DifferentialEntry(c.path, c.prefix, c.tail) for c in table[n]]


def anick_d_squared_zero(alg: MonomialAlgebra, N: int) -> bool:
    """Check d∘d = 0: the tail of the prefix times the tail vanishes in the algebra."""
    t = right_chains(alg, N)
    for n in range(1, N + 1):
        prev = {c.path: c for c in t[n - 1]}
        for c in t[n]:
            pc = prev[c.prefix]
            if alg.multiply(pc.tail, c.tail) is not None:
                return False
    return True
