"""Minimal zero cofactors, perfect pairs/paths/cycles and perfect walks."""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .algebra import MonomialAlgebra, Path
from .errors import InvalidAlgebra, NotPerfect


def right_cofactors(alg: MonomialAlgebra, p: Path) -> tuple[Path, ...]:
    """R(p): nonzero q with pq = 0 and pq' != 0 for every proper left divisor q'."""
    cache = alg._cache.setdefault("R", {})
    got = cache.get(p.arrows)
    if got is not None:
        return got
    if p.is_trivial or alg.is_zero(p):
        raise InvalidAlgebra(f"cofactors need a nonzero nontrivial path, got {p}")
    aut = alg.automaton
    # only the last maxRelLen-1 arrows of p can take part in a straddling relation
    window = p.arrows[-(alg.max_rel_len - 1):] if alg.max_rel_len > 1 else ()
    st, _ = aut.run(window)
    out: list[Path] = []
    stack = [((), st, p.source)]
    while stack:
        q, st, v = stack.pop()
        for b in alg.quiver.into[v]:
            s2 = aut.step(st, b.id)
            q2 = q + (b.id,)
            if aut.hit[s2]:
                if not alg.is_zero(q2):
                    out.append(alg.make_path(q2))
            else:
                stack.append((q2, s2, b.source))
    res = tuple(sorted(out))
    cache[p.arrows] = res
    return res


def left_cofactors(alg: MonomialAlgebra, p: Path) -> tuple[Path, ...]:
    """L(p): nonzero q with qp = 0, minimal over right divisors of q."""
    cache = alg._cache.setdefault("L", {})
    got = cache.get(p.arrows)
    if got is not None:
        return got
    if p.is_trivial or alg.is_zero(p):
        raise InvalidAlgebra(f"cofactors need a nonzero nontrivial path, got {p}")
    window = p.arrows[: max(alg.max_rel_len - 1, 0)]
    out: list[Path] = []
    stack = [((), p.target)]
    while stack:
        q, v = stack.pop()
        for b in alg.quiver.out_of[v]:
            q2 = (b.id,) + q
            if alg.is_zero(q2):
                continue
            if alg.is_zero(q2 + window):
                out.append(alg.make_path(q2))
            else:
                stack.append((q2, b.target))
    res = tuple(sorted(out))
    cache[p.arrows] = res
    return res


@dataclass(frozen=True)
class CofactorSets:
    path: Path
    L: tuple[Path, ...]
    R: tuple[Path, ...]


def cofactors(alg: MonomialAlgebra, p: Path) -> CofactorSets:
    return CofactorSets(p, left_cofactors(alg, p), right_cofactors(alg, p))


def successor(alg: MonomialAlgebra, p: Path) -> Path | None:
    """q with (p, q) a perfect pair, if any."""
    r = right_cofactors(alg, p)
    if len(r) == 1 and left_cofactors(alg, r[0]) == (p,):
        return r[0]
    return None


def predecessor(alg: MonomialAlgebra, q: Path) -> Path | None:
    l_ = left_cofactors(alg, q)
    if len(l_) == 1 and right_cofactors(alg, l_[0]) == (q,):
        return l_[0]
    return None


@dataclass(frozen=True)
class PerfectCycle:
    paths: tuple[Path, ...]

    @property
    def period(self) -> int:
        return len(self.paths)

    @property
    def arrow_length(self) -> int:
        return sum(len(p) for p in self.paths)

    def word(self) -> tuple[str, ...]:
        out: tuple[str, ...] = ()
        for p in self.paths:
            out += p.arrows
        return out

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.paths) + ")"


def _perfect_data(alg: MonomialAlgebra):
    got = alg._cache.get("perfect")
    if got is not None:
        return got
    succ = {}
    for p in alg.nonzero_paths():
        q = successor(alg, p)
        if q is not None:
            succ[p] = q
    on_cycle: set[Path] = set()
    cycles: list[PerfectCycle] = []
    done: set[Path] = set()
    for p in sorted(succ):
        if p in done:
            continue
        # walk forward; the map is injective so we either close up or stop
        trail = [p]
        pos = {p: 0}
        cur = p
        while True:
            nxt = succ.get(cur)
            if nxt is None or nxt in done:
                break
            if nxt in pos:
                cyc = trail[pos[nxt]:]
                on_cycle.update(cyc)
                k = min(range(len(cyc)), key=lambda i: [x.key for x in cyc[i:] + cyc[:i]])
                cycles.append(PerfectCycle(tuple(cyc[k:] + cyc[:k])))
                break
            pos[nxt] = len(trail)
            trail.append(nxt)
            cur = nxt
        done.update(trail)
    cycles.sort(key=lambda c: [x.key for x in c.paths])
    res = (succ, frozenset(on_cycle), tuple(cycles))
    alg._cache["perfect"] = res
    return res


def perfect_paths(alg: MonomialAlgebra) -> list[Path]:
    return sorted(_perfect_data(alg)[1])


def is_perfect(alg: MonomialAlgebra, p: Path) -> bool:
    return p in _perfect_data(alg)[1]


def perfect_cycles(alg: MonomialAlgebra) -> list[PerfectCycle]:
    return list(_perfect_data(alg)[2])


@dataclass(frozen=True)
class PeriodData:
    cycles: tuple[PerfectCycle, ...]
    ell: int | None


def period(alg: MonomialAlgebra) -> PeriodData:
    cyc = tuple(perfect_cycles(alg))
    if not cyc:
        return PeriodData(cyc, None)
    return PeriodData(cyc, lcm(*(c.period for c in cyc)))


def extend_walk(alg: MonomialAlgebra, p: Path, direction: str, length: int) -> tuple[Path, ...]:
    """Perfect walk of the given length starting (right) or ending (left) at p."""
    if not is_perfect(alg, p):
        raise NotPerfect(f"{p} is not perfect")
    succ = _perfect_data(alg)[0]
    walk = [p]
    if direction == "right":
        while len(walk) < length:
            walk.append(succ[walk[-1]])
        return tuple(walk)
    if direction == "left":
        while len(walk) < length:
            walk.append(predecessor(alg, walk[-1]))
        return tuple(reversed(walk))
    raise ValueError("direction must be 'left' or 'right'")


def concat(paths) -> tuple[str, ...]:
    out: tuple[str, ...] = ()
    for p in paths:
        out += p.arrows
    return out
