"""Seeded random monomial algebras for invariant sweeps."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import MonomialAlgebra, Quiver
from .anick import right_chains
from .errors import InfiniteDimensional, InvalidAlgebra, ResourceBound


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = 20240611
    size: int = 60
    max_vertices: int = 6
    max_arrows: int = 10
    max_relations: int = 8
    max_relation_length: int = 5
    # rejection filters keeping the sweep desk-sized
    max_dim: int = 80
    chain_degree: int = 10
    max_chains: int = 4000


def _random_algebra(rng: random.Random, cfg: CorpusConfig, name: str) -> MonomialAlgebra:
    nv = rng.choice([1, 2, 2, 3, 3, 4, 5, 6][: cfg.max_vertices + 2])
    verts = [str(i) for i in range(nv)]
    lo = max(nv - 1, 1)
    na = rng.randint(lo, max(lo, cfg.max_arrows))
    arrows = []
    # spanning tree first so the quiver is connected
    for i in range(1, nv):
        j = rng.randrange(i)
        arrows.append((i, j) if rng.random() < 0.5 else (j, i))
    while len(arrows) < na:
        arrows.append((rng.randrange(nv), rng.randrange(nv)))
    ids = [chr(ord("a") + k) for k in range(len(arrows))]
    arr = [(ids[k], str(s), str(t)) for k, (s, t) in enumerate(arrows)]
    into: dict[str, list[str]] = {}
    for aid, s, t in arr:
        into.setdefault(t, []).append(aid)
    src = {aid: s for aid, s, _ in arr}
    rels = set()
    for _ in range(rng.randint(0, cfg.max_relations) if rng.random() < 0.2 else rng.randint(2, cfg.max_relations)):
        length = rng.randint(2, cfg.max_relation_length)
        w = [rng.choice(ids)]
        while len(w) < length:
            nxt = into.get(src[w[-1]])
            if not nxt:
                break
            w.append(rng.choice(nxt))
        w = tuple(w)
        # reject candidates that break the antichain condition
        if len(w) >= 2 and not any(_is_factor(w, r) or _is_factor(r, w) for r in rels):
            rels.add(w)
    quiver = Quiver(verts, arr)
    # cycles survive random relations most of the time; cut them with extra
    # relations taken from long relation-avoiding walks, up to the cap
    for _ in range(cfg.max_relations + 1):
        try:
            return MonomialAlgebra(quiver, sorted(rels), name=name)
        except InfiniteDimensional:
            pass
        probe = MonomialAlgebra(quiver, sorted(rels), check_finite=False)
        walk = _long_walk(rng, probe, 3 * cfg.max_relation_length)
        if walk is None:
            break
        k = rng.randint(2, min(cfg.max_relation_length, len(walk)))
        i = rng.randint(0, len(walk) - k)
        new = walk[i:i + k]
        rels = {r for r in rels if not _is_factor(new, r)}
        rels.add(new)
        if len(rels) > cfg.max_relations:
            break
    raise InfiniteDimensional("could not cut all cycles within the relation budget")


def _is_factor(u: tuple, w: tuple) -> bool:
    return any(w[i:i + len(u)] == u for i in range(len(w) - len(u) + 1))


def _long_walk(rng: random.Random, alg: MonomialAlgebra, length: int):
    aut = alg.automaton
    for _ in range(50):
        a = rng.choice(alg.quiver.arrows)
        st = aut.step(0, a.id)
        if aut.hit[st]:
            continue
        w, v = [a.id], a.source
        while len(w) < length:
            opts = [b for b in alg.quiver.into[v] if not aut.hit[aut.step(st, b.id)]]
            if not opts:
                break
            b = rng.choice(opts)
            st = aut.step(st, b.id)
            w.append(b.id)
            v = b.source
        if len(w) == length:
            return tuple(w)
    return None


def generate_corpus(cfg: CorpusConfig = CorpusConfig()) -> list[MonomialAlgebra]:
    rng = random.Random(cfg.seed)
    out: list[MonomialAlgebra] = []
    attempts = 0
    while len(out) < cfg.size:
        attempts += 1
        if attempts > 200_000:
            raise RuntimeError("corpus rejection sampling did not converge")
        try:
            alg = _random_algebra(rng, cfg, f"corpus-{cfg.seed}-{len(out)}")
        except (InvalidAlgebra, InfiniteDimensional):
            continue
        if len(alg.nonzero_basis()) > cfg.max_dim:
            continue
        try:
            right_chains(alg, cfg.chain_degree, max_chains=cfg.max_chains)
        except ResourceBound:
            continue
        out.append(alg)
    return out
