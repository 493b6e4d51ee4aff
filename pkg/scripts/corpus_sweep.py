"""Sweep the seeded corpus: verdict tally, chain agreement, dual-oracle Tor."""
from __future__ import annotations

import argparse
import collections
from dataclasses import dataclass, fields

from monofg.anick import left_chains, right_chains
from monofg.corpus import CorpusConfig, generate_corpus
from monofg.gg_oracle import gg_tor_dim
from monofg.gorenstein import decide, decide_incremental


@dataclass
class SweepConfig:
    corpus: CorpusConfig
    chain_degree: int = 10
    tor_max: int = 7


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=CorpusConfig.seed)
    ap.add_argument("--size", type=int, default=CorpusConfig.size)
    ap.add_argument("--chain-degree", type=int, default=10)
    ap.add_argument("--tor-max", type=int, default=7)
    a = ap.parse_args(argv)
    cfg = SweepConfig(CorpusConfig(seed=a.seed, size=a.size), a.chain_degree, a.tor_max)

    algs = generate_corpus(cfg.corpus)
    tally = collections.Counter()
    problems = []
    for alg in algs:
        v = decide(alg)
        tally[v.kind] += 1
        if not v.same_as(decide_incremental(alg)):
            problems.append((alg.name, "bounded/incremental"))
        r, l = right_chains(alg, cfg.chain_degree), left_chains(alg, cfg.chain_degree)
        if any(set(r.paths(n)) != set(l.paths(n)) for n in range(cfg.chain_degree + 1)):
            problems.append((alg.name, "left/right chains"))
        for n in range(2, cfg.tor_max + 1):
            if gg_tor_dim(alg, n)[0] != len(r.paths(n - 1)):
                problems.append((alg.name, f"Tor_{n}"))
    print(f"{len(algs)} algebras from seed {cfg.corpus.seed}")
    for kind, cnt in sorted(tally.items()):
        print(f"  {kind:28s} {cnt}")
    print("problems:", problems or "none")
    return 1 if problems else 0


if __name__ == "__main__":
    raise SystemExit(main())
