"""Periodicity data for the seven-arrow cycle algebra (or any named algebra)."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from monofg.gorenstein import decide
from monofg.named import by_name
from monofg.periodicity import Periodicity


@dataclass
class ReportConfig:
    name: str = "gss"
    max_n: int = 30


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--name", default=ReportConfig.name)
    ap.add_argument("--max-n", type=int, default=ReportConfig.max_n)
    a = ap.parse_args(argv)
    cfg = ReportConfig(a.name, a.max_n)

    alg = by_name(cfg.name)
    v = decide(alg)
    print(f"{alg.name}: {v.kind}, dimension {v.dimension}")
    P = Periodicity(alg, v)
    if not P.applicable:
        print("no periodicity data (finite global dimension or not Gorenstein)")
        return 0
    for b in P.branches():
        print(f"branch {b.index}: word {b.word}, gcd {b.gcd}, semigroup {b.semigroup.describe()}, "
              f"frobenius {b.semigroup.frobenius}, |t| = {b.t_degree}")
    print("ring:", P.ring_report()["presentation"])
    chi = P.build_chi()
    print(f"chi = {chi.chi}  (degree {chi.degree})")
    rep = P.verify_ext_periodicity(range(1, cfg.max_n + 1), chi.chi)
    print(" n  src  tgt  rank  inj  surj")
    for r in rep["rows"]:
        print(f"{r['n']:2d} {r['dimSource']:4d} {r['dimTarget']:4d} {r['rank']:5d}  {str(r['injective'])[0]}    "
              f"{str(r['surjective'])[0]}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
