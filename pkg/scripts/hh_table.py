"""Hochschild cohomology dimensions, optionally checked against the bar oracle."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from monofg.errors import TooLarge
from monofg.hochschild import bar_oracle, hh_dims
from monofg.named import by_name


@dataclass
class TableConfig:
    names: tuple[str, ...] = ("poly2", "poly3", "a2", "gss")
    max_degree: int = 8
    characteristics: tuple[int, ...] = (0, 2, 3)
    oracle: bool = False


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=list(TableConfig.names))
    ap.add_argument("--max-degree", type=int, default=TableConfig.max_degree)
    ap.add_argument("--char", type=int, action="append", dest="chars")
    ap.add_argument("--oracle", action="store_true")
    a = ap.parse_args(argv)
    cfg = TableConfig(tuple(a.names), a.max_degree, tuple(a.chars or TableConfig.characteristics), a.oracle)

    for name in cfg.names:
        alg = by_name(name)
        for ch in cfg.characteristics:
            dims = hh_dims(alg, cfg.max_degree, ch)
            line = f"{alg.name:12s} char {ch}: {dims}"
            if cfg.oracle:
                try:
                    line += "  oracle " + ("agrees" if bar_oracle(alg, cfg.max_degree, ch) == dims else "DIFFERS")
                except TooLarge:
                    line += "  oracle too large"
            print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
