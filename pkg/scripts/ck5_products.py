"""Higher products on the CK5 Koszul dual: the non-vanishing family and the audit."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from monofg.ainfty import ExtAlgebra
from monofg.named import by_name


@dataclass
class ProductConfig:
    max_arity: int = 12
    audit_total: int = 14
    audit_arity: int = 6


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-arity", type=int, default=ProductConfig.max_arity)
    ap.add_argument("--audit-total", type=int, default=ProductConfig.audit_total)
    ap.add_argument("--audit-arity", type=int, default=ProductConfig.audit_arity)
    a = ap.parse_args(argv)
    cfg = ProductConfig(a.max_arity, a.audit_total, a.audit_arity)

    E = ExtAlgebra(by_name("ck5"))
    for n in range(5, cfg.max_arity + 1):
        args = [E.dual("d"), E.dual("e")] + [E.dual("abcde")] * (n - 4) + [E.dual("a"), E.dual("b")]
        print(f"m_{n:<2d} -> {E.m(*args)}")
    out = E.vanishing_audit(max_total=cfg.audit_total, max_arity=cfg.audit_arity)
    print(f"audit: {out['evaluated']} tuples, {out['nonzero']} nonzero, "
          f"{len(out['violations'])} violations, {len(out['signMismatches'])} sign mismatches")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
