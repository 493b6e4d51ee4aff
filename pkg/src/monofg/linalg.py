"""Exact rank of sparse integer matrices over Q or a prime field."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

SparseRow = Mapping[int, int]


def rank(rows: Iterable[SparseRow], characteristic: int = 0) -> int:
    """Rank of the matrix given as sparse rows {column: entry}.

    Gaussian elimination with rows kept sparse; entries are Fractions in
    characteristic 0 and residues mod p otherwise.
    """
    p = characteristic
    if p:
        pivots: dict[int, dict[int, int]] = {}
        for row in rows:
            r = {c: v % p for c, v in row.items() if v % p}
            while r:
                c = min(r)
                piv = pivots.get(c)
                if piv is None:
                    inv = pow(r[c], -1, p)
                    pivots[c] = {k: (v * inv) % p for k, v in r.items()}
                    break
                f = r[c]
                for k, v in piv.items():
                    nv = (r.get(k, 0) - f * v) % p
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
        return len(pivots)
    qpiv: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            c = min(r)
            piv = qpiv.get(c)
            if piv is None:
                lead = r[c]
                qpiv[c] = {k: v / lead for k, v in r.items()}
                break
            f = r[c]
            for k, v in piv.items():
                nv = r.get(k, 0) - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(qpiv)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True
