"""Minimal bimodule complex, Hochschild cohomology dimensions, and a bar-complex oracle.

Indexing: the generator e_t ⊗ γ ⊗ e_s for γ ∈ C_n lives in homological degree
n + 1, with the vertices (C_{-1}) in degree 0.  Cochains of degree k are
functions on C_{k-1} with values in the parallel paths.
"""
from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass, field

from .algebra import MonomialAlgebra, Path
from .anick import chain_table
from .errors import InvariantViolation, NotApplicable, NotGorensteinError, TooLarge
from .gorenstein import FINITE, NOT_GORENSTEIN, decide
from .linalg import rank


@dataclass(frozen=True)
class Term:
    coeff: int
    left: Path
    gen: Path       # chain one degree lower (trivial path for degree 0)
    right: Path

    def __str__(self) -> str:
        sign = "+" if self.coeff > 0 else "-"
        mag = "" if abs(self.coeff) == 1 else f"{abs(self.coeff)}"
        return f"{sign}{mag}{self.left}⊗{self.gen}⊗{self.right}"


@dataclass
class ComplexSlice:
    """Cochain map from degree `degree` to `degree + 1`, plus the generator images behind it."""
    degree: int
    domain: list[tuple[Path, Path]]
    codomain: list[tuple[Path, Path]]
    entries: dict[tuple[int, int], int]    # (row in codomain, column in domain) -> value
    images: dict[Path, list[Term]] = field(default_factory=dict)

    def rows(self) -> list[dict[int, int]]:
        """Domain-indexed sparse rows (one per domain basis vector)."""
        out: list[dict[int, int]] = [dict() for _ in self.domain]
        for (r, c), v in self.entries.items():
            out[c][r] = v
        return out

    def rank(self, characteristic: int = 0) -> int:
        return rank(self.rows(), characteristic)

    def to_sparse(self) -> dict:
        return {
            "degree": self.degree,
            "shape": [len(self.codomain), len(self.domain)],
            "domain": [[str(g), str(q)] for g, q in self.domain],
            "codomain": [[str(g), str(q)] for g, q in self.codomain],
            "entries": [[r, c, v] for (r, c), v in sorted(self.entries.items())],
        }


def _generators(alg: MonomialAlgebra, n: int, table=None) -> list[Path]:
    """Basis chains for homological degree n (vertices when n = 0)."""
    if n == 0:
        return [alg.trivial(v) for v in alg.quiver.vertices]
    table = table or chain_table(alg, n - 1)
    return table.paths(n - 1)


def _sub(alg: MonomialAlgebra, arrows: tuple[str, ...], end_vertex: str) -> Path:
    return alg.make_path(arrows) if arrows else alg.trivial(end_vertex)


def bimodule_images(alg: MonomialAlgebra, n: int) -> dict[Path, list[Term]]:
    """d on the generators of homological degree n >= 1."""
    if n < 1:
        raise ValueError("the differential starts in degree 1")
    table = chain_table(alg, n - 1)
    out: dict[Path, list[Term]] = {}
    if n % 2 == 1:
        # odd Ext degree: strip the head on the left, the tail on the right
        for c in table[n - 1]:
            g = c.path
            out[g] = [Term(1, c.head, c.suffix, alg.trivial(g.source)),
                      Term(-1, alg.trivial(g.target), c.prefix, c.tail)]
        return out
    lower = set(table.paths(n - 2))
    for c in table[n - 1]:
        g, w = c.path, c.path.arrows
        terms = []
        for i in range(len(w)):
            for j in range(i + 1, len(w) + 1):
                mid = alg.make_path(w[i:j])
                if mid not in lower:
                    continue
                left, right = _sub(alg, w[:i], g.target), _sub(alg, w[j:], g.source)
                if alg.is_zero(left) or alg.is_zero(right):
                    continue
                terms.append(Term(1, left, mid, right))
        terms.sort(key=lambda t: (t.left.key, t.gen.key))
        out[g] = terms
    return out


def bimodule_d_squared(alg: MonomialAlgebra, n: int) -> dict:
    """Compose d_{n-1} ∘ d_n at the level of free bimodules (augmentation when n = 1).

    Returns the surviving terms per generator; empty means d∘d = 0.
    """
    upper = bimodule_images(alg, n)
    bad: dict[str, list[str]] = {}
    if n == 1:
        for g, terms in upper.items():
            acc: dict[Path, int] = defaultdict(int)
            for t in terms:
                p = alg.multiply(alg.multiply(t.left, t.gen), t.right)
                if p is not None:
                    acc[p] += t.coeff
            left = {str(p): v for p, v in acc.items() if v}
            if left:
                bad[str(g)] = sorted(left)
        return bad
    lower = bimodule_images(alg, n - 1)
    for g, terms in upper.items():
        acc2: dict[tuple, int] = defaultdict(int)
        for t in terms:
            for u in lower[t.gen]:
                a = alg.multiply(t.left, u.left)
                b = alg.multiply(u.right, t.right)
                if a is None or b is None:
                    continue
                acc2[(a, u.gen, b)] += t.coeff * u.coeff
        left = [f"{v}:{a}⊗{m}⊗{b}" for (a, m, b), v in acc2.items() if v]
        if left:
            bad[str(g)] = sorted(left)
    return bad


def minimality_echo(alg: MonomialAlgebra, n: int) -> bool:
    """Every coefficient pair of the differential lies in the radical of the enveloping algebra."""
    return all(not (t.left.is_trivial and t.right.is_trivial)
               for terms in bimodule_images(alg, n).values() for t in terms)


def _cochain_basis(alg: MonomialAlgebra, gens: list[Path]) -> list[tuple[Path, Path]]:
    return [(g, q) for g in gens for q in alg.parallel_basis(g.target, g.source)]


def cochain_slice(alg: MonomialAlgebra, k: int) -> ComplexSlice:
    """δ^k : Hom(P_k, Λ) -> Hom(P_{k+1}, Λ)."""
    dom = _cochain_basis(alg, _generators(alg, k))
    cod = _cochain_basis(alg, _generators(alg, k + 1))
    cidx = {x: i for i, x in enumerate(cod)}
    by_gen: dict[Path, list[int]] = defaultdict(list)
    for i, (g, _) in enumerate(dom):
        by_gen[g].append(i)
    images = bimodule_images(alg, k + 1)
    entries: dict[tuple[int, int], int] = defaultdict(int)
    for g, terms in images.items():
        for t in terms:
            for col in by_gen.get(t.gen, []):
                q = dom[col][1]
                val = alg.multiply(t.left, q)
                val = None if val is None else alg.multiply(val, t.right)
                if val is None:
                    continue
                entries[(cidx[(g, val)], col)] += t.coeff
    return ComplexSlice(k, dom, cod, {k_: v for k_, v in entries.items() if v}, images)


def bardzell_differential(alg: MonomialAlgebra, n: int) -> ComplexSlice:
    """The slice whose generator images are d_n (n >= 1); the matrix is the dual cochain map."""
    return cochain_slice(alg, n - 1)


def cochain_dims(alg: MonomialAlgebra, N: int) -> list[int]:
    return [len(_cochain_basis(alg, _generators(alg, k))) for k in range(N + 1)]


def hh_dims(alg: MonomialAlgebra, N: int, characteristic: int = 0) -> list[int]:
    """dim HH^n for 0 <= n <= N."""
    dims = cochain_dims(alg, N)
    ranks = [cochain_slice(alg, k).rank(characteristic) for k in range(N + 1)]
    return [dims[k] - ranks[k] - (ranks[k - 1] if k else 0) for k in range(N + 1)]


def euler_check(alg: MonomialAlgebra, N: int, characteristic: int = 0) -> bool:
    dims = cochain_dims(alg, N)
    hh = hh_dims(alg, N, characteristic)
    top = cochain_slice(alg, N).rank(characteristic)
    lhs = sum((-1) ** k * d for k, d in enumerate(dims))
    rhs = sum((-1) ** k * h for k, h in enumerate(hh)) + (-1) ** N * top
    return lhs == rhs


def centre_dim(alg: MonomialAlgebra, characteristic: int = 0) -> int:
    """dim of the centre, solving za = az for all arrows over the loop space ⊕ e_vΛe_v."""
    loops = [p for p in alg.nonzero_basis() if p.source == p.target]
    # one column per equation (arrow, output basis path); rows are the loop basis
    eqs: dict[tuple[str, Path], int] = {}
    rows = []
    for p in loops:
        row: dict[int, int] = defaultdict(int)
        for a in alg.quiver.arrows:
            ap = alg.arrow_path(a.id)
            for val, sgn in ((alg.multiply(p, ap), 1), (alg.multiply(ap, p), -1)):
                if val is None:
                    continue
                col = eqs.setdefault((a.id, val), len(eqs))
                row[col] += sgn
        rows.append({c: v for c, v in row.items() if v})
    return len(loops) - rank(rows, characteristic)


def bar_oracle(alg: MonomialAlgebra, N: int, characteristic: int = 0, cap: int = 8) -> list[int]:
    """dim HH^n from the reduced bar complex relative to the vertex idempotents (tiny algebras)."""
    basis = alg.nonzero_basis()
    if len(basis) > cap or N > cap:
        raise TooLarge(f"bar oracle limited to dim <= {cap} and degree <= {cap} (dim {len(basis)}, N {N})")
    rad = alg.nonzero_paths()

    def tuples(n: int):
        if n == 0:
            return [()]
        out = []
        for tup in itertools.product(rad, repeat=n):
            if all(tup[i].source == tup[i + 1].target for i in range(n - 1)):
                out.append(tup)
        return out

    def ends(tup) -> tuple[str, str]:
        return tup[0].target, tup[-1].source

    def cbasis(n: int):
        if n == 0:
            return [((v,), q) for v in alg.quiver.vertices for q in alg.parallel_basis(v, v)]
        return [(tup, q) for tup in tuples(n) for q in alg.parallel_basis(*ends(tup))]

    bases = [cbasis(n) for n in range(N + 2)]

    def slice_rank(n: int) -> int:
        dom, cod = bases[n], bases[n + 1]
        cidx = {x: i for i, x in enumerate(cod)}
        # f = (x, q) evaluated on every (n+1)-tuple
        rows: list[dict[int, int]] = [defaultdict(int) for _ in dom]
        didx = defaultdict(list)
        for i, (tup, q) in enumerate(dom):
            didx[tup].append((i, q))
        for tup in tuples(n + 1):
            t_, s_ = ends(tup)
            pieces = []
            # x_1 f(x_2..)
            rest = tup[1:] if n else (tup[0].source,)
            pieces.append((1, tup[0], rest, None))
            for i in range(n):
                prod = alg.multiply(tup[i], tup[i + 1])
                if prod is None:
                    continue
                pieces.append(((-1) ** (i + 1), None, tup[:i] + (prod,) + tup[i + 2:], None))
            rest = tup[:-1] if n else (tup[0].target,)
            pieces.append(((-1) ** (n + 1), None, rest, tup[-1]))
            for sgn, lft, arg, rgt in pieces:
                for col, q in didx.get(arg, []):
                    val = q
                    if lft is not None:
                        val = alg.multiply(lft, val)
                    if val is not None and rgt is not None:
                        val = alg.multiply(val, rgt)
                    if val is None:
                        continue
                    rows[col][cidx[(tup, val)]] += sgn
        return rank([{c: v for c, v in r.items() if v} for r in rows], characteristic)

    ranks = [slice_rank(n) for n in range(N + 1)]
    return [len(bases[n]) - ranks[n] - (ranks[n - 1] if n else 0) for n in range(N + 1)]


def hh_periodicity_report(alg: MonomialAlgebra, n_range, characteristic: int = 0, p: int | None = None) -> dict:
    """Check dim HH^n = dim HH^{n+p} on the range, where p is the degree of the global class chi."""
    verdict = decide(alg)
    if verdict.kind == NOT_GORENSTEIN:
        raise NotGorensteinError(f"{alg.name or 'algebra'} is not Gorenstein; no periodicity report")
    if verdict.kind == FINITE:
        raise NotApplicable("finite global dimension: Hochschild cohomology vanishes eventually, no period")
    if p is None:
        from .periodicity import Periodicity
        p = Periodicity(alg, verdict).build_chi().degree
    ns = list(n_range)
    top = max(ns) + p
    dims = hh_dims(alg, top, characteristic)
    d = verdict.dimension
    rows = [{"n": n, "dim": dims[n], "dimShifted": dims[n + p], "equal": dims[n] == dims[n + p]}
            for n in ns if n >= d + 1]
    return {
        "dimension": d,
        "period": p,
        "characteristic": characteristic,
        "indexing": "generators for C_n sit in homological degree n+1",
        "dims": dims,
        "rows": rows,
        "periodic": all(r["equal"] for r in rows),
        "tate": "beyond the Gorenstein dimension, Tate-Hochschild cohomology agrees with the periodic part "
                "of Hochschild cohomology (stated, not computed)",
    }


def export_slices(alg: MonomialAlgebra, N: int) -> str:
    """All cochain slices up to degree N as deterministic JSON."""
    doc = {"algebra": alg.describe(), "slices": [cochain_slice(alg, k).to_sparse() for k in range(N + 1)]}
    return json.dumps(doc, sort_keys=True, ensure_ascii=False)


def check_complex(alg: MonomialAlgebra, N: int) -> None:
    """Raise InvariantViolation if d∘d ≠ 0 or the differential is not minimal in degrees 1..N."""
    for n in range(1, N + 1):
        bad = bimodule_d_squared(alg, n)
        if bad:
            raise InvariantViolation(f"d∘d != 0 in degree {n}: {bad}")
        if not minimality_echo(alg, n):
            raise InvariantViolation(f"non-radical coefficient in degree {n}")
