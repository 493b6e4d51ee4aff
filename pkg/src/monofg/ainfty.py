"""Higher products on Ext(k, k) of a monomial algebra.

An element of Ext^n (n >= 1) is a combination of duals of (n-1)-chains.  The
product m_n of chain duals is, up to sign, the dual of the concatenation of
the chains *in the order the arguments are written* when that concatenation
is a chain of degree r_1 + ... + r_n + 1, and zero otherwise.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import Iterable, Sequence

from .algebra import INCOMPOSABLE, MonomialAlgebra, Path
from .anick import chain_table, recognize
from .errors import DegreeMismatch, NotSymmetric, OddDegree


@dataclass(frozen=True)
class ExtElement:
    degree: int
    coeffs: tuple[tuple[Path, Fraction], ...]

    @staticmethod
    def build(degree: int, coeffs: dict) -> "ExtElement":
        items = tuple(sorted(((p, Fraction(c)) for p, c in coeffs.items() if c), key=lambda x: x[0].key))
        return ExtElement(degree, items)

    @property
    def support(self) -> dict[Path, Fraction]:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "ExtElement") -> "ExtElement":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise DegreeMismatch("adding elements of different degrees")
        d = defaultdict(Fraction, self.coeffs)
        for p, c in other.coeffs:
            d[p] += c
        return ExtElement.build(self.degree, d)

    def scale(self, c) -> "ExtElement":
        return ExtElement.build(self.degree, {p: v * c for p, v in self.coeffs})

    def __neg__(self) -> "ExtElement":
        return self.scale(-1)

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        return self + (-other)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for p, c in self.coeffs:
            s = "" if c == 1 else "-" if c == -1 else f"{c}*"
            parts.append(f"{s}({p})^v")
        return " + ".join(parts).replace("+ -", "- ")

    def as_dict(self) -> dict:
        return {"degree": self.degree, "terms": [[str(p), str(c)] for p, c in self.coeffs]}


def zero(degree: int) -> ExtElement:
    return ExtElement(degree, ())


def sign_exponent(rs: Sequence[int]) -> int:
    n = len(rs)
    s = sum(rs[i] * (rs[j] + 1) for i in range(n) for j in range(i + 1, n))
    return s + rs[0] + sum(rs)


def closed_form_exponent(rs: Sequence[int]) -> int:
    n = len(rs)
    return n * rs[0] + rs[0] * rs[-1] + rs[0] + rs[-1]


@dataclass
class CommutatorResult:
    value: ExtElement
    summands: list[ExtElement]


class ExtAlgebra:
    """Products and audits over a fixed monomial algebra."""

    def __init__(self, alg: MonomialAlgebra):
        self.alg = alg
        self._fact_memo: dict = {}

    # --- elements ------------------------------------------------------------
    def chain_degree(self, p: Path) -> int | None:
        c = recognize(self.alg, p)
        return None if c is None else c.degree

    def dual(self, p: Path | str, coeff=1) -> ExtElement:
        if isinstance(p, str):
            p = self.alg.path(p)
        if p.is_trivial:
            return ExtElement.build(0, {p: coeff})
        d = self.chain_degree(p)
        if d is None:
            raise ValueError(f"{p} is not an Anick chain")
        return ExtElement.build(d + 1, {p: coeff})

    def unit(self) -> ExtElement:
        return ExtElement.build(0, {self.alg.trivial(v): 1 for v in self.alg.quiver.vertices})

    # --- products ------------------------------------------------------------
    def _concat(self, paths: Sequence[Path]):
        cur = paths[0]
        for p in paths[1:]:
            cur = self.alg.compose(cur, p)
            if cur is INCOMPOSABLE:
                return None
        return cur

    def basis_product(self, paths: Sequence[Path], signed: bool = True) -> tuple[Path, int] | None:
        """m_n on chain duals (all of positive degree): (output chain, sign) or None."""
        w = self._concat(paths)
        if w is None:
            return None
        rs = [self.chain_degree(p) for p in paths]
        if self.chain_degree(w) != sum(rs) + 1:
            return None
        sign = (-1) ** sign_exponent(rs) if signed else 1
        return w, sign

    def m(self, *xs: ExtElement, signed: bool = True) -> ExtElement:
        n = len(xs)
        if n < 2:
            raise ValueError("m_n needs n >= 2 (m_1 = 0)")
        out_deg = sum(x.degree for x in xs) + 2 - n
        if any(x.degree == 0 for x in xs):
            if n > 2:
                return zero(out_deg)
            return self._unit_product(xs[0], xs[1])
        acc: dict[Path, Fraction] = defaultdict(Fraction)
        for combo in iproduct(*(x.coeffs for x in xs)):
            paths = [p for p, _ in combo]
            res = self.basis_product(paths, signed)
            if res is None:
                continue
            w, sign = res
            c = Fraction(sign)
            for _, v in combo:
                c *= v
            acc[w] += c
        return ExtElement.build(out_deg, acc)

    def _unit_product(self, x: ExtElement, y: ExtElement) -> ExtElement:
        acc: dict[Path, Fraction] = defaultdict(Fraction)
        for (p, a), (q, b) in iproduct(x.coeffs, y.coeffs):
            w = self.alg.compose(p, q)
            if w is not INCOMPOSABLE:
                acc[w] += a * b
        return ExtElement.build(x.degree + y.degree, acc)

    def m2(self, x: ExtElement, y: ExtElement) -> ExtElement:
        return self.m(x, y)

    def concat_product(self, x: ExtElement, y: ExtElement) -> ExtElement:
        """Unsigned concatenation product (the sign-free convention)."""
        return self.m(x, y, signed=False)

    def power(self, x: ExtElement, k: int, signed: bool = False) -> ExtElement:
        out = x
        for _ in range(k - 1):
            out = self.m(out, x, signed=signed)
        return out

    # --- commutators ---------------------------------------------------------
    def commutator(self, a: ExtElement, xs: Sequence[ExtElement]) -> CommutatorResult:
        n = len(xs)
        summands = []
        total = None
        running = 0
        for i in range(n + 1):
            if i:
                running += xs[i - 1].degree
            sign = (-1) ** (i + a.degree * running)
            args = list(xs[:i]) + [a] + list(xs[i:])
            term = self.m(*args).scale(sign)
            summands.append(term)
            total = term if total is None else total + term
        if a.degree % 2 == 0:
            for i in range(1, n):
                if not summands[i].is_zero():
                    raise AssertionError(
                        f"even-degree element in middle slot {i} gave a nonzero product")
        return CommutatorResult(total, summands)

    # --- audits --------------------------------------------------------------
    def _chains_by_ext_degree(self, max_ext: int) -> list[list[Path]]:
        t = chain_table(self.alg, max_ext - 1)
        return [[]] + [t.paths(r) for r in range(max_ext)]

    def composable_tuples(self, max_total: int, max_arity: int, min_arity: int = 2) -> Iterable[tuple[Path, ...]]:
        """Sequences of chains, consecutive ones composable, sum of Ext degrees <= max_total."""
        by_deg = self._chains_by_ext_degree(max_total)
        pool = [(p, d) for d in range(1, max_total + 1) for p in by_deg[d]]
        by_target: dict[str, list[tuple[Path, int]]] = defaultdict(list)
        for p, d in pool:
            by_target[p.target].append((p, d))

        def rec(seq, deg):
            if len(seq) >= min_arity:
                yield tuple(seq)
            if len(seq) == max_arity:
                return
            for p, d in by_target[seq[-1].source]:
                if deg + d <= max_total:
                    seq.append(p)
                    yield from rec(seq, deg + d)
                    seq.pop()

        for p, d in pool:
            yield from rec([p], d)

    def vanishing_audit(self, max_total: int = 14, max_arity: int = 6) -> dict:
        violations, sign_mismatch = [], []
        evaluated = nonzero = 0
        for tup in self.composable_tuples(max_total, max_arity):
            evaluated += 1
            rs = [self.chain_degree(p) for p in tup]
            res = self.basis_product(tup)
            if res is None:
                continue
            nonzero += 1
            n = len(tup)
            # Ext degree r+1 is even exactly when r is odd
            evens = [i for i, r in enumerate(rs) if r % 2 == 1]
            ok = True
            if len(evens) >= 3:
                ok = False
            elif len(evens) == 2 and evens != [0, n - 1]:
                ok = False
            elif len(evens) == 1 and evens[0] not in (0, n - 1):
                ok = False
            if not ok:
                violations.append([str(p) for p in tup])
            if (sign_exponent(rs) - closed_form_exponent(rs)) % 2:
                sign_mismatch.append([str(p) for p in tup])
        return {"evaluated": evaluated, "nonzero": nonzero,
                "violations": violations, "signMismatches": sign_mismatch}

    def stasheff_defects(self, max_total: int = 10, max_arity: int = 5) -> list[tuple[list[str], int]]:
        """Tuples where sum (-1)^(rs+t+koszul) m(id^r, m_s, id^t) is nonzero."""
        bad = []
        for tup in self.composable_tuples(max_total, max_arity, min_arity=3):
            n = len(tup)
            degs = [self.chain_degree(p) + 1 for p in tup]
            total = 0
            for s in range(2, n):
                for r in range(0, n - s + 1):
                    t = n - r - s
                    inner = self.basis_product(tup[r:r + s])
                    if inner is None:
                        continue
                    w, sg = inner
                    outer = self.basis_product(tup[:r] + (w,) + tup[r + s:])
                    if outer is None:
                        continue
                    koszul = s * sum(degs[:r])
                    total += (-1) ** (r * s + t + koszul) * sg * outer[1]
            if total:
                bad.append(([str(p) for p in tup], total))
        return bad

    # --- centrality ------------------------------------------------------------
    def centrality_check(self, a: ExtElement, D: int) -> dict:
        if a.degree % 2 or a.degree < 2:
            raise OddDegree("centrality check needs even degree >= 2")
        for p, _ in a.coeffs:
            if p.source != p.target:
                raise NotSymmetric(f"{p} is not a closed path")
        ra = a.degree - 1
        table = chain_table(self.alg, D - 1)
        supp = a.support
        left: dict[tuple, dict[Path, Fraction]] = defaultdict(lambda: defaultdict(Fraction))
        right: dict[tuple, dict[Path, Fraction]] = defaultdict(lambda: defaultdict(Fraction))
        for deg in range(ra + 1, D):
            want = deg - ra - 1
            for delta in table.paths(deg):
                w = delta.arrows
                for g, c in supp.items():
                    k = len(g)
                    if len(w) > k and w[:k] == g.arrows:
                        for tup in self._factorizations(w[k:], want):
                            left[tup][delta] += c
                    if len(w) > k and w[-k:] == g.arrows:
                        for tup in self._factorizations(w[:-k], want):
                            right[tup][delta] += c
        for tup in sorted(set(left) | set(right), key=lambda t: [p.key for p in t]):
            lv = {p: v for p, v in left.get(tup, {}).items() if v}
            rv = {p: v for p, v in right.get(tup, {}).items() if v}
            if lv != rv:
                return {"pass": False, "counterexample": {
                    "tuple": [str(p) for p in tup],
                    "aTimes": {str(p): str(v) for p, v in lv.items()},
                    "timesA": {str(p): str(v) for p, v in rv.items()}}}
        return {"pass": True, "checkedTuples": len(set(left) | set(right)), "D": D}

    def commutator_sweep(self, a: ExtElement, D: int) -> dict:
        """Evaluate [a; x_1, ..., x_k] on every chain tuple where some term can be nonzero.

        A term m(..., a, ...) is nonzero only if the concatenation is a chain
        of degree one more than the summed input chain degrees, so the
        candidates are read off such factorizations of chains of Ext degree
        below D that contain a support element of a.  Every other tuple has
        all of its terms equal to zero.  Total degree means the sum of the
        input Ext degrees, a included.
        """
        ra = a.degree - 1
        table = chain_table(self.alg, D - 1)
        tuples: set[tuple[Path, ...]] = set()
        for deg in range(ra + 1, D):
            want = deg - 1 - ra
            for delta in table.paths(deg):
                w = delta.arrows
                for g in a.support:
                    k = len(g)
                    for i in range(len(w) - k + 1):
                        if w[i:i + k] != g.arrows:
                            continue
                        # input degrees sum to want + (number of pieces)
                        budget = D - a.degree - want
                        if budget < 1:
                            continue
                        for wl in range(want + 1):
                            for kl in range(budget + 1):
                                lefts = [t for t in self._factorizations(w[:i], wl, kl) if len(t) == kl]
                                if not lefts:
                                    continue
                                for right in self._factorizations(w[i + k:], want - wl, budget - kl):
                                    for left in lefts:
                                        if left or right:
                                            tuples.add(left + right)
        nonzero = []
        evaluated = 0
        for tup in sorted(tuples, key=lambda t: [p.key for p in t]):
            if sum(self.chain_degree(p) + 1 for p in tup) + a.degree > D:
                continue
            evaluated += 1
            res = self.commutator(a, [self.dual(p) for p in tup])
            if not res.value.is_zero():
                nonzero.append({"tuple": [str(p) for p in tup], "value": str(res.value)})
        return {"evaluated": evaluated, "nonzero": nonzero, "D": D}

    def _factorizations(self, word: tuple[str, ...], want: int | None,
                        max_pieces: int | None = None) -> list[tuple[Path, ...]]:
        """Splittings of word into chains whose degrees sum to want (any total when None).

        At most max_pieces chains when given.  Memoised on the suffix and the
        remaining budgets across calls.
        """
        alg = self.alg
        memo = self._fact_memo
        free = want is None
        cap = len(word) if max_pieces is None else max_pieces

        def rec(suffix: tuple[str, ...], rem: int, pieces: int) -> list[tuple[Path, ...]]:
            if not suffix:
                return [()] if free or rem == 0 else []
            if pieces == 0:
                return []
            key = (suffix, None if free else rem, pieces)
            got = memo.get(key)
            if got is not None:
                return got
            out = []
            for j in range(1, len(suffix) + 1):
                piece = alg.make_path(suffix[:j])
                c = recognize(alg, piece)
                if c is None or (not free and c.degree > rem):
                    continue
                for rest in rec(suffix[j:], rem if free else rem - c.degree, pieces - 1):
                    out.append((piece,) + rest)
            memo[key] = out
            return out

        return rec(tuple(word), 0 if free else want, cap)
