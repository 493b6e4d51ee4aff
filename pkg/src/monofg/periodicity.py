"""Stable relation cycles, their operators, branches, the class chi, and Ext periodicity."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm
from functools import reduce

from .ainfty import ExtAlgebra, ExtElement, zero
from .algebra import MonomialAlgebra, Path
from .anick import chain_table, recognize, recognize_left
from .cofactors import PerfectCycle, concat, extend_walk, is_perfect, period
from .errors import NotApplicable
from .gorenstein import FINITE, NOT_GORENSTEIN, Verdict, decide
from .linalg import rank
from .semigroup import WindowSemigroup, from_window, normalise


@dataclass(frozen=True)
class StableRelationCycle:
    path: Path
    s: int
    tail_walk: tuple[Path, ...]   # (p_0, ..., p_{s-1}) with t_gamma = p_{s-1}
    head_walk: tuple[Path, ...]   # (q_0, ..., q_{s-1}) with h_gamma = q_0

    @property
    def degree(self) -> int:
        return self.s - 1

    def relations(self) -> list[Path]:
        """The relations r_0 r_2 ... obtained by pairing w_{2k} w_{2k+1}."""
        w = self.tail_walk
        return [Path(w[k].arrows + w[k + 1].arrows, w[k + 1].source, w[k].target) for k in range(0, len(w), 2)]


def _primitive_root(word: tuple[str, ...]) -> tuple[str, ...]:
    n = len(word)
    for k in range(1, n + 1):
        if n % k == 0 and word[:k] * (n // k) == word:
            return word[:k]
    return word


def _least_rotation(word: tuple[str, ...]) -> tuple[str, ...]:
    return min(word[i:] + word[:i] for i in range(len(word)))


def string_class(word: tuple[str, ...]) -> tuple[str, ...]:
    """Canonical name of the bi-infinite periodic string generated by word."""
    return _least_rotation(_primitive_root(word))


class Periodicity:
    """Everything periodic about a Gorenstein monomial algebra of infinite gldim."""

    def __init__(self, alg: MonomialAlgebra, verdict: Verdict | None = None, horizon: int | None = None):
        self.alg = alg
        self.verdict = verdict or decide(alg)
        self.ext = ExtAlgebra(alg)
        pdata = period(alg)
        self.cycles: tuple[PerfectCycle, ...] = pdata.cycles
        self.ell = pdata.ell
        self.applicable = self.verdict.kind not in (FINITE, NOT_GORENSTEIN) and bool(self.cycles)
        self.d = self.verdict.dimension
        if self.applicable:
            self.horizon = horizon if horizon is not None else 6 * self.ell * (self.d + 1)

    def _require(self) -> None:
        if not self.applicable:
            raise NotApplicable(f"{self.alg.name or 'algebra'}: needs Gorenstein with infinite gldim "
                                f"(verdict {self.verdict.kind})")

    # --- admissibility and certification ------------------------------------
    def admissible(self, s: int) -> bool:
        return s % 2 == 0 and s >= self.d + 1 and s % self.ell == 0

    def admissible_range(self, upto: int | None = None) -> list[int]:
        self._require()
        top = self.horizon if upto is None else upto
        return [s for s in range(2, top + 1) if self.admissible(s)]

    def certify(self, p: Path, s: int) -> StableRelationCycle | None:
        """Check all four defining conditions; decompositions recomputed from scratch."""
        if not self.admissible(s):
            return None
        c = recognize(self.alg, p)
        if c is None or c.degree != s - 1:
            return None
        if not is_perfect(self.alg, c.tail):
            return None
        tw = extend_walk(self.alg, c.tail, "left", s)
        if concat(tw) != p.arrows or tw[0] != extend_walk(self.alg, tw[-1], "right", 2)[-1]:
            return None
        lc = recognize_left(self.alg, p)
        if lc is None or lc.degree != s - 1 or not is_perfect(self.alg, lc.head):
            return None
        hw = extend_walk(self.alg, lc.head, "right", s)
        if concat(hw) != p.arrows or hw[-1] != extend_walk(self.alg, hw[0], "left", 2)[0]:
            return None
        return StableRelationCycle(p, s, tw, hw)

    def stable_relation_cycles(self, s: int) -> list[StableRelationCycle]:
        self._require()
        if not self.admissible(s):
            raise ValueError(f"s = {s} is not admissible (even, >= {self.d + 1}, multiple of {self.ell})")
        seen: dict[Path, StableRelationCycle] = {}
        for cyc in self.cycles:
            r = cyc.period
            for off in range(r):
                walk = [cyc.paths[(off + k) % r] for k in range(s)]
                p = self.alg.make_path(concat(walk))
                if p in seen:
                    continue
                src = self.certify(p, s)
                if src is None:
                    raise AssertionError(f"perfect walk {p} failed certification")
                seen[p] = src
        return sorted(seen.values(), key=lambda x: x.path.key)

    def brute_force_cycles(self, s: int) -> list[StableRelationCycle]:
        """Certify every (s-1)-chain directly (small instances only)."""
        self._require()
        table = chain_table(self.alg, s - 1)
        out = [self.certify(c.path, s) for c in table[s - 1]]
        return sorted((x for x in out if x is not None), key=lambda x: x.path.key)

    # --- associated sets and operators ----------------------------------------
    def associated_set(self, src: StableRelationCycle) -> list[Path]:
        w = src.path.arrows
        out: list[Path] = []
        for j in range(len(w)):
            rot = w[j:] + w[:j]
            p = self.alg.make_path(rot)
            if p in out:
                continue
            if self.certify(p, src.s) is not None:
                out.append(p)
        return out

    def chi_operator(self, src: StableRelationCycle) -> ExtElement:
        return ExtElement.build(src.s, {p: 1 for p in self.associated_set(src)})

    def power(self, src: StableRelationCycle, k: int) -> StableRelationCycle:
        p = self.alg.make_path(src.path.arrows * k)
        out = self.certify(p, src.s * k)
        if out is None:
            raise AssertionError("power of a stable relation cycle failed certification")
        return out

    # --- branches -------------------------------------------------------------
    def branches(self) -> list["Branch"]:
        self._require()
        groups: dict[tuple[str, ...], list[PerfectCycle]] = {}
        for cyc in self.cycles:
            groups.setdefault(string_class(cyc.word()), []).append(cyc)
        out = []
        svals = self.admissible_range()
        for idx, key in enumerate(sorted(groups, key=lambda k: (len(k), k))):
            cycs = groups[key]
            lengths: dict[int, int] = {}
            members: dict[int, list[StableRelationCycle]] = {}
            for s in svals:
                srcs = [x for x in self.stable_relation_cycles(s) if string_class(x.path.arrows) == key]
                if srcs:
                    members[s] = srcs
                    lengths[s] = len(srcs[0].path)
            g, norm = normalise(lengths.values())
            sg = from_window(norm)
            t_deg = reduce(gcd, members.keys(), 0)
            out.append(Branch(idx, tuple(cycs), key, g, sg, t_deg, members))
        return out

    def build_chi(self) -> "ChiClass":
        if self.verdict.kind == FINITE:
            return ChiClass(zero(0), None, (), (), ())
        self._require()
        brs = self.branches()
        mins = []
        for b in brs:
            s0 = min(b.members)
            mins.append(b.members[s0][0])
        degs = [x.s for x in mins]
        L = lcm(*degs)
        ms = [L // x for x in degs]
        g = reduce(gcd, ms)
        ms = [m // g for m in ms]
        total = None
        for src, m in zip(mins, ms):
            term = self.chi_operator(self.power(src, m))
            total = term if total is None else total + term
        return ChiClass(total, ms[0] * degs[0], tuple(self.chi_operator(x) for x in mins), tuple(ms),
                        tuple(mins))

    # --- Ext periodicity --------------------------------------------------------
    def ext_map_ranks(self, chi: ExtElement, n: int) -> dict:
        """Rank data of chi·- : Ext^n -> Ext^{n+p} on chain bases."""
        p = chi.degree
        table = chain_table(self.alg, n - 1 + p)
        dom, cod = table.paths(n - 1), table.paths(n - 1 + p)
        idx = {q: i for i, q in enumerate(cod)}
        rows = []
        for q in dom:
            img = self.ext.m2(chi, self.ext.dual(q))
            rows.append({idx[w]: int(c) for w, c in img.coeffs})
        rk = rank(rows)
        return {"n": n, "dimSource": len(dom), "dimTarget": len(cod), "rank": rk,
                "injective": rk == len(dom), "surjective": rk == len(cod)}

    def verify_ext_periodicity(self, n_range, chi: ExtElement | None = None) -> dict:
        chi = chi or self.build_chi().chi
        rows = [self.ext_map_ranks(chi, n) for n in n_range]
        ok = True
        for r in rows:
            if r["n"] >= self.d + 1 and not (r["injective"] and r["surjective"]):
                ok = False
            if r["n"] == self.d and not r["surjective"]:
                ok = False
        return {"degree": chi.degree, "d": self.d, "rows": rows, "consistent": ok}

    def equivalent_by_search(self, x: StableRelationCycle, y: StableRelationCycle, max_power: int = 6) -> bool:
        """Definitional branch test: some powers share an associated set."""
        for n1 in range(1, max_power + 1):
            a = set(self.associated_set(self.power(x, n1)))
            for n2 in range(1, max_power + 1):
                if x.s * n1 == y.s * n2 and a == set(self.associated_set(self.power(y, n2))):
                    return True
        return False

    def cycle_spelling(self, word) -> StableRelationCycle:
        """Look up the stable relation cycle whose path is the given arrow word."""
        self._require()
        word = tuple(word)
        for b in self.branches():
            for lst in b.members.values():
                for x in lst:
                    if x.path.arrows == word:
                        return x
        raise ValueError(f"no stable relation cycle within the horizon spells {word}")

    def multiplicativity(self, a: StableRelationCycle, b: StableRelationCycle, c: StableRelationCycle) -> dict:
        """Compare chi_a * chi_b with chi_c up to a global sign."""
        lhs = self.ext.m2(self.chi_operator(a), self.chi_operator(b))
        rhs = self.chi_operator(c)
        sign = None
        if lhs == rhs:
            sign = 1
        elif lhs == rhs.scale(-1):
            sign = -1
        return {"left": str(a.path), "right": str(b.path), "target": str(c.path),
                "holds": sign is not None, "sign": sign,
                "unsigned": self.ext.concat_product(self.chi_operator(a), self.chi_operator(b)) == rhs}

    def ring_report(self) -> dict:
        brs = self.branches()
        pieces = []
        for b in brs:
            gens = ", ".join(f"t{b.index + 1}^{g}" for g in b.semigroup.generators)
            pieces.append(f"k[{gens}]")
        if len(brs) == 1:
            b = brs[0]
            gens = ", ".join(f"t^{g}" for g in b.semigroup.generators)
            text = f"k[{gens}] with |t| = {b.t_degree}"
        else:
            degs = ", ".join(f"|t{b.index + 1}| = {b.t_degree}" for b in brs)
            text = " x_k ".join(pieces) + f" with {degs}"
        return {
            "branches": [b.as_dict() for b in brs],
            "presentation": text,
            "description": "fibre product over k of the semigroup algebras, glued along augmentations"
            if len(brs) > 1 else "semigroup algebra of the single branch",
        }


@dataclass
class Branch:
    index: int
    cycles: tuple[PerfectCycle, ...]
    word: tuple[str, ...]
    gcd: int
    semigroup: WindowSemigroup
    t_degree: int
    members: dict[int, list[StableRelationCycle]] = field(repr=False)

    def as_dict(self) -> dict:
        return {
            "index": self.index + 1,
            "cycles": [str(c) for c in self.cycles],
            "string": "".join(self.word) if all(len(a) == 1 for a in self.word) else " ".join(self.word),
            "gcd": self.gcd,
            "semigroupGenerators": list(self.semigroup.generators),
            "frobenius": self.semigroup.frobenius,
            "windowComplete": self.semigroup.complete,
            "tDegree": self.t_degree,
            "minimalS": min(self.members),
        }


@dataclass(frozen=True)
class ChiClass:
    chi: ExtElement
    degree: int | None
    per_branch: tuple[ExtElement, ...]
    exponents: tuple[int, ...]
    minimal_cycles: tuple[StableRelationCycle, ...]

    def as_dict(self) -> dict:
        return {"degree": self.degree, "exponents": list(self.exponents),
                "chi": self.chi.as_dict(),
                "perBranchDegrees": [x.degree for x in self.per_branch]}
