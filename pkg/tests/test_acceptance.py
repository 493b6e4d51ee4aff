"""Acceptance criteria, one test each.

Every test prints a single ``[criterion N] PASS|FAIL  detail`` line (shown even
under output capture).  Running this file as a script prints the same lines
without pytest.
"""
from __future__ import annotations

import sys

import pytest

from monofg.ainfty import ExtAlgebra
from monofg.anick import chain_table, left_chains, right_chains
from monofg.corpus import CorpusConfig, generate_corpus
from monofg.gg_oracle import gg_tor_dim
from monofg.gorenstein import FINITE, GORENSTEIN, NOT_GORENSTEIN, decide, decide_incremental
from monofg.hochschild import bar_oracle, bimodule_d_squared, hh_dims, hh_periodicity_report, minimality_echo
from monofg.named import (all_named, ck5, cyclic_nakayama, gss, hereditary_algebras, hereditary_a2, lambda_d,
                          local_algebras, truncated_polynomial)
from monofg.periodicity import Periodicity

_CORPUS = None


def corpus():
    global _CORPUS
    if _CORPUS is None:
        _CORPUS = generate_corpus(CorpusConfig())
    return _CORPUS


def ck5_paths(n: int) -> set[str]:
    s, odd = divmod(n + 1, 2)
    if not odd:
        return {"bcde" + "abcde" * (s - 2) + "abcd", "de" + "abcde" * (s - 1) + "ab"}
    return {"bcde" + "abcde" * (s - 1) + "ab", "de" + "abcde" * (s - 1) + "abcd"}


# --- criteria --------------------------------------------------------------

def c1():
    t = chain_table(ck5(), 30)
    counts = t.counts()
    ok = counts[:3] == [5, 3, 3] and all(c == 2 for c in counts[3:31])
    ok &= {str(p) for p in t.paths(1)} == {"abcd", "bcde", "deab"}
    ok &= {str(p) for p in t.paths(2)} == {"abcde", "bcdeab", "deabcd"}
    bad = [n for n in range(3, 31) if {str(p) for p in t.paths(n)} != ck5_paths(n)]
    return ok and not bad, f"counts {counts[:6]}..., path mismatches at {bad or 'none'}"


def c2():
    algs = corpus()
    bad = []
    for a in algs:
        t = right_chains(a, 6)
        for n in range(2, 8):
            dim, paths = gg_tor_dim(a, n)
            if dim != len(t.paths(n - 1)) or sorted(paths) != sorted(t.paths(n - 1)):
                bad.append((a.name, n))
    return len(algs) >= 50 and not bad, f"{len(algs)} algebras, disagreements {bad or 0}"


def c3():
    algs = list(corpus()) + all_named()
    bad = []
    for a in algs:
        r, l = right_chains(a, 10), left_chains(a, 10)
        bad += [(a.name, n) for n in range(11) if set(r.paths(n)) != set(l.paths(n))]
    return not bad, f"{len(algs)} algebras through degree 10, disagreements {bad or 0}"


def c4():
    notes = []
    ok = True
    for a in (ck5(), truncated_polynomial(3)):
        out = ExtAlgebra(a).vanishing_audit(max_total=14, max_arity=6)
        ok &= not out["violations"] and not out["signMismatches"]
        notes.append(f"{a.name}: {out['evaluated']} tuples, {out['nonzero']} nonzero, "
                     f"{len(out['violations'])} violations, {len(out['signMismatches'])} sign mismatches")
    return ok, "; ".join(notes)


def c5():
    E = ExtAlgebra(ck5())
    bad = []
    for n in range(5, 13):
        args = [E.dual("d"), E.dual("e")] + [E.dual("abcde")] * (n - 4) + [E.dual("a"), E.dual("b")]
        res = E.m(*args)
        want = "de" + "abcde" * (n - 4) + "ab"
        if res.degree != 2 * n - 6 or {str(p) for p in res.support} != {want}:
            bad.append(n)
    return not bad, f"n = 5..12 nonzero on de(abcde)^(n-4)ab; failures {bad or 'none'}"


def c6():
    bad = []
    for d in range(2, 7):
        v = decide(lambda_d(d))
        if (v.kind, v.dimension) != (GORENSTEIN, d):
            bad.append(f"Lambda_{d}")
    for m in range(1, 4):
        for n in range(2, 5):
            v = decide(cyclic_nakayama(m, n))
            if (v.kind, v.dimension) != (GORENSTEIN, 0):
                bad.append(f"cycle({m},{n})")
    bad += [a.name for a in local_algebras() if decide(a).kind != NOT_GORENSTEIN]
    bad += [a.name for a in hereditary_algebras() if (decide(a).kind, decide(a).fg) != (FINITE, True)]
    op_bad = []
    for a in corpus():
        v, w = decide(a), decide(a.opposite())
        if (v.kind, v.dimension) != (w.kind, w.dimension):
            op_bad.append(a.name)
    return not bad and not op_bad, f"verdict failures {bad or 'none'}, opposite mismatches {op_bad or 'none'}"


def c7():
    alg = gss()
    v = decide(alg)
    P = Periodicity(alg)
    brs = P.branches()
    chi = P.build_chi()
    ring = P.ring_report()["presentation"]
    rep = P.verify_ext_periodicity(range(6, 31), chi.chi)
    rows = {r["n"]: r for r in rep["rows"]}
    iso = all(rows[n]["injective"] and rows[n]["surjective"] for n in range(7, 31))
    ok = (v.kind, v.dimension) == (GORENSTEIN, 6) and len(brs) == 1
    ok &= brs[0].semigroup.generators == (2, 3) and brs[0].semigroup.frobenius == 1
    ok &= brs[0].t_degree == 4 and ring == "k[t^2, t^3] with |t| = 4"
    ok &= chi.degree == 8 and iso and rows[6]["surjective"]
    return ok, (f"dim {v.dimension}, {len(brs)} branch, gens {brs[0].semigroup.generators}, {ring}, "
                f"|chi| = {chi.degree}, iso 7..30 {iso}, n=6 injective {rows[6]['injective']}")


def c8():
    bad = []
    for n in range(2, 7):
        alg = truncated_polynomial(n)
        counts = chain_table(alg, 20).counts()
        P = Periodicity(alg)
        chi = P.build_chi()
        E = ExtAlgebra(alg)
        ext = P.verify_ext_periodicity(range(1, 20), chi.chi)
        rows_ok = all(r["injective"] and r["surjective"] for r in ext["rows"])
        central = E.centrality_check(chi.chi, 20)["pass"]
        sweep = E.commutator_sweep(chi.chi, 20)
        if not (set(counts) == {1} and chi.degree == 2 and {str(p) for p in chi.chi.support} == {"t" * n}
                and rows_ok and central and not sweep["nonzero"]):
            bad.append(n)
    return not bad, f"n = 2..6, failures {bad or 'none'}"


def c9():
    bad = []
    for alg in (truncated_polynomial(2), truncated_polynomial(3), hereditary_a2()):
        for ch in (0, 2, 3):
            if hh_dims(alg, 5, ch) != bar_oracle(alg, 5, ch):
                bad.append(f"{alg.name}/char {ch}")
    complex_bad = []
    for alg in (truncated_polynomial(2), truncated_polynomial(3), hereditary_a2(), gss()):
        for n in range(1, 33 if alg.name == "GSS7" else 8):
            if bimodule_d_squared(alg, n) or not minimality_echo(alg, n):
                complex_bad.append(f"{alg.name}/{n}")
    rep = hh_periodicity_report(gss(), range(7, 24))
    return (not bad and not complex_bad and rep["periodic"] and rep["period"] == 8,
            f"oracle mismatches {bad or 'none'}, complex failures {complex_bad or 'none'}, "
            f"GSS period-8 for 7..23 {rep['periodic']}")


def c10():
    algs = list(corpus()) + all_named()
    bad = [a.name for a in algs if not decide(a).same_as(decide_incremental(a))]
    return not bad, f"{len(algs)} algebras, disagreements {bad or 0}"


CRITERIA = [
    (1, "CK5 chain census", c1),
    (2, "dual-oracle Tor agreement", c2),
    (3, "left and right chains agree", c3),
    (4, "vanishing-pattern audit", c4),
    (5, "CK5 non-vanishing higher products", c5),
    (6, "Gorenstein verdicts", c6),
    (7, "GSS end-to-end", c7),
    (8, "Gulliksen family", c8),
    (9, "Hochschild cohomology", c9),
    (10, "decision-procedure consistency", c10),
]


def _line(num, title, ok, detail):
    return f"[criterion {num}] {'PASS' if ok else 'FAIL'}  {title}: {detail}"


@pytest.mark.parametrize("num, title, fn", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(num, title, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(num, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for num, title, fn in CRITERIA:
        ok, detail = fn()
        failed += not ok
        print(_line(num, title, ok, detail), flush=True)
    sys.exit(1 if failed else 0)
