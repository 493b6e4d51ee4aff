"""Command-line front end.

Every subcommand prints one JSON document on stdout (sorted keys, no timing
unless --timing is given, so identical inputs give identical bytes).
Diagnostics go to stderr.  Exit codes: 0 ok, 2 bad input, 3 invariant
violation or oracle disagreement, 4 resource bound hit.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path as FsPath

from . import __version__
from .ainfty import ExtAlgebra, ExtElement
from .algebra import MonomialAlgebra
from .anick import chain_table, left_chains, right_chains, tor_dims
from .cofactors import perfect_cycles, perfect_paths, period
from .corpus import CorpusConfig, generate_corpus
from .errors import InfiniteDimensional, InvalidAlgebra, InvariantViolation, NotApplicable, ParseError, ResourceBound
from .gg_oracle import gg_tor_dim
from .gorenstein import decide, decide_incremental
from .hochschild import check_complex, export_slices, hh_dims, hh_periodicity_report
from .named import by_name
from .periodicity import Periodicity
from .specfile import parse_algebra

SCHEMA = "monofg.report/1"
EXIT_OK, EXIT_PARSE, EXIT_INVARIANT, EXIT_RESOURCE = 0, 2, 3, 4


def _default_characteristic() -> int:
    raw = os.environ.get("MONOFG_CHAR", "0")
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"MONOFG_CHAR must be an integer, got {raw!r}")


def _echo(alg: MonomialAlgebra) -> dict:
    prof = alg.radical_profile()
    return {
        "name": alg.name,
        "vertices": len(alg.quiver.vertices),
        "arrows": len(alg.quiver.arrows),
        "relations": len(alg.relations),
        "dims": prof.as_dict(),
    }


# --- subcommand bodies ------------------------------------------------------

def cmd_chains(alg, args):
    t = chain_table(alg, args.max_degree)
    return {"counts": t.counts(), "chains": {str(n): [str(p) for p in t.paths(n)]
                                               for n in range(args.max_degree + 1)}}


def cmd_tor_oracle(alg, args):
    anick = tor_dims(alg, args.max_degree - 1)
    rows = []
    for n in range(2, args.max_degree + 1):
        dim, paths = gg_tor_dim(alg, n)
        expected = chain_table(alg, n - 1).paths(n - 1)
        rows.append({"n": n, "gg": dim, "anick": anick[n], "agree": sorted(paths) == sorted(expected)})
    bad = [r for r in rows if not r["agree"] or r["gg"] != r["anick"]]
    if bad:
        raise InvariantViolation(f"Tor oracle disagreement at n = {bad[0]['n']}")
    return {"rows": rows}


def cmd_perfect(alg, args):
    pd = period(alg)
    return {"perfectPaths": [str(p) for p in perfect_paths(alg)],
            "cycles": [str(c) for c in perfect_cycles(alg)], "period": pd.ell}


def cmd_gorenstein(alg, args):
    v = decide(alg)
    w = decide_incremental(alg)
    if not v.same_as(w):
        raise InvariantViolation(f"bounded and incremental verdicts differ: {v.kind} vs {w.kind}")
    return {"verdict": v.as_dict()}


def cmd_fg(alg, args):
    v = decide(alg)
    return {"fg": v.fg, "kind": v.kind, "dimension": v.dimension}


def _element(ext: ExtAlgebra, text: str) -> ExtElement:
    """'abc+bca' -> sum of duals; each summand may carry 'c*' as an integer coefficient."""
    total = None
    for part in text.split("+"):
        part = part.strip()
        coeff = 1
        if "*" in part:
            c, part = part.split("*", 1)
            coeff = int(c)
        x = ext.dual(part.strip(), coeff)
        total = x if total is None else total + x
    return total


def cmd_ainf(alg, args):
    ext = ExtAlgebra(alg)
    if args.action == "product":
        if not args.inputs:
            raise InvalidAlgebra("ainf product needs --inputs")
        xs = [_element(ext, s) for s in args.inputs.split(",")]
        res = ext.m(*xs, signed=not args.unsigned)
        return {"arity": len(xs), "signed": not args.unsigned, "result": res.as_dict(), "text": str(res)}
    if args.action == "audit":
        out = ext.vanishing_audit(args.max_total, args.max_arity)
        if out["violations"] or out["signMismatches"]:
            raise InvariantViolation(f"vanishing audit: {len(out['violations'])} violations, "
                                     f"{len(out['signMismatches'])} sign mismatches")
        return out
    # centrality
    if args.element:
        a = _element(ext, args.element)
    else:
        a = Periodicity(alg).build_chi().chi
    return {"element": str(a), "check": ext.centrality_check(a, args.max_degree)}


def cmd_periodicity(alg, args):
    P = Periodicity(alg)
    chi = P.build_chi()
    if chi.degree is None:
        return {"verdict": P.verdict.kind, "chi": None, "note": "finite global dimension: chi = 0"}
    lo = max(1, P.d)
    hi = args.max_n if args.max_n is not None else P.d + 3 * chi.degree
    return {
        "verdict": P.verdict.kind,
        "dimension": P.d,
        "period": P.ell,
        "ring": P.ring_report(),
        "chi": chi.as_dict(),
        "extPeriodicity": P.verify_ext_periodicity(range(lo, hi + 1), chi.chi),
    }


def cmd_hochschild(alg, args):
    check_complex(alg, args.max_degree + 1)
    out = {"indexing": "generators for C_n sit in homological degree n+1",
           "dims": hh_dims(alg, args.max_degree, args.characteristic)}
    if args.export:
        FsPath(args.export).write_text(export_slices(alg, args.max_degree))
        out["exported"] = args.export
    if args.periodicity:
        v = decide(alg)
        if v.kind == "GorensteinInfiniteGldim":
            out["periodicity"] = hh_periodicity_report(alg, range(v.dimension + 1, args.max_degree + 1),
                                                       args.characteristic)
    return out


def cmd_analyze(alg, args):
    v = decide(alg)
    out = {"verdict": v.as_dict(), "chains": chain_table(alg, args.max_degree).counts(),
           "perfect": cmd_perfect(alg, args)}
    try:
        out["periodicity"] = cmd_periodicity(alg, argparse.Namespace(max_n=None))
    except NotApplicable as e:
        out["periodicity"] = {"notApplicable": str(e)}
    out["hochschild"] = hh_dims(alg, min(args.max_degree, 8), args.characteristic)
    return out


def corpus_checks(alg: MonomialAlgebra, max_tor: int = 7, symmetric_to: int = 10) -> list[str]:
    """Cross-oracle checks for one algebra; returns human-readable disagreements."""
    problems = []
    table_r = right_chains(alg, symmetric_to)
    table_l = left_chains(alg, symmetric_to)
    for n in range(symmetric_to + 1):
        if set(table_r.paths(n)) != set(table_l.paths(n)):
            problems.append(f"left/right chains differ in degree {n}")
            break
    for n in range(2, max_tor + 1):
        dim, paths = gg_tor_dim(alg, n)
        if sorted(paths) != sorted(table_r.paths(n - 1)):
            problems.append(f"Tor_{n}: gg {dim} vs anick {len(table_r.paths(n - 1))}")
            break
    v, w = decide(alg), decide_incremental(alg)
    if not v.same_as(w):
        problems.append(f"bounded {v.kind}/{v.dimension} vs incremental {w.kind}/{w.dimension}")
    o = decide(alg.opposite())
    if (o.kind, o.dimension) != (v.kind, v.dimension):
        problems.append(f"opposite algebra verdict {o.kind}/{o.dimension} vs {v.kind}/{v.dimension}")
    return problems


def run_corpus(args) -> tuple[int, dict]:
    cfg = CorpusConfig(seed=args.seed, size=args.size)
    algs = generate_corpus(cfg)
    if args.generate:
        outdir = FsPath(args.generate)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, a in enumerate(algs):
            (outdir / f"corpus_{i:03d}.alg").write_text(a.spec_text())
        return EXIT_OK, {"seed": cfg.seed, "size": len(algs), "written": str(outdir)}
    summary = {"seed": cfg.seed, "size": len(algs), "kinds": {}}
    for a in algs:
        problems = corpus_checks(a)
        if problems:
            summary["disagreement"] = {"algebra": a.name, "problems": problems, "spec": a.spec_text()}
            return EXIT_INVARIANT, summary
        k = decide(a).kind
        summary["kinds"][k] = summary["kinds"].get(k, 0) + 1
    return EXIT_OK, summary


COMMANDS = {
    "analyze": cmd_analyze,
    "chains": cmd_chains,
    "tor-oracle": cmd_tor_oracle,
    "perfect": cmd_perfect,
    "gorenstein": cmd_gorenstein,
    "fg": cmd_fg,
    "ainf": cmd_ainf,
    "periodicity": cmd_periodicity,
    "hochschild": cmd_hochschild,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="algebra description file")
    common.add_argument("--named", help="built-in algebra (ck5, gss, a2, local, poly<n>, lambda<d>, nakayama<m>x<n>)")
    common.add_argument("--traversal-order", action="store_true",
                        help="read relations left to right in traversal order")
    common.add_argument("--characteristic", type=int, default=None,
                        help="field characteristic (0 or a prime; default $MONOFG_CHAR or 0)")
    common.add_argument("--human", action="store_true", help="indented text instead of JSON")
    common.add_argument("--timing", action="store_true", help="include wall-clock time in the report")

    p = argparse.ArgumentParser(prog="monofg", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"monofg {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("analyze", parents=[common])
    sp.add_argument("--max-degree", type=int, default=10)
    sp = sub.add_parser("chains", parents=[common])
    sp.add_argument("--max-degree", type=int, default=10)
    sp = sub.add_parser("tor-oracle", parents=[common])
    sp.add_argument("--max-degree", type=int, default=7)
    sub.add_parser("perfect", parents=[common])
    sub.add_parser("gorenstein", parents=[common])
    sub.add_parser("fg", parents=[common])
    sp = sub.add_parser("ainf", parents=[common])
    sp.add_argument("action", choices=["product", "audit", "centrality"])
    sp.add_argument("--inputs", help="comma-separated elements, e.g. 'd,e,abcde,a,b'")
    sp.add_argument("--unsigned", action="store_true")
    sp.add_argument("--element", help="element for centrality (default: chi)")
    sp.add_argument("--max-degree", type=int, default=20)
    sp.add_argument("--max-total", type=int, default=14)
    sp.add_argument("--max-arity", type=int, default=6)
    sp = sub.add_parser("periodicity", parents=[common])
    sp.add_argument("--max-n", type=int, default=None)
    sp = sub.add_parser("hochschild", parents=[common])
    sp.add_argument("--max-degree", type=int, default=8)
    sp.add_argument("--export", help="write the cochain slices as sparse JSON to this file")
    sp.add_argument("--periodicity", action="store_true")
    sp = sub.add_parser("corpus", parents=[common])
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--generate", metavar="DIR")
    grp.add_argument("--run", action="store_true")
    sp.add_argument("--seed", type=int, default=CorpusConfig.seed)
    sp.add_argument("--size", type=int, default=CorpusConfig.size)
    return p


def _load(args) -> MonomialAlgebra:
    if args.named:
        return by_name(args.named)
    if not args.input:
        raise ParseError("no input file (or --named) given", 0, 0)
    text = FsPath(args.input).read_text()
    return parse_algebra(text, traversal_order=True if args.traversal_order else None)


def _human(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_human(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        if all(not isinstance(x, (dict, list)) for x in obj):
            return pad + ", ".join(map(str, obj))
        return "\n".join(_human(x, indent) + ("\n" + pad + "-" if i < len(obj) - 1 else "")
                         for i, x in enumerate(obj))
    return f"{pad}{obj}"


def _emit(report: dict, human: bool) -> None:
    if human:
        print(_human(report))
    else:
        print(json.dumps(report, sort_keys=True, ensure_ascii=False, indent=1))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.characteristic is None:
        args.characteristic = _default_characteristic()
    start = time.perf_counter()
    report: dict = {"schema": SCHEMA, "version": __version__, "command": args.command,
                    "characteristic": args.characteristic}
    code = EXIT_OK
    try:
        if args.command == "corpus":
            code, report["results"] = run_corpus(args)
            if code == EXIT_INVARIANT:
                print("corpus: cross-oracle disagreement; offending algebra embedded in report", file=sys.stderr)
        else:
            alg = _load(args)
            report["algebra"] = _echo(alg)
            try:
                report["results"] = COMMANDS[args.command](alg, args)
            except NotApplicable as e:
                report["results"] = {"notApplicable": str(e)}
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (InvalidAlgebra, InfiniteDimensional, KeyError, OSError, ValueError) as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantViolation as e:
        print(f"invariant violation: {e}", file=sys.stderr)
        report["error"] = str(e)
        _emit(report, args.human)
        return EXIT_INVARIANT
    except ResourceBound as e:
        print(f"resource bound: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    _emit(report, args.human)
    return code


if __name__ == "__main__":
    sys.exit(main())
