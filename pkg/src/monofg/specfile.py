"""Reader for the algebra description format.

Grammar (one statement per line, ``#`` starts a comment)::

    name     <identifier>                  optional
    order    composition | traversal       optional, default composition
    vertices <id> <id> ...                 one or more lines
    arrow    <id> : <source> -> <target>
    relation <arrow-id> <arrow-id> ...     compact form "abcd" allowed when
                                           every arrow id is one character

Relations are read in composition order (``ab`` = b then a).  With
``order traversal`` (or the CLI flag) each relation string is reversed on
ingestion, so ``relation a b`` then means a then b.
"""
from __future__ import annotations

import re
from pathlib import Path as FsPath

from .algebra import MonomialAlgebra, Quiver
from .errors import ParseError

_ID = re.compile(r"[A-Za-z0-9_.'^+-]+$")


def _tokens(line: str):
    """Yield (column, token); column is 1-based."""
    for m in re.finditer(r"\S+", line):
        yield m.start() + 1, m.group()


def parse_algebra(text: str, traversal_order: bool | None = None) -> MonomialAlgebra:
    vertices: list[str] = []
    arrows: list[tuple[str, str, str]] = []
    arrow_ids: set[str] = set()
    raw_relations: list[tuple[int, list[tuple[int, str]]]] = []
    name = ""
    order = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = list(_tokens(line))
        if not toks:
            continue
        col, kw = toks[0]
        rest = toks[1:]
        if kw == "name":
            if len(rest) != 1:
                raise ParseError("name takes one identifier", lineno, col)
            name = rest[0][1]
        elif kw == "order":
            if len(rest) != 1 or rest[0][1] not in ("composition", "traversal"):
                c = rest[0][0] if rest else col + len(kw)
                raise ParseError("order must be 'composition' or 'traversal'", lineno, c)
            order = rest[0][1]
        elif kw == "vertices":
            if not rest:
                raise ParseError("vertices line lists no vertex", lineno, col + len(kw))
            for c, v in rest:
                if not _ID.match(v):
                    raise ParseError(f"bad vertex id {v!r}", lineno, c)
                if v in vertices:
                    raise ParseError(f"duplicate vertex {v!r}", lineno, c)
                vertices.append(v)
        elif kw == "arrow":
            # arrow a: 1 -> 2   (spacing around ':' and '->' is free)
            body = line[col - 1 + len(kw):]
            m = re.match(r"\s*([^\s:]+)\s*:\s*([^\s-]+)\s*->\s*(\S+)\s*$", body)
            if not m:
                raise ParseError("expected 'arrow <id>: <source> -> <target>'", lineno, col + len(kw) + 1)
            aid, src, tgt = m.group(1), m.group(2), m.group(3)
            base = col - 1 + len(kw)
            for grp, val in ((1, aid), (2, src), (3, tgt)):
                if not _ID.match(val):
                    raise ParseError(f"bad identifier {val!r}", lineno, base + m.start(grp) + 1)
            if aid in arrow_ids:
                raise ParseError(f"duplicate arrow {aid!r}", lineno, base + m.start(1) + 1)
            for grp, val in ((2, src), (3, tgt)):
                if val not in vertices:
                    raise ParseError(f"undeclared vertex {val!r}", lineno, base + m.start(grp) + 1)
            arrows.append((aid, src, tgt))
            arrow_ids.add(aid)
        elif kw == "relation":
            if not rest:
                raise ParseError("empty relation", lineno, col + len(kw))
            raw_relations.append((lineno, rest))
        else:
            raise ParseError(f"unknown statement {kw!r}", lineno, col)

    if not vertices:
        raise ParseError("no vertices declared", 1, 1)
    reverse = traversal_order if traversal_order is not None else (order == "traversal")
    single = all(len(a) == 1 for a in arrow_ids)
    relations = []
    for lineno, toks in raw_relations:
        seq: list[tuple[int, str]] = []
        for c, t in toks:
            if t in arrow_ids:
                seq.append((c, t))
            elif single and all(ch in arrow_ids for ch in t):
                seq.extend((c + k, ch) for k, ch in enumerate(t))
            else:
                bad = next((k for k, ch in enumerate(t) if ch not in arrow_ids), 0) if single else 0
                raise ParseError(f"unknown arrow in relation token {t!r}", lineno, c + bad)
        ids = [t for _, t in seq]
        if reverse:
            ids.reverse()
        arr = {a[0]: a for a in arrows}
        for x, y in zip(ids, ids[1:]):
            if arr[x][1] != arr[y][2]:
                c = next(c for c, t in seq if t == (y if not reverse else x))
                raise ParseError(f"relation is not a path: {x} cannot follow {y}", lineno, c)
        if len(ids) < 2:
            raise ParseError("relation must have length at least 2", lineno, toks[0][0])
        relations.append(tuple(ids))
    return MonomialAlgebra(Quiver(vertices, arrows), relations, name=name)


def load_algebra(path: str | FsPath, traversal_order: bool | None = None) -> MonomialAlgebra:
    return parse_algebra(FsPath(path).read_text(), traversal_order=traversal_order)
