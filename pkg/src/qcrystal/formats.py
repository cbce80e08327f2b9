"""Text literals, DOT export and JSON records.

Literal syntax
--------------
word       letters as bare digits (``1211``) when the rank is at most 9,
           otherwise decimal letters separated by ``.`` (``10.3.3``)
tableau    row words from the top row down joined by ``/`` (``211/1``);
           ``,`` is accepted as a row separator on input
partition  comma separated parts (``3,1``); ``0`` or an empty string is the
           empty partition

Every JSON record carries ``"format": "qcrystal/1"`` and ``"rank"``.
"""

from __future__ import annotations

import json
import re

from .graph import CrystalGraph
from .partitions import Partition, check_strict
from .ssdt import ShiftedTableau
from .words import Label, Word, check_word

FORMAT_TAG = "qcrystal/1"


class ParseError(ValueError):
    pass


def format_word(word: Word, n: int) -> str:
    if n > 9:
        return ".".join(str(a) for a in word)
    return "".join(str(a) for a in word)


def parse_word(text: str, n: int) -> Word:
    text = text.strip()
    if not text:
        return ()
    if "." in text:
        parts = text.split(".")
    elif n > 9 and len(text) > 1:
        raise ParseError(f"letters of rank {n} words must be separated by '.': {text!r}")
    else:
        parts = list(text)
    if not all(p.isdigit() for p in parts):
        raise ParseError(f"malformed word literal {text!r}")
    return check_word((int(p) for p in parts), n)


def format_tableau(T: ShiftedTableau, n: int) -> str:
    return "/".join(format_word(r, n) for r in T.rows)


def parse_tableau(text: str, n: int) -> ShiftedTableau:
    text = text.strip()
    if not text:
        return ShiftedTableau(())
    rows = re.split(r"[/,]", text)
    if any(not r.strip() for r in rows):
        raise ParseError(f"empty row in tableau literal {text!r}")
    return ShiftedTableau(tuple(parse_word(r, n) for r in rows))


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam) if lam else "0"


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()")
    if text in ("", "0"):
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ParseError(f"malformed partition literal {text!r}") from None
    return check_strict(parts)


def format_weight(mu) -> str:
    return "(" + ",".join(str(m) for m in mu) + ")"


def vertex_literal(G: CrystalGraph, v: Word) -> str:
    if G.shape is not None:
        return format_tableau(G.tableau(v), G.n)
    return format_word(v, G.n)


def label_text(label: Label, ascii: bool = False) -> str:
    return str(label) if ascii else label.pretty()


def _ordered(G: CrystalGraph):
    verts = G.sorted_vertices()
    index = {v: k for k, v in enumerate(verts)}
    edges = sorted(
        ((index[v], lab, index[u]) for (v, lab), u in G.edges.items()),
        key=lambda e: (e[0], e[1].odd, e[1].index, e[2]),
    )
    return verts, edges


def to_dot(G: CrystalGraph, name: str = "crystal", ascii: bool = False) -> str:
    """DOT digraph; even labels are solid edges, odd labels dashed.

    Nodes are numbered in sorted order of their canonical word so repeated runs
    produce identical text.
    """
    verts, edges = _ordered(G)
    out = [f'digraph "{name}" {{', '  node [shape=box, fontname="monospace"];']
    for k, v in enumerate(verts):
        out.append(f'  n{k} [label="{vertex_literal(G, v)}"];')
    for a, lab, b in edges:
        style = ", style=dashed" if lab.odd else ""
        out.append(f'  n{a} -> n{b} [label="{label_text(lab, ascii)}"{style}];')
    out.append("}")
    return "\n".join(out) + "\n"


def crystal_text(G: CrystalGraph, ascii: bool = False) -> str:
    verts, edges = _ordered(G)
    tops = set(G.highest())
    bottoms = set(G.lowest())
    out = [f"rank {G.n}" + (f" shape {format_partition(G.shape)}" if G.shape is not None else ""),
           f"{len(verts)} vertices, {len(edges)} edges"]
    for v in verts:
        tags = ("highest " if v in tops else "") + ("lowest" if v in bottoms else "")
        out.append(f"  {vertex_literal(G, v)} {format_weight(G.weight(v))} {tags}".rstrip())
    for a, lab, b in edges:
        arrow = f"-{label_text(lab, ascii)}->" if not lab.odd else f"~{label_text(lab, ascii)}~>"
        out.append(f"  {vertex_literal(G, verts[a])} {arrow} {vertex_literal(G, verts[b])}")
    return "\n".join(out) + "\n"


def crystal_record(G: CrystalGraph) -> dict:
    verts, edges = _ordered(G)
    lit = [vertex_literal(G, v) for v in verts]
    return {
        "format": FORMAT_TAG,
        "kind": "crystal",
        "rank": G.n,
        "shape": list(G.shape) if G.shape is not None else None,
        "vertices": [{"id": s, "weight": list(G.weight(v))} for s, v in zip(lit, verts)],
        "highest": sorted(vertex_literal(G, v) for v in G.highest()),
        "lowest": sorted(vertex_literal(G, v) for v in G.lowest()),
        "edges": [
            {"source": lit[a], "target": lit[b], "label": str(lab), "odd": lab.odd}
            for a, lab, b in edges
        ],
    }


def dumps(record: dict) -> str:
    return json.dumps(record, indent=2, ensure_ascii=False) + "\n"
