"""Edge-list text format and canonical solution-line rendering.

Edge lists are UTF-8 text, one edge per line as two whitespace-separated
labels; blank lines and lines starting with `#` are ignored.  A solution
line renders each matching edge as `u-v` with the labels of the pair in
lexicographic order, edges space-separated and sorted lexicographically;
the empty matching is the literal `{}`.
"""

from __future__ import annotations

from typing import Iterable

from .errors import ParseError
from .graph import DynamicGraph, build_graph


def parse_edge_list(text: str) -> DynamicGraph:
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected two labels, got {len(tokens)}")
        pairs.append((tokens[0], tokens[1]))
    return build_graph(pairs)


def serialize_edge_list(g: DynamicGraph) -> str:
    labels = g.labels
    lines = [f"{labels[u]} {labels[v]}" for u, v in zip(g.eu, g.ev)]
    return "\n".join(lines) + ("\n" if lines else "")


def solution_line(g: DynamicGraph, matching: Iterable[int]) -> str:
    parts = []
    for e in matching:
        a, b = str(g.labels[g.eu[e]]), str(g.labels[g.ev[e]])
        if b < a:
            a, b = b, a
        parts.append(f"{a}-{b}")
    if not parts:
        return "{}"
    parts.sort()
    return " ".join(parts)
