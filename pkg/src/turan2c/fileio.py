"""Text and JSON formats for graph values.

Text grammar, one declaration per line, ``#`` starts a comment::

    pattern            # optional; allows loops such as "red 1 1"
    vertices 4
    red 1 2
    blue 2 3
    both 3 4           # red and blue
    e2 1 2             # {2,3}-graphs use e2 / e3 instead of colors
    e3 1 2 3
"""

from __future__ import annotations

from typing import Any

from .model import (
    COLORED_LABELS,
    MIXED_LABELS,
    ColoredGraph,
    EdgeClass,
    Graph,
    GraphError,
    MixedGraph,
    PatternGraph,
)

_ARITY = {"red": 2, "blue": 2, "both": 2, "e2": 2, "e3": 3}


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse(text: str) -> Graph:
    is_pattern = False
    n = None
    edges: dict[str, list[tuple[int, ...]]] = {"red": [], "blue": [], "e2": [], "e3": []}
    seen: dict[str, set] = {k: set() for k in edges}
    kinds = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, *args = line.split()
        if word == "pattern":
            if args or n is not None:
                raise ParseError(lineno, "'pattern' must come first and take no arguments")
            is_pattern = True
            continue
        if word == "vertices":
            if n is not None:
                raise ParseError(lineno, "duplicate 'vertices' declaration")
            if len(args) != 1 or not args[0].isdigit():
                raise ParseError(lineno, "expected 'vertices <n>'")
            n = int(args[0])
            continue
        if word not in _ARITY:
            raise ParseError(lineno, f"unknown declaration {word!r}")
        if n is None:
            raise ParseError(lineno, "edge before 'vertices' declaration")
        arity = _ARITY[word]
        if len(args) != arity:
            raise ParseError(lineno, f"'{word}' takes {arity} vertices, got {len(args)}")
        try:
            vs = tuple(sorted(int(a) for a in args))
        except ValueError:
            raise ParseError(lineno, f"non-integer vertex in {line!r}") from None
        if vs[0] < 1 or vs[-1] > n:
            raise ParseError(lineno, f"vertex index out of range 1..{n}")
        if not is_pattern and len(set(vs)) < len(vs):
            raise ParseError(lineno, "loop in simple graph")
        kinds.add("mixed" if word in MIXED_LABELS else "colored")
        if len(kinds) > 1:
            raise ParseError(lineno, "cannot mix red/blue edges with e2/e3 edges")
        for label in ("red", "blue") if word == "both" else (word,):
            if vs in seen[label]:
                raise ParseError(lineno, f"duplicate {label} edge {' '.join(map(str, vs))}")
            seen[label].add(vs)
            edges[label].append(vs)

    if n is None:
        raise ParseError(0, "missing 'vertices' declaration")
    mixed = kinds == {"mixed"}
    if is_pattern:
        labels = MIXED_LABELS if mixed else COLORED_LABELS
        return PatternGraph(n, tuple(EdgeClass(lb, _ARITY[lb], frozenset(edges[lb])) for lb in labels))
    if mixed:
        return MixedGraph(n, edges["e2"], edges["e3"])
    return ColoredGraph(n, edges["red"], edges["blue"])


def _fmt(label: str, e) -> str:
    return " ".join([label, *map(str, e)])


def serialize(g: Graph) -> str:
    lines = []
    if isinstance(g, PatternGraph):
        lines.append("pattern")
    lines.append(f"vertices {g.n}")
    labels = [c.label for c in g.classes]
    if labels == list(COLORED_LABELS):
        red, blue = (c.edges for c in g.classes)
        for e in sorted(red & blue):
            lines.append(_fmt("both", e))
        for e in sorted(red - blue):
            lines.append(_fmt("red", e))
        for e in sorted(blue - red):
            lines.append(_fmt("blue", e))
    else:
        for cls in g.classes:
            lines.extend(_fmt(cls.label, e) for e in sorted(cls.edges))
    return "\n".join(lines) + "\n"


def to_dict(g: Graph) -> dict[str, Any]:
    def edge_list(es):
        return [list(e) for e in sorted(es)]

    if isinstance(g, ColoredGraph):
        return {"type": "colored", "n": g.n, "red": edge_list(g.red), "blue": edge_list(g.blue)}
    if isinstance(g, MixedGraph):
        return {"type": "mixed", "n": g.n, "e2": edge_list(g.e2), "e3": edge_list(g.e3)}
    return {
        "type": "pattern",
        "n": g.n,
        "classes": [
            {"label": c.label, "arity": c.arity, "edges": edge_list(c.edges)} for c in g.classes
        ],
    }


def from_dict(d: dict[str, Any]) -> Graph:
    kind = d.get("type")
    if kind == "colored":
        return ColoredGraph(d["n"], map(tuple, d["red"]), map(tuple, d["blue"]))
    if kind == "mixed":
        return MixedGraph(d["n"], map(tuple, d["e2"]), map(tuple, d["e3"]))
    if kind == "pattern":
        return PatternGraph(
            d["n"],
            tuple(
                EdgeClass(c["label"], c["arity"], frozenset(tuple(e) for e in c["edges"]))
                for c in d["classes"]
            ),
        )
    raise GraphError(f"unknown graph type {kind!r}")
