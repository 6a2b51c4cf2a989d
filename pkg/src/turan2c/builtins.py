"""Named graphs used throughout the classification and the {2,3}-graph section.

Each entry is stored in the text file format and parsed on demand.
"""

from __future__ import annotations

from functools import lru_cache

from .fileio import parse
from .model import Graph

# Vertex order of the 9-vertex {2,3}-graph; labels are (H1 part, H2 part, H3 part).
H9_LABELS = ("AXE", "CYE", "BYE", "BXF", "CXF", "CXE", "BXE", "AXF", "AYE")

# Vertex order of the 8-vertex graph; labels are (G_C part, G_D part, G_E part).
H8_LABELS = ("ACX", "ADY", "ACY", "ADX", "BDX", "BCY", "BCX", "BDY")


def _h9_text() -> str:
    idx = {name: i for i, name in enumerate(H9_LABELS, start=1)}
    e2 = ["AXE-CYE", "AXE-BYE", "AXE-AYE", "CXE-AYE", "BXE-AYE"]
    e3 = [
        "BXF-CYE-AXE", "BXF-CXE-AXE", "BXF-CXE-AYE",
        "CXF-BYE-AXE", "CXF-BXE-AXE", "CXF-BXE-AYE",
        "AXF-CYE-BXE", "AXF-BYE-CXE", "AXF-CXE-BXE",
    ]
    lines = ["# transcribed from a figure", "vertices 9"]
    for kind, group in (("e2", e2), ("e3", e3)):
        for item in group:
            lines.append(kind + " " + " ".join(str(idx[p]) for p in item.split("-")))
    return "\n".join(lines)


def _h8_text() -> str:
    red = "12 13 24 34 16 37 48 25 35 18 46 27".split()
    blue = "56 57 68 78 26 15 47 38 35 18 46 27".split()
    lines = ["vertices 8"]
    lines += [f"red {e[0]} {e[1]}" for e in red]
    lines += [f"blue {e[0]} {e[1]}" for e in blue]
    return "\n".join(lines)


_TEXT = {
    "T": """
        vertices 4
        both 1 2
        both 3 4
        red 1 3
        blue 2 3
    """,
    "T1": """
        vertices 4
        both 1 2
        both 3 4
        red 1 3
        red 2 4
        blue 1 4
        blue 2 3
    """,
    "T2": """
        vertices 4
        both 1 2
        both 1 4
        both 2 3
        both 3 4
        red 2 4
        blue 1 3
    """,
    "T3": """
        vertices 4
        both 1 2
        both 3 4
        red 1 4
        red 2 3
        blue 1 3
    """,
    "H8": _h8_text(),
    "K3": """
        vertices 3
        both 1 2
        both 1 3
        both 2 3
    """,
    "K3MINUS": """
        vertices 3
        both 1 2
        both 1 3
        red 2 3
    """,
    # two-part constructions: vertex 1 is the first part (X, A or C), vertex 2 the second
    "GA": """
        pattern
        vertices 2
        red 1 1
        both 1 2
    """,
    "GB": """
        pattern
        vertices 2
        blue 1 1
        both 1 2
    """,
    "GC": """
        pattern
        vertices 2
        red 1 1
        both 1 2
        blue 2 2
    """,
    "GD": """
        pattern
        vertices 2
        blue 1 1
        both 1 2
        blue 2 2
    """,
    "GE": """
        pattern
        vertices 2
        red 1 1
        both 1 2
        red 2 2
    """,
    # H1 on parts a, b, c = 1, 2, 3 (edges aa, ab, ac, abc)
    "H1": """
        pattern
        vertices 3
        e2 1 1
        e2 1 2
        e2 1 3
        e3 1 2 3
    """,
    # H2 on parts x, y = 1, 2 (edges xy, xxx, xxy)
    "H2": """
        pattern
        vertices 2
        e2 1 2
        e3 1 1 1
        e3 1 1 2
    """,
    # H3 on parts e, f = 1, 2 (edges ee, eef)
    "H3": """
        pattern
        vertices 2
        e2 1 1
        e3 1 1 2
    """,
    "H5": """
        vertices 5
        e2 1 2
        e2 1 3
        e2 3 4
        e3 1 2 5
        e3 1 3 5
        e3 3 4 5
    """,
    # H5 as the apex lift of T (vertex 5 joined through T's blue edges)
    "H5T": """
        vertices 5
        e2 1 2
        e2 1 3
        e2 3 4
        e3 1 2 5
        e3 2 3 5
        e3 3 4 5
    """,
    "H6": """
        vertices 6
        e2 3 4
        e2 3 5
        e3 1 3 4
        e3 2 3 5
        e3 4 5 6
    """,
    "H9": _h9_text(),
}

NAMES = tuple(_TEXT)


def builtin_text(name: str) -> str:
    try:
        body = _TEXT[name]
    except KeyError:
        raise KeyError(f"unknown builtin {name!r}; known: {', '.join(NAMES)}") from None
    return "\n".join(line.strip() for line in body.strip().splitlines()) + "\n"


@lru_cache(maxsize=None)
def builtin(name: str) -> Graph:
    return parse(builtin_text(name))
