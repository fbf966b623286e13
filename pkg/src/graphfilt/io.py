"""Text formats for graphs and signals.

Edge-list format: a header line ``n <count>`` followed by one ``i j w``
triple per line (0-based indices, i < j, decimal weight).  Signal format:
one decimal value per line.
"""

from __future__ import annotations

import numpy as np

from .errors import ParseError
from .graphs import Graph, build_graph

__all__ = [
    "format_edge_list",
    "parse_edge_list",
    "format_signal",
    "parse_signal",
    "read_graph",
    "write_graph",
    "read_signal",
    "write_signal",
]

_FMT = "%.17g"


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    for i, j, w in g.edges:
        lines.append(f"{i} {j} {_FMT % w}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "n":
        raise ParseError(f"expected header 'n <count>', got {lines[0]!r}", line=1)
    try:
        n = int(header[1])
    except ValueError:
        raise ParseError(f"bad vertex count {header[1]!r}", line=1)
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'i j w', got {line!r}", line=lineno)
        try:
            i, j, w = int(parts[0]), int(parts[1]), float(parts[2])
        except ValueError:
            raise ParseError(f"could not parse {line!r}", line=lineno)
        if i > j:
            raise ParseError(f"edge ({i}, {j}) not in canonical i < j order", line=lineno)
        edges.append((i, j, w))
    return build_graph(n, edges)


def format_signal(s) -> str:
    return "\n".join(_FMT % v for v in np.asarray(s, dtype=float)) + "\n"


def parse_signal(text: str) -> np.ndarray:
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values.append(float(line))
        except ValueError:
            raise ParseError(f"bad signal value {line!r}", line=lineno)
    return np.asarray(values)


def read_graph(path) -> Graph:
    with open(path) as f:
        return parse_edge_list(f.read())


def write_graph(path, g: Graph):
    with open(path, "w") as f:
        f.write(format_edge_list(g))


def read_signal(path) -> np.ndarray:
    with open(path) as f:
        return parse_signal(f.read())


def write_signal(path, s):
    with open(path, "w") as f:
        f.write(format_signal(s))
