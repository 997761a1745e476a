"""Plain-text graph files.

::

    # a triangle
    n 3
    e 0 1
    e 0 2
    e 1 2

One ``n <count>`` header, then one ``e <u> <v>`` line per edge (``u == v`` is
a loop).  The i-th edge line becomes edge id ``i``, so file order is the edge
order.  Lines starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

from pathlib import Path

from .errors import GraphError
from .graph import Graph, build_graph


class GraphFileError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _int(token: str, lineno: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphFileError(f"{what} must be an integer, got {token!r}", lineno) from None
    if value < 0:
        raise GraphFileError(f"{what} must be nonnegative, got {value}", lineno)
    return value


def parse_graph(text: str) -> Graph:
    n = None
    ends = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        tag = tokens[0]
        if tag == "n":
            if n is not None:
                raise GraphFileError("duplicate 'n' header", lineno)
            if len(tokens) != 2:
                raise GraphFileError("expected 'n <count>'", lineno)
            n = _int(tokens[1], lineno, "vertex count")
        elif tag == "e":
            if n is None:
                raise GraphFileError("edge line before the 'n' header", lineno)
            if len(tokens) != 3:
                raise GraphFileError("expected 'e <u> <v>'", lineno)
            u = _int(tokens[1], lineno, "vertex id")
            v = _int(tokens[2], lineno, "vertex id")
            if u >= n or v >= n:
                raise GraphFileError(f"vertex id out of range for n={n}", lineno)
            ends.append((u, v))
        else:
            raise GraphFileError(f"unknown line tag {tag!r}", lineno)
    if n is None:
        raise GraphFileError("missing 'n <count>' header")
    return build_graph(n, ends)


def render_graph(G: Graph) -> str:
    """Inverse of :func:`parse_graph` for graphs with dense edge ids.

    Sparse ids (from deletion or contraction) are renumbered ``0..m-1`` in
    order; the edge order itself is preserved.
    """
    lines = [f"n {G.n}"]
    for _, ends in G.edges:
        u, v = (min(ends), max(ends))
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(G: Graph, path) -> None:
    Path(path).write_text(render_graph(G), encoding="utf-8")
