"""Reading and writing graphs: plain edge lists and the graph6 format."""

from __future__ import annotations

from .graphs import Graph, GraphError, graph, standard_labels


class EdgeTextParseError(GraphError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Graph6Error(GraphError):
    pass


def to_edge_text(g: Graph) -> str:
    """One edge per line as ``label1 label2``; isolated vertices on their own line."""
    lines = []
    touched = set()
    for a, b in g.edge_labels():
        lines.append(f"{a} {b}")
        touched.add(a)
        touched.add(b)
    for lab in g.labels:
        if lab not in touched:
            lines.append(lab)
    return "\n".join(lines) + ("\n" if lines else "")


def from_edge_text(text: str) -> Graph:
    """Parse an edge list. ``#`` starts a comment, blank lines are skipped.

    A line with a single token declares an isolated vertex.  Vertices are
    indexed in order of first appearance.
    """
    labels: list[str] = []
    seen: dict[str, int] = {}
    edges: list[tuple[int, int]] = []

    def intern(tok: str) -> int:
        if tok not in seen:
            seen[tok] = len(labels)
            labels.append(tok)
        return seen[tok]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) == 1:
            intern(toks[0])
        elif len(toks) == 2:
            u, v = intern(toks[0]), intern(toks[1])
            if u == v:
                raise EdgeTextParseError(f"loop at {toks[0]!r}", lineno)
            edges.append((u, v))
        else:
            raise EdgeTextParseError(f"expected one or two tokens, got {len(toks)}", lineno)
    return graph(labels, edges)


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise Graph6Error("only graphs on at most 62 vertices are encoded")
    out = [chr(g.n + 63)]
    bitstream = []
    for j in range(1, g.n):
        for i in range(j):
            bitstream.append(1 if g.adj[i] >> j & 1 else 0)
    for pos in range(0, len(bitstream), 6):
        chunk = bitstream[pos:pos + 6]
        chunk += [0] * (6 - len(chunk))
        value = 0
        for b in chunk:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    n = ord(s[0]) - 63
    if not 0 <= n <= 62:
        raise Graph6Error("unsupported graph6 vertex count byte")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data characters for n={n}, got {len(body)}")
    stream = []
    for ch in body:
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise Graph6Error(f"bad graph6 character {ch!r}")
        stream.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if stream[pos]:
                edges.append((i, j))
            pos += 1
    return graph(standard_labels(n), edges)
