"""Edge-list and graph6 text forms.

Edge list: a header line ``n <count>``, then one ``u v`` pair per line,
0-based; lines starting with ``#`` and blank lines are ignored.
graph6: the usual printable encoding of the upper-triangle bit string
(columns j = 1..n-1, rows i < j), six bits per character offset by 63.
"""

from __future__ import annotations

from .graph import Graph, edge_order

G6_HEADER = ">>graph6<<"


class GraphParseError(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    raise ValueError(f"graph6 cannot encode n={n}")


def to_graph6(g: Graph) -> str:
    bitstr = [1 if g.has_edge(i, j) else 0 for i, j in edge_order(g.n)]
    bitstr += [0] * (-len(bitstr) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bitstr[k : k + 6])), 2)) for k in range(0, len(bitstr), 6)
    )
    return _encode_n(g.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER) :]
    if not s or any(not 63 <= ord(c) <= 126 for c in s):
        raise GraphParseError(f"not a graph6 string: {text!r}")
    vals = [ord(c) - 63 for c in s]
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise GraphParseError("graph6 strings with n > 258047 are not supported")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        vals = vals[4:]
    else:
        n = vals[0]
        vals = vals[1:]
    pairs = edge_order(n)
    need = -(-len(pairs) // 6)
    if len(vals) != need:
        raise GraphParseError(f"graph6 body has {len(vals)} characters, expected {need} for n={n}")
    bitstr = [(v >> (5 - k)) & 1 for v in vals for k in range(6)]
    return Graph.from_edges(n, (p for p, b in zip(pairs, bitstr) if b))


def to_edgelist(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphParseError(f"line {lineno}: expected header 'n <count>', got {raw!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphParseError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            continue
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer vertex in {raw!r}") from None
    if n is None:
        raise GraphParseError("missing 'n <count>' header")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphParseError(str(exc)) from None


def parse_graph(text: str) -> Graph:
    """Auto-detect the form: an ``n <count>`` header means edge list."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.split()[0] == "n":
            return from_edgelist(text)
        return from_graph6(line)
    raise GraphParseError("empty graph text")


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
