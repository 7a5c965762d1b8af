"""Simple undirected graphs with bitset adjacency.

Vertices are always labelled 0..n-1.  Vertex sets are plain Python ints used
as bitmasks, which keeps every neighbourhood operation a single AND/OR and
makes popcounts cheap.  Operations that relabel vertices return the kept
labels so callers can report results in the original labelling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask for an iterable of vertex labels."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex count plus per-vertex adjacency masks."""

    n: int
    adj: tuple[int, ...]
    edge_count: int

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        count = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if not adj[u] >> v & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                count += 1
        return Graph(n, tuple(adj), count)

    @staticmethod
    def complete(n: int) -> "Graph":
        full = full_mask(n)
        return Graph(n, tuple(full ^ (1 << v) for v in range(n)), n * (n - 1) // 2)

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, (0,) * n, 0)

    @staticmethod
    def path(n: int) -> "Graph":
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @staticmethod
    def cycle(n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @staticmethod
    def star(leaves: int) -> "Graph":
        """K_{1,q} with the centre at vertex 0."""
        return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    def min_degree(self) -> int:
        return min((a.bit_count() for a in self.adj), default=0)

    def induced_edge_count(self, u: int) -> int:
        """Number of edges with both endpoints in the vertex set `u`."""
        self._check_range(u)
        total = 0
        for v in bits(u):
            total += (self.adj[v] & u).bit_count()
        return total // 2

    def _check_range(self, u: int) -> None:
        if u < 0 or u >> self.n:
            raise ValueError(f"vertex set {bin(u)} out of range for n={self.n}")


def edge_density(g: Graph, u: int):
    """Induced edge count over C(|u|,2); 0 for sets of size at most 1."""
    from fractions import Fraction

    g._check_range(u)
    size = u.bit_count()
    if size <= 1:
        return Fraction(0)
    return Fraction(g.induced_edge_count(u), size * (size - 1) // 2)


def delete_vertices(g: Graph, u: int) -> tuple[Graph, tuple[int, ...]]:
    """Remove the masked vertices; returns the new graph and the kept labels."""
    g._check_range(u)
    kept = [v for v in range(g.n) if not u >> v & 1]
    index = {v: i for i, v in enumerate(kept)}
    adj = [0] * len(kept)
    count = 0
    for i, v in enumerate(kept):
        for w in bits(g.adj[v] & ~u):
            if w > v:
                adj[i] |= 1 << index[w]
                adj[index[w]] |= 1 << i
                count += 1
    return Graph(len(kept), tuple(adj), count), tuple(kept)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all cross edges; h's vertices are shifted by g.n."""
    n = g.n + h.n
    gmask = full_mask(g.n)
    hmask = full_mask(h.n) << g.n
    adj = [g.adj[v] | hmask for v in range(g.n)]
    adj += [(h.adj[v] << g.n) | gmask for v in range(h.n)]
    return Graph(n, tuple(adj), g.edge_count + h.edge_count + g.n * h.n)


# --- serialization -----------------------------------------------------------

def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Whitespace edge list, one "u v" pair per line, 0-based labels.

    Blank lines and lines starting with '#' are skipped.  When `n` is not
    given it is inferred as max label + 1.
    """
    edges = []
    top = -1
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer label in {line!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative label in {line!r}")
        edges.append((u, v))
        top = max(top, u, v)
    if n is None:
        n = top + 1
    return Graph.from_edges(n, edges)


def write_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def _g6_size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise ValueError("graph6 writer supports n <= 258047")


def to_graph6(g: Graph) -> str:
    """Encode in graph6: size bytes then the upper triangle, column-major."""
    out = bytearray(_g6_size_bytes(g.n))
    buf = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            buf = buf << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(buf + 63)
                buf = nbits = 0
    if nbits:
        out.append((buf << (6 - nbits)) + 63)
    return out.decode("ascii")


def from_graph6(text: str) -> Graph:
    """Decode a graph6 line; tolerates the optional '>>graph6<<' header."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii")
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise ValueError("graph6 reader supports n <= 258047")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n < 0:
        raise ValueError("bad graph6 size byte")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need}")
    bitstream = 0
    for b in body:
        if not 63 <= b <= 126:
            raise ValueError(f"bad graph6 byte {b}")
        bitstream = bitstream << 6 | (b - 63)
    total = 6 * len(body)
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bitstream >> (total - 1 - pos) & 1:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)
