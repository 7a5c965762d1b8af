"""Blue/red edge colorings of complete graphs and their structural objects.

A TwoColoring stores the blue adjacency masks; the red graph is the exact
complement, so blue and red edge counts always add up to C(n,2).  The
monochromatic-pair notion: an ordered pair (X, Y) of disjoint vertex sets is
monochromatic in color c when every edge inside X union Y that touches X has
color c (edges inside Y are unconstrained).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .graphs import Graph, bits, full_mask, mask_of


class Color(enum.Enum):
    BLUE = "blue"
    RED = "red"

    @property
    def other(self) -> "Color":
        return Color.RED if self is Color.BLUE else Color.BLUE

    def __str__(self) -> str:
        return self.value


def pair_index(i: int, j: int, n: int) -> int:
    """Row-major index of the unordered pair i<j among all C(n,2) pairs."""
    if i > j:
        i, j = j, i
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class TwoColoring:
    """A 2-coloring of K_n, held as blue adjacency masks per vertex."""

    n: int
    blue: tuple[int, ...]

    def __post_init__(self):
        full = full_mask(self.n)
        for v, row in enumerate(self.blue):
            if row >> v & 1:
                raise ValueError(f"self-loop colored at vertex {v}")
            if row & ~full:
                raise ValueError("blue mask out of range")
        for v in range(self.n):
            for w in bits(self.blue[v]):
                if not self.blue[w] >> v & 1:
                    raise ValueError(f"asymmetric blue adjacency at ({v},{w})")

    @staticmethod
    def uniform(n: int, color: Color) -> "TwoColoring":
        if color is Color.BLUE:
            full = full_mask(n)
            return TwoColoring(n, tuple(full ^ (1 << v) for v in range(n)))
        return TwoColoring(n, (0,) * n)

    @staticmethod
    def from_blue_edges(n: int, edges: Iterable[tuple[int, int]]) -> "TwoColoring":
        g = Graph.from_edges(n, edges)
        return TwoColoring(n, g.adj)

    @staticmethod
    def from_blue_graph(g: Graph) -> "TwoColoring":
        return TwoColoring(g.n, g.adj)

    @staticmethod
    def from_pair_mask(n: int, mask: int) -> "TwoColoring":
        """Build from a row-major bitmask over pairs i<j; bit 1 means blue."""
        blue = [0] * n
        idx = 0
        for i in range(n):
            for j in range(i + 1, n):
                if mask >> idx & 1:
                    blue[i] |= 1 << j
                    blue[j] |= 1 << i
                idx += 1
        return TwoColoring(n, tuple(blue))

    def pair_mask(self) -> int:
        mask = 0
        idx = 0
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.blue[i] >> j & 1:
                    mask |= 1 << idx
                idx += 1
        return mask

    def adj(self, v: int, color: Color) -> int:
        if color is Color.BLUE:
            return self.blue[v]
        return full_mask(self.n) ^ self.blue[v] ^ (1 << v)

    def color_of(self, u: int, v: int) -> Color:
        if u == v:
            raise ValueError("no self-edges in K_n")
        return Color.BLUE if self.blue[u] >> v & 1 else Color.RED


def monochromatic_subgraph(c: TwoColoring, color: Color) -> Graph:
    """The blue (or red) graph of the coloring."""
    adj = tuple(c.adj(v, color) for v in range(c.n))
    count = sum(a.bit_count() for a in adj) // 2
    return Graph(c.n, adj, count)


def induced_coloring(c: TwoColoring, u: int) -> tuple[TwoColoring, tuple[int, ...]]:
    """Restrict to the vertex set `u`, relabelled 0..|u|-1; returns labels."""
    if u < 0 or u >> c.n:
        raise ValueError("vertex set out of range")
    kept = list(bits(u))
    index = {v: i for i, v in enumerate(kept)}
    blue = [0] * len(kept)
    for i, v in enumerate(kept):
        for w in bits(c.blue[v] & u):
            blue[i] |= 1 << index[w]
    return TwoColoring(len(kept), tuple(blue)), tuple(kept)


class Violation(NamedTuple):
    """Two edges at a common X-vertex seen in different colors."""

    edge_a: tuple[int, int]
    color_a: Color
    edge_b: tuple[int, int]
    color_b: Color


@dataclass(frozen=True)
class MonoPair:
    x: int
    y: int
    color: Color
    partial: bool = False

    def sizes(self) -> tuple[int, int]:
        return self.x.bit_count(), self.y.bit_count()


def check_mono_pair(c: TwoColoring, x: int, y: int):
    """Classify the pair: the unique witnessed color, or a Violation.

    X must be nonempty and disjoint from Y.  If no edge inside X union Y
    touches X (singleton X with empty Y) the pair is vacuously monochromatic
    and RED is returned by convention.
    """
    if x == 0:
        raise ValueError("X must be nonempty")
    if x & y:
        raise ValueError("X and Y must be disjoint")
    if (x | y) >> c.n or x < 0 or y < 0:
        raise ValueError("pair out of range")
    union = x | y
    seen: tuple[tuple[int, int], Color] | None = None
    for v in bits(x):
        rest = union & ~(1 << v)
        blue_part = c.blue[v] & rest
        red_part = rest & ~c.blue[v]
        for part, col in ((blue_part, Color.BLUE), (red_part, Color.RED)):
            if not part:
                continue
            w = (part & -part).bit_length() - 1
            if seen is None:
                seen = ((v, w), col)
            elif seen[1] is not col:
                return Violation(seen[0], seen[1], (v, w), col)
        # a second differing color inside the same vertex's star
        if blue_part and red_part:
            b = (blue_part & -blue_part).bit_length() - 1
            r = (red_part & -red_part).bit_length() - 1
            return Violation((v, b), Color.BLUE, (v, r), Color.RED)
    return seen[1] if seen is not None else Color.RED


def validate_mono_pair(c: TwoColoring, pair: MonoPair) -> bool:
    """True when the pair is monochromatic in its claimed color."""
    result = check_mono_pair(c, pair.x, pair.y)
    if isinstance(result, Violation):
        return False
    if pair.x.bit_count() == 1 and pair.y == 0:
        return True  # vacuous: either claim is consistent
    # a uniform pair with edges is monochromatic in exactly one color
    return result is pair.color


@dataclass(frozen=True)
class Embedding:
    """An injective map of a pattern into a host coloring, one color."""

    pattern: Graph
    host_vertices: tuple[int, ...]
    color: Color

    def host_mask(self) -> int:
        return mask_of(self.host_vertices)


def check_embedding(c: TwoColoring, e: Embedding) -> bool:
    """Re-validate every pattern edge against the host coloring."""
    if len(e.host_vertices) != e.pattern.n:
        return False
    if len(set(e.host_vertices)) != e.pattern.n:
        return False
    if any(not 0 <= h < c.n for h in e.host_vertices):
        return False
    for u, v in e.pattern.edges():
        hu, hv = e.host_vertices[u], e.host_vertices[v]
        if c.color_of(hu, hv) is not e.color:
            return False
    return True


# --- serialization -----------------------------------------------------------

def coloring_to_text(c: TwoColoring) -> str:
    """`n` then the row-major pair bit string; '1' = blue."""
    total = c.n * (c.n - 1) // 2
    mask = c.pair_mask()
    bits_str = "".join("1" if mask >> i & 1 else "0" for i in range(total))
    return f"{c.n} {bits_str}"

def coloring_from_text(text: str) -> TwoColoring:
    parts = text.split()
    if not parts:
        raise ValueError("empty coloring text")
    try:
        n = int(parts[0])
    except ValueError:
        raise ValueError(f"bad vertex count {parts[0]!r}") from None
    bits_str = "".join(parts[1:])
    total = n * (n - 1) // 2
    if len(bits_str) != total:
        raise ValueError(f"expected {total} bits for n={n}, got {len(bits_str)}")
    mask = 0
    for i, ch in enumerate(bits_str):
        if ch == "1":
            mask |= 1 << i
        elif ch != "0":
            raise ValueError(f"bad bit character {ch!r}")
    return TwoColoring.from_pair_mask(n, mask)
