"""Simple undirected graphs over bitmask vertex sets.

Vertex sets are plain Python ints: bit ``v`` is set iff vertex ``v`` is a
member. ``Graph.adj[v]`` is the open neighbourhood of ``v`` as such a mask.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

GRAPH6_MAX_N = 62


class GraphFormatError(ValueError):
    """Raised when a graph description cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# -- vertex sets ----------------------------------------------------------

def vset(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> Iterator[int]:
    """Yield the vertices of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def size(mask: int) -> int:
    return bin(mask).count("1")


def full_set(n: int) -> int:
    return (1 << n) - 1


def complement(mask: int, n: int) -> int:
    return full_set(n) & ~mask


# -- graph ----------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        universe = full_set(self.n)
        for v, nbrs in enumerate(self.adj):
            if nbrs & ~universe:
                raise ValueError(f"neighbour of {v} outside [0, {self.n})")
            if nbrs >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in members(nbrs):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertices(self) -> int:
        return full_set(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(size(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return size(self.adj[v])

    def isolated(self) -> int:
        """Mask of vertices with no neighbours."""
        return vset(v for v in range(self.n) if not self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)


# -- predicates -----------------------------------------------------------

def component_of(g: Graph, c: int, start: int) -> int:
    """Vertices of ``c`` reachable from ``start`` inside the subgraph induced by ``c``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        reach = 0
        for v in members(frontier):
            reach |= g.adj[v]
        frontier = reach & c & ~seen
        seen |= frontier
    return seen


def is_connected_induced(g: Graph, c: int) -> bool:
    # the empty set counts as connected; is_ocd_set never asks
    if not c:
        return True
    start = (c & -c).bit_length() - 1
    return component_of(g, c, start) == c


def undominated(g: Graph, s: int) -> int:
    """Mask of vertices outside ``s`` with no neighbour in ``s``."""
    out = 0
    for v in members(complement(s, g.n)):
        if not g.adj[v] & s:
            out |= 1 << v
    return out


def is_dominating(g: Graph, s: int) -> bool:
    return not undominated(g, s)


def is_ocd_set(g: Graph, s: int) -> bool:
    if not is_dominating(g, s):
        return False
    if s == g.vertices:
        return True
    return is_connected_induced(g, complement(s, g.n))


# -- edge list ------------------------------------------------------------

def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"non-integer token in {' '.join(tokens)!r}", lineno) from None


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v``; ``#`` starts a comment line."""
    lines = [
        (i, line.split())
        for i, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise GraphFormatError("missing header line 'n m'")
    lineno, header = lines[0]
    if len(header) != 2:
        raise GraphFormatError(f"header must be 'n m', got {' '.join(header)!r}", lineno)
    n, m = _ints(header, lineno)
    if n < 1:
        raise GraphFormatError(f"vertex count must be positive, got {n}", lineno)
    if m < 0:
        raise GraphFormatError(f"edge count must be nonnegative, got {m}", lineno)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else None
        raise GraphFormatError(f"header declares {m} edges, found {len(body)}", where)

    adj = [0] * n
    for lineno, tokens in body:
        if len(tokens) != 2:
            raise GraphFormatError(f"edge line must be 'u v', got {' '.join(tokens)!r}", lineno)
        u, v = _ints(tokens, lineno)
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphFormatError(f"vertex {x} out of range [0, {n})", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


# -- graph6 ---------------------------------------------------------------

def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (short size form only, n <= 62)."""
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise GraphFormatError("empty graph6 string")
    codes = [ord(ch) for ch in data]
    for pos, b in enumerate(codes):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {b} at offset {pos} outside [63, 126]")
    n = codes[0] - 63
    if n == 63:
        raise GraphFormatError(f"graphs with more than {GRAPH6_MAX_N} vertices are not supported")
    if n < 1:
        raise GraphFormatError("graph6 encodes the null graph")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = codes[1:]
    if len(body) < nbytes:
        raise GraphFormatError(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    if len(body) > nbytes:
        raise GraphFormatError(f"trailing garbage after {nbytes} data bytes")

    bits = 0
    for b in body:
        bits = bits << 6 | (b - 63)
    pad = 6 * nbytes - nbits
    if bits & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits")
    bits >>= pad

    adj = [0] * n
    k = nbits - 1
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for v in range(1, n):
        for u in range(v):
            if bits >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k -= 1
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {g.n}")
    if g.n < 1:
        raise ValueError("cannot encode the null graph")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(g.adj[u] >> v & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        chunk = 0
        for b in bits[i:i + 6]:
            chunk = chunk << 1 | b
        out.append(chr(63 + chunk))
    return "".join(out)


def random_graph(n: int, p: float, rng) -> Graph:
    """Erdos-Renyi G(n, p) drawn from ``rng`` (a ``random.Random``)."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)
