"""Named graph families with closed-form ocd polynomials.

Each closed form follows from how the connected complements C = V \\ S of the
family look (intervals on a path, arcs on a cycle, ...) together with the
acceptance rule that every vertex of C keeps a neighbour outside C.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graph import Graph
from .polynomial import OcdPolynomial

KINDS = ("complete", "empty", "path", "cycle", "star", "kab")


@dataclass(frozen=True)
class GraphFamily:
    kind: str
    n: int = 0
    leaves: int = 0
    a: int = 0
    b: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family {self.kind!r}; choose from {', '.join(KINDS)}")
        if self.kind in ("complete", "empty", "path") and self.n < 1:
            raise ValueError(f"{self.kind} needs n >= 1, got {self.n}")
        if self.kind == "cycle" and self.n < 3:
            raise ValueError(f"cycle needs n >= 3, got {self.n}")
        if self.kind == "star" and self.leaves < 1:
            raise ValueError(f"star needs leaves >= 1, got {self.leaves}")
        if self.kind == "kab" and (self.a < 1 or self.b < 1):
            raise ValueError(f"kab needs a, b >= 1, got a={self.a}, b={self.b}")

    @property
    def order(self) -> int:
        if self.kind == "star":
            return self.leaves + 1
        if self.kind == "kab":
            return self.a + self.b
        return self.n

    @property
    def label(self) -> str:
        if self.kind == "star":
            return f"star({self.leaves})"
        if self.kind == "kab":
            return f"kab({self.a},{self.b})"
        return f"{self.kind}({self.n})"


def Complete(n: int) -> GraphFamily:
    return GraphFamily("complete", n=n)


def Empty(n: int) -> GraphFamily:
    return GraphFamily("empty", n=n)


def Path(n: int) -> GraphFamily:
    return GraphFamily("path", n=n)


def Cycle(n: int) -> GraphFamily:
    return GraphFamily("cycle", n=n)


def Star(leaves: int) -> GraphFamily:
    return GraphFamily("star", leaves=leaves)


def CompleteBipartite(a: int, b: int) -> GraphFamily:
    return GraphFamily("kab", a=a, b=b)


def build(f: GraphFamily) -> Graph:
    n = f.order
    if f.kind == "complete":
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    elif f.kind == "empty":
        edges = []
    elif f.kind == "path":
        edges = [(v, v + 1) for v in range(n - 1)]
    elif f.kind == "cycle":
        edges = [(v, (v + 1) % n) for v in range(n)]
    elif f.kind == "star":
        edges = [(0, v) for v in range(1, n)]
    else:
        edges = [(u, f.a + w) for u in range(f.a) for w in range(f.b)]
    return Graph.from_edges(n, edges)


def family_polynomial(f: GraphFamily) -> OcdPolynomial:
    n = f.order
    c = [0] * (n + 1)
    c[n] = 1
    if f.kind == "complete":
        for i in range(1, n + 1):
            c[i] = comb(n, i)
    elif f.kind == "empty":
        pass
    elif f.kind == "path":
        # singleton complements need a neighbour, which K1 lacks
        c[n - 1] += n if n >= 2 else 0
        if n >= 2:
            c[n - 2] += max(0, n - 3)
    elif f.kind == "cycle":
        c[n - 1] += n
        c[n - 2] += n
    elif f.kind == "star":
        c[n - 1] += n
    else:
        a, b = f.a, f.b
        c[n - 1] += n
        for i in range(1, a):
            for j in range(1, b):
                c[n - i - j] += comb(a, i) * comb(b, j)
    return OcdPolynomial(n, tuple(c))


def from_args(name: str, n: int | None = None, leaves: int | None = None,
              a: int | None = None, b: int | None = None) -> GraphFamily:
    """Build a family from CLI-style parameters; ``star`` also accepts ``n`` as leaves."""
    name = name.lower()
    if name == "star" and leaves is None:
        leaves = n
    kwargs = {"complete": {"n": n}, "empty": {"n": n}, "path": {"n": n}, "cycle": {"n": n},
              "star": {"leaves": leaves}, "kab": {"a": a, "b": b}}.get(name)
    if kwargs is None:
        raise ValueError(f"unknown family {name!r}; choose from {', '.join(KINDS)}")
    missing = [k for k, v in kwargs.items() if v is None]
    if missing:
        raise ValueError(f"family {name} needs --{' --'.join(missing)}")
    return GraphFamily(name, **kwargs)


def instances(max_order: int) -> list[GraphFamily]:
    """Every family instance with at most ``max_order`` vertices."""
    out = []
    for n in range(1, max_order + 1):
        out += [Complete(n), Empty(n), Path(n)]
        if n >= 3:
            out.append(Cycle(n))
        if n >= 2:
            out.append(Star(n - 1))
        for a in range(1, n):
            out.append(CompleteBipartite(a, n - a))
    return out
