"""Counting engines for the ocd polynomial.

Two independent routes produce the same coefficient vector:

* ``ocd_polynomial_bruteforce`` tests every subset of V with ``is_ocd_set``.
* ``ocd_polynomial_fast`` walks the connected induced subgraphs C of G and
  keeps those where every vertex of C still has a neighbour outside C; the
  set S = V \\ C is then dominating with connected complement.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .graph import (
    Graph,
    complement,
    component_of,
    full_set,
    is_ocd_set,
    members,
    size,
    undominated,
)
from .polynomial import OcdPolynomial

BRUTE_FORCE_MAX_N = 25
ENGINES = ("brute", "fast")


class GuardError(ValueError):
    """Input is outside the range an engine accepts."""


@dataclass
class EnumerationStats:
    candidates_visited: int = 0
    ocd_sets_found: int = 0
    elapsed: float = 0.0

    def __add__(self, other: EnumerationStats) -> EnumerationStats:
        return EnumerationStats(
            self.candidates_visited + other.candidates_visited,
            self.ocd_sets_found + other.ocd_sets_found,
            self.elapsed + other.elapsed,
        )


@dataclass(frozen=True)
class Verdict:
    dominating: bool
    outer_connected: bool
    ocd: bool
    undominated_vertex: int | None = None
    split_pair: tuple[int, int] | None = None


# -- brute force ----------------------------------------------------------

def _check_guard(g: Graph):
    if not 1 <= g.n <= BRUTE_FORCE_MAX_N:
        raise GuardError(f"brute-force engine accepts 1 <= n <= {BRUTE_FORCE_MAX_N}, got n={g.n}")


def iter_ocd_sets_bruteforce(g: Graph) -> Iterator[int]:
    _check_guard(g)
    for s in range(1 << g.n):
        if is_ocd_set(g, s):
            yield s


def ocd_polynomial_bruteforce(g: Graph) -> tuple[OcdPolynomial, EnumerationStats]:
    _check_guard(g)
    t0 = time.perf_counter()
    counts = [0] * (g.n + 1)
    for s in range(1 << g.n):
        if is_ocd_set(g, s):
            counts[size(s)] += 1
    stats = EnumerationStats(1 << g.n, sum(counts), time.perf_counter() - t0)
    return OcdPolynomial(g.n, tuple(counts)), stats


# -- connected induced subgraphs ------------------------------------------
#
# Subgraphs are grown from their minimum vertex r.  A frame (C, X, F) holds
# the current set C, its extension candidates X = N(C) \ C \ F, and the
# forbidden set F.  Branching on the lowest v in X adds v to C; the sibling
# branches that follow forbid v, so every set is reached exactly once.

def _walk_anchor(adj: tuple[int, ...], r: int) -> Iterator[int]:
    c0 = 1 << r
    forbid = c0 - 1
    yield c0
    stack = [(c0, adj[r] & ~forbid, forbid)]
    while stack:
        c, ext, forbid = stack[-1]
        if not ext:
            stack.pop()
            continue
        low = ext & -ext
        rest = ext ^ low
        stack[-1] = (c, rest, forbid | low)
        child = c | low
        yield child
        stack.append((child, (rest | adj[low.bit_length() - 1]) & ~child & ~forbid, forbid))


def enumerate_connected_induced_subgraphs(g: Graph) -> Iterator[int]:
    """Yield every nonempty vertex mask inducing a connected subgraph, once each.

    Order is fixed: anchors ascending, then depth-first by vertex index.
    """
    for r in range(g.n):
        yield from _walk_anchor(g.adj, r)


def _count_anchor(adj: tuple[int, ...], n: int, r: int, prune: bool) -> tuple[list[int], int]:
    """Accepted-complement counts (indexed by |S|) and visit count for anchor r."""
    counts = [0] * (n + 1)
    visited = 1
    # a vertex is trapped when all its neighbours lie inside C; supersets stay trapped
    c0 = 1 << r
    forbid = c0 - 1
    trapped = not adj[r] & ~c0
    if not trapped:
        counts[n - 1] += 1
    elif prune:
        return counts, visited
    stack = [(c0, adj[r] & ~forbid, forbid, trapped, 1)]
    while stack:
        c, ext, forbid, trapped, k = stack[-1]
        if not ext:
            stack.pop()
            continue
        low = ext & -ext
        rest = ext ^ low
        stack[-1] = (c, rest, forbid | low, trapped, k)
        nv = adj[low.bit_length() - 1]
        child = c | low
        visited += 1
        t = trapped
        if not t:
            outside = ~child
            if not nv & outside:
                t = True
            else:
                touched = nv & c
                while touched:
                    lu = touched & -touched
                    if not adj[lu.bit_length() - 1] & outside:
                        t = True
                        break
                    touched ^= lu
        if not t:
            counts[n - k - 1] += 1
        elif prune:
            continue
        stack.append((child, (rest | nv) & ~child & ~forbid, forbid, t, k + 1))
    return counts, visited


def _count_anchor_job(args):
    return _count_anchor(*args)


def ocd_polynomial_fast(
    g: Graph, *, prune: bool = True, workers: int = 1
) -> tuple[OcdPolynomial, EnumerationStats]:
    """Count ocd-sets by enumerating their connected complements.

    Once a complement traps a vertex (all its neighbours inside C) every
    extension of it is rejected too, so by default that subtree is skipped.
    ``prune=False`` walks every connected induced subgraph instead, making
    ``candidates_visited`` equal to their number; the polynomial is the same
    either way.  ``workers > 1`` fans the anchor loop out over processes and
    sums the partial counts.
    """
    if g.n < 1:
        raise GuardError("graph must have at least one vertex")
    t0 = time.perf_counter()
    jobs = [(g.adj, g.n, r, prune) for r in range(g.n)]
    if workers > 1 and g.n > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_count_anchor_job, jobs))
    else:
        parts = [_count_anchor(*job) for job in jobs]
    counts = [0] * (g.n + 1)
    counts[g.n] = 1
    visited = 0
    for part, seen in parts:
        visited += seen
        for i, c in enumerate(part):
            counts[i] += c
    stats = EnumerationStats(visited, sum(counts), time.perf_counter() - t0)
    return OcdPolynomial(g.n, tuple(counts)), stats


def complement_accepted(g: Graph, c: int) -> bool:
    """True iff every vertex of ``c`` has a neighbour outside ``c``."""
    outside = ~c
    return all(g.adj[v] & outside for v in members(c))


def iter_ocd_sets_fast(g: Graph) -> Iterator[int]:
    yield g.vertices
    for c in enumerate_connected_induced_subgraphs(g):
        if complement_accepted(g, c):
            yield complement(c, g.n)


def iter_ocd_sets(g: Graph, engine: str = "fast") -> Iterator[int]:
    if engine == "brute":
        return iter_ocd_sets_bruteforce(g)
    if engine == "fast":
        return iter_ocd_sets_fast(g)
    raise ValueError(f"unknown engine {engine!r}")


def ocd_polynomial(g: Graph, engine: str = "fast") -> tuple[OcdPolynomial, EnumerationStats]:
    if engine == "brute":
        return ocd_polynomial_bruteforce(g)
    if engine == "fast":
        return ocd_polynomial_fast(g)
    raise ValueError(f"unknown engine {engine!r}")


def min_ocd_number(g: Graph, engine: str = "fast") -> int:
    if engine == "brute":
        return ocd_polynomial_bruteforce(g)[0].min_degree()
    if engine != "fast":
        raise ValueError(f"unknown engine {engine!r}")
    if g.n < 1:
        raise GuardError("graph must have at least one vertex")
    # largest accepted complement; pruning is safe since only acceptance matters
    best = 0
    for r in range(g.n):
        counts, _ = _count_anchor(g.adj, g.n, r, True)
        for i, c in enumerate(counts):
            if c:
                best = max(best, g.n - i)
                break
    return g.n - best


def check_set(g: Graph, s: int) -> Verdict:
    """Evaluate both ocd conditions for ``s`` and report a witness for each failure."""
    bad = undominated(g, s)
    dominating = not bad
    witness_vertex = (bad & -bad).bit_length() - 1 if bad else None

    rest = complement(s, g.n)
    pair = None
    if s == full_set(g.n) or not rest:
        outer = True
    else:
        first = (rest & -rest).bit_length() - 1
        comp = component_of(g, rest, first)
        outer = comp == rest
        if not outer:
            other = rest & ~comp
            pair = (first, (other & -other).bit_length() - 1)
    return Verdict(dominating, outer, dominating and outer, witness_vertex, pair)
