"""Path weights, cycle colourations, Euler characteristic, and the
subgraph-discovery toolkit (induced cycles, clique splits, quasi-complete
checks) that the class recognizers are built on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DisconnectedError, MissingArrowError, NotACycleError
from .quiver import ColouredQuiver, UnderlyingGraph, underlying_graph


def path_weight(q: ColouredQuiver, path: Sequence[int]) -> int:
    """Sum of arrow colours along consecutive vertices of a path."""
    if len(path) < 2:
        return 0
    total = 0
    for a, b in zip(path, path[1:]):
        c = q.colour_of(a, b)
        if c is None:
            raise MissingArrowError(f"no arrow {a}->{b}")
        total += c
    return total


@dataclass(frozen=True)
class CycleReport:
    cycle: tuple[int, ...]
    forward_weight: int
    reverse_weight: int
    colouration: int


def cycle_colouration(q: ColouredQuiver, cycle: Sequence[int]) -> CycleReport:
    """Both traversal weights of a closed simple cycle and their minimum."""
    verts = list(cycle)
    if len(verts) >= 2 and verts[0] == verts[-1]:
        verts = verts[:-1]
    if len(verts) < 3 or len(set(verts)) != len(verts):
        raise NotACycleError(f"{tuple(cycle)} is not a simple cycle")
    closed = verts + [verts[0]]
    forward = path_weight(q, closed)
    reverse = path_weight(q, closed[::-1])
    return CycleReport(tuple(verts), forward, reverse, min(forward, reverse))


def euler_characteristic(q: ColouredQuiver) -> int:
    """|edges| - |vertices| + 1 of the underlying graph (connected only)."""
    g = underlying_graph(q)
    if not g.is_connected:
        raise DisconnectedError("Euler characteristic needs a connected quiver")
    return g.edge_count - q.n + 1


# -- cycle enumeration ------------------------------------------------------


def _adjacency(source: ColouredQuiver | UnderlyingGraph) -> dict[int, set[int]]:
    if isinstance(source, ColouredQuiver):
        return {v: set(source.neighbours(v)) for v in source.vertices}
    return source.adjacency()


def enumerate_induced_cycles(
    source: ColouredQuiver | UnderlyingGraph, min_len: int = 3
) -> list[tuple[int, ...]]:
    """All induced (chordless) cycles of the underlying graph with length
    >= min_len, each reported once up to rotation and reflection, as a
    vertex tuple starting at its smallest label.
    """
    adj = _adjacency(source)
    n = len(adj)
    cycles: list[tuple[int, ...]] = []
    for s in range(1, n + 1):
        higher = sorted(u for u in adj[s] if u > s)
        for u in higher:
            # paths s, u, ... that stay chordless; close back at s
            stack = [[s, u]]
            while stack:
                path = stack.pop()
                last = path[-1]
                interior = path[1:-1]
                for w in sorted(adj[last]):
                    if w <= s or w in path:
                        continue
                    if any(w in adj[p] for p in interior):
                        continue
                    if w in adj[s]:
                        if path[1] < w and len(path) + 1 >= min_len:
                            cycles.append(tuple(path + [w]))
                    else:
                        stack.append(path + [w])
    return sorted(cycles, key=lambda c: (len(c), c))


def enumerate_simple_cycles(
    source: ColouredQuiver | UnderlyingGraph,
    min_len: int = 3,
    max_len: int | None = None,
) -> list[tuple[int, ...]]:
    """All simple cycles of the underlying graph, chords allowed, once up
    to rotation and reflection."""
    adj = _adjacency(source)
    n = len(adj)
    limit = max_len if max_len is not None else n
    cycles: list[tuple[int, ...]] = []
    for s in range(1, n + 1):
        stack = [[s, u] for u in sorted(adj[s]) if u > s]
        while stack:
            path = stack.pop()
            last = path[-1]
            for w in sorted(adj[last]):
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        if min_len <= len(path) <= limit:
                            cycles.append(tuple(path))
                    continue
                if w < s or w in path:
                    continue
                if len(path) < limit:
                    stack.append(path + [w])
    return sorted(cycles, key=lambda c: (len(c), c))


def triangles(source: ColouredQuiver | UnderlyingGraph) -> list[tuple[int, int, int]]:
    """All 3-cliques of the underlying graph, as sorted vertex triples."""
    adj = _adjacency(source)
    out = []
    for i in sorted(adj):
        for j in sorted(v for v in adj[i] if v > i):
            for k in sorted(v for v in adj[i] & adj[j] if v > j):
                out.append((i, j, k))
    return out


def holes(source: ColouredQuiver | UnderlyingGraph) -> list[tuple[int, ...]]:
    """Induced cycles of length at least four."""
    return enumerate_induced_cycles(source, min_len=4)


# -- cliques and clique splits ---------------------------------------------


def is_clique(q: ColouredQuiver, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(q.adjacent(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


def maximal_cliques(source: ColouredQuiver | UnderlyingGraph) -> list[tuple[int, ...]]:
    """Bron-Kerbosch with pivoting over the underlying graph."""
    adj = _adjacency(source)
    out: list[tuple[int, ...]] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda v: len(adj[v] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    expand(set(), set(adj), set())
    return sorted(out, key=lambda c: (len(c), c))


def clique_splits(q: ColouredQuiver, v: int):
    """Yield every partition of N(v) into two cliques with no cross arrows.

    Each result is a pair of sorted vertex tuples, both containing v; the
    smallest neighbour always sits in the first clique, so each unordered
    split appears once.  A trivial clique {v} is allowed on either side.
    """
    nbrs = sorted(q.neighbours(v))
    z = len(nbrs)
    if z == 0:
        yield ((v,), (v,))
        return
    for mask in range(2 ** (z - 1)):
        side1 = [nbrs[0]] + [nbrs[i + 1] for i in range(z - 1) if mask >> i & 1]
        side2 = [u for u in nbrs if u not in side1]
        if not is_clique(q, side1) or not is_clique(q, side2):
            continue
        if any(q.adjacent(a, b) for a in side1 for b in side2):
            continue
        yield (tuple(sorted(side1 + [v])), tuple(sorted(side2 + [v])))


def two_clique_split(q: ColouredQuiver, v: int):
    """First clique split of the closed neighbourhood of v, or None."""
    for split in clique_splits(q, v):
        return split
    return None


def quasi_complete_check(q: ColouredQuiver, a: int, b: int, middles: Iterable[int]) -> bool:
    """True iff {a, b} + middles induces a complete quiver minus exactly
    the pair {a, b}."""
    mids = sorted(set(middles))
    if a == b or a in mids or b in mids:
        return False
    if q.adjacent(a, b):
        return False
    vs = [a, b] + mids
    for i, x in enumerate(vs):
        for y in vs[i + 1:]:
            if {x, y} == {a, b}:
                continue
            if not q.adjacent(x, y):
                return False
    return True
