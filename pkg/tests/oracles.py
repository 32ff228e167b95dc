"""Independent oracles the package code must agree with.

Nothing here imports from the implementation modules it checks beyond the
plain quiver value type, so agreement is meaningful: Fomin-Zelevinsky
matrix mutation for the m=1 comparison, and brute-force subset/permutation
searches for cycle enumeration, clique splits, and isomorphism.
"""

from __future__ import annotations

from itertools import combinations

from colq.quiver import ColouredQuiver, new_quiver


def quiver_to_fz_matrix(q: ColouredQuiver) -> list[list[int]]:
    """Encode a 1-coloured quiver as a skew-symmetric matrix: b_ij is the
    number of colour-0 arrows i->j minus the number j->i."""
    assert q.m == 1
    n = q.n
    b = [[0] * n for _ in range(n)]
    for i, j, c, mult in q.arrows():
        if c == 0:
            b[i - 1][j - 1] += mult
            b[j - 1][i - 1] -= mult
    return b


def fz_mutate(b: list[list[int]], k: int) -> list[list[int]]:
    """Fomin-Zelevinsky mutation of a skew-symmetric matrix at k (1-based)."""
    n = len(b)
    k -= 1
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -b[i][j]
            else:
                out[i][j] = b[i][j] + (abs(b[i][k]) * b[k][j] + b[i][k] * abs(b[k][j])) // 2
    return out


def fz_matrix_to_quiver(b: list[list[int]], m: int = 1) -> ColouredQuiver:
    n = len(b)
    arrows = []
    for i in range(n):
        for j in range(n):
            if b[i][j] > 0:
                arrows.extend([(i + 1, j + 1, 0)] * b[i][j])
    return new_quiver(n, m, arrows)


def subset_induced_cycles(q: ColouredQuiver, min_len: int = 3) -> set[frozenset[int]]:
    """Vertex sets whose induced underlying subgraph is a single cycle."""
    adj = {v: set(q.neighbours(v)) for v in q.vertices}
    out = set()
    for size in range(max(3, min_len), q.n + 1):
        for subset in combinations(q.vertices, size):
            inside = set(subset)
            degs = [len(adj[v] & inside) for v in subset]
            if any(d != 2 for d in degs):
                continue
            # all degree 2 with |edges| == |vertices|; connected iff one cycle
            seen = {subset[0]}
            stack = [subset[0]]
            while stack:
                v = stack.pop()
                for w in adj[v] & inside:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == size:
                out.add(frozenset(subset))
    return out


def bruteforce_clique_splits(q: ColouredQuiver, v: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every 2-clique partition of N(v) by trying all subsets."""
    nbrs = list(q.neighbours(v))
    found = set()
    for size in range(len(nbrs) + 1):
        for side1 in combinations(nbrs, size):
            side2 = [u for u in nbrs if u not in side1]
            if any(not q.adjacent(x, y) for x, y in combinations(side1, 2)):
                continue
            if any(not q.adjacent(x, y) for x, y in combinations(side2, 2)):
                continue
            if any(q.adjacent(x, y) for x in side1 for y in side2):
                continue
            pair = (tuple(sorted(side1 + (v,))), tuple(sorted(side2 + [v])))
            found.add(tuple(sorted(pair)))
    return sorted(found)
