"""Canonical forms and isomorphism testing for coloured quivers.

Isomorphism here is colour-preserving: vertex labels may be permuted,
colour values may not.  The canonical form is computed by iterative
refinement of vertex classes on in/out colour signatures, followed by
individualization of the first non-singleton class and recursion; the
smallest adjacency encoding over all branches is the key.  Instances are
tiny (n <= ~20, usually <= 8), so correctness beats asymptotics.
"""

from __future__ import annotations

from itertools import permutations

from .quiver import ColouredQuiver

CanonKey = bytes


def _relation_codes(q: ColouredQuiver) -> list[list[tuple[int, int]]]:
    """rel[v][u] = (colour+1, multiplicity) of v->u, or (0, 0) when absent."""
    n = q.n
    rel = [[(0, 0)] * n for _ in range(n)]
    for i, j, c, mult in q.arrows():
        rel[i - 1][j - 1] = (c + 1, mult)
    return rel


def _refine(n: int, rel: list[list[tuple[int, int]]], classes: list[int]) -> list[int]:
    """Stable colour refinement; class ids are assigned by sorted signature."""
    while True:
        sigs = []
        for v in range(n):
            row = sorted((classes[u], rel[v][u]) for u in range(n) if u != v)
            sigs.append((classes[v], tuple(row)))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        refined = [order[s] for s in sigs]
        if refined == classes:
            return classes
        classes = refined


def _encode(q: ColouredQuiver, order: list[int]) -> bytes:
    """Byte encoding of the quiver relabelled so order[pos] gets label pos."""
    n = q.n
    out = bytearray((n, q.m))
    for a in order:
        row = q._table  # noqa: SLF001 - hot loop over own internals
        for b in order:
            if a == b:
                out += b"\x00\x00"
                continue
            entry = row.get((a + 1, b + 1))
            if entry is None:
                out += b"\x00\x00"
            else:
                if entry[1] > 255:
                    raise ValueError("canonical form supports multiplicities <= 255")
                out += bytes((entry[0] + 1, entry[1]))
    return bytes(out)


def canonical_form(q: ColouredQuiver) -> CanonKey:
    """Canonical byte key: equal exactly for colour-preserving-isomorphic quivers."""
    if q.n > 255 or q.m > 254:
        raise ValueError("canonical form supports n <= 255 and m <= 254")
    n = q.n
    rel = _relation_codes(q)
    best: list[bytes | None] = [None]

    def search(classes: list[int]) -> None:
        classes = _refine(n, rel, classes)
        cells: dict[int, list[int]] = {}
        for v, cl in enumerate(classes):
            cells.setdefault(cl, []).append(v)
        target = None
        for cl in sorted(cells):
            if len(cells[cl]) > 1:
                target = cells[cl]
                break
        if target is None:
            order = sorted(range(n), key=classes.__getitem__)
            enc = _encode(q, order)
            if best[0] is None or enc < best[0]:
                best[0] = enc
            return
        for v in target:
            branched = [2 * cl + (0 if u == v else 1) for u, cl in enumerate(classes)]
            search(branched)

    search([0] * n)
    assert best[0] is not None
    return best[0]


def is_isomorphic(q1: ColouredQuiver, q2: ColouredQuiver) -> bool:
    """Colour-preserving isomorphism via canonical form equality."""
    if q1.n != q2.n or q1.m != q2.m:
        return False
    if q1.total_arrow_count != q2.total_arrow_count:
        return False
    return canonical_form(q1) == canonical_form(q2)


def is_isomorphic_bruteforce(q1: ColouredQuiver, q2: ColouredQuiver) -> bool:
    """Exhaustive n! check; the test oracle for canonical_form (n <= 8)."""
    if q1.n != q2.n or q1.m != q2.m:
        return False
    labels = list(range(1, q1.n + 1))
    for perm in permutations(labels):
        mapping = dict(zip(labels, perm))
        if q1.relabel(mapping) == q2:
            return True
    return False
