"""The 0-coloured part of a quiver and the structural checks on it.

The colour-0 arrows of a class member form the Gabriel quiver of the
associated algebra.  Two ideal shapes exist: an oriented cycle of length
m+3 enclosing exactly two special vertices (subtype I), and a non-oriented
cycle whose same-direction arrows split into blocks of prescribed lengths
(subtype II), in both cases with every other directed cycle oriented of
length m+2 and in/out degrees at most two.  The shapes characterize
induced subquivers of ideal completions, so the verifiers below first test
a component as its own completion and then try bounded single-block
completions; when nothing is decided the verdict is Unverified, never a
false rejection.  ``shape_violations`` separately checks the weaker
conditions that actually hold on every class member (see its docstring).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import count as _count

from .quiver import ColouredQuiver

DirectedArrows = frozenset[tuple[int, int]]


@dataclass(frozen=True)
class ZeroPart:
    """Colour-0 subquiver: same vertices, only the colour-0 arrows."""

    n: int
    m: int
    arrows: DirectedArrows

    def components(self) -> list[tuple[int, ...]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.arrows:
            adj[i].add(j)
            adj[j].add(i)
        seen: set[int] = set()
        comps = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def restricted_arrows(self, vertices: tuple[int, ...]) -> DirectedArrows:
        vs = set(vertices)
        return frozenset((i, j) for i, j in self.arrows if i in vs and j in vs)


def zero_part(q: ColouredQuiver) -> ZeroPart:
    """Keep the vertex set and exactly the arrows of colour 0."""
    arrows = frozenset(
        (i, j) for i, j, c, _mult in q.arrows() if c == 0
    )
    return ZeroPart(q.n, q.m, arrows)


# -- cycle machinery on a plain directed quiver -----------------------------


def _undirected_adj(vertices: set[int], arrows: DirectedArrows) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for i, j in arrows:
        if i in adj and j in adj:
            adj[i].add(j)
            adj[j].add(i)
    return adj


def _simple_cycles(vertices: set[int], arrows: DirectedArrows) -> list[tuple[int, ...]]:
    """Simple cycles of the underlying graph, once up to rotation/reflection."""
    adj = _undirected_adj(vertices, arrows)
    cycles: list[tuple[int, ...]] = []
    for s in sorted(adj):
        stack = [[s, u] for u in sorted(adj[s]) if u > s]
        while stack:
            path = stack.pop()
            last = path[-1]
            for w in sorted(adj[last]):
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        cycles.append(tuple(path))
                    continue
                if w < s or w in path:
                    continue
                stack.append(path + [w])
    return sorted(cycles, key=lambda c: (len(c), c))


def _induced_cycles(vertices: set[int], arrows: DirectedArrows) -> list[tuple[int, ...]]:
    """Chordless cycles of the underlying graph, once up to rotation/reflection."""
    adj = _undirected_adj(vertices, arrows)
    cycles: list[tuple[int, ...]] = []
    for s in sorted(adj):
        for u in sorted(v for v in adj[s] if v > s):
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
                        if path[1] < w:
                            cycles.append(tuple(path + [w]))
                    else:
                        stack.append(path + [w])
    return sorted(cycles, key=lambda c: (len(c), c))


def _directed_cycles(vertices: set[int], arrows: DirectedArrows) -> list[tuple[int, ...]]:
    """Simple directed cycles, each once up to rotation (smallest vertex first)."""
    out_adj: dict[int, list[int]] = {v: [] for v in vertices}
    for i, j in arrows:
        if i in out_adj and j in out_adj:
            out_adj[i].append(j)
    cycles: list[tuple[int, ...]] = []
    for s in sorted(out_adj):
        stack = [[s]]
        while stack:
            path = stack.pop()
            for w in sorted(out_adj[path[-1]]):
                if w == s:
                    if len(path) >= 3:
                        cycles.append(tuple(path))
                    continue
                if w < s or w in path:
                    continue
                stack.append(path + [w])
    return sorted(cycles, key=lambda c: (len(c), c))


def _orientation(cycle: tuple[int, ...], arrows: DirectedArrows) -> tuple[bool, ...] | None:
    """Arrow directions along the cycle: True when the arrow follows the
    traversal, False against, None when some step has both or neither."""
    flags = []
    k = len(cycle)
    for idx in range(k):
        a, b = cycle[idx], cycle[(idx + 1) % k]
        fwd = (a, b) in arrows
        bwd = (b, a) in arrows
        if fwd == bwd:
            return None
        flags.append(fwd)
    return tuple(flags)


def _is_oriented(flags: tuple[bool, ...]) -> bool:
    return all(flags) or not any(flags)


def zero_part_cycle_census(zp: ZeroPart) -> Counter:
    """Histogram of (cycle length, oriented?) over all simple cycles of the
    underlying graph of the zero part."""
    census: Counter = Counter()
    vertices = set(range(1, zp.n + 1))
    for cycle in _simple_cycles(vertices, zp.arrows):
        flags = _orientation(cycle, zp.arrows)
        oriented = flags is not None and _is_oriented(flags)
        census[(len(cycle), oriented)] += 1
    return census


def degree_bounds_ok(vertices: set[int], arrows: DirectedArrows, bound: int = 2) -> bool:
    outdeg: Counter = Counter()
    indeg: Counter = Counter()
    for i, j in arrows:
        outdeg[i] += 1
        indeg[j] += 1
    return all(outdeg[v] <= bound and indeg[v] <= bound for v in vertices)


def shape_violations(zp: ZeroPart) -> list[tuple[str, object]]:
    """Necessary-condition shadow of the shape theorems, per component.

    Cycles here follow the source vocabulary: a plain "cycle" is directed,
    while the special non-oriented cycle lives in the underlying graph and
    is induced (composite non-oriented walks around attached oriented
    cycles do not count against the shape).  The conditions, validated
    against every enumerated orbit (n <= 6, m <= 3):

    - in/out degrees at most 3 (a special middle vertex can emit colour-0
      arrows to both distinguished vertices plus its own component, so the
      ideal-shape bound of 2 does not survive passage to real members);
    - all directed cycles have length m+2 except at most one; for m >= 2
      that exceptional cycle has length exactly m+3, while for m=1 the
      central cycle may sit fully inside the zero part with any length;
    - at most one induced non-oriented underlying cycle, and never in a
      component that also has an exceptional directed cycle.
    """
    violations: list[tuple[str, object]] = []
    m = zp.m
    for comp in zp.components():
        vs = set(comp)
        arrows = zp.restricted_arrows(comp)
        if not degree_bounds_ok(vs, arrows, bound=3):
            violations.append(("degree-bound", comp))
        exceptional = []
        for cycle in _directed_cycles(vs, arrows):
            if len(cycle) == m + 2:
                continue
            if len(cycle) < m + 3 or (m >= 2 and len(cycle) != m + 3):
                violations.append(("directed-cycle-length", cycle))
            else:
                exceptional.append(cycle)
        if len(exceptional) > 1:
            violations.append(("multiple-long-cycles", comp))
        non_oriented = [
            cycle
            for cycle in _induced_cycles(vs, arrows)
            if not _is_oriented(_orientation(cycle, arrows))
        ]
        if len(non_oriented) > 1:
            violations.append(("multiple-non-oriented-cycles", comp))
        if non_oriented and exceptional:
            violations.append(("mixed-central-structures", comp))
    return violations


# -- subtype verdicts --------------------------------------------------------


@dataclass(frozen=True)
class SubtypeIVerdict:
    matched: bool
    cycle: tuple[int, ...] = ()
    a: int | None = None
    b: int | None = None
    completed: bool = False
    reason: str | None = None


@dataclass(frozen=True)
class SubtypeIIVerdict:
    matched: bool
    cycle: tuple[int, ...] = ()
    block_lengths: tuple[int, ...] = ()
    removed_blocks: int = 0
    completed: bool = False
    reason: str | None = None


def _subtype_I_direct(vertices: set[int], arrows: DirectedArrows, m: int) -> SubtypeIVerdict:
    if not degree_bounds_ok(vertices, arrows):
        return SubtypeIVerdict(False, reason="degree-bound")
    if any(
        not _is_oriented(_orientation(cycle, arrows))
        for cycle in _induced_cycles(vertices, arrows)
    ):
        return SubtypeIVerdict(False, reason="non-oriented-cycle")
    directed = _directed_cycles(vertices, arrows)
    candidates = []
    for cycle in directed:
        if len(cycle) == m + 3:
            candidates.append(cycle)
        elif len(cycle) != m + 2:
            return SubtypeIVerdict(False, reason=f"cycle-length-{len(cycle)}")
    if not candidates:
        return SubtypeIVerdict(False, reason="needs-completion")
    if len(candidates) > 1:
        return SubtypeIVerdict(False, reason="multiple-long-cycles")
    cycle = candidates[0]
    k = len(cycle)
    s_arrows = {(cycle[idx], cycle[(idx + 1) % k]) for idx in range(k)}
    s_set = set(cycle)
    nbrs: dict[int, set[int]] = {v: set() for v in vertices}
    for i, j in arrows:
        nbrs[i].add(j)
        nbrs[j].add(i)
    enclosed = sorted(v for v in cycle if nbrs[v] <= s_set)
    if len(enclosed) < 2:
        return SubtypeIVerdict(False, reason="fewer-than-two-enclosed-vertices")
    pair = next(
        (
            (u, v)
            for idx, u in enumerate(enclosed)
            for v in enclosed[idx + 1:]
            if v not in nbrs[u]
        ),
        None,
    )
    if pair is None:
        return SubtypeIVerdict(False, reason="enclosed-vertices-adjacent")
    # excess enclosed vertices are completable: the ideal shape hangs a
    # fresh (m+2)-cycle on each of them, which only raises their degrees
    a, b = pair
    completed_pair = len(enclosed) > 2
    for other in directed:
        if other == cycle:
            continue
        other_arrows = {
            (other[idx], other[(idx + 1) % len(other)]) for idx in range(len(other))
        }
        if other_arrows & s_arrows:
            return SubtypeIVerdict(False, reason="cycle-shares-arrow-with-S")
    return SubtypeIVerdict(True, cycle, a, b, completed=completed_pair)


def _directed_paths(arrows: DirectedArrows, start: int, end: int, max_len: int):
    """Simple directed paths start->...->end with at most max_len arrows."""
    out_adj: dict[int, set[int]] = {}
    for i, j in arrows:
        out_adj.setdefault(i, set()).add(j)
    stack = [[start]]
    while stack:
        path = stack.pop()
        if len(path) - 1 > max_len:
            continue
        last = path[-1]
        if last == end and len(path) > 1:
            yield path
            continue
        for w in sorted(out_adj.get(last, ())):
            if w not in path or (w == start and w == end):
                if w == end or len(path) <= max_len:
                    stack.append(path + [w])


def verify_gabriel_subtype_I(zp: ZeroPart, component: tuple[int, ...] | None = None) -> SubtypeIVerdict:
    """Check a connected zero-part component against the subtype-I shape;
    when no full (m+3)-cycle is present, try closing one with a single
    fresh arrow chain before giving up as Unverified."""
    comps = zp.components()
    if component is None:
        if len(comps) != 1:
            raise ValueError("zero part is disconnected; pass a component")
        component = comps[0]
    vertices = set(component)
    arrows = zp.restricted_arrows(component)
    direct = _subtype_I_direct(vertices, arrows, zp.m)
    if direct.matched or direct.reason not in ("needs-completion",):
        return direct
    fresh = _count(max(vertices, default=0) + 1)
    for u in sorted(vertices):
        for v in sorted(vertices):
            if u == v:
                continue
            for back in _directed_paths(arrows, v, u, zp.m + 2):
                missing = (zp.m + 3) - (len(back) - 1)
                if missing < 1:
                    continue
                chain = [u] + [next(fresh) for _ in range(missing - 1)] + [v]
                extra = {(chain[t], chain[t + 1]) for t in range(len(chain) - 1)}
                verdict = _subtype_I_direct(
                    vertices | set(chain), arrows | frozenset(extra), zp.m
                )
                if verdict.matched:
                    return SubtypeIVerdict(
                        True, verdict.cycle, verdict.a, verdict.b, completed=True
                    )
    return SubtypeIVerdict(False, reason="needs-completion")


def _subtype_II_direct(
    vertices: set[int], arrows: DirectedArrows, m: int, removed_blocks: int = 0
) -> SubtypeIIVerdict:
    if m < 2:
        return SubtypeIIVerdict(False, reason="m1-degenerate")
    if not degree_bounds_ok(vertices, arrows):
        return SubtypeIIVerdict(False, reason="degree-bound")
    non_oriented = []
    for cycle in _induced_cycles(vertices, arrows):
        flags = _orientation(cycle, arrows)
        if not _is_oriented(flags):
            non_oriented.append((cycle, flags))
    if not non_oriented:
        return SubtypeIIVerdict(False, reason="needs-completion")
    if len(non_oriented) > 1:
        return SubtypeIIVerdict(False, reason="multiple-non-oriented-cycles")
    (cycle, flags) = non_oriented[0]
    k = len(cycle)
    # the embedding is unique only up to reflection: either side of the
    # cycle may play the clockwise role
    for cw_flags in (flags, tuple(not f for f in flags)):
        cw_set = {idx for idx in range(k) if cw_flags[idx]}
        if not cw_set or len(cw_set) == k:
            continue
        # maximal circular runs of clockwise positions
        blocks = []
        visited: set[int] = set()
        for idx in sorted(cw_set):
            if idx in visited:
                continue
            start = idx
            while (start - 1) % k in cw_set:
                start = (start - 1) % k
            length = 0
            pos = start
            while pos in cw_set and length < k:
                visited.add(pos)
                pos = (pos + 1) % k
                length += 1
            blocks.append(length)
        r = len(blocks)
        ks = [m + 1 - length for length in blocks]
        if not 1 <= r <= m - 1:
            continue
        if any(ki < 1 for ki in ks) or sum(ks) != m - 1:
            continue
        cw_arrows = {
            (cycle[idx], cycle[(idx + 1) % k]) if flags[idx]
            else (cycle[(idx + 1) % k], cycle[idx])
            for idx in cw_set
        }
        ok = True
        for other in _directed_cycles(vertices, arrows):
            if len(other) != m + 2:
                ok = False
                break
            other_arrows = {
                (other[idx], other[(idx + 1) % len(other)])
                for idx in range(len(other))
            }
            if other_arrows & cw_arrows:
                ok = False
                break
        if not ok:
            continue
        return SubtypeIIVerdict(
            True, cycle, tuple(sorted(blocks, reverse=True)), removed_blocks
        )
    return SubtypeIIVerdict(False, reason="block-structure-mismatch")


def verify_gabriel_subtype_II(zp: ZeroPart, component: tuple[int, ...] | None = None) -> SubtypeIIVerdict:
    """Check a connected zero-part component against the subtype-II shape,
    trying both reflections of the embedding; when the non-oriented cycle
    is broken, try restoring a single removed block of clockwise arrows."""
    comps = zp.components()
    if component is None:
        if len(comps) != 1:
            raise ValueError("zero part is disconnected; pass a component")
        component = comps[0]
    vertices = set(component)
    arrows = zp.restricted_arrows(component)
    if zp.m < 2:
        return SubtypeIIVerdict(False, reason="m1-degenerate")
    direct = _subtype_II_direct(vertices, arrows, zp.m)
    if direct.matched or direct.reason != "needs-completion":
        return direct
    fresh = _count(max(vertices, default=0) + 1)
    for u in sorted(vertices):
        for v in sorted(vertices):
            if u == v:
                continue
            for length in range(2, zp.m + 1):
                chain = [u] + [next(fresh) for _ in range(length - 1)] + [v]
                extra = {(chain[t], chain[t + 1]) for t in range(len(chain) - 1)}
                verdict = _subtype_II_direct(
                    vertices | set(chain), arrows | frozenset(extra), zp.m,
                    removed_blocks=1,
                )
                if verdict.matched:
                    return SubtypeIIVerdict(
                        True, verdict.cycle, verdict.block_lengths,
                        removed_blocks=1, completed=True,
                    )
    return SubtypeIIVerdict(False, reason="needs-completion")


# -- combined report ---------------------------------------------------------


@dataclass(frozen=True)
class ComponentVerdict:
    vertices: tuple[int, ...]
    verdict: str  # "SubtypeI" | "SubtypeII" | "Acyclic" | "Unverified"
    detail: object = None


@dataclass(frozen=True)
class GabrielReport:
    components: tuple[ComponentVerdict, ...]
    degree_ok: bool
    violations: tuple[tuple[str, object], ...]


def gabriel_report(zp: ZeroPart) -> GabrielReport:
    """Per-component shape verdicts plus the necessary-condition results."""
    verdicts = []
    for comp in zp.components():
        vs = set(comp)
        arrows = zp.restricted_arrows(comp)
        if not _simple_cycles(vs, arrows):
            verdicts.append(ComponentVerdict(comp, "Acyclic"))
            continue
        sub1 = verify_gabriel_subtype_I(zp, comp)
        if sub1.matched:
            verdicts.append(ComponentVerdict(comp, "SubtypeI", sub1))
            continue
        sub2 = verify_gabriel_subtype_II(zp, comp)
        if sub2.matched:
            verdicts.append(ComponentVerdict(comp, "SubtypeII", sub2))
            continue
        verdicts.append(
            ComponentVerdict(comp, "Unverified", (sub1.reason, sub2.reason))
        )
    violations = shape_violations(zp)
    degree_ok = all(kind != "degree-bound" for kind, _ in violations)
    return GabrielReport(tuple(verdicts), degree_ok, tuple(violations))
