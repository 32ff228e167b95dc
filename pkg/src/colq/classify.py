"""Decision procedures for the mutation-class characterizations.

``is_in_class_A`` recognizes the hole-free quivers whose every vertex
neighbourhood splits into two cliques and whose triangles all have
colouration m-1.  ``classify_D`` recognizes the two D-type shapes: Type I
(two special non-adjacent vertices a, b sharing their whole neighbourhood,
which splits into at most two quasi-complete middles) and Type II (an
induced central cycle of colouration m-1 with complete quivers attached to
its arrows).  ``generate_all_members`` walks every simple coloured quiver
on n labelled vertices and keeps the accepted ones, giving the exhaustive
side of the orbit-equals-class check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .canon import CanonKey, canonical_form
from .cycles import (
    clique_splits,
    cycle_colouration,
    enumerate_induced_cycles,
    holes,
    is_clique,
    path_weight,
    triangles,
)
from .errors import BudgetExceededError
from .quiver import ColouredQuiver, new_quiver, underlying_graph


@dataclass(frozen=True)
class AClassReport:
    accepted: bool
    splits: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=dict)
    violations: tuple[tuple[str, object], ...] = ()


def is_in_class_A(q: ColouredQuiver) -> AClassReport:
    """Membership test for the characterized A-type mutation class."""
    if not q.is_simple:
        return AClassReport(False, {}, (("simple", None),))
    violations: list[tuple[str, object]] = []
    graph = underlying_graph(q)
    if not graph.is_connected:
        violations.append(("connected", tuple(graph.components())))
    found_holes = holes(q)
    if found_holes:
        violations.append(("no-holes", found_holes[0]))
    splits: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {}
    bound = q.m + 2
    for v in q.vertices:
        if q.valency(v) == 0:
            continue
        chosen = None
        for c1, c2 in clique_splits(q, v):
            if len(c1) <= bound and len(c2) <= bound:
                chosen = (c1, c2)
                break
        if chosen is None:
            violations.append(("two-clique-split", v))
        else:
            splits[v] = chosen
    for tri in triangles(q):
        if cycle_colouration(q, tri).colouration != q.m - 1:
            violations.append(("triangle-colouration", tri))
    return AClassReport(not violations, splits, tuple(violations))


@dataclass(frozen=True)
class TypeIWitness:
    a: int
    b: int
    xs: tuple[int, ...]
    ys: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class TypeIIWitness:
    cycle: tuple[int, ...]  # oriented so the forward traversal has weight m-1
    cliques: tuple[tuple[int, ...], ...]  # extra clique vertices per cycle arrow
    components: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class DClassification:
    verdict: str  # "TypeI" | "TypeII" | "NotMember"
    type_i: TypeIWitness | None = None
    type_ii: TypeIIWitness | None = None
    both_types: bool = False
    reason: str | None = None

    @property
    def accepted(self) -> bool:
        return self.verdict != "NotMember"


def _residual_components(
    q: ColouredQuiver,
    removed_vertices: set[int],
    removed_edges: set[frozenset[int]],
) -> list[tuple[int, ...]]:
    adj: dict[int, set[int]] = {
        v: set() for v in q.vertices if v not in removed_vertices
    }
    for i, j, _c, _mult in q.pairs():
        if i in removed_vertices or j in removed_vertices:
            continue
        if frozenset((i, j)) in removed_edges:
            continue
        adj[i].add(j)
        adj[j].add(i)
    seen: set[int] = set()
    comps = []
    for start in sorted(adj):
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


def _components_all_in_A(q: ColouredQuiver, comps: list[tuple[int, ...]]) -> bool:
    return all(is_in_class_A(q.induced(comp)).accepted for comp in comps)


def _attaches_by_clique(q: ColouredQuiver, w: int, comps: list[tuple[int, ...]]) -> bool:
    """The decorated vertex w must meet its residual component in a single
    clique; a component branching at w (e.g. w interior to a path) would
    make the whole quiver a star-like shape outside the class."""
    comp = next(c for c in comps if w in c)
    inside = [u for u in q.neighbours(w) if u in comp]
    return is_clique(q, inside)


def _find_type_I(q: ColouredQuiver) -> TypeIWitness | None:
    m = q.m
    for a, b in combinations(q.vertices, 2):
        if q.adjacent(a, b):
            continue
        middles = set(q.neighbours(a))
        if not middles or middles != set(q.neighbours(b)):
            continue
        if len(middles) > m + 1:
            continue
        ordered = sorted(middles)
        anchor, rest = ordered[0], ordered[1:]
        for mask in range(2 ** len(rest)):
            xs = [anchor] + [u for i, u in enumerate(rest) if mask >> i & 1]
            ys = [u for u in rest if u not in xs]
            if not is_clique(q, xs) or not is_clique(q, ys):
                continue
            if any(q.adjacent(x, y) for x in xs for y in ys):
                continue
            removed_edges = {frozenset(p) for p in combinations(xs, 2)}
            removed_edges |= {frozenset(p) for p in combinations(ys, 2)}
            comps = _residual_components(q, {a, b}, removed_edges)
            if len(comps) != len(middles):
                continue
            if not all(_attaches_by_clique(q, w, comps) for w in ordered):
                continue
            if not _components_all_in_A(q, comps):
                continue
            if xs and ys:
                ok = all(
                    cycle_colouration(q, (y, a, x, b)).colouration == m - 1
                    for x in xs
                    for y in ys
                )
                if not ok:
                    continue
            # same-side 4-cycles (u a v b) carry colouration 2m in class
            # members (forced for m=1; for m>=2 it separates e.g. the
            # weight-0 oriented square, which is A-type, from the class)
            ok = all(
                cycle_colouration(q, (u, a, v, b)).colouration == 2 * m
                for side in (xs, ys)
                for u, v in combinations(side, 2)
            )
            if not ok:
                continue
            return TypeIWitness(a, b, tuple(xs), tuple(ys), tuple(comps))
    return None


def _find_type_II(q: ColouredQuiver) -> TypeIIWitness | None:
    m = q.m
    for cycle in enumerate_induced_cycles(q, 3):
        report = cycle_colouration(q, cycle)
        if report.colouration != m - 1:
            continue
        order = list(cycle) if report.forward_weight == m - 1 else list(cycle[::-1])
        k = len(order)
        on_cycle = set(order)
        position = {v: idx for idx, v in enumerate(order)}

        # every outside vertex adjacent to the cycle must sit on exactly one arrow
        z_sets: list[list[int]] = [[] for _ in range(k)]
        ok = True
        for v in q.vertices:
            if v in on_cycle:
                continue
            touched = sorted(position[u] for u in q.neighbours(v) if u in on_cycle)
            if not touched:
                continue
            if len(touched) != 2:
                ok = False
                break
            p0, p1 = touched
            if (p0 + 1) % k == p1:
                z_sets[p0].append(v)
            elif (p1 + 1) % k == p0:
                z_sets[p1].append(v)
            else:
                ok = False
                break
        if not ok:
            continue

        for idx in range(k):
            zs = z_sets[idx]
            if len(zs) > m:
                ok = False
                break
            if zs and not is_clique(q, zs + [order[idx], order[(idx + 1) % k]]):
                ok = False
                break
        if not ok:
            continue

        removed_edges: set[frozenset[int]] = set()
        for zs in z_sets:
            removed_edges |= {frozenset(p) for p in combinations(zs, 2)}
        comps = _residual_components(q, on_cycle, removed_edges)
        alpha = sum(len(zs) for zs in z_sets)
        if len(comps) != alpha:
            continue
        if not all(
            _attaches_by_clique(q, z, comps) for zs in z_sets for z in zs
        ):
            continue
        if not _components_all_in_A(q, comps):
            continue

        # weight-(m-1) side constraint on the attached triangles
        ok = True
        for idx in range(k):
            xi, xj = order[idx], order[(idx + 1) % k]
            for z in z_sets[idx]:
                if path_weight(q, (xi, xj, z, xi)) != m - 1:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue

        if k == 3:
            sizes = [len(zs) for zs in z_sets]
            ok = all(
                sum(sizes) - sizes[idx] <= m + 1
                for idx in range(3)
                if q.colour_of(order[idx], order[(idx + 1) % 3]) == 0
            )
            if not ok:
                continue

        return TypeIIWitness(tuple(order), tuple(tuple(sorted(zs)) for zs in z_sets), tuple(comps))
    return None


def classify_D(q: ColouredQuiver) -> DClassification:
    """Classify a simple connected quiver as TypeI, TypeII, or NotMember."""
    if not q.is_simple:
        return DClassification("NotMember", reason="not-simple")
    if not underlying_graph(q).is_connected:
        return DClassification("NotMember", reason="not-connected")
    m = q.m
    for tri in triangles(q):
        if cycle_colouration(q, tri).colouration != m - 1:
            return DClassification("NotMember", reason=f"triangle-colouration {tri}")
    witness_i = _find_type_I(q)
    witness_ii = _find_type_II(q)
    if witness_i is not None:
        return DClassification(
            "TypeI", type_i=witness_i, type_ii=witness_ii,
            both_types=witness_ii is not None,
        )
    if witness_ii is not None:
        return DClassification("TypeII", type_ii=witness_ii)
    return DClassification("NotMember", reason="no Type I or Type II witness")


def _connected_state(n: int, pairs: list[tuple[int, int]], state: tuple[int, ...]) -> bool:
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, j), s in zip(pairs, state):
        if s:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    root = find(1)
    return all(find(v) == root for v in range(2, n + 1))


def _generate_shard(args) -> dict[CanonKey, ColouredQuiver]:
    n, m, prefix = args
    pairs = list(combinations(range(1, n + 1), 2))
    found: dict[CanonKey, ColouredQuiver] = {}
    for suffix in product(range(m + 2), repeat=len(pairs) - len(prefix)):
        state = prefix + suffix
        if not _connected_state(n, pairs, state):
            continue
        arrows = [(i, j, s - 1) for (i, j), s in zip(pairs, state) if s]
        q = new_quiver(n, m, arrows)
        if not classify_D(q).accepted:
            continue
        found.setdefault(canonical_form(q), q)
    return found


def generate_all_members(
    n: int,
    m: int,
    budget: int = 10**8,
    collect_reps: bool = False,
    workers: int | None = None,
):
    """Exhaustively enumerate the accepted simple m-coloured quivers on n
    labelled vertices, deduplicated by canonical form.

    Each unordered pair ranges over m+2 states: absent, or an arrow in the
    lexicographic direction with one of the m+1 colours.  Returns a
    frozenset of canonical keys, or (keys, reps) with one representative
    quiver per key when collect_reps is set.  With ``workers`` the pair
    states are sharded by prefix over a process pool.
    """
    pairs = list(combinations(range(1, n + 1), 2))
    total = (m + 2) ** len(pairs)
    if total > budget:
        raise BudgetExceededError(
            f"(m+2)^(n(n-1)/2) = {total} exceeds budget {budget}"
        )
    reps: dict[CanonKey, ColouredQuiver] = {}
    if workers and workers > 1 and len(pairs) >= 2:
        from multiprocessing import Pool

        prefixes = [(a, b) for a in range(m + 2) for b in range(m + 2)]
        with Pool(workers) as pool:
            for shard in pool.imap_unordered(
                _generate_shard, [(n, m, p) for p in prefixes]
            ):
                for key, q in shard.items():
                    reps.setdefault(key, q)
    else:
        reps = _generate_shard((n, m, ()))
    if collect_reps:
        return frozenset(reps), reps
    return frozenset(reps)
