"""Breadth-first enumeration of mutation classes up to isomorphism."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field, replace

from .canon import CanonKey, canonical_form
from .classify import classify_D, generate_all_members, is_in_class_A
from .cycles import triangles
from .errors import DisconnectedError
from .mutation import mutate
from .quiver import ColouredQuiver, underlying_graph

DEFAULT_ORBIT_CAP = 500_000


@dataclass(frozen=True)
class OrbitReport:
    """A mutation class: canonical keys, labelled representatives, and the
    mutation links between members."""

    n: int
    m: int
    seed: CanonKey
    members: frozenset[CanonKey]
    reps: dict[CanonKey, ColouredQuiver]
    edges: tuple[tuple[CanonKey, int, CanonKey], ...]
    diameter: int
    capped: bool
    stats: dict | None = None


def mutation_class(
    q: ColouredQuiver,
    cap: int = DEFAULT_ORBIT_CAP,
    compute_stats: bool = False,
) -> OrbitReport:
    """BFS closure of {q} under mutation at every vertex, deduplicated by
    canonical form.  Stops when closed, or marks the report capped once
    more than ``cap`` members appear."""
    seed_key = canonical_form(q)
    reps: dict[CanonKey, ColouredQuiver] = {seed_key: q}
    depth: dict[CanonKey, int] = {seed_key: 0}
    edges: list[tuple[CanonKey, int, CanonKey]] = []
    queue = deque([seed_key])
    capped = False
    while queue and not capped:
        key = queue.popleft()
        current = reps[key]
        for v in current.vertices:
            nxt = mutate(current, v)
            nxt_key = canonical_form(nxt)
            edges.append((key, v, nxt_key))
            if nxt_key in reps:
                continue
            reps[nxt_key] = nxt
            depth[nxt_key] = depth[key] + 1
            queue.append(nxt_key)
            if len(reps) > cap:
                capped = True
                break
    report = OrbitReport(
        n=q.n,
        m=q.m,
        seed=seed_key,
        members=frozenset(reps),
        reps=reps,
        edges=tuple(edges),
        diameter=max(depth.values()),
        capped=capped,
    )
    if compute_stats and not capped:
        return replace(report, stats=orbit_stats(report))
    return report


def orbit_stats(report: OrbitReport) -> dict:
    """Per-orbit census: Euler characteristics, triangle counts, verdicts."""
    chi = Counter()
    tri = Counter()
    verdicts = Counter()
    for rep in report.reps.values():
        graph = underlying_graph(rep)
        if not graph.is_connected:
            raise DisconnectedError("orbit statistics need connected members")
        chi[graph.edge_count - rep.n + 1] += 1
        tri[len(triangles(rep))] += 1
        verdicts[classify_D(rep).verdict] += 1
    return {
        "chi_histogram": dict(sorted(chi.items())),
        "triangle_histogram": dict(sorted(tri.items())),
        "verdicts": dict(sorted(verdicts.items())),
    }


def closure_check(report: OrbitReport, kind: str = "auto") -> list[tuple[CanonKey, str]]:
    """Empty iff every orbit member passes the class recognizer.

    ``kind`` selects the recognizer: "D" for classify_D, "A" for
    is_in_class_A, "auto" to pick whichever accepts the seed."""
    if report.capped:
        raise ValueError("closure check needs an uncapped orbit")
    if kind == "auto":
        seed = report.reps[report.seed]
        if classify_D(seed).accepted:
            kind = "D"
        elif is_in_class_A(seed).accepted:
            kind = "A"
        else:
            raise ValueError("seed belongs to neither recognized class")
    violations = []
    for key, rep in sorted(report.reps.items()):
        if kind == "D":
            result = classify_D(rep)
            if not result.accepted:
                violations.append((key, result.reason or "rejected"))
        else:
            result = is_in_class_A(rep)
            if not result.accepted:
                violations.append((key, str(result.violations[0])))
    return violations


@dataclass(frozen=True)
class TheoremAVerdict:
    equal: bool
    orbit_size: int
    generated_size: int
    only_in_orbit: frozenset[CanonKey] = field(default_factory=frozenset)
    only_in_generated: frozenset[CanonKey] = field(default_factory=frozenset)

    def __str__(self) -> str:
        if self.equal:
            return f"Equal ({self.orbit_size} members)"
        return (
            f"Mismatch (orbit {self.orbit_size}, generated {self.generated_size}, "
            f"orbit-only {len(self.only_in_orbit)}, generated-only {len(self.only_in_generated)})"
        )


def theorem_A_verdict(
    n: int,
    m: int,
    cap: int = DEFAULT_ORBIT_CAP,
    budget: int = 10**8,
) -> TheoremAVerdict:
    """Compare the BFS orbit of the standard D_n quiver against the
    exhaustively generated accepted set, as canonical key sets."""
    from .quiver import standard_d_quiver

    orbit = mutation_class(standard_d_quiver(n, m), cap=cap)
    if orbit.capped:
        raise ValueError(f"orbit of D_{n} (m={m}) exceeded cap {cap}")
    generated = generate_all_members(n, m, budget=budget)
    return TheoremAVerdict(
        equal=orbit.members == generated,
        orbit_size=len(orbit.members),
        generated_size=len(generated),
        only_in_orbit=frozenset(orbit.members - generated),
        only_in_generated=frozenset(generated - orbit.members),
    )
