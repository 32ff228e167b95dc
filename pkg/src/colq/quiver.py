"""Coloured quiver value type, the three structural axioms, serialization.

An m-coloured quiver has vertices 1..n and arrows carrying colours in
{0,..,m}, subject to: no loops, monochromaticity (one colour per ordered
pair) and skew-symmetry (the number of arrows i->j of colour c equals the
number of arrows j->i of colour m-c).  Because of monochromaticity the
whole arrow multiset is stored as one (colour, multiplicity) entry per
ordered pair, and skew-symmetry makes each unordered pair representable by
a single entry: the representative keeps the direction whose colour c
satisfies c <= m-c (ties broken by smaller source label).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import (
    BadSizeError,
    ColourOutOfRangeError,
    FormatError,
    LoopArrowError,
    MonochromaticityViolationError,
    SkewConflictError,
)

Arrow = tuple[int, int, int]


def representative(i: int, j: int, c: int, m: int) -> Arrow:
    """Stored side of the skew pair (i->j:c, j->i:m-c)."""
    if 2 * c < m:
        return (i, j, c)
    if 2 * c > m:
        return (j, i, m - c)
    return (i, j, c) if i < j else (j, i, c)


class ColouredQuiver:
    """Immutable m-coloured quiver with vertices labelled 1..n.

    The table maps every ordered pair with arrows to its single
    (colour, multiplicity) entry; the partner entry is always present.
    Instances are values: hashable, comparable, safe to share.
    """

    __slots__ = ("n", "m", "_table", "_adj", "_hash")

    def __init__(self, n: int, m: int, table: Mapping[tuple[int, int], tuple[int, int]]):
        if n < 1:
            raise BadSizeError(f"vertex count must be positive, got {n}")
        if m < 1:
            raise ColourOutOfRangeError(f"colour bound m must be positive, got {m}")
        adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
        for (i, j), (c, mult) in table.items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise FormatError(f"vertex {i if not 1 <= i <= n else j} outside 1..{n}")
            if i == j:
                raise LoopArrowError(f"loop at vertex {i}")
            if not 0 <= c <= m:
                raise ColourOutOfRangeError(f"colour {c} on {i}->{j} outside 0..{m}")
            if mult < 1:
                raise FormatError(f"non-positive multiplicity on {i}->{j}")
            partner = table.get((j, i))
            if partner != (m - c, mult):
                raise SkewConflictError(
                    f"{i}->{j} has colour {c} x{mult} but {j}->{i} holds {partner}"
                )
            adj[i].add(j)
        self.n = n
        self.m = m
        self._table = dict(table)
        self._adj = {v: tuple(sorted(nb)) for v, nb in adj.items()}
        self._hash = hash((n, m, frozenset(self._table.items())))

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def colour_of(self, i: int, j: int) -> int | None:
        """Colour of the arrows i->j, or None when the pair is absent."""
        entry = self._table.get((i, j))
        return None if entry is None else entry[0]

    def multiplicity(self, i: int, j: int) -> int:
        entry = self._table.get((i, j))
        return 0 if entry is None else entry[1]

    def count(self, i: int, j: int, c: int) -> int:
        """q_ij^(c): the number of arrows i->j of colour c."""
        entry = self._table.get((i, j))
        if entry is None or entry[0] != c:
            return 0
        return entry[1]

    def adjacent(self, i: int, j: int) -> bool:
        return (i, j) in self._table

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def valency(self, v: int) -> int:
        return len(self._adj[v])

    def arrows(self) -> Iterator[tuple[int, int, int, int]]:
        """All directed entries as (i, j, colour, multiplicity)."""
        for (i, j), (c, mult) in sorted(self._table.items()):
            yield i, j, c, mult

    def pairs(self) -> Iterator[tuple[int, int, int, int]]:
        """One representative entry per skew pair, sorted."""
        seen = set()
        out = []
        for (i, j), (c, mult) in self._table.items():
            key = frozenset((i, j))
            if key in seen:
                continue
            seen.add(key)
            out.append((*representative(i, j, c, self.m), mult))
        out.sort()
        return iter(out)

    def arrow_list(self) -> list[Arrow]:
        """Representative arrows expanded by multiplicity, sorted."""
        out: list[Arrow] = []
        for i, j, c, mult in self.pairs():
            out.extend([(i, j, c)] * mult)
        return out

    @property
    def total_arrow_count(self) -> int:
        return sum(mult for _, mult in self._table.values())

    @property
    def is_simple(self) -> bool:
        return all(mult == 1 for _, mult in self._table.values())

    # -- derived quivers -----------------------------------------------

    def relabel(self, perm: Mapping[int, int]) -> "ColouredQuiver":
        """Apply a vertex permutation (old label -> new label)."""
        table = {(perm[i], perm[j]): entry for (i, j), entry in self._table.items()}
        return ColouredQuiver(self.n, self.m, table)

    def induced(self, vertex_set: Iterable[int]) -> "ColouredQuiver":
        """Induced subquiver, vertices renumbered 1..k by sorted old label."""
        vs = sorted(set(vertex_set))
        pos = {v: i + 1 for i, v in enumerate(vs)}
        table = {
            (pos[i], pos[j]): entry
            for (i, j), entry in self._table.items()
            if i in pos and j in pos
        }
        return ColouredQuiver(len(vs), self.m, table)

    # -- value semantics -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColouredQuiver):
            return NotImplemented
        return self.n == other.n and self.m == other.m and self._table == other._table

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        arrows = ", ".join(f"{i}->{j}:{c}" + (f"x{k}" if k > 1 else "")
                           for i, j, c, k in self.pairs())
        return f"ColouredQuiver(n={self.n}, m={self.m}; {arrows})"


def new_quiver(n: int, m: int, arrows: Iterable[Arrow]) -> ColouredQuiver:
    """Build and validate a quiver from one listed arrow per skew pair.

    Every listed (i, j, c) contributes an arrow i->j of colour c plus the
    implied partner j->i of colour m-c; repeated identical entries encode
    multiplicity.  Listing two colours on one ordered pair raises
    MonochromaticityViolationError; listing both directions of a pair with
    non-partner colours raises SkewConflictError.
    """
    if m < 1:
        raise ColourOutOfRangeError(f"colour bound m must be positive, got {m}")
    per_pair: dict[frozenset[int], dict[tuple[int, int], Counter]] = {}
    for i, j, c in arrows:
        if i == j:
            raise LoopArrowError(f"loop at vertex {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise FormatError(f"arrow ({i},{j},{c}) outside vertex range 1..{n}")
        if not 0 <= c <= m:
            raise ColourOutOfRangeError(f"colour {c} on {i}->{j} outside 0..{m}")
        slot = per_pair.setdefault(frozenset((i, j)), {})
        slot.setdefault((i, j), Counter())[c] += 1
    table: dict[tuple[int, int], tuple[int, int]] = {}
    for directions in per_pair.values():
        for (i, j), colours in directions.items():
            if len(colours) > 1:
                raise MonochromaticityViolationError(
                    f"colours {sorted(colours)} listed for the pair {i}->{j}"
                )
        items = sorted(directions.items())
        (i, j), colours = items[0]
        c, mult = next(iter(colours.items()))
        if len(items) == 2:
            (_, _), back = items[1]
            c_back, mult_back = next(iter(back.items()))
            if c_back != m - c:
                raise SkewConflictError(
                    f"{i}->{j}:{c} conflicts with {j}->{i}:{c_back} (expected colour {m - c})"
                )
            mult += mult_back
        table[(i, j)] = (c, mult)
        table[(j, i)] = (m - c, mult)
    return ColouredQuiver(n, m, table)


def from_table(n: int, m: int, counts: Mapping[tuple[int, int, int], int]) -> ColouredQuiver:
    """Build from a full q_ij^(c) count mapping (used by mutation)."""
    table: dict[tuple[int, int], tuple[int, int]] = {}
    for (i, j, c), mult in counts.items():
        if mult == 0:
            continue
        if (i, j) in table:
            raise MonochromaticityViolationError(
                f"two colours survive on {i}->{j}: {table[(i, j)][0]} and {c}"
            )
        table[(i, j)] = (c, mult)
    return ColouredQuiver(n, m, table)


def standard_d_quiver(n: int, m: int) -> ColouredQuiver:
    """The reference D_n quiver: a colour-0 path 1->..->n-2 forking to n-1 and n."""
    if n < 4:
        raise BadSizeError(f"D_n needs n >= 4, got {n}")
    if m < 1:
        raise BadSizeError(f"colour bound m must be positive, got {m}")
    arrows = [(i, i + 1, 0) for i in range(1, n - 2)]
    arrows += [(n - 2, n - 1, 0), (n - 2, n, 0)]
    return new_quiver(n, m, arrows)


# -- underlying graph ----------------------------------------------------


@dataclass(frozen=True)
class UnderlyingGraph:
    """Undirected shadow of a coloured quiver: one edge per skew pair."""

    n: int
    edges: tuple[tuple[int, int, int], ...]  # (i, j, multiplicity), i < j

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for i, j, _ in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for i, j, _ in self.edges if v in (i, j))

    @property
    def edge_count(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(mult for _, _, mult in self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        a, b = min(i, j), max(i, j)
        return any((i0, j0) == (a, b) for i0, j0, _ in self.edges)

    def components(self) -> list[tuple[int, ...]]:
        adj = self.adjacency()
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

    @property
    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def underlying_graph(q: ColouredQuiver) -> UnderlyingGraph:
    """Forget directions and colours, keeping one edge per skew pair."""
    edges = []
    for i, j, _c, mult in q.pairs():
        a, b = min(i, j), max(i, j)
        edges.append((a, b, mult))
    return UnderlyingGraph(q.n, tuple(sorted(edges)))


# -- text / JSON / DOT formats --------------------------------------------


def to_text(q: ColouredQuiver) -> str:
    """Serialize to the v1 text format (one representative arrow per line)."""
    lines = ["colq v1", f"n={q.n} m={q.m}"]
    lines += [f"{i} {j} {c}" for i, j, c in q.arrow_list()]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> ColouredQuiver:
    """Parse the v1 text format; '#' starts a comment, blank lines ignored."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or lines[0] != "colq v1":
        raise FormatError("missing 'colq v1' header")
    header = lines[1] if len(lines) > 1 else ""
    parts = header.split()
    if len(parts) != 2 or not parts[0].startswith("n=") or not parts[1].startswith("m="):
        raise FormatError(f"bad size line {header!r}, expected 'n=<N> m=<M>'")
    try:
        n = int(parts[0][2:])
        m = int(parts[1][2:])
    except ValueError as exc:
        raise FormatError(f"bad size line {header!r}") from exc
    arrows = []
    for line in lines[2:]:
        fields = line.split()
        if len(fields) != 3:
            raise FormatError(f"bad arrow line {line!r}, expected '<i> <j> <c>'")
        try:
            arrows.append((int(fields[0]), int(fields[1]), int(fields[2])))
        except ValueError as exc:
            raise FormatError(f"bad arrow line {line!r}") from exc
    return new_quiver(n, m, arrows)


def to_json_dict(q: ColouredQuiver) -> dict:
    return {"n": q.n, "m": q.m, "arrows": [list(a) for a in q.arrow_list()]}


def from_json_dict(data: object) -> ColouredQuiver:
    if not isinstance(data, dict):
        raise FormatError("quiver JSON must be an object")
    try:
        n = data["n"]
        m = data["m"]
        raw = data["arrows"]
    except KeyError as exc:
        raise FormatError(f"quiver JSON missing key {exc.args[0]!r}") from exc
    if not isinstance(n, int) or not isinstance(m, int) or isinstance(n, bool) or isinstance(m, bool):
        raise FormatError("n and m must be integers")
    if not isinstance(raw, list):
        raise FormatError("arrows must be a list of [i, j, c] triples")
    arrows = []
    for item in raw:
        if (not isinstance(item, (list, tuple)) or len(item) != 3
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)):
            raise FormatError(f"bad arrow entry {item!r}")
        arrows.append((item[0], item[1], item[2]))
    return new_quiver(n, m, arrows)


def to_dot(q: ColouredQuiver) -> str:
    """DOT digraph with one edge per stored arrow, labelled by colour."""
    lines = ["digraph colq {"]
    for v in q.vertices:
        lines.append(f"  {v};")
    for i, j, c in q.arrow_list():
        style = ' style=bold' if c == 0 else ""
        lines.append(f'  {i} -> {j} [label="{c}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
