"""Coloured quiver mutation, twice, plus sequences and orbit path search.

``mutate`` implements the closed-form multiplicity expression and
``mutate_alt`` the three-step rewriting algorithm; they share no code so
that their agreement is a meaningful cross-check.  Both use the same
colour-shift convention: an arrow into the mutated vertex gains one colour
step, an arrow out of it loses one, everything mod m+1.
"""

from __future__ import annotations

from collections import Counter, deque

from .canon import canonical_form
from .errors import CapExceededError, VertexOutOfRangeError
from .quiver import ColouredQuiver, from_table

DEFAULT_PATH_CAP = 1_000_000


def _check_vertex(q: ColouredQuiver, j: int) -> None:
    if not 1 <= j <= q.n:
        raise VertexOutOfRangeError(f"vertex {j} outside 1..{q.n}")


def mutate(q: ColouredQuiver, j: int) -> ColouredQuiver:
    """Mutation at j by the closed-form count expression.

    Counts for pairs not touching j follow
    max(0, q_ik^c - sum_{t!=c} q_ik^t + (q_ij^c - q_ij^(c-1)) q_jk^0
           + q_ij^m (q_jk^c - q_jk^(c+1)))
    with colour indices mod m+1; arrows into j shift colour +1 and arrows
    out of j shift -1.
    """
    _check_vertex(q, j)
    m = q.m
    mod = m + 1
    counts: dict[tuple[int, int, int], int] = {}
    for i in q.vertices:
        for k in q.vertices:
            if i == k:
                continue
            if i == j:
                c_old = q.colour_of(j, k)
                if c_old is not None:
                    counts[(j, k, (c_old - 1) % mod)] = q.multiplicity(j, k)
            elif k == j:
                c_old = q.colour_of(i, j)
                if c_old is not None:
                    counts[(i, j, (c_old + 1) % mod)] = q.multiplicity(i, j)
            else:
                total = q.multiplicity(i, k)
                q_jk0 = q.count(j, k, 0)
                q_ijm = q.count(i, j, m)
                for c in range(mod):
                    val = 2 * q.count(i, k, c) - total
                    val += (q.count(i, j, c) - q.count(i, j, (c - 1) % mod)) * q_jk0
                    val += q_ijm * (q.count(j, k, c) - q.count(j, k, (c + 1) % mod))
                    if val > 0:
                        counts[(i, k, c)] = val
    return from_table(q.n, m, counts)


def mutate_alt(q: ColouredQuiver, j: int) -> ColouredQuiver:
    """Mutation at j by the three-step algorithm.

    (1) for every pair i->(c)j->(0)k with i != k add arrows i->(c)k and
    k->(m-c)i; (2) cancel equal numbers of differently coloured parallel
    arrows until monochromatic; (3) shift colours by +1 on arrows into j
    and -1 on arrows out of j, mod m+1.
    """
    _check_vertex(q, j)
    m = q.m
    mod = m + 1
    work: dict[tuple[int, int], Counter] = {}
    for i, k, c, mult in q.arrows():
        work.setdefault((i, k), Counter())[c] = mult

    # step 1: compose through j
    into_j = [(i, c, mult) for (i, k, c, mult) in q.arrows() if k == j]
    out_zero = [(k, mult) for (i, k, c, mult) in q.arrows() if i == j and c == 0]
    for i, c, p in into_j:
        for k, w in out_zero:
            if i == k:
                continue
            work.setdefault((i, k), Counter())[c] += p * w
            work.setdefault((k, i), Counter())[m - c] += p * w

    # step 2: cancel until monochromatic (one arrow of each colour per round)
    for pair, colours in work.items():
        nonzero = {c: v for c, v in colours.items() if v > 0}
        if len(nonzero) <= 1:
            work[pair] = Counter(nonzero)
            continue
        ranked = sorted(nonzero.items(), key=lambda cv: (-cv[1], cv[0]))
        (c_top, v_top), (_, v_second) = ranked[0], ranked[1]
        work[pair] = Counter({c_top: v_top - v_second}) if v_top > v_second else Counter()

    # step 3: shift colours at j
    counts: dict[tuple[int, int, int], int] = {}
    for (i, k), colours in work.items():
        for c, mult in colours.items():
            if mult <= 0:
                continue
            if k == j:
                c = (c + 1) % mod
            elif i == j:
                c = (c - 1) % mod
            counts[(i, k, c)] = counts.get((i, k, c), 0) + mult
    return from_table(q.n, m, counts)


def mutate_seq(q: ColouredQuiver, seq: list[int]) -> ColouredQuiver:
    """Left-to-right fold of mutate over a vertex sequence."""
    for j in seq:
        q = mutate(q, j)
    return q


def find_mutation_path(
    q_start: ColouredQuiver,
    q_target: ColouredQuiver,
    cap: int = DEFAULT_PATH_CAP,
) -> list[int] | None:
    """Shortest mutation sequence carrying q_start to a quiver isomorphic
    to q_target, or None when the (finite) orbit closes without reaching it.

    The search is a single-sided BFS deduplicated on canonical forms;
    raises CapExceededError when more than ``cap`` distinct forms appear
    before the question is decided.
    """
    if q_start.n != q_target.n or q_start.m != q_target.m:
        raise ValueError("path search needs equal n and m on both endpoints")
    target = canonical_form(q_target)
    start_key = canonical_form(q_start)
    if start_key == target:
        return []
    parents: dict[bytes, tuple[bytes, int]] = {}
    reps: dict[bytes, ColouredQuiver] = {start_key: q_start}
    queue = deque([start_key])
    while queue:
        key = queue.popleft()
        current = reps[key]
        for v in current.vertices:
            nxt = mutate(current, v)
            nxt_key = canonical_form(nxt)
            if nxt_key in reps:
                continue
            reps[nxt_key] = nxt
            parents[nxt_key] = (key, v)
            if nxt_key == target:
                path = [v]
                back = key
                while back != start_key:
                    back, step = parents[back]
                    path.append(step)
                path.reverse()
                return path
            if len(reps) > cap:
                raise CapExceededError(f"path search exceeded {cap} states")
            queue.append(nxt_key)
    return None
