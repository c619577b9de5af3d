"""Single-pair path subroutines used inside every partition trial.

All functions take an optional ``allowed`` edge mask (indexed by edge id) so
that a trial can search its color class without building a subgraph.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graph import UNREACHABLE, Graph, Path, bfs_tree, shortest_path, trace_path
from .rng import SplitMix64, mix_seed


class GraphTooLargeForExactLongPath(RuntimeError):
    def __init__(self, cap: int, size: int) -> None:
        self.cap = cap
        self.size = size
        super().__init__(
            f"long-path search over {size} vertices exceeded its node budget (exact cap {cap})"
        )


def find_path_at_most(g: Graph, s: int, t: int, k: int, allowed=None) -> Optional[Path]:
    """Shortest ``(s, t)``-path if its length is at most ``k``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return shortest_path(g, s, t, allowed, max_length=k)


def any_path(g: Graph, s: int, t: int, allowed=None) -> Optional[Path]:
    return shortest_path(g, s, t, allowed)


# -- exact length: color coding ------------------------------------------------


def color_coding_trials(k: int, delta: float) -> int:
    """Trials so that a ``k``-edge path is colorful at least once w.p. ``1 - delta``."""
    return max(1, math.ceil(math.exp(k + 1) * math.log(1 / delta)))


def _colorful_path(g, s, t, k, color, dt, allowed) -> Optional[Path]:
    """Layered DP over (endpoint, used colors) for a colorful s-t path of k edges."""
    adj = g.adjacency
    layers = [{(s, color[s]): None}]
    for j in range(1, k + 1):
        budget = k - j
        nxt: dict = {}
        for v, used in layers[-1]:
            for w, eid in adj[v]:
                cw = color.get(w)
                if cw is None or used & cw or dt[w] > budget:
                    continue
                if allowed is not None and not allowed[eid]:
                    continue
                if w == t and j != k:
                    continue
                key = (w, used | cw)
                if key not in nxt:
                    nxt[key] = (v, used, eid)
        if not nxt:
            return None
        layers.append(nxt)
    end = next((key for key in layers[-1] if key[0] == t), None)
    if end is None:
        return None
    vertices, eids = [t], []
    key = end
    for j in range(k, 0, -1):
        v, used, eid = layers[j][key]
        vertices.append(v)
        eids.append(eid)
        key = (v, used)
    return Path(tuple(reversed(vertices)), tuple(reversed(eids)))


def find_path_exact(
    g: Graph,
    s: int,
    t: int,
    k: int,
    delta: float = 1e-9,
    seed: int = 0,
    allowed=None,
    state_budget: int = 200_000,
) -> Optional[Path]:
    """An ``(s, t)``-path with exactly ``k`` edges, found by color coding.

    Only vertices ``v`` with ``d(s, v) + d(v, t) <= k`` can lie on such a
    path. When few enough remain that giving each its own color keeps the DP
    under ``state_budget`` states, one deterministic pass is exact. Otherwise
    ``k + 1`` random colors are used for ``ceil(e^(k+1) ln(1/delta))``
    trials; a returned path is always correct, a ``None`` is wrong with
    probability at most ``delta``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    if k == 0:
        return Path((s,), ()) if s == t else None
    if s == t:
        return None
    ds, _ = bfs_tree(g, s, allowed, max_depth=k)
    if ds[t] == UNREACHABLE:
        return None
    dt, _ = bfs_tree(g, t, allowed, max_depth=k)
    near = [v for v in range(g.n) if ds[v] != UNREACHABLE and dt[v] != UNREACHABLE and ds[v] + dt[v] <= k]
    if len(near) < k + 1:
        return None
    dt_list = [k + 1] * g.n
    for v in near:
        dt_list[v] = dt[v]
    states = len(near) * sum(math.comb(len(near) - 1, j) for j in range(k + 1))
    if states <= state_budget:
        color = {v: 1 << i for i, v in enumerate(near)}
        return _colorful_path(g, s, t, k, color, dt_list, allowed)
    for trial in range(color_coding_trials(k, delta)):
        rng = SplitMix64(mix_seed(seed, trial))
        color = {v: 1 << rng.below(k + 1) for v in near}
        found = _colorful_path(g, s, t, k, color, dt_list, allowed)
        if found is not None:
            return found
    return None


# -- length at least k: exact search -----------------------------------------


@dataclass(frozen=True)
class LongPathBudget:
    """Limits for :func:`find_path_at_least`.

    Searches over at most ``cap`` vertices run to completion. Larger ones run
    the same search but give up after ``node_budget`` expansions.
    """

    cap: int = 22
    node_budget: int = 2_000_000


def _extension_room(adj, start, blocked, t, allowed) -> tuple[bool, int]:
    """(t reachable from start avoiding ``blocked``, number of vertices reachable)."""
    seen = {start}
    queue = deque([start])
    hit = False
    while queue:
        v = queue.popleft()
        for w, eid in adj[v]:
            if w in seen or w in blocked or (allowed is not None and not allowed[eid]):
                continue
            seen.add(w)
            if w == t:
                hit = True
            else:
                queue.append(w)
    return hit, len(seen) - 1


def find_path_at_least(
    g: Graph,
    s: int,
    t: int,
    k: int,
    budget: LongPathBudget = LongPathBudget(),
    allowed=None,
) -> Optional[Path]:
    """An ``(s, t)``-path with at least ``k`` edges, or ``None`` if there is none.

    If the shortest path already has ``k`` edges it is returned. Otherwise a
    depth-first search over simple paths, memoizing dead (vertex set, end)
    states and pruning with a reachability bound, decides the question
    exactly. Running out of ``budget`` raises
    :class:`GraphTooLargeForExactLongPath`; it never yields a wrong ``None``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    dist, parent = bfs_tree(g, s, allowed)
    if dist[t] == UNREACHABLE:
        return None
    if dist[t] >= k:
        return trace_path(g, parent, t)
    if s == t:
        return None
    size = sum(1 for d in dist if d != UNREACHABLE)
    limit = None if size <= budget.cap else budget.node_budget
    adj = g.adjacency

    path = [s]
    eids: list[int] = []
    on_path = {s}
    dead: set[tuple[frozenset, int]] = set()
    stack = [iter(adj[s])]
    expanded = 0
    while stack:
        for w, eid in stack[-1]:
            if w in on_path or (allowed is not None and not allowed[eid]):
                continue
            if w == t:
                if len(eids) + 1 >= k:
                    vs = tuple(path) + (t,)
                    return Path(vs, tuple(eids) + (eid,))
                continue
            key = (frozenset(on_path), w)
            if key in dead:
                continue
            expanded += 1
            if limit is not None and expanded > limit:
                raise GraphTooLargeForExactLongPath(budget.cap, size)
            hit, room = _extension_room(adj, w, on_path, t, allowed)
            if not hit or len(eids) + 1 + room < k:
                dead.add(key)
                continue
            path.append(w)
            eids.append(eid)
            on_path.add(w)
            stack.append(iter(adj[w]))
            break
        else:
            stack.pop()
            v = path.pop()
            if v != s:
                eids.pop()
                on_path.discard(v)
                dead.add((frozenset(on_path), v))
    return None
