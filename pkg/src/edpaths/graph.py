"""Simple undirected graphs with stable edge ids, text I/O and BFS."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

UNREACHABLE = -1


class GraphFormatError(ValueError):
    """Raised by :func:`parse_graph` for malformed input; carries the line number."""

    def __init__(self, kind: str, line: int, detail: str = "") -> None:
        self.kind = kind
        self.line = line
        msg = f"{kind} at line {line}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class InvalidPath(ValueError):
    pass


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Every edge has an integer id. Parsed and generated graphs use the dense
    ids ``0..m-1`` in insertion order; :func:`remove_edges` keeps the original
    ids of the surviving edges, so ids stay comparable between a graph and its
    subgraphs.
    """

    __slots__ = ("n", "_ends", "_adj", "_index", "_id_bound")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        edge_ids: Optional[Iterable[int]] = None,
    ) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = list(edges)
        ids = list(range(len(edges))) if edge_ids is None else list(edge_ids)
        if len(ids) != len(edges):
            raise ValueError("edge_ids and edges differ in length")
        ends: dict[int, tuple[int, int]] = {}
        index: dict[tuple[int, int], int] = {}
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (u, v) in zip(ids, edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise ValueError(f"duplicate edge {key}")
            if eid in ends:
                raise ValueError(f"duplicate edge id {eid}")
            ends[eid] = key
            index[key] = eid
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        self.n = n
        self._ends = ends
        self._index = index
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._id_bound = max(ends) + 1 if ends else 0

    @property
    def m(self) -> int:
        return len(self._ends)

    @property
    def id_bound(self) -> int:
        """One past the largest edge id; the size of an edge mask."""
        return self._id_bound

    @property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, ``(neighbor, edge id)`` pairs sorted by neighbor."""
        return self._adj

    def edge_ids(self) -> list[int]:
        return sorted(self._ends)

    def edges(self) -> list[tuple[int, int]]:
        """Edge endpoints ``(min, max)`` in edge-id order."""
        return [self._ends[e] for e in self.edge_ids()]

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self._ends[eid]

    def edge_id(self, u: int, v: int) -> Optional[int]:
        return self._index.get((u, v) if u < v else (v, u))

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self._adj[v]]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def path(self, vertices: Sequence[int]) -> "Path":
        """Build a :class:`Path`, checking adjacency and simplicity."""
        vs = tuple(vertices)
        if not vs:
            raise InvalidPath("empty vertex sequence")
        for v in vs:
            if not 0 <= v < self.n:
                raise InvalidPath(f"vertex {v} out of range")
        if len(set(vs)) != len(vs):
            raise InvalidPath(f"repeated vertex in {list(vs)}")
        eids = []
        for a, b in zip(vs, vs[1:]):
            eid = self.edge_id(a, b)
            if eid is None:
                raise InvalidPath(f"{a} and {b} are not adjacent")
            eids.append(eid)
        return Path(vs, tuple(eids))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._ends == other._ends

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._ends.items())))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Path:
    """A simple path: vertex sequence plus the ids of the edges it uses.

    Construct through :meth:`Graph.path`, which validates the sequence.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return "-".join(map(str, self.vertices))


@dataclass(frozen=True)
class DistanceMap:
    source: int
    dist: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.dist[v]

    def reachable(self, v: int) -> bool:
        return self.dist[v] != UNREACHABLE


# -- parsing ---------------------------------------------------------------


def _tokens(lines: Iterable[str]):
    """Yield ``(line_number, fields)`` for non-blank, non-comment lines."""
    for number, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _ints(fields: list[str], count: int, line: int) -> list[int]:
    if len(fields) != count:
        raise GraphFormatError("MalformedLine", line, f"expected {count} integers")
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise GraphFormatError("MalformedToken", line, " ".join(fields)) from None


def read_graph_block(records) -> Graph:
    """Consume a graph block from a ``_tokens`` iterator."""
    try:
        line, fields = next(records)
    except StopIteration:
        raise GraphFormatError("MissingHeader", 0) from None
    n, m = _ints(fields, 2, line)
    if n < 0 or m < 0:
        raise GraphFormatError("MalformedHeader", line, "negative count")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for _ in range(m):
        try:
            line, fields = next(records)
        except StopIteration:
            raise GraphFormatError("MissingEdges", line, f"expected {m} edges") from None
        u, v = _ints(fields, 2, line)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError("VertexOutOfRange", line, f"{u} {v} with n={n}")
        if u == v:
            raise GraphFormatError("SelfLoop", line, str(u))
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError("DuplicateEdge", line, f"{u} {v}")
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)


def parse_graph(text: str | bytes) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines of ``u v``.

    Edge ids follow input order. Lines starting with ``#`` are ignored.
    """
    if isinstance(text, bytes):
        text = text.decode()
    records = _tokens(text.splitlines())
    g = read_graph_block(records)
    for line, _ in records:
        raise GraphFormatError("TrailingData", line)
    return g


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- traversal ---------------------------------------------------------------


def bfs_tree(
    g: Graph,
    source: int,
    allowed=None,
    max_depth: Optional[int] = None,
    target: Optional[int] = None,
) -> tuple[list[int], list[int]]:
    """BFS from ``source`` returning ``(dist, parent_edge)`` lists.

    ``allowed`` is an optional edge mask indexed by edge id (truthy = usable).
    Neighbors are scanned in increasing id order, so parents are the lowest
    discovered vertex in queue order. The search stops early once ``target``
    is labelled or ``max_depth`` is reached.
    """
    adj = g.adjacency
    dist = [UNREACHABLE] * g.n
    parent = [-1] * g.n
    dist[source] = 0
    if source == target:
        return dist, parent
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        if max_depth is not None and dv > max_depth:
            break
        for w, eid in adj[v]:
            if dist[w] != UNREACHABLE or (allowed is not None and not allowed[eid]):
                continue
            dist[w] = dv
            parent[w] = eid
            if w == target:
                return dist, parent
            queue.append(w)
    return dist, parent


def bfs_distances(g: Graph, source: int, allowed=None) -> DistanceMap:
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range")
    dist, _ = bfs_tree(g, source, allowed)
    return DistanceMap(source, tuple(dist))


def trace_path(g: Graph, parent: list[int], t: int) -> Path:
    vertices = [t]
    eids = []
    v = t
    while parent[v] != -1:
        eid = parent[v]
        a, b = g.endpoints(eid)
        v = a if b == v else b
        vertices.append(v)
        eids.append(eid)
    vertices.reverse()
    eids.reverse()
    return Path(tuple(vertices), tuple(eids))


def shortest_path(
    g: Graph, s: int, t: int, allowed=None, max_length: Optional[int] = None
) -> Optional[Path]:
    """A minimum-length ``(s, t)``-path, or ``None`` if none (within ``max_length``)."""
    dist, parent = bfs_tree(g, s, allowed, max_depth=max_length, target=t)
    if dist[t] == UNREACHABLE:
        return None
    return trace_path(g, parent, t)


def remove_edges(g: Graph, ids: Iterable[int]) -> Graph:
    drop = set(ids)
    unknown = drop.difference(g.edge_ids())
    if unknown:
        raise ValueError(f"unknown edge ids {sorted(unknown)}")
    keep = [e for e in g.edge_ids() if e not in drop]
    return Graph(g.n, [g.endpoints(e) for e in keep], keep)


def edge_mask(g: Graph, ids: Iterable[int], value: bool = True) -> bytearray:
    """Mask over ``g.id_bound`` with ``ids`` set to ``value`` and the rest to its negation."""
    mask = bytearray([0 if value else 1]) * g.id_bound
    flag = 1 if value else 0
    for e in ids:
        mask[e] = flag
    return mask
