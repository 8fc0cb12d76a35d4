"""Bitset graphs and the structural predicates used throughout the package.

Vertices are ``0..n-1`` and every neighbourhood is an ``int`` bitmask, so a
vertex set is a single integer.  :class:`VertexSet` wraps such a mask together
with the order of its host graph for the public API; the solvers work on the
raw masks.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import combinations

__all__ = [
    "GraphError",
    "Graph",
    "VertexSet",
    "MAX_SOLVER_ORDER",
    "as_mask",
    "iter_bits",
    "graph_from_edges",
    "neighborhood",
    "closed_neighborhood",
    "private_neighbors",
    "induced_subgraph",
    "is_connected",
    "components",
    "degree_stats",
    "is_tree",
    "leaves",
    "support_vertices",
    "is_caterpillar",
    "is_p4_free",
    "is_regular",
    "is_path_graph",
    "is_cycle_graph",
]

# One machine word per vertex set on the solver paths.
MAX_SOLVER_ORDER = 64


class GraphError(ValueError):
    """Raised for malformed graphs or violated preconditions."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def as_mask(s: VertexSet | Iterable[int] | int) -> int:
    if isinstance(s, VertexSet):
        return s.bits
    if isinstance(s, int):
        return s
    mask = 0
    for v in s:
        mask |= 1 << v
    return mask


class VertexSet:
    """Immutable set of vertices of a host graph of order ``host_order``."""

    __slots__ = ("bits", "host_order")

    def __init__(self, bits: int, host_order: int) -> None:
        if bits < 0 or bits >> host_order:
            raise GraphError(f"vertex set {bits:#x} has members outside 0..{host_order - 1}")
        self.bits = bits
        self.host_order = host_order

    @classmethod
    def of(cls, vertices: Iterable[int], host_order: int) -> VertexSet:
        return cls(as_mask(vertices), host_order)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.bits >> v & 1)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.bits == other.bits
        if isinstance(other, (set, frozenset)):
            return self.bits == as_mask(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.bits)

    def __repr__(self) -> str:
        return f"VertexSet({sorted(self)})"

    def sorted(self) -> list[int]:
        return list(iter_bits(self.bits))


class Graph:
    """Immutable simple undirected graph with bitmask adjacency.

    ``adj[v]`` has bit ``u`` set iff ``uv`` is an edge.  Use
    :func:`graph_from_edges` or :meth:`from_adjacency` to build one; both check
    symmetry and loop-freeness.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int]) -> None:
        adj = tuple(adj)
        if n < 0 or len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for order {n}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has neighbours outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = adj
        self._hash = hash((n, adj))

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # Skips validation; callers guarantee a symmetric loop-free adjacency.
        g = cls.__new__(cls)
        g.n = n
        g.adj = adj
        g._hash = hash((n, adj))
        return g

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> Graph:
        adj = tuple(adj)
        return cls(len(adj), adj)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in iter_bits(self.adj[v] & ((1 << v) - 1))]

    @property
    def size(self) -> int:
        return sum(self.degrees()) // 2

    def vertex_set(self, vertices: Iterable[int] | int) -> VertexSet:
        return VertexSet(as_mask(vertices), self.n)

    def check_solver_order(self) -> None:
        if self.n > MAX_SOLVER_ORDER:
            raise GraphError(f"order {self.n} exceeds the solver cap of {MAX_SOLVER_ORDER}")

    def relabel(self, perm: list[int]) -> Graph:
        """Return the graph in which vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            m = 0
            for u in iter_bits(row):
                m |= 1 << perm[u]
            adj[perm[v]] = m
        return Graph._trusted(self.n, tuple(adj))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError(f"negative order {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a loop")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in graph of order {g.n}")


def neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return VertexSet(g.adj[v], g.n)


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return VertexSet(g.adj[v] | 1 << v, g.n)


def closed_neighborhood_of_set(g: Graph, s: int) -> int:
    out = s
    for v in iter_bits(s):
        out |= g.adj[v]
    return out


def private_mask(g: Graph, v: int, s: int) -> int:
    """``N[v]`` minus ``N[s - v]`` as a mask."""
    return (g.adj[v] | 1 << v) & ~closed_neighborhood_of_set(g, s & ~(1 << v))


def private_neighbors(g: Graph, v: int, s: VertexSet | Iterable[int] | int) -> VertexSet:
    """Vertices of ``N[v]`` dominated by ``v`` alone among ``s``.

    Equivalently the vertices ``u`` with ``N[u] & s == {v}``.
    """
    mask = as_mask(s)
    _check_vertex(g, v)
    if not mask >> v & 1:
        raise GraphError(f"vertex {v} is not a member of the set")
    return VertexSet(private_mask(g, v, mask), g.n)


def induced_subgraph(g: Graph, s: VertexSet | Iterable[int] | int) -> tuple[Graph, list[int]]:
    """Return ``G[s]`` and the list mapping its vertices back to ``g``."""
    mask = as_mask(s)
    index = list(iter_bits(mask))
    pos = {v: i for i, v in enumerate(index)}
    adj = []
    for v in index:
        row = 0
        for u in iter_bits(g.adj[v] & mask):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph._trusted(len(index), tuple(adj)), index


def reach(g: Graph, start: int, within: int) -> int:
    """Vertices of ``within`` reachable from ``start`` inside ``G[within]``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``G[within]`` (default: all of ``g``) as masks."""
    rest = g.full_mask if within is None else within
    out = []
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = reach(g, v, rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    """The empty graph counts as disconnected; ``K1`` as connected."""
    if g.n == 0:
        return False
    return reach(g, 0, g.full_mask) == g.full_mask


def degree_stats(g: Graph) -> tuple[int, int]:
    """Return ``(min degree, max degree)``."""
    if g.n == 0:
        raise GraphError("degree statistics of the empty graph are undefined")
    degs = g.degrees()
    return min(degs), max(degs)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.size == g.n - 1 and is_connected(g)


def leaves(g: Graph) -> VertexSet:
    return VertexSet(sum(1 << v for v in range(g.n) if g.degree(v) == 1), g.n)


def support_vertices(g: Graph) -> VertexSet:
    mask = 0
    for v in leaves(g):
        mask |= g.adj[v]
    return VertexSet(mask, g.n)


def is_path_graph(g: Graph) -> bool:
    """True for ``P_n``, ``n >= 1``."""
    if g.n == 0 or not is_connected(g):
        return False
    return g.size == g.n - 1 and max(g.degrees()) <= 2


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(d == 2 for d in g.degrees())


def is_caterpillar(g: Graph) -> bool:
    """A tree whose non-leaf vertices induce a path (possibly empty)."""
    if not is_tree(g):
        return False
    spine = g.full_mask & ~leaves(g).bits
    if spine == 0:
        return True
    h, _ = induced_subgraph(g, spine)
    return is_path_graph(h)


def is_p4_free(g: Graph) -> bool:
    """No four vertices induce ``P_4``.

    An induced ``P_4`` is the only 4-vertex graph with three edges and degree
    sequence (1, 1, 2, 2); quadruples are scanned exhaustively.
    """
    adj = g.adj
    for quad in combinations(range(g.n), 4):
        mask = (1 << quad[0]) | (1 << quad[1]) | (1 << quad[2]) | (1 << quad[3])
        degs = sorted((adj[v] & mask).bit_count() for v in quad)
        if degs == [1, 1, 2, 2]:
            return False
    return True


def is_regular(g: Graph, k: int | None = None) -> bool:
    """True iff every vertex has degree ``k`` (any common degree if ``k`` is None)."""
    degs = set(g.degrees())
    if not degs:
        return True
    if len(degs) != 1:
        return False
    return k is None or degs == {k}
