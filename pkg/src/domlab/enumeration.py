"""Canonical forms and isomorph-free enumeration of small graphs.

The canonical code of a graph is the lexicographically smallest graph6-order
upper-triangle bit string over all vertex relabelings.  It is found by a
breadth-first search over partial labelings that keeps only prefixes whose bit
string ties the best one seen so far.  Two prefixes are merged when the set of
unplaced vertices and each unplaced vertex's adjacency to the placed positions
coincide, since their completions are then identical.
"""

from __future__ import annotations

import functools
from collections.abc import Callable, Iterable, Iterator
from itertools import combinations_with_replacement

from .graph import Graph, GraphError, is_connected, iter_bits

__all__ = [
    "CANONICAL_MAX_ORDER",
    "ENUMERATION_MAX_ORDER",
    "canonical_code",
    "canonical_form",
    "are_isomorphic",
    "enumerate_graphs",
    "enumerate_connected_graphs",
    "enumerate_isolated_free_graphs",
    "enumerate_trees",
    "disjoint_union",
]

CANONICAL_MAX_ORDER = 10
ENUMERATION_MAX_ORDER = 8
TREE_MAX_ORDER = 16


# Bit index tuples for every mask up to the canonical-form cap.
_BITS = tuple(tuple(iter_bits(m)) for m in range(1 << CANONICAL_MAX_ORDER))


def _canonical_order(g: Graph) -> list[int]:
    """Vertex order realising the minimal code (first one found)."""
    n = g.n
    adj = g.adj
    bits = _BITS
    full = (1 << n) - 1
    # state key -> (placed order, vectors); vec[u] holds u's adjacency to the
    # placed positions, most significant bit = position 0.
    states: dict[tuple, tuple[tuple[int, ...], tuple[int, ...]]] = {
        (full, (0,) * n): ((), (0,) * n)
    }
    for _ in range(n):
        best = min(vec[u] for (rest, _), (_, vec) in states.items() for u in bits[rest])
        nxt: dict[tuple, tuple[tuple[int, ...], tuple[int, ...]]] = {}
        for (rest, _), (order, vec) in states.items():
            for u in bits[rest]:
                if vec[u] != best:
                    continue
                row = adj[u]
                new_rest = rest & ~(1 << u)
                new_vec = list(vec)
                key_vec = []
                for w in bits[new_rest]:
                    x = vec[w] << 1 | (row >> w & 1)
                    new_vec[w] = x
                    key_vec.append(x)
                key = (new_rest, tuple(key_vec))
                if key not in nxt:
                    nxt[key] = (order + (u,), tuple(new_vec))
        states = nxt
    order, _ = next(iter(states.values()))
    return list(order)


def _code_for_order(g: Graph, order: list[int]) -> bytes:
    bits = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[order[j]]
        for i in range(j):
            bits = bits << 1 | (row >> order[i] & 1)
            nbits += 1
    pad = -nbits % 8
    return bytes([g.n]) + (bits << pad).to_bytes((nbits + pad) // 8, "big")


def canonical_code(g: Graph) -> bytes:
    """Isomorphism-invariant byte string; equal codes iff isomorphic graphs.

    The payload is the minimal upper-triangle bit string packed big-endian,
    prefixed by the order.  Raises :class:`GraphError` above order 10.
    """
    if g.n > CANONICAL_MAX_ORDER:
        raise GraphError(f"canonical_code supports order <= {CANONICAL_MAX_ORDER}, got {g.n}")
    return _code_for_order(g, _canonical_order(g))


def canonical_form(g: Graph) -> Graph:
    """The relabeled copy of ``g`` whose upper triangle is the canonical code."""
    if g.n > CANONICAL_MAX_ORDER:
        raise GraphError(f"canonical_form supports order <= {CANONICAL_MAX_ORDER}, got {g.n}")
    order = _canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_code(g) == canonical_code(h)


def _check_enum_order(n: int) -> None:
    if n < 0:
        raise GraphError(f"negative order {n}")
    if n > ENUMERATION_MAX_ORDER:
        raise GraphError(
            f"internal enumeration stops at order {ENUMERATION_MAX_ORDER}; "
            "supply larger corpora as graph6 input"
        )


@functools.lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    # Deleting a minimum-degree vertex of any graph of order n leaves a graph
    # of order n-1, so it suffices to join a new vertex to those subsets that
    # keep it of minimum degree; duplicates are dropped by canonical form.
    if n == 0:
        return (Graph._trusted(0, ()),)
    seen: dict[tuple[int, ...], Graph] = {}
    new_bit = 1 << (n - 1)
    for parent in _all_graphs(n - 1):
        degs = parent.degrees()
        for subset in range(1 << (n - 1)):
            d = subset.bit_count()
            if any(deg + (subset >> w & 1) < d for w, deg in enumerate(degs)):
                continue
            adj = [row | new_bit if subset >> v & 1 else row for v, row in enumerate(parent.adj)]
            adj.append(subset)
            form = canonical_form(Graph._trusted(n, tuple(adj)))
            seen.setdefault(form.adj, form)
    return tuple(sorted(seen.values(), key=_sort_key))


def _sort_key(g: Graph) -> tuple:
    return (g.size, g.adj)


def enumerate_graphs(n: int, filter: Callable[[Graph], bool] | None = None) -> Iterator[Graph]:
    """One representative per isomorphism class of graphs of order ``n``."""
    _check_enum_order(n)
    for g in _all_graphs(n):
        if filter is None or filter(g):
            yield g


def enumerate_connected_graphs(n: int, filter: Callable[[Graph], bool] | None = None) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs of order ``n``.

    Representatives are in canonical form, ordered by edge count.  Orders above
    8 raise :class:`GraphError`; use graph6 input for those.
    """
    _check_enum_order(n)
    for g in _all_graphs(n):
        if is_connected(g) and (filter is None or filter(g)):
            yield g


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    adj: list[int] = []
    for g in graphs:
        offset = len(adj)
        adj.extend(row << offset for row in g.adj)
    return Graph._trusted(len(adj), tuple(adj))


def _partitions(n: int, smallest: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    for part in range(smallest, n + 1):
        for rest in _partitions(n - part, part):
            yield [part] + rest


def enumerate_isolated_free_graphs(n: int) -> Iterator[Graph]:
    """Graphs of order ``n`` without isolated vertices, up to isomorphism.

    Built as multisets of connected components of order at least two, so no
    canonical form is needed for deduplication.
    """
    _check_enum_order(n)
    for parts in _partitions(n, 2):
        yield from _unions(parts)


def _unions(parts: list[int]) -> Iterator[Graph]:
    groups: list[tuple[int, int]] = []
    for p in parts:
        if groups and groups[-1][0] == p:
            groups[-1] = (p, groups[-1][1] + 1)
        else:
            groups.append((p, 1))
    choices = [
        list(combinations_with_replacement(list(enumerate_connected_graphs(p)), count))
        for p, count in groups
    ]

    def rec(i: int, acc: list[Graph]) -> Iterator[Graph]:
        if i == len(choices):
            yield disjoint_union(acc)
            return
        for combo in choices[i]:
            yield from rec(i + 1, acc + list(combo))

    yield from rec(0, [])


def _tree_code(g: Graph) -> str:
    # AHU encoding rooted at the centre(s); the smaller string wins for bicentral trees.
    n = g.n
    degree = g.degrees()
    remaining = n
    layer = [v for v in range(n) if degree[v] <= 1]
    removed = [False] * n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            removed[v] = True
            for u in iter_bits(g.adj[v]):
                if not removed[u]:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    centres = [v for v in range(n) if not removed[v]]

    def encode(v: int, parent: int) -> str:
        kids = sorted(encode(u, v) for u in iter_bits(g.adj[v]) if u != parent)
        return "(" + "".join(kids) + ")"

    return min(encode(c, -1) for c in centres)


@functools.lru_cache(maxsize=None)
def _all_trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph._trusted(1, (0,)),)
    seen: dict[str, Graph] = {}
    for parent in _all_trees(n - 1):
        for v in range(n - 1):
            adj = list(parent.adj)
            adj[v] |= 1 << (n - 1)
            adj.append(1 << v)
            child = Graph._trusted(n, tuple(adj))
            seen.setdefault(_tree_code(child), child)
    return tuple(seen[k] for k in sorted(seen))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """Non-isomorphic trees of order ``n`` (leaf extension with AHU dedup)."""
    if not 1 <= n <= TREE_MAX_ORDER:
        raise GraphError(f"tree enumeration supports 1 <= n <= {TREE_MAX_ORDER}, got {n}")
    yield from _all_trees(n)
