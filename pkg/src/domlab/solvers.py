"""Exact domination parameters: predicates, a plain enumeration oracle, and a
branch-and-bound solver.

Four set kinds are supported:

``DOM``      every vertex outside S has a neighbour in S
``TOTAL``    every vertex has a neighbour in S
``ONETWO``   every vertex outside S has one or two neighbours in S
``TOTAL12``  every vertex has one or two neighbours in S

A parameter value is an ``int`` or :data:`INFINITE` (``math.inf``) when no
qualifying set exists, which only happens for ``TOTAL`` and ``TOTAL12``.
Among minimum sets the lexicographically smallest one (by sorted vertex
indices) is returned as the witness, by both solver paths.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, VertexSet, as_mask, iter_bits

__all__ = [
    "Kind",
    "INFINITE",
    "DomValue",
    "SolveResult",
    "ORACLE_MAX_ORDER",
    "is_dominating",
    "is_total_dominating",
    "is_12_set",
    "is_total_12_set",
    "satisfies",
    "oracle_minimum",
    "solve",
    "minimum_sets",
    "external_private_mask",
    "min_dominating_with_private",
    "TheoremViolation",
]

INFINITE = math.inf
DomValue = int | float
ORACLE_MAX_ORDER = 24


class Kind(enum.Enum):
    DOM = "gamma"
    TOTAL = "gamma_t"
    ONETWO = "gamma_12"
    TOTAL12 = "gamma_t12"

    @classmethod
    def parse(cls, name: str | Kind) -> Kind:
        if isinstance(name, Kind):
            return name
        key = name.strip().upper().replace("-", "").replace("_", "")
        aliases = {
            "DOM": cls.DOM, "GAMMA": cls.DOM,
            "TOTAL": cls.TOTAL, "GAMMAT": cls.TOTAL,
            "ONETWO": cls.ONETWO, "12": cls.ONETWO, "GAMMA12": cls.ONETWO,
            "TOTAL12": cls.TOTAL12, "T12": cls.TOTAL12, "GAMMAT12": cls.TOTAL12,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown domination kind {name!r}") from None


class TheoremViolation(RuntimeError):
    """A search exhausted without finding an object a cited theorem guarantees."""


@dataclass(frozen=True)
class SolveResult:
    value: DomValue
    witness: VertexSet | None
    nodes_explored: int = 0

    @property
    def finite(self) -> bool:
        return self.value != INFINITE


# -- predicates ---------------------------------------------------------------


def _counts(g: Graph, s: int) -> list[int]:
    return [(row & s).bit_count() for row in g.adj]


def is_dominating(g: Graph, s: VertexSet | Iterable[int] | int) -> bool:
    s = as_mask(s)
    return all(s >> v & 1 or row & s for v, row in enumerate(g.adj))


def is_total_dominating(g: Graph, s: VertexSet | Iterable[int] | int) -> bool:
    s = as_mask(s)
    return all(row & s for row in g.adj)


def is_12_set(g: Graph, s: VertexSet | Iterable[int] | int) -> bool:
    """Dominating, and every vertex outside ``s`` has at most two neighbours in it."""
    s = as_mask(s)
    return all(s >> v & 1 or 1 <= (row & s).bit_count() <= 2 for v, row in enumerate(g.adj))


def is_total_12_set(g: Graph, s: VertexSet | Iterable[int] | int) -> bool:
    """Every vertex, members included, has one or two neighbours in ``s``."""
    s = as_mask(s)
    return all(1 <= (row & s).bit_count() <= 2 for row in g.adj)


_PREDICATES = {
    Kind.DOM: is_dominating,
    Kind.TOTAL: is_total_dominating,
    Kind.ONETWO: is_12_set,
    Kind.TOTAL12: is_total_12_set,
}


def satisfies(g: Graph, s: VertexSet | Iterable[int] | int, kind: Kind | str) -> bool:
    return _PREDICATES[Kind.parse(kind)](g, as_mask(s))


# -- oracle ---------------------------------------------------------------------


def _check_order(g: Graph) -> None:
    if g.n == 0:
        raise GraphError("domination parameters are defined for graphs of order >= 1")


def oracle_minimum(g: Graph, kind: Kind | str) -> SolveResult:
    """Smallest qualifying set by plain enumeration of all subsets by size.

    Only meant as a reference; refuses graphs above order 24.
    """
    kind = Kind.parse(kind)
    _check_order(g)
    if g.n > ORACLE_MAX_ORDER:
        raise GraphError(f"oracle supports order <= {ORACLE_MAX_ORDER}, got {g.n}")
    pred = _PREDICATES[kind]
    tried = 0
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            tried += 1
            mask = 0
            for v in combo:
                mask |= 1 << v
            if pred(g, mask):
                return SolveResult(k, VertexSet(mask, g.n), tried)
    return SolveResult(INFINITE, None, tried)


# -- branch and bound -----------------------------------------------------------


def degeneracy_order(g: Graph) -> list[int]:
    """Vertices in the order they are peeled by repeated minimum-degree removal."""
    alive = g.full_mask
    deg = g.degrees()
    order = []
    while alive:
        v = min(iter_bits(alive), key=lambda u: (deg[u], u))
        order.append(v)
        alive &= ~(1 << v)
        for u in iter_bits(g.adj[v] & alive):
            deg[u] -= 1
    return order


class _Search:
    """Branch and bound over (selected, excluded) masks.

    Each node first propagates forced decisions, then branches on the most
    constrained under-covered vertex: one branch per remaining candidate
    dominator, earlier candidates excluded in later branches.
    """

    def __init__(self, g: Graph, kind: Kind) -> None:
        self.g = g
        self.kind = kind
        self.n = g.n
        self.adj = g.adj
        self.full = g.full_mask
        self.total = kind in (Kind.TOTAL, Kind.TOTAL12)
        self.capped = kind in (Kind.ONETWO, Kind.TOTAL12)
        # Candidate dominators of each vertex.
        if self.total:
            self.cover = list(g.adj)
        else:
            self.cover = [row | 1 << v for v, row in enumerate(g.adj)]
        # Both neighbourhood relations are symmetric, so a chosen vertex c
        # helps exactly the vertices in cover[c].
        self.reach = self.cover
        rank = [0] * g.n
        # Later-peeled vertices sit in denser cores; try them first.
        for i, v in enumerate(reversed(degeneracy_order(g))):
            rank[v] = i
        self.rank = rank
        self.nodes = 0
        self.best = INFINITE
        self.best_set: int | None = None
        self.first_only = False

    def propagate(self, s: int, x: int) -> tuple[int, int] | None:
        adj = self.adj
        kind = self.kind
        changed = True
        while changed:
            changed = False
            u_mask = self.full & ~s & ~x
            for v in range(self.n):
                row = adj[v]
                sel = (row & s).bit_count()
                bit = 1 << v
                if kind is Kind.TOTAL12:
                    if sel > 2:
                        return None
                    if sel == 2:
                        if row & u_mask:
                            x |= row & u_mask
                            u_mask &= ~row
                            changed = True
                    elif sel == 0:
                        cand = row & u_mask
                        if not cand:
                            return None
                        if cand & (cand - 1) == 0:
                            s |= cand
                            u_mask &= ~cand
                            changed = True
                elif kind is Kind.TOTAL:
                    if sel == 0:
                        cand = row & u_mask
                        if not cand:
                            return None
                        if cand & (cand - 1) == 0:
                            s |= cand
                            u_mask &= ~cand
                            changed = True
                elif kind is Kind.DOM:
                    if not s & bit and sel == 0:
                        cand = (row | bit) & u_mask
                        if not cand:
                            return None
                        if cand & (cand - 1) == 0:
                            s |= cand
                            u_mask &= ~cand
                            changed = True
                else:  # ONETWO
                    if s & bit:
                        continue
                    if x & bit:
                        if sel > 2:
                            return None
                        if sel == 2:
                            if row & u_mask:
                                x |= row & u_mask
                                u_mask &= ~row
                                changed = True
                        elif sel == 0:
                            cand = row & u_mask
                            if not cand:
                                return None
                            if cand & (cand - 1) == 0:
                                s |= cand
                                u_mask &= ~cand
                                changed = True
                    elif sel > 2 or (sel == 0 and not row & u_mask):
                        s |= bit
                        u_mask &= ~bit
                        changed = True
        return s, x

    def deficient(self, s: int) -> list[int]:
        adj = self.adj
        if self.total:
            return [v for v in range(self.n) if not adj[v] & s]
        return [v for v in range(self.n) if not (s >> v & 1) and not adj[v] & s]

    def lower_bound(self, deficient: list[int], u_mask: int) -> int:
        cover = self.cover
        # Disjoint candidate sets each demand their own new vertex.
        used = 0
        packing = 0
        for v in sorted(deficient, key=lambda w: (cover[w] & u_mask).bit_count()):
            cand = cover[v] & u_mask
            if not cand & used:
                used |= cand
                packing += 1
        dmask = sum(1 << v for v in deficient)
        best_gain = max((self.reach[c] & dmask).bit_count() for c in iter_bits(u_mask))
        ratio = -(-len(deficient) // best_gain)
        return max(packing, ratio)

    def run(self, s: int, x: int) -> bool:
        """Explore the subtree; True means stop everything (first_only hit)."""
        self.nodes += 1
        state = self.propagate(s, x)
        if state is None:
            return False
        s, x = state
        size = s.bit_count()
        if size >= self.best:
            return False
        deficient = self.deficient(s)
        if not deficient:
            self.best = size
            self.best_set = s
            return self.first_only
        u_mask = self.full & ~s & ~x
        if not u_mask:
            return False
        if size + self.lower_bound(deficient, u_mask) >= self.best:
            return False
        cover = self.cover
        rank = self.rank
        v = min(deficient, key=lambda w: ((cover[w] & u_mask).bit_count(), rank[w]))
        cands = list(iter_bits(cover[v] & u_mask))
        dmask = sum(1 << w for w in deficient)
        cands.sort(key=lambda c: (-(self.reach[c] & dmask).bit_count(), rank[c]))
        excluded = x
        for c in cands:
            if self.run(s | 1 << c, excluded):
                return True
            excluded |= 1 << c
        return False


def _lex_first(search: _Search, k: int, witness: int) -> int:
    """Lexicographically smallest qualifying set of size ``k``.

    Vertices are fixed in index order: in if some size-``k`` solution agrees
    with the decisions so far and contains the vertex, out otherwise.
    ``witness`` is any size-``k`` solution.
    """
    s = x = 0
    current = witness
    search.first_only = True
    for v in range(search.n):
        if s.bit_count() == k:
            break
        bit = 1 << v
        if current & bit:
            s |= bit
            continue
        search.best = k + 1
        search.best_set = None
        search.run(s | bit, x)
        if search.best_set is not None:
            s |= bit
            current = search.best_set
        else:
            x |= bit
    search.first_only = False
    return s


def solve(g: Graph, kind: Kind | str) -> SolveResult:
    """Exact minimum by branch and bound (order up to 64)."""
    kind = Kind.parse(kind)
    _check_order(g)
    g.check_solver_order()
    search = _Search(g, kind)
    search.run(0, 0)
    if search.best_set is None:
        return SolveResult(INFINITE, None, search.nodes)
    k = int(search.best)
    lex = _lex_first(search, k, search.best_set)
    return SolveResult(k, VertexSet(lex, g.n), search.nodes)


# -- private neighbours ---------------------------------------------------------------


def minimum_sets(g: Graph, kind: Kind | str, size: int | None = None) -> Iterator[int]:
    """All qualifying sets of the minimum size (or of ``size``) as masks, lex order."""
    kind = Kind.parse(kind)
    if size is None:
        value = solve(g, kind).value
        if value == INFINITE:
            return
        size = int(value)
    pred = _PREDICATES[kind]
    for combo in combinations(range(g.n), size):
        mask = 0
        for v in combo:
            mask |= 1 << v
        if pred(g, mask):
            yield mask


def external_private_mask(g: Graph, v: int, d: int) -> int:
    """Vertices outside ``d`` whose only neighbour in ``d`` is ``v``."""
    out = 0
    for u in iter_bits(g.adj[v] & ~d):
        if g.adj[u] & d == 1 << v:
            out |= 1 << u
    return out


def has_external_privates(g: Graph, d: int) -> bool:
    return all(external_private_mask(g, v, d) for v in iter_bits(d))


def min_dominating_with_private(g: Graph) -> VertexSet:
    """A minimum dominating set in which every member has an external private neighbour.

    The lexicographically first such set is returned.  Requires a graph with
    no isolated vertex and order at most 24.
    """
    _check_order(g)
    if g.n > ORACLE_MAX_ORDER:
        raise GraphError(f"order {g.n} exceeds {ORACLE_MAX_ORDER}")
    if any(row == 0 for row in g.adj):
        raise GraphError("graph has an isolated vertex")
    for d in minimum_sets(g, Kind.DOM):
        if has_external_privates(g, d):
            return VertexSet(d, g.n)
    raise TheoremViolation("no minimum dominating set has external private neighbours for all members")
