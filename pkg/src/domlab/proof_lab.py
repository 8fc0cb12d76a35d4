"""Objects from the proofs of the 4n/5 and 2n/3 upper bounds.

A total [1,2]-set ``S`` induces a subgraph of maximum degree 2 without
isolated vertices, so each component of ``G[S]`` is a cycle or a path of
order at least two.  :func:`decompose` sorts ``S`` by component type and
computes the private-neighbour counts that the counting argument uses.
All inequalities are compared in integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    Graph,
    GraphError,
    VertexSet,
    as_mask,
    components,
    induced_subgraph,
    is_connected,
    iter_bits,
)
from .solvers import external_private_mask, is_total_12_set

__all__ = [
    "Decomposition",
    "ClaimReport",
    "decompose",
    "check_claims_4n5",
    "check_claims_2n3",
    "equality_conditions_2n3",
    "recognize_double_corona",
]


@dataclass(frozen=True)
class Decomposition:
    """Partition of ``S`` by the shape of its component in ``G[S]``.

    ``s1`` cycles, ``s2`` copies of ``K2``, ``s3`` copies of ``P3``, ``s4``
    paths of order at least four (``omega4`` of them).  ``pri1``, ``pri3``,
    ``pri4`` are unions of external private neighbourhoods; ``u_set`` is what
    remains outside ``S`` and those unions, and ``w_set`` is the part of
    ``u_set`` adjacent to ``s2``.
    """

    s: VertexSet
    s1: VertexSet
    s2: VertexSet
    s3: VertexSet
    s4: VertexSet
    omega4: int
    pri1: VertexSet
    pri3: VertexSet
    pri4: VertexSet
    u_set: VertexSet
    w_set: VertexSet


@dataclass
class ClaimReport:
    """Truth value of each inequality, keyed by a short name."""

    results: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    def failed(self) -> list[str]:
        return [name for name, ok in self.results.items() if not ok]


def decompose(g: Graph, s: VertexSet | int | list[int]) -> Decomposition:
    mask = as_mask(s)
    if not is_total_12_set(g, mask):
        raise GraphError("decompose needs a total [1,2]-set")
    parts = [0, 0, 0, 0]
    omega4 = 0
    for comp in components(g, mask):
        size = comp.bit_count()
        edges = sum((g.adj[v] & comp).bit_count() for v in iter_bits(comp)) // 2
        if edges == size:
            parts[0] |= comp
        elif size == 2:
            parts[1] |= comp
        elif size == 3:
            parts[2] |= comp
        else:
            parts[3] |= comp
            omega4 += 1
    pri = []
    for part in (parts[0], parts[2], parts[3]):
        acc = 0
        for v in iter_bits(part):
            acc |= external_private_mask(g, v, mask)
        pri.append(acc)
    u = g.full_mask & ~(mask | pri[0] | pri[1] | pri[2])
    near_s2 = 0
    for v in iter_bits(parts[1]):
        near_s2 |= g.adj[v]
    n = g.n
    return Decomposition(
        s=VertexSet(mask, n),
        s1=VertexSet(parts[0], n),
        s2=VertexSet(parts[1], n),
        s3=VertexSet(parts[2], n),
        s4=VertexSet(parts[3], n),
        omega4=omega4,
        pri1=VertexSet(pri[0], n),
        pri3=VertexSet(pri[1], n),
        pri4=VertexSet(pri[2], n),
        u_set=VertexSet(u, n),
        w_set=VertexSet(u & near_s2, n),
    )


def _claim1(d: Decomposition) -> dict[str, bool]:
    return {
        "pri1>=s1": len(d.pri1) >= len(d.s1),
        "3*pri3>=2*s3": 3 * len(d.pri3) >= 2 * len(d.s3),
        "pri4>=s4-2*omega4": len(d.pri4) >= len(d.s4) - 2 * d.omega4,
    }


def check_claims_4n5(g: Graph, s: VertexSet | int | list[int]) -> ClaimReport:
    """Private-neighbour counts plus ``4|U| >= |S2|``.

    Meant for minimum total [1,2]-sets of connected graphs; on other sets the
    inequalities need not hold and the report simply records that.
    """
    d = decompose(g, s)
    results = _claim1(d)
    results["4*U>=s2"] = 4 * len(d.u_set) >= len(d.s2)
    return ClaimReport(results)


def check_claims_2n3(g: Graph, s: VertexSet | int | list[int]) -> ClaimReport:
    """As :func:`check_claims_4n5` with ``2|U| >= |S2|``, for minimum degree 2."""
    d = decompose(g, s)
    results = _claim1(d)
    results["2*U>=s2"] = 2 * len(d.u_set) >= len(d.s2)
    return ClaimReport(results)


def equality_conditions_2n3(g: Graph, s: VertexSet | int | list[int]) -> dict[str, bool]:
    """Conditions forced when ``3|S| = 2n``; recorded, never asserted as a converse."""
    d = decompose(g, s)
    return {
        "s1_empty": len(d.s1) == 0,
        "s3_empty": len(d.s3) == 0,
        "s4==4*omega4": len(d.s4) == 4 * d.omega4,
        "2*pri4==s4": 2 * len(d.pri4) == len(d.s4),
        "2*U==s2": 2 * len(d.u_set) == len(d.s2),
        "U==W": d.u_set == d.w_set,
    }


def recognize_double_corona(g: Graph) -> Graph | None:
    """Return ``H`` if ``g`` is ``H o 2P_2`` with ``H`` connected of order >= 2.

    Every leaf must hang from a degree-2 support carrying no other leaf, the
    remaining vertices form the core, and every core vertex must meet exactly
    two supports.
    """
    n = g.n
    if n < 10 or n % 5:
        return None
    degs = g.degrees()
    leaf_mask = 0
    support_mask = 0
    for v in range(n):
        if degs[v] == 1:
            leaf_mask |= 1 << v
    for v in iter_bits(leaf_mask):
        sup = g.adj[v].bit_length() - 1
        if degs[sup] != 2 or support_mask >> sup & 1:
            return None
        support_mask |= 1 << sup
    core = g.full_mask & ~(leaf_mask | support_mask)
    for sup in iter_bits(support_mask):
        other = g.adj[sup] & ~leaf_mask
        if other.bit_count() != 1 or not other & core:
            return None
    for v in iter_bits(core):
        if (g.adj[v] & support_mask).bit_count() != 2 or g.adj[v] & leaf_mask:
            return None
    m = core.bit_count()
    if m < 2 or n != 5 * m:
        return None
    h, _ = induced_subgraph(g, core)
    return h if is_connected(h) else None
