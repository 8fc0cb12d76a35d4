"""Deterministic generators for the graph families used by the verifier.

Vertex labels are fixed per family and documented on each generator, so the
same parameters always give the same graph6 line.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .graph import Graph, GraphError, graph_from_edges

__all__ = [
    "FamilyError",
    "FamilySpec",
    "FAMILY_KINDS",
    "build",
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "petersen",
    "corona_path",
    "double_corona_path",
    "corona_k1",
    "family_F_nk",
    "family_F_k",
    "family_H_nk",
    "family_G_pk",
    "middle_levels",
    "random_regular",
]


class FamilyError(GraphError):
    """Parameters outside a family's admissible range."""


def path(n: int) -> Graph:
    """``P_n`` labelled ``0 - 1 - ... - n-1``."""
    if n < 1:
        raise FamilyError(f"path needs n >= 1, got {n}")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError(f"cycle needs n >= 3, got {n}")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyError(f"complete graph needs n >= 1, got {n}")
    return graph_from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with blocks ``[0, a)`` and ``[a, a+b)``."""
    if a < 1 or b < 1:
        raise FamilyError(f"complete bipartite graph needs a, b >= 1, got ({a}, {b})")
    return graph_from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    """Outer 5-cycle ``0..4``, inner pentagram ``5..9``, spokes ``i ~ i+5``."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return graph_from_edges(10, edges)


def corona_path(h: Graph, k: int) -> Graph:
    """``H o P_k``: a new path on ``k`` vertices hung from every vertex of ``H``.

    Labels: ``H`` keeps ``0..|H|-1``; the path at vertex ``i`` occupies
    ``|H| + i*k + t`` for ``t = 0..k-1``, ordered by distance from ``i``.
    """
    if k < 1:
        raise FamilyError(f"corona path length must be >= 1, got {k}")
    m = h.n
    edges = h.edges()
    for i in range(m):
        base = m + i * k
        edges.append((i, base))
        edges += [(base + t, base + t + 1) for t in range(k - 1)]
    return graph_from_edges(m * (k + 1), edges)


def double_corona_path(h: Graph, k: int) -> Graph:
    """``H o 2P_k``: two new ``k``-vertex paths hung from every vertex of ``H``.

    Labels are layered by distance from ``H``: after ``H`` come the first
    vertices ``x_i`` of one path at every ``i``, then the first vertices
    ``y_i`` of the other path, then the second layer ``x_i'``, ``y_i'``, and
    so on.  For ``k = 2`` this is ``V(H), X, Y, X', Y'``.
    """
    if k < 1:
        raise FamilyError(f"double corona path length must be >= 1, got {k}")
    m = h.n

    def label(layer: int, side: int, i: int) -> int:
        return m + (2 * layer + side) * m + i

    edges = h.edges()
    for i in range(m):
        for side in (0, 1):
            edges.append((i, label(0, side, i)))
            edges += [(label(t, side, i), label(t + 1, side, i)) for t in range(k - 1)]
    return graph_from_edges(m * (2 * k + 1), edges)


def corona_k1(h: Graph) -> Graph:
    """``H o K_1``: leaf ``|H| + i`` attached to vertex ``i``."""
    m = h.n
    return graph_from_edges(2 * m, h.edges() + [(i, m + i) for i in range(m)])


def family_F_nk(n: int, k: int) -> Graph:
    """Order-``n`` graph with total [1,2]-domination number ``k``.

    Labels: clique ``v_1..v_{n-k}`` is ``0..n-k-1``.  For even ``k`` the pairs
    ``w_i, w_i'`` follow as ``w_1..w_{k/2}`` then ``w_1'..w_{k/2}'``.  For odd
    ``k`` the pairs run to ``(k-3)/2`` and are followed by ``w, w', w''``.
    Admissible: ``10 <= k <= floor(4n/5)`` for even ``k``, ``10 <= k <
    floor(4n/5)`` for odd ``k``.
    """
    cap = 4 * n // 5
    if k < 10:
        raise FamilyError(f"F_{{n,k}} needs k >= 10, got k={k}")
    if k % 2 == 0 and k > cap:
        raise FamilyError(f"F_{{n,k}} with even k needs k <= floor(4n/5) = {cap}, got k={k}")
    if k % 2 == 1 and k >= cap:
        raise FamilyError(f"F_{{n,k}} with odd k needs k < floor(4n/5) = {cap}, got k={k}")
    r = k // 4
    base = n - k
    v = lambda i: i - 1  # noqa: E731  (1-based clique index)
    edges = list(combinations(range(base), 2))
    if k % 2 == 0:
        half = k // 2
        w = lambda i: base + i - 1  # noqa: E731
        wp = lambda i: base + half + i - 1  # noqa: E731
        edges += [(w(i), wp(i)) for i in range(1, half + 1)]
        if k % 4 == 0:
            for i in range(1, r):
                edges += [(v(i), w(2 * i - 1)), (v(i), w(2 * i))]
            edges.append((v(r), w(2 * r - 1)))
            for j in range(r + 1, base + 1):
                edges += [(v(j), w(2 * r)), (v(j), wp(2 * r))]
        else:
            for i in range(1, r + 1):
                edges += [(v(i), w(2 * i - 1)), (v(i), w(2 * i))]
            for j in range(r + 1, base + 1):
                edges += [(v(j), w(2 * r + 1)), (v(j), wp(2 * r + 1))]
    else:
        if base - r < 2:
            raise FamilyError(f"F_{{n,k}} with odd k needs n-k-r >= 2, got {base - r}")
        pairs = (k - 3) // 2
        w = lambda i: base + i - 1  # noqa: E731
        wp = lambda i: base + pairs + i - 1  # noqa: E731
        a, b, c = base + 2 * pairs, base + 2 * pairs + 1, base + 2 * pairs + 2  # w, w', w''
        edges += [(w(i), wp(i)) for i in range(1, pairs + 1)]
        edges += [(a, b), (b, c)]
        if k % 4 == 1:
            for i in range(1, r):
                edges += [(v(i), w(2 * i - 1)), (v(i), w(2 * i))]
            edges.append((v(r), w(2 * r - 1)))
        else:
            for i in range(1, r + 1):
                edges += [(v(i), w(2 * i - 1)), (v(i), w(2 * i))]
        edges += [(v(r + 1), a), (v(r + 2), c)]
        edges += [(v(j), b) for j in range(r + 3, base + 1)]
    return graph_from_edges(n, edges)


def family_F_k(k: int) -> Graph:
    """Order ``3k``: clique ``v_i = i-1``, ``w_i = k+i-1``, ``w_i' = 2k+i-1``.

    Each ``v_i - w_i - w_i' - v_{i+1}`` (indices mod ``k``) is a path.
    """
    if k < 4:
        raise FamilyError(f"F_k needs k >= 4, got {k}")
    edges = list(combinations(range(k), 2))
    for i in range(k):
        edges += [(i, k + i), (k + i, 2 * k + i), (2 * k + i, (i + 1) % k)]
    return graph_from_edges(3 * k, edges)


def family_H_nk(n: int, k: int) -> Graph:
    """Order-``n`` graph with minimum degree 2 and total [1,2]-domination number ``k``.

    Labels: clique ``v_1..v_{n-k}`` is ``0..n-k-1``, then ``w_1..w_r``,
    ``w_1'..w_r'`` with ``r = floor((k-2)/2)``, then ``w, w'`` (even ``k``) or
    ``w, w', w''`` (odd ``k``).  Admissible: ``8 <= k <= floor(2n/3) - 1``.
    """
    cap = 2 * n // 3 - 1
    if not 8 <= k <= cap:
        raise FamilyError(f"H_{{n,k}} needs 8 <= k <= floor(2n/3)-1 = {cap}, got k={k}")
    r = (k - 2) // 2
    base = n - k
    odd = k == 2 * r + 3
    if base < r + (3 if odd else 2):
        raise FamilyError(f"H_{{n,k}} needs n-k >= r+{3 if odd else 2}, got n-k={base}")
    v = lambda i: i - 1  # noqa: E731
    w = lambda i: base + i - 1  # noqa: E731
    wp = lambda i: base + r + i - 1  # noqa: E731
    edges = list(combinations(range(base), 2))
    for i in range(1, r):
        edges += [(v(i), w(i)), (w(i), wp(i)), (wp(i), v(i + 1))]
    edges += [(v(r), w(r)), (w(r), wp(r)), (wp(r), v(1))]
    a, b = base + 2 * r, base + 2 * r + 1
    if not odd:
        edges.append((a, b))
        for j in range(r + 1, base + 1):
            edges += [(v(j), a), (v(j), b)]
    else:
        c = base + 2 * r + 2
        edges += [(v(r + 1), a), (v(r + 2), c), (a, b), (b, c)]
        for j in range(r + 3, base + 1):
            edges += [(v(j), a), (v(j), c)]
    return graph_from_edges(n, edges)


def family_G_pk(p: int, k: int) -> Graph:
    """``K_p`` plus one vertex per ``k``-subset of the clique, joined to that subset.

    Clique vertices ``0..p-1`` first, then subset vertices in lexicographic
    subset order.  Requires ``p >= k + 2 >= 5``.
    """
    if not (k >= 3 and p >= k + 2):
        raise FamilyError(f"G_{{p,k}} needs p >= k+2 >= 5, got p={p}, k={k}")
    edges = list(combinations(range(p), 2))
    for idx, subset in enumerate(combinations(range(p), k)):
        edges += [(p + idx, u) for u in subset]
    return graph_from_edges(p + comb(p, k), edges)


def middle_levels(n: int, a: int, b: int) -> Graph:
    """Containment graph between the ``a``- and ``b``-subsets of ``{0..n-1}``.

    ``a``-subsets come first, each level in lexicographic order.
    """
    if not 0 <= a < b <= n:
        raise FamilyError(f"middle levels graph needs 0 <= a < b <= n, got ({n}, {a}, {b})")
    lower = [frozenset(c) for c in combinations(range(n), a)]
    upper = [frozenset(c) for c in combinations(range(n), b)]
    off = len(lower)
    edges = [(i, off + j) for i, x in enumerate(lower) for j, y in enumerate(upper) if x <= y]
    return graph_from_edges(off + len(upper), edges)


def random_regular(n: int, k: int, seed: int | None = None, max_tries: int = 100_000) -> Graph:
    """Uniform-ish simple ``k``-regular graph from the pairing model.

    Points are shuffled and paired; any loop or repeated edge restarts the
    whole pairing.  Deterministic for a fixed ``seed``.
    """
    if n < 1 or k < 0 or k >= n or (n * k) % 2:
        raise FamilyError(f"no simple {k}-regular graph on {n} vertices (need k < n and n*k even)")
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(k)]
    for _ in range(max_tries):
        rng.shuffle(points)
        seen: set[tuple[int, int]] = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            if u == v:
                ok = False
                break
            e = (u, v) if u < v else (v, u)
            if e in seen:
                ok = False
                break
            seen.add(e)
        if ok:
            return graph_from_edges(n, sorted(seen))
    raise FamilyError(f"pairing model failed {max_tries} times for n={n}, k={k}")


# -- tagged specs -----------------------------------------------------------------

FAMILY_KINDS = {
    "path": ("n",),
    "cycle": ("n",),
    "complete": ("n",),
    "complete_bipartite": ("a", "b"),
    "petersen": (),
    "corona_path": ("k",),
    "double_corona_path": ("k",),
    "corona_k1": (),
    "F_nk": ("n", "k"),
    "F_k": ("k",),
    "H_nk": ("n", "k"),
    "G_pk": ("p", "k"),
    "middle_levels": ("n", "a", "b"),
    "random_regular": ("n", "k"),
}

_NEEDS_BASE = {"corona_path", "double_corona_path", "corona_k1"}


def _normalize_kind(kind: str) -> str:
    # accepts F_nk, f-nk, DoubleCoronaPath, double_corona_path, ...
    squash = lambda text: text.replace("-", "").replace("_", "").lower()  # noqa: E731
    for name in FAMILY_KINDS:
        if squash(name) == squash(kind):
            return name
    raise FamilyError(f"unknown family {kind!r}; choose from {', '.join(FAMILY_KINDS)}")


@dataclass(frozen=True)
class FamilySpec:
    """A family name with its integer parameters.

    ``base`` is the graph ``H`` for the corona families; ``seed`` is used by
    ``random_regular`` only.
    """

    kind: str
    params: dict[str, int] = field(default_factory=dict)
    seed: int | None = None
    base: Graph | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", _normalize_kind(self.kind))
        missing = [p for p in FAMILY_KINDS[self.kind] if p not in self.params]
        if missing:
            raise FamilyError(f"family {self.kind} needs parameter(s) {', '.join(missing)}")
        if self.kind in _NEEDS_BASE and self.base is None:
            raise FamilyError(f"family {self.kind} needs a base graph")

    def build(self) -> Graph:
        return build(self)


def build(spec: FamilySpec) -> Graph:
    p = spec.params
    kind = spec.kind
    if kind == "path":
        return path(p["n"])
    if kind == "cycle":
        return cycle(p["n"])
    if kind == "complete":
        return complete(p["n"])
    if kind == "complete_bipartite":
        return complete_bipartite(p["a"], p["b"])
    if kind == "petersen":
        return petersen()
    if kind == "corona_path":
        return corona_path(spec.base, p["k"])
    if kind == "double_corona_path":
        return double_corona_path(spec.base, p["k"])
    if kind == "corona_k1":
        return corona_k1(spec.base)
    if kind == "F_nk":
        return family_F_nk(p["n"], p["k"])
    if kind == "F_k":
        return family_F_k(p["k"])
    if kind == "H_nk":
        return family_H_nk(p["n"], p["k"])
    if kind == "G_pk":
        return family_G_pk(p["p"], p["k"])
    if kind == "middle_levels":
        return middle_levels(p["n"], p["a"], p["b"])
    if kind == "random_regular":
        return random_regular(p["n"], p["k"], spec.seed)
    raise FamilyError(f"unknown family {kind!r}")
