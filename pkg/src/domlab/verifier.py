"""Mechanical re-checks of the total [1,2]-domination results.

Each ``verify_*`` function replays one statement over generated families or an
enumerated corpus and returns a :class:`Report`.  A report fails only when a
stated implication is violated.  Exploratory runs and conjecture hunts put
their observations in ``records`` and ``findings`` instead.
"""

from __future__ import annotations

import functools
import time
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from itertools import chain

from . import families as fam
from .enumeration import (
    enumerate_connected_graphs,
    enumerate_isolated_free_graphs,
    enumerate_trees,
)
from .graph import (
    Graph,
    GraphError,
    induced_subgraph,
    is_caterpillar,
    is_connected,
    is_cycle_graph,
    is_p4_free,
    is_path_graph,
    is_regular,
    iter_bits,
    leaves,
)
from .graph6 import emit_graph6
from .proof_lab import (
    check_claims_2n3,
    check_claims_4n5,
    equality_conditions_2n3,
    recognize_double_corona,
)
from .solvers import (
    INFINITE,
    TheoremViolation,
    Kind,
    is_12_set,
    is_total_12_set,
    min_dominating_with_private,
    minimum_sets,
    solve,
)

__all__ = [
    "Failure",
    "Report",
    "format_value",
    "lemma_2_1_cycle_value",
    "connected_sweep",
    "verify_lemma_2_1",
    "verify_bound_4n5",
    "verify_bound_2n3",
    "verify_extremal_4n5",
    "verify_claims",
    "verify_props_2_4_6_7",
    "verify_thm_3_1",
    "verify_thm_4_1",
    "verify_p4_free",
    "verify_thm_4_2",
    "hunt_conjectures",
    "explore_middle_levels",
    "has_degree_window_subgraph",
    "random_regular_corpus",
]


def format_value(v: int | float) -> int | str:
    """JSON-friendly parameter value: ``'infinity'`` for +inf."""
    return "infinity" if v == INFINITE else int(v)


@dataclass(frozen=True)
class Failure:
    graph6: str
    expected: object
    got: object

    def to_json(self) -> dict:
        return {"graph6": self.graph6, "expected": self.expected, "got": self.got}


@dataclass
class Report:
    claim_id: str
    instances_checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    findings: list[dict] = field(default_factory=list)
    records: list[dict] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "PASS" if not self.failures else "FAIL"

    def fail(self, g: Graph, expected: object, got: object) -> None:
        self.failures.append(Failure(emit_graph6(g), expected, got))

    def to_json(self) -> dict:
        out = {
            "claim_id": self.claim_id,
            "checked": self.instances_checked,
            "failures": [f.to_json() for f in self.failures],
            "verdict": self.verdict,
            "elapsed": round(self.elapsed, 3),
        }
        if self.findings:
            out["findings"] = self.findings
        if self.records:
            out["records"] = self.records
        return out


class _Timer:
    def __init__(self, report: Report) -> None:
        self.report = report

    def __enter__(self) -> Report:
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc) -> None:
        self.report.elapsed = time.perf_counter() - self.start


@functools.lru_cache(maxsize=200_000)
def _value(g: Graph, kind: Kind) -> int | float:
    return solve(g, kind).value


def connected_sweep(n_min: int, n_max: int, filter: Callable[[Graph], bool] | None = None) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_connected_graphs(n, filter)


def lemma_2_1_cycle_value(n: int) -> int:
    """Closed form shared by paths and cycles of order ``n >= 3``."""
    if n % 2:
        return (n + 1) // 2
    if n % 4 == 0:
        return n // 2
    return n // 2 + 1


def _min_degree(g: Graph) -> int:
    return min(g.degrees()) if g.n else 0


# -- small closed-form families ------------------------------------------------


def verify_lemma_2_1(
    n_max: int = 16,
    complete_max: int | None = None,
    bipartite_max: int | None = None,
    corona_max: int = 4,
) -> Report:
    """Complete, complete bipartite, path, cycle and double 2-corona values.

    ``complete_max`` and ``bipartite_max`` default to ``n_max``.
    """
    complete_max = n_max if complete_max is None else complete_max
    bipartite_max = n_max if bipartite_max is None else bipartite_max
    cases: list[tuple[Graph, int]] = []
    cases += [(fam.complete(n), 2) for n in range(3, complete_max + 1)]
    cases += [
        (fam.complete_bipartite(a, b), 2)
        for a in range(1, bipartite_max + 1)
        for b in range(a, bipartite_max + 1)
    ]
    for n in range(3, n_max + 1):
        cases.append((fam.path(n), lemma_2_1_cycle_value(n)))
        cases.append((fam.cycle(n), lemma_2_1_cycle_value(n)))
    for h in connected_sweep(2, corona_max):
        cases.append((fam.double_corona_path(h, 2), 4 * h.n))
    with _Timer(Report("L2.1")) as rep:
        for g, expected in cases:
            got = _value(g, Kind.TOTAL12)
            rep.instances_checked += 1
            if got != expected:
                rep.fail(g, expected, format_value(got))
    return rep


# -- upper bounds ----------------------------------------------------------------


def _double_corona_positives(orders: Iterable[int] = (2, 3)) -> list[Graph]:
    return [fam.double_corona_path(h, 2) for m in orders for h in enumerate_connected_graphs(m)]


def verify_bound_4n5(corpus: Iterable[Graph] | None = None, n_max: int = 8) -> Report:
    """``5 gamma_t12 <= 4n`` with equality exactly on double 2-coronas.

    The default corpus is every connected graph of order 5..``n_max`` plus
    ``H o 2P_2`` for connected ``H`` of order 2 and 3.
    """
    if corpus is None:
        corpus = chain(connected_sweep(5, n_max), _double_corona_positives())
    with _Timer(Report("T2.3-bound")) as rep:
        tight = 0
        for g in corpus:
            if g.n < 5 or not is_connected(g):
                continue
            v = _value(g, Kind.TOTAL12)
            if v == INFINITE:
                continue
            rep.instances_checked += 1
            if 5 * v > 4 * g.n:
                rep.fail(g, f"gamma_t12 <= {4 * g.n / 5:g}", format_value(v))
                continue
            equal = 5 * v == 4 * g.n
            recognized = recognize_double_corona(g) is not None
            tight += equal
            if equal != recognized:
                rep.fail(g, f"equality={recognized} (double corona {'found' if recognized else 'absent'})", f"equality={equal}")
        rep.records.append({"equality_instances": tight})
    return rep


def verify_extremal_4n5(n_max: int = 8) -> Report:
    """Equality clause of the 4n/5 bound on a mixed corpus.

    Besides the sweep and the constructed positives, order-10 and order-15
    near misses (paths, cycles, corona variants) check that the recognizer
    does not over-accept.
    """
    near_misses = [fam.path(10), fam.cycle(10), fam.path(15), fam.cycle(15)]
    near_misses += [fam.corona_path(fam.path(5), 1), fam.corona_path(fam.cycle(5), 2)]
    near_misses += [fam.corona_path(h, 4) for h in enumerate_connected_graphs(2)]
    corpus = chain(connected_sweep(5, n_max), _double_corona_positives(), near_misses)
    rep = verify_bound_4n5(corpus, n_max)
    rep.claim_id = "T2.3-extremal"
    return rep


def verify_bound_2n3(corpus: Iterable[Graph] | None = None, n_max: int = 8) -> Report:
    """``3 gamma_t12 <= 2n`` for connected graphs of minimum degree >= 2.

    Equality instances get their forced conditions recorded (for the lex-first
    witness) without any converse being asserted.  The default corpus is the
    minimum-degree-2 part of the connected sweep of orders 3..``n_max`` plus
    ``F_4`` and ``F_5``.
    """
    if corpus is None:
        corpus = chain(
            connected_sweep(3, n_max, lambda g: _min_degree(g) >= 2),
            [fam.family_F_k(4), fam.family_F_k(5)],
        )
    with _Timer(Report("T2.5-bound")) as rep:
        for g in corpus:
            if g.n < 3 or not is_connected(g) or _min_degree(g) < 2:
                continue
            res = solve(g, Kind.TOTAL12)
            if not res.finite:
                continue
            rep.instances_checked += 1
            v = res.value
            if 3 * v > 2 * g.n:
                rep.fail(g, f"gamma_t12 <= {2 * g.n / 3:g}", format_value(v))
            elif 3 * v == 2 * g.n:
                conds = equality_conditions_2n3(g, res.witness.bits)
                rep.records.append({"graph6": emit_graph6(g), "gamma_t12": int(v), "conditions": conds})
    return rep


def verify_claims(bound: str = "4n5", n_max: int = 7) -> Report:
    """Claim inequalities on every minimum total [1,2]-set, connected ``5 <= n <= n_max``.

    ``bound`` is ``'4n5'`` or ``'2n3'``; the latter restricts the sweep to
    minimum degree 2 and orders from 3.
    """
    if bound == "4n5":
        claim_id, check, corpus = "T2.3-claims", check_claims_4n5, connected_sweep(5, n_max)
    elif bound == "2n3":
        claim_id, check = "T2.5-claims", check_claims_2n3
        corpus = connected_sweep(3, n_max, lambda g: _min_degree(g) >= 2)
    else:
        raise ValueError(f"unknown bound {bound!r}; use '4n5' or '2n3'")
    with _Timer(Report(claim_id)) as rep:
        sets = 0
        for g in corpus:
            rep.instances_checked += 1
            for s in minimum_sets(g, Kind.TOTAL12):
                sets += 1
                res = check(g, s)
                if not res.ok:
                    rep.fail(g, "all claim inequalities", {"set": list(iter_bits(s)), "failed": res.failed()})
        rep.records.append({"minimum_sets_checked": sets})
    return rep


# -- constructions ---------------------------------------------------------------


def _admissible(builder: Callable[[int, int], Graph], n: int, k: int) -> Graph | None:
    try:
        return builder(n, k)
    except fam.FamilyError:
        return None


def verify_props_2_4_6_7(n_max: int = 16, fk_values: Iterable[int] = (4, 5)) -> Report:
    """Prescribed values of ``F_{n,k}``, ``F_k`` and ``H_{n,k}``.

    Every admissible ``(n, k)`` with ``n <= n_max`` is built; ``F_k`` must
    reach ``2k`` and ``H_{n,k}`` must also keep minimum degree 2.
    """
    cases: list[tuple[str, Graph, int]] = []
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            g = _admissible(fam.family_F_nk, n, k)
            if g is not None:
                cases.append((f"F_{{{n},{k}}}", g, k))
    cases += [(f"F_{k}", fam.family_F_k(k), 2 * k) for k in fk_values]
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            g = _admissible(fam.family_H_nk, n, k)
            if g is not None:
                cases.append((f"H_{{{n},{k}}}", g, k))
    with _Timer(Report("props")) as rep:
        for name, g, k in cases:
            rep.instances_checked += 1
            got = _value(g, Kind.TOTAL12)
            rep.records.append({"instance": name, "n": g.n, "expected": k, "gamma_t12": format_value(got)})
            if got != k:
                rep.fail(g, {name: k}, format_value(got))
            if name.startswith("H") and _min_degree(g) < 2:
                rep.fail(g, {name: "min degree >= 2"}, _min_degree(g))
    return rep


# -- graphs without total [1,2]-sets ---------------------------------------------


def verify_thm_3_1(tree_max: int = 10, graph_max: int = 8, p: int = 5, k: int = 3) -> Report:
    """The three sufficient conditions for ``gamma_t12 = +inf`` (one direction only).

    Caterpillars meeting the leaf-count hypothesis are recorded, not asserted.
    ``G_{p,k}`` is checked to have no total [1,2]-set at all.
    """
    with _Timer(Report("T3.1")) as rep:
        caterpillars = {"finite": 0, "infinite": 0}
        triggered = [0, 0, 0]

        def check(g: Graph, tree: bool) -> None:
            n = g.n
            g12 = _value(g, Kind.ONETWO)
            t12 = None

            def total() -> int | float:
                nonlocal t12
                if t12 is None:
                    t12 = _value(g, Kind.TOTAL12)
                return t12

            rep.instances_checked += 1
            if n >= 3 and 5 * g12 > 4 * n:
                triggered[0] += 1
                if total() != INFINITE:
                    rep.fail(g, "infinity (clause 1)", format_value(total()))
            if n >= 5 and _min_degree(g) >= 2 and 3 * g12 > 2 * n:
                triggered[1] += 1
                if total() != INFINITE:
                    rep.fail(g, "infinity (clause 2)", format_value(total()))
            if tree:
                nleaves = len(leaves(g))
                if g12 == n - nleaves:
                    if is_caterpillar(g):
                        caterpillars["infinite" if total() == INFINITE else "finite"] += 1
                    else:
                        triggered[2] += 1
                        if total() != INFINITE:
                            rep.fail(g, "infinity (clause 3)", format_value(total()))

        for n in range(1, tree_max + 1):
            for t in enumerate_trees(n):
                check(t, True)
        for g in connected_sweep(1, graph_max):
            check(g, False)
        gpk = fam.family_G_pk(p, k)
        rep.instances_checked += 1
        v = _value(gpk, Kind.TOTAL12)
        if v != INFINITE:
            rep.fail(gpk, "infinity", format_value(v))
        g12 = _value(gpk, Kind.ONETWO)
        rep.records.append(
            {
                "clause_hits": {"1": triggered[0], "2": triggered[1], "3": triggered[2]},
                "caterpillars_meeting_hypothesis": caterpillars,
                f"G_{{{p},{k}}}": {
                    "gamma_12": format_value(g12),
                    "gamma_t12": format_value(v),
                    "clause_1_applies": 5 * g12 > 4 * gpk.n,
                },
            }
        )
    return rep


# -- coronas and cographs --------------------------------------------------------


def verify_thm_4_1(h_min: int = 2, h_max: int = 6) -> Report:
    """On ``H o K_1``: ``gamma_t12 == gamma_12`` iff ``H`` is a path or a cycle."""
    with _Timer(Report("T4.1")) as rep:
        for h in connected_sweep(h_min, h_max):
            g = fam.corona_k1(h)
            t12 = _value(g, Kind.TOTAL12)
            g12 = _value(g, Kind.ONETWO)
            rep.instances_checked += 1
            shape = is_path_graph(h) or is_cycle_graph(h)
            if (t12 == g12) != shape:
                rep.fail(g, f"equality={shape} (H {'is' if shape else 'is not'} a path or cycle)", f"gamma_t12={format_value(t12)}, gamma_12={format_value(g12)}")
    return rep


def verify_p4_free(n_min: int = 4, n_max: int = 8) -> Report:
    """Connected cographs: ``gamma == gamma_12``, private-neighbour minimum
    dominating sets are [1,2]-sets, and the two-case value of ``gamma_t12``.
    """
    with _Timer(Report("P4-free")) as rep:
        for g in connected_sweep(n_min, n_max, is_p4_free):
            rep.instances_checked += 1
            gamma = _value(g, Kind.DOM)
            g12 = _value(g, Kind.ONETWO)
            t12 = _value(g, Kind.TOTAL12)
            if gamma != g12:
                rep.fail(g, f"gamma_12 = gamma = {gamma}", f"gamma_12={format_value(g12)}")
            d = min_dominating_with_private(g)
            if not is_12_set(g, d):
                rep.fail(g, "private-neighbour minimum dominating set is a [1,2]-set", d.sorted())
            expected = 2 if max(g.degrees()) == g.n - 1 else g12
            if t12 != expected:
                rep.fail(g, f"gamma_t12={format_value(expected)}", format_value(t12))
    return rep


def verify_thm_4_2(n_max: int = 8, n_min: int = 2) -> Report:
    """Every isolated-free graph has a minimum dominating set with external privates."""
    with _Timer(Report("T4.2")) as rep:
        for n in range(n_min, n_max + 1):
            for g in enumerate_isolated_free_graphs(n):
                rep.instances_checked += 1
                try:
                    d = min_dominating_with_private(g)
                except TheoremViolation as exc:
                    rep.fail(g, "minimum dominating set with external private neighbours", str(exc))
                    continue
                if len(d) != _value(g, Kind.DOM):
                    rep.fail(g, f"|D| = gamma = {_value(g, Kind.DOM)}", len(d))
    return rep


# -- conjecture hunting ----------------------------------------------------------


def has_degree_window_subgraph(g: Graph, lo: int = 3, hi: int = 4) -> int | None:
    """A nonempty vertex set whose induced degrees all lie in ``[lo, hi]``, or None.

    Plain include/exclude backtracking in vertex order, independent of the
    domination solvers.  Returns the first set found as a mask.
    """
    n = g.n
    adj = g.adj

    def feasible(inc: int, undecided: int) -> bool:
        for v in iter_bits(inc):
            have = (adj[v] & inc).bit_count()
            if have > hi or have + (adj[v] & undecided).bit_count() < lo:
                return False
        return True

    def rec(i: int, inc: int) -> int | None:
        undecided = ((1 << n) - 1) & ~((1 << i) - 1)
        if not feasible(inc, undecided):
            return None
        if i == n:
            return inc if inc else None
        bit = 1 << i
        # a vertex of too small a degree can never be kept
        if adj[i].bit_count() >= lo:
            found = rec(i + 1, inc | bit)
            if found is not None:
                return found
        return rec(i + 1, inc)

    return rec(0, 0)


def _hunt_one(which: int, g: Graph) -> dict:
    """Check one graph; returns a dict with ``status`` and details."""
    out: dict = {"graph6": emit_graph6(g), "n": g.n}
    degree = {1: 3, 2: 4, 3: 5}[which]
    if g.n == 0 or not is_regular(g, degree):
        out["status"] = "skipped"
        out["reason"] = f"not {degree}-regular"
        return out
    if which in (1, 2):
        res = solve(g, Kind.TOTAL12)
        out["gamma_t12"] = format_value(res.value)
        if not res.finite or res.value >= g.n:
            out["status"] = "finding"
            return out
        s = res.witness.bits
        rest = g.full_mask & ~s
        in_range = all(degree - 2 <= (g.adj[v] & rest).bit_count() <= degree - 1 for v in range(g.n))
        consistent = is_total_12_set(g, s) and rest != 0 and in_range
        if which == 1:
            # cubic: both sides of the partition induce degrees in [1, 2]
            h, _ = induced_subgraph(g, rest)
            consistent = consistent and all(1 <= d <= 2 for d in h.degrees())
        out["status"] = "ok" if consistent else "error"
        if not consistent:
            out["reason"] = "witness complement fails the partition check"
        return out
    g12 = _value(g, Kind.ONETWO)
    t = has_degree_window_subgraph(g, 3, 4)
    out["gamma_12"] = format_value(g12)
    out["window_subgraph"] = None if t is None else list(iter_bits(t))
    if (g12 < g.n) != (t is not None):
        out["status"] = "error"
        out["reason"] = "the two formulations disagree"
    elif t is None:
        out["status"] = "finding"
    else:
        out["status"] = "ok"
    return out


def hunt_conjectures(
    which: int,
    corpus: Iterable[Graph],
    mapper: Callable[[Callable, Iterable], Iterable] | None = None,
) -> Report:
    """Search a corpus for counterexamples to conjecture 1, 2 or 3.

    1: cubic graphs have ``gamma_t12 < n``; 2: the same for 4-regular graphs;
    3: every 5-regular graph has an induced subgraph with all degrees in
    ``[3, 4]``, cross-checked against ``gamma_12 < n``.  Counterexamples go to
    ``findings`` and do not fail the report; disagreement between two
    formulations of the same statement is an internal error and does.
    ``mapper`` may replace the builtin ``map`` (e.g. a process pool's).
    """
    if which not in (1, 2, 3):
        raise ValueError(f"unknown conjecture {which}; choose 1, 2 or 3")
    mapper = mapper or map
    with _Timer(Report(f"C{which}")) as rep:
        skipped = 0
        for item in mapper(functools.partial(_hunt_one, which), corpus):
            status = item["status"]
            if status == "skipped":
                skipped += 1
                continue
            rep.instances_checked += 1
            if status == "finding":
                rep.findings.append(item)
            elif status == "error":
                rep.failures.append(Failure(item["graph6"], "formulations agree", item.get("reason")))
        rep.records.append({"skipped": skipped, "findings": len(rep.findings)})
    return rep


def random_regular_corpus(n_values: Iterable[int], k: int, samples: int, seed: int) -> Iterator[Graph]:
    """``samples`` pairing-model graphs, cycling through ``n_values``; seeds derive from ``seed``."""
    ns = [n for n in n_values if (n * k) % 2 == 0 and k < n]
    if not ns:
        raise GraphError(f"no admissible order for {k}-regular sampling")
    for i in range(samples):
        yield fam.random_regular(ns[i % len(ns)], k, seed * 1_000_003 + i)


# -- middle levels ---------------------------------------------------------------

MIDDLE_LEVEL_INSTANCES = ((3, 1, 2), (4, 1, 3), (5, 1, 4), (5, 2, 3))


def explore_middle_levels(instances: Iterable[tuple[int, int, int]] = MIDDLE_LEVEL_INSTANCES) -> Report:
    """Record ``gamma_12`` and ``gamma_t12`` of small ``G(n; a, b)``; never fails."""
    with _Timer(Report("M5.1")) as rep:
        for n, a, b in instances:
            g = fam.middle_levels(n, a, b)
            rec: dict = {"instance": f"G({n};{a},{b})", "order": g.n}
            try:
                rec["gamma_12"] = format_value(_value(g, Kind.ONETWO))
                rec["gamma_t12"] = format_value(_value(g, Kind.TOTAL12))
                rec["gamma_12_equals_order"] = rec["gamma_12"] == g.n
            except GraphError as exc:
                rec["skipped"] = str(exc)
            rep.instances_checked += 1
            rep.records.append(rec)
    return rep
