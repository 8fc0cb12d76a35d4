"""Acceptance criteria 1-12 at their stated tolerances and time limits.

Every test stores its outcome in ``conftest.ACCEPTANCE_RESULTS``; the
terminal summary then prints one line per criterion.
"""

import random
import time

import networkx as nx
import pytest

from conftest import ACCEPTANCE_RESULTS, random_graph, to_nx
from domlab import families as fam
from domlab import verifier as ver
from domlab.enumeration import enumerate_connected_graphs, enumerate_graphs
from domlab.graph import is_connected, is_regular
from domlab.graph6 import emit_graph6, parse_graph6
from domlab.proof_lab import recognize_double_corona
from domlab.solvers import INFINITE, Kind, oracle_minimum, solve

pytestmark = pytest.mark.slow


def record(number, ok, detail):
    ACCEPTANCE_RESULTS[number] = (ok, detail)


class Clock:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start

    def detail(self, text):
        return f"{text} ({self.elapsed:.1f}s, limit {self.limit}s)"


def test_criterion_01_lemma_table():
    with Clock(60) as clk:
        rep = ver.verify_lemma_2_1(n_max=16, complete_max=10, bipartite_max=6, corona_max=1)
    # 8 complete + 21 bipartite + 14 paths + 14 cycles
    ok = rep.verdict == "PASS" and rep.instances_checked == 57 and clk.elapsed < clk.limit
    record(1, ok, clk.detail(f"{rep.instances_checked} instances, {len(rep.failures)} mismatches"))
    assert rep.instances_checked == 57
    assert rep.failures == []
    assert clk.elapsed < clk.limit


def test_criterion_02_double_coronas():
    with Clock(300) as clk:
        cores = [h for m in (2, 3, 4) for h in enumerate_connected_graphs(m)]
        bad = []
        for h in cores:
            g = fam.double_corona_path(h, 2)
            v = solve(g, Kind.TOTAL12).value
            if v != 4 * h.n or 5 * v != 4 * g.n:
                bad.append((emit_graph6(h), v))
    ok = not bad and len(cores) == 9 and clk.elapsed < clk.limit
    record(2, ok, clk.detail(f"{len(cores)} cores of order 2-4, mismatches {bad}"))
    assert len(cores) == 9
    assert bad == []
    assert clk.elapsed < clk.limit


def test_criterion_03_bound_4n5():
    with Clock(600) as clk:
        rep = ver.verify_bound_4n5(n_max=8)
        recognized_in_sweep = sum(
            recognize_double_corona(g) is not None for n in range(5, 9) for g in enumerate_connected_graphs(n)
        )
        positives = [fam.double_corona_path(h, 2) for m in (2, 3) for h in enumerate_connected_graphs(m)]
        positive_orders = sorted({g.n for g in positives if recognize_double_corona(g) is not None})
    ok = rep.verdict == "PASS" and recognized_in_sweep == 0 and positive_orders == [10, 15] and clk.elapsed < clk.limit
    record(3, ok, clk.detail(f"{rep.instances_checked} finite instances, {len(rep.failures)} failures, {rep.records[0]}"))
    assert rep.failures == []
    assert recognized_in_sweep == 0
    assert positive_orders == [10, 15]
    assert rep.records[0]["equality_instances"] == len(positives)
    assert clk.elapsed < clk.limit


def test_criterion_04_bound_2n3():
    with Clock(600) as clk:
        rep = ver.verify_bound_2n3(n_max=8)
    ok = rep.verdict == "PASS" and clk.elapsed < clk.limit
    record(4, ok, clk.detail(f"{rep.instances_checked} finite instances, {len(rep.failures)} failures"))
    assert rep.failures == []
    assert clk.elapsed < clk.limit


PROPOSITION_VALUES = [
    ("F_{14,10}", lambda: fam.family_F_nk(14, 10), 10),
    ("F_{15,11}", lambda: fam.family_F_nk(15, 11), 11),
    ("F_{16,12}", lambda: fam.family_F_nk(16, 12), 12),
    ("F_4", lambda: fam.family_F_k(4), 8),
    ("F_5", lambda: fam.family_F_k(5), 10),
    ("H_{14,8}", lambda: fam.family_H_nk(14, 8), 8),
    ("H_{15,9}", lambda: fam.family_H_nk(15, 9), 9),
]


def test_criterion_05_constructions():
    with Clock(300) as clk:
        got = {name: solve(build(), Kind.TOTAL12).value for name, build, _ in PROPOSITION_VALUES}
    wrong = {name: got[name] for name, _, want in PROPOSITION_VALUES if got[name] != want}
    record(5, not wrong and clk.elapsed < clk.limit, clk.detail(f"{len(got)} values, mismatches {wrong}"))
    # H_{15,9} is the one value not reproduced; it has its own xfail below
    assert set(wrong) <= {"H_{15,9}"}
    for name, _, want in PROPOSITION_VALUES[:-1]:
        assert got[name] == want, name
    assert clk.elapsed < clk.limit


@pytest.mark.xfail(strict=True, reason="H_{15,9} has a total [1,2]-set of size 7")
def test_criterion_05_h_15_9_value():
    assert solve(fam.family_H_nk(15, 9), Kind.TOTAL12).value == 9


def test_h_15_9_smaller_witness_is_genuine():
    # the size-7 set, checked by counting neighbours in networkx
    g = fam.family_H_nk(15, 9)
    res = solve(g, Kind.TOTAL12)
    h = to_nx(g)
    s = set(res.witness)
    assert len(s) == 7
    assert all(1 <= sum(u in s for u in h[v]) <= 2 for v in h)
    assert min(d for _, d in h.degree()) >= 2 and nx.is_connected(h)


def test_criterion_06_claims():
    with Clock(600) as clk:
        a = ver.verify_claims("4n5", 7)
        b = ver.verify_claims("2n3", 7)
    ok = a.verdict == b.verdict == "PASS" and clk.elapsed < clk.limit
    sets = a.records[0]["minimum_sets_checked"] + b.records[0]["minimum_sets_checked"]
    record(6, ok, clk.detail(f"{sets} minimum sets, {len(a.failures) + len(b.failures)} failures"))
    assert a.failures == [] and b.failures == []
    assert clk.elapsed < clk.limit


def test_criterion_07_infinite_cases():
    with Clock(600) as clk:
        rep = ver.verify_thm_3_1(tree_max=10, graph_max=8)
        gpk = solve(fam.family_G_pk(5, 3), Kind.TOTAL12)
    hits = rep.records[0]["clause_hits"]
    ok = rep.verdict == "PASS" and gpk.value == INFINITE and clk.elapsed < clk.limit
    record(7, ok, clk.detail(f"{rep.instances_checked} instances, clause hits {hits}, G_(5,3) = {gpk.value}"))
    assert rep.failures == []
    assert gpk.value == INFINITE and gpk.witness is None
    assert clk.elapsed < clk.limit


def test_criterion_08_corona_equivalence():
    with Clock(600) as clk:
        rep = ver.verify_thm_4_1(h_min=2, h_max=6)
    ok = rep.verdict == "PASS" and clk.elapsed < clk.limit
    record(8, ok, clk.detail(f"{rep.instances_checked} coronas, {len(rep.failures)} failures"))
    # 1 + 2 + 6 + 21 + 112 connected graphs of order 2..6
    assert rep.instances_checked == 142
    assert rep.failures == []
    assert clk.elapsed < clk.limit


def test_criterion_09_cographs_and_privates():
    with Clock(900) as clk:
        a = ver.verify_p4_free(n_min=2, n_max=8)
        b = ver.verify_thm_4_2(n_min=2, n_max=8)
    ok = a.verdict == b.verdict == "PASS" and clk.elapsed < clk.limit
    record(9, ok, clk.detail(f"{a.instances_checked} cographs, {b.instances_checked} isolated-free graphs"))
    assert a.failures == [] and b.failures == []
    assert clk.elapsed < clk.limit


def test_criterion_10_oracle_agreement():
    rng = random.Random(10)
    corpus = [g for n in range(1, 8) for g in enumerate_graphs(n)]
    corpus += [random_graph(rng, rng.randint(1, 12)) for _ in range(500)]
    with Clock(900) as clk:
        bad = []
        for g in corpus:
            for kind in Kind:
                fast, slow = solve(g, kind), oracle_minimum(g, kind)
                if fast.value != slow.value or fast.witness != slow.witness:
                    bad.append((emit_graph6(g), kind.value))
    ok = not bad and clk.elapsed < clk.limit
    record(10, ok, clk.detail(f"{len(corpus)} graphs x 4 parameters, {len(bad)} disagreements"))
    assert bad == []
    assert clk.elapsed < clk.limit


def test_criterion_11_conjecture_smoke():
    with Clock(1200) as clk:
        cubic_small = [g for n in (4, 6, 8) for g in enumerate_graphs(n, lambda g: is_regular(g, 3))]
        c1_small = ver.hunt_conjectures(1, cubic_small)
        c1_random = ver.hunt_conjectures(1, ver.random_regular_corpus([10, 12, 14, 16], 3, 200, seed=11))
        c3 = ver.hunt_conjectures(3, ver.random_regular_corpus([8, 10, 12, 14], 5, 100, seed=13))
    reports = (c1_small, c1_random, c3)
    findings = sum(len(r.findings) for r in reports)
    ok = all(r.verdict == "PASS" for r in reports) and clk.elapsed < clk.limit
    counts = [r.instances_checked for r in reports]
    record(11, ok, clk.detail(f"checked {counts}, findings {findings}"))
    # 1 + 2 + 6 cubic graphs on 4, 6, 8 vertices (one of them 2K4)
    assert len(cubic_small) == 9
    assert counts[1:] == [200, 100]
    assert all(r.failures == [] for r in reports)
    assert clk.elapsed < clk.limit


def test_criterion_12_graph6_round_trip():
    rng = random.Random(12)
    with Clock(60) as clk:
        bad = 0
        for _ in range(1000):
            g = random_graph(rng, rng.randint(0, 30))
            text = emit_graph6(g)
            reference = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
            back = parse_graph6(text)
            if text != reference or emit_graph6(back) != text or back.adj != g.adj:
                bad += 1
    record(12, bad == 0 and clk.elapsed < clk.limit, clk.detail(f"1000 graphs, {bad} mismatches"))
    assert bad == 0
    assert clk.elapsed < clk.limit
