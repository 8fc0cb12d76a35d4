import json
import random

import networkx as nx
import pytest

import oracles
from conftest import random_graph, to_nx
from domlab import families as fam
from domlab import verifier as ver
from domlab.graph import graph_from_edges
from domlab.solvers import Kind, solve


def test_report_schema():
    rep = ver.verify_lemma_2_1(n_max=6, corona_max=2)
    data = rep.to_json()
    assert set(data) == {"claim_id", "checked", "failures", "verdict", "elapsed"}
    assert data["verdict"] == "PASS" and data["claim_id"] == "L2.1"
    json.dumps(data)
    rep.fail(fam.path(3), 1, 2)
    assert rep.verdict == "FAIL"
    assert rep.to_json()["failures"] == [{"graph6": "Bg", "expected": 1, "got": 2}]


def test_cycle_formula_against_oracle():
    for n in range(3, 13):
        expected = ver.lemma_2_1_cycle_value(n)
        assert oracles.minimum(nx.path_graph(n), "gamma_t12")[0] == expected
        assert oracles.minimum(nx.cycle_graph(n), "gamma_t12")[0] == expected


@pytest.mark.parametrize(
    "g, value",
    [
        (fam.path(7), 4),
        (fam.cycle(10), 6),
        (fam.double_corona_path(fam.path(2), 2), 8),
        (fam.family_F_k(4), 8),
    ],
)
def test_worked_values(g, value):
    assert solve(g, Kind.TOTAL12).value == value


def test_format_value():
    assert ver.format_value(3) == 3
    assert ver.format_value(float("inf")) == "infinity"


def test_small_verifiers_pass():
    for rep in (
        ver.verify_bound_4n5(n_max=6),
        ver.verify_extremal_4n5(n_max=6),
        ver.verify_bound_2n3(n_max=6),
        ver.verify_claims("4n5", 6),
        ver.verify_claims("2n3", 6),
        ver.verify_thm_3_1(tree_max=7, graph_max=5),
        ver.verify_thm_4_1(h_max=4),
        ver.verify_p4_free(n_max=6),
        ver.verify_thm_4_2(n_max=5),
    ):
        assert rep.verdict == "PASS", rep.to_json()
        assert rep.instances_checked > 0


def test_equality_counted():
    rep = ver.verify_bound_4n5(n_max=5)
    # only the constructed positives reach equality: 1 of order 10, 2 of order 15
    assert rep.records == [{"equality_instances": 3}]


def test_bound_equality_after_relabelling():
    g = fam.double_corona_path(fam.path(2), 2).relabel(list(range(9, -1, -1)))
    assert ver.verify_bound_4n5([g]).verdict == "PASS"


def test_unknown_bound():
    with pytest.raises(ValueError):
        ver.verify_claims("3n4")


@pytest.mark.parametrize("name", ["P3", "K4", "C5"])
def test_thm_4_1_examples(name):
    h = {"P3": fam.path(3), "K4": fam.complete(4), "C5": fam.cycle(5)}[name]
    g = fam.corona_k1(h)
    equal = solve(g, Kind.TOTAL12).value == solve(g, Kind.ONETWO).value
    assert equal == (name != "K4")


def test_cograph_examples():
    k4, c4 = fam.complete(4), fam.cycle(4)
    k222 = nx.complete_multipartite_graph(2, 2, 2)
    from conftest import from_nx

    k222 = from_nx(k222)
    assert solve(k4, Kind.TOTAL12).value == 2
    assert solve(c4, Kind.TOTAL12).value == solve(c4, Kind.ONETWO).value == 2
    assert solve(k222, Kind.DOM).value == solve(k222, Kind.ONETWO).value == 2


def test_thm_4_2_star():
    from domlab.solvers import min_dominating_with_private

    star = fam.complete_bipartite(1, 5)
    assert min_dominating_with_private(star).sorted() == [0]
    c6 = fam.cycle(6)
    d = min_dominating_with_private(c6)
    assert len(d) == 2
    for v in d:
        assert oracles.private_by_definition(to_nx(c6), v, set(d))


def test_hunt_examples():
    k4 = fam.complete(4)
    pet = fam.petersen()
    rep = ver.hunt_conjectures(1, [k4, pet, fam.path(4)])
    assert rep.verdict == "PASS"
    assert rep.instances_checked == 2 and rep.records[0]["skipped"] == 1
    assert not rep.findings
    rep3 = ver.hunt_conjectures(3, [fam.complete(6)])
    assert rep3.instances_checked == 1 and not rep3.findings


def test_hunt_k5_c2():
    # in K5 any two vertices form a total [1,2]-set
    rep = ver.hunt_conjectures(2, [fam.complete(5)])
    assert rep.verdict == "PASS" and rep.instances_checked == 1
    assert not rep.findings


def test_hunt_rejects_unknown():
    with pytest.raises(ValueError):
        ver.hunt_conjectures(4, [])


def test_window_subgraph_against_oracle(rng):
    for _ in range(120):
        n = rng.randint(1, 9)
        g = random_graph(rng, n)
        t = ver.has_degree_window_subgraph(g, 3, 4)
        assert (t is not None) == oracles.window_subgraph_exists(to_nx(g), 3, 4)
        if t is not None:
            h = to_nx(g).subgraph([v for v in range(n) if t >> v & 1])
            assert all(3 <= d <= 4 for _, d in h.degree())


def test_window_equivalence_on_5_regular():
    # gamma_12 < n exactly when a nonempty set has all induced degrees in [3, 4]
    for i in range(15):
        g = fam.random_regular(random.Random(i).choice([6, 8, 10]), 5, i)
        found = ver.has_degree_window_subgraph(g) is not None
        assert found == (solve(g, Kind.ONETWO).value < g.n)


def test_random_corpus_reproducible():
    a = [g.adj for g in ver.random_regular_corpus([8, 10], 3, 6, 4)]
    b = [g.adj for g in ver.random_regular_corpus([8, 10], 3, 6, 4)]
    assert a == b
    assert [len(x) for x in a] == [8, 10] * 3


def test_middle_levels_records():
    rep = ver.explore_middle_levels()
    assert rep.verdict == "PASS"
    assert len(rep.records) == len(ver.MIDDLE_LEVEL_INSTANCES)
    first = rep.records[0]
    assert first["instance"] == "G(3;1,2)" and first["order"] == 6
    # G(3;1,2) is C6
    assert first["gamma_t12"] == 4
    second = ver.explore_middle_levels()
    assert [r for r in second.records] == rep.records


def test_reports_reproducible():
    a = ver.verify_thm_4_1(h_max=4).to_json()
    b = ver.verify_thm_4_1(h_max=4).to_json()
    a.pop("elapsed"), b.pop("elapsed")
    assert a == b


def test_props_records_values():
    rep = ver.verify_props_2_4_6_7(n_max=14)
    got = {r["instance"]: r["gamma_t12"] for r in rep.records}
    assert got["F_{14,10}"] == 10 and got["F_4"] == 8 and got["H_{14,8}"] == 8


def test_disconnected_graph_skipped_by_bound():
    g = graph_from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    assert ver.verify_bound_4n5([g]).instances_checked == 0
