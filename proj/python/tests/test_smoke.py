import json

import pytest

import arcgraph as ag


def test_tournaments():
    c = ag.generate("cyclic_triangle", 3)
    t = ag.generate("tt", 3)
    assert ag.chromatic_number(c) == 3
    assert ag.chromatic_number(ag.arc_graph(c)) == 3
    assert ag.chromatic_number(ag.arc_graph(t)) == 2


def test_arc_graph_labels_and_json():
    d = ag.arc_graph(ag.generate("tt", 3))
    assert d.vertex_count == 3
    assert d.arcs() == [(0, 2)]
    assert d.labels() == ["(0,1)", "(0,2)", "(1,2)"]
    assert ag.Digraph.from_json(d.to_json()) == d
    assert json.loads(d.to_json())["n"] == 3


def test_b_values(tmp_path):
    assert ag.b_value(3, 2) == 4
    assert ag.b_value(4, 2) == 24
    table = tmp_path / "b.json"
    assert ag.b_value(3, 3, table=str(table)) == 7
    assert json.loads(table.read_text())["entries"] == [{"n": 3, "k": 3, "b": 7}]


def test_lattices():
    assert len(ag.iterated_ideal_lattice(3, 2)) == 20
    assert ag.level_sizes(ag.iterated_ideal_lattice(3, 3))[8:13] == [7, 7, 6, 7, 7]
    assert [ag.dedekind(n) for n in range(5)] == [2, 3, 6, 20, 168]
    antichain, chains = ag.width(ag.iterated_ideal_lattice(4, 1))
    assert len(antichain) == len(chains) == 6


def test_adjoint():
    d = ag.delta_right(ag.Digraph(0))
    assert (d.vertex_count, d.arc_count) == (1, 0)
    d2 = ag.iterated_delta_right(ag.Digraph(0), 2)
    assert (d2.vertex_count, d2.arc_count) == (3, 1)
    core, vertices, retraction = ag.tight_core(ag.Digraph(1))
    assert core.vertex_count == 2 and len(retraction) == 3
    assert ag.check_adjunction(ag.generate("cyclic_triangle", 3), ag.generate("complete", 2))
    assert ag.core_equals_nondomination(ag.Poset.from_relation(3, [(0, 1)]))


def test_verification():
    r = ag.verify_theorem3(ag.generate("cycle", 5), 1)
    assert r["direct"] == r["formula"] == 3 and r["agreement"]
    assert ag.chi_via_formula(5, 2) == 4
    assert ag.max_tt(2, 2, 10) == 6
    assert ag.find_homomorphism(ag.generate("cycle", 6), ag.generate("complete", 2)) is not None
    assert ag.find_homomorphism(ag.generate("cycle", 5), ag.generate("complete", 2)) is None


def test_errors():
    with pytest.raises(ag.InvalidInput):
        ag.Digraph(2, [(0, 5)])
    with pytest.raises(ag.SizeBudgetExceeded):
        ag.dedekind(6, budget=100)
    with pytest.raises(ag.NotSymmetric):
        ag.verify_theorem3(ag.generate("tt", 3), 1)
    with pytest.raises(ag.Error):
        ag.chromatic_number(ag.Digraph(1, [(0, 0)]))
