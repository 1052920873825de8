"""Smoke tests for the Python bindings."""

from fractions import Fraction

import pytest

import graphcurv as gc


def test_build_and_inspect():
    g = gc.build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.num_vertices == 3
    assert g.num_edges == 3
    assert g.edges() == [(0, 1), (0, 2), (1, 2)]
    assert g.degree(0) == 2
    assert g.neighbors(1) == [0, 2]
    assert g.is_connected()
    assert g == gc.gen_complete(3)


def test_validation_errors_are_value_errors():
    with pytest.raises(ValueError):
        gc.build_graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        gc.build_graph(2, [(0, 3)])
    with pytest.raises(ValueError):
        gc.gen_cocktail_party(1)


def test_edge_list_round_trip():
    g = gc.gen_erdos_renyi_connected(9, 0.4, seed=5)
    assert gc.read_edge_list(gc.write_edge_list(g)) == g
    assert gc.gen_erdos_renyi_connected(9, 0.4, seed=5) == g


def test_exact_scalars():
    assert gc.as_fraction(gc.average_distance(gc.gen_cycle(5))) == Fraction(6, 5)
    assert gc.as_fraction(gc.average_degree(gc.gen_path(3))) == Fraction(4, 3)
    assert gc.ollivier_curvature(gc.gen_complete(4), 0, 1) == "4/1"
    assert gc.curvature_oracle(gc.gen_cycle(5), 0, 1) == "1/1"
    assert gc.curvature_oracle(gc.gen_gosset(), 0, 1) is None  # budget refusal


def test_betweenness():
    rows = gc.edge_betweenness(gc.gen_complete(3))
    assert rows == [(0, 1, "2/9"), (0, 2, "2/9"), (1, 2, "2/9")]


def test_analyze_equality_case():
    report = gc.analyze(gc.gen_hypercube(3))
    assert report["slack"] == "0/1"
    assert report["equality"] is True
    assert report["sharp"] is True
    assert report["reflective"] is True
    assert report["avg_curvature_weighted"] == "2/1"
    assert len(report["edges"]) == 12


def test_analyze_strict_case():
    report = gc.analyze(gc.gen_cycle(5))
    assert report["slack"] == "4/5"
    assert report["equality"] is False
    assert report["reflective"] is False
    slack = gc.as_fraction(report["slack"])
    assert slack > 0


def test_product_and_reflectivity():
    prism = gc.cartesian_product(gc.gen_complete(3), gc.gen_complete(2))
    assert prism.num_vertices == 6
    assert gc.is_reflective(prism)
    assert gc.check_sharpness(prism)
    assert not gc.is_reflective(gc.gen_cycle(5))


def test_separation_sets():
    side_x, side_y, middle = gc.separation_sets(gc.gen_cycle(5), 0, 1)
    assert side_x == [0, 4]
    assert side_y == [1, 2]
    assert middle == [3]


def test_fuzz_small_campaign():
    report = gc.fuzz_inequality(count=10, seed=3, n_min=4, n_max=10)
    assert report["count"] == 10
    assert report["violations"] == 0
    assert gc.as_fraction(report["min_slack"]) >= 0
