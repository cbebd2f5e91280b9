import math

import numpy as np
import pytest

from ftbfs.builders import build_ftbfs
from ftbfs.cover import (
    SAMPLE_COVER,
    SetCoverInstance,
    brute_set_cover,
    build_approx,
    coverage_sets,
    distance_tables,
    greedy_set_cover,
    harmonic,
    parse_setcover,
    read_setcover,
    save_setcover,
    write_setcover,
)
from ftbfs.errors import InvalidParameterError, SetCoverParseError, UncoverableInstanceError
from ftbfs.generators import gen_bad_example
from ftbfs.graph import FaultModel, FaultScenario
from ftbfs.oracle import brute_min_ft, necessary_edges, verify_ft

from helpers import seeded_graphs


def test_harmonic():
    assert harmonic(0) == 0
    assert harmonic(1) == 1
    assert harmonic(4) == pytest.approx(25 / 12)


def test_greedy_on_four_element_instance():
    assert greedy_set_cover(SAMPLE_COVER) == [0, 2]
    assert brute_set_cover(SAMPLE_COVER) == [0, 2]


def test_single_set_covers_everything():
    inst = SetCoverInstance(universe=[0, 1, 2], sets=[frozenset({0}), frozenset({0, 1, 2})])
    assert greedy_set_cover(inst) == [1]
    assert brute_set_cover(inst) == [1]


def test_empty_universe_needs_no_sets():
    inst = SetCoverInstance(universe=[], sets=[frozenset()])
    assert greedy_set_cover(inst) == []
    assert brute_set_cover(inst) == []


def test_ties_go_to_lowest_index():
    inst = SetCoverInstance(universe=[0, 1], sets=[frozenset({1}), frozenset({0}), frozenset({0, 1})])
    assert greedy_set_cover(inst) == [2]
    inst = SetCoverInstance(universe=[0, 1], sets=[frozenset({1}), frozenset({0})])
    assert greedy_set_cover(inst) == [0, 1]


def test_weights_steer_greedy():
    inst = SetCoverInstance(
        universe=["a", "b", "c"],
        sets=[frozenset({"a", "b"}), frozenset({"c"}), frozenset({"a"})],
        names=["u", "w", "z"],
        weights=[1, 1, 5],
    )
    assert greedy_set_cover(inst) == ["w", "u"]
    assert inst.is_cover(["w", "u"])
    assert not inst.is_cover(["w", "z", "q"])


def test_uncoverable_instance_is_rejected():
    with pytest.raises(UncoverableInstanceError):
        SetCoverInstance(universe=[0, 1, 2], sets=[frozenset({0, 1})])
    with pytest.raises(UncoverableInstanceError):
        parse_setcover("3 2\n0 1\n1\n")


def test_malformed_instances_are_rejected():
    with pytest.raises(InvalidParameterError):
        SetCoverInstance(universe=[0], sets=[frozenset({0, 7})])
    with pytest.raises(InvalidParameterError):
        SetCoverInstance(universe=[0], sets=[frozenset({0})], weights=[0])


def test_parse_and_write():
    text = "# two sets\n3 2\n0 1\n2\n"
    inst = parse_setcover(text)
    assert inst.universe == [0, 1, 2]
    assert inst.sets == [frozenset({0, 1}), frozenset({2})]
    assert write_setcover(inst) == "3 2\n0 1\n2\n"


def test_parse_blank_line_is_empty_set():
    inst = parse_setcover("2 3\n0 1\n\n1\n\n")
    assert inst.sets == [frozenset({0, 1}), frozenset(), frozenset({1})]


@pytest.mark.parametrize(
    "text",
    ["", "2\n0 1\n", "2 1\n0 5\n", "2 2\n0 1\n", "2 1\nzero\n", "2 1\n١\n", "2 1\n0_1\n"],
)
def test_parse_errors(text):
    with pytest.raises(SetCoverParseError):
        parse_setcover(text)


def test_file_roundtrip(tmp_path):
    path = tmp_path / "fig.sc"
    save_setcover(SAMPLE_COVER, path)
    assert read_setcover(path) == SAMPLE_COVER
    with pytest.raises(SetCoverParseError):
        read_setcover(tmp_path / "missing.sc")


def test_greedy_within_harmonic_factor_of_optimum():
    rng = np.random.default_rng(11)
    for _ in range(100):
        n_elements = int(rng.integers(1, 13))
        n_sets = int(rng.integers(1, 11))
        sets = [
            frozenset(int(x) for x in np.flatnonzero(rng.random(n_elements) < 0.4))
            for _ in range(n_sets)
        ]
        # Make the instance coverable.
        sets.append(frozenset(int(x) for x in rng.permutation(n_elements)[: n_elements // 2 + 1]))
        covered = frozenset().union(*sets)
        if len(covered) < n_elements:
            sets.append(frozenset(range(n_elements)) - covered)
        inst = SetCoverInstance(universe=list(range(n_elements)), sets=sets)
        greedy = greedy_set_cover(inst)
        best = brute_set_cover(inst)
        assert inst.is_cover(greedy) and inst.is_cover(best)
        assert len(greedy) <= harmonic(n_elements) * len(best) + 1e-9


def test_coverage_sets_on_triangle(k3):
    tables = distance_tables(k3, [0])
    inst = coverage_sets(k3, [0], 2, tables)
    assert inst.names == [0, 1]
    # Failing edge {0,2} leaves only the route through 1.
    pair = (0, FaultScenario.edge(2))
    assert pair in inst.sets[1]
    assert pair not in inst.sets[0]
    # Without a fault 0 is the only predecessor of 2.
    assert (0, FaultScenario.no_fault()) in inst.sets[0]
    assert (0, FaultScenario.no_fault()) not in inst.sets[1]


def test_coverage_skips_source_vertex_and_failed_endpoints(k3):
    tables = distance_tables(k3, [0], FaultModel.VERTEX)
    assert coverage_sets(k3, [0], 0, tables).n_elements == 0
    inst = coverage_sets(k3, [0], 2, tables)
    faults = {fault for _, fault in inst.universe}
    assert FaultScenario.vertex(0) not in faults
    assert FaultScenario.vertex(2) not in faults
    assert FaultScenario.vertex(1) in faults


def test_distance_tables_share_non_critical_faults(c4):
    tables = distance_tables(c4, [0])
    assert tables.is_critical(0, FaultScenario.edge(0))
    assert not tables.is_critical(0, FaultScenario.edge(2))
    assert tables.dist(0, FaultScenario.edge(2)) == tables.dist(0, FaultScenario.no_fault())
    assert tables.dist(0, FaultScenario.edge(0)) == [0, 3, 2, 1]


def test_compression_keeps_greedy_choices():
    for g in seeded_graphs(15, 5, 10, [0.3, 0.6], seed=21):
        for model in FaultModel:
            sources = [0, g.n - 1]
            tables = distance_tables(g, sources, model)
            for v in range(g.n):
                plain = coverage_sets(g, sources, v, tables)
                merged = coverage_sets(g, sources, v, tables, compress=True)
                assert merged.total_weight == plain.n_elements
                assert merged.n_elements <= plain.n_elements
                assert greedy_set_cover(merged) == greedy_set_cover(plain)


def test_approx_on_tree_is_the_tree(tree7):
    ft = build_approx(tree7, [0])
    assert ft.edge_ids == frozenset(range(tree7.m))
    assert ft.tree_edges == ft.edge_ids
    assert ft.new_edges == {}


@pytest.mark.parametrize("model", list(FaultModel))
def test_approx_structures_verify(model):
    for g in seeded_graphs(25, 4, 12, [0.3, 0.5], seed=23):
        for sources in ([0], [0, g.n - 1]):
            ft = build_approx(g, sources, model)
            assert verify_ft(g, sources, ft.edge_ids, model).ok
            assert necessary_edges(g, sources, model) <= ft.edge_ids
            assert ft.tree_edges <= ft.edge_ids


def test_approx_ratio_against_exact_minimum():
    checked = 0
    for g in seeded_graphs(30, 4, 8, [0.4, 0.6], seed=25):
        if g.m - len(necessary_edges(g, [0])) > 12:
            continue
        best = brute_min_ft(g, [0])
        ft = build_approx(g, [0])
        universe_max = g.m + 1
        assert ft.size <= 2 * (math.log(universe_max) + 1) * best.size
        checked += 1
    assert checked > 0


@pytest.mark.parametrize("model", list(FaultModel))
def test_each_vertex_cover_is_within_harmonic_factor(model):
    for g in seeded_graphs(20, 5, 10, [0.3, 0.6], seed=29):
        sources = [0, g.n - 1]
        tables = distance_tables(g, sources, model)
        for v in range(g.n):
            inst = coverage_sets(g, sources, v, tables)
            if inst.n_sets > 20:
                continue
            greedy = greedy_set_cover(inst)
            best = brute_set_cover(inst)
            assert inst.is_cover(greedy)
            assert len(greedy) <= harmonic(inst.n_elements) * len(best) + 1e-9


@pytest.mark.parametrize("model", list(FaultModel))
def test_approx_keeps_one_edge_per_chosen_set(model):
    for g in seeded_graphs(15, 5, 12, [0.3, 0.6], seed=33):
        sources = [0, g.n // 2]
        tables = distance_tables(g, sources, model)
        picks = [
            greedy_set_cover(coverage_sets(g, sources, v, tables, compress=True))
            for v in range(g.n)
        ]
        ft = build_approx(g, sources, model)
        assert ft.size <= sum(len(chosen) for chosen in picks)
        assert ft.edge_ids == {g.edge_index(u, v) for v, chosen in enumerate(picks) for u in chosen}


def test_approx_is_deterministic_across_workers():
    g = seeded_graphs(1, 14, 14, [0.4], seed=27)[0]
    assert build_approx(g, [0, 3], workers=1) == build_approx(g, [0, 3], workers=3)


def test_approx_beats_exact_builder_on_bad_example():
    inst = gen_bad_example(3)
    g = inst.graph
    exact = build_ftbfs(g, inst.sources[0])
    approx = build_approx(g, inst.sources)
    assert verify_ft(g, inst.sources, approx.edge_ids).ok
    assert approx.size < exact.size


def test_approx_rejects_bad_sources(c4):
    with pytest.raises(InvalidParameterError):
        build_approx(c4, [])
    with pytest.raises(InvalidParameterError):
        build_approx(c4, [0, 0])
    with pytest.raises(InvalidParameterError):
        build_approx(c4, [4])
