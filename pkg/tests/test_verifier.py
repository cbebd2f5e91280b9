from itertools import combinations

import pytest

from ftbfs.builders import build_ftbfs
from ftbfs.errors import InvalidParameterError, SearchSpaceTooLarge
from ftbfs.generators import gen_lb_single, gen_random
from ftbfs.graph import INF, FaultKind, FaultModel, Graph
from ftbfs.oracle import (
    brute_min_ft,
    necessary_edges,
    tight_requirements,
    verify_ft,
)

from helpers import literal_verify, seeded_graphs


def test_whole_graph_always_passes(c5):
    for model in FaultModel:
        assert verify_ft(c5, [0, 3], range(c5.m), model).ok


def test_tree_passes(tree7):
    assert verify_ft(tree7, [3], range(tree7.m)).ok


def test_c4_bfs_tree_fails_at_first_fault(c4):
    result = verify_ft(c4, [0], {0, 1, 3})
    assert not result.ok
    v = result.violation
    assert (v.source, v.fault.kind, v.fault.element, v.target) == (0, FaultKind.EDGE, 0, 1)
    assert v.dist_in_candidate == INF and v.dist_in_graph == 3
    assert v.render() == "VIOLATION s=0 fault=edge:0 v=1 cand=inf graph=3"


def test_no_fault_violation_is_reported_first(c4):
    v = verify_ft(c4, [0], {0, 1}).violation
    assert v.fault.kind is FaultKind.NONE and v.target == 3


def test_candidate_must_be_edges_of_graph(c4):
    with pytest.raises(InvalidParameterError):
        verify_ft(c4, [0], {0, 9})


def test_vertex_model_is_weaker_than_edge_model():
    # Triangle with a pendant: failing 1 disconnects 3 on both sides.
    g = Graph(4, [(0, 1), (1, 2), (0, 2), (1, 3)])
    assert verify_ft(g, [0], {0, 2, 3}, FaultModel.VERTEX).ok
    assert not verify_ft(g, [0], {0, 2, 3}, FaultModel.EDGE).ok


def test_removing_a_block_edge_breaks_lower_bound_graph():
    inst = gen_lb_single(2)
    g = inst.graph
    ft = build_ftbfs(g, inst.sources[0])
    x = inst.groups["X"][5]
    z = inst.groups["Z"][1]
    e = g.edge_index(x, z)
    result = verify_ft(g, inst.sources, ft.edge_ids - {e})
    assert not result.ok
    assert result.violation.fault.element == 1
    assert result.violation.target == x


@pytest.mark.parametrize("model", list(FaultModel))
def test_agrees_with_literal_definition(model):
    for i, g in enumerate(seeded_graphs(30, 4, 9, [0.3, 0.5, 0.7], seed=61)):
        ft = build_ftbfs(g, 0, model)
        candidates = [ft.edge_ids] + [ft.edge_ids - {e} for e in sorted(ft.edge_ids)[:4]]
        for cand in candidates:
            assert verify_ft(g, [0, 1], cand, model).ok == literal_verify(g, [0, 1], cand, model)


def test_verification_is_monotone_in_the_candidate():
    for g in seeded_graphs(10, 6, 12, [0.4], seed=63):
        ft = build_ftbfs(g, 0)
        extra = [e for e in range(g.m) if e not in ft.edge_ids][:3]
        assert verify_ft(g, [0], ft.edge_ids | set(extra)).ok


def test_parallel_verification_reports_the_same_violation():
    g = seeded_graphs(1, 20, 20, [0.3], seed=65)[0]
    tree = build_ftbfs(g, 0).tree_edges
    assert verify_ft(g, [0], tree, workers=1) == verify_ft(g, [0], tree, workers=4)


def test_necessary_edges_examples(k3, path3):
    assert necessary_edges(k3, [0]) == frozenset({0, 1, 2})
    assert necessary_edges(path3, [0]) == frozenset({0, 1})


def test_necessary_edges_match_single_deletions():
    for g in seeded_graphs(15, 4, 9, [0.3, 0.6], seed=67):
        for model in FaultModel:
            forced = necessary_edges(g, [0], model)
            for e in range(g.m):
                rest = set(range(g.m)) - {e}
                assert (e in forced) == (not verify_ft(g, [0], rest, model).ok)


def test_requirements_characterize_verification():
    for g in seeded_graphs(10, 5, 8, [0.4], seed=69):
        ft = build_ftbfs(g, 0)
        cand = ft.edge_ids - {max(ft.edge_ids)}
        meets_all = all(req.edges & cand for req in tight_requirements(g, [0]))
        assert meets_all == verify_ft(g, [0], cand).ok


def test_brute_force_minimum_on_small_graphs(c4, k3):
    assert brute_min_ft(c4, [0]).size == 4
    assert brute_min_ft(k3, [0]).size == 3


def test_brute_force_sandwich():
    for g in seeded_graphs(20, 4, 8, [0.3, 0.4], seed=71):
        forced = necessary_edges(g, [0])
        if g.m - len(forced) > 14:
            continue
        best = brute_min_ft(g, [0])
        assert forced <= best.edge_ids
        assert verify_ft(g, [0], best.edge_ids).ok
        assert best.size <= build_ftbfs(g, 0).size


def test_brute_force_is_exhaustively_minimum():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2)])
    best = brute_min_ft(g, [0], forced=frozenset(), free=range(g.m))
    for k in range(best.size):
        for combo in combinations(range(g.m), k):
            assert not verify_ft(g, [0], combo).ok


def test_brute_force_limit():
    g = gen_random(12, 0.9, seed=1)
    with pytest.raises(SearchSpaceTooLarge) as info:
        brute_min_ft(g, [0], free_limit=3)
    assert info.value.limit == 3


def test_brute_force_rejects_infeasible_partition(c4):
    with pytest.raises(InvalidParameterError):
        brute_min_ft(c4, [0], forced=frozenset({0}), free=[1])
