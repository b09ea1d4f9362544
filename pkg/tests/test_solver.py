from __future__ import annotations

import random

import pytest

from cvd.graph import Graph
from cvd.oracle import oracle_min
from cvd.solver import select_case, solve_decision, solve_min
from helpers import build, complete_graph, cycle_graph, path_graph, random_graph


def is_solution(g: Graph, deleted: frozenset[int]) -> bool:
    return g.delete_vertices(deleted).is_cluster_graph()


# --- case selection ---------------------------------------------------------

def test_case_one_on_single_conflict_edge():
    paw = build(4, [(1, 2), (1, 3), (2, 3), (3, 4)])
    assert select_case(paw, 1) == (1, None)


def test_case_one_on_cherries():
    lone = build(4, [(1, 2), (2, 3), (2, 4)])
    assert select_case(lone, 1) == (1, None)
    twin = build(7, [(1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 6), (3, 7)])
    assert select_case(twin, 1) == (1, None)


def test_case_two_on_star_centre():
    star = build(4, [(1, 2), (1, 3), (1, 4)])
    assert select_case(star, 1) == (2, (2, 3))


def test_case_three_on_k23():
    g = build(5, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5)])
    assert select_case(g, 1) == (3, None)


# --- decision solving -------------------------------------------------------

def test_cluster_graph_needs_nothing():
    g = build(6, [(1, 2), (1, 3), (2, 3), (4, 5)])
    out = solve_decision(g, 0)
    assert out.feasible
    assert out.modulator == frozenset()
    assert out.stats.nodes == 1
    assert out.stats.leaves == 1
    assert out.stats.max_depth == 0


def test_empty_graph():
    out = solve_decision(Graph.from_edges([], []), 0)
    assert out.feasible and out.modulator == frozenset()


def test_p3_needs_one():
    g = path_graph(3)
    assert not solve_decision(g, 0).feasible
    out = solve_decision(g, 1)
    assert out.feasible and is_solution(g, out.modulator)


def test_five_cycle_needs_two():
    g = cycle_graph(5)
    assert not solve_decision(g, 1).feasible
    out = solve_decision(g, 2)
    assert out.feasible
    assert len(out.modulator) == 2
    assert is_solution(g, out.modulator)


def test_k23_needs_two():
    g = build(5, [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
    assert not solve_decision(g, 1).feasible
    out = solve_decision(g, 2)
    assert out.feasible and is_solution(g, out.modulator)


def test_rejects_negative_budget():
    with pytest.raises(ValueError):
        solve_decision(path_graph(3), -1)


def test_rejects_unknown_pivot_rule():
    with pytest.raises(ValueError):
        solve_decision(path_graph(3), 1, pivot_rule="hubward")
    with pytest.raises(ValueError):
        solve_min(path_graph(3), pivot_rule="")


def test_modulator_fits_budget_and_verifies():
    rng = random.Random(11)
    for _ in range(150):
        g = random_graph(rng.randint(2, 9), rng.choice([0.2, 0.5, 0.8]), rng)
        k = rng.randint(0, 4)
        out = solve_decision(g, k)
        if out.feasible:
            assert len(out.modulator) <= k
            assert is_solution(g, out.modulator)
            assert out.stats.max_depth >= len(out.modulator)
        assert out.stats.leaves <= out.stats.nodes


def test_feasibility_is_monotone_in_budget():
    rng = random.Random(12)
    for _ in range(80):
        g = random_graph(rng.randint(3, 8), rng.choice([0.3, 0.6]), rng)
        feasible = [solve_decision(g, k).feasible for k in range(g.n + 1)]
        assert feasible[-1]
        for lo, hi in zip(feasible, feasible[1:]):
            assert hi or not lo


def test_matches_oracle_on_small_graphs():
    rng = random.Random(13)
    for _ in range(120):
        g = random_graph(rng.randint(1, 7), rng.choice([0.25, 0.5, 0.75]), rng)
        opt, _ = oracle_min(g)
        if opt > 0:
            assert not solve_decision(g, opt - 1).feasible
        assert solve_decision(g, opt).feasible


def test_solve_min_matches_oracle_and_aggregates_stats():
    rng = random.Random(14)
    for _ in range(60):
        g = random_graph(rng.randint(1, 8), rng.choice([0.3, 0.6]), rng)
        opt, _ = oracle_min(g)
        out = solve_min(g)
        assert out.feasible
        assert len(out.modulator) == opt
        assert is_solution(g, out.modulator)
        rounds = [solve_decision(g, k) for k in range(opt + 1)]
        assert out.stats.nodes == sum(r.stats.nodes for r in rounds)
        assert out.stats.leaves == sum(r.stats.leaves for r in rounds)
        assert out.stats.max_depth == max(r.stats.max_depth for r in rounds)
        assert out.modulator == rounds[-1].modulator


def test_pivot_rules_agree_on_the_optimum():
    rng = random.Random(15)
    for _ in range(80):
        g = random_graph(rng.randint(2, 8), rng.choice([0.3, 0.6]), rng)
        a = solve_min(g)
        b = solve_min(g, pivot_rule="max-degree")
        assert len(a.modulator) == len(b.modulator)
        assert is_solution(g, b.modulator)


def test_full_tree_finds_the_same_first_solution():
    rng = random.Random(16)
    for _ in range(60):
        g = random_graph(rng.randint(3, 8), rng.choice([0.3, 0.6]), rng)
        k = rng.randint(0, 4)
        fast = solve_decision(g, k)
        full = solve_decision(g, k, full_tree=True)
        assert fast.feasible == full.feasible
        assert fast.modulator == full.modulator
        assert full.stats.nodes >= fast.stats.nodes
        assert full.stats.leaves >= fast.stats.leaves


def test_full_tree_on_cliques_is_a_single_leaf():
    out = solve_decision(complete_graph(6), 3, full_tree=True)
    assert out.feasible and out.modulator == frozenset()
    assert out.stats.nodes == 1 and out.stats.leaves == 1


def test_repeated_runs_are_identical():
    rng = random.Random(17)
    for _ in range(40):
        g = random_graph(rng.randint(3, 8), 0.5, rng)
        k = rng.randint(0, 3)
        first = solve_decision(g, k)
        second = solve_decision(g, k)
        assert first == second
        assert (first.stats.nodes, first.stats.leaves, first.stats.max_depth) == (
            second.stats.nodes, second.stats.leaves, second.stats.max_depth)
