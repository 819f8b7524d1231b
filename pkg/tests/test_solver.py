import itertools
import random

import pytest

from pstrd import (
    CoverInstance,
    Graph,
    SolverConfig,
    cover_instance,
    cycle_graph,
    domination_number,
    edgeless_graph,
    join,
    min_weight_cover,
    path_graph,
    random_gnm_graph,
    robertson_graph,
    roman_domination_number,
    solve_exact,
    solve_naive,
    star_graph,
    validate_labeling,
)


def seeded_graphs(count, max_n, base_seed):
    for i in range(count):
        rng = random.Random(base_seed + i)
        n = rng.randint(1, max_n)
        m = rng.randint(0, n * (n - 1) // 2)
        yield random_gnm_graph(n, m, seed=rng.randint(0, 2 ** 30))


# ---------------------------------------------------------------------------
# min_weight_cover
# ---------------------------------------------------------------------------

def test_cover_forced_choice():
    inst = CoverInstance(frozenset({7}), (((3, frozenset({7}), 1)),))
    assert min_weight_cover(inst) == (frozenset({3}), 1)


def test_cover_dominated_choice():
    inst = CoverInstance(
        frozenset({0, 1}),
        ((2, frozenset({0}), 1), (3, frozenset({1}), 1), (4, frozenset({0, 1}), 1)),
    )
    assert min_weight_cover(inst) == (frozenset({4}), 1)


def test_cover_infeasible_element():
    inst = CoverInstance(frozenset({0, 1}), ((2, frozenset({0}), 1),))
    assert min_weight_cover(inst) is None


def test_cover_budget_is_exclusive():
    inst = CoverInstance(frozenset({0}), ((1, frozenset({0}), 3),))
    assert min_weight_cover(inst, budget=3) is None
    assert min_weight_cover(inst, budget=4) == (frozenset({1}), 3)


def test_cover_empty_elements():
    inst = CoverInstance(frozenset(), ())
    assert min_weight_cover(inst) == (frozenset(), 0)


def test_cover_zero_cost_candidate():
    # outside the thresholds-minus-one shape, costs may be 0
    inst = CoverInstance(
        frozenset({0, 1}),
        ((2, frozenset({0}), 0), (3, frozenset({1}), 2), (4, frozenset({0, 1}), 3)),
    )
    assert min_weight_cover(inst) == (frozenset({2, 3}), 2)


def test_cover_instance_costs():
    g = star_graph(11)
    inst = cover_instance(g, frozenset(range(1, 11)), 3)
    assert inst.candidates == ((0, frozenset(range(1, 11)), 4),)


# ---------------------------------------------------------------------------
# solve_exact / solve_naive
# ---------------------------------------------------------------------------

def test_solve_small_known_values():
    assert solve_exact(star_graph(5), 3).value == 3
    assert solve_naive(star_graph(5), 3).value == 3
    g = join(edgeless_graph(1), path_graph(5))
    assert solve_exact(g, 3).value == 3
    assert solve_naive(g, 3).value == 3
    single = edgeless_graph(1)
    r = solve_exact(single, 3)
    assert r.value == 1 and r.witness.labels == (1,)


def test_solver_input_validation():
    with pytest.raises(ValueError):
        solve_exact(star_graph(4), 0)
    with pytest.raises(ValueError):
        solve_exact(Graph(0, []), 3)
    with pytest.raises(ValueError):
        solve_naive(random_gnm_graph(13, 0, 1), 3)
    with pytest.raises(ValueError):
        SolverConfig(worker_count=0)
    with pytest.raises(ValueError):
        SolverConfig(algorithm="magic")


def test_witness_soundness():
    for g in seeded_graphs(40, 9, 4000):
        for p in (1, 2, 3, g.max_degree + 1):
            r = solve_exact(g, p)
            report = validate_labeling(g, p, r.witness)
            assert report.valid and report.weight == r.value


def test_oracle_equivalence_sample():
    for g in seeded_graphs(25, 8, 7000):
        for p in range(1, g.max_degree + 2):
            assert solve_exact(g, p).value == solve_naive(g, p).value


def test_p1_is_order():
    for g in seeded_graphs(20, 9, 5100):
        assert solve_exact(g, 1).value == g.n


def test_monotone_in_p():
    for g in seeded_graphs(30, 9, 6200):
        delta = g.max_degree
        values = [solve_exact(g, p).value for p in range(3, max(3, delta))]
        assert all(a >= b for a, b in zip(values, values[1:]))


def test_component_additivity():
    for i in range(10):
        rng = random.Random(8600 + i)
        na, nb = rng.randint(2, 6), rng.randint(2, 6)
        a = random_gnm_graph(na, rng.randint(1, na * (na - 1) // 2), seed=i)
        b = random_gnm_graph(nb, rng.randint(1, nb * (nb - 1) // 2), seed=i + 50)
        edges = list(a.edges()) + [(a.n + u, a.n + v) for u, v in b.edges()]
        g = Graph(a.n + b.n, edges)
        for p in (2, 3, 4):
            assert solve_exact(g, p).value == solve_exact(a, p).value + solve_exact(b, p).value


def test_worker_count_does_not_change_anything():
    cases = [(robertson_graph(), 3)] + [(g, 3) for g in seeded_graphs(6, 9, 9100)]
    for g, p in cases:
        r1 = solve_exact(g, p, SolverConfig(worker_count=1))
        r4 = solve_exact(g, p, SolverConfig(worker_count=4))
        assert r1.value == r4.value
        assert r1.witness == r4.witness
        assert r1.stats.subsets_examined == r4.stats.subsets_examined
        assert r1.stats.pruned == r4.stats.pruned


def test_time_limit_returns_incumbent():
    r = solve_exact(robertson_graph(), 3, SolverConfig(time_limit=0.0005))
    assert not r.optimal
    assert r.value >= 11
    assert validate_labeling(robertson_graph(), 3, r.witness).valid


def test_algorithm_naive_dispatch():
    g = star_graph(7)
    r = solve_exact(g, 3, SolverConfig(algorithm="naive"))
    assert r.value == solve_naive(g, 3).value


# ---------------------------------------------------------------------------
# Classical numbers
# ---------------------------------------------------------------------------

def test_domination_known_values():
    assert domination_number(star_graph(5)).value == 1
    assert domination_number(cycle_graph(6)).value == 2
    assert domination_number(edgeless_graph(4)).value == 4


def test_domination_witness_dominates():
    for g in seeded_graphs(30, 9, 3300):
        r = domination_number(g)
        chosen = {v for v, x in enumerate(r.witness.labels) if x == 1}
        assert len(chosen) == r.value
        assert all(v in chosen or g.neighbors(v) & chosen for v in range(g.n))


def test_domination_robertson_brute_force():
    g = robertson_graph()
    r = domination_number(g)
    closed = [g.closed_mask(v) for v in range(g.n)]
    full = (1 << g.n) - 1
    # no dominating set of size value - 1 exists
    for combo in itertools.combinations(range(g.n), r.value - 1):
        acc = 0
        for v in combo:
            acc |= closed[v]
        assert acc != full
    chosen = [v for v, x in enumerate(r.witness.labels) if x == 1]
    acc = 0
    for v in chosen:
        acc |= closed[v]
    assert acc == full


def brute_force_roman(g):
    best = 2 * g.n
    for labels in itertools.product((0, 1, 2), repeat=g.n):
        if sum(labels) >= best:
            continue
        if all(any(labels[w] == 2 for w in g.neighbors(v))
               for v in range(g.n) if labels[v] == 0):
            best = sum(labels)
    return best


def test_roman_known_values():
    assert roman_domination_number(star_graph(11)).value == 2
    assert roman_domination_number(edgeless_graph(3)).value == 3
    assert roman_domination_number(cycle_graph(5)).value == 4


def test_roman_matches_brute_force():
    for g in seeded_graphs(25, 7, 2500):
        assert roman_domination_number(g).value == brute_force_roman(g)


def test_roman_equals_high_p_regimes():
    for g in seeded_graphs(20, 8, 1700):
        delta = max(g.max_degree, 1)
        expected = roman_domination_number(g).value
        assert solve_exact(g, delta).value == expected
        assert solve_exact(g, delta + 3).value == expected


def test_stats_are_populated():
    r = solve_exact(star_graph(8), 3)
    assert r.stats.subsets_examined >= 1
    assert r.stats.elapsed >= 0.0
    d = r.stats.to_dict(stable=True)
    assert d["elapsed_ms"] == 0
