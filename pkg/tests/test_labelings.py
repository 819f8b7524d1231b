import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pstrd import (
    LabelFunction,
    Regime,
    ceil_div,
    classify_regime,
    cycle_graph,
    defense_threshold,
    edgeless_graph,
    format_labels,
    max_label,
    parse_labels,
    random_gnm_graph,
    star_graph,
    validate_labeling,
)

STAR = star_graph(11)
LEAVES = frozenset(range(1, 11))


def test_threshold_star_figures():
    assert defense_threshold(STAR, LEAVES, 0, 4) == 4
    assert defense_threshold(STAR, LEAVES, 0, 2) == 6
    assert defense_threshold(STAR, LEAVES, 0, 3) == 5


def test_threshold_empty_zero_set():
    assert defense_threshold(STAR, frozenset(), 0, 3) == 1
    assert defense_threshold(cycle_graph(5), frozenset(), 2, 1) == 1


def test_threshold_rejects_zero_vertex():
    with pytest.raises(ValueError):
        defense_threshold(STAR, frozenset({0, 1}), 0, 3)


def test_validate_star_center4():
    f = LabelFunction((4,) + (0,) * 10)
    r4 = validate_labeling(STAR, 4, f)
    assert r4.valid and r4.weight == 4 and r4.max_label == 4
    r3 = validate_labeling(STAR, 3, f)
    assert not r3.valid and r3.weight == 4
    assert all(reason == "undefended_zero" for _, reason in r3.violations)
    assert len(r3.violations) == 10


def test_validate_all_ones():
    for g in (STAR, cycle_graph(6), edgeless_graph(4)):
        r = validate_labeling(g, 3, LabelFunction.all_ones(g.n))
        assert r.valid and r.weight == g.n


def test_validate_codomain_bound():
    f = LabelFunction((5,) + (0,) * 10)  # max label at p=4 is 4
    r = validate_labeling(STAR, 4, f)
    assert not r.valid
    assert (0, "label_exceeds_max") in r.violations


def test_validate_isolated_zero_invalid():
    g = edgeless_graph(3)
    r = validate_labeling(g, 3, LabelFunction((0, 1, 1)))
    assert not r.valid
    assert r.violations == ((0, "undefended_zero"),)


def test_validate_length_mismatch():
    with pytest.raises(ValueError):
        validate_labeling(STAR, 3, LabelFunction((1, 1)))


def test_negative_labels_rejected():
    with pytest.raises(ValueError):
        LabelFunction((1, -1))


def test_classify_star_regimes():
    assert classify_regime(STAR, 1) is Regime.TRIVIAL
    assert classify_regime(STAR, 2) is Regime.STRONG_ROMAN
    assert classify_regime(STAR, 3) is Regime.P_STRONG
    assert classify_regime(STAR, 9) is Regime.P_STRONG
    assert classify_regime(STAR, 10) is Regime.ROMAN
    assert classify_regime(STAR, 14) is Regime.ROMAN
    # p = 2 takes precedence even when p >= max_degree
    assert classify_regime(cycle_graph(4), 2) is Regime.STRONG_ROMAN


def test_labels_file_round_trip():
    f = LabelFunction((4, 0, 0, 1, 2))
    assert parse_labels(format_labels(f)) == f
    assert parse_labels("0 1\n2\t3") == LabelFunction((0, 1, 2, 3))


@given(st.integers(0, 200), st.integers(1, 40))
def test_codomain_identity(delta, p):
    # ceil((delta + p)/p) == ceil(delta/p) + 1, used throughout
    assert ceil_div(delta + p, p) == ceil_div(delta, p) + 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(2, 9), st.integers(1, 6))
def test_monotone_repair(seed, n, p):
    """Raising labels while shrinking the zero set never breaks validity."""
    rng = random.Random(seed)
    g = random_gnm_graph(n, rng.randint(0, n * (n - 1) // 2), seed=seed)
    bound = max_label(g, p)
    # start from all-ones (always valid), lower a random subset to 0 and keep
    # only repairs that stay valid; then raise labels pointwise
    labels = [1] * n
    for v in range(n):
        if rng.random() < 0.5:
            labels[v] = 0
    for v in range(n):
        if labels[v] != 0 and rng.random() < 0.5:
            labels[v] = rng.randint(1, bound)
    base = LabelFunction(tuple(labels))
    if not validate_labeling(g, p, base).valid:
        return
    raised = list(base.labels)
    for v in range(n):
        if raised[v] == 0 and rng.random() < 0.3:
            raised[v] = 1  # shrink B0
        elif raised[v] >= 1:
            raised[v] = min(bound, raised[v] + rng.randint(0, 2))
    assert validate_labeling(g, p, LabelFunction(tuple(raised))).valid


def classic_roman_valid(g, labels):
    return all(
        any(labels[w] == 2 for w in g.neighbors(v))
        for v in range(g.n) if labels[v] == 0
    )


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 8))
def test_roman_regime_agrees_with_rdf_checker(seed, n):
    """For p >= max_degree, validity over {0,1,2} is the classical condition."""
    rng = random.Random(seed)
    g = random_gnm_graph(n, rng.randint(0, n * (n - 1) // 2), seed=seed)
    p = max(g.max_degree, 1) + rng.randint(0, 3)
    labels = tuple(rng.choice([0, 1, 2]) for _ in range(n))
    if g.max_degree == 0 and 2 in labels:
        return  # codomain bound is 1 on edgeless graphs
    assert validate_labeling(g, p, labels).valid == classic_roman_valid(g, labels)
