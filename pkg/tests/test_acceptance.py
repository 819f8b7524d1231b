"""Acceptance suite: one test per criterion, at the stated tolerances.

Each test prints its own pass/fail line (run with -s or -v to see them);
`pstrd bench --suite paper` runs the same checks from the command line.

Criterion 4 is expected to fail and is left failing on purpose: the closed
formula it prescribes for double stars is not the true optimum at r = 1
when p does not divide s. Two independent engines (zero-set enumeration and
exhaustive labeling search) agree on the smaller value, an explicit witness
validates at that weight, and the weight-4 characterization classifies those
graphs consistently with the solvers. See test_families for the anatomy of
the counterexample.
"""

from pstrd import bench


def run_criterion(number):
    results = bench.run_suite(only=[number])
    assert len(results) == 1
    r = results[0]
    print(f"[{'PASS' if r.passed else 'FAIL'}] criterion {r.number:>2} "
          f"{r.name}: {r.detail} ({r.elapsed:.2f}s)")
    assert r.passed, f"criterion {r.number} ({r.name}): {r.detail}"


def test_criterion_01_robertson_value():
    run_criterion(1)


def test_criterion_02_star_values():
    run_criterion(2)


def test_criterion_03_complete_bipartite_sweep():
    run_criterion(3)


def test_criterion_04_double_star_sweep():
    run_criterion(4)


def test_criterion_05_spider_sharpness():
    run_criterion(5)


def test_criterion_06_universal_equality():
    run_criterion(6)


def test_criterion_07_oracle_equivalence():
    run_criterion(7)


def test_criterion_08_bound_soundness_fuzz():
    run_criterion(8)


def test_criterion_09_reduction_equivalence():
    run_criterion(9)


def test_criterion_10_probabilistic_trials():
    run_criterion(10)


def test_criterion_11_determinism():
    run_criterion(11)