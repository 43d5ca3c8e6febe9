import pytest

from oracles import intermediate_lattice_indices
from zmaxext.properties import SUITES, brute_force_subgroup_orders, run_suite


@pytest.mark.parametrize("suite", list(SUITES))
def test_suite_passes(suite):
    results = run_suite(suite, seed=0, trials=100)
    failed = [(r.name, r.counterexample) for r in results if not r.passed]
    assert results and not failed


def test_seeded_runs_are_reproducible():
    a = [r.to_json() for r in run_suite("monotonic-division", seed=7, trials=50)]
    b = [r.to_json() for r in run_suite("monotonic-division", seed=7, trials=50)]
    assert a == b


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_subgroup_brute_force_agrees_with_lattice_oracle():
    for m in range(1, 25):
        assert brute_force_subgroup_orders(m) == intermediate_lattice_indices(m)
