"""Acceptance criteria, one check per criterion.

Run under pytest, or directly (``python3 tests/test_acceptance.py``) to get a
PASS/FAIL line per criterion.
"""

import json
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import (  # noqa: E402
    brute_cokernel_order,
    brute_count_order_dividing,
    intermediate_lattice_indices,
    random_square_matrices,
)
from zmaxext import analysis  # noqa: E402
from zmaxext.archimedeanization import build_T, check_T_closed, find_M, archimedeanize, unit_index_upper_bound  # noqa: E402
from zmaxext.classification import classify, subextensions, unit_index  # noqa: E402
from zmaxext.cli import main  # noqa: E402
from zmaxext.errors import InfiniteUnitIndex, NotConvex  # noqa: E402
from zmaxext.extensions import make_Fn, make_lex_example, make_scaled  # noqa: E402
from zmaxext.lattice import INFINITE, cokernel_order, count_order_dividing  # noqa: E402
from zmaxext.ordered_groups import OrderedGroup, Lex  # noqa: E402
from zmaxext.properties import (  # noqa: E402
    axioms_suite,
    monotonic_division_suite,
    quotient_suite,
    roots_of_unity_suite,
)
from zmaxext.semifield import Unit  # noqa: E402


def criterion_1():
    start = time.perf_counter()
    for n in range(1, 21):
        res = classify(make_Fn(n))
        if res.n != n or not res.verified:
            return False, f"classify(F^({n})) gave {res.report()}"
        e = make_scaled(n)
        res = classify(e)
        if res.n != n:
            return False, f"classify(scaled({n})) gave n={res.n}"
        for a in range(-50, 51):
            if res.to_Fn(Unit((a,))) != Unit((a,)) or e.iso_to_Fn.apply((a,)) != (a,):
                return False, f"scaled({n}): a={a} does not map to u^{a}"
    elapsed = time.perf_counter() - start
    return elapsed < 1.0, f"n = 1..20 for both families in {elapsed:.2f}s (limit 1s)"


def criterion_2():
    for n in range(1, 11):
        e = make_Fn(n)
        run = archimedeanize(e, [Unit((k,)) for k in range(n)], bound=8)
        ui, ub = unit_index(e), unit_index_upper_bound(run)
        if not ui == ub == n:
            return False, f"n={n}: unit_index={ui}, upper bound={ub}"
    return True, "unit_index = T coset count = n for n = 1..10"


def criterion_3():
    worst = 0.0
    for n in range(2, 9):
        start = time.perf_counter()
        e = make_Fn(n)
        S = [Unit((k,)) for k in range(n)]
        M = find_M(e, S)
        if M != 1:
            return False, f"n={n}: find_M = {M}"
        run = build_T(e, S, M)
        if run.stabilized_at > (M + 1) * len(S):
            return False, f"n={n}: stabilized at {run.stabilized_at} > N"
        for k, size in enumerate(run.level_sizes):
            if size > len(S) ** (k + 1) * (M + 1) ** k:
                return False, f"n={n}: |T_{k}| = {size} exceeds the bound"
        if not check_T_closed(e, run, 8):
            return False, f"n={n}: T Z_max not closed"
        worst = max(worst, time.perf_counter() - start)
    return worst < 10.0, f"M = 1, stabilization, level bounds and closure for n = 2..8; slowest {worst:.2f}s"


def criterion_4():
    results = []
    for suite in (monotonic_division_suite, roots_of_unity_suite, axioms_suite):
        results += suite(random.Random(0), 500)
    failed = [r.name for r in results if not r.passed]
    if failed:
        return False, f"failed: {failed}"
    return True, f"{len(results)} properties x 500 trials, zero failures"


def criterion_5():
    e = make_lex_example()
    arch = analysis.is_archimedean(e)
    if not arch.is_no:
        return False, f"archimedean = {arch.outcome.value}"
    x = arch.certificate
    if not analysis.recheck_unbounded(e, x, 64, above=True):
        return False, f"counterexample {x} did not re-verify"
    if not analysis.is_convex(e).is_yes:
        return False, "convex is not Yes"
    if unit_index(e) is not INFINITE:
        return False, "unit index is finite"
    Q = analysis.quotient(e)
    if Q.quotient_group != OrderedGroup(1, Lex()):
        return False, f"quotient group {Q.quotient_group}"
    (wd,) = [r for r in quotient_suite(random.Random(0), 200) if r.name.startswith("quotient addition") and "lex" == r.name.split()[-1]]
    if not wd.passed or wd.trials != 200:
        return False, f"well-definedness: {wd}"
    return True, f"archimedean No at {x}, convex Yes, unit index infinite, quotient rank-1 lex, 200/200 trials"


def criterion_6():
    mats = random_square_matrices(random.Random(0), 100)
    for A in mats:
        if cokernel_order(A) != brute_cokernel_order(A):
            return False, f"cokernel mismatch on {A.tolist()}"
        for n in range(1, 13):
            if count_order_dividing(A, n) != brute_count_order_dividing(A, n):
                return False, f"order-dividing count mismatch on {A.tolist()}, n={n}"
    return True, "100 random matrices, cokernel order and counts for n = 1..12 match brute force"


def criterion_7():
    for m in range(1, 25):
        got = [s.index for s in subextensions(make_Fn(m))]
        divisors = [d for d in range(1, m + 1) if m % d == 0]
        if got != divisors or got != intermediate_lattice_indices(m):
            return False, f"m={m}: {got}"
    return True, "one subextension per divisor, matching brute-force lattices for m = 1..24"


def criterion_8():
    try:
        classify(make_lex_example())
        return False, "classify(lex) did not raise"
    except InfiniteUnitIndex:
        pass
    try:
        analysis.quotient(make_Fn(2))
        return False, "quotient(F^(2)) did not raise"
    except NotConvex as exc:
        if exc.counterexample != Unit((1,)):
            return False, f"counterexample {exc.counterexample}"
    import contextlib
    import io

    err = io.StringIO()
    with contextlib.redirect_stderr(err), contextlib.redirect_stdout(io.StringIO()):
        code = main(["classify", "--builtin", "lex"])
    if code != 3 or json.loads(err.getvalue())["error"] != "InfiniteUnitIndex":
        return False, f"CLI exit code {code}"
    return True, "InfiniteUnitIndex (CLI exit 3) and NotConvex with counterexample v"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("check", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(check):
    ok, detail = check()
    print(f"{check.__name__}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for check in CRITERIA:
        ok, detail = check()
        failures += not ok
        print(f"{check.__name__}: {'PASS' if ok else 'FAIL'} - {detail}")
    sys.exit(1 if failures else 0)
