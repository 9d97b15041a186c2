"""Acceptance gate: every exit criterion at its stated size and budget.

One test per criterion, each printing a single pass/fail line (run with
``pytest -s`` to see them inline).  These are the project's exit criteria;
nothing here is sampled or randomised.
"""

import time

import pytest

from koszuldepth.checks import (
    check_greedy_agreement,
    check_index_equivalence,
    check_inverse_law,
)
from koszuldepth.cli import main
from koszuldepth.decomposition import (
    build_decomposition,
    contribution_family,
    index_step_sweep,
    verify_hilbert,
    verify_stanley,
)
from koszuldepth.koszul import boundary_squared, indicator, term_multidegree
from koszuldepth.subsets import Subset

from helpers import all_element_sets


def _pairs(n_max):
    return [(n, k) for n in range(2, n_max + 1) for k in range(max(n // 2, 1), n)]


def _line(num, ok, elapsed, detail):
    print(f"criterion {num:02d}: {'PASS' if ok else 'FAIL'} ({elapsed:.1f}s) {detail}")


@pytest.fixture(scope="module")
def stanley_reports():
    # triangle + hilbert + family sizes + depth for every valid (n, k), n <= 12
    return {(n, k): verify_stanley(n, k, check_rank=False) for n, k in _pairs(12)}


@pytest.fixture(scope="module")
def ranked_reports():
    # full exact-rank sweep, n <= 9
    return {(n, k): verify_stanley(n, k, check_rank=True) for n, k in _pairs(9)}


def test_criterion_01_worked_example():
    t0 = time.perf_counter()
    fam = contribution_family(7, 3, Subset(7, [1, 2, 4, 5, 7]))
    elapsed = time.perf_counter() - t0
    got = {tuple(m.G): m.index for m in fam.members}
    expected = {
        (1, 2, 5): 0,
        (1, 2, 7): 0,
        (2, 4, 5): 0,
        (2, 5, 7): 0,
        (1, 4, 5): 0,  # the sixth member easily overlooked in a hand count
        (1, 4, 7): 2,
    }
    ok = got == expected and elapsed < 1.0
    _line(1, ok, elapsed, f"family for 12457 has {len(got)} members, {{1,4,7}} at index 2")
    assert got == expected
    assert elapsed < 1.0


def test_criterion_02_inverse_law():
    t0 = time.perf_counter()
    reports = [check_inverse_law(n) for n in range(1, 15)]
    elapsed = time.perf_counter() - t0
    bad = [r.name for r in reports if not r.passed]
    _line(2, not bad and elapsed < 5.0, elapsed, "phi/psi inverse and image laws, n <= 14")
    assert not bad
    assert elapsed < 5.0


def test_criterion_03_index_equivalence():
    t0 = time.perf_counter()
    reports = [check_index_equivalence(n) for n in range(1, 11)]
    elapsed = time.perf_counter() - t0
    bad = [r.name for r in reports if not r.passed]
    total = sum(r.counts["pairs"] for r in reports)
    _line(3, not bad and elapsed < 120.0, elapsed, f"{total} (G, M) pairs, n <= 10")
    assert not bad
    assert elapsed < 120.0


def test_criterion_04_greedy_agreement():
    t0 = time.perf_counter()
    reports = [check_greedy_agreement(n) for n in range(1, 13)]
    elapsed = time.perf_counter() - t0
    bad = [r.name for r in reports if not r.passed]
    _line(4, not bad and elapsed < 60.0, elapsed, "greedy = closed formula on total levels, n <= 12")
    assert not bad
    assert elapsed < 60.0


def test_criterion_05_hilbert_identity(stanley_reports):
    t0 = time.perf_counter()
    count_bad = [
        key
        for key, rep in stanley_reports.items()
        if rep.counts["family_size_mismatches"] or rep.counts["hilbert_failures"]
    ]
    box_bad = []
    for n, k in _pairs(6):
        rep = verify_hilbert(build_decomposition(n, k), "box", 2)
        if not rep.passed:
            box_bad.append((n, k))
    elapsed = time.perf_counter() - t0
    ok = not count_bad and not box_bad and elapsed < 300.0
    _line(5, ok, elapsed, "summand counts = C(|M|-1,k-1) = dimension, n <= 12; box d=2, n <= 6")
    assert not count_bad
    assert not box_bad
    assert elapsed < 300.0


def test_criterion_06_triangle_condition(stanley_reports):
    t0 = time.perf_counter()
    bad = [key for key, rep in stanley_reports.items() if rep.counts["triangle_violations"]]
    elapsed = time.perf_counter() - t0
    _line(6, not bad, elapsed, "squashed-order triangle condition, every support, n <= 12")
    assert not bad
    assert elapsed < 300.0


def test_criterion_07_exact_independence(ranked_reports):
    t0 = time.perf_counter()
    bad = [key for key, rep in ranked_reports.items() if rep.counts["rank_failures"]]
    unchecked = [
        key for key, rep in ranked_reports.items()
        if rep.counts["rank_checked"] != rep.counts["supports"]
    ]
    elapsed = time.perf_counter() - t0
    ok = not bad and not unchecked and elapsed < 300.0
    _line(7, ok, elapsed, "sign matrices at full row rank, every support, n <= 9")
    assert not bad and not unchecked
    assert elapsed < 300.0


def test_criterion_08_index_increment():
    t0 = time.perf_counter()
    reports = {n: index_step_sweep(n) for n in range(1, 10)}
    elapsed = time.perf_counter() - t0
    failures = {n: rep.counts["failures"] for n, rep in reports.items() if not rep.passed}
    case2_missing = [
        n for n in (3, 5, 7, 9) if reports[n].counts["case2"] == 0
    ]
    ok = not failures and not case2_missing and elapsed < 300.0
    _line(8, ok, elapsed, f"index increment over all admissible triples, n <= 9; failures: {failures}")
    assert elapsed < 300.0
    assert not case2_missing
    # The unrestricted increment claim is false: the first counterexample is
    # n=3, M={1,3}, G={3}, H={1} (all admissibility conditions hold, the
    # below-axis case predicts index 1, the true index is 0 because the
    # upward step from H inserts 2, which is outside M).  Every recorded
    # failure is of this shape: a below-axis pair whose added element is 1.
    # The decomposition itself is untouched (such G always have odd index, so
    # they never appear in a contributing family), as criteria 6 and 7 show.
    # See README, "Verification findings".
    assert not failures, (
        f"the per-pair index increment claim has genuine counterexamples: {failures}; "
        f"first: {reports[3].failures[0]}"
    )


def test_criterion_09_chain_complex_sanity():
    t0 = time.perf_counter()
    for n in range(2, 9):
        for elems in all_element_sets(n):
            if len(elems) >= 2:
                assert boundary_squared(Subset(n, elems)) == {}
    for n, k in _pairs(10):
        for sm in build_decomposition(n, k).summands:
            target = indicator(sm.S)
            assert all(term_multidegree(t, n) == target for t in sm.m.terms)
    elapsed = time.perf_counter() - t0
    _line(9, elapsed < 60.0, elapsed, "boundary twice vanishes (n <= 8); generators homogeneous (n <= 10)")
    assert elapsed < 60.0


def test_criterion_10_depth_conclusion(stanley_reports, capsys):
    t0 = time.perf_counter()
    bad = []
    for (n, k), rep in stanley_reports.items():
        if not rep.passed or rep.counts["min_Z"] != n - 1:
            bad.append((n, k))
    code = main(["verify", "3", "1"])
    out = capsys.readouterr().out
    elapsed = time.perf_counter() - t0
    spoke = (
        "sdepth M(3,1) >= 2" in out
        and "cited" in out
        and "not verified" in out
        and code == 0
    )
    with capsys.disabled():
        _line(10, not bad and spoke, elapsed, "min |Z| = n-1 for every (n, k), n <= 12; bound stated, upper bound cited")
    assert not bad
    assert spoke
