"""Acceptance suite: one test (and one pass/fail line) per shipping criterion.

Every comparison is exact — integer and rational arithmetic throughout — so
the only tolerances here are the wall-clock budgets on the heavyweight
sweeps.
"""

import json
import math
import time

from artifact.bijections import (
    iterate_descending_suffix,
    map_f,
    map_fD,
    map_fpp,
    plain_subsets,
    signed_subsets,
)
from artifact.cli import main
from artifact.enumeration import poly_group
from artifact.permutations import iterate_group
from artifact.recurrences import hyatt_plus, classic_plus_B, recur_B, recur_D
from artifact.registry import clear_cache, run_check

SERIES_CHECK_IDS = (
    "typeB-biv-even",
    "typeB-biv-odd",
    "typeB-alt-even",
    "typeB-alt-odd",
    "typeD-biv-even",
    "typeD-biv-odd",
    "typeD-alt-even",
    "typeD-alt-odd",
    "typeB-fivevar",
    "typeD-fivevar",
    "reiner-egf",
    "snakes-B-q",
    "snakes-D-q",
)


def announce(label: str, elapsed: float | None = None) -> None:
    timing = f" [{elapsed:.1f}s]" if elapsed is not None else ""
    print(f"PASS {label}{timing}")


def test_01_type_b_recurrence_equals_brute_force_through_rank_8():
    """Closed recurrence vs exhaustive enumeration over all 10,321,920 words."""
    started = time.perf_counter()
    for n in range(0, 9):
        assert recur_B(n) == poly_group("B", n, "biv", jobs=4), n
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0, f"rank sweep took {elapsed:.1f}s"
    announce("type B recurrence == brute force, 0 <= n <= 8", elapsed)


def test_02_type_d_recurrence_equals_brute_force_through_rank_8():
    started = time.perf_counter()
    for n in range(2, 9):
        assert recur_D(n) == poly_group("D", n, "biv", jobs=4), n
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0, f"rank sweep took {elapsed:.1f}s"
    announce("type D recurrence == brute force, 2 <= n <= 8", elapsed)


def test_03_positive_last_entry_expansion_and_classical_specialization():
    """Subset expansion vs brute force, then its one-variable binomial sum."""
    for n in range(1, 8):
        assert hyatt_plus("B", n) == poly_group("B+", n, "biv"), n
    for n in range(2, 8):
        assert hyatt_plus("D", n) == poly_group("D+", n, "biv"), n
    for n in range(1, 11):
        collapsed = hyatt_plus("B", n).subs_values({"q": 1}).rename_variables({"s": "t"})
        assert collapsed == classic_plus_B(n), n
    announce("positive-last expansions == brute force (n <= 7) and "
             "their q = 1 binomial sums (n <= 10)")


def test_04_series_identities_exact_through_u6():
    """Cross-multiplied residuals vanish identically through order six."""
    clear_cache()
    for cid in SERIES_CHECK_IDS:
        started = time.perf_counter()
        report = run_check(cid, order=6)
        elapsed = time.perf_counter() - started
        assert report["status"] == "pass", (cid, report)
        assert elapsed < 10.0, f"{cid} took {elapsed:.1f}s"
    announce(f"{len(SERIES_CHECK_IDS)} series identities exact through u^6, "
             "each under 10s")


def test_05_q_equal_one_degenerations():
    """Classical hyperbolic forms at half argument, and the snake numbers."""
    classical = run_check("typeB-biv-q1-classical", order=6)
    assert classical["status"] == "pass", classical
    snakes = run_check("springer-B-q1", max_n=6)
    assert snakes["status"] == "pass", snakes
    assert snakes["counts"] == [1, 1, 3, 11, 57, 361, 2763]
    announce("q = 1 degenerations: half-argument hyperbolic forms through u^6 "
             "and snake counts vs 1/(cos u - sin u)")


def test_06_lemma_suites_and_bijectivity():
    """Subset-sum closed forms, passing lemmas, sign flips, image equality."""
    for cid, max_n in (
        ("lemma-2.1", 7),
        ("lemma-3.1", 7),
        ("passing-G", 6),
        ("passing-H", 6),
        ("signflip-B", 6),
        ("signflip-D", 6),
    ):
        report = run_check(cid, max_n=max_n)
        assert report["status"] == "pass", (cid, report)

    # juxtaposition onto signed subsets covers every increasing-tail word
    for n in range(1, 7):
        for i in range(0, n):
            image = {
                map_f(sigma, subset, n)
                for sigma in iterate_group("B", i)
                for subset in signed_subsets(n, n - i)
            }
            assert image == set(iterate_group("G", n, i=i)), (n, i)
            assert len(image) == 2**n * math.comb(n, i) * math.factorial(i)

    # the parity-adjusted variant covers the even-signed counterpart
    for n in range(3, 7):
        for i in range(2, n):
            image = {
                map_fD(sigma, subset, n)
                for sigma in iterate_group("D", i)
                for subset in signed_subsets(n, n - i)
            }
            assert image == set(iterate_group("H", n, i=i)), (n, i)
            assert len(image) == 2 ** (n - 1) * math.comb(n, i) * math.factorial(i)

    # the descending-suffix variant covers every positive descending tail
    for n in range(1, 7):
        for k in range(0, n):
            image = {
                map_fpp(sigma, subset, n)
                for sigma in iterate_group("B", n - k - 1)
                for subset in plain_subsets(n, k + 1)
            }
            assert image == set(iterate_descending_suffix("B", n, k)), (n, k)

    announce("subset-sum lemmas (n <= 7), passing lemmas, sign-flip laws, "
             "and bijection image equality (n <= 6)")


def test_07_symmetry_and_reciprocity_as_exact_laurent_identities():
    for cid in (
        "typeB-minus-symmetry",
        "typeD-minus-symmetry",
        "typeB-reciprocal",
        "typeD-reciprocal",
    ):
        report = run_check(cid, max_n=7)
        assert report["status"] == "pass", (cid, report)
    announce("negative-last symmetry and reciprocity exact for n <= 7")


def test_08_byte_identical_output_across_runs_and_jobs(capsys):
    commands = [
        ["enumerate", "--group", "B", "--n", "4", "--format", "json"],
        ["enumerate", "--group", "D", "--n", "4", "--weight", "fivevar",
         "--format", "csv"],
        ["enumerate", "--group", "snakeB", "--n", "5", "--weight", "q"],
        ["check", "--id", "typeB-recurrence", "--max-n", "4", "--format", "json"],
        ["compare", "--group", "B", "--n", "4", "--methods",
         "brute,recurrence,hyatt"],
    ]
    for argv in commands:
        outputs = []
        for jobs in ("1", "1", "4"):
            code = main(argv + ["--jobs", jobs])
            captured = capsys.readouterr()
            assert code == 0, (argv, captured.err)
            outputs.append(captured.out.encode())
        assert outputs[0] == outputs[1] == outputs[2], argv
    announce("command output byte-identical across repeated runs and "
             "--jobs settings")


def test_machine_readable_reports_are_json_serializable():
    report = run_check("typeB-recurrence", max_n=3)
    assert json.loads(json.dumps(report)) == report
