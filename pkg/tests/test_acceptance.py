"""Acceptance gate: one test per numbered criterion, run at full size.

Every comparison is exact integer or object equality.  Each test prints
one PASS line when its criterion holds; run with ``pytest -v -s`` to see
them.
"""

import time

from zigzag.bijections import (
    chuang_phi,
    omega,
    omega_signed,
    phi,
    phi_signed,
    psi,
    psi_c,
    psi_signed,
)
from zigzag.cdindex import reduced_variation_andre, reduced_variation_simsun
from zigzag.core import perm_from_text, tree_from_literal
from zigzag.families import count_family, count_hetyei_fast
from zigzag.triangles import arnold_table, entringer_table
from zigzag.verify import PASS, check_conjecture, run_checks

ENTRINGER_ROWS = {
    1: (1,),
    2: (0, 1),
    3: (0, 1, 1),
    4: (0, 1, 2, 2),
    5: (0, 2, 4, 5, 5),
    6: (0, 5, 10, 14, 16, 16),
    7: (0, 16, 32, 46, 56, 61, 61),
}

ARNOLD_ROWS = {
    1: (1, 1),
    2: (0, 1, 1, 2),
    3: (0, 2, 3, 3, 4, 4),
    4: (0, 4, 8, 11, 11, 14, 16, 16),
    5: (0, 16, 32, 46, 57, 57, 68, 76, 80, 80),
    6: (0, 80, 160, 236, 304, 361, 361, 418, 464, 496, 512, 512),
}

CHAIN_TABLE = [
    ("2143", "1(2,3(4))", "3412", "231"),
    ("3241", "1(2(3,4))", "1423", "132"),
    ("3142", "1(2(3),4)", "4123", "312"),
    ("4231", "1(2(3(4)))", "1234", "123"),
    ("4132", "1(2(4),3)", "3124", "213"),
]

SIGNED_CHAIN_TABLE = [
    ("1 -2 3", "-2(1,3)", "3 -2 1"),
    ("1 -3 2", "-3(1,2)", "2 -3 1"),
    ("1 -3 -2", "-3(-2(1))", "-3 -2 1"),
    ("213", "1(2,3)", "312"),
    ("2 -1 3", "-1(2,3)", "3 -1 2"),
    ("2 -3 1", "-3(1(2))", "-3 1 2"),
    ("2 -3 -1", "-3(-1(2))", "-3 -1 2"),
    ("312", "1(2(3))", "123"),
    ("3 -1 2", "-1(2(3))", "-1 2 3"),
    ("3 -2 1", "-2(1(3))", "-2 1 3"),
    ("3 -2 -1", "-2(-1(3))", "-2 -1 3"),
]

SIGNED_SHRINK_TABLE = [
    ("1234", "123"),
    ("3124", "213"),
    ("-3 1 2 4", "-2 1 3"),
    ("1423", "132"),
    ("1 -4 2 3", "1 -3 2"),
    ("4123", "312"),
    ("-4 1 2 3", "-3 1 2"),
    ("3412", "231"),
    ("-3 4 1 2", "-2 3 1"),
    ("3 -4 1 2", "2 -3 1"),
    ("-3 -4 1 2", "-2 -3 1"),
]


def _report(number: int, text: str) -> None:
    print(f"PASS  criterion {number}: {text}")


def _best_time(fn, repeats: int = 5) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _assert_all_pass(reports):
    for r in reports:
        assert r.status == PASS, f"{r.check_id}: {r.counterexample}"


def test_criterion_01_entringer_triangle():
    table = entringer_table(7)
    checked = 0
    for n, values in ENTRINGER_ROWS.items():
        assert tuple(v for _, v in table.row(n)) == values
        checked += len(values)
        # the row sum is forced by the entries just asserted
        assert table.row_sums[n - 1] == sum(values)
    assert checked == 28
    assert table.row_sums == (1, 1, 2, 5, 16, 61, 272)
    elapsed = _best_time(lambda: entringer_table(7))
    assert elapsed < 0.001, f"entringer_table(7) took {elapsed:.6f}s"
    _report(1, f"Entringer triangle, 28 entries exact, {elapsed * 1e6:.0f}us")


def test_criterion_02_arnold_triangle():
    table = arnold_table(6)
    for n, values in ARNOLD_ROWS.items():
        assert tuple(v for _, v in table.row(n)) == values
    assert table.value(4, -3) == 4
    assert table.value(5, 4) == 80
    assert table.value(6, 6) == 512
    assert table.row_sums == (1, 3, 11, 57, 361, 2763)
    elapsed = _best_time(lambda: arnold_table(6))
    assert elapsed < 0.001, f"arnold_table(6) took {elapsed:.6f}s"
    _report(2, f"Arnold triangle and Springer numbers exact, {elapsed * 1e6:.0f}us")


def test_criterion_03_family_counts_type_a():
    _assert_all_pass(run_checks(["entringer-families"], n_max_a=8, n_max_b=6))
    assert count_family("alt", 5, 3) == 4
    assert count_family("tree", 7, 7) == 61
    assert count_family("andre", 7, 4) == 46
    assert count_family("simsun", 6, 3) == 46
    _report(3, "four unsigned families match the Entringer triangle, n <= 8")


def test_criterion_04_family_counts_type_b():
    _assert_all_pass(run_checks(["arnold-families"], n_max_a=8, n_max_b=6))
    assert count_family("snake", 4, 2) == 14
    assert count_family("alt-b", 5, -4) == 16
    assert count_family("tree-b", 6, 6) == 512
    assert count_family("andre-b", 3, 1) == 3
    assert count_family("simsun-b", 3, 3) == count_family("andre-h", 4, 4) == 3
    _report(4, "signed families match the Arnold triangle, n <= 6")


def test_criterion_05_bijection_exhaustives():
    _assert_all_pass(
        run_checks(
            [
                "omega-bijection",
                "phi-bijection",
                "psi-bijection",
                "psi-signed-bijection",
                "omega-signed-bijection",
                "phi-signed-bijection",
                "conjugation-diagram",
            ],
            n_max_a=8,
            n_max_b=6,
        )
    )
    _report(5, "all six maps bijective with statistics, n <= 8 / n <= 6")


def test_criterion_06_algorithm_equality_and_trace():
    _assert_all_pass(run_checks(["psi-equality"], n_max_a=8, n_max_b=6))
    _, trace = psi_c(perm_from_text("748591623"))
    assert [(s.index, s.a, s.b, s.case) for s in trace.steps] == [
        (4, 3, 3, "C1"),
        (3, 2, 2, "C1"),
        (2, 9, None, "C2"),
        (1, 5, 5, "C1"),
    ]
    _report(6, "recursive and grafting constructions agree, trace exact")


def test_criterion_07_factorization():
    assert count_family("tree", 8) == 1385
    _assert_all_pass(run_checks(["chuang-factorization"], n_max_a=8, n_max_b=6))
    _report(7, "direct tree-to-Simsun map factors through omega, m <= 8")


def test_criterion_08_cd_preservation():
    assert reduced_variation_andre(perm_from_text("684512937")) == "cddcd"
    assert reduced_variation_simsun(perm_from_text("57341286")) == "cddcd"
    _assert_all_pass(run_checks(["cd-preservation"], n_max_a=8, n_max_b=6))
    _report(8, "reduced variations preserved under the shrink map, n <= 8")


def test_criterion_09_worked_example_regressions():
    running = tree_from_literal("1(2(3(7,9)),4(5,6(8)))")
    assert omega(running) == perm_from_text("684512937")
    assert phi(perm_from_text("684512937")) == perm_from_text("57341286")
    assert psi(perm_from_text("739154826")) == running
    signed = tree_from_literal("-8(-4(-3(6,9)),-1(2,5(7)))")
    assert psi_signed(perm_from_text("6 -3 9 -8 2 -1 7 -4 5")) == signed
    assert omega_signed(signed) == perm_from_text("5 7 -1 2 -8 -4 9 -3 6")
    cells = 0
    for alt, tree_lit, andre, simsun in CHAIN_TABLE:
        t = tree_from_literal(tree_lit)
        assert psi(perm_from_text(alt)) == t
        assert omega(t) == perm_from_text(andre)
        assert phi(perm_from_text(andre)) == perm_from_text(simsun)
        cells += 4
    assert cells == 20
    for alt, tree_lit, andre in SIGNED_CHAIN_TABLE:
        t = tree_from_literal(tree_lit)
        assert psi_signed(perm_from_text(alt)) == t
        assert omega_signed(t) == perm_from_text(andre)
    for source, image in SIGNED_SHRINK_TABLE:
        assert phi_signed(perm_from_text(source)) == perm_from_text(image)
    _report(9, "all published worked examples and table cells reproduced")


def test_criterion_10_conjecture_sweep():
    reports = check_conjecture(6)
    assert [r.params["n"] for r in reports] == [1, 2, 3, 4, 5, 6]
    _assert_all_pass(reports)
    assert arnold_table(3).value(3, 1) == count_hetyei_fast(4, 4) == 3
    assert arnold_table(3).value(3, 3) == count_hetyei_fast(4, 2) == 4
    _report(10, "open-conjecture sweep agrees for all n <= 6")


def test_criterion_11_definition_equivalences():
    _assert_all_pass(
        run_checks(
            ["valley-equivalence", "andre-implies-simsun"], n_max_a=8, n_max_b=6
        )
    )
    _report(11, "valley characterization (n <= 7) and containment (n <= 8)")
