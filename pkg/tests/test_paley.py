from fractions import Fraction

import numpy as np
import pytest

from paley import (
    CharTable,
    character_sum,
    chung_bound,
    chung_sum_check,
    expected_norm,
    explicit_lower_bound,
    is_odd_prime,
    legendre,
    paley_cochain,
    paley_csy_experiment,
    paley_sweep,
    rows_to_csv,
)
from utils.errors import BudgetExceeded, InvalidInput


@pytest.mark.parametrize("x, p, expected", [(4, 5, 1), (0, 7, 0), (2, 5, -1), (2, 7, 1), (3, 7, -1)])
def test_legendre(x, p, expected):
    assert legendre(x, p) == expected


@pytest.mark.parametrize("p", [2, 9, 1, -3])
def test_non_primes_are_rejected(p):
    assert not is_odd_prime(p)
    with pytest.raises(InvalidInput):
        CharTable(p)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 97])
def test_char_table_is_a_character(p):
    table = CharTable(p)
    assert table.check()
    assert table(p + 1) == 1
    assert table.as_array().sum() == 0


def test_residues_mod_five():
    assert CharTable(5).residues() == [1, 4]


@pytest.mark.parametrize("p, k, expected", [(5, 1, 4), (7, 1, 9), (5, 2, 4), (7, 2, 15)])
def test_expected_norm_values(p, k, expected):
    assert expected_norm(p, k) == expected


@pytest.mark.parametrize("p, k", [(p, k) for p in (3, 5, 7, 11, 13) for k in (1, 2, 3) if k + 1 < p])
def test_paley_cochain_norm_matches_formula(p, k):
    phi = paley_cochain(p, k)
    assert phi.k == k
    assert Fraction(phi.weight()) == expected_norm(p, k)


def test_paley_cochain_support_at_five():
    # пары с суммой 1 или 4 по модулю 5
    assert sorted(paley_cochain(5, 1).support()) == [(0, 1), (0, 4), (1, 3), (2, 4)]


def test_paley_cochain_range():
    with pytest.raises(InvalidInput):
        paley_cochain(5, 0)
    with pytest.raises(InvalidInput):
        paley_cochain(5, 4)
    with pytest.raises(InvalidInput):
        paley_cochain(15, 1)


def test_chung_bound_empty_sets():
    assert chung_bound(5, 1, [0, 3]) == 0


def test_full_grid_character_sum_vanishes():
    table = CharTable(5)
    full = np.ones(5, dtype=bool)
    assert character_sum(table, 1, [full, full]) == 0


def test_character_sum_single_point():
    table = CharTable(7)
    a = np.zeros(7, dtype=bool)
    b = np.zeros(7, dtype=bool)
    # R_0 задаёт x_1, R_1 задаёт x_0: точка (1, 2), сумма 3 - невычет по модулю 7
    a[2] = True
    b[1] = True
    assert character_sum(table, 1, [a, b]) == -1


@pytest.mark.parametrize("p", [5, 7])
def test_chung_sum_check_has_no_violations(p):
    report = chung_sum_check(p, 1, trials=100, seed=0)
    assert report["violations"] == []
    assert report["trials"] == 100
    assert report["max_ratio"] <= 1 + 1e-9


def test_chung_sum_check_on_empty_sets():
    report = chung_sum_check(5, 1, trials=3, density=0.0)
    assert report["violations"] == []
    assert report["max_ratio"] == 0


def test_chung_sum_check_rejects_k_zero():
    with pytest.raises(InvalidInput):
        chung_sum_check(5, 0)


def test_explicit_bound_is_vacuous_at_small_primes():
    bound = explicit_lower_bound(5, 1)
    assert bound.hi <= 0
    assert bound.lo <= bound.hi


@pytest.mark.parametrize("p", [5, 7])
def test_csy_experiment(p):
    row = paley_csy_experiment(p, 1)
    assert row["norm"] == expected_norm(p, 1)
    assert 0 < row["exact_csy"] <= row["norm"]
    assert row["ratio"] == Fraction(row["exact_csy"], row["norm"])
    assert row["vacuous"]


def test_csy_experiment_budget():
    with pytest.raises(BudgetExceeded):
        paley_csy_experiment(7, 1, budget=2)


def test_sweep_marks_rows_over_budget():
    rows = paley_sweep([(5, 1), (7, 1)], budget=2)
    assert [row["exact_csy"] for row in rows] == [None, None]
    assert rows[1]["norm"] == 9


def test_rows_to_csv():
    rows = paley_sweep([(5, 1)])
    lines = rows_to_csv(rows).splitlines()
    assert lines[0] == "p,k,norm,exact_csy,bound,ratio"
    assert lines[1].startswith("5,1,4,")
    assert len(lines) == 2
