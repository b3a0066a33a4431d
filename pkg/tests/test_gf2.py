from itertools import combinations

import numpy as np
import pytest

from algebra.gf2 import (
    BitVec,
    CosetProblem,
    GF2Matrix,
    SpanTable,
    coset_min_weight,
    enumerate_coset_reps,
    gray_scan,
    in_row_space,
    lex_key,
    rank_of_rows,
    reduce_vector,
    row_reduce,
    weight,
)
from utils.errors import BudgetExceeded, InvalidInput


def _k4_cut_space(independent: bool = True) -> GF2Matrix:
    """Строки - разрезы одиночных вершин K₄ по рёбрам (01, 02, 03, 12, 13, 23)."""
    edges = list(combinations(range(4), 2))
    rows = []
    for v in range(3 if independent else 4):
        rows.append(sum(1 << i for i, e in enumerate(edges) if v in e))
    return GF2Matrix(6, tuple(rows))


def _random_bits(rng, length: int) -> int:
    return sum(1 << i for i, b in enumerate(rng.integers(0, 2, size=length)) if b)


def _independent_rows(rng, length: int, count: int):
    rows = []
    while len(rows) < count:
        candidate = _random_bits(rng, length)
        if rank_of_rows(rows + [candidate]) == len(rows) + 1:
            rows.append(candidate)
    return rows


def test_bitvec_string_puts_coordinate_zero_first():
    v = BitVec.from_string("1000")
    assert v.bits == 1
    assert v.indices() == [0]
    assert v.to_string() == "1000"


def test_bitvec_rejects_bits_beyond_length():
    with pytest.raises(InvalidInput):
        BitVec(3, 0b1000)
    with pytest.raises(InvalidInput):
        BitVec.from_indices(3, [3])
    with pytest.raises(InvalidInput):
        BitVec.from_string("10a")


def test_bitvec_hex_and_xor():
    a = BitVec.from_string("1100")
    b = BitVec.from_string("0110")
    assert (a ^ b).to_string() == "1010"
    assert BitVec.from_hex(4, a.to_hex()) == a
    with pytest.raises(InvalidInput):
        a ^ BitVec.zeros(5)


def test_lex_key_orders_by_coordinate_zero():
    # координата 0 старшая: 0100 идёт раньше 1000
    assert lex_key(BitVec.from_string("0100").bits, 4) < lex_key(BitVec.from_string("1000").bits, 4)


def test_row_reduce_duplicate_rows():
    _, pivots, rank = row_reduce(GF2Matrix.from_rows(2, ["11", "11"]))
    assert rank == 1
    assert pivots == [0]


def test_row_reduce_identity():
    _, pivots, rank = row_reduce(GF2Matrix.from_rows(3, ["100", "010", "001"]))
    assert rank == 3
    assert pivots == [0, 1, 2]


def test_row_reduce_triangle_incidence(circle):
    _, _, rank = row_reduce(circle.boundary_matrix(1))
    assert rank == 2


def test_reduced_rows_do_not_share_pivot_columns(rng):
    rows = _independent_rows(rng, 12, 6)
    reduced, pivots, rank = row_reduce(GF2Matrix(12, tuple(rows)))
    assert rank == 6
    for p, row in zip(pivots, reduced.row_bits):
        others = [r for q, r in zip(pivots, reduced.row_bits) if q != p]
        assert row >> p & 1
        assert all(not r >> p & 1 for r in others)


def test_in_row_space_examples():
    assert in_row_space(GF2Matrix.from_rows(3, ["110", "011"]), BitVec.from_string("101"))
    assert not in_row_space(GF2Matrix.from_rows(3, ["110"]), BitVec.from_string("001"))


def test_four_cycle_is_a_cut_of_k4():
    # рёбра 01, 12, 23, 03 -> индексы 0, 3, 5, 2
    cycle = BitVec.from_indices(6, [0, 3, 5, 2])
    assert in_row_space(_k4_cut_space(independent=False), cycle)


def test_reduce_vector_is_canonical_on_a_coset(rng):
    rows = _independent_rows(rng, 10, 4)
    reduced, pivots, _ = row_reduce(GF2Matrix(10, tuple(rows)))
    rep = _random_bits(rng, 10)
    shifted = rep ^ rows[0] ^ rows[2]
    assert reduce_vector(reduced, pivots, rep) == reduce_vector(reduced, pivots, shifted)


def test_coset_min_weight_single_row_basis():
    problem = CosetProblem(4, GF2Matrix.from_rows(4, ["1111"]), BitVec.from_string("1000"))
    w, bits = coset_min_weight(problem)
    assert w == 1
    assert bits.to_string() == "1000"


def test_coset_min_weight_empty_basis():
    problem = CosetProblem(4, GF2Matrix.from_rows(4, []), BitVec.from_string("0110"))
    w, bits = coset_min_weight(problem)
    assert (w, bits.to_string()) == (2, "0110")


def test_triangle_needs_two_edges_modulo_cuts():
    triangle = BitVec.from_indices(6, [0, 1, 3])
    w, bits = coset_min_weight(CosetProblem(6, _k4_cut_space(), triangle))
    assert w == 2
    assert in_row_space(_k4_cut_space(), bits ^ triangle)


def test_coset_problem_rejects_dependent_rows():
    with pytest.raises(InvalidInput):
        CosetProblem(6, _k4_cut_space(independent=False), BitVec.zeros(6))


def test_coset_min_weight_respects_budget():
    problem = CosetProblem(6, _k4_cut_space(), BitVec.zeros(6))
    with pytest.raises(BudgetExceeded) as info:
        coset_min_weight(problem, budget=4)
    assert info.value.needed == 8
    assert info.value.exit_code == 3


def test_span_table_agrees_with_gray_scan(rng):
    for _ in range(20):
        length = int(rng.integers(8, 40))
        rows = _independent_rows(rng, length, int(rng.integers(6, 9)))
        table = SpanTable(length, rows)
        for _ in range(5):
            rep = _random_bits(rng, length)
            assert table.min_weight(rep) == gray_scan(rep, rows, length)


def test_parallel_scan_matches_serial(rng):
    length = 30
    rows = _independent_rows(rng, length, 12)
    problem = CosetProblem(length, GF2Matrix(length, tuple(rows)), BitVec(length, _random_bits(rng, length)))
    assert coset_min_weight(problem, workers=2) == coset_min_weight(problem, workers=1)


def test_enumerate_coset_reps_small_cases():
    reps = [v.to_string() for v in enumerate_coset_reps(2, GF2Matrix.from_rows(2, ["11"]))]
    assert reps == ["00", "01"]
    assert len(list(enumerate_coset_reps(3, GF2Matrix.from_rows(3, [])))) == 8


def test_enumerate_coset_reps_one_per_coset():
    basis = _k4_cut_space()
    reps = list(enumerate_coset_reps(6, basis))
    assert len(reps) == 8
    assert reps[0].bits == 0
    for a, b in combinations(reps, 2):
        assert not in_row_space(basis, a ^ b)


def test_rank_of_rows_with_cap():
    rows = [0b001, 0b010, 0b011, 0b100]
    assert rank_of_rows(rows) == 3
    assert rank_of_rows(rows, cap=2) == 2


@pytest.mark.parametrize("seed", range(20))
def test_coset_min_weight_against_every_member(seed):
    rng = np.random.default_rng(seed)
    length = int(rng.integers(4, 13))
    rows = _independent_rows(rng, length, int(rng.integers(1, min(length, 6) + 1)))
    rep = _random_bits(rng, length)
    members = set()
    for size in range(len(rows) + 1):
        for chosen in combinations(rows, size):
            v = rep
            for r in chosen:
                v ^= r
            members.add(v)
    assert len(members) == 1 << len(rows)
    w, best = coset_min_weight(CosetProblem(length, GF2Matrix(length, tuple(rows)), BitVec(length, rep)))
    assert w == min(bin(v).count("1") for v in members)
    assert best.bits in members
    assert best.weight() == w


def test_symmetric_difference_inequality(rng):
    for _ in range(1000):
        length = int(rng.integers(1, 65))
        a, b, x = (_random_bits(rng, length) for _ in range(3))
        assert weight(a ^ x) + weight(b ^ x) <= weight(a) + weight(b) + 2 * weight(a ^ b ^ x)
