"""
Точные константы Чигера h^k и h_k (абсолютные и относительные) и максимальная косистола λ_k.

Перебор идёт по смежным классам C^k / B^k: представители носятся на свободных
(неопорных) координатах ступенчатого базиса B^k и обходятся Gray-кодом, так что
числитель ‖dφ‖ обновляется одним XOR на шаг. Знаменатель ‖φ‖_csy считается точно
через SpanTable, но только для классов, которые не отсекаются оценками сверху.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from algebra.gf2 import BitVec, SpanTable, flipped_bit, free_coordinates, lex_key, partition, to_gray_code
from complexes.cells import ChainView, as_view
from utils.config import DEFAULT_BUDGET
from utils.errors import BudgetExceeded, DegenerateSpace, InvalidInput

from .chains import Chain, Cochain, GradedVector, Source

PARALLEL_THRESHOLD = 1 << 12

# (длина, свободные координаты, образы свободных координат, базис подпространства,
#  локальные ходы для спуска, начало, конец)
SweepTask = Tuple[int, Tuple[int, ...], Tuple[int, ...], Tuple[int, ...], Tuple[int, ...], int, int]
Candidate = Tuple[int, int, int]  # (numerator, denominator, form)


@dataclass(frozen=True)
class ExpansionResult:
    value: Fraction
    witness: GradedVector
    numerator_norm: int
    denominator_norm: int
    k: int
    mode: str
    budget_used: int

    def to_dict(self) -> Dict[str, Any]:
        view = self.witness.view
        return {
            "value": {"num": self.value.numerator, "den": self.value.denominator},
            "witness_bits": self.witness.bits.to_hex(),
            "numerator_norm": self.numerator_norm,
            "denominator_norm": self.denominator_norm,
            "k": self.k,
            "mode": self.mode,
            "f_vector": list(view.f_vector()),
            "budget_used": self.budget_used,
        }


def _descend(rep: int, moves: Sequence[int]) -> int:
    """Жадный локальный спуск: верхняя оценка минимального веса в классе rep."""
    w = rep.bit_count()
    improved = True
    while improved:
        improved = False
        for g in moves:
            nw = (rep ^ g).bit_count()
            if nw < w:
                rep ^= g
                w = nw
                improved = True
    return w


def _start_state(free: Sequence[int], images: Sequence[int], index: int) -> Tuple[int, int]:
    gray = to_gray_code(index)
    rep = image = 0
    j = 0
    while gray:
        if gray & 1:
            rep |= 1 << free[j]
            image ^= images[j]
        gray >>= 1
        j += 1
    return rep, image


def _better_min(num: int, den: int, form: int, best: Candidate, length: int) -> bool:
    lhs, rhs = num * best[1], best[0] * den
    if lhs != rhs:
        return lhs < rhs
    if num != best[0]:
        return num < best[0]
    return lex_key(form, length) < lex_key(best[2], length)


def _sweep_min(task: SweepTask) -> Optional[Candidate]:
    length, free, images, span_rows, moves, start, stop = task
    table = SpanTable(length, span_rows)
    best: Optional[Candidate] = None
    rep, image = _start_state(free, images, start)
    for i in range(start, stop):
        if i > start:
            j = flipped_bit(i)
            rep ^= 1 << free[j]
            image ^= images[j]
        if not rep:
            continue
        num = image.bit_count()
        if best is not None:
            # num/den >= num/w: отсекаем только строго худшие классы
            if num * best[1] > best[0] * rep.bit_count():
                continue
            if num * best[1] > best[0] * _descend(rep, moves):
                continue
        den, form = table.min_weight(rep)
        if best is None or _better_min(num, den, form, best, length):
            best = (num, den, form)
    return best


def _sweep_max(task: SweepTask) -> Optional[Candidate]:
    length, free, images, span_rows, moves, start, stop = task
    table = SpanTable(length, span_rows)
    best: Optional[Candidate] = None
    rep, image = _start_state(free, images, start)
    for i in range(start, stop):
        if i > start:
            j = flipped_bit(i)
            rep ^= 1 << free[j]
            image ^= images[j]
        if best is not None:
            if rep.bit_count() < best[1] or _descend(rep, moves) < best[1]:
                continue
        den, form = table.min_weight(rep)
        if (best is None or den > best[1]
                or (den == best[1] and lex_key(form, length) < lex_key(best[2], length))):
            best = (image.bit_count(), den, form)
    return best


def _prepare(view: ChainView, k: int, mode: str, budget: int) -> Tuple[SweepTask, int]:
    if not -1 <= k <= view.top_dim:
        raise InvalidInput(f"dimension {k} out of range for {view.name}")
    length = view.dim(k)
    if mode == "co":
        reduced, pivots, rank = view.coboundary_space(k)
        images_all = view.coboundary_rows(k)
        moves = tuple(r for r in view.coboundary_rows(k - 1) if r)
    elif mode == "ho":
        reduced, pivots, rank = view.boundary_space(k)
        images_all = view.boundary_rows(k) if k >= 0 else (0,) * length
        moves = tuple(r for r in view.boundary_rows(k + 1) if r)
    else:
        raise InvalidInput(f"unknown mode {mode!r}, expected 'co' or 'ho'")
    free = tuple(free_coordinates(length, pivots))
    m = len(free)
    if 1 << m > budget:
        raise BudgetExceeded(1 << m, budget, "coset sweep")
    if 1 << rank > budget:
        raise BudgetExceeded(1 << rank, budget, "coset scan")
    task = (length, free, tuple(images_all[c] for c in free), reduced.row_bits, moves, 0, 1 << m)
    return task, (1 << m) + (1 << rank)


def _run(task: SweepTask, worker, workers: int) -> List[Optional[Candidate]]:
    total = task[-1]
    if workers <= 1 or total < PARALLEL_THRESHOLD:
        return [worker(task)]
    parts = [task[:-2] + (a, b) for a, b in partition(total, workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(worker, parts))


def _make(view: ChainView, k: int, mode: str, bits: int):
    cls = Cochain if mode == "co" else Chain
    return cls(view, k, BitVec(view.dim(k), bits))


def _cheeger(source: Source, k: int, mode: str, budget: Optional[int], workers: int) -> ExpansionResult:
    view = as_view(source)
    budget = DEFAULT_BUDGET if budget is None else budget
    task, used = _prepare(view, k, mode, budget)
    if not task[1]:
        space = "C^k = B^k" if mode == "co" else "C_k = B_k"
        raise DegenerateSpace(f"{space} for k={k} on {view.name}: nothing to minimise over")
    best: Optional[Candidate] = None
    for cand in _run(task, _sweep_min, workers):
        if cand is not None and (best is None or _better_min(*cand, best, task[0])):
            best = cand
    assert best is not None
    num, den, form = best
    return ExpansionResult(Fraction(num, den), _make(view, k, mode, form), num, den, k, mode, used)


def cheeger_co(source: Source, k: int, budget: Optional[int] = None, workers: int = 1) -> ExpansionResult:
    """h^k(X, Y) = min ‖dφ‖ / ‖φ‖_csy по φ ∉ B^k."""
    return _cheeger(source, k, "co", budget, workers)


def cheeger_ho(source: Source, k: int, budget: Optional[int] = None, workers: int = 1) -> ExpansionResult:
    """h_k(X, Y) = min ‖∂c‖ / ‖c‖_sys по c ∉ B_k."""
    return _cheeger(source, k, "ho", budget, workers)


def cheeger(source: Source, k: int, mode: str = "co", budget: Optional[int] = None,
            workers: int = 1) -> ExpansionResult:
    return _cheeger(source, k, mode, budget, workers)


def max_cosystole(source: Source, k: int, budget: Optional[int] = None,
                  workers: int = 1) -> Tuple[int, Cochain]:
    """λ_k - радиус покрытия B^k: максимум по классам минимального веса."""
    view = as_view(source)
    budget = DEFAULT_BUDGET if budget is None else budget
    task, _ = _prepare(view, k, "co", budget)
    best: Optional[Candidate] = None
    for cand in _run(task, _sweep_max, workers):
        if cand is None:
            continue
        if (best is None or cand[1] > best[1]
                or (cand[1] == best[1] and lex_key(cand[2], task[0]) < lex_key(best[2], task[0]))):
            best = cand
    assert best is not None
    return best[1], Cochain(view, k, BitVec(view.dim(k), best[2]))
