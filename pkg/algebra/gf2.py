"""
Линейная алгебра над Z₂ на битовых масках и точный поиск минимального веса в смежном классе.

Координата i вектора хранится в бите i целого числа Python. Лексикографический порядок
везде считает координату 0 старшей.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from utils.config import DEFAULT_BUDGET, SPAN_TABLE_CAP
from utils.errors import BudgetExceeded, InvalidInput


def weight(bits: int) -> int:
    return bits.bit_count()


def lex_key(bits: int, length: int) -> int:
    """Ключ сортировки: координата 0 становится старшим битом."""
    if length == 0:
        return 0
    return int(format(bits, f"0{length}b")[::-1], 2)


def to_gray_code(x: int) -> int:
    return (x >> 1) ^ x


def flipped_bit(i: int) -> int:
    """Какой бит меняется между gray(i-1) и gray(i), i >= 1."""
    return (i & -i).bit_length() - 1


def xor_rows(rows: Sequence[int], selector: int) -> int:
    """Сумма строк rows[j] по всем j, для которых в selector стоит бит j."""
    out = 0
    while selector:
        low = selector & -selector
        out ^= rows[low.bit_length() - 1]
        selector ^= low
    return out


@dataclass(frozen=True)
class BitVec:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0 or self.bits < 0 or self.bits >> self.length:
            raise InvalidInput(f"bits do not fit into length {self.length}")

    @classmethod
    def zeros(cls, length: int) -> "BitVec":
        return cls(length, 0)

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> "BitVec":
        bits = 0
        for i in indices:
            if not 0 <= i < length:
                raise InvalidInput(f"coordinate {i} outside 0..{length - 1}")
            bits ^= 1 << i
        return cls(length, bits)

    @classmethod
    def from_string(cls, text: str) -> "BitVec":
        """'1000' -> координата 0 равна 1."""
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise InvalidInput(f"not a bit string: {text!r}")
        return cls.from_indices(len(text), (i for i, ch in enumerate(text) if ch == "1"))

    @classmethod
    def from_hex(cls, length: int, text: str) -> "BitVec":
        return cls(length, int(text, 16) if text else 0)

    def weight(self) -> int:
        return self.bits.bit_count()

    def indices(self) -> List[int]:
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out

    def lex_key(self) -> int:
        return lex_key(self.bits, self.length)

    def to_string(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.length))

    def to_hex(self) -> str:
        digits = (self.length + 3) // 4
        return format(self.bits, f"0{digits}x") if digits else ""

    def __getitem__(self, i: int) -> int:
        return self.bits >> i & 1

    def __xor__(self, other: "BitVec") -> "BitVec":
        if other.length != self.length:
            raise InvalidInput(f"length mismatch: {self.length} vs {other.length}")
        return BitVec(self.length, self.bits ^ other.bits)

    def __len__(self) -> int:
        return self.length


RowLike = Union[BitVec, int, str]


def _row_bits(row: RowLike, cols: int) -> int:
    if isinstance(row, BitVec):
        if row.length != cols:
            raise InvalidInput(f"row length {row.length} != {cols}")
        return row.bits
    if isinstance(row, str):
        vec = BitVec.from_string(row)
        if vec.length != cols:
            raise InvalidInput(f"row length {vec.length} != {cols}")
        return vec.bits
    return int(row)


@dataclass(frozen=True)
class GF2Matrix:
    """Матрица над Z₂; строка i хранится битовой маской длины cols."""
    cols: int
    row_bits: Tuple[int, ...] = ()

    def __post_init__(self):
        limit = 1 << self.cols
        for r in self.row_bits:
            if r < 0 or r >= limit:
                raise InvalidInput(f"row does not fit into {self.cols} columns")

    @classmethod
    def from_rows(cls, cols: int, rows: Iterable[RowLike]) -> "GF2Matrix":
        return cls(cols, tuple(_row_bits(r, cols) for r in rows))

    @property
    def rows(self) -> int:
        return len(self.row_bits)

    def row(self, i: int) -> BitVec:
        return BitVec(self.cols, self.row_bits[i])

    def transpose(self) -> "GF2Matrix":
        out = [0] * self.cols
        for i, r in enumerate(self.row_bits):
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= 1 << i
                r ^= low
        return GF2Matrix(self.rows, tuple(out))

    def mul_vec(self, v: BitVec) -> BitVec:
        """M·v: бит i результата равен чётности (строка_i & v)."""
        if v.length != self.cols:
            raise InvalidInput(f"vector length {v.length} != {self.cols}")
        bits = 0
        for i, r in enumerate(self.row_bits):
            if (r & v.bits).bit_count() & 1:
                bits |= 1 << i
        return BitVec(self.rows, bits)

    def combine(self, selector: BitVec) -> BitVec:
        """vᵀ·M: сумма строк, выбранных битами selector."""
        if selector.length != self.rows:
            raise InvalidInput(f"selector length {selector.length} != {self.rows}")
        return BitVec(self.cols, xor_rows(self.row_bits, selector.bits))


def row_reduce(m: GF2Matrix) -> Tuple[GF2Matrix, List[int], int]:
    """
    Приведённая ступенчатая форма.

    Опорный столбец строки - её младшая координата; никакая другая строка не имеет
    бита в чужом опорном столбце. Строки упорядочены по возрастанию опорных столбцов.
    """
    basis: List[Tuple[int, int]] = []  # (pivot, row)
    for r in m.row_bits:
        for p, b in basis:
            if r >> p & 1:
                r ^= b
        if not r:
            continue
        pivot = (r & -r).bit_length() - 1
        basis = [(p, b ^ r) if b >> pivot & 1 else (p, b) for p, b in basis]
        basis.append((pivot, r))
    basis.sort()
    pivots = [p for p, _ in basis]
    return GF2Matrix(m.cols, tuple(b for _, b in basis)), pivots, len(pivots)


def reduce_vector(reduced: GF2Matrix, pivots: Sequence[int], bits: int) -> int:
    """Канонический представитель смежного класса: носитель вне опорных столбцов."""
    for p, row in zip(pivots, reduced.row_bits):
        if bits >> p & 1:
            bits ^= row
    return bits


def in_row_space(m: GF2Matrix, v: BitVec) -> bool:
    if v.length != m.cols:
        raise InvalidInput(f"vector length {v.length} != {m.cols}")
    reduced, pivots, _ = row_reduce(m)
    return reduce_vector(reduced, pivots, v.bits) == 0


def rank_of_rows(rows: Iterable[int], cap: Optional[int] = None) -> int:
    """Ранг набора строк; базис по старшему биту. cap - досрочная остановка."""
    basis = {}
    for r in rows:
        while r:
            lead = r.bit_length() - 1
            if lead in basis:
                r ^= basis[lead]
            else:
                basis[lead] = r
                break
        if cap is not None and len(basis) >= cap:
            break
    return len(basis)


@dataclass(frozen=True)
class CosetProblem:
    ambient_dim: int
    basis: GF2Matrix
    rep: BitVec

    def __post_init__(self):
        if self.basis.cols != self.ambient_dim:
            raise InvalidInput("basis width differs from ambient dimension")
        if self.rep.length != self.ambient_dim:
            raise InvalidInput("representative length differs from ambient dimension")
        if rank_of_rows(self.basis.row_bits) != self.basis.rows:
            raise InvalidInput("basis rows are linearly dependent")

    @property
    def rank(self) -> int:
        return self.basis.rows


def _better(w: int, bits: int, best_w: int, best_bits: int, length: int) -> bool:
    if w != best_w:
        return w < best_w
    return lex_key(bits, length) < lex_key(best_bits, length)


def gray_scan(rep: int, rows: Sequence[int], length: int, start: int = 0,
              stop: Optional[int] = None) -> Tuple[int, int]:
    """Минимум веса среди rep + span(rows) по индексам Gray-кода из [start, stop)."""
    if stop is None:
        stop = 1 << len(rows)
    cur = rep ^ xor_rows(rows, to_gray_code(start))
    best_w, best = cur.bit_count(), cur
    best_key = None
    for i in range(start + 1, stop):
        cur ^= rows[(i & -i).bit_length() - 1]
        w = cur.bit_count()
        if w < best_w:
            best_w, best, best_key = w, cur, None
        elif w == best_w:
            if best_key is None:
                best_key = lex_key(best, length)
            key = lex_key(cur, length)
            if key < best_key:
                best, best_key = cur, key
    return best_w, best


def _gray_scan_task(args: Tuple[int, Tuple[int, ...], int, int, int]) -> Tuple[int, int]:
    rep, rows, length, start, stop = args
    return gray_scan(rep, rows, length, start, stop)


def partition(total: int, parts: int) -> List[Tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, a = [], 0
    for j in range(parts):
        b = a + step + (1 if j < extra else 0)
        out.append((a, b))
        a = b
    return out


class SpanTable:
    """
    Оболочка базиса для многократного поиска минимума в смежных классах.

    При length <= 64 и небольшом ранге оболочка хранится массивом uint64, и минимум по
    rep + span считается одним проходом np.bitwise_count; иначе - Gray-код.
    """

    def __init__(self, length: int, rows: Sequence[int], cap: int = SPAN_TABLE_CAP):
        self.length = length
        self.rows = tuple(rows)
        self._table = None
        if length <= 64 and 6 <= len(self.rows) <= cap:
            table = np.zeros(1, dtype=np.uint64)
            for r in self.rows:
                table = np.concatenate((table, table ^ np.uint64(r)))
            self._table = table

    @property
    def size(self) -> int:
        return 1 << len(self.rows)

    def min_weight(self, rep: int) -> Tuple[int, int]:
        if self._table is None:
            return gray_scan(rep, self.rows, self.length)
        members = self._table ^ np.uint64(rep)
        weights = np.bitwise_count(members)
        w = int(weights.min())
        hits = members[weights == w]
        if len(hits) == 1:
            return w, int(hits[0])
        return w, min((int(h) for h in hits), key=lambda b: lex_key(b, self.length))


def coset_min_weight(p: CosetProblem, budget: Optional[int] = None,
                     workers: int = 1) -> Tuple[int, BitVec]:
    budget = DEFAULT_BUDGET if budget is None else budget
    size = 1 << p.rank
    if size > budget:
        raise BudgetExceeded(size, budget, "coset scan")
    rows = p.basis.row_bits
    n = p.ambient_dim
    if workers > 1 and size >= 1 << 12:
        tasks = [(p.rep.bits, rows, n, a, b) for a, b in partition(size, workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_gray_scan_task, tasks))
        w, bits = min(parts, key=lambda t: (t[0], lex_key(t[1], n)))
    else:
        w, bits = SpanTable(n, rows).min_weight(p.rep.bits)
    return w, BitVec(n, bits)


def free_coordinates(ambient_dim: int, pivots: Sequence[int]) -> List[int]:
    taken = set(pivots)
    return [c for c in range(ambient_dim) if c not in taken]


def enumerate_coset_reps(ambient_dim: int, basis: GF2Matrix) -> Iterator[BitVec]:
    """Ровно один представитель на смежный класс, начиная с нулевого, в лексикографическом порядке."""
    if basis.cols != ambient_dim:
        raise InvalidInput("basis width differs from ambient dimension")
    _, pivots, _ = row_reduce(basis)
    free = free_coordinates(ambient_dim, pivots)
    m = len(free)
    for t in range(1 << m):
        bits = 0
        for j, c in enumerate(free):
            if t >> (m - 1 - j) & 1:
                bits |= 1 << c
        yield BitVec(ambient_dim, bits)
