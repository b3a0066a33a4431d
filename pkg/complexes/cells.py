"""
Модель клеточного комплекса с инцидентностью над Z₂.

Размерности нумеруются с -1: в приведённом режиме размерность -1 содержит пустую
клетку ∅ (метка ()), и ∂ каждой вершины равна ∅. Пустой (void) комплекс не содержит
вообще ни одной клетки, комплекс {∅} - только пустую.
"""
from typing import Any, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

from algebra.gf2 import GF2Matrix, rank_of_rows, row_reduce
from utils.errors import InvalidInput, InvariantBreach, NotASubcomplex

Label = Hashable
EMPTY_LABEL: Tuple = ()


class ComplexZ2:
    """
    Клеточный комплекс: метки клеток по размерностям и списки граней нечётной инцидентности.

    cells[k] / boundary[k] задаются для k = 0..top; для вершин граница не передаётся,
    она определяется флагом reduced.
    """

    def __init__(self, name: str, cells: Sequence[Sequence[Label]],
                 boundary: Sequence[Sequence[Sequence[int]]], reduced: bool = True,
                 empty_cell: Optional[bool] = None, vertex_names: Optional[Sequence[Any]] = None,
                 check: bool = True):
        self.name = name
        self.reduced = bool(reduced)
        if empty_cell is None:
            empty_cell = self.reduced and len(cells) > 0 and len(cells[0]) > 0
        if empty_cell and not self.reduced:
            raise InvalidInput("the empty cell exists only in reduced mode")
        self.has_empty = bool(empty_cell)

        cell_lists = [tuple(level) for level in cells]
        while cell_lists and not cell_lists[-1]:
            cell_lists.pop()
        self._cells: List[Tuple[Label, ...]] = [(EMPTY_LABEL,) if self.has_empty else ()]
        self._cells.extend(cell_lists)

        faces: List[Tuple[Tuple[int, ...], ...]] = [()]
        for k, level in enumerate(cell_lists):
            if k == 0:
                faces.append(tuple((0,) if self.has_empty else () for _ in level))
            else:
                faces.append(tuple(tuple(sorted(set(b))) for b in boundary[k][:len(level)]))
                if len(faces[-1]) != len(level):
                    raise InvalidInput(f"boundary list of dimension {k} is incomplete")
        self._faces = faces
        self.vertex_names = tuple(vertex_names) if vertex_names is not None else None

        self._index: Dict[int, Dict[Label, int]] = {}
        self._cofaces: Dict[int, Tuple[Tuple[int, ...], ...]] = {}
        if check:
            self._validate()

    # --- размеры -------------------------------------------------------------
    @property
    def top_dim(self) -> int:
        return len(self._cells) - 2 if len(self._cells) > 1 else -1

    def cells(self, k: int) -> Tuple[Label, ...]:
        if k < -1 or k + 1 >= len(self._cells):
            return ()
        return self._cells[k + 1]

    def f(self, k: int) -> int:
        return len(self.cells(k))

    def f_vector(self) -> Tuple[int, ...]:
        return tuple(self.f(k) for k in range(0, self.top_dim + 1))

    def dims(self) -> range:
        return range(-1, self.top_dim + 1)

    # --- инцидентность -------------------------------------------------------
    def index(self, k: int, label: Label) -> int:
        table = self._index.get(k)
        if table is None:
            table = {lab: i for i, lab in enumerate(self.cells(k))}
            self._index[k] = table
        try:
            return table[label]
        except KeyError:
            raise InvalidInput(f"no {k}-cell labelled {label!r} in {self.name}") from None

    def contains(self, k: int, label: Label) -> bool:
        try:
            self.index(k, label)
            return True
        except InvalidInput:
            return False

    def faces(self, k: int, i: int) -> Tuple[int, ...]:
        if k < 0 or k + 1 >= len(self._faces):
            return ()
        return self._faces[k + 1][i]

    def cofaces(self, k: int, i: int) -> Tuple[int, ...]:
        table = self._cofaces.get(k)
        if table is None:
            acc: List[List[int]] = [[] for _ in self.cells(k)]
            for j in range(self.f(k + 1)):
                for face in self.faces(k + 1, j):
                    acc[face].append(j)
            table = tuple(tuple(a) for a in acc)
            self._cofaces[k] = table
        return table[i]

    def degree(self, k: int, i: int) -> int:
        """deg_X(σ): число (k+1)-клеток, содержащих σ."""
        return len(self.cofaces(k, i))

    def boundary_mask(self, k: int, i: int) -> int:
        mask = 0
        for face in self.faces(k, i):
            mask ^= 1 << face
        return mask

    def coboundary_mask(self, k: int, i: int) -> int:
        mask = 0
        for j in self.cofaces(k, i):
            mask ^= 1 << j
        return mask

    def boundary_matrix(self, k: int) -> GF2Matrix:
        """Строка i - граница i-й k-клетки в базисе (k-1)-клеток."""
        return GF2Matrix(self.f(k - 1), tuple(self.boundary_mask(k, i) for i in range(self.f(k))))

    def coboundary_matrix(self, k: int) -> GF2Matrix:
        return GF2Matrix(self.f(k + 1), tuple(self.coboundary_mask(k, i) for i in range(self.f(k))))

    # --- свойства ------------------------------------------------------------
    def is_simplicial(self) -> bool:
        for k in range(0, self.top_dim + 1):
            for i, label in enumerate(self.cells(k)):
                if not isinstance(label, tuple) or len(label) != k + 1:
                    return False
                if not all(isinstance(v, int) for v in label) or list(label) != sorted(set(label)):
                    return False
                if k == 0:
                    continue
                expected = sorted(self.index(k - 1, label[:j] + label[j + 1:])
                                  for j in range(k + 1)
                                  if self.contains(k - 1, label[:j] + label[j + 1:]))
                if len(expected) != k + 1 or list(self.faces(k, i)) != expected:
                    return False
        return True

    def is_void(self) -> bool:
        return self.top_dim == -1 and not self.has_empty

    def simplices(self) -> List[Tuple[int, ...]]:
        """Все симплексы, включая () при наличии пустой клетки."""
        out: List[Tuple[int, ...]] = [EMPTY_LABEL] if self.has_empty else []
        for k in range(0, self.top_dim + 1):
            out.extend(self.cells(k))
        return out

    def same_cells(self, other: "ComplexZ2") -> bool:
        return (self.reduced == other.reduced and self._cells == other._cells
                and self._faces == other._faces)

    def _validate(self) -> None:
        for k in range(0, self.top_dim + 1):
            level = self.cells(k)
            if len(set(level)) != len(level):
                raise InvalidInput(f"duplicate {k}-cell labels in {self.name}")
            lower = self.f(k - 1)
            for i in range(len(level)):
                for face in self.faces(k, i):
                    if not 0 <= face < lower:
                        raise InvalidInput(f"{k}-cell {level[i]!r} refers to a missing face {face}")
        for k in range(1, self.top_dim + 1):
            for i in range(self.f(k)):
                acc = 0
                for face in self.faces(k, i):
                    acc ^= self.boundary_mask(k - 1, face)
                if acc:
                    raise InvariantBreach(f"∂∂ != 0 at {k}-cell {self.cells(k)[i]!r} of {self.name}")

    def __repr__(self) -> str:
        return f"ComplexZ2({self.name!r}, f={self.f_vector()}, reduced={self.reduced})"


class RelativePair:
    """Пара (X, Y): маски клеток подкомплекса Y по размерностям -1..top."""

    def __init__(self, ambient: ComplexZ2, sub_mask: Dict[int, int]):
        self.ambient = ambient
        self.sub_mask = {k: sub_mask.get(k, 0) for k in ambient.dims()}
        for k, mask in self.sub_mask.items():
            if mask >> ambient.f(k):
                raise InvalidInput(f"mask of dimension {k} exceeds the number of cells")
        for k in ambient.dims():
            mask = self.sub_mask[k]
            lower = self.sub_mask.get(k - 1, 0)
            i = 0
            while mask:
                if mask & 1:
                    faces = ambient.boundary_mask(k, i)
                    if faces & ~lower:
                        raise NotASubcomplex(
                            f"{k}-cell {ambient.cells(k)[i]!r} is in Y but not all of its faces are")
                mask >>= 1
                i += 1

    @property
    def name(self) -> str:
        return f"({self.ambient.name}, Y)"

    def in_sub(self, k: int, i: int) -> bool:
        return bool(self.sub_mask.get(k, 0) >> i & 1)

    def subcomplex(self) -> ComplexZ2:
        """Y как самостоятельный комплекс с теми же метками."""
        x = self.ambient
        levels: List[List[Label]] = []
        boundary: List[List[Tuple[int, ...]]] = []
        renumber: Dict[int, Dict[int, int]] = {}
        for k in range(0, x.top_dim + 1):
            kept = [i for i in range(x.f(k)) if self.in_sub(k, i)]
            renumber[k] = {g: j for j, g in enumerate(kept)}
            levels.append([x.cells(k)[i] for i in kept])
            if k == 0:
                boundary.append([])
            else:
                boundary.append([tuple(renumber[k - 1][f] for f in x.faces(k, i)) for i in kept])
        return ComplexZ2(f"sub({x.name})", levels, boundary, reduced=x.reduced,
                         empty_cell=self.in_sub(-1, 0) if x.has_empty else False,
                         vertex_names=x.vertex_names)


def relative_pair(x: ComplexZ2, y_cells: Union[ComplexZ2, Iterable[Tuple[int, Label]]]) -> RelativePair:
    """Y задаётся подкомплексом с теми же метками либо набором пар (dim, label)."""
    masks: Dict[int, int] = {}
    if isinstance(y_cells, ComplexZ2):
        items: List[Tuple[int, Label]] = [(-1, EMPTY_LABEL)] if y_cells.has_empty else []
        for k in range(0, y_cells.top_dim + 1):
            items.extend((k, lab) for lab in y_cells.cells(k))
    else:
        items = list(y_cells)
    for k, label in items:
        if k == -1 and not x.has_empty:
            raise NotASubcomplex("the ambient complex has no empty cell")
        masks[k] = masks.get(k, 0) | 1 << x.index(k, tuple(label) if isinstance(label, list) else label)
    return RelativePair(x, masks)


class ChainView:
    """
    Операторы ∂ и d, ограниченные на клетки вне Y и переиндексированные подряд.

    Для абсолютного комплекса маска пуста. Коцепи пары - функции на клетках X \\ Y.
    """

    def __init__(self, source: Union[ComplexZ2, RelativePair]):
        if isinstance(source, RelativePair):
            self.complex = source.ambient
            self.pair: Optional[RelativePair] = source
        else:
            self.complex = source
            self.pair = None
        self._active: Dict[int, Tuple[int, ...]] = {}
        self._local: Dict[int, Dict[int, int]] = {}
        self._boundary: Dict[int, Tuple[int, ...]] = {}
        self._coboundary: Dict[int, Tuple[int, ...]] = {}
        self._spaces: Dict[Tuple[str, int], Tuple[GF2Matrix, List[int], int]] = {}

    @property
    def name(self) -> str:
        return self.pair.name if self.pair is not None else self.complex.name

    @property
    def top_dim(self) -> int:
        return self.complex.top_dim

    @property
    def reduced(self) -> bool:
        return self.complex.reduced

    def active(self, k: int) -> Tuple[int, ...]:
        cached = self._active.get(k)
        if cached is None:
            total = self.complex.f(k)
            if self.pair is None:
                cached = tuple(range(total))
            else:
                cached = tuple(i for i in range(total) if not self.pair.in_sub(k, i))
            self._active[k] = cached
        return cached

    def local_index(self, k: int) -> Dict[int, int]:
        cached = self._local.get(k)
        if cached is None:
            cached = {g: j for j, g in enumerate(self.active(k))}
            self._local[k] = cached
        return cached

    def dim(self, k: int) -> int:
        return len(self.active(k))

    def labels(self, k: int) -> Tuple[Label, ...]:
        cells = self.complex.cells(k)
        return tuple(cells[i] for i in self.active(k))

    def index_of(self, k: int, label: Label) -> int:
        g = self.complex.index(k, label)
        local = self.local_index(k).get(g)
        if local is None:
            raise InvalidInput(f"{k}-cell {label!r} lies in the subcomplex")
        return local

    def f_vector(self) -> Tuple[int, ...]:
        return tuple(self.dim(k) for k in range(0, self.top_dim + 1))

    def boundary_rows(self, k: int) -> Tuple[int, ...]:
        """Для каждой активной k-клетки - её граница по активным (k-1)-клеткам."""
        cached = self._boundary.get(k)
        if cached is None:
            lower = self.local_index(k - 1)
            rows = []
            for g in self.active(k):
                mask = 0
                for face in self.complex.faces(k, g):
                    j = lower.get(face)
                    if j is not None:
                        mask ^= 1 << j
                rows.append(mask)
            cached = tuple(rows)
            self._boundary[k] = cached
        return cached

    def coboundary_rows(self, k: int) -> Tuple[int, ...]:
        """Транспонирование boundary_rows(k+1): для каждой активной k-клетки - её кограни."""
        cached = self._coboundary.get(k)
        if cached is None:
            out = [0] * self.dim(k)
            for j, mask in enumerate(self.boundary_rows(k + 1)):
                while mask:
                    low = mask & -mask
                    out[low.bit_length() - 1] |= 1 << j
                    mask ^= low
            cached = tuple(out)
            self._coboundary[k] = cached
        return cached

    def coboundary_space(self, k: int) -> Tuple[GF2Matrix, List[int], int]:
        """Ступенчатый базис B^k = im d_{k-1} в координатах C^k."""
        key = ("co", k)
        cached = self._spaces.get(key)
        if cached is None:
            cached = row_reduce(GF2Matrix(self.dim(k), self.coboundary_rows(k - 1)))
            self._spaces[key] = cached
        return cached

    def boundary_space(self, k: int) -> Tuple[GF2Matrix, List[int], int]:
        """Ступенчатый базис B_k = im ∂_{k+1} в координатах C_k."""
        key = ("ho", k)
        cached = self._spaces.get(key)
        if cached is None:
            cached = row_reduce(GF2Matrix(self.dim(k), self.boundary_rows(k + 1)))
            self._spaces[key] = cached
        return cached

    def cohomology_dim(self, k: int) -> int:
        """dim H^k над Z₂ = dim C^k − rank d_k − rank d_{k−1}."""
        return (self.dim(k) - rank_of_rows(self.coboundary_rows(k))
                - rank_of_rows(self.coboundary_rows(k - 1)))

    def homology_dim(self, k: int) -> int:
        return (self.dim(k) - rank_of_rows(self.boundary_rows(k))
                - rank_of_rows(self.boundary_rows(k + 1)))


def as_view(source: Union[ComplexZ2, RelativePair, ChainView]) -> ChainView:
    """Один и тот же ChainView на комплекс или пару: коцепи из разных вызовов сравнимы."""
    if isinstance(source, ChainView):
        return source
    if isinstance(source, (ComplexZ2, RelativePair)):
        view = source.__dict__.get("_chain_view")
        if view is None:
            view = ChainView(source)
            source._chain_view = view
        return view
    raise InvalidInput(f"not a complex: {type(source).__name__}")
