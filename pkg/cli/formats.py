"""
Файловые форматы: комплекс hdx/1, коцепь, записи результатов.

Каноническая сериализация - json с sort_keys и без пробелов; хэш - 64-битный FNV-1a
от её байтов в UTF-8.
"""
import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from algebra.gf2 import BitVec
from complexes.cells import ComplexZ2, as_view
from expansion.chains import Chain, Cochain, GradedVector
from utils.errors import InvalidInput, InvariantBreach

SCHEMA = "hdx/1"
FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3
MASK64 = (1 << 64) - 1


def canonical_json(value: Any) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def fnv1a64(data: bytes) -> str:
    h = FNV_OFFSET
    for byte in data:
        h ^= byte
        h = (h * FNV_PRIME) & MASK64
    return f"{h:016x}"


def _encode_label(label: Any) -> Any:
    if isinstance(label, tuple):
        return [_encode_label(x) for x in label]
    return label


def _decode_label(label: Any) -> Any:
    if isinstance(label, list):
        return tuple(_decode_label(x) for x in label)
    return label


def complex_to_dict(x: ComplexZ2) -> Dict[str, Any]:
    """{schema, name, dims, cells: [[dim, label, [индексы граней]]...], reduced}."""
    cells: List[List[Any]] = []
    if x.has_empty:
        cells.append([-1, [], []])
    for k in range(0, x.top_dim + 1):
        for i, label in enumerate(x.cells(k)):
            faces = [] if k == 0 else list(x.faces(k, i))
            cells.append([k, _encode_label(label), faces])
    data: Dict[str, Any] = {
        "schema": SCHEMA,
        "name": x.name,
        "dims": x.top_dim,
        "f_vector": list(x.f_vector()),
        "cells": cells,
        "reduced": x.reduced,
    }
    if x.vertex_names is not None:
        data["vertex_names"] = [_encode_label(v) for v in x.vertex_names]
    return data


def complex_from_dict(data: Dict[str, Any]) -> ComplexZ2:
    if not isinstance(data, dict) or data.get("schema") != SCHEMA:
        raise InvalidInput(f"not an {SCHEMA} complex")
    try:
        top = int(data["dims"])
        reduced = bool(data["reduced"])
        levels: List[List[Any]] = [[] for _ in range(top + 1)]
        boundary: List[List[Sequence[int]]] = [[] for _ in range(top + 1)]
        has_empty = False
        for dim, label, faces in data["cells"]:
            if dim == -1:
                has_empty = True
                continue
            if not 0 <= dim <= top:
                raise InvalidInput(f"cell dimension {dim} outside 0..{top}")
            levels[dim].append(_decode_label(label))
            if dim > 0:
                boundary[dim].append(tuple(faces))
        names = data.get("vertex_names")
        vertex_names = [_decode_label(v) for v in names] if names is not None else None
        return ComplexZ2(str(data["name"]), levels, boundary, reduced=reduced,
                         empty_cell=has_empty, vertex_names=vertex_names)
    except InvalidInput:
        raise
    except InvariantBreach as e:
        raise InvalidInput(f"complex file is not a chain complex: {e}") from e
    except (KeyError, IndexError, TypeError, ValueError) as e:
        raise InvalidInput(f"malformed complex file: {e}") from e


def complex_hash(x: ComplexZ2) -> str:
    return fnv1a64(canonical_json(complex_to_dict(x)).encode("utf-8"))


def dumps_complex(x: ComplexZ2) -> str:
    return canonical_json(complex_to_dict(x)) + "\n"


def loads_complex(text: str) -> ComplexZ2:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInput(f"complex file is not JSON: {e}") from e
    return complex_from_dict(data)


def vector_to_dict(v: GradedVector) -> Dict[str, Any]:
    x = v.view.complex
    data = {"complex_hash": complex_hash(x), "dim": v.k, "bits_hex": v.bits.to_hex()}
    if isinstance(v, Chain):
        data["kind"] = "chain"
    return data


def vector_from_dict(data: Dict[str, Any], x: ComplexZ2) -> GradedVector:
    """Коцепь (или цепь при kind=chain) на x; хэш комплекса должен совпасть."""
    try:
        expected, k, text = data["complex_hash"], int(data["dim"]), str(data["bits_hex"])
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidInput(f"malformed cochain file: {e}") from e
    if expected != complex_hash(x):
        raise InvalidInput(f"cochain was written for complex {expected}, got {complex_hash(x)}")
    view = as_view(x)
    try:
        bits = BitVec.from_hex(view.dim(k), text)
    except ValueError as e:
        raise InvalidInput(f"bad bits_hex for {view.dim(k)} cells: {e}") from e
    cls = Chain if data.get("kind") == "chain" else Cochain
    return cls(view, k, bits)


def read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise InvalidInput(f"cannot read {path}: {e}") from e


def load_complex(path: str) -> ComplexZ2:
    return loads_complex(read_text(path))


def load_vector(path: str, x: ComplexZ2) -> GradedVector:
    try:
        data = json.loads(read_text(path))
    except json.JSONDecodeError as e:
        raise InvalidInput(f"cochain file is not JSON: {e}") from e
    return vector_from_dict(data, x)


def write_output(text: str, path: Optional[str]) -> None:
    """Вывод пишется один раз: в файл или в stdout."""
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        print(text, end="")


def to_plain(value: Any) -> Any:
    """Приводит результат к JSON: Fraction → {num, den}, кортежи → списки, векторы → hex."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, GradedVector):
        return {"dim": value.k, "bits_hex": value.bits.to_hex(), "weight": value.weight()}
    if hasattr(value, "to_dict"):
        return to_plain(value.to_dict())
    if isinstance(value, dict):
        return {str(key): to_plain(v) for key, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value, key=repr) if isinstance(value, (set, frozenset)) else value
        return [to_plain(v) for v in items]
    return str(value)


def _flat(value: Any) -> str:
    if isinstance(value, dict) and set(value) == {"num", "den"}:
        return f"{value['num']}/{value['den']}"
    if isinstance(value, (dict, list)):
        return canonical_json(value)
    return "" if value is None else str(value)


def render(record: Dict[str, Any], fmt: str) -> str:
    """json - канонический JSON; csv - строки record['rows'] или одна строка; text - ключ: значение."""
    plain = to_plain(record)
    if fmt == "json":
        return canonical_json(plain) + "\n"
    rows = plain.get("rows") if isinstance(plain.get("rows"), list) else [plain]
    if fmt == "csv":
        fields: List[str] = []
        for row in rows:
            for key in row:
                if key not in fields:
                    fields.append(key)
        out = io.StringIO()
        writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({key: _flat(row.get(key)) for key in fields})
        return out.getvalue()
    lines = [f"{key}: {_flat(value)}" for key, value in sorted(plain.items())]
    return "\n".join(lines) + "\n"
