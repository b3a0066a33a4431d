"""
Коцепи Пэли φ_k на Δ^{p-1} и эксперимент «насколько φ_k близка к косистоле».
"""
import csv
import io
from fractions import Fraction
from math import comb, factorial
from typing import Any, Dict, Iterable, List, Optional

from complexes.builders import simplex_skeleton
from expansion.bounds import Interval, root_2k
from expansion.chains import Cochain
from expansion.norms import cosystolic_norm
from utils.errors import BudgetExceeded, InvalidInput

from .characters import CharTable, _require_odd_prime

CSV_FIELDS = ["p", "k", "norm", "exact_csy", "bound", "ratio"]
PALEY_CELL_CAP = 1 << 20


def paley_cochain(p: int, k: int) -> Cochain:
    """φ_k(σ) = 1, если χ(x_0 + ⋯ + x_k) = 1; живёт на (k+1)-остове Δ^{p-1}."""
    _require_odd_prime(p)
    if k < 1 or k + 1 >= p:
        raise InvalidInput(f"paley cochain needs 1 <= k and k+1 < p, got p={p}, k={k}")
    if comb(p, k + 2) > PALEY_CELL_CAP:
        raise InvalidInput(f"C({p},{k + 2}) cells exceed the desk-scale cap")
    chi = CharTable(p)
    x = simplex_skeleton(p, k + 1)
    labels = [s for s in x.cells(k) if chi(sum(s)) == 1]
    return Cochain.from_labels(x, k, labels)


def expected_norm(p: int, k: int) -> Fraction:
    """(p-1)/(2p) · C(p, k+1): суммы k+1 различных элементов F_p равномерно распределены."""
    return Fraction(p - 1, 2 * p) * comb(p, k + 1)


def explicit_lower_bound(p: int, k: int) -> Interval:
    """(p-1)/(2p)·C(p,k+1) − (2^{k+1}/(k+1)!)·p^{k+1-2^{-k}}, включение отрезком."""
    root = root_2k(p, k)
    power = Interval(Fraction(p ** (k + 1)) / root.hi, Fraction(p ** (k + 1)) / root.lo)
    return expected_norm(p, k) - Fraction(2 ** (k + 1), factorial(k + 1)) * power


def paley_csy_experiment(p: int, k: int, budget: Optional[int] = None,
                         workers: int = 1) -> Dict[str, Any]:
    """Точная ‖φ_k‖_csy перебором смежного класса, явная нижняя оценка и отношение csy/‖φ_k‖."""
    phi = paley_cochain(p, k)
    exact, form = cosystolic_norm(phi, budget, workers)
    bound = explicit_lower_bound(p, k)
    return {
        "p": p,
        "k": k,
        "norm": phi.weight(),
        "exact_csy": exact,
        "bound": bound,
        "vacuous": bound.hi <= 0,
        "ratio": Fraction(exact, phi.weight()) if phi.weight() else None,
        "cosystolic_form": form.bits.to_hex(),
    }


def paley_sweep(pairs: Iterable[tuple], budget: Optional[int] = None) -> List[Dict[str, Any]]:
    """Строки эксперимента; пары, не помещающиеся в бюджет, помечаются exact_csy=None."""
    rows = []
    for p, k in pairs:
        try:
            rows.append(paley_csy_experiment(p, k, budget))
        except BudgetExceeded:
            phi = paley_cochain(p, k)
            rows.append({"p": p, "k": k, "norm": phi.weight(), "exact_csy": None,
                         "bound": explicit_lower_bound(p, k), "vacuous": None, "ratio": None})
    return rows


def rows_to_csv(rows: List[Dict[str, Any]]) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        bound = row["bound"]
        writer.writerow({
            "p": row["p"],
            "k": row["k"],
            "norm": row["norm"],
            "exact_csy": "" if row["exact_csy"] is None else row["exact_csy"],
            "bound": f"{float(bound.lo):.6f}",
            "ratio": "" if row["ratio"] is None else f"{float(row['ratio']):.6f}",
        })
    return out.getvalue()
