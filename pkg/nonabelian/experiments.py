"""
Эксперименты на случайных 2-комплексах Y(n, p):
ограниченные фактор-группы π₁ (через H¹(Y; G) для простых G порядка ≤ n^c)
и порог обращения в ноль H¹(Y; Z₂).
"""
import csv
import io
import math
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from complexes.cells import as_view
from complexes.sampling import random_Ynp
from utils.errors import BudgetExceeded, InvalidInput
from utils.notifier import get_notifier

from .groups import FiniteGroup, simple_groups
from .orbits import has_nontrivial_h1

REPORT_FIELDS = ["n", "p", "group", "trials", "fraction_nontrivial", "skipped"]


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Отдельный генератор на (seed, trial): результат не зависит от порядка испытаний."""
    return np.random.default_rng(np.random.SeedSequence([seed, trial]))


def quotient_probability(n: int, c: float) -> float:
    """p = min(1, (6 + 7c)·ln n / n)."""
    return min(1.0, (6 + 7 * c) * math.log(n) / n)


def quotient_experiment(n: int, c: float, trials: int, seed: int = 0, budget: Optional[int] = None,
                        p: Optional[float] = None,
                        groups: Optional[Sequence[FiniteGroup]] = None) -> Dict[str, Any]:
    """
    Доля Y(n, p), у которых H¹(Y; G) нетривиальна хотя бы для одной простой G порядка ≤ n^c.

    Испытания, не уложившиеся в бюджет, пропускаются и считаются в skipped.
    """
    if n < 3 or trials < 1:
        raise InvalidInput("quotient experiment needs n >= 3 and trials >= 1")
    notifier = get_notifier()
    p = quotient_probability(n, c) if p is None else p
    cap = math.floor(n ** c)
    groups = list(simple_groups(cap)) if groups is None else list(groups)
    nontrivial = 0
    skipped = 0
    per_group = {g.name: 0 for g in groups}
    for trial in range(trials):
        y = random_Ynp(n, p, trial_rng(seed, trial))
        try:
            hits = [g.name for g in groups if has_nontrivial_h1(y, g, budget)]
        except BudgetExceeded as e:
            skipped += 1
            notifier.log(f"⚠️ Y({n},{p:.3f}) trial {trial} skipped: {e}")
            continue
        for name in hits:
            per_group[name] += 1
        if hits:
            nontrivial += 1
    done = trials - skipped
    notifier.log(f"✅ quotient experiment n={n} p={p:.3f}: {nontrivial}/{done} nontrivial, {skipped} skipped")
    return {
        "n": n,
        "c": c,
        "p": p,
        "max_order": cap,
        "groups": [g.name for g in groups],
        "trials": trials,
        "skipped": skipped,
        "nontrivial": nontrivial,
        "fraction_nontrivial": Fraction(nontrivial, done) if done else None,
        "per_group": per_group,
    }


def threshold_sweep(n: int, ps: Sequence[float], trials: int, seed: int = 0) -> List[Dict[str, Any]]:
    """Эмпирическая P[H¹(Y; Z₂) = 0] для каждого p по рангу над GF(2)."""
    notifier = get_notifier()
    rows = []
    for i, p in enumerate(ps):
        vanishing = 0
        for trial in range(trials):
            rng = np.random.default_rng(np.random.SeedSequence([seed, i, trial]))
            y = random_Ynp(n, p, rng)
            if as_view(y).cohomology_dim(1) == 0:
                vanishing += 1
        rows.append({"n": n, "p": p, "trials": trials, "vanishing": vanishing,
                     "fraction": Fraction(vanishing, trials)})
        notifier.log(f"✅ threshold n={n} p={p:.4f}: {vanishing}/{trials} with H1 = 0")
    return rows


def homology_threshold_points(n: int, offset: float = 4.0) -> List[float]:
    """p = (2 ln n ∓ offset)/n по обе стороны порога."""
    base = 2 * math.log(n)
    return [max(0.0, (base - offset) / n), min(1.0, (base + offset) / n)]


def report_rows(report: Dict[str, Any]) -> List[Dict[str, Any]]:
    """Строки n, p, group, trials, fraction_nontrivial, skipped по группам отчёта."""
    done = report["trials"] - report["skipped"]
    rows = []
    for name, hits in report["per_group"].items():
        rows.append({
            "n": report["n"],
            "p": report["p"],
            "group": name,
            "trials": report["trials"],
            "fraction_nontrivial": float(Fraction(hits, done)) if done else "",
            "skipped": report["skipped"],
        })
    return rows


def rows_to_csv(rows: List[Dict[str, Any]], fields: Sequence[str] = REPORT_FIELDS) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=list(fields), lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return out.getvalue()
