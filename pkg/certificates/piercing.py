"""
Точное число протыкания τ(F): минимальное множество, пересекающее каждый член семейства.

Ветвление по самому короткому непротыкнутому множеству, нижняя оценка - жадная
упаковка попарно непересекающихся множеств, верхняя - жадное покрытие.
"""
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from utils.errors import BudgetExceeded, InvalidInput

PIERCING_BUDGET = 1 << 24


def _masks(family: Sequence[Iterable[Hashable]]) -> Tuple[List[Hashable], List[int]]:
    ground: List[Hashable] = []
    position: Dict[Hashable, int] = {}
    masks = []
    for i, members in enumerate(family):
        mask = 0
        for e in members:
            if e not in position:
                position[e] = len(ground)
                ground.append(e)
            mask |= 1 << position[e]
        if not mask:
            raise InvalidInput(f"family member {i} is empty and cannot be pierced")
        masks.append(mask)
    return ground, masks


def _minimal_sets(masks: List[int]) -> List[int]:
    """Надмножества других множеств протыкаются автоматически."""
    unique = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: List[int] = []
    for m in unique:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _undominated(masks: List[int], universe: int) -> List[int]:
    """Элементы, не доминируемые другими (e доминируется f, если все множества с e содержат f)."""
    incidence: Dict[int, int] = {}
    e = 0
    while universe >> e:
        if universe >> e & 1:
            incidence[e] = sum(1 << j for j, m in enumerate(masks) if m >> e & 1)
        e += 1
    keep = []
    for e, inc in incidence.items():
        dominated = any(f != e and inc & other == inc and (inc != other or f < e)
                        for f, other in incidence.items())
        if not dominated:
            keep.append(e)
    return keep


def _greedy(masks: List[int], elements: List[int]) -> List[int]:
    chosen: List[int] = []
    remaining = list(masks)
    while remaining:
        best = max(elements, key=lambda e: (sum(1 for m in remaining if m >> e & 1), -e))
        chosen.append(best)
        remaining = [m for m in remaining if not m >> best & 1]
    return chosen


def _packing(masks: List[int]) -> int:
    used = 0
    count = 0
    for m in sorted(masks, key=lambda m: (m.bit_count(), m)):
        if not m & used:
            used |= m
            count += 1
    return count


def piercing_number(family: Sequence[Iterable[Hashable]],
                    budget: Optional[int] = None) -> Tuple[int, FrozenSet[Hashable]]:
    """(τ(F), минимальное протыкающее множество); τ(∅) = 0."""
    budget = PIERCING_BUDGET if budget is None else budget
    ground, masks = _masks(family)
    if not masks:
        return 0, frozenset()
    sets = _minimal_sets(masks)
    universe = 0
    for m in sets:
        universe |= m
    elements = _undominated(sets, universe)
    allowed = sum(1 << e for e in elements)
    sets = [m & allowed for m in sets]

    best = _greedy(sets, elements)
    nodes = 0

    def search(remaining: List[int], chosen: List[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(nodes, budget, "piercing search")
        if not remaining:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + _packing(remaining) >= len(best):
            return
        pivot = min(remaining, key=lambda m: (m.bit_count(), m))
        options = []
        e = 0
        while pivot >> e:
            if pivot >> e & 1:
                options.append(e)
            e += 1
        options.sort(key=lambda e: (-sum(1 for m in remaining if m >> e & 1), e))
        for e in options:
            chosen.append(e)
            search([m for m in remaining if not m >> e & 1], chosen)
            chosen.pop()

    search(sets, [])
    return len(best), frozenset(ground[e] for e in best)
