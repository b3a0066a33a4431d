"""
Наборы проверок для `verify`: каждый возвращает список критериев
{suite, criterion, passed, detail}.
"""
from fractions import Fraction
from math import comb
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from algebra.gf2 import BitVec, CosetProblem, GF2Matrix, coset_min_weight, lex_key, rank_of_rows, weight, xor_rows
from certificates.detection import cycle_detection_bound, hypercube_witness, tripartite_example
from certificates.homotopy import uniform_bound
from certificates.lattices import (
    boolean_automorphisms,
    is_geometric,
    lattice_bound,
    lattice_homotopy_scheme,
    lattice_scheme,
    subspace_automorphisms,
)
from complexes.builders import (
    coxeter_An,
    coxeter_Bn,
    from_simplices,
    hypercube,
    order_complex,
    product_with_simplex,
    simplex_skeleton,
)
from complexes.cells import ComplexZ2, as_view
from complexes.duality import alexander_dual, dual_pair
from complexes.posets import boolean_lattice, proper_part, subspace_lattice
from complexes.sampling import random_Ynp, random_subcomplex
from expansion.bounds import bound_blam, verify_product_bound
from expansion.chains import Chain, alexander_map, boundary, coboundary, evaluate
from expansion.cheeger import cheeger_co, cheeger_ho, max_cosystole
from expansion.norms import cosystolic_norm, random_chain, random_cochain, random_cosystole_stats, systolic_norm
from nonabelian import cochains as nonab
from nonabelian.experiments import homology_threshold_points, threshold_sweep, trial_rng
from nonabelian.groups import cyclic_group, symmetric_group
from nonabelian.orbits import bw1_check, h1_orbits, hom_pi1_orbits
from paley.characters import chung_sum_check
from paley.cochains import expected_norm, paley_cochain, paley_csy_experiment
from pseudomanifold.coxeter import coxeter_a_value, coxeter_b_value, gallery, glued_triangles, phi_n_report
from pseudomanifold.flip import (
    cheeger_top_via_diameter,
    flip_graph,
    geodesic_cochain,
    odd_degree_identity_holds,
)
from utils.errors import BudgetExceeded, DegenerateSpace, FillIdentityViolated, HypothesisFailed
from utils.notifier import get_notifier

from .config import RunConfig

Criterion = Dict[str, Any]

HYPERCUBE_CASES = [(2, 0), (2, 1), (3, 0), (3, 1), (3, 2), (4, 2), (4, 3)]
# h_k(Q_d) по цепям: геодезическая между противоположными вершинами даёт 2/d при k=1,
# половина граней 4-куба с общим знаком даёт 12/4 при k=3
HYPERCUBE_HO_CASES = [
    (2, 0, Fraction(1)), (2, 1, Fraction(1)), (3, 0, Fraction(1)), (3, 1, Fraction(2, 3)),
    (3, 2, Fraction(2)), (4, 2, Fraction(4, 3)), (4, 3, Fraction(3)),
]
PALEY_PRIMES = [3, 5, 7, 11, 13]
PRODUCT_CASES = [("boundary-triangle", 2, 0), ("vertex", 3, 0), ("Q2", 2, 1)]


def _criterion(suite: str, name: str, passed: bool, **detail: Any) -> Criterion:
    return {"suite": suite, "criterion": name, "passed": bool(passed), "detail": detail}


def _h_or_none(fn, source, k: int, budget: int, workers: int) -> Optional[Fraction]:
    """Значение константы или None, если минимизировать не по чему (h = ∞)."""
    view = as_view(source)
    if not -1 <= k <= view.top_dim:
        return None
    try:
        return fn(view, k, budget, workers).value
    except DegenerateSpace:
        return None


def suite_hypercube(cfg: RunConfig) -> List[Criterion]:
    out = []
    for d, k in HYPERCUBE_CASES:
        co = cheeger_co(hypercube(d), k, cfg.budget, cfg.threads).value
        out.append(_criterion("hypercube", f"h^{k}(Q{d}) = 1", co == 1, co=co))
    for d, k, expected in HYPERCUBE_HO_CASES:
        ho = cheeger_ho(hypercube(d), k, cfg.budget, cfg.threads).value
        out.append(_criterion("hypercube", f"h_{k}(Q{d}) = {expected}", ho == expected, ho=ho))
    for d, k in [(3, 0), (3, 1), (4, 1)]:
        _, phi, fam = hypercube_witness(d, k)
        tau, _ = cycle_detection_bound(phi, fam)
        expected = 2 ** (d - k - 1)
        d_phi = coboundary(phi).weight()
        out.append(_criterion("hypercube", f"witness on Q{d}, k={k}: csy = |dE| = {expected}",
                              tau == expected and d_phi == expected, detection=tau, coboundary=d_phi))
    return out


def suite_coxeter_a(cfg: RunConfig) -> List[Criterion]:
    out = []
    for n in (4, 5, 6):
        value = cheeger_top_via_diameter(coxeter_An(n, cfg.budget))
        out.append(_criterion("coxeter-a", f"2/diam = 4/(n(n-1)) at n={n}", value == coxeter_a_value(n),
                              value=value))
    exact = cheeger_co(coxeter_An(4, cfg.budget), 1, cfg.budget, cfg.threads).value
    out.append(_criterion("coxeter-a", "coset scan agrees at n=4", exact == coxeter_a_value(4), value=exact))
    return out


def suite_coxeter_b(cfg: RunConfig) -> List[Criterion]:
    out = []
    for n in (2, 3):
        value = cheeger_top_via_diameter(coxeter_Bn(n, cfg.budget))
        out.append(_criterion("coxeter-b", f"2/diam = 2/n^2 at n={n}", value == coxeter_b_value(n),
                              value=value))
    return out


def suite_phi_n(cfg: RunConfig) -> List[Criterion]:
    out = []
    for n in (4, 5):
        report = phi_n_report(n, cfg.budget, with_cosystole=(n == 4))
        ok = (report["norm"] == comb(n, 2) and report["coboundary_norm"] == 2
              and report["coboundary_support_ok"])
        out.append(_criterion("phi-n", f"|phi_{n}| = C({n},2), |d phi_{n}| = 2", ok,
                              norm=report["norm"], coboundary=report["coboundary_norm"]))
        if n == 4:
            csy = report["cosystolic_norm"]
            out.append(_criterion("phi-n", "phi_4 is a cosystole", csy == comb(n, 2), cosystolic_norm=csy))
    return out


def suite_duality(cfg: RunConfig) -> List[Criterion]:
    n = cfg.option("n", 6)
    trials = cfg.option("trials", 20)
    void = from_simplices("void", [])
    equal = checked = skipped = 0
    mismatches = []
    for trial in range(trials):
        rng = trial_rng(cfg.seed, trial)
        x = random_subcomplex(n, rng)
        target = as_view(dual_pair(x, void, n))
        trial_ok = True
        for k in range(-1, n - 1):
            try:
                left = _h_or_none(cheeger_ho, x, k, cfg.budget, cfg.threads)
                right = _h_or_none(cheeger_co, target, n - k - 2, cfg.budget, cfg.threads)
            except BudgetExceeded:
                skipped += 1
                continue
            checked += 1
            if left != right:
                trial_ok = False
                mismatches.append({"trial": trial, "k": k, "h_k": left, "h_dual": right})
            if as_view(x).dim(k):
                c = random_chain(x, k, rng)
                image = alexander_map(c, n, target)
                try:
                    same_norm = image.weight() == c.weight()
                    same_sys = systolic_norm(c, cfg.budget)[0] == cosystolic_norm(image, cfg.budget)[0]
                except BudgetExceeded:
                    continue
                if not (same_norm and same_sys):
                    trial_ok = False
                    mismatches.append({"trial": trial, "k": k, "isometry": False})
        if trial_ok:
            equal += 1
    return [
        _criterion("duality", f"h_k(X) = h^(n-k-2)(D_n, X*) on {trials} random X", not mismatches,
                   trials=trials, agreeing=equal, checked=checked, skipped=skipped, mismatches=mismatches[:5]),
        _criterion("duality", "dual of the dual is the original complex",
                   all(alexander_dual(alexander_dual(random_subcomplex(n, trial_rng(cfg.seed, t)), n), n)
                       .same_cells(random_subcomplex(n, trial_rng(cfg.seed, t))) for t in range(trials))),
    ]


def suite_cycle_detection(cfg: RunConfig) -> List[Criterion]:
    _, phi, fam = tripartite_example(2, 1)
    tau, _ = cycle_detection_bound(phi, fam)
    csy, _ = cosystolic_norm(phi, cfg.budget, cfg.threads)
    return [_criterion("cycle-detection", "tripartite m=2, k=1: detection bound = csy = 4",
                       tau == 4 and csy == 4, detection=tau, cosystolic_norm=csy)]


def suite_lattice(cfg: RunConfig) -> List[Criterion]:
    out = []
    fano = subspace_lattice(2, 3)
    fano_gens = subspace_automorphisms(2, 3)
    cases = [("A2(F2)", fano, fano_gens), ("Boolean[4]", boolean_lattice(4), boolean_automorphisms(4))]
    schemes = {}
    for name, lattice, gens in cases:
        out.append(_criterion("lattice", f"{name} is geometric", is_geometric(lattice)))
        ls = lattice_scheme(lattice, generators=gens)
        for k in range(0, ls.rank - 2):
            scheme = lattice_homotopy_scheme(ls, k)
            try:
                scheme.validate()
                ok, detail = True, ""
            except FillIdentityViolated as e:
                ok, detail = False, str(e)
            schemes[(name, k)] = scheme
            out.append(_criterion("lattice", f"fill identity on {name}, k={k}", ok,
                                  orderings=len(ls.orderings), error=detail))
    bound = lattice_bound(fano, fano_gens)
    out.append(_criterion("lattice", "lattice_bound(A2(F2)) = 1/2", bound == Fraction(1, 2), value=bound))
    boolean_bound = lattice_bound(boolean_lattice(3), boolean_automorphisms(3))
    out.append(_criterion("lattice", "lattice_bound(Boolean[3]) = 1/3", boolean_bound == Fraction(1, 3),
                          value=boolean_bound))
    h0 = cheeger_co(order_complex(proper_part(fano)), 0, cfg.budget, cfg.threads).value
    out.append(_criterion("lattice", "exact h^0 of the A2(F2) order complex >= 1/2", h0 >= bound, value=h0))
    certified = uniform_bound(schemes[("A2(F2)", 0)], check=False)
    out.append(_criterion("lattice", "uniform scheme bound <= exact h^0", certified <= h0, value=certified))
    return out


def suite_pseudomanifold(cfg: RunConfig) -> List[Criterion]:
    out = []
    rng = np.random.default_rng(cfg.seed)
    for name, x in gallery():
        fg = flip_graph(x)
        k = fg.n - 1
        if as_view(x).cohomology_dim(k) != 0:
            out.append(_criterion("pseudomanifold", f"{name}: H^{k} != 0, skipped", True))
            continue
        try:
            exact = cheeger_co(x, k, cfg.budget, cfg.threads).value
        except BudgetExceeded:
            out.append(_criterion("pseudomanifold", f"{name}: over budget, skipped", True))
            continue
        diam = cheeger_top_via_diameter(x)
        out.append(_criterion("pseudomanifold", f"{name}: exact h^{k} = 2/diam", exact == diam,
                              exact=exact, via_diameter=diam))
        geo = geodesic_cochain(fg)
        out.append(_criterion("pseudomanifold", f"{name}: geodesic cochain expands by 2/diam",
                              Fraction(coboundary(geo).weight(), geo.weight()) == diam))
        odd_ok = all(odd_degree_identity_holds(random_cochain(x, k, rng), fg) for _ in range(20))
        out.append(_criterion("pseudomanifold", f"{name}: supp d(phi) = odd-degree vertices of G_phi", odd_ok))
    try:
        cheeger_top_via_diameter(glued_triangles())
        rejected = False
    except HypothesisFailed:
        rejected = True
    out.append(_criterion("pseudomanifold", "a disk is rejected as not closed", rejected))
    return out


def suite_lambda(cfg: RunConfig) -> List[Criterion]:
    out = []
    full = simplex_skeleton(4, 3)
    lam, _ = max_cosystole(full, 1, cfg.budget, cfg.threads)
    out.append(_criterion("lambda", "lambda_1 of the 3-simplex = 2", lam == 2, value=lam))
    view = as_view(full)
    blam = bound_blam(view.dim(1), view.dim(0))
    out.append(_criterion("lambda", "blam bounds enclose lambda_1 (lower bound flagged)",
                          blam["lower"].lo <= lam <= blam["upper"],
                          lower=blam["lower"], upper=blam["upper"], vacuous=blam["vacuous"]))
    trials = cfg.option("trials", 30)
    violations = []
    checked = 0
    for trial in range(trials):
        x = random_subcomplex(6, trial_rng(cfg.seed, trial))
        for k in range(0, x.top_dim + 1):
            try:
                value, _ = max_cosystole(x, k, cfg.budget, cfg.threads)
            except BudgetExceeded:
                continue
            checked += 1
            if 2 * value > x.f(k):
                violations.append({"trial": trial, "k": k, "lambda": value, "f_k": x.f(k)})
    out.append(_criterion("lambda", f"lambda_k <= f_k/2 on {trials} random complexes", not violations,
                          checked=checked, violations=violations))
    stats = random_cosystole_stats(simplex_skeleton(6, 2), 1, trials=50, seed=cfg.seed, budget=cfg.budget)
    out.append(_criterion("lambda", "random cochains stay within f_1/2", stats["max"] <= 1, **stats))
    return out


def suite_paley(cfg: RunConfig) -> List[Criterion]:
    out = []
    mismatches = []
    for p in PALEY_PRIMES:
        for k in range(1, 4):
            if k + 1 >= p:
                continue
            norm = paley_cochain(p, k).weight()
            if norm != expected_norm(p, k):
                mismatches.append({"p": p, "k": k, "norm": norm, "expected": expected_norm(p, k)})
    out.append(_criterion("paley", "|phi_k| = (p-1)/(2p) C(p,k+1) for p <= 13, k <= 3", not mismatches,
                          mismatches=mismatches))
    for p, k in [(5, 1), (7, 1), (11, 1)]:
        row = paley_csy_experiment(p, k, cfg.budget, cfg.threads)
        ok = row["exact_csy"] <= row["norm"] and row["bound"].lo <= row["exact_csy"]
        out.append(_criterion("paley", f"exact csy at p={p}, k={k}", ok, norm=row["norm"],
                              exact_csy=row["exact_csy"], bound=row["bound"], vacuous=row["vacuous"]))
    for p in (5, 7):
        report = chung_sum_check(p, 1, trials=100, seed=cfg.seed)
        out.append(_criterion("paley", f"character sums within the bound at p={p}", not report["violations"],
                              max_ratio=report["max_ratio"], violations=len(report["violations"])))
    return out


def nonabelian_test_set(seed: int) -> List[ComplexZ2]:
    """Комплексы на ≤ 5 вершинах с полным 1-остовом."""
    items = []
    for n in (3, 4, 5):
        items.append(simplex_skeleton(n, 1))
        items.append(simplex_skeleton(n, 2))
        for i, p in enumerate((0.25, 0.5, 0.75)):
            items.append(random_Ynp(n, p, trial_rng(seed, 10 * n + i)))
    return items


def suite_nonabelian(cfg: RunConfig) -> List[Criterion]:
    groups = [cyclic_group(2), cyclic_group(3), symmetric_group(3)]
    mismatches = []
    abelian = []
    checked = 0
    for x in nonabelian_test_set(cfg.seed):
        for g in groups:
            orbits = h1_orbits(x, g, cfg.budget).count
            homs = hom_pi1_orbits(x, g, cfg.budget)
            checked += 1
            if orbits != homs:
                mismatches.append({"complex": x.name, "group": g.name, "h1": orbits, "hom": homs})
            if g.is_abelian:
                expected = g.order ** nonab.abelian_h1_dim(x, g.order)
                if orbits != expected:
                    abelian.append({"complex": x.name, "group": g.name, "h1": orbits, "expected": expected})
    return [
        _criterion("nonabelian", "|H^1(X;G)| = |Hom(pi1 X, G)/G|", not mismatches,
                   checked=checked, mismatches=mismatches),
        _criterion("nonabelian", "abelian groups: |H^1| = m^dim", not abelian, mismatches=abelian),
    ]


def suite_bw1(cfg: RunConfig) -> List[Criterion]:
    out = []
    x = simplex_skeleton(5, 2)
    trials = cfg.option("trials", 500)
    for g in (cyclic_group(2), cyclic_group(3)):
        failures = 0
        for trial in range(trials):
            phi = nonab.random_cochain(x, g, trial_rng(cfg.seed, trial))
            if not bw1_check(phi, cfg.budget)["holds"]:
                failures += 1
        out.append(_criterion("bw1", f"|d1 phi| >= n csy/3 on {trials} random {g.name}-cochains",
                              failures == 0, failures=failures))
    z2 = cyclic_group(2)
    edge = nonab.NonAbCochain1.from_edges(simplex_skeleton(3, 2), z2, {(0, 1): 1})
    report = bw1_check(edge, cfg.budget)
    out.append(_criterion("bw1", "single edge on the 2-simplex is tight", report["tight"], **report))
    return out


def suite_threshold(cfg: RunConfig) -> List[Criterion]:
    n = cfg.option("n", 40)
    trials = cfg.option("trials", 200)
    low, high = homology_threshold_points(n)
    rows = threshold_sweep(n, [low, high], trials, cfg.seed)
    return [_criterion("threshold", f"P[H^1 = 0] grows across 2 ln n / n at n={n}",
                       rows[1]["fraction"] > rows[0]["fraction"], rows=rows)]


def _product_base(name: str) -> ComplexZ2:
    if name == "boundary-triangle":
        return simplex_skeleton(3, 1)
    if name == "vertex":
        return from_simplices("vertex", [(0,)])
    return hypercube(2)


def suite_product(cfg: RunConfig) -> List[Criterion]:
    out = []
    for name, n, k in PRODUCT_CASES:
        report = verify_product_bound(_product_base(name), n, k, cfg.budget, cfg.threads)
        out.append(_criterion("product", f"h^{k}({name} x D{n - 1}) >= bound", report["passed"], report=report))
    return out


def _random_bits(rng: np.random.Generator, length: int) -> int:
    bits = 0
    for i, b in enumerate(rng.integers(0, 2, size=length)):
        if b:
            bits |= 1 << i
    return bits


def _oracle(rep: int, rows: List[int], length: int) -> tuple:
    best = None
    for mask in range(1 << len(rows)):
        v = rep ^ xor_rows(rows, mask)
        key = (weight(v), lex_key(v, length))
        if best is None or key < best[0]:
            best = (key, v)
    return best[0][0], best[1]


def built_complexes() -> List[ComplexZ2]:
    fano = order_complex(proper_part(subspace_lattice(2, 3)), name="fano-order-complex")
    return [
        simplex_skeleton(5, 3),
        hypercube(3),
        coxeter_An(4),
        coxeter_Bn(3),
        product_with_simplex(hypercube(2), 2),
        fano,
        alexander_dual(simplex_skeleton(5, 1), 5),
        random_Ynp(6, 0.5, 0),
    ]


def suite_infrastructure(cfg: RunConfig) -> List[Criterion]:
    out = []
    broken = []
    for x in built_complexes():
        view = as_view(x)
        for k in range(0, x.top_dim + 1):
            for i in range(view.dim(k)):
                c = Chain.from_bits(view, k, 1 << i)
                if not boundary(boundary(c)).is_zero():
                    broken.append({"complex": x.name, "k": k, "cell": i})
    out.append(_criterion("infrastructure", "boundary of boundary vanishes", not broken, failures=broken[:5]))

    rng = np.random.default_rng(cfg.seed)
    host = simplex_skeleton(5, 3)
    failures = 0
    for _ in range(1000):
        k = int(rng.integers(0, 4))
        phi = random_cochain(host, k - 1, rng)
        c = random_chain(host, k, rng)
        if evaluate(phi, boundary(c)) != evaluate(coboundary(phi), c):
            failures += 1
    out.append(_criterion("infrastructure", "<phi, dc> = <d phi, c> on 1000 pairs", failures == 0,
                          failures=failures))

    failures = 0
    for _ in range(1000):
        length = int(rng.integers(1, 65))
        a, b, x = (_random_bits(rng, length) for _ in range(3))
        if weight(a ^ x) + weight(b ^ x) > weight(a) + weight(b) + 2 * weight(a ^ b ^ x):
            failures += 1
    out.append(_criterion("infrastructure", "symmetric-difference inequality on 1000 triples",
                          failures == 0, failures=failures))

    failures = 0
    for _ in range(200):
        length = int(rng.integers(4, 25))
        target = int(rng.integers(1, min(16, length) + 1))
        rows: List[int] = []
        while len(rows) < target:
            candidate = _random_bits(rng, length)
            if rank_of_rows(rows + [candidate]) == len(rows) + 1:
                rows.append(candidate)
        rep = _random_bits(rng, length)
        problem = CosetProblem(length, GF2Matrix(length, tuple(rows)), BitVec(length, rep))
        w, bits = coset_min_weight(problem, cfg.budget)
        if (w, bits.bits) != _oracle(rep, rows, length):
            failures += 1
    out.append(_criterion("infrastructure", "coset_min_weight matches the full scan on 200 instances",
                          failures == 0, failures=failures))
    return out


SUITES: Dict[str, Callable[[RunConfig], List[Criterion]]] = {
    "hypercube": suite_hypercube,
    "coxeter-a": suite_coxeter_a,
    "coxeter-b": suite_coxeter_b,
    "phi-n": suite_phi_n,
    "duality": suite_duality,
    "cycle-detection": suite_cycle_detection,
    "lattice": suite_lattice,
    "pseudomanifold": suite_pseudomanifold,
    "lambda": suite_lambda,
    "paley": suite_paley,
    "nonabelian": suite_nonabelian,
    "bw1": suite_bw1,
    "threshold": suite_threshold,
    "product": suite_product,
    "infrastructure": suite_infrastructure,
}


def suite_names() -> List[str]:
    return list(SUITES) + ["all"]


def run_suite(name: str, cfg: RunConfig) -> List[Criterion]:
    """Запускает один набор или все по порядку; прогресс пишется в журнал."""
    notifier = get_notifier()
    names = list(SUITES) if name == "all" else [name]
    results: List[Criterion] = []
    for suite in names:
        criteria = SUITES[suite](cfg)
        failed = sum(1 for c in criteria if not c["passed"])
        mark = "✅" if not failed else "❌"
        notifier.log(f"{mark} {suite}: {len(criteria) - failed}/{len(criteria)} criteria passed")
        results.extend(criteria)
    return results
