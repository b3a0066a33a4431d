"""
Командная строка: build, compute, verify, runs.

Вывод пишется один раз в конце (файл --output или stdout), журнал - в stderr.
Коды выхода: 0 успех, 2 ошибка использования, 3 бюджет, 4 гипотеза, 5 внутренний инвариант.
"""
import argparse
import time
from fractions import Fraction
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

from certificates.detection import cycle_detection_bound, triangle_family
from certificates.lattices import boolean_automorphisms, lattice_bound, subspace_automorphisms
from complexes.builders import (
    coxeter_An,
    coxeter_Bn,
    hypercube,
    order_complex,
    product_with_simplex,
    simplex_skeleton,
)
from complexes.cells import ComplexZ2, as_view
from complexes.duality import alexander_dual
from complexes.posets import boolean_lattice, proper_part, subspace_lattice
from complexes.sampling import random_Ynp
from expansion.bounds import bound_blam, verify_product_bound
from expansion.chains import Chain
from expansion.cheeger import cheeger, max_cosystole
from expansion.norms import cosystolic_norm, systolic_norm
from nonabelian.experiments import quotient_experiment, report_rows, threshold_sweep, homology_threshold_points
from nonabelian.groups import group_by_name
from nonabelian.orbits import h1_orbits, hom_pi1_orbits, union_bound
from paley.cochains import paley_sweep
from paley.cochains import rows_to_csv as paley_rows_to_csv
from pseudomanifold.coxeter import phi_n_report
from pseudomanifold.flip import cheeger_top_via_diameter, flip_graph
from utils.errors import BudgetExceeded, HdxError, InvalidInput
from utils.notifier import get_notifier

from .config import RunConfig
from .formats import complex_hash, dumps_complex, load_complex, load_vector, render, write_output
from .suites import run_suite, suite_names

SHAPES = ("simplex", "hypercube", "coxeter-a", "coxeter-b", "product", "dual", "order-complex", "ynp")
COMPUTE_TARGETS = (
    "cheeger", "cheeger-top-diam", "lambda", "cosystole", "cohomology", "flip-graph", "detection",
    "phi-n", "paley", "blam", "product", "lattice-bound", "h1", "quotient", "threshold", "union-bound",
)

# провал критерия verify означает расхождение с доказанным утверждением
INVARIANT_EXIT = 5


# --- построение комплексов ---------------------------------------------------------

def _require(cfg: RunConfig, name: str) -> Any:
    value = cfg.option(name)
    if value is None:
        raise InvalidInput(f"--{name.replace('_', '-')} is required for shape {cfg.option('shape')}")
    return value


def build_complex(cfg: RunConfig) -> ComplexZ2:
    """Комплекс по --shape и параметрам; product и dual читают базовый комплекс из --input."""
    shape = cfg.option("shape")
    reduced = not cfg.option("unreduced", False)
    if shape == "simplex":
        n = _require(cfg, "n")
        return simplex_skeleton(n, cfg.option("dim", n - 1), reduced)
    if shape == "hypercube":
        return hypercube(_require(cfg, "d"), reduced)
    if shape == "coxeter-a":
        return coxeter_An(_require(cfg, "n"), cfg.budget)
    if shape == "coxeter-b":
        return coxeter_Bn(_require(cfg, "n"), cfg.budget)
    if shape in ("product", "dual"):
        if not cfg.input:
            raise InvalidInput(f"shape {shape} needs --input with the base complex")
        base = load_complex(cfg.input)
        n = _require(cfg, "n")
        return product_with_simplex(base, n) if shape == "product" else alexander_dual(base, n)
    if shape == "order-complex":
        n = _require(cfg, "n")
        if cfg.option("lattice", "boolean") == "boolean":
            lattice = boolean_lattice(n)
        else:
            lattice = subspace_lattice(cfg.option("q", 2), n)
        return order_complex(proper_part(lattice), reduced=reduced)
    if shape == "ynp":
        return random_Ynp(_require(cfg, "n"), _require(cfg, "p"), cfg.seed)
    raise InvalidInput(f"unknown shape {shape!r}; expected one of {', '.join(SHAPES)}")


def source_complex(cfg: RunConfig) -> ComplexZ2:
    if cfg.option("shape"):
        return build_complex(cfg)
    if cfg.input:
        return load_complex(cfg.input)
    raise InvalidInput("give --input FILE or --shape")


def cmd_build(cfg: RunConfig) -> Tuple[str, int]:
    x = build_complex(cfg)
    get_notifier().log(f"✅ built {x.name}: f = {x.f_vector()}")
    return dumps_complex(x), 0


# --- compute --------------------------------------------------------------------

def _k(cfg: RunConfig) -> int:
    if cfg.k is None:
        raise InvalidInput("--k is required for this computation")
    return cfg.k


def _complex_record(x: ComplexZ2) -> Dict[str, Any]:
    return {"complex": x.name, "complex_hash": complex_hash(x), "f_vector": list(x.f_vector())}


def compute_cheeger(cfg: RunConfig) -> Dict[str, Any]:
    x = source_complex(cfg)
    result = cheeger(x, _k(cfg), cfg.mode, cfg.budget, cfg.threads)
    record = _complex_record(x)
    record.update(result.to_dict())
    return record


def compute_cheeger_top_diam(cfg: RunConfig) -> Dict[str, Any]:
    x = source_complex(cfg)
    fg = flip_graph(x)
    value = cheeger_top_via_diameter(x)
    record = _complex_record(x)
    record.update({"value": value, "k": fg.n - 1, "diameter": fg.diameter()})
    return record


def compute_lambda(cfg: RunConfig) -> Dict[str, Any]:
    x = source_complex(cfg)
    k = _k(cfg)
    value, witness = max_cosystole(x, k, cfg.budget, cfg.threads)
    view = as_view(x)
    f_k, f_km1 = view.dim(k), view.dim(k - 1)
    record = _complex_record(x)
    record.update({"k": k, "value": value, "witness_bits": witness.bits.to_hex(),
                   "blam": bound_blam(f_k, f_km1) if f_k and f_km1 else None})
    return record


def compute_cosystole(cfg: RunConfig) -> Dict[str, Any]:
    x = source_complex(cfg)
    path = cfg.option("cochain")
    if not path:
        raise InvalidInput("--cochain FILE is required")
    vector = load_vector(path, x)
    if isinstance(vector, Chain):
        value, form = systolic_norm(vector, cfg.budget, cfg.threads)
    else:
        value, form = cosystolic_norm(vector, cfg.budget, cfg.threads)
    record = _complex_record(x)
    record.update({"k": vector.k, "norm": vector.weight(), "value": value,
                   "witness_bits": form.bits.to_hex()})
    return record


def compute_cohomology(cfg: RunConfig) -> Dict[str, Any]:
    x = source_complex(cfg)
    view = as_view(x)
    dims = range(-1, x.top_dim + 1) if cfg.k is None else [cfg.k]
    record = _complex_record(x)
    record["cohomology"] = {str(k): view.cohomology_dim(k) for k in dims}
    record["homology"] = {str(k): view.homology_dim(k) for k in dims}
    return record


def compute_flip_graph(cfg: RunConfig) -> Dict[str, Any]:
    x = source_complex(cfg)
    fg = flip_graph(x)
    record = _complex_record(x)
    record.update({
        "n": fg.n,
        "facets": fg.graph.number_of_nodes(),
        "edges": fg.graph.number_of_edges(),
        "pseudomanifold": fg.pseudomanifold,
        "diameter": fg.diameter() if fg.pseudomanifold else None,
        "edgelist": fg.to_edgelist_text(),
    })
    return record


def compute_detection(cfg: RunConfig) -> Dict[str, Any]:
    """Нижняя оценка ‖φ‖_csy для 1-коцепи по треугольникам, на которых φ нечётна."""
    x = source_complex(cfg)
    path = cfg.option("cochain")
    if not path:
        raise InvalidInput("--cochain FILE is required")
    phi = load_vector(path, x)
    if isinstance(phi, Chain) or phi.k != 1:
        raise InvalidInput("detection works with 1-cochains")
    fam = triangle_family(as_view(x), phi)
    tau, witness = cycle_detection_bound(phi, fam, cfg.budget)
    record = _complex_record(x)
    record.update({"k": 1, "value": tau, "family_size": len(fam.cycles), "piercing_set": witness})
    return record


def compute_phi_n(cfg: RunConfig) -> Dict[str, Any]:
    n = cfg.option("n", 4)
    return phi_n_report(n, cfg.budget, with_cosystole=not cfg.option("no_cosystole", False))


def compute_paley(cfg: RunConfig) -> Dict[str, Any]:
    ps = cfg.option("primes") or [int(cfg.option("p", 5))]
    ks = [cfg.k] if cfg.k is not None else [1]
    pairs = [(p, k) for p in ps for k in ks if k + 1 < p]
    rows = paley_sweep(pairs, cfg.budget)
    for row in rows:
        row.pop("cosystolic_form", None)
    return {"rows": rows}


def compute_blam(cfg: RunConfig) -> Dict[str, Any]:
    x = source_complex(cfg)
    k = _k(cfg)
    view = as_view(x)
    record = _complex_record(x)
    record.update({"k": k, "bound": bound_blam(view.dim(k), view.dim(k - 1))})
    return record


def compute_product(cfg: RunConfig) -> Dict[str, Any]:
    x = load_complex(cfg.input) if cfg.input else source_complex(cfg)
    n = cfg.option("n")
    if n is None:
        raise InvalidInput("--n is required")
    record = _complex_record(x)
    record.update(verify_product_bound(x, n, _k(cfg), cfg.budget, cfg.threads))
    return record


def compute_lattice_bound(cfg: RunConfig) -> Dict[str, Any]:
    n = cfg.option("n", 3)
    if cfg.option("lattice", "boolean") == "boolean":
        lattice, gens = boolean_lattice(n), boolean_automorphisms(n)
    else:
        q = cfg.option("q", 2)
        lattice, gens = subspace_lattice(q, n), subspace_automorphisms(q, n)
    return {"lattice": cfg.option("lattice", "boolean"), "n": n, "value": lattice_bound(lattice, gens)}


def compute_h1(cfg: RunConfig) -> Dict[str, Any]:
    x = source_complex(cfg)
    group = group_by_name(cfg.option("group", "Z2"))
    orbits = h1_orbits(x, group, cfg.budget)
    record = _complex_record(x)
    record.update({"group": group.name, "orbits": orbits.count,
                   "representatives": [list(r.values) for r in orbits.representatives]})
    try:
        record["hom_pi1_orbits"] = hom_pi1_orbits(x, group, cfg.budget)
    except InvalidInput:
        record["hom_pi1_orbits"] = None
    return record


def compute_quotient(cfg: RunConfig) -> Dict[str, Any]:
    report = quotient_experiment(cfg.option("n", 12), cfg.option("c", 1.0), cfg.option("trials", 20),
                                 cfg.seed, cfg.budget, p=cfg.option("p"))
    report["rows"] = report_rows(report)
    return report


def compute_threshold(cfg: RunConfig) -> Dict[str, Any]:
    n = cfg.option("n", 40)
    ps = cfg.option("ps") or homology_threshold_points(n)
    return {"rows": threshold_sweep(n, ps, cfg.option("trials", 200), cfg.seed)}


def compute_union_bound(cfg: RunConfig) -> Dict[str, Any]:
    n = cfg.option("n", 4)
    p = cfg.option("p", 0.5)
    group = group_by_name(cfg.option("group", "Z2"))
    return {"n": n, "group": group.name, "p": p, "value": union_bound(n, group, p, cfg.budget)}


COMPUTE: Dict[str, Callable[[RunConfig], Dict[str, Any]]] = {
    "cheeger": compute_cheeger,
    "cheeger-top-diam": compute_cheeger_top_diam,
    "lambda": compute_lambda,
    "cosystole": compute_cosystole,
    "cohomology": compute_cohomology,
    "flip-graph": compute_flip_graph,
    "detection": compute_detection,
    "phi-n": compute_phi_n,
    "paley": compute_paley,
    "blam": compute_blam,
    "product": compute_product,
    "lattice-bound": compute_lattice_bound,
    "h1": compute_h1,
    "quotient": compute_quotient,
    "threshold": compute_threshold,
    "union-bound": compute_union_bound,
}


def _save_run(cfg: RunConfig, record: Dict[str, Any], text: str) -> None:
    from database import DatabaseManager

    value = record.get("value")
    if isinstance(value, dict) and set(value) == {"num", "den"}:
        value = Fraction(value["num"], value["den"])
    value = value if isinstance(value, (int, Fraction)) and not isinstance(value, bool) else None
    db = DatabaseManager(cfg.db)
    db.save_run(cfg.target, record.get("complex"), record.get("complex_hash"), record.get("k"),
                cfg.mode if cfg.target == "cheeger" else None, value, record.get("witness_bits"),
                record.get("budget_used"), cfg.seed, text)


def cmd_compute(cfg: RunConfig) -> Tuple[str, int]:
    handler = COMPUTE.get(cfg.target or "")
    if handler is None:
        raise InvalidInput(f"unknown computation {cfg.target!r}")
    started = time.perf_counter()
    record: Dict[str, Any] = {"command": "compute", "target": cfg.target, "seed": cfg.seed}
    record.update(handler(cfg))
    if cfg.timing:
        record["wall_time"] = round(time.perf_counter() - started, 6)
    if cfg.format == "text" and cfg.target == "flip-graph":
        text = record["edgelist"]
    elif cfg.format == "csv" and cfg.target == "paley":
        text = paley_rows_to_csv(record["rows"])
    else:
        text = render(record, cfg.format)
    if cfg.db:
        _save_run(cfg, record, render(record, "json").strip())
    return text, 0


# --- verify ---------------------------------------------------------------------

def cmd_verify(cfg: RunConfig) -> Tuple[str, int]:
    name = cfg.target or ""
    if name not in suite_names():
        raise InvalidInput(f"unknown suite {name!r}; expected one of {', '.join(suite_names())}")
    started = time.perf_counter()
    criteria = run_suite(name, cfg)
    passed = all(c["passed"] for c in criteria)
    record: Dict[str, Any] = {
        "command": "verify",
        "suite": name,
        "seed": cfg.seed,
        "passed": passed,
        "failed": sum(1 for c in criteria if not c["passed"]),
        "criteria": criteria,
    }
    if cfg.timing:
        record["wall_time"] = round(time.perf_counter() - started, 6)
    if cfg.format == "csv":
        text = render({"rows": [{"suite": c["suite"], "criterion": c["criterion"], "passed": c["passed"]}
                                for c in criteria]}, "csv")
    else:
        text = render(record, cfg.format)
    if cfg.db:
        from database import DatabaseManager

        DatabaseManager(cfg.db).save_suite_results(name, criteria)
    summary = f"{'✅' if passed else '❌'} verify {name}: {len(criteria) - record['failed']}/{len(criteria)} passed"
    if cfg.notify:
        get_notifier().report(summary)
    else:
        get_notifier().log(summary)
    return text, 0 if passed else INVARIANT_EXIT


# --- runs -----------------------------------------------------------------------

def cmd_runs(cfg: RunConfig) -> Tuple[str, int]:
    from database import DatabaseManager
    from utils.view_data import show_latest_runs, show_run_stats, show_suite_history

    path = cfg.db or DatabaseManager().db_path
    days = cfg.option("clear_days")
    if days is not None:
        removed = DatabaseManager(path).clear_old_data(days)
        get_notifier().log(f"✅ removed {removed} ledger rows older than {days} days")
    if cfg.option("stats"):
        show_run_stats(path)
    elif cfg.option("suite"):
        show_suite_history(path, cfg.option("suite"), cfg.option("limit", 50))
    else:
        show_latest_runs(path, cfg.option("command"), cfg.option("limit", 20))
    return "", 0


# --- argparse -------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="complex file (hdx/1 JSON)")
    p.add_argument("--output", help="write the result here instead of stdout")
    p.add_argument("--budget", type=int, help="enumeration budget (default HDX_BUDGET)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, help="worker processes (default HDX_THREADS)")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--timing", action="store_true", help="add wall time to the record")


def _add_shape(p: argparse.ArgumentParser) -> None:
    p.add_argument("--shape", choices=SHAPES)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--dim", type=int, help="skeleton dimension for --shape simplex")
    p.add_argument("--p", type=float)
    p.add_argument("--q", type=int)
    p.add_argument("--lattice", choices=("boolean", "subspace"))
    p.add_argument("--unreduced", action="store_true", help="omit the empty cell")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hdx", description="Exact Z2 Cheeger constants of cell complexes.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    build = sub.add_parser("build", help="build a complex and write it as hdx/1 JSON")
    _add_common(build)
    _add_shape(build)

    compute = sub.add_parser("compute", help="run one computation")
    compute.add_argument("target", choices=COMPUTE_TARGETS)
    _add_common(compute)
    _add_shape(compute)
    compute.add_argument("--k", type=int)
    compute.add_argument("--mode", choices=("co", "ho"), default="co")
    compute.add_argument("--cochain", help="cochain file {complex_hash, dim, bits_hex}")
    compute.add_argument("--group", help="Zm, Sn, An or PSL(2,7)")
    compute.add_argument("--c", type=float)
    compute.add_argument("--trials", type=int)
    compute.add_argument("--primes", type=int, nargs="+")
    compute.add_argument("--ps", type=float, nargs="+")
    compute.add_argument("--no-cosystole", action="store_true")
    compute.add_argument("--db", nargs="?", const="", help="record into the run ledger")

    verify = sub.add_parser("verify", help="run an acceptance suite")
    verify.add_argument("target", metavar="suite")
    _add_common(verify)
    verify.add_argument("--n", type=int)
    verify.add_argument("--trials", type=int)
    verify.add_argument("--db", nargs="?", const="", help="record into the run ledger")
    verify.add_argument("--notify", action="store_true", help="send the summary to Telegram")

    runs = sub.add_parser("runs", help="show the run ledger")
    runs.add_argument("--db", nargs="?", const="")
    runs.add_argument("--command")
    runs.add_argument("--suite")
    runs.add_argument("--limit", type=int)
    runs.add_argument("--stats", action="store_true")
    runs.add_argument("--clear-days", type=int)
    return parser


HANDLERS: Dict[str, Callable[[RunConfig], Tuple[str, int]]] = {
    "build": cmd_build,
    "compute": cmd_compute,
    "verify": cmd_verify,
    "runs": cmd_runs,
}


def _error_record(e: HdxError) -> Dict[str, Any]:
    record: Dict[str, Any] = {"error": type(e).__name__, "message": str(e), "exit_code": e.exit_code}
    if isinstance(e, BudgetExceeded):
        record.update({"needed": e.needed, "budget": e.budget, "what": e.what})
    return record


def main(argv: Optional[Sequence[str]] = None) -> int:
    notifier = get_notifier()
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return int(e.code or 0)

    output = getattr(args, "output", None)
    fmt = getattr(args, "format", "json")
    try:
        cfg = RunConfig.from_args(args)
        text, code = HANDLERS[cfg.subcommand](cfg)
    except HdxError as e:
        notifier.log(f"❌ {type(e).__name__}: {e}")
        write_output(render(_error_record(e), fmt if fmt != "csv" else "json"), output)
        return e.exit_code
    except Exception as e:
        notifier.log(f"❌ internal error: {type(e).__name__}: {e}")
        return INVARIANT_EXIT
    if text:
        write_output(text, cfg.output)
    return code
