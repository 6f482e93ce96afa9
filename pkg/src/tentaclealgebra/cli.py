"""Command-line interface for tentaclealgebra."""
import argparse
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from rich.console import Console
from rich.logging import RichHandler

from .cones.basis import ConeBasisSolver, algebra_generators, generator_names
from .core.component import Component
from .core.workbench import CONFIG_FILENAME, Workbench
from .errors import InputError, TentacleError
from .exact.multipoly import MultiPoly
from .formats.parser import parse_polynomial, variable_names
from .formats.report import render_json, render_text, series_terms
from .formats.schema import InputDocument, load_document
from .keyforms.lab import KeyFormLab, has_negative_x_digit
from .lift.transport import (
    GradedElement,
    coefficient_bound,
    lift_element,
    lift_membership,
    lifted_set_description,
)
from .oracle.sampling import GrowthOracle
from .puiseux.expansion import PuiseuxExpander, SemidegreeSpec
from .semidegree.engine import SemidegreeEngine
from .semidegree.maclane import maclane_value
from .witness.search import WitnessSearch, graded_degree, leading_form, strictly_increasing

console = Console()
err_console = Console(stderr=True)

logger = logging.getLogger("tentaclealgebra")

Report = Dict[str, Any]


def print_output(message: str, style: str = "") -> None:
    """Print output with optional styling."""
    console.print(message, style=style)


def setup_logging() -> None:
    """Send log records to stderr through rich; the level comes from TA_LOG."""
    level = os.environ.get("TA_LOG", "WARNING").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def open_workbench(args: argparse.Namespace) -> Workbench:
    """Workbench from --config, else from ./tentacle.yaml, else defaults."""
    config_path = Path(args.config) if getattr(args, "config", None) else Path(CONFIG_FILENAME)
    if config_path.exists():
        bench = Workbench.load_config(config_path)
    elif getattr(args, "config", None):
        raise InputError(f"configuration file {config_path} does not exist")
    else:
        bench = Workbench.with_defaults("tentacle")
    if not bench.initialize():
        problems = [
            f"{name}: {'; '.join(component.config_errors())}"
            for name, component in bench.components.items()
            if component.config_errors()
        ]
        raise InputError("invalid configuration: " + " | ".join(problems))
    return bench


def require_engine(bench: Workbench, name: str) -> Component:
    try:
        return bench.engine(name)
    except KeyError:
        raise InputError(
            f"engine {name!r} is disabled or missing in the configuration of {bench.name!r}"
        ) from None


def load_input(args: argparse.Namespace, bench: Workbench) -> InputDocument:
    if not args.input:
        raise InputError(f"the {args.command} command needs an input file")
    puiseux = require_engine(bench, "puiseux")
    term_limit = puiseux.setting("term_limit", args.term_limit)
    max_term_limit = max(term_limit, puiseux.setting("max_term_limit"))
    return load_document(args.input, term_limit, max_term_limit)


def require_poly(args: argparse.Namespace, names: Sequence[str]) -> MultiPoly:
    if not args.poly:
        raise InputError(f"the {args.command} command needs --poly")
    return parse_polynomial(args.poly, names)


def parse_rat_flag(value: Optional[str], flag: str, default: Optional[Fraction] = None) -> Fraction:
    if value is None:
        if default is None:
            raise InputError(f"missing {flag}")
        return default
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"{flag} expects a rational, got {value!r}") from None


def parse_level_flag(value: Optional[str], flag: str, default: int) -> int:
    level = parse_rat_flag(value, flag, Fraction(default))
    if level.denominator != 1:
        raise InputError(f"{flag} expects an integer, got {value!r}")
    return int(level)


def emit(report: Report, args: argparse.Namespace) -> None:
    """Write a report to --out or stdout in the requested format."""
    if args.format == "text":
        if args.out:
            with open(args.out, "w", encoding="utf-8") as f:
                render_text(report, Console(file=f, width=120), title=args.command)
        else:
            render_text(report, console, title=args.command)
        return
    text = render_json(report)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_init(args: argparse.Namespace) -> int:
    """Write the default configuration file."""
    config_path = Path(args.config or CONFIG_FILENAME)
    if config_path.exists() and not args.force:
        print_output(f"✗ {config_path} already exists (use --force to overwrite)", style="red")
        return 2
    bench = Workbench.with_defaults(args.name, config_path.parent)
    bench.initialize()
    bench.save_config(config_path)
    print_output(f"✓ Configuration saved to {config_path}", style="green")
    return 0


def cmd_status(args: argparse.Namespace) -> int:
    """Show the workbench components and their configuration."""
    bench = open_workbench(args)
    status = bench.get_status()
    print_output(f"\nWorkbench: {status['workbench']}", style="bold")
    print_output(f"Initialized: {status['initialized']}")
    print_output("\nComponents:", style="bold")
    for name, comp_status in status["components"].items():
        enabled = "✓" if comp_status.get("enabled") else "✗"
        settings = ", ".join(f"{k}={v}" for k, v in sorted(comp_status["config"].items()))
        print_output(f"  {enabled} {name}: {settings}")
    return 0


def cmd_expand(args: argparse.Namespace) -> int:
    bench = open_workbench(args)
    f = require_poly(args, ("x", "y")).to_laurent2()
    expander: PuiseuxExpander = require_engine(bench, "puiseux")  # type: ignore[assignment]
    branches = []
    for branch in expander.expand(f, args.term_limit):
        entry: Report = {
            "series": series_terms(branch.series),
            "exact": branch.exact,
            "real": branch.real,
        }
        if not branch.real:
            entry["conjugates"] = branch.conjugates
            entry["complex_exponent"] = branch.complex_exponent
            entry["minimal_polynomial"] = list(branch.minimal_polynomial)
        branches.append(entry)
    emit({"polynomial": f, "branches": branches}, args)
    return 0


def _spec_report(spec: Any) -> Report:
    if isinstance(spec, SemidegreeSpec):
        if spec.is_total_degree:
            return {"total_degree": True}
        return {"total_degree": False, "phi": series_terms(spec.phi), "omega": spec.omega}
    return {"z": list(spec.z)}


def cmd_spec(args: argparse.Namespace) -> int:
    bench = open_workbench(args)
    document = load_input(args, bench)
    tentacles = []
    for entry in document.entries:
        report = {"type": entry.kind, "path": entry.path, **_spec_report(entry.tentacle)}
        if entry.boundaries is not None:
            report["boundaries"] = list(entry.boundaries)
        tentacles.append(report)
    emit({"tentacles": tentacles}, args)
    return 0


def cmd_keyforms(args: argparse.Namespace) -> int:
    bench = open_workbench(args)
    document = load_input(args, bench)
    entry = document.single()
    spec = entry.tentacle
    if not isinstance(spec, SemidegreeSpec) or spec.is_total_degree:
        raise InputError("key forms need a Puiseux, boundaries or plan tentacle")
    lab: KeyFormLab = require_engine(bench, "keyforms")  # type: ignore[assignment]
    seq = lab.keyforms(spec)
    report: Report = {
        "forms": seq.forms,
        "values": seq.values,
        "periods": seq.periods[1:],
        "digits": [list(d) for d in seq.digits[1:]],
        "constants": seq.consts[1:],
        "last_form_polynomial": seq.last_form.is_polynomial(),
        "negative_x_digit": has_negative_x_digit(seq),
    }
    if entry.sequence is not None:
        report["plan_forms"] = entry.sequence.forms
        report["matches_plan"] = entry.sequence.forms == seq.forms and (
            entry.sequence.values == seq.values
        )
    if entry.region is not None:
        report["region"] = entry.region.text
    emit(report, args)
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    bench = open_workbench(args)
    document = load_input(args, bench)
    lab: KeyFormLab = require_engine(bench, "keyforms")  # type: ignore[assignment]
    cones = require_engine(bench, "cones")
    verdict = lab.classify(
        document.tentacle_set(),
        genus_hint=document.genus_hint,
        search_bound=cones.setting("search_bound", args.search_bound),
    )
    emit(verdict.to_dict(), args)
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    bench = open_workbench(args)
    document = load_input(args, bench)
    S = document.tentacle_set()
    f = require_poly(args, document.names())
    engine: SemidegreeEngine = require_engine(bench, "semidegree")  # type: ignore[assignment]
    report = engine.evaluate(S, f)
    report["integrality_index"] = S.integrality_index()
    report["polynomial"] = f
    if len(document.entries) == 1 and document.entries[0].sequence is not None:
        report["maclane_value"] = maclane_value(document.entries[0].sequence, f.to_laurent2())
    emit(report, args)
    return 0


def _directions(document: InputDocument) -> List[List[int]]:
    specs = document.tentacle_set().standard_specs()
    if len(specs) != len(document.entries):
        raise InputError("cone computations take standard tentacles only")
    return [list(spec.z) for spec in specs]


def cmd_basis(args: argparse.Namespace) -> int:
    bench = open_workbench(args)
    document = load_input(args, bench)
    directions = _directions(document)
    n = document.tentacle_set().ambient_dim
    solver: ConeBasisSolver = require_engine(bench, "cones")  # type: ignore[assignment]
    d = parse_level_flag(args.d, "--d", 1)
    exponents = solver.basis(directions, d, args.degree_cap, n)
    names = generator_names(n)[:-1]
    emit(
        {
            "d": d,
            "degree_cap": solver.setting("degree_cap", args.degree_cap),
            "exponents": [list(a) for a in exponents],
            "monomials": [MultiPoly.monomial(a).render(names) for a in exponents],
        },
        args,
    )
    return 0


def cmd_hilbert(args: argparse.Namespace) -> int:
    bench = open_workbench(args)
    document = load_input(args, bench)
    directions = _directions(document)
    n = document.tentacle_set().ambient_dim
    solver: ConeBasisSolver = require_engine(bench, "cones")  # type: ignore[assignment]
    bound = solver.setting("search_bound", args.search_bound)
    basis = solver.hilbert(directions, bound, n)
    emit(
        {
            "generators": [list(g) for g in basis],
            "monomials": algebra_generators(directions, bound, n),
            "search_bound": bound,
        },
        args,
    )
    return 0


def cmd_witness(args: argparse.Namespace) -> int:
    bench = open_workbench(args)
    document = load_input(args, bench)
    specs = document.semidegree_specs()
    if not specs or len(specs) != len(document.entries):
        raise InputError("the witness search takes plane Puiseux-type tentacles only")
    search: WitnessSearch = require_engine(bench, "witness")  # type: ignore[assignment]
    grading = args.grading.split(",") if args.grading else search.setting("grading")
    d = parse_rat_flag(args.d, "--d")
    d_max = parse_rat_flag(args.Dmax, "--Dmax")
    d_min = parse_rat_flag(args.Dmin, "--Dmin", Fraction(1))
    report: Report = {"d": d, "Dmin": d_min, "Dmax": d_max, "grading": list(grading)}
    space = search.space(specs, d, d_max, grading)
    report["dimension"] = len(space)
    witness = search.witness(specs, d, d_min, d_max, grading)
    report["witness"] = witness
    if witness is not None:
        report["witness_degree"] = graded_degree(grading, witness)
        report["leading_form"] = leading_form(grading, witness)
    if args.profile:
        D_list = [parse_rat_flag(v, "--profile") for v in args.profile.split(",")]
        dims = search.profile(specs, d, D_list, grading)
        report["profile"] = {"D": D_list, "dimensions": dims}
        report["profile_increasing"] = strictly_increasing(dims)
    emit(report, args)
    return 0


def cmd_lift(args: argparse.Namespace) -> int:
    bench = open_workbench(args)
    document = load_input(args, bench)
    S = document.tentacle_set()
    names = variable_names(S.ambient_dim, lifted=True)
    q = require_poly(args, names)
    report: Report = {
        "constraints": lifted_set_description(document.constraints, S.ambient_dim),
    }
    if any(exps[-1] for exps in q.terms):
        membership = lift_membership(q, S)
        report["pieces"] = {
            str(level): piece.render(names[:-1]) for level, piece in q.split_last().items()
        }
        report["membership"] = {str(level): ok for level, ok in membership.items()}
        report["bounded"] = all(membership.values())
    else:
        level = parse_level_flag(args.d, "--d", 0)
        base = MultiPoly(S.ambient_dim, {e[:-1]: c for e, c in q.terms.items()})
        element = GradedElement(base, level)
        report["lifted"] = lift_element(element).render(names)
        report["level"] = level
        report["coefficient_bound"] = coefficient_bound(
            level, parse_rat_flag(args.bound, "--bound", Fraction(1))
        )
    emit(report, args)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    bench = open_workbench(args)
    document = load_input(args, bench)
    f = require_poly(args, ("x", "y")).to_laurent2()
    oracle: GrowthOracle = require_engine(bench, "oracle")  # type: ignore[assignment]
    results = []
    for entry in document.entries:
        spec = entry.tentacle
        if not isinstance(spec, SemidegreeSpec) or spec.is_total_degree:
            results.append({"path": entry.path, "skipped": "not a Puiseux tentacle"})
            continue
        result = oracle.corroborate(spec, f, args.seed)
        result["path"] = entry.path
        results.append(result)
    emit({"polynomial": f, "results": results}, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tentacle",
        description="tentaclealgebra - growth of polynomials on semialgebraic tentacles",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config", help=f"Path to the workbench config (default {CONFIG_FILENAME})"
    )
    common.add_argument("--out", help="Write the report to this file instead of stdout")
    common.add_argument("--format", choices=["json", "text"], default="json", help="Report format")
    common.add_argument("--term-limit", type=int, help="Puiseux terms per branch")

    init_parser = subparsers.add_parser("init", help="Write the default configuration")
    init_parser.add_argument("--name", default="tentacle", help="Workbench name")
    init_parser.add_argument("--config", help=f"Target file (default {CONFIG_FILENAME})")
    init_parser.add_argument("--force", action="store_true", help="Overwrite an existing file")
    init_parser.set_defaults(func=cmd_init)

    status_parser = subparsers.add_parser("status", help="Show workbench components")
    status_parser.add_argument("--config", help="Path to the workbench config")
    status_parser.set_defaults(func=cmd_status)

    commands: List[tuple] = [
        ("expand", "Puiseux branches at infinity of --poly", cmd_expand),
        ("spec", "Generic series of the tentacles in a file", cmd_spec),
        ("keyforms", "Key forms of a single tentacle", cmd_keyforms),
        ("classify", "Finite generation and dimension verdicts for B(S)", cmd_classify),
        ("eval", "delta_star, delta_bar and delta_S of --poly", cmd_eval),
        ("basis", "Monomial basis of B_d for standard tentacles", cmd_basis),
        ("hilbert", "Hilbert basis and algebra generators for standard tentacles", cmd_hilbert),
        ("witness", "Search for polynomials of bounded growth", cmd_witness),
        ("lift", "Lift --poly to the set one dimension up", cmd_lift),
        ("oracle", "Sampled growth of --poly along the tentacles", cmd_oracle),
    ]
    for name, help_text, func in commands:
        sub = subparsers.add_parser(name, help=help_text, parents=[common])
        sub.add_argument("input", nargs="?", help="JSON input document")
        sub.add_argument("--poly", help="Polynomial in the text grammar")
        sub.add_argument("--d", help="Growth level d")
        sub.add_argument("--Dmin", help="Smallest degree of a witness")
        sub.add_argument("--Dmax", help="Degree bound of the search")
        sub.add_argument("--profile", help="Comma-separated degree bounds for a dimension profile")
        sub.add_argument("--grading", help="Weights w_x,w_y of the degree, e.g. 1/3,1")
        sub.add_argument("--degree-cap", type=int, help="Largest total degree listed")
        sub.add_argument("--search-bound", type=int, help="Coordinate bound of the Hilbert search")
        sub.add_argument("--seed", type=int, help="Seed of the sampling oracle")
        sub.add_argument("--bound", help="Sup-norm bound C of the lifted element on [0, 1]")
        sub.set_defaults(func=func)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point."""
    setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 2

    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except TentacleError as e:
        err_console.print(f"Error: {e}", style="red bold")
        return e.exit_code
    except Exception as e:
        logger.debug("unexpected failure", exc_info=True)
        err_console.print(f"Error: {e}", style="red bold")
        return 3


if __name__ == "__main__":
    sys.exit(main())
