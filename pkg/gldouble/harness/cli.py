"""Command-line surface: argument parsing, config merging and command dispatch."""
import argparse
import json
import logging
import re
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from gldouble.config import BRACKETS, Settings, configure, load_config_file, settings
from gldouble.errors import UsageError
from gldouble.harness import campaign
from gldouble.schemas.errors import settings_errors
from gldouble.schemas.reports import CheckRecord, Report
from gldouble.seeds import to_dot, to_json

logger = logging.getLogger(__name__)

# flag name -> Settings field supplying its default
FLAG_DEFAULTS = {
    "points": "default_points",
    "trials": "default_trials",
    "seed": "default_seed",
    "bracket": "default_bracket",
}

# checks stated only above the generic n >= 2
MIN_N = {"corollary": 3, "dual": 3}

_COMPACT_LABEL = re.compile(r"^(phi|psi|hU|cU|g|h|f|c)_?(\d)_?(\d)?$")


class CampaignArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting with status 2."""

    def error(self, message: str):
        raise UsageError(message)


def normalize_vertex(name: str) -> str:
    """Accept compact names such as phi11 or g22 for the labels phi_1_1, g_2_2."""
    name = name.strip()
    match = _COMPACT_LABEL.match(name)
    if not match:
        return name
    kind, a, b = match.groups()
    return f"{kind}_{a}" if b is None else f"{kind}_{a}_{b}"


def _common() -> argparse.ArgumentParser:
    common = CampaignArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with flag values and settings")
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    common.add_argument("--log-level", dest="log_level", help="logging level (default INFO)")
    common.add_argument("--n", type=int, help="matrix size")
    return common


def _sampling(parser: argparse.ArgumentParser, count: str) -> None:
    parser.add_argument(f"--{count}", type=int)
    parser.add_argument("--seed", type=int)


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = CampaignArgumentParser(
        prog="gldouble",
        description="Exact verification of the generalized cluster structure on the Drinfeld double of GL_n",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=CampaignArgumentParser)

    verify = commands.add_parser("verify", help="run a verification campaign")
    checks = verify.add_subparsers(dest="check", required=True, parser_class=CampaignArgumentParser)

    lc = checks.add_parser("log-canonical", parents=[common])
    _sampling(lc, "points")
    lc.add_argument("--bracket", choices=BRACKETS)
    lc.add_argument("--pairs", type=int, help="check a random subset of this many pairs")
    lc.add_argument("--corrupted", action="store_true", help="debug: replace phi_1_1 by phi_1_1 + g_1_1")

    for name in ("identity", "corollary"):
        sub = checks.add_parser(name, parents=[common])
        _sampling(sub, "trials")
    checks.choices["corollary"].add_argument(
        "--no-regularity", dest="regularity", action="store_false", help="skip the divisibility test"
    )

    cas = checks.add_parser("casimirs", parents=[common])
    _sampling(cas, "points")
    cas.add_argument("--bracket", choices=BRACKETS)

    strings = checks.add_parser("strings", parents=[common])
    _sampling(strings, "points")
    strings.add_argument("--dual", action="store_true")

    dual = checks.add_parser("dual", parents=[common], help="dual exchange relation and exponent identity")
    _sampling(dual, "points")

    quiver = commands.add_parser("quiver", parents=[common], help="build and export a quiver")
    quiver.add_argument("--dot", help="DOT output path, - for stdout")
    quiver.add_argument("--json", help="JSON output path, - for stdout")
    kind = quiver.add_mutually_exclusive_group()
    kind.add_argument("--dual", action="store_true")
    kind.add_argument("--diagonal", action="store_true")

    mutate = commands.add_parser("mutate", parents=[common], help="mutate the initial seed and certify the result")
    mutate.add_argument("--at", help="vertex to mutate at")
    mutate.add_argument("--sequence", help="comma-separated vertices, applied after --at")
    _sampling(mutate, "points")
    mutate.add_argument("--check-regularity", dest="regularity", action="store_true")
    mutate.add_argument("--dual", action="store_true", help="mutate the dual seed")
    return parser


def resolve_options(args: argparse.Namespace) -> argparse.Namespace:
    """Merge CLI flags over the config file over Settings defaults, and apply settings overrides."""
    try:
        file_values: Dict[str, Any] = load_config_file(args.config) if args.config else {}
    except (OSError, ValueError) as exc:
        raise UsageError(f"Cannot read config file: {exc}") from exc

    overrides = {k: v for k, v in file_values.items() if k in Settings.model_fields}
    if args.log_level:
        overrides["log_level"] = args.log_level
    try:
        configure(overrides)
    except ValidationError as exc:
        raise UsageError("Invalid settings", errors=settings_errors(exc)) from exc

    for key, value in file_values.items():
        if key in Settings.model_fields:
            continue
        if getattr(args, key, None) is None and hasattr(args, key):
            setattr(args, key, value)
    for flag, field in FLAG_DEFAULTS.items():
        if hasattr(args, flag) and getattr(args, flag) is None:
            setattr(args, flag, getattr(settings, field))

    if args.n is None:
        raise UsageError("--n is required")
    if args.n < 2:
        raise UsageError(f"--n must be >= 2, got {args.n}")
    minimum = MIN_N.get(getattr(args, "check", None), 2)
    if args.command == "verify" and args.n < minimum:
        raise UsageError(f"verify {args.check} needs --n >= {minimum}, got {args.n}")
    return args


def _command_echo(args: argparse.Namespace) -> List[str]:
    words = [args.command] + ([args.check] if args.command == "verify" else [])
    skip = {"command", "check", "config", "out", "log_level"}
    for key, value in sorted(vars(args).items()):
        if key in skip or value is None or value is False:
            continue
        words.append(f"--{key.replace('_', '-')}" if value is True else f"--{key.replace('_', '-')}={value}")
    return words


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(path).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")


def _run_verify(run: campaign.Campaign, args: argparse.Namespace) -> None:
    n, rng = args.n, run.rng
    if args.check == "log-canonical":
        run.run(
            "log-canonical",
            lambda: campaign.check_log_canonical(n, args.points, rng, args.bracket, args.corrupted, args.pairs),
        )
        if args.bracket == "std":
            run.run("diagonal-vanishing", lambda: campaign.check_diagonal_vanishing(n, args.points, rng))
    elif args.check == "identity":
        run.run("long-identity", lambda: campaign.check_identity(n, args.trials, rng))
    elif args.check == "corollary":
        run.run("corollary", lambda: campaign.check_corollary(n, args.trials, rng, args.regularity))
    elif args.check == "casimirs":
        run.run("casimirs", lambda: campaign.check_casimirs(n, args.points, rng, args.bracket))
    elif args.check == "strings":
        space = "dual" if args.dual else "double"
        run.run("strings", lambda: campaign.check_strings(n, args.points, rng, space))
    elif args.check == "dual":
        run.run("exponent-identity", lambda: campaign.check_exponent_identity(n, args.points, rng))
        run.run("dual-exchange", lambda: campaign.check_dual_exchange(n, args.points, rng))


def _run_quiver(run: campaign.Campaign, args: argparse.Namespace) -> bool:
    """Returns True when the quiver itself went to stdout."""
    space = "dual" if args.dual else "diagonal" if args.diagonal else "double"
    seed = campaign.seed_for(args.n, space)
    records = run.run("quiver", lambda: [campaign.check_quiver(seed)])
    counts = records[0].values
    sys.stderr.write(
        f"vertices={counts['vertices']} isolated={counts['isolated']} "
        f"mutable={counts['mutable']} stable={counts['stable']} arrows={counts['arrows']}\n"
    )
    run.report.results["quiver"] = to_json(seed.quiver)
    if args.dot:
        _write(to_dot(seed.quiver, name=f"Q{args.n}"), args.dot)
    if args.json:
        _write(json.dumps(to_json(seed.quiver), indent=2), args.json)
    return "-" in (args.dot, args.json)


def _run_mutate(run: campaign.Campaign, args: argparse.Namespace) -> None:
    sequence = [args.at] if args.at else []
    if args.sequence:
        sequence += [v for v in args.sequence.split(",") if v.strip()]
    sequence = [normalize_vertex(v) for v in sequence]
    if not sequence:
        raise UsageError("mutate needs --at or --sequence")
    space = "dual" if args.dual else "double"
    seed = campaign.seed_for(args.n, space)
    run.run("mutation-algebra", lambda: campaign.check_mutation_algebra(seed))
    run.run(
        "mutate",
        lambda: campaign.check_mutation(args.n, sequence, args.points, run.rng, args.regularity, space),
    )


def execute(args: argparse.Namespace) -> Report:
    """Run a parsed and resolved command and write its outputs."""
    started = time.time()
    seed = getattr(args, "seed", None)
    run = campaign.Campaign(command=_command_echo(args), n=args.n, seed=seed if seed is not None else settings.default_seed)
    logger.info("Campaign started", extra={"command": run.report.command, "n": args.n, "seed": seed})

    quiet = False
    if args.command == "verify":
        _run_verify(run, args)
    elif args.command == "quiver":
        quiet = _run_quiver(run, args)
    elif args.command == "mutate":
        _run_mutate(run, args)

    report = run.finish(int((time.time() - started) * 1000))
    if args.out:
        _write(report.to_json(), args.out)
    elif not quiet:
        _write(report.to_json(), None)
    return report


def exit_code(report: Report) -> int:
    return 0 if report.passed else 2


def failed_checks(report: Report) -> List[CheckRecord]:
    return [c for c in report.checks if c.failed]
