"""Command-line argument parsing."""

import argparse

from schemas.run_config import Command, RunConfig


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psi-hilfer",
        description="Solve and analyse psi-Hilfer fractional integrodifferential initial-value problems.",
    )
    parser.add_argument("command", choices=[c.value for c in Command], help="what to run")
    parser.add_argument("--problem", required=True, help="problem file (.json or .toml)")
    parser.add_argument("--perturbed", help="perturbed problem file (depend)")
    parser.add_argument("--n", type=int, help="number of psi-space panels (default from settings)")
    parser.add_argument("--tol", type=float, help="Picard stopping tolerance in the weighted norm")
    parser.add_argument("--max-iter", type=int, dest="max_iter", help="maximum number of Picard sweeps")
    parser.add_argument("--format", choices=["csv", "json"], help="output format")
    parser.add_argument("--out", help="output file (default: standard output)")
    parser.add_argument("--eps", type=float, help="mismatch bound for depend (default: measured)")
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    return parser


def parse_config(argv: list[str] | None = None) -> RunConfig:
    """
    Parse argv into a RunConfig; omitted options fall back to settings defaults.

    Raises:
        SystemExit: argparse usage error.
        pydantic.ValidationError: the values break a RunConfig invariant.
    """
    args = build_parser().parse_args(argv)
    values = {
        "command": args.command,
        "problem_path": args.problem,
        "perturbed_path": args.perturbed,
        "n": args.n,
        "tol": args.tol,
        "max_iter": args.max_iter,
        "format": args.format,
        "output": args.out,
        "eps": args.eps,
        "verbose": args.verbose,
    }
    return RunConfig.model_validate({key: value for key, value in values.items() if value is not None})
