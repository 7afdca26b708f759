"""Command line argument parsing for the propagator toolkit."""

import argparse
import re
from typing import Optional, Sequence

from utils.exceptions import UsageError

_RANGE_PATTERN = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")


def parse_range(text: str) -> tuple[int, int]:
    """Parse an inclusive range 'A..B'.

    Raises:
        UsageError: If the text is not two nonnegative integers joined by '..'.
    """
    match = _RANGE_PATTERN.match(text)
    if not match:
        raise UsageError(f"Malformed range '{text}'", "expected A..B with nonnegative integers A and B")
    return int(match.group(1)), int(match.group(2))


def _add_model_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--model",
        choices=["free", "step", "delta"],
        default="free",
        help="Potential weighting the paths (default: free)"
    )

    parser.add_argument(
        "--V",
        type=float,
        default=1.0,
        help="Step height on x < 0 for --model step (default: 1.0)"
    )

    parser.add_argument(
        "--a",
        type=float,
        default=1.0,
        help="Delta coupling for --model delta and pdx-verify (default: 1.0)"
    )

    parser.add_argument(
        "--mass",
        type=float,
        default=1.0,
        help="Particle mass m (default: 1.0)"
    )


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--out",
        type=str,
        default=None,
        help="Output file; a <out>.manifest.json is written next to it (default: stdout)"
    )

    parser.add_argument(
        "--format",
        choices=["csv", "json"],
        default="csv",
        help="Table format (default: csv)"
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the parser with one subcommand per toolkit operation."""
    parser = argparse.ArgumentParser(
        prog="run_toolkit.py",
        description="Propagators near step and delta potentials: exact lattice counts, "
                    "continuum limits and path-decomposition checks"
    )

    parser.add_argument(
        "--debug",
        action="store_true",
        help="Enable debug logging"
    )

    subparsers = parser.add_subparsers(dest="command", required=True)

    count = subparsers.add_parser("count", help="Catalan and central binomial counts with asymptotics")
    count.add_argument(
        "--range",
        dest="n_range",
        type=str,
        default="0..10",
        help="Inclusive n range A..B (default: 0..10)"
    )
    _add_output_options(count)

    density = subparsers.add_parser("density", help="Lattice return densities: closed form, enumeration, transfer matrix")
    _add_model_options(density)
    density.add_argument(
        "--T",
        dest="total_time",
        type=float,
        default=1.0,
        help="Total time T spanned by the 2n steps (default: 1.0)"
    )
    density.add_argument(
        "--n",
        dest="ns",
        type=int,
        action="append",
        help="Half the number of steps; repeatable (default: 1 2 5 10)"
    )
    density.add_argument(
        "--tol",
        type=float,
        default=1e-12,
        help="Relative agreement required between the density columns (default: 1e-12)"
    )
    _add_output_options(density)

    histogram = subparsers.add_parser("histogram", help="Exhaustive below-time and crossing histograms")
    histogram.add_argument(
        "--n",
        dest="ns",
        type=int,
        action="append",
        help="Half the number of steps; repeatable (default: 8)"
    )
    _add_output_options(histogram)

    converge = subparsers.add_parser("converge", help="Continuum limit of u / 2 eta with extrapolation and slope")
    _add_model_options(converge)
    converge.add_argument(
        "--T",
        dest="total_time",
        type=float,
        default=1.0,
        help="Total time T (default: 1.0)"
    )
    converge.add_argument(
        "--n",
        dest="ns",
        type=int,
        action="append",
        help="Sweep points; repeatable, at least two (default: 1000 10000 100000)"
    )
    converge.add_argument(
        "--tol",
        type=float,
        default=0.2,
        help="Allowed deviation of the fitted slope from the model's order (default: 0.2)"
    )
    _add_output_options(converge)

    verify = subparsers.add_parser("pdx-verify", help="Check path-decomposition assemblies against closed forms")
    _add_model_options(verify)
    verify.add_argument(
        "--T",
        dest="total_time",
        type=float,
        nargs="*",
        default=[0.5, 1.0, 2.0],
        help="Total times of the query grid (default: 0.5 1.0 2.0)"
    )
    verify.add_argument(
        "--x0",
        type=float,
        nargs="*",
        default=[0.5, 1.0, 2.0],
        help="Start points of the query grid (default: 0.5 1.0 2.0)"
    )
    verify.add_argument(
        "--x1",
        type=float,
        default=None,
        help="Fixed end point (default: x1 = -x0)"
    )
    verify.add_argument(
        "--tol",
        type=float,
        default=None,
        help="Relative tolerance for every check (default: 1e-8 single integrals, 1e-6 otherwise)"
    )
    verify.add_argument(
        "--unit",
        type=float,
        default=1.0,
        help="Length unit the endpoints are multiples of, for the lattice oracle (default: 1.0)"
    )
    verify.add_argument(
        "--lattice-oracle",
        action="store_true",
        help="Also compare the step assembly with the extrapolated transfer-matrix oracle"
    )
    verify.add_argument(
        "--max-subdivisions",
        type=int,
        default=None,
        help="Quadrature panel budget (default: from configuration)"
    )
    verify.add_argument(
        "--no-endpoint-substitution",
        action="store_true",
        help="Integrate without flattening the crossing-time endpoints"
    )
    verify.add_argument(
        "--out",
        type=str,
        default=None,
        help="JSON report file; a <out>.manifest.json is written next to it (default: stdout)"
    )

    return parser


def parse_arguments(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parse command line arguments.

    Args:
        argv: Arguments without the program name; defaults to sys.argv.

    Returns:
        argparse.Namespace: Parsed arguments
    """
    return build_parser().parse_args(argv)
