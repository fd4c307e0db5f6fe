"""
Argument parsing for the solvmanifold workbench CLI.

Complex scalars are passed as text in the ``p/q+r/s*i`` grammar and parsed by
the commands. Values starting with a minus sign need the ``--flag=value`` form,
e.g. ``--B=-1/2``.
"""

import argparse
from pathlib import Path

from .. import __version__
from ..commands.tables import SECTIONS
from ..config.workbench_config import LOG_LEVELS
from ..utilities.constants import NAKAMURA_T_SAMPLES, Family, MetricKind, Theory


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got: {text}")
    return value


class CLIArgumentParser:
    """
    Argument parser for every workbench command.

    Global options (``--format``, ``--log-level``) are accepted both before
    and after the command name.
    """

    def __init__(self) -> None:
        """Initialize the argument parser."""
        self.parser = argparse.ArgumentParser(
            prog="solvmanifold-kit",
            description=f"Exact workbench for splitting-type complex structures v{__version__}",
        )
        self.parser.add_argument(
            "--version", action="version", version=f"Solvmanifold-Kit v{__version__}"
        )
        self._add_global_options(self.parser, default=None)
        self.common = argparse.ArgumentParser(add_help=False)
        self._add_global_options(self.common, default=argparse.SUPPRESS)
        self.subparsers = self.parser.add_subparsers(dest="command", help="Available commands")
        self._setup_all_parsers()

    def parse_args(self, args: list[str] | None = None) -> argparse.Namespace:
        """Parse command line arguments."""
        return self.parser.parse_args(args)

    def print_help(self) -> None:
        """Print help message for the CLI."""
        self.parser.print_help()

    @staticmethod
    def _add_global_options(parser: argparse.ArgumentParser, default: object) -> None:
        parser.add_argument(
            "--format",
            dest="output_format",
            choices=["text", "json"],
            default=default,
            help="Output format (default: text, or SOLVKIT_FORMAT)",
        )
        parser.add_argument(
            "--log-level",
            type=str.upper,
            choices=LOG_LEVELS,
            default=default,
            help="Logging level (default: WARNING, or SOLVKIT_LOG_LEVEL)",
        )

    def _add_command(self, name: str, help_text: str) -> argparse.ArgumentParser:
        return self.subparsers.add_parser(name, help=help_text, parents=[self.common])

    @staticmethod
    def _add_splitting_options(parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--A", default="0", help="Complex parameter A (default: 0)")
        parser.add_argument("--B", default="0", help="Complex parameter B (default: 0)")
        parser.add_argument(
            "--eps", type=int, choices=[0, 1], default=1, help="Nilpotent part eps (default: 1)"
        )
        parser.add_argument(
            "--family",
            choices=[family.value for family in Family],
            default=Family.C2.value,
            help="Splitting family (default: C2)",
        )

    def _setup_all_parsers(self) -> None:
        """Set up all command parsers."""
        self._setup_algebra_commands()
        self._setup_structure_commands()
        self._setup_nakamura_commands()
        self._setup_table_commands()

    def _setup_algebra_commands(self) -> None:
        """Set up the algebra command parser."""
        parser_algebra = self._add_command(
            "algebra", help_text="Parse or look up a Lie algebra and check its axioms"
        )
        source = parser_algebra.add_mutually_exclusive_group(required=True)
        source.add_argument(
            "--parse", dest="text", help="Structure equations, e.g. '(0,0,0,12,13,23)'"
        )
        source.add_argument(
            "--label", dest="index", type=int, help="Catalog index k of s_k (1..12)"
        )
        parser_algebra.add_argument("--alpha", help="First catalog parameter")
        parser_algebra.add_argument("--beta", help="Second catalog parameter")
        parser_algebra.add_argument(
            "--check",
            action="store_true",
            help="Exit with status 1 unless Jacobi and unimodularity hold",
        )

    def _setup_structure_commands(self) -> None:
        """Set up classify, metrics and cohomology parsers."""
        # Classify subcommand
        parser_classify = self._add_command(
            "classify", help_text="Classify a splitting-type complex structure"
        )
        self._add_splitting_options(parser_classify)

        # Metrics subcommand
        parser_metrics = self._add_command(
            "metrics", help_text="Special Hermitian metrics on a splitting-type structure"
        )
        self._add_splitting_options(parser_metrics)
        parser_metrics.add_argument(
            "--kind",
            choices=[kind.value for kind in MetricKind],
            help="Only this metric condition (default: all)",
        )
        parser_metrics.add_argument(
            "--exists",
            action="store_true",
            help="Decide existence with a witness or an obstruction",
        )
        parser_metrics.add_argument("--t2", default="1", help="Metric coefficient t^2 (default: 1)")
        parser_metrics.add_argument("--u", default="0", help="Metric coefficient u (default: 0)")
        parser_metrics.add_argument("--v", default="0", help="Metric coefficient v (default: 0)")
        parser_metrics.add_argument("--z", default="0", help="Metric coefficient z (default: 0)")

        # Cohomology subcommand
        parser_cohomology = self._add_command(
            "cohomology", help_text="Cohomology numbers of a splitting structure or of J_C"
        )
        self._add_splitting_options(parser_cohomology)
        parser_cohomology.add_argument(
            "--C", help="Nakamura parameter C with Im C != 0 (overrides --A/--B/--eps)"
        )
        parser_cohomology.add_argument(
            "--t", default="0", help="Deformation parameter, C = i/(2k+1) only (default: 0)"
        )
        parser_cohomology.add_argument(
            "--theory",
            choices=[theory.value for theory in Theory],
            help="Only this theory (default: all)",
        )

    def _setup_nakamura_commands(self) -> None:
        """Set up the nakamura and lattice parsers."""
        parser_nakamura = self._add_command(
            "nakamura", help_text="Complex structures J_C on the Nakamura manifold"
        )
        mode = parser_nakamura.add_mutually_exclusive_group(required=True)
        mode.add_argument(
            "--ddbar",
            dest="mode",
            action="store_const",
            const="ddbar",
            help="Decide the ∂∂̄-lemma for J_C (needs --C)",
        )
        mode.add_argument(
            "--deform",
            dest="mode",
            action="store_const",
            const="deform",
            help="Deformation summary of X_k along t (needs --k)",
        )
        mode.add_argument(
            "--characters",
            dest="mode",
            action="store_const",
            const="characters",
            help="Characters of J_C and their lattice restrictions (needs --C)",
        )
        mode.add_argument(
            "--moduli",
            dest="family",
            choices=["i", "ii", "iii"],
            help="Structure equations and h^{3,0} of a moduli family",
        )
        mode.add_argument(
            "--unstable",
            dest="mode",
            action="store_const",
            const="unstable",
            help="Deformation of the Nakamura structure leaving the splitting class",
        )
        mode.add_argument(
            "--jb-witness",
            dest="mode",
            action="store_const",
            const="jb-witness",
            help="Explicit equivalence J_B ~ J_{-B} (needs --B)",
        )
        parser_nakamura.add_argument("--C", help="Parameter C with Im C != 0")
        parser_nakamura.add_argument(
            "--t",
            help=f"Deformation parameter with |t| < 1 (default: 0, {NAKAMURA_T_SAMPLES[0]} with --deform)",
        )
        parser_nakamura.add_argument("--k", type=int, help="Index k of C = i/(2k+1)")
        parser_nakamura.add_argument(
            "--param", default="0", help="Parameter A or B of the moduli family (default: 0)"
        )
        parser_nakamura.add_argument("--B", help="Parameter B of J_B with |B| < 1")

        # Lattice subcommand
        parser_lattice = self._add_command(
            "lattice", help_text="Exact lattice certificate for G5 at (s, n)"
        )
        parser_lattice.add_argument("--s", type=int, required=True, help="Nonzero integer s")
        parser_lattice.add_argument("--n", type=int, required=True, help="Integer trace n >= 3")

    def _setup_table_commands(self) -> None:
        """Set up the tables parser."""
        parser_tables = self._add_command(
            "tables", help_text="Regenerate the reference tables and compare"
        )
        scope = parser_tables.add_mutually_exclusive_group()
        scope.add_argument("--all", action="store_true", help="Every table (default)")
        scope.add_argument(
            "--only", nargs="+", choices=list(SECTIONS), help="Only the named tables"
        )
        parser_tables.add_argument(
            "--fixtures", type=Path, help="Write one JSON fixture per table into this directory"
        )
        parser_tables.add_argument(
            "--sweep",
            action="store_true",
            help="Add the seeded classification sweep with the canonical-bundle check",
        )
        parser_tables.add_argument(
            "--samples",
            type=_nonnegative,
            help="Sweep size (default: SOLVKIT_SAMPLES or the environment preset)",
        )
        parser_tables.add_argument(
            "--seed", type=int, help="Sweep seed (default: SOLVKIT_SEED or 20240)"
        )


def create_cli_parser() -> CLIArgumentParser:
    """
    Factory function to create CLI argument parser.

    Returns:
        Configured CLIArgumentParser instance
    """
    return CLIArgumentParser()
