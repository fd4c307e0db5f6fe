"""
Command routing for the solvmanifold workbench CLI.

Maps parsed arguments onto the command functions and turns the exceptions of
the mathematical layers into command results with the right exit status.
"""

import argparse
import logging
from collections.abc import Callable

from ..commands import (
    algebra_command,
    classify_command,
    cohomology_command,
    lattice_command,
    metrics_command,
    nakamura_command,
    tables_command,
)
from ..commands.core.command_result import CommandResult
from ..config.workbench_config import WorkbenchConfig
from ..utilities.constants import (
    NAKAMURA_T_SAMPLES,
    ClosureError,
    DegenerateStructureError,
    IntegrabilityError,
    InternalConsistencyError,
    ValidationError,
)

logger = logging.getLogger(__name__)


class CommandRouter:
    """
    Routes parsed CLI arguments to command implementations.

    Input errors become validation results (exit 2); failed internal
    verifications become failures (exit 1).
    """

    def __init__(self, config: WorkbenchConfig | None = None) -> None:
        """Initialize command router with command mappings."""
        self.config = config or WorkbenchConfig()
        self.command_map: dict[str, Callable[[argparse.Namespace], CommandResult]] = {
            "algebra": self._route_algebra,
            "classify": self._route_classify,
            "metrics": self._route_metrics,
            "cohomology": self._route_cohomology,
            "nakamura": self._route_nakamura,
            "lattice": self._route_lattice,
            "tables": self._route_tables,
        }

    def route_command(self, args: argparse.Namespace) -> CommandResult:
        """
        Route parsed arguments to the appropriate command.

        Args:
            args: Parsed command line arguments

        Returns:
            The command result; exceptions from the command are mapped to
            validation or failure results.

        Raises:
            ValueError: If command is not recognized
        """
        if not args.command:
            raise ValueError("No command specified")

        if args.command not in self.command_map:
            raise ValueError(f"Unknown command: {args.command}")

        handler = self.command_map[args.command]
        try:
            return handler(args)
        except (ValidationError, IntegrabilityError, DegenerateStructureError) as e:
            logger.debug(f"{args.command} rejected its input: {e}")
            return CommandResult.validation_error(args.command, str(e))
        except (InternalConsistencyError, ClosureError) as e:
            logger.error(f"{args.command} failed an internal check: {e}")
            return CommandResult.failure(args.command, str(e))
        except ZeroDivisionError as e:
            return CommandResult.validation_error(args.command, f"Division by zero: {e}")

    def _route_algebra(self, args: argparse.Namespace) -> CommandResult:
        """Route algebra command."""
        return algebra_command(args.text, args.index, args.alpha, args.beta, args.check)

    def _route_classify(self, args: argparse.Namespace) -> CommandResult:
        """Route classify command."""
        return classify_command(args.A, args.B, args.eps, args.family)

    def _route_metrics(self, args: argparse.Namespace) -> CommandResult:
        """Route metrics command."""
        return metrics_command(
            args.A,
            args.B,
            args.eps,
            args.family,
            args.kind,
            args.exists,
            args.t2,
            args.u,
            args.v,
            args.z,
        )

    def _route_cohomology(self, args: argparse.Namespace) -> CommandResult:
        """Route cohomology command."""
        return cohomology_command(
            args.C, args.t, args.theory, args.A, args.B, args.eps, args.family
        )

    def _route_nakamura(self, args: argparse.Namespace) -> CommandResult:
        """Route nakamura command."""
        mode = "moduli" if args.family else args.mode
        t = args.t or (NAKAMURA_T_SAMPLES[0] if mode == "deform" else "0")
        return nakamura_command(mode, args.C, t, args.k, args.family, args.param, args.B)

    def _route_lattice(self, args: argparse.Namespace) -> CommandResult:
        """Route lattice command."""
        return lattice_command(args.s, args.n)

    def _route_tables(self, args: argparse.Namespace) -> CommandResult:
        """Route tables command."""
        self.config.apply_overrides(
            classification_samples=args.samples, sample_seed=args.seed, fixtures_dir=args.fixtures
        )
        return tables_command(
            args.only,
            self.config.fixtures_dir,
            self.config.classification_samples if args.sweep else 0,
            self.config.sample_seed,
            self.config.sample_height,
        )

    def get_available_commands(self) -> list[str]:
        """Get list of available commands."""
        return list(self.command_map.keys())


def create_command_router(config: WorkbenchConfig | None = None) -> CommandRouter:
    """
    Factory function to create command router.

    Returns:
        Configured CommandRouter instance
    """
    return CommandRouter(config)
