"""
CLI module for Solvmanifold-Kit.

Separates argument parsing from command routing; ``main`` configures logging,
runs one command and prints its result as rich text or deterministic JSON.
"""

import logging
import sys

from ..commands.core.command_result import CommandResult
from ..config.workbench_config import get_config
from ..utilities.console import print_error, print_warning
from ..utilities.constants import EXIT_OK, EXIT_PARSE_ERROR, OutputFormat, ValidationError
from ..utilities.formatters import COLORS, make_console
from ..utilities.serialization import dumps
from .argument_parser import create_cli_parser
from .command_router import create_command_router


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _emit(result: CommandResult, output_format: OutputFormat) -> None:
    if output_format == OutputFormat.JSON:
        sys.stdout.write(dumps(result.to_dict()))
    elif result.view is not None:
        console = make_console()
        console.print(result.view)
        if result.provenance:
            console.print(f"provenance: {result.provenance}", style=COLORS["muted"], markup=False)

    if result.error_message:
        if result.is_error():
            print_error(result.error_message)
        else:
            print_warning(result.error_message)


def main(argv: list[str] | None = None) -> int:
    """
    Main CLI entry point.

    Returns the process exit status: 0 on success, 1 when a requested
    certificate is infeasible or an internal check fails, 2 on invalid input.
    """
    parser = create_cli_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on bad arguments and 0 for --help and --version
        return e.code if isinstance(e.code, int) else EXIT_PARSE_ERROR

    if not args.command:
        parser.print_help()
        return EXIT_OK

    try:
        config = get_config()
        config.apply_overrides(
            output_format=OutputFormat(args.output_format) if args.output_format else None,
            log_level=args.log_level,
        )
    except ValidationError as e:
        print_error(f"Configuration error: {e}")
        return EXIT_PARSE_ERROR

    _configure_logging(config.log_level)
    router = create_command_router(config)
    try:
        result = router.route_command(args)
    except Exception as e:
        print_error(f"Error: {e}")
        return 1

    _emit(result, config.output_format)
    return result.exit_code


__all__ = ["create_cli_parser", "create_command_router", "main"]
