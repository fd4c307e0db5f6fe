"""
Command result types shared by every CLI command.

A command returns its JSON payload, an optional rich view of the same data and
the table row or check it relied on.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from ...utilities.constants import EXIT_INFEASIBLE, EXIT_OK, EXIT_PARSE_ERROR


class CommandStatus(Enum):
    """Command execution status."""

    SUCCESS = "success"
    INFEASIBLE = "infeasible"
    FAILED = "failed"
    VALIDATION_ERROR = "validation_error"

    def is_success(self) -> bool:
        """Check if status indicates success."""
        return self == CommandStatus.SUCCESS

    def is_error(self) -> bool:
        """Check if status indicates an error."""
        return self in (CommandStatus.FAILED, CommandStatus.VALIDATION_ERROR)

    @property
    def exit_code(self) -> int:
        if self == CommandStatus.SUCCESS:
            return EXIT_OK
        if self == CommandStatus.VALIDATION_ERROR:
            return EXIT_PARSE_ERROR
        return EXIT_INFEASIBLE


@dataclass
class CommandResult:
    """Result of command execution."""

    status: CommandStatus
    command: str = ""
    data: dict[str, Any] = field(default_factory=dict)
    provenance: str | None = None
    error_message: str | None = None
    view: Any = None

    def is_success(self) -> bool:
        """Check if command execution was successful."""
        return self.status.is_success()

    def is_error(self) -> bool:
        """Check if command execution failed."""
        return self.status.is_error()

    @property
    def exit_code(self) -> int:
        return self.status.exit_code

    @classmethod
    def success(
        cls, command: str, data: dict[str, Any], provenance: str | None = None, view: Any = None
    ) -> "CommandResult":
        """Create a successful command result."""
        return cls(CommandStatus.SUCCESS, command, data, provenance, view=view)

    @classmethod
    def infeasible(
        cls,
        command: str,
        data: dict[str, Any],
        message: str,
        provenance: str | None = None,
        view: Any = None,
    ) -> "CommandResult":
        """A certificate was requested and the answer is a certified 'no'."""
        return cls(CommandStatus.INFEASIBLE, command, data, provenance, message, view)

    @classmethod
    def failure(cls, command: str, error_message: str) -> "CommandResult":
        """Create a failed command result."""
        return cls(CommandStatus.FAILED, command, error_message=error_message)

    @classmethod
    def validation_error(cls, command: str, error_message: str) -> "CommandResult":
        """Create a validation error command result."""
        return cls(CommandStatus.VALIDATION_ERROR, command, error_message=error_message)

    def to_dict(self) -> dict[str, Any]:
        """Convert result to dictionary representation."""
        return {
            "command": self.command,
            "status": self.status.value,
            "provenance": self.provenance,
            "error_message": self.error_message,
            "data": self.data,
        }

    def __str__(self) -> str:
        if self.is_success():
            return f"SUCCESS: {self.command}"
        return f"{self.status.value.upper()}: {self.error_message}"
