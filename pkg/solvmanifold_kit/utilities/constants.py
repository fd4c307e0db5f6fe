"""
Constants and configuration values for the solvmanifold workbench.

This module centralizes default values, enumerations and the exception
hierarchy shared by every subpackage.
"""

from enum import Enum
from typing import Final

# Dimensions
REAL_DIMENSION: Final[int] = 6
COMPLEX_DIMENSION: Final[int] = 3
CATALOG_SIZE: Final[int] = 12

# Sampling defaults for sweeps
DEFAULT_CLASSIFICATION_SAMPLES: Final[int] = 500
DEFAULT_SAMPLE_SEED: Final[int] = 20240
DEFAULT_SAMPLE_HEIGHT: Final[int] = 4
DEFAULT_EXISTENCE_SAMPLES: Final[int] = 24

# Nakamura lab defaults
NAKAMURA_C_SAMPLES: Final[tuple[str, ...]] = ("i", "i/2", "i/3", "i/4", "1+i", "2+3*i", "2*i/3")
NAKAMURA_T_SAMPLES: Final[tuple[str, ...]] = ("1/2", "1/4", "(1+i)/4")

# Lattice certificate defaults
LATTICE_S_SAMPLES: Final[tuple[int, ...]] = (-2, -1, 1, 2)
LATTICE_N_SAMPLES: Final[tuple[int, ...]] = (3, 4, 5, 6)

# Exit codes
EXIT_OK: Final[int] = 0
EXIT_INFEASIBLE: Final[int] = 1
EXIT_PARSE_ERROR: Final[int] = 2

# Display Constants
EMOJI_SUCCESS: Final[str] = "✅"
EMOJI_ERROR: Final[str] = "❌"
EMOJI_WARNING: Final[str] = "⚠️"
EMOJI_INFO: Final[str] = "📋"
MARK_YES: Final[str] = "✓"
MARK_NO: Final[str] = "−"
MARK_UNKNOWN: Final[str] = "?"


class Family(Enum):
    """Splitting-type families of structure equations."""

    C2 = "C2"
    KT = "KT"

    def __str__(self) -> str:
        return self.value


class DifferentialKind(Enum):
    """Exterior differential operators."""

    D = "d"
    DEL = "del"
    DELBAR = "delbar"


class MetricKind(Enum):
    """Special Hermitian metric conditions, in existence-table column order."""

    KAHLER = "kahler"
    HERMITIAN_SYMPLECTIC = "hermitian_symplectic"
    SKT = "skt"
    ONE_GAUDUCHON = "one_gauduchon"
    BALANCED = "balanced"
    STRONGLY_GAUDUCHON = "strongly_gauduchon"
    GAUDUCHON = "gauduchon"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_string(cls, text: str) -> "MetricKind":
        """Create MetricKind from a CLI token (dashes allowed)."""
        key = text.strip().lower().replace("-", "_")
        for kind in cls:
            if kind.value == key:
                return kind
        raise ValidationError(f"Unknown metric kind: {text}")


class Theory(Enum):
    """Cohomology theories of a double complex."""

    DOLBEAULT = "dolbeault"
    BOTT_CHERN = "bott_chern"
    AEPPLI = "aeppli"
    DE_RHAM = "de_rham"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_string(cls, text: str) -> "Theory":
        """Create Theory from a CLI token (dashes allowed)."""
        key = text.strip().lower().replace("-", "_")
        for theory in cls:
            if theory.value == key:
                return theory
        raise ValidationError(f"Unknown cohomology theory: {text}")


class OutputFormat(Enum):
    """CLI output formats."""

    TEXT = "text"
    JSON = "json"


class ValidationError(ValueError):
    """Input outside the admissible range of an operation."""

    pass


class ParseError(ValidationError):
    """Malformed scalar or Salamon-notation text."""

    pass


class IntegrabilityError(ValueError):
    """Operation requires an integrable almost-complex structure."""

    pass


class DegenerateStructureError(ValueError):
    """Splitting parameters describe a trivial or degenerate action."""

    pass


class ClosureError(RuntimeError):
    """A differential left the span of a finite complex."""

    pass


class InternalConsistencyError(RuntimeError):
    """An exact verification that must hold has failed."""

    pass
