"""
Commands package for the solvmanifold workbench.

One module per CLI command; every command returns a ``CommandResult`` carrying
JSON-ready data, its provenance and a rich view for human output.
"""

from .algebra import algebra_command
from .classify import classify_command
from .cohomology import cohomology_command
from .lattice import lattice_command
from .metrics import metrics_command
from .nakamura import nakamura_command
from .tables import tables_command

__all__ = [
    "algebra_command",
    "classify_command",
    "cohomology_command",
    "lattice_command",
    "metrics_command",
    "nakamura_command",
    "tables_command",
]
