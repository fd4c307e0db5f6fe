"""
Lattice command - exact certificate that G5^alpha_(s,n) admits a lattice.
"""

from ..lattice.certificate import certificate, render_charpoly
from ..utilities.formatters import format_matrix, group, key_value_panel, text_block
from .core.command_result import CommandResult

PROVENANCE = "Q exp(tau ad_e5) Q^-1 = B_s over Q(sqrt(D))"


def lattice_command(s: int, n: int) -> CommandResult:
    """Build and verify the certificate for (s, n)."""
    cert = certificate(s, n)
    data = cert.to_dict()
    symbolic = data["symbolic"]
    view = group(
        key_value_panel(
            f"lattice certificate s={s}, n={n}",
            {
                "D": cert.D,
                "charpoly": render_charpoly(cert.charpoly, "λ"),
                "det B_s": cert.determinant,
                "tau": symbolic["tau"],
                "alpha": symbolic["alpha"],
                "alpha > 0": symbolic["alpha_positive"],
            },
            subtitle=PROVENANCE,
        ),
        text_block("exp(tau ad_e5)", format_matrix(data["M"])),
        text_block("Q", format_matrix(data["Q"])),
        text_block("B_s", format_matrix(data["Bs"])),
    )
    return CommandResult.success("lattice", data, PROVENANCE, view)
