"""
Rich renderables for human-readable command output.

Commands describe their results as key/value panels and tables; the router
prints them through one shared Console.
"""

from collections.abc import Iterable, Mapping, Sequence
from typing import IO, Any

from rich.console import Console, Group, RenderableType
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from .constants import MARK_NO, MARK_YES

COLORS: dict[str, str] = {
    "header": "#00d4ff",
    "muted": "#6c757d",
    "success": "#00d26a",
    "error": "#ff6b6b",
}


def make_console(file: IO[str] | None = None, width: int | None = None) -> Console:
    """Console for command output; no colour codes when ``file`` is not a terminal."""
    return Console(file=file, width=width, highlight=False, soft_wrap=False)


def format_mark(flag: bool) -> str:
    return MARK_YES if flag else MARK_NO


def format_value(value: Any) -> str:
    """Text for one cell: booleans as marks, sequences comma-joined."""
    if value is None:
        return "-"
    if isinstance(value, bool):
        return format_mark(value)
    if isinstance(value, list | tuple):
        return ", ".join(format_value(item) for item in value) if value else "-"
    return str(value)


def format_bidegree(bidegree: Sequence[int]) -> str:
    return f"({','.join(str(x) for x in bidegree)})"


def format_matrix(rows: Sequence[Sequence[Any]]) -> str:
    """Right-aligned matrix text, one row per line."""
    cells = [[str(x) for x in row] for row in rows]
    if not cells or not cells[0]:
        return "[]"
    width = max(len(cell) for row in cells for cell in row)
    return "\n".join("[ " + "  ".join(cell.rjust(width) for cell in row) + " ]" for row in cells)


def key_value_panel(
    title: str, rows: Mapping[str, Any], subtitle: str | None = None
) -> Panel:
    """Two-column panel of labelled values."""
    grid = Table.grid(padding=(0, 2))
    grid.add_column(style=COLORS["muted"], justify="right")
    grid.add_column()
    for key, value in rows.items():
        grid.add_row(key, format_value(value))
    return Panel(
        grid,
        title=Text(title, style=f"bold {COLORS['header']}"),
        subtitle=subtitle,
        border_style=COLORS["header"],
        expand=False,
    )


def data_table(
    title: str, headers: Sequence[str], rows: Iterable[Sequence[Any]], caption: str | None = None
) -> Table:
    """Plain table with a header row."""
    table = Table(title=title, caption=caption, header_style=f"bold {COLORS['header']}")
    for header in headers:
        table.add_column(header)
    for row in rows:
        table.add_row(*(format_value(cell) for cell in row))
    return table


def text_block(title: str, body: str) -> Panel:
    return Panel(Text(body), title=title, border_style=COLORS["muted"], expand=False)


def group(*renderables: RenderableType) -> Group:
    return Group(*renderables)
