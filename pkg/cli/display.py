"""
cli/display.py

All Rich-based terminal rendering for knotbracket.
Data output (codes, parities, multisets) goes through typer.echo in main.py
so it stays byte-identical between runs; this module owns everything
decorative and everything written to stderr.

Functions:
  print_banner()  knotbracket header
  print_check_table()  axiom / relation violations
  print_multiset_table()  value / multiplicity table
  setup_logging()  RichHandler for the knotbracket logger tree
  make_log_handler()  Returns a log callable with Rich formatting
  print_success()  Styled success message
  print_error()  Styled error message
"""

import logging
from typing import Callable, List, Optional, Tuple

from rich import box
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

import config

console = Console(stderr=True)


def print_banner(subtitle: str = "Virtual link invariants") -> None:
    """Print the knotbracket banner."""
    banner = Text()
    banner.append("  ⌘  knotbracket", style="bold cyan")
    banner.append("  |  ", style="dim")
    banner.append(subtitle, style="italic white")
    console.print(Panel(banner, border_style="cyan", padding=(0, 2)))


def print_check_table(title: str, rows: List[Tuple[str, str, str]], checked: Optional[int] = None) -> None:
    """
    Render violations as a table, or a green panel when there are none.

    Args:
        rows: (id, witness, detail) triples, one per violated axiom or relation
    """
    if not rows:
        suffix = f" ({checked} instance(s) checked)" if checked is not None else ""
        print_success(f"{title}: all checks passed{suffix}")
        return

    table = Table(
        title=f"[bold red]{title}[/bold red]  [dim]({len(rows)} violation(s))[/dim]",
        box=box.ROUNDED,
        border_style="red",
        header_style="bold white",
        padding=(0, 1),
    )
    table.add_column("Relation", style="yellow", no_wrap=True)
    table.add_column("Witness",  style="white")
    table.add_column("Detail",   style="dim")
    for rid, witness, detail in rows:
        table.add_row(rid, witness, detail)
    console.print()
    console.print(table)


def print_multiset_table(title: str, items: List[Tuple[str, int]]) -> None:
    table = Table(
        title=f"[bold cyan]{title}[/bold cyan]",
        box=box.ROUNDED,
        border_style="cyan",
        header_style="bold white",
        padding=(0, 1),
    )
    table.add_column("Value", style="green")
    table.add_column("×", justify="right", style="bold white")
    for value, mult in items:
        table.add_row(value, str(mult))
    console.print(table)


def setup_logging(verbose: bool = False) -> None:
    """Install one RichHandler on the knotbracket logger; --verbose means DEBUG."""
    logger = logging.getLogger(config.LOGGER_NAME)
    level = logging.DEBUG if verbose else getattr(logging, config.LOG_LEVEL.upper(), logging.WARNING)
    logger.setLevel(level)
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        logger.addHandler(RichHandler(console=console, show_path=False, markup=False))
    logger.propagate = False


def make_log_handler(prefix: str = "") -> Callable[[str], None]:
    """
    Returns a log callable that formats output with Rich.
    Used as the `log=` argument of the long-running library functions.

      "DIFFERENT" / "violat" → red
      "equal" / "solution"   → green
      "seed="                → cyan
      default                → dim
    """
    def _log(message: str) -> None:
        msg = f"{prefix}{message}"
        if "DIFFERENT" in msg or "violat" in msg:
            console.print(f"  {msg}", style="bold red")
        elif msg.endswith("equal") or "solution" in msg:
            console.print(f"  {msg}", style="green")
        elif "seed=" in msg:
            console.print(f"  {msg}", style="cyan")
        else:
            console.print(f"  {msg}", style="dim")

    return _log


def print_success(message: str) -> None:
    console.print(Panel(f"  {message}", border_style="green", padding=(0, 1)))


def print_error(message: str) -> None:
    console.print(Panel(f"  {message}", border_style="red", title="[red]Error[/red]", padding=(0, 1)))
