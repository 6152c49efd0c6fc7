"""
Pair Console Module

Renders validation reports and pair summaries to the terminal with rich.
Output is plain text when not attached to a terminal and uses a fixed
width, so repeated runs print identical bytes.
"""

import logging
import sys
from typing import Any, Dict, Optional, TextIO

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from core.validation import ValidationReport

from .summary import verdict_line

logger = logging.getLogger(__name__)

# Constants
CONSOLE_WIDTH = 100


def make_console(stream: Optional[TextIO] = None) -> Console:
    """Console with fixed width and no colour unless writing to a terminal."""
    stream = stream if stream is not None else sys.stdout
    return Console(
        file=stream,
        width=CONSOLE_WIDTH,
        highlight=False,
        emoji=False,
        color_system='standard' if stream.isatty() else None
    )


class PairConsole:
    """Terminal view of a manifold/surface pair."""

    def __init__(self, console: Optional[Console] = None):
        self.console = console or make_console()

    def show_report(self, report: ValidationReport, title: str = "VALIDATION") -> None:
        """Table of errors and warnings, or a single OK line."""
        if report.ok and not report.warnings:
            self.console.print(f"{title}: ok")
            return

        table = Table(show_header=True, box=None, padding=(0, 1), show_edge=False)
        table.add_column("Level", style="cyan", no_wrap=True)
        table.add_column("Code", no_wrap=True)
        table.add_column("Subject", no_wrap=True)
        table.add_column("Message")
        for violation in report.errors:
            table.add_row("[red]error[/red]", violation.code, escape(violation.subject), escape(violation.message))
        for violation in report.warnings:
            table.add_row("[yellow]warning[/yellow]", violation.code, escape(violation.subject), escape(violation.message))

        status = "ok" if report.ok else f"{len(report.errors)} error(s)"
        self.console.print(Panel(table, title=f"[bold]{title}: {status}", border_style="red" if report.errors else "yellow"))

    def show_counts(self, summary: Dict[str, Any]) -> None:
        counts = summary['counts']
        table = Table(show_header=False, box=None, padding=(0, 1))
        table.add_column("Label", style="cyan")
        table.add_column("Value", justify="right")
        table.add_row("Blocks:", str(counts['blocks']))
        table.add_row("JSJ tori:", str(counts['tori']))
        table.add_row("Pieces:", str(counts['pieces']))
        table.add_row("Edges:", str(counts['edges']))
        table.add_row("Cycle rank:", str(counts['rank']))
        table.add_row("Free boundary tori:", str(counts['free_boundaries']))
        table.add_row("Free circles:", str(counts['free_circles']))
        self.console.print(Panel(table, title="[bold]DUAL GRAPHS", border_style="blue"))

    def show_slopes(self, summary: Dict[str, Any]) -> None:
        table = Table(show_header=True, box=None, padding=(0, 1), show_edge=False)
        table.add_column("Edge", style="cyan", no_wrap=True)
        table.add_column("Dir", justify="center")
        table.add_column("From -> To", no_wrap=True)
        table.add_column("Slope", justify="right")
        for row in summary['slopes']:
            table.add_row(row['edge'], row['direction'], f"{row['from']} -> {row['to']}", str(row['slope']))
        self.console.print(Panel(table, title="[bold]SLOPES", border_style="magenta"))

    def show_spirality(self, summary: Dict[str, Any]) -> None:
        table = Table(show_header=True, box=None, padding=(0, 1), show_edge=False)
        table.add_column("Cycle", style="cyan")
        table.add_column("Spirality", justify="right")
        for entry in summary['basis']:
            table.add_row(entry['cycle'], str(entry['spirality']))
        for entry in summary.get('cycles', []):
            value = str(entry['spirality']) if 'spirality' in entry else f"[red]{escape(entry['error'])}[/red]"
            table.add_row(f"{entry['name']} = {entry['cycle']}", value)
        self.console.print(Panel(table, title="[bold]SPIRALITY", border_style="green"))

    def show_summary(self, summary: Dict[str, Any]) -> None:
        """Full inspect view: validation, counts, and when valid the invariants."""
        self.show_report(summary['report'])
        self.show_counts(summary)
        if not summary['valid']:
            return
        if summary['slopes']:
            self.show_slopes(summary)
        if summary['basis'] or summary.get('cycles'):
            self.show_spirality(summary)
        euler = summary['euler']
        genus = summary['genus']
        self.console.print(
            f"chi(S) = {euler['surface']}; sum chi(F) = {euler['bases']}"
            + (f"; closed genus {genus}" if genus is not None else "")
        )
        self.console.print(verdict_line(summary))
