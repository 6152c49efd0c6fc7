"""Display modules: terminal rendering and markdown reports."""

from .pair_console import PairConsole, make_console
from .report_generator import ReportGenerator
from .summary import generators_text, summarize_pair, verdict_line

__all__ = [
    'PairConsole',
    'ReportGenerator',
    'generators_text',
    'make_console',
    'summarize_pair',
    'verdict_line',
]
