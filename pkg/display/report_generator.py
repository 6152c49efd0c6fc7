#!/usr/bin/env python3
"""Markdown report generation for manifold/surface pairs"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

from jinja2 import Environment, FileSystemLoader, StrictUndefined, select_autoescape

logger = logging.getLogger(__name__)

TEMPLATE_DIR = Path(__file__).parent.parent / 'templates'
REPORT_TEMPLATE = 'pair_report.md'


class ReportGenerator:
    """Render pair summaries through the Jinja2 markdown template"""

    def __init__(self, template_dir: Optional[Union[str, Path]] = None):
        """Initialize report generator

        Args:
            template_dir: Directory holding the templates (default: templates/)
        """
        self.template_dir = Path(template_dir) if template_dir else TEMPLATE_DIR
        self.env = Environment(
            loader=FileSystemLoader(str(self.template_dir)),
            autoescape=select_autoescape(['html', 'xml']),
            undefined=StrictUndefined,
            keep_trailing_newline=True,
            trim_blocks=True,
            lstrip_blocks=True
        )
        self.env.filters['fraction'] = self._fraction
        self.env.filters['verdict'] = self._verdict

    def _fraction(self, value):
        """Exact "p/q" text; None renders as 'undefined'"""
        return 'undefined' if value is None else str(value)

    def _verdict(self, separable):
        return 'separable' if separable else 'non-separable'

    def render(self, summary: Dict[str, Any], source: str = '') -> str:
        """Render the markdown report for one summary

        Args:
            summary: dictionary from display.summary.summarize_pair
            source: name of the document the summary came from

        Returns:
            str: markdown text
        """
        template = self.env.get_template(REPORT_TEMPLATE)
        return template.render(
            source=source,
            summary=summary,
            report=summary['report'],
            counts=summary['counts']
        )

    def write(self, summary: Dict[str, Any], out_path: Union[str, Path], source: str = '') -> Path:
        """Render and save the report, creating parent directories"""
        path = Path(out_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.render(summary, source), encoding='utf-8')
        logger.info(f"Wrote report {path}")
        return path
