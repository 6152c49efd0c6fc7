"""
CLI Commands

One function per subcommand. Each takes the parsed argparse namespace and
returns the process exit code; `run_command` maps library exceptions onto
the exit-code contract in one place.

Machine outputs (fractions, indices, documents) are printed bare so that
identical inputs give byte-identical standard output. Diagnostics go to
standard error.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, Optional, Tuple

from core.certificates import certify_distinct, certify_index_set, sparse_index_set
from core.constructor import GAMMA, build_family
from core.document import load_pair, pair_to_document, serialize_document
from core.errors import BrokenCycleError, DocumentError, SpiralityError, UnknownIdError
from core.manifold_model import GraphManifold
from core.surface_model import (
    Cycle,
    HorizontalSurface,
    cycle_from_tokens,
    slope,
    spirality,
    spirality_image_generators,
    validate_surface,
)
from core.validation import ValidationReport
from display.pair_console import PairConsole, make_console
from display.report_generator import ReportGenerator
from display.summary import generators_text, summarize_pair

logger = logging.getLogger(__name__)

# Exit codes
EXIT_OK = 0
EXIT_NOT_CERTIFIED = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_UNKNOWN_ID = 4
EXIT_BAD_CYCLE = 5
EXIT_BAD_PARAMETER = 6

DEFAULT_FAMILY_N = 1
DEFAULT_SPARSE_K = 5

Pair = Tuple[GraphManifold, HorizontalSurface, Dict[str, Cycle]]


class InvalidPair(Exception):
    """Raised inside a command when the loaded pair fails validation."""

    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__(f"{len(report.errors)} validation error(s)")


def _error_console():
    return make_console(sys.stderr)


def _load_valid(path: str) -> Pair:
    manifold, surface, cycles = load_pair(path)
    report = validate_surface(surface)
    if not report.ok:
        raise InvalidPair(report)
    return manifold, surface, cycles


def _integer(value, option: str) -> int:
    """Parse an integer option; anything else is a bad parameter (exit 6)."""
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ValueError(f"{option} must be an integer, got {value!r}") from None


def _emit(text: str, out: Optional[str]) -> None:
    """Write text to a file, or to standard output when no path is given."""
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding='utf-8')
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(text)


def cmd_inspect(args) -> int:
    """Validation report, dual-graph counts and the verdict line."""
    manifold, surface, cycles = load_pair(args.file)
    summary = summarize_pair(manifold, surface, cycles)
    PairConsole().show_summary(summary)
    return EXIT_OK if summary['valid'] else EXIT_INVALID


def cmd_slope(args) -> int:
    """Slope of an edge oriented away from the piece given with --from."""
    _, surface, _ = _load_valid(args.file)
    direction = surface.direction_from(args.edge, args.start)
    print(slope(surface, args.edge, direction))
    return EXIT_OK


def cmd_spirality(args) -> int:
    """Spirality of a --cycle token list or of a cycle named in the document."""
    _, surface, cycles = _load_valid(args.file)
    if args.cycle is not None:
        cycle = cycle_from_tokens(args.cycle)
    else:
        if args.name not in cycles:
            raise UnknownIdError(f"document has no cycle named {args.name!r}")
        cycle = cycles[args.name]
    print(spirality(surface, cycle))
    return EXIT_OK


def cmd_separable(args) -> int:
    _, surface, _ = _load_valid(args.file)
    generators = spirality_image_generators(surface)
    if all(g.is_one() for g in generators):
        print("separable")
    else:
        print(f"non-separable: generators = {generators_text(generators)}")
    return EXIT_OK


def cmd_family(args) -> int:
    """Write the closed family member for --n, with its curve named gamma."""
    family = build_family(_integer(args.n, "--n"))
    document = pair_to_document(family.manifold, family.surface, {GAMMA: family.gamma})
    _emit(serialize_document(document), args.out)
    return EXIT_OK


def cmd_certify(args) -> int:
    """Exit 0 when certified, 1 when the criterion does not apply."""
    certificate = certify_distinct(_integer(args.n, "--n"), _integer(args.m, "--m"))
    if args.json:
        print(json.dumps(certificate.to_record(), indent=2, ensure_ascii=False))
    else:
        print(certificate.summary())
    return EXIT_OK if certificate.certified else EXIT_NOT_CERTIFIED


def cmd_sparse(args) -> int:
    indices = sparse_index_set(_integer(args.k, "--k"))
    for index in indices:
        print(index)
    if args.certify:
        for certificate in certify_index_set(indices):
            print(certificate.summary())
    return EXIT_OK


def cmd_report(args) -> int:
    """Markdown report through the Jinja2 template; written even when invalid."""
    manifold, surface, cycles = load_pair(args.file)
    summary = summarize_pair(manifold, surface, cycles)
    generator = ReportGenerator()
    source = Path(args.file).name
    if args.out:
        generator.write(summary, args.out, source=source)
    else:
        sys.stdout.write(generator.render(summary, source=source))
    return EXIT_OK if summary['valid'] else EXIT_INVALID


COMMANDS: Dict[str, Callable] = {
    'inspect': cmd_inspect,
    'slope': cmd_slope,
    'spirality': cmd_spirality,
    'separable': cmd_separable,
    'family': cmd_family,
    'certify': cmd_certify,
    'sparse': cmd_sparse,
    'report': cmd_report,
}


def run_command(args) -> int:
    """
    Run the subcommand named by `args.command` and map failures to exit codes.

    Returns:
        int: 0 ok/certified, 1 not-certified, 2 parse error, 3 invalid pair,
             4 unknown id, 5 bad cycle, 6 bad parameter
    """
    console = _error_console()
    try:
        return COMMANDS[args.command](args)

    except DocumentError as e:
        console.print(f"error: cannot parse document: {e}", markup=False, soft_wrap=True)
        logger.debug(f"Parse failure: {e}")
        return EXIT_PARSE

    except InvalidPair as e:
        PairConsole(console).show_report(e.report)
        return EXIT_INVALID

    except UnknownIdError as e:
        console.print(f"error: {e}", markup=False, soft_wrap=True)
        return EXIT_UNKNOWN_ID

    except BrokenCycleError as e:
        console.print(f"error: {e}", markup=False, soft_wrap=True)
        return EXIT_BAD_CYCLE

    except ValueError as e:
        console.print(f"error: {e}", markup=False, soft_wrap=True)
        return EXIT_BAD_PARAMETER

    except SpiralityError as e:
        console.print(f"error: {e}", markup=False, soft_wrap=True)
        logger.error(f"Unexpected library error: {e}", exc_info=True)
        return EXIT_INVALID
