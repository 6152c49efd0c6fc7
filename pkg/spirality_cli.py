#!/usr/bin/env python3
"""
Spirality Command-Line Tool

Validates simple graph manifolds with horizontal surfaces, computes slopes,
spirality and separability exactly, builds the closed surface family and
prints non-quasi-isometry certificates for its members.
"""

import sys
import argparse
import logging
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from cli.commands import DEFAULT_FAMILY_N, DEFAULT_SPARSE_K, run_command


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spirality_cli.py",
        description="Slopes, spirality and separability of horizontal surfaces in simple graph manifolds",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python spirality_cli.py family --n 1 --out family1.json
  python spirality_cli.py inspect family1.json
  python spirality_cli.py slope family1.json --edge c1 --from middle
  python spirality_cli.py spirality family1.json --name gamma
  python spirality_cli.py spirality family1.json --cycle c1:-,c2:+
  python spirality_cli.py separable family1.json
  python spirality_cli.py certify --n 10 --m 1
  python spirality_cli.py sparse --k 4 --certify

Exit codes: 0 ok/certified, 1 not-certified, 2 parse error, 3 invalid pair,
            4 unknown id, 5 bad cycle, 6 bad parameter
        """
    )

    parser.add_argument(
        "-v", "--verbose",
        action="store_true",
        help="Enable debug logging on stderr"
    )

    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    inspect = sub.add_parser("inspect", help="Validate a document and summarize its invariants")
    inspect.add_argument("file", help="Pair document (JSON)")

    slope = sub.add_parser("slope", help="Slope of an edge leaving a piece")
    slope.add_argument("file", help="Pair document (JSON)")
    slope.add_argument("--edge", required=True, help="Surface edge id")
    slope.add_argument("--from", dest="start", required=True, metavar="PIECE", help="Piece the edge leaves")

    spiral = sub.add_parser("spirality", help="Spirality of a closed walk")
    spiral.add_argument("file", help="Pair document (JSON)")
    which = spiral.add_mutually_exclusive_group(required=True)
    which.add_argument("--cycle", help="Walk as EDGE:+,EDGE:-,...")
    which.add_argument("--name", help="Cycle named in the document (e.g. gamma)")

    separable = sub.add_parser("separable", help="Separability verdict with basis spiralities")
    separable.add_argument("file", help="Pair document (JSON)")

    # Integer options stay strings here; the commands convert them so a bad
    # value exits 6 like any other parameter error
    family = sub.add_parser("family", help="Write the closed family member S_n")
    family.add_argument("--n", default=DEFAULT_FAMILY_N, metavar="N", help=f"Family index (default: {DEFAULT_FAMILY_N})")
    family.add_argument("--out", help="Output file (default: standard output)")

    certify = sub.add_parser("certify", help="Certify two family members as distinct pairs")
    certify.add_argument("--n", required=True, metavar="N", help="First family index")
    certify.add_argument("--m", required=True, metavar="M", help="Second family index")
    certify.add_argument("--json", action="store_true", help="Print the machine-readable record")

    sparse = sub.add_parser("sparse", help="Sparse index set tau(1..K)")
    sparse.add_argument("--k", default=DEFAULT_SPARSE_K, metavar="K", help=f"Number of indices (default: {DEFAULT_SPARSE_K})")
    sparse.add_argument("--certify", action="store_true", help="Also print the pairwise certificates")

    report = sub.add_parser("report", help="Markdown report for a document")
    report.add_argument("file", help="Pair document (JSON)")
    report.add_argument("--out", help="Output file (default: standard output)")

    return parser


def main(argv=None) -> int:
    """Main entry point; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    # Logging goes to stderr only; stdout carries the results
    log_level = logging.DEBUG if args.verbose else logging.WARNING
    logging.basicConfig(
        level=log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr
    )
    logger = logging.getLogger(__name__)
    logger.debug(f"Running {args.command}")

    try:
        return run_command(args)

    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return 130


if __name__ == "__main__":
    sys.exit(main())
