"""
Pair Summary Module

Collects every invariant of a validated manifold/surface pair into one
plain dictionary, shared by the console view and the markdown report.
"""

import logging
from typing import Any, Dict, Optional, Sequence

from core.errors import GenusError, SpiralityError
from core.exact_algebra import PositiveRational
from core.manifold_model import GraphManifold, base_euler_sum, dual_graph, free_boundaries
from core.surface_model import (
    Cycle,
    HorizontalSurface,
    crossing_number,
    cycle_basis,
    cycle_rank,
    closed_genus,
    euler_characteristic,
    free_circles,
    governor,
    oriented_slopes,
    spirality,
    validate_surface,
)

logger = logging.getLogger(__name__)


def summarize_pair(
    manifold: GraphManifold,
    surface: HorizontalSurface,
    cycles: Optional[Dict[str, Cycle]] = None
) -> Dict[str, Any]:
    """
    Summarize a pair.

    Invariants are only computed when validation passes; otherwise the
    summary carries the report and the counts.

    Returns:
        dict: keys `report`, `counts`, and when valid `slopes`, `basis`,
              `generators`, `governor`, `separable`, `euler`, `genus`,
              `cycles`
    """
    report = validate_surface(surface)
    omega = dual_graph(manifold)
    summary: Dict[str, Any] = {
        'report': report,
        'valid': report.ok,
        'counts': {
            'blocks': omega.number_of_nodes(),
            'tori': omega.number_of_edges(),
            'pieces': len(surface.pieces),
            'edges': len(surface.edges),
            'rank': cycle_rank(surface),
            'free_boundaries': len(free_boundaries(manifold)),
            'free_circles': len(free_circles(surface)),
        },
        'closed': manifold.closed,
    }
    if not report.ok:
        return summary

    basis = cycle_basis(surface)
    generators = [spirality(surface, c) for c in basis]
    summary['slopes'] = oriented_slopes(surface)
    summary['basis'] = [{'cycle': c.to_tokens(), 'spirality': g} for c, g in zip(basis, generators)]
    summary['generators'] = generators
    summary['separable'] = all(g.is_one() for g in generators)
    summary['governor'] = governor(surface) if surface.edges else None
    summary['euler'] = {
        'surface': euler_characteristic(surface),
        'bases': base_euler_sum(manifold),
    }
    try:
        summary['genus'] = closed_genus(surface)
    except GenusError:
        summary['genus'] = None

    named = []
    for name in sorted(cycles or {}):
        cycle = cycles[name]
        entry = {'name': name, 'cycle': cycle.to_tokens(), 'crossings': crossing_number(cycle)}
        try:
            entry['spirality'] = spirality(surface, cycle)
        except SpiralityError as e:
            logger.warning(f"Named cycle {name!r} is not usable: {e}")
            entry['error'] = str(e)
        named.append(entry)
    summary['cycles'] = named
    return summary


def verdict_line(summary: Dict[str, Any]) -> str:
    """One-line verdict, e.g. "governor 3/1; non-separable; rank 2"."""
    gov = summary.get('governor')
    parts = [
        f"governor {gov}" if gov is not None else "governor undefined",
        "separable" if summary['separable'] else "non-separable",
        f"rank {summary['counts']['rank']}",
    ]
    return "; ".join(parts)


def generators_text(generators: Sequence[PositiveRational]) -> str:
    """Generator set as printed by the separable command, e.g. "{9/1, 9/1}"."""
    return "{" + ", ".join(str(g) for g in generators) + "}"
