"""Core modules: exact algebra, manifold and surface models, constructions."""

from .exact_algebra import (
    GluingMatrix,
    HomologyClass,
    PositiveRational,
    reduce,
    transport,
    transport_back,
    wedge,
)
from .manifold_model import (
    GraphManifold,
    JsjTorus,
    SeifertBlock,
    Side,
    dual_graph,
    fiber_intersection,
    validate_manifold,
)
from .surface_model import (
    Cycle,
    HorizontalSurface,
    Step,
    crossing_number,
    cycle_basis,
    governor,
    is_separable,
    slope,
    slope_fiber_decomposition,
    spirality,
    spirality_image_generators,
    validate_surface,
)
from .constructor import (
    FamilySpec,
    RwRequest,
    build_family,
    build_open_pair,
    double_pair,
    rw_build_piece,
    rw_check,
)
from .certificates import (
    Certificate,
    certify_distinct,
    certify_index_set,
    family_inequality_witness,
    paper_inequality_witness,
    sparse_index_set,
)

__all__ = [
    'GluingMatrix', 'HomologyClass', 'PositiveRational', 'reduce', 'transport',
    'transport_back', 'wedge',
    'GraphManifold', 'JsjTorus', 'SeifertBlock', 'Side', 'dual_graph',
    'fiber_intersection', 'validate_manifold',
    'Cycle', 'HorizontalSurface', 'Step', 'crossing_number', 'cycle_basis',
    'governor', 'is_separable', 'slope', 'slope_fiber_decomposition', 'spirality',
    'spirality_image_generators', 'validate_surface',
    'FamilySpec', 'RwRequest', 'build_family', 'build_open_pair', 'double_pair',
    'rw_build_piece', 'rw_check',
    'Certificate', 'certify_distinct', 'certify_index_set',
    'family_inequality_witness', 'paper_inequality_witness', 'sparse_index_set',
]
