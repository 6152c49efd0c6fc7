"""
Pair Document Module

JSON document format for a manifold/surface pair plus named cycles.
The schema is declared with pydantic models; conversion functions map a
parsed document to the domain types and back with a fixed ordering so
that serialization is byte-deterministic.

Layout:
    {
      "manifold": {"closed": bool,
                   "blocks": [{"id", "genus", "boundary": [...]}],
                   "tori": [{"id", "near": {"block", "label"}, "far": {...},
                             "matrix": [[p, q], [r, s]]}]},
      "surface": {"pieces": [{"id", "block", "degree", "genus"}],
                  "circles": [{"id", "piece", "torus", "side", "class": [a, b],
                               "label" (free circles only)}],
                  "edges": [{"id", "near_circle", "far_circle"}]},
      "cycles": {"name": [["edge", "+" | "-"], ...]}
    }
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, ValidationError, model_validator

from .errors import DocumentError
from .exact_algebra import HomologyClass
from .manifold_model import GraphManifold, JsjTorus, SeifertBlock, Side, basis_tag
from .surface_model import (
    Cycle,
    HorizontalSurface,
    SurfaceCircle,
    SurfaceEdge,
    SurfacePiece,
    as_cycle,
    build_surface,
)

logger = logging.getLogger(__name__)

Direction = Literal['+', '-', '−']


class _Model(BaseModel):
    model_config = ConfigDict(extra='forbid', populate_by_name=True, frozen=True)


class SideModel(_Model):
    block: str
    label: str


class BlockModel(_Model):
    id: str
    genus: StrictInt
    boundary: List[str]


class TorusModel(_Model):
    id: str
    near: SideModel
    far: SideModel
    matrix: Tuple[Tuple[StrictInt, StrictInt], Tuple[StrictInt, StrictInt]]


class PieceModel(_Model):
    id: str
    block: str
    degree: StrictInt
    genus: StrictInt


class CircleModel(_Model):
    id: str
    piece: str
    torus: Optional[str] = None
    side: Optional[Literal['near', 'far']] = None
    homology: Tuple[StrictInt, StrictInt] = Field(alias='class')
    label: Optional[str] = None

    @model_validator(mode='after')
    def _needs_a_boundary(self):
        if self.torus is None and self.label is None:
            raise ValueError("a free circle (torus null) must give its boundary label")
        return self


class EdgeModel(_Model):
    id: str
    near_circle: str
    far_circle: str


def _unique(items, kind: str):
    seen = set()
    for item in items:
        if item.id in seen:
            raise ValueError(f"duplicate {kind} id {item.id!r}")
        seen.add(item.id)


class ManifoldSection(_Model):
    closed: bool = False
    blocks: List[BlockModel]
    tori: List[TorusModel]

    @model_validator(mode='after')
    def _ids_unique(self):
        _unique(self.blocks, 'block')
        _unique(self.tori, 'torus')
        return self


class SurfaceSection(_Model):
    pieces: List[PieceModel]
    circles: List[CircleModel]
    edges: List[EdgeModel]

    @model_validator(mode='after')
    def _ids_unique(self):
        _unique(self.pieces, 'piece')
        _unique(self.circles, 'circle')
        _unique(self.edges, 'edge')
        return self


class PairDocument(_Model):
    manifold: ManifoldSection
    surface: SurfaceSection
    cycles: Dict[str, List[Tuple[str, Direction]]] = Field(default_factory=dict)


def parse_document(text: str) -> PairDocument:
    """
    Parse document text.

    Raises:
        DocumentError: with line/column for JSON syntax errors, with the
            field path for schema errors
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(e.msg, line=e.lineno, column=e.colno) from e
    try:
        return PairDocument.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        path = ".".join(str(part) for part in first['loc']) or '<document>'
        raise DocumentError(first['msg'], path=path) from e


def load_document(path: Union[str, Path]) -> PairDocument:
    """Read and parse a document file."""
    doc_path = Path(path)
    try:
        text = doc_path.read_text(encoding='utf-8')
    except OSError as e:
        raise DocumentError(f"cannot read {doc_path}: {e.strerror or e}") from e
    logger.debug(f"Loaded document {doc_path} ({len(text)} bytes)")
    return parse_document(text)


def serialize_document(doc: PairDocument) -> str:
    """Fixed-order, newline-terminated JSON text."""
    data = doc.model_dump(mode='json', by_alias=True, exclude_none=True)
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def document_to_pair(doc: PairDocument) -> Tuple[GraphManifold, HorizontalSurface, Dict[str, Cycle]]:
    """
    Build the domain objects. Nothing is validated here beyond the schema;
    dangling references surface later in validate_surface.
    """
    blocks = {
        b.id: SeifertBlock(b.id, b.genus, tuple(b.boundary))
        for b in doc.manifold.blocks
    }
    tori = {}
    for t in doc.manifold.tori:
        (p, q), (r, s) = t.matrix
        tori[t.id] = JsjTorus(t.id, Side(t.near.block, t.near.label), Side(t.far.block, t.far.label), (p, q, r, s))
    manifold = GraphManifold(blocks, tori, closed=doc.manifold.closed)

    piece_blocks = {p.id: p.block for p in doc.surface.pieces}
    circles = []
    for c in doc.surface.circles:
        label = c.label
        if label is None:
            # a dangling torus reference leaves the label empty for the validator to flag
            torus = tori.get(c.torus)
            label = torus.side(c.side).label if torus is not None and c.side else ''
        block = piece_blocks.get(c.piece, '?')
        circles.append(SurfaceCircle(
            id=c.id,
            piece=c.piece,
            label=label,
            homology=HomologyClass(c.homology[0], c.homology[1], basis_tag(Side(block, label))),
            torus=c.torus,
            side=c.side
        ))
    pieces = [SurfacePiece(p.id, p.block, p.degree, p.genus) for p in doc.surface.pieces]
    edges = [SurfaceEdge(e.id, e.near_circle, e.far_circle) for e in doc.surface.edges]
    surface = build_surface(manifold, pieces, circles, edges)

    cycles = {
        name: as_cycle([(edge, '-' if sign == '−' else sign) for edge, sign in steps])
        for name, steps in doc.cycles.items()
    }
    return manifold, surface, cycles


def pair_to_document(
    manifold: GraphManifold,
    surface: HorizontalSurface,
    cycles: Optional[Dict[str, Cycle]] = None
) -> PairDocument:
    """Document for a pair; every list is ordered by id, cycles by name."""
    blocks = [
        BlockModel(id=b.id, genus=b.genus, boundary=list(b.boundary))
        for b in (manifold.blocks[k] for k in sorted(manifold.blocks))
    ]
    tori = [
        TorusModel(
            id=t.id,
            near=SideModel(block=t.near.block, label=t.near.label),
            far=SideModel(block=t.far.block, label=t.far.label),
            matrix=((t.entries[0], t.entries[1]), (t.entries[2], t.entries[3]))
        )
        for t in (manifold.tori[k] for k in sorted(manifold.tori))
    ]
    pieces = [
        PieceModel(id=p.id, block=p.block, degree=p.degree, genus=p.genus)
        for p in (surface.pieces[k] for k in sorted(surface.pieces))
    ]
    circles = [
        CircleModel(
            id=c.id,
            piece=c.piece,
            torus=c.torus,
            side=c.side,
            homology=c.homology.coefficients(),
            label=c.label if c.is_free else None
        )
        for c in (surface.circles[k] for k in sorted(surface.circles))
    ]
    edges = [
        EdgeModel(id=e.id, near_circle=e.near_circle, far_circle=e.far_circle)
        for e in (surface.edges[k] for k in sorted(surface.edges))
    ]
    named = {
        name: [(step.edge, step.direction) for step in cycles[name].steps]
        for name in sorted(cycles or {})
    }
    return PairDocument(
        manifold=ManifoldSection(closed=manifold.closed, blocks=blocks, tori=tori),
        surface=SurfaceSection(pieces=pieces, circles=circles, edges=edges),
        cycles=named
    )


def load_pair(path: Union[str, Path]) -> Tuple[GraphManifold, HorizontalSurface, Dict[str, Cycle]]:
    return document_to_pair(load_document(path))
