"""
Manifold Model Module

A simple graph manifold as a decorated graph: Seifert blocks are trivial
circle bundles F x S^1 over orientable surfaces with boundary, and JSJ tori
glue boundary tori of blocks through a gluing matrix acting near -> far.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Tuple

import networkx as nx

from .errors import UnknownIdError
from .exact_algebra import (
    GluingMatrix,
    HomologyClass,
    MatrixEntries,
    apply_entries,
    determinant,
    wedge,
)
from .validation import ValidationReport

logger = logging.getLogger(__name__)

NEAR = 'near'
FAR = 'far'
SIDES = (NEAR, FAR)


class Side(NamedTuple):
    """A boundary torus of a block, addressed by (block id, boundary label)."""
    block: str
    label: str


def basis_tag(side: Side) -> str:
    """Tag of the (alpha, beta) basis on the boundary torus `side`."""
    return f"{side.block}:{side.label}"


@dataclass(frozen=True)
class SeifertBlock:
    """
    Trivial circle bundle over an orientable surface F.

    Attributes:
        id: block identifier
        genus: genus of the base surface F
        boundary: labels of the boundary circles alpha_i of F
    """
    id: str
    genus: int
    boundary: Tuple[str, ...]

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - len(self.boundary)

    def side(self, label: str) -> Side:
        return Side(self.id, label)


@dataclass(frozen=True)
class JsjTorus:
    """
    A JSJ torus gluing `near` to `far`.

    The raw matrix entries are kept so that a broken matrix can still be
    loaded and reported by the validator; `matrix` builds the checked
    GluingMatrix and raises if it is not a simple gluing.
    """
    id: str
    near: Side
    far: Side
    entries: MatrixEntries

    @property
    def matrix(self) -> GluingMatrix:
        return GluingMatrix(*self.entries)

    def side(self, which: str) -> Side:
        return self.near if which == NEAR else self.far

    def basis(self, which: str) -> str:
        return basis_tag(self.side(which))

    @property
    def is_loop(self) -> bool:
        return self.near.block == self.far.block


@dataclass(frozen=True)
class GraphManifold:
    """Blocks and tori by id; `closed` is a claim checked by the validator."""
    blocks: Dict[str, SeifertBlock] = field(default_factory=dict)
    tori: Dict[str, JsjTorus] = field(default_factory=dict)
    closed: bool = False

    def block(self, block_id: str) -> SeifertBlock:
        try:
            return self.blocks[block_id]
        except KeyError:
            raise UnknownIdError(f"unknown block {block_id!r}") from None

    def torus(self, torus_id: str) -> JsjTorus:
        try:
            return self.tori[torus_id]
        except KeyError:
            raise UnknownIdError(f"unknown torus {torus_id!r}") from None

    def side_usage(self) -> Dict[Side, Tuple[str, str]]:
        """Map each used boundary torus to (torus id, near|far). First use wins."""
        usage: Dict[Side, Tuple[str, str]] = {}
        for torus_id in sorted(self.tori):
            torus = self.tori[torus_id]
            for which in SIDES:
                usage.setdefault(torus.side(which), (torus_id, which))
        return usage

    def torus_at(self, side: Side) -> Optional[Tuple[str, str]]:
        return self.side_usage().get(side)


def fiber_intersection(torus: JsjTorus) -> int:
    """
    Absolute intersection number of the two fibers inside the torus.

    The near fiber (0, 1) is pushed to the far side and paired with the far
    fiber (0, 1); the result is |q|. Works on unchecked entries so that
    non-simple matrices can be measured and reported.

    Example:
        >>> fiber_intersection(JsjTorus("T", Side("L", "a"), Side("R", "a"), (1, 2, 1, 1)))
        2
    """
    far_basis = torus.basis(FAR)
    near_fiber = HomologyClass(0, 1, torus.basis(NEAR))
    pushed = apply_entries(torus.entries, near_fiber, far_basis)
    far_fiber = HomologyClass(0, 1, far_basis)
    return abs(wedge(pushed, far_fiber))


def euler_characteristic(block: SeifertBlock) -> int:
    return block.euler_characteristic


def base_euler_sum(manifold: GraphManifold) -> int:
    """Sum of chi(F) over all block bases."""
    return sum(euler_characteristic(b) for b in manifold.blocks.values())


def free_boundaries(manifold: GraphManifold) -> List[Side]:
    """Boundary tori of blocks that no JSJ torus uses, sorted."""
    used = manifold.side_usage()
    free = []
    for block_id in sorted(manifold.blocks):
        block = manifold.blocks[block_id]
        for label in block.boundary:
            side = block.side(label)
            if side not in used:
                free.append(side)
    return free


def dual_graph(manifold: GraphManifold) -> nx.MultiGraph:
    """
    Dual graph Omega: one vertex per block, one edge per torus (key = torus id).

    Loops (a torus gluing a block to itself) are kept.
    """
    graph = nx.MultiGraph()
    graph.add_nodes_from(sorted(manifold.blocks))
    for torus_id in sorted(manifold.tori):
        torus = manifold.tori[torus_id]
        graph.add_edge(torus.near.block, torus.far.block, key=torus_id)
    return graph


def validate_manifold(manifold: GraphManifold) -> ValidationReport:
    """
    Check every structural invariant of a simple graph manifold.

    Args:
        manifold: the manifold to check

    Returns:
        ValidationReport: empty errors list iff the manifold is valid.
        det = +1 gluings are reported as warnings only.
    """
    report = ValidationReport()

    for block_id in sorted(manifold.blocks):
        block = manifold.blocks[block_id]
        if block.id != block_id:
            report.error('id-mismatch', block_id, f"block registered under {block_id!r} has id {block.id!r}")
        if block.genus < 0:
            report.error('genus', block_id, f"negative genus {block.genus}")
        if not block.boundary:
            report.error('closed-block', block_id, "block has no boundary circle")
        if len(set(block.boundary)) != len(block.boundary):
            report.error('boundary-usage', block_id, "duplicate boundary labels")
        chi = block.euler_characteristic
        if chi >= 0:
            report.error('euler', block_id, f"chi(F) = {chi} must be negative")

    used: Dict[Side, str] = {}
    for torus_id in sorted(manifold.tori):
        torus = manifold.tori[torus_id]
        p, q, r, s = torus.entries
        det = determinant(torus.entries)
        if abs(det) != 1:
            report.error('determinant', torus_id, f"|det J| = {abs(det)}, expected 1")
        elif det == 1:
            logger.warning(f"Torus {torus_id}: det J = +1, orientation convention is -1")
            report.warn('orientation', torus_id, "det J = +1 (convention is -1)")
        if abs(q) != 1:
            report.error(
                'simplicity', torus_id,
                f"fiber intersection |q| = {abs(q)}, fibers must meet with absolute value 1"
            )
        if torus.near == torus.far:
            report.error('boundary-usage', torus_id, "near and far sides coincide")
        for which in SIDES:
            side = torus.side(which)
            block = manifold.blocks.get(side.block)
            if block is None:
                report.error('unknown-block', torus_id, f"{which} side refers to unknown block {side.block!r}")
                continue
            if side.label not in block.boundary:
                report.error(
                    'unknown-boundary', torus_id,
                    f"{which} side refers to missing boundary {side.label!r} of {side.block!r}"
                )
                continue
            if side in used and not (used[side] == torus_id and torus.near == torus.far):
                report.error(
                    'boundary-usage', torus_id,
                    f"boundary {basis_tag(side)} already used by torus {used[side]!r}"
                )
            used.setdefault(side, torus_id)

    if not manifold.tori:
        report.error('no-jsj-torus', '<manifold>', "at least one JSJ torus is required")

    if manifold.blocks and not nx.is_connected(dual_graph(manifold)):
        report.error('disconnected', '<manifold>', "dual graph is not connected")
    if not manifold.blocks:
        report.error('empty', '<manifold>', "no blocks")

    if manifold.closed:
        for side in free_boundaries(manifold):
            report.error(
                'closedness', basis_tag(side),
                "manifold is declared closed but this boundary torus is not glued"
            )

    logger.debug(
        f"Validated manifold: {len(manifold.blocks)} blocks, {len(manifold.tori)} tori, "
        f"{len(report.errors)} errors"
    )
    return report
