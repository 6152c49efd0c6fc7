"""
Surface Model Module

A horizontal surface over a GraphManifold, described by its dual graph
Omega_S: pieces (components of S minus the preimage of the JSJ tori) are
vertices, and circles lying over JSJ tori are edges. Slopes, spirality,
the governor and the separability test are computed here.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from .errors import (
    BrokenCycleError,
    DisconnectedError,
    FiberBasisError,
    GenusError,
    NoEdgesError,
    UnknownIdError,
)
from .exact_algebra import (
    HomologyClass,
    PositiveRational,
    apply_entries,
    matrix_violations,
    product,
    reduce,
    wedge,
)
from .manifold_model import (
    FAR,
    NEAR,
    GraphManifold,
    Side,
    basis_tag,
    validate_manifold,
)
from .validation import ValidationReport

logger = logging.getLogger(__name__)

FORWARD = '+'
BACKWARD = '-'
DIRECTIONS = (FORWARD, BACKWARD)

# Both the ASCII hyphen and the unicode minus sign are accepted in cycle text
_DIRECTION_ALIASES = {'+': FORWARD, '-': BACKWARD, '−': BACKWARD}

SlopeValue = PositiveRational


@dataclass(frozen=True)
class SurfaceCircle:
    """
    A boundary circle of a piece.

    `label` is the boundary label of the piece's block the circle lies on;
    `torus`/`side` say which JSJ torus side that is, or are None when the
    circle sits on a free boundary torus.
    """
    id: str
    piece: str
    label: str
    homology: HomologyClass
    torus: Optional[str] = None
    side: Optional[str] = None

    @property
    def is_free(self) -> bool:
        return self.torus is None


@dataclass(frozen=True)
class SurfacePiece:
    """
    A component of S minus the JSJ preimage, covering its block's base with
    degree u.
    """
    id: str
    block: str
    degree: int
    genus: int
    circles: Tuple[str, ...] = ()

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - len(self.circles)


@dataclass(frozen=True)
class SurfaceEdge:
    """A circle over a JSJ torus, seen from both sides."""
    id: str
    near_circle: str
    far_circle: str


class Step(NamedTuple):
    edge: str
    direction: str


@dataclass(frozen=True)
class Cycle:
    """A walk in Omega_S given as oriented edges."""
    steps: Tuple[Step, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def reversed(self) -> "Cycle":
        return Cycle(tuple(
            Step(step.edge, BACKWARD if step.direction == FORWARD else FORWARD)
            for step in reversed(self.steps)
        ))

    def rotated(self, k: int) -> "Cycle":
        if not self.steps:
            return self
        k %= len(self.steps)
        return Cycle(self.steps[k:] + self.steps[:k])

    def __add__(self, other: "Cycle") -> "Cycle":
        return Cycle(self.steps + other.steps)

    def to_tokens(self) -> str:
        return ",".join(f"{step.edge}:{step.direction}" for step in self.steps)


@dataclass(frozen=True)
class HorizontalSurface:
    manifold: GraphManifold
    pieces: Dict[str, SurfacePiece] = field(default_factory=dict)
    circles: Dict[str, SurfaceCircle] = field(default_factory=dict)
    edges: Dict[str, SurfaceEdge] = field(default_factory=dict)

    def edge(self, edge_id: str) -> SurfaceEdge:
        try:
            return self.edges[edge_id]
        except KeyError:
            raise UnknownIdError(f"unknown edge {edge_id!r}") from None

    def circle(self, circle_id: str) -> SurfaceCircle:
        try:
            return self.circles[circle_id]
        except KeyError:
            raise UnknownIdError(f"unknown circle {circle_id!r}") from None

    def piece(self, piece_id: str) -> SurfacePiece:
        try:
            return self.pieces[piece_id]
        except KeyError:
            raise UnknownIdError(f"unknown piece {piece_id!r}") from None

    def endpoints(self, edge_id: str) -> Tuple[str, str]:
        """(near piece, far piece) of an edge."""
        edge = self.edge(edge_id)
        return (self.circle(edge.near_circle).piece, self.circle(edge.far_circle).piece)

    def oriented_endpoints(self, step: Step) -> Tuple[str, str]:
        near, far = self.endpoints(step.edge)
        if step.direction == FORWARD:
            return near, far
        if step.direction == BACKWARD:
            return far, near
        raise BrokenCycleError(f"bad direction {step.direction!r} on edge {step.edge!r}")

    def direction_from(self, edge_id: str, piece_id: str) -> str:
        """Direction of `edge_id` when leaving `piece_id`."""
        near, far = self.endpoints(edge_id)
        if piece_id == near:
            return FORWARD
        if piece_id == far:
            return BACKWARD
        raise UnknownIdError(f"piece {piece_id!r} is not an endpoint of edge {edge_id!r}")


def build_surface(
    manifold: GraphManifold,
    pieces: Iterable[SurfacePiece],
    circles: Iterable[SurfaceCircle],
    edges: Iterable[SurfaceEdge]
) -> HorizontalSurface:
    """
    Assemble a surface, filling each piece's circle list from the circles.

    Piece circle tuples given by the caller are replaced; the circles'
    `piece` fields are the single source of truth.
    """
    circle_map = {c.id: c for c in circles}
    owned: Dict[str, List[str]] = {}
    for circle_id in sorted(circle_map):
        owned.setdefault(circle_map[circle_id].piece, []).append(circle_id)
    piece_map = {
        p.id: SurfacePiece(p.id, p.block, p.degree, p.genus, tuple(owned.get(p.id, ())))
        for p in pieces
    }
    return HorizontalSurface(
        manifold=manifold,
        pieces=piece_map,
        circles=circle_map,
        edges={e.id: e for e in edges}
    )


def surface_graph(surface: HorizontalSurface, reverse: bool = False) -> nx.MultiGraph:
    """
    Dual graph Omega_S: vertices = pieces, edges keyed by surface edge id.

    Each edge carries a `weight` equal to its rank in ascending id order
    (descending when `reverse`), which fixes the spanning-tree tie-break.
    """
    graph = nx.MultiGraph()
    graph.add_nodes_from(sorted(surface.pieces))
    order = sorted(surface.edges, reverse=reverse)
    for rank, edge_id in enumerate(order):
        near, far = surface.endpoints(edge_id)
        graph.add_edge(near, far, key=edge_id, weight=rank)
    return graph


def validate_surface(surface: HorizontalSurface) -> ValidationReport:
    """
    Check every invariant of a horizontal surface (and of its manifold).

    Args:
        surface: surface to check

    Returns:
        ValidationReport: errors empty iff the surface is valid
    """
    manifold = surface.manifold
    report = validate_manifold(manifold)
    usage = manifold.side_usage()

    for piece_id in sorted(surface.pieces):
        _check_piece(surface, surface.pieces[piece_id], report)

    for circle_id in sorted(surface.circles):
        circle = surface.circles[circle_id]
        piece = surface.pieces.get(circle.piece)
        if piece is None:
            report.error('unknown-piece', circle_id, f"circle refers to unknown piece {circle.piece!r}")
            continue
        block = manifold.blocks.get(piece.block)
        if block is None:
            continue
        if circle.label not in block.boundary:
            report.error(
                'unknown-boundary', circle_id,
                f"label {circle.label!r} is not a boundary of block {block.id!r}"
            )
            continue
        side = Side(block.id, circle.label)
        if circle.homology.basis != basis_tag(side):
            report.error(
                'basis', circle_id,
                f"class is in basis {circle.homology.basis!r}, expected {basis_tag(side)!r}"
            )
        if not circle.homology.is_horizontal:
            report.error(
                'horizontality', circle_id,
                f"class {circle.homology.coefficients()} has zero section coefficient"
            )
        attached = usage.get(side)
        expected = attached if attached is not None else (None, None)
        if (circle.torus, circle.side) != expected:
            report.error(
                'attachment', circle_id,
                f"attached to {(circle.torus, circle.side)}, but boundary {basis_tag(side)} "
                f"is {'glued as ' + str(attached) if attached else 'free'}"
            )

    seen: Dict[str, str] = {}
    for edge_id in sorted(surface.edges):
        _check_edge(surface, surface.edges[edge_id], seen, report)

    for circle_id in sorted(surface.circles):
        circle = surface.circles[circle_id]
        if not circle.is_free and circle_id not in seen:
            report.error('unmatched-circle', circle_id, "circle over a JSJ torus is not on any edge")
    if manifold.closed and free_circles(surface):
        report.error('closedness', '<surface>', "closed manifold but the surface has free circles")

    if not surface.pieces:
        report.error('empty', '<surface>', "no pieces")
    elif report.ok and not nx.is_connected(surface_graph(surface)):
        report.error('disconnected', '<surface>', "dual graph Omega_S is not connected")

    logger.debug(
        f"Validated surface: {len(surface.pieces)} pieces, {len(surface.edges)} edges, "
        f"{len(report.errors)} errors"
    )
    return report


def _check_piece(surface: HorizontalSurface, piece: SurfacePiece, report: ValidationReport) -> None:
    block = surface.manifold.blocks.get(piece.block)
    if block is None:
        report.error('unknown-block', piece.id, f"piece lies over unknown block {piece.block!r}")
        return
    if piece.degree < 1:
        report.error('degree', piece.id, f"covering degree {piece.degree} must be positive")
    if piece.genus < 0:
        report.error('genus', piece.id, f"negative genus {piece.genus}")
    for circle_id in piece.circles:
        circle = surface.circles.get(circle_id)
        if circle is None or circle.piece != piece.id:
            report.error('piece-circles', piece.id, f"listed circle {circle_id!r} does not belong to it")

    chi = piece.euler_characteristic
    expected = piece.degree * block.euler_characteristic
    if chi != expected:
        report.error(
            'euler', piece.id,
            f"chi = {chi} but degree * chi(F) = {piece.degree} * {block.euler_characteristic} = {expected}"
        )

    for label in block.boundary:
        total = sum(
            abs(surface.circles[c].homology.a)
            for c in piece.circles
            if c in surface.circles and surface.circles[c].label == label
        )
        if total != piece.degree:
            report.error(
                'degree-sum', piece.id,
                f"sum of |u| over circles at {label!r} is {total}, expected degree {piece.degree}"
            )


def _check_edge(
    surface: HorizontalSurface,
    edge: SurfaceEdge,
    seen: Dict[str, str],
    report: ValidationReport
) -> None:
    for circle_id in (edge.near_circle, edge.far_circle):
        if circle_id in seen:
            report.error('circle-reuse', edge.id, f"circle {circle_id!r} already used by edge {seen[circle_id]!r}")
        seen.setdefault(circle_id, edge.id)

    near = surface.circles.get(edge.near_circle)
    far = surface.circles.get(edge.far_circle)
    if near is None or far is None:
        report.error('unknown-circle', edge.id, "edge refers to an unknown circle")
        return
    if near.side != NEAR or far.side != FAR or near.torus is None or near.torus != far.torus:
        report.error(
            'edge-attachment', edge.id,
            "near circle must sit on the near side and far circle on the far side of one torus"
        )
        return
    torus = surface.manifold.tori.get(near.torus)
    if torus is None or matrix_violations(torus.entries):
        # already reported by the manifold validator
        return
    pushed = apply_entries(torus.entries, near.homology, far.homology.basis)
    if not pushed.same_curve(far.homology):
        report.error(
            'edge-compatibility', edge.id,
            f"J * {near.homology.coefficients()} = {pushed.coefficients()} "
            f"is not +-{far.homology.coefficients()}"
        )


def _edge_circles(surface: HorizontalSurface, edge_id: str, direction: str):
    edge = surface.edge(edge_id)
    near = surface.circle(edge.near_circle)
    far = surface.circle(edge.far_circle)
    if direction == FORWARD:
        return near, far
    if direction == BACKWARD:
        return far, near
    raise BrokenCycleError(f"bad direction {direction!r} on edge {edge_id!r}")


def slope(surface: HorizontalSurface, edge_id: str, direction: str = FORWARD) -> SlopeValue:
    """
    Slope |m / m'| of an oriented edge from section coefficients.

    m is the alpha-coefficient of the circle on the initial side and m' the
    alpha-coefficient on the terminal side, each in its own side's basis.

    Example:
        >>> str(slope(family.surface, "c1", "-"))   # n = 1, middle -> left
        '3/1'
    """
    initial, terminal = _edge_circles(surface, edge_id, direction)
    return reduce(initial.homology.a, terminal.homology.a)


def slope_fiber_decomposition(
    surface: HorizontalSurface,
    edge_id: str,
    direction: str = FORWARD
) -> SlopeValue:
    """
    Slope |b / a| from writing the circle as a*beta_init + b*beta_term.

    Everything is expressed in the far-side basis of the torus. The
    coefficients come from Cramer's rule with wedge products:
        a = (c ^ beta_term) / (beta_init ^ beta_term)
        b = (c ^ beta_init) / (beta_term ^ beta_init)

    Raises:
        FiberBasisError: if the two fibers do not span H_1 of the torus
    """
    edge = surface.edge(edge_id)
    far_circle = surface.circle(edge.far_circle)
    torus = surface.manifold.torus(far_circle.torus)
    far_basis = torus.basis(FAR)

    c = far_circle.homology
    beta_near = apply_entries(torus.entries, HomologyClass(0, 1, torus.basis(NEAR)), far_basis)
    beta_far = HomologyClass(0, 1, far_basis)
    if direction == FORWARD:
        beta_init, beta_term = beta_near, beta_far
    elif direction == BACKWARD:
        beta_init, beta_term = beta_far, beta_near
    else:
        raise BrokenCycleError(f"bad direction {direction!r} on edge {edge_id!r}")

    d = wedge(beta_init, beta_term)
    if abs(d) != 1:
        raise FiberBasisError(f"torus {torus.id!r}: |beta_init ^ beta_term| = {abs(d)}, expected 1")
    a = Fraction(wedge(c, beta_term), d)
    b = Fraction(wedge(c, beta_init), -d)
    # |d| = 1 keeps both integral
    return reduce(int(b), int(a))


def oriented_slopes(surface: HorizontalSurface) -> List[Dict[str, object]]:
    """Every oriented edge with its endpoints and slope, by edge id then direction."""
    rows = []
    for edge_id in sorted(surface.edges):
        for direction in DIRECTIONS:
            start, end = surface.oriented_endpoints(Step(edge_id, direction))
            rows.append({
                'edge': edge_id,
                'direction': direction,
                'from': start,
                'to': end,
                'slope': slope(surface, edge_id, direction)
            })
    return rows


def governor(surface: HorizontalSurface) -> PositiveRational:
    """
    Maximum slope over all oriented edges.

    Raises:
        NoEdgesError: if Omega_S has no edges
    """
    if not surface.edges:
        raise NoEdgesError("governor is undefined on a surface without edges")
    return max(
        slope(surface, edge_id, direction)
        for edge_id in surface.edges
        for direction in DIRECTIONS
    )


def check_walk(surface: HorizontalSurface, cycle: Cycle) -> None:
    """
    Raise unless `cycle` is a closed walk in Omega_S.

    Raises:
        UnknownIdError: for an unknown edge
        BrokenCycleError: for a gap between steps or an open walk
    """
    if not cycle.steps:
        return
    ends = [surface.oriented_endpoints(step) for step in cycle.steps]
    for i, (step, (_, end)) in enumerate(zip(cycle.steps, ends)):
        next_start = ends[(i + 1) % len(ends)][0]
        if end != next_start:
            where = "closing the walk" if i == len(ends) - 1 else f"after step {i + 1}"
            raise BrokenCycleError(
                f"walk breaks {where}: {step.edge}:{step.direction} ends at {end!r}, "
                f"next step starts at {next_start!r}"
            )


def spirality(surface: HorizontalSurface, cycle: Cycle) -> PositiveRational:
    """
    Product of the slopes along a closed walk; 1/1 for the empty walk.

    Raises:
        BrokenCycleError: if the walk is not closed
    """
    check_walk(surface, cycle)
    return product(slope(surface, step.edge, step.direction) for step in cycle.steps)


def crossing_number(cycle: Cycle) -> int:
    """Number of crossings with the JSJ preimage: one per edge in the walk."""
    return len(cycle.steps)


def cycle_from_tokens(text: str) -> Cycle:
    """
    Parse "e1:+,e2:-" into a Cycle. Empty text gives the empty cycle.

    Raises:
        BrokenCycleError: on a malformed token
    """
    steps = []
    for token in (t.strip() for t in text.split(',')):
        if not token:
            continue
        edge_id, sep, sign = token.rpartition(':')
        if not sep or not edge_id or sign.strip() not in _DIRECTION_ALIASES:
            raise BrokenCycleError(f"malformed cycle token {token!r} (expected EDGE:+ or EDGE:-)")
        steps.append(Step(edge_id.strip(), _DIRECTION_ALIASES[sign.strip()]))
    return Cycle(tuple(steps))


def cycle_basis(surface: HorizontalSurface, reverse: bool = False) -> List[Cycle]:
    """
    Fundamental cycles of Omega_S with respect to a spanning tree.

    The tree is grown by Kruskal over edges in ascending id order
    (descending when `reverse`). Each non-tree edge, taken in the same
    order and traversed forward, is closed up through the tree.

    Returns:
        list: |edges| - |pieces| + 1 cycles

    Raises:
        DisconnectedError: if Omega_S is not connected
    """
    graph = surface_graph(surface, reverse=reverse)
    if graph.number_of_nodes() and not nx.is_connected(graph):
        raise DisconnectedError("cycle basis needs a connected surface graph")

    tree = nx.Graph()
    tree.add_nodes_from(graph.nodes)
    tree_keys = set()
    for u, v, key in nx.minimum_spanning_edges(graph, algorithm='kruskal', weight='weight', keys=True, data=False):
        tree.add_edge(u, v, key=key)
        tree_keys.add(key)

    basis = []
    for edge_id in sorted(surface.edges, reverse=reverse):
        if edge_id in tree_keys:
            continue
        near, far = surface.endpoints(edge_id)
        steps = [Step(edge_id, FORWARD)]
        path = nx.shortest_path(tree, far, near)
        for x, y in zip(path, path[1:]):
            tree_edge = tree[x][y]['key']
            steps.append(Step(tree_edge, surface.direction_from(tree_edge, x)))
        basis.append(Cycle(tuple(steps)))
        logger.debug(f"Basis cycle for {edge_id}: {basis[-1].to_tokens()}")
    return basis


def spirality_image_generators(surface: HorizontalSurface, reverse: bool = False) -> List[PositiveRational]:
    """Spirality of each basis cycle; they generate the image of w in Q+*."""
    return [spirality(surface, cycle) for cycle in cycle_basis(surface, reverse=reverse)]


def is_separable(surface: HorizontalSurface, reverse: bool = False) -> bool:
    """True iff the spirality homomorphism is trivial on a cycle basis."""
    return all(g.is_one() for g in spirality_image_generators(surface, reverse=reverse))


def free_circles(surface: HorizontalSurface) -> List[str]:
    return sorted(c.id for c in surface.circles.values() if c.is_free)


def euler_characteristic(surface: HorizontalSurface) -> int:
    """Sum of chi over pieces (the circles contribute zero)."""
    return sum(p.euler_characteristic for p in surface.pieces.values())


def closed_genus(surface: HorizontalSurface) -> int:
    """
    Genus of the closed surface obtained by fusing all pieces.

    Raises:
        GenusError: if the surface has free circles or the genus is not integral
    """
    if free_circles(surface):
        raise GenusError("closed genus is only defined for surfaces without free circles")
    chi = euler_characteristic(surface)
    if chi % 2:
        raise GenusError(f"odd Euler characteristic {chi}")
    return (2 - chi) // 2


def cycle_rank(surface: HorizontalSurface) -> int:
    return len(surface.edges) - len(surface.pieces) + 1


def as_cycle(steps: Sequence[Tuple[str, str]]) -> Cycle:
    return Cycle(tuple(Step(edge, direction) for edge, direction in steps))
