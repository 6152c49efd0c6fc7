"""
Constructor Module

Builds horizontal pieces from boundary data (existence conditions for a
connected horizontal surface in F x S^1 with prescribed boundary curves),
assembles the open pair (N', B_n), doubles it along its free boundary, and
packages the closed family member (N, S_n, gamma_n).
"""

import logging
from dataclasses import dataclass, replace
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence, Set, Tuple

from .errors import ConstructionBug, DoublingError, GenusError, RwViolationError
from .exact_algebra import GluingMatrix, HomologyClass, PositiveRational, transport
from .manifold_model import (
    FAR,
    NEAR,
    GraphManifold,
    JsjTorus,
    SeifertBlock,
    Side,
    basis_tag,
    dual_graph,
    free_boundaries,
)
from .surface_model import (
    BACKWARD,
    FORWARD,
    Cycle,
    HorizontalSurface,
    Step,
    SurfaceCircle,
    SurfaceEdge,
    SurfacePiece,
    build_surface,
    crossing_number,
    cycle_rank,
    governor,
    spirality,
    validate_surface,
)
from .validation import ValidationReport, Violation

logger = logging.getLogger(__name__)

# Gluing used by the family: J = (1 1 / 2 1), det = -1, q = 1
FAMILY_GLUING = GluingMatrix(1, 1, 2, 1)
FAMILY_TORUS = 'T'
LEFT = 'left'
RIGHT = 'right'
MIDDLE = 'middle'
MIRROR_SUFFIX = '_m'

# Name of the curve gamma_n in generated documents
GAMMA = 'gamma'


@dataclass(frozen=True)
class RwRequest:
    """
    Boundary data for one horizontal piece over F x S^1.

    Attributes:
        genus: genus of the base F
        pairs: per boundary label, two curves (u, v) meaning u[alpha] + v[beta]
        block: block id, used to tag the homology classes
    """
    genus: int
    pairs: Tuple[Tuple[str, Tuple[int, int], Tuple[int, int]], ...]
    block: str = 'F'

    @property
    def t(self) -> int:
        return len(self.pairs)

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.t


@dataclass
class RwCheck:
    """Result of rw_check: the common degree, or the violated conditions."""
    degree: Optional[int]
    violations: List[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations


class OpenPair(NamedTuple):
    manifold: GraphManifold
    surface: HorizontalSurface


@dataclass(frozen=True)
class FamilySpec:
    """Closed family member: manifold N, surface S_n and the curve gamma_n."""
    n: int
    manifold: GraphManifold
    surface: HorizontalSurface
    gamma: Cycle

    @property
    def epsilon(self) -> PositiveRational:
        return PositiveRational(2 * self.n + 1, 1)

    @property
    def w_gamma(self) -> PositiveRational:
        return PositiveRational((2 * self.n + 1) ** 2, 1)


def rw_check(req: RwRequest) -> RwCheck:
    """
    Check the existence conditions for a connected horizontal piece.

    Conditions:
        fiber-sum:       the fiber coefficients v_ij sum to zero
        degree-balance:  u_i1 + u_i2 is the same u for every boundary i
        even-euler:      u * chi(F) is even

    Returns:
        RwCheck: degree u when every condition holds, otherwise the list
                 of violations (hypotheses on F and u_ij > 0 included)

    Example:
        >>> rw_check(RwRequest(1, (("a", (1, 2), (3, -2)),))).degree
        4
    """
    violations: List[Violation] = []
    chi = req.euler_characteristic
    if req.genus < 1:
        violations.append(Violation('base-genus', req.block, f"base genus {req.genus} must be positive"))
    if req.t < 1:
        violations.append(Violation('base-boundary', req.block, "base must have at least one boundary circle"))
    if chi >= 0:
        violations.append(Violation('base-euler', req.block, f"chi(F) = {chi} must be negative"))
    for label, first, second in req.pairs:
        for j, (u, _) in enumerate((first, second), start=1):
            if u <= 0:
                violations.append(Violation('positive-u', label, f"u_{j} = {u} must be positive"))

    v_total = sum(first[1] + second[1] for _, first, second in req.pairs)
    if v_total != 0:
        violations.append(Violation('fiber-sum', req.block, f"sum of v_ij is {v_total}, expected 0"))

    sums = {label: first[0] + second[0] for label, first, second in req.pairs}
    degree = None
    if len(set(sums.values())) > 1:
        listing = ", ".join(f"{label}: {total}" for label, total in sums.items())
        violations.append(Violation('degree-balance', req.block, f"u_i1 + u_i2 differs across boundaries ({listing})"))
    elif sums:
        degree = next(iter(sums.values()))
        if (degree * chi) % 2:
            violations.append(Violation('even-euler', req.block, f"u * chi(F) = {degree * chi} is odd"))

    if violations:
        logger.debug(f"rw_check failed for {req.block}: {[v.code for v in violations]}")
        return RwCheck(None, violations)
    return RwCheck(degree, [])


def rw_build_piece(
    req: RwRequest,
    piece_id: str,
    circle_ids: Optional[Sequence[str]] = None
) -> Tuple[SurfacePiece, List[SurfaceCircle]]:
    """
    Build the piece guaranteed by rw_check, with its 2t boundary circles.

    The genus is x = (2 - 2t - u*chi(F)) / 2 so that chi(piece) = u*chi(F).
    Circles are returned unattached (torus/side None); the caller attaches
    them to the manifold.

    Raises:
        GenusError: if u*chi(F) is odd or the genus comes out negative
        RwViolationError: for any other failed condition
    """
    check = rw_check(req)
    if not check.ok:
        if any(v.code == 'even-euler' for v in check.violations):
            raise GenusError("; ".join(str(v) for v in check.violations))
        raise RwViolationError(str(v) for v in check.violations)

    u = check.degree
    numerator = 2 - 2 * req.t - u * req.euler_characteristic
    if numerator % 2 or numerator < 0:
        raise GenusError(f"genus formula gives {numerator}/2")
    genus = numerator // 2

    if circle_ids is None:
        circle_ids = [f"{piece_id}.{label}.{j}" for label, _, _ in req.pairs for j in (1, 2)]
    if len(circle_ids) != 2 * req.t:
        raise ValueError(f"expected {2 * req.t} circle ids, got {len(circle_ids)}")

    circles = []
    ids = iter(circle_ids)
    for label, first, second in req.pairs:
        tag = basis_tag(Side(req.block, label))
        for u_ij, v_ij in (first, second):
            circles.append(SurfaceCircle(next(ids), piece_id, label, HomologyClass(u_ij, v_ij, tag)))

    piece = SurfacePiece(piece_id, req.block, u, genus, tuple(c.id for c in circles))
    logger.debug(f"Built piece {piece_id}: degree {u}, genus {genus}, {len(circles)} circles")
    return piece, circles


def _attach(circle: SurfaceCircle, manifold: GraphManifold, block: str) -> SurfaceCircle:
    found = manifold.torus_at(Side(block, circle.label))
    if found is None:
        return circle
    torus_id, which = found
    return replace(circle, torus=torus_id, side=which)


def build_open_pair(n: int) -> OpenPair:
    """
    The open pair (N', B_n).

    N' glues the once-punctured-torus block `left` to the twice-punctured
    torus block `right` along T via J = (1 1 / 2 1). B_n has a piece over
    each block, two edges c1, c2 over T, and free circles c3, c4 on the
    unglued boundary a2 of `right`. n = 0 gives a separable control.

    Raises:
        ValueError: for n < 0
        ConstructionBug: if the assembled pair fails validation
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")

    left = SeifertBlock(LEFT, 1, ('a',))
    right = SeifertBlock(RIGHT, 1, ('a1', 'a2'))
    torus = JsjTorus(FAMILY_TORUS, Side(LEFT, 'a'), Side(RIGHT, 'a1'), FAMILY_GLUING.entries)
    manifold = GraphManifold({LEFT: left, RIGHT: right}, {FAMILY_TORUS: torus}, closed=False)

    c11 = HomologyClass(1, 2 * n, torus.basis(NEAR))
    c12 = HomologyClass(2 * n + 1, -2 * n, torus.basis(NEAR))
    far_c11 = transport(FAMILY_GLUING, c11, torus.basis(FAR), near_basis=torus.basis(NEAR))
    far_c12 = transport(FAMILY_GLUING, c12, torus.basis(FAR), near_basis=torus.basis(NEAR))

    left_req = RwRequest(1, (('a', c11.coefficients(), c12.coefficients()),), block=LEFT)
    right_req = RwRequest(1, (
        ('a1', far_c11.coefficients(), far_c12.coefficients()),
        ('a2', (1, -(2 * n + 2)), (2 * n + 1, -(2 * n + 2))),
    ), block=RIGHT)

    left_piece, left_circles = rw_build_piece(left_req, LEFT, ['c1.near', 'c2.near'])
    right_piece, right_circles = rw_build_piece(right_req, RIGHT, ['c1.far', 'c2.far', 'c3', 'c4'])

    circles = [_attach(c, manifold, LEFT) for c in left_circles]
    circles += [_attach(c, manifold, RIGHT) for c in right_circles]
    edges = [SurfaceEdge('c1', 'c1.near', 'c1.far'), SurfaceEdge('c2', 'c2.near', 'c2.far')]
    surface = build_surface(manifold, [left_piece, right_piece], circles, edges)

    _require_valid(validate_surface(surface), f"open pair n={n}")
    return OpenPair(manifold, surface)


def _require_valid(report: ValidationReport, what: str) -> None:
    if not report.ok:
        raise ConstructionBug(f"{what} is invalid: " + "; ".join(str(v) for v in report.errors))


class _Mirror:
    """Id bookkeeping for doubling: original and mirror names of everything."""

    def __init__(
        self,
        merged_blocks: Set[str],
        free_labels: Mapping[str, Set[str]],
        rename: Mapping[str, str],
        suffix: str
    ):
        self.merged_blocks = merged_blocks
        self.free_labels = free_labels
        self.rename = rename
        self.suffix = suffix

    def mirror(self, name: str) -> str:
        return f"{name}{self.suffix}"

    def block(self, block_id: str, mirrored: bool) -> str:
        if block_id in self.merged_blocks:
            return self.rename.get(block_id, block_id)
        if mirrored:
            return self.mirror(block_id)
        return self.rename.get(block_id, block_id)

    def side(self, side: Side, mirrored: bool) -> Side:
        label = side.label
        if mirrored and side.block in self.merged_blocks:
            label = self.mirror(label)
        return Side(self.block(side.block, mirrored), label)


def double_pair(
    manifold: GraphManifold,
    surface: HorizontalSurface,
    rename: Optional[Mapping[str, str]] = None,
    suffix: str = MIRROR_SUFFIX
) -> OpenPair:
    """
    Double a manifold and surface along their free boundary.

    A mirror copy of everything is made (ids get `suffix`). Each free
    boundary torus is glued to its mirror by the identity on (alpha, beta);
    the fibers match, so that torus is not a JSJ torus and the block merges
    with its mirror into one block whose base is the double of F
    (chi doubles, genus follows from chi). Pieces with free circles merge
    with their mirrors the same way. Mirror copies keep the original
    gluing matrices and homology classes.

    Args:
        manifold: N' with free boundary tori
        surface: B_n, whose free circles are exactly those on the free tori
        rename: optional new ids for merged blocks and pieces
        suffix: appended to mirror ids

    Returns:
        OpenPair: the closed manifold N and closed surface S_n

    Raises:
        DoublingError: if the input is invalid, has no free boundary, or a
            free boundary torus carries no circle of the surface
    """
    rename = dict(rename or {})
    report = validate_surface(surface)
    if not report.ok:
        raise DoublingError("cannot double an invalid pair: " + "; ".join(str(v) for v in report.errors))

    free = free_boundaries(manifold)
    if not free:
        raise DoublingError("manifold has no free boundary torus to double along")

    free_labels: Dict[str, Set[str]] = {}
    for side in free:
        free_labels.setdefault(side.block, set()).add(side.label)

    carried: Dict[Side, List[str]] = {}
    merged_pieces: Set[str] = set()
    for circle in surface.circles.values():
        if circle.is_free:
            side = Side(surface.pieces[circle.piece].block, circle.label)
            carried.setdefault(side, []).append(circle.id)
            merged_pieces.add(circle.piece)
    for side in free:
        if not carried.get(side):
            raise DoublingError(f"free boundary torus {basis_tag(side)} carries no circle and cannot be mirrored")

    names = _Mirror(set(free_labels), free_labels, rename, suffix)
    new_manifold = _double_manifold(manifold, names)
    new_surface = _double_surface(surface, new_manifold, merged_pieces, names)

    _require_valid(validate_surface(new_surface), "doubled pair")
    logger.debug(
        f"Doubled along {len(free)} free tori: {len(new_manifold.blocks)} blocks, "
        f"{len(new_surface.pieces)} pieces"
    )
    return OpenPair(new_manifold, new_surface)


def _double_manifold(manifold: GraphManifold, names: _Mirror) -> GraphManifold:
    blocks: Dict[str, SeifertBlock] = {}
    for block_id in sorted(manifold.blocks):
        block = manifold.blocks[block_id]
        if block_id in names.merged_blocks:
            kept = tuple(l for l in block.boundary if l not in names.free_labels[block_id])
            boundary = kept + tuple(names.mirror(l) for l in kept)
            chi = 2 * block.euler_characteristic
            genus = (2 - chi - len(boundary)) // 2
            new_id = names.block(block_id, False)
            blocks[new_id] = SeifertBlock(new_id, genus, boundary)
        else:
            for mirrored in (False, True):
                new_id = names.block(block_id, mirrored)
                blocks[new_id] = SeifertBlock(new_id, block.genus, block.boundary)

    tori: Dict[str, JsjTorus] = {}
    for torus_id in sorted(manifold.tori):
        torus = manifold.tori[torus_id]
        for mirrored in (False, True):
            new_id = names.mirror(torus_id) if mirrored else torus_id
            tori[new_id] = JsjTorus(
                new_id,
                names.side(torus.near, mirrored),
                names.side(torus.far, mirrored),
                torus.entries
            )
    return GraphManifold(blocks, tori, closed=True)


def _double_surface(
    surface: HorizontalSurface,
    manifold: GraphManifold,
    merged_pieces: Set[str],
    names: _Mirror
) -> HorizontalSurface:
    def piece_name(piece_id: str, mirrored: bool) -> str:
        if piece_id in merged_pieces or not mirrored:
            return names.rename.get(piece_id, piece_id)
        return names.mirror(piece_id)

    circles: List[SurfaceCircle] = []
    for circle_id in sorted(surface.circles):
        circle = surface.circles[circle_id]
        if circle.is_free:
            continue
        block = surface.pieces[circle.piece].block
        for mirrored in (False, True):
            side = names.side(Side(block, circle.label), mirrored)
            circles.append(SurfaceCircle(
                id=names.mirror(circle_id) if mirrored else circle_id,
                piece=piece_name(circle.piece, mirrored),
                label=side.label,
                homology=HomologyClass(circle.homology.a, circle.homology.b, basis_tag(side)),
                torus=names.mirror(circle.torus) if mirrored else circle.torus,
                side=circle.side
            ))

    pieces: List[SurfacePiece] = []
    for piece_id in sorted(surface.pieces):
        piece = surface.pieces[piece_id]
        if piece_id in merged_pieces:
            kept = [c for c in piece.circles if not surface.circles[c].is_free]
            chi = 2 * piece.euler_characteristic
            genus = (2 - chi - 2 * len(kept)) // 2
            pieces.append(SurfacePiece(
                piece_name(piece_id, False), names.block(piece.block, False), piece.degree, genus
            ))
        else:
            for mirrored in (False, True):
                pieces.append(SurfacePiece(
                    piece_name(piece_id, mirrored), names.block(piece.block, mirrored),
                    piece.degree, piece.genus
                ))

    edges: List[SurfaceEdge] = []
    for edge_id in sorted(surface.edges):
        edge = surface.edges[edge_id]
        edges.append(edge)
        edges.append(SurfaceEdge(
            names.mirror(edge_id), names.mirror(edge.near_circle), names.mirror(edge.far_circle)
        ))

    return build_surface(manifold, pieces, circles, edges)


def family_gamma() -> Cycle:
    """gamma_n: cross c1 from the middle piece to the left piece, then c2 back."""
    return Cycle((Step('c1', BACKWARD), Step('c2', FORWARD)))


def build_family(n: int) -> FamilySpec:
    """
    Closed family member (N, S_n, gamma_n) for n >= 1.

    Governor 2n+1, w(gamma_n) = (2n+1)^2, crossing number 2; N has three
    blocks and two tori, S_n three pieces and four edges.

    Raises:
        ValueError: for n < 1
        ConstructionBug: if any of the invariants above fails
    """
    if n < 1:
        raise ValueError(f"family index must be at least 1, got {n}")
    open_pair = build_open_pair(n)
    closed = double_pair(open_pair.manifold, open_pair.surface, rename={RIGHT: MIDDLE})
    family = FamilySpec(n, closed.manifold, closed.surface, family_gamma())

    checks = {
        'blocks': (len(family.manifold.blocks), 3),
        'tori': (len(family.manifold.tori), 2),
        'pieces': (len(family.surface.pieces), 3),
        'edges': (len(family.surface.edges), 4),
        'omega edges': (dual_graph(family.manifold).number_of_edges(), 2),
        'cycle rank': (cycle_rank(family.surface), 2),
        'governor': (governor(family.surface), family.epsilon),
        'w(gamma)': (spirality(family.surface, family.gamma), family.w_gamma),
        'crossings': (crossing_number(family.gamma), 2),
    }
    broken = [f"{name}: got {got}, expected {want}" for name, (got, want) in checks.items() if got != want]
    if broken:
        raise ConstructionBug(f"family n={n}: " + "; ".join(broken))
    logger.debug(f"Built family member n={n}")
    return family
