"""Tests for horizontal piece construction, doubling and the surface family."""

from dataclasses import replace

import pytest

from core.constructor import (
    GAMMA,
    MIDDLE,
    RwRequest,
    build_family,
    build_open_pair,
    double_pair,
    family_gamma,
    rw_build_piece,
    rw_check,
)
from core.errors import DoublingError, GenusError, RwViolationError
from core.exact_algebra import PositiveRational
from core.manifold_model import Side, base_euler_sum, dual_graph, free_boundaries
from core.surface_model import (
    BACKWARD,
    FORWARD,
    closed_genus,
    crossing_number,
    cycle_rank,
    euler_characteristic,
    governor,
    is_separable,
    slope,
    spirality,
    spirality_image_generators,
    validate_surface,
)


def family_request(n):
    return RwRequest(1, (("a", (1, 2 * n), (2 * n + 1, -2 * n)),), block="left")


def test_rw_check_degree():
    check = rw_check(RwRequest(1, (("a", (1, 2), (3, -2)),)))
    assert check.ok
    assert check.degree == 4


@pytest.mark.parametrize("req,code", [
    (RwRequest(1, (("a", (1, 2), (3, -1)),)), "fiber-sum"),
    (RwRequest(1, (("a1", (1, 1), (3, -1)), ("a2", (1, 0), (1, 0)))), "degree-balance"),
    (RwRequest(1, (("a", (1, 1), (2, -1)),)), "even-euler"),
])
def test_rw_check_rejects_each_condition_alone(req, code):
    check = rw_check(req)
    assert not check.ok
    assert [v.code for v in check.violations] == [code]


@pytest.mark.parametrize("req,code", [
    (RwRequest(0, (("a", (1, 0), (1, 0)),)), "base-genus"),
    (RwRequest(1, ()), "base-boundary"),
    (RwRequest(1, (("a", (0, 1), (2, -1)),)), "positive-u"),
])
def test_rw_check_hypotheses(req, code):
    assert code in [v.code for v in rw_check(req).violations]


def test_rw_build_piece_errors():
    with pytest.raises(GenusError):
        rw_build_piece(RwRequest(1, (("a", (1, 1), (2, -1)),)), "P")
    with pytest.raises(RwViolationError) as excinfo:
        rw_build_piece(RwRequest(1, (("a", (1, 2), (3, -1)),)), "P")
    assert "fiber-sum" in str(excinfo.value)


def test_rw_build_piece_circles():
    piece, circles = rw_build_piece(family_request(1), "left")
    assert piece.degree == 4
    assert piece.genus == 2
    assert piece.euler_characteristic == -4
    assert [c.id for c in circles] == ["left.a.1", "left.a.2"]
    assert [c.homology.coefficients() for c in circles] == [(1, 2), (3, -2)]
    assert all(c.is_free and c.homology.basis == "left:a" for c in circles)


def test_rw_build_piece_circle_id_count():
    with pytest.raises(ValueError):
        rw_build_piece(family_request(1), "left", ["only-one"])


@pytest.mark.parametrize("n", range(1, 21))
def test_piece_genera(n):
    pair = build_open_pair(n)
    pieces = pair.surface.pieces
    assert pieces["left"].genus == n + 1
    assert pieces["right"].genus == 2 * n + 1
    assert pieces["left"].degree == pieces["right"].degree == 2 * n + 2


def test_open_pair_shape():
    pair = build_open_pair(1)
    assert validate_surface(pair.surface).ok
    assert sorted(pair.surface.edges) == ["c1", "c2"]
    assert free_boundaries(pair.manifold) == [Side("right", "a2")]
    c3 = pair.surface.circles["c3"]
    c4 = pair.surface.circles["c4"]
    assert c3.homology.coefficients() == (1, -4)
    assert c4.homology.coefficients() == (3, -4)


def test_open_pair_rejects_negative_n():
    with pytest.raises(ValueError):
        build_open_pair(-1)


@pytest.mark.parametrize("n", range(1, 21))
def test_doubling_conserves_euler_characteristic(n):
    pair = build_open_pair(n)
    closed = double_pair(pair.manifold, pair.surface)
    assert euler_characteristic(closed.surface) == 2 * euler_characteristic(pair.surface)
    assert base_euler_sum(closed.manifold) == 2 * base_euler_sum(pair.manifold)


def test_doubling_names():
    pair = build_open_pair(2)
    closed = double_pair(pair.manifold, pair.surface, rename={"right": MIDDLE})
    assert sorted(closed.manifold.blocks) == ["left", "left_m", "middle"]
    assert sorted(closed.manifold.tori) == ["T", "T_m"]
    assert closed.manifold.blocks["middle"].boundary == ("a1", "a1_m")
    assert closed.manifold.blocks["middle"].genus == 2
    assert closed.manifold.closed
    assert closed.surface.pieces["middle"].genus == 4 * 2 + 3


def test_doubling_needs_free_boundary(family1):
    with pytest.raises(DoublingError, match="no free boundary"):
        double_pair(family1.manifold, family1.surface)


def test_doubling_needs_circles_on_free_tori():
    pair = build_open_pair(1)
    circles = {k: v for k, v in pair.surface.circles.items() if k not in ("c3", "c4")}
    stripped = replace(pair.surface, circles=circles)
    with pytest.raises(DoublingError):
        double_pair(pair.manifold, stripped)


@pytest.mark.parametrize("n", range(1, 51))
def test_family_invariants(n):
    family = build_family(n)
    assert governor(family.surface) == PositiveRational(2 * n + 1, 1)
    assert spirality(family.surface, family.gamma) == PositiveRational((2 * n + 1) ** 2, 1)
    assert len(family.manifold.blocks) == 3
    assert len(family.manifold.tori) == 2
    assert len(family.surface.pieces) == 3
    assert len(family.surface.edges) == 4
    assert dual_graph(family.manifold).number_of_edges() == 2
    assert not is_separable(family.surface)
    assert cycle_rank(family.surface) == 2
    assert spirality_image_generators(family.surface) == [PositiveRational((2 * n + 1) ** 2, 1)] * 2
    assert spirality_image_generators(family.surface, reverse=True) == [PositiveRational(1, (2 * n + 1) ** 2)] * 2
    assert not is_separable(family.surface, reverse=True)


@pytest.mark.parametrize("n", [1, 2, 5, 13])
def test_family_mirror_slopes(n):
    surface = build_family(n).surface
    for edge_id in ("c1", "c2"):
        for direction in (FORWARD, BACKWARD):
            assert slope(surface, edge_id, direction) == slope(surface, edge_id + "_m", direction)
    assert slope(surface, "c1", FORWARD) == PositiveRational(1, 2 * n + 1)
    assert slope(surface, "c2", FORWARD) == PositiveRational(2 * n + 1, 1)


@pytest.mark.parametrize("n", [1, 2, 7, 20])
def test_family_closed_genus(n):
    family = build_family(n)
    assert euler_characteristic(family.surface) == -12 * n - 12
    assert closed_genus(family.surface) == 6 * n + 7


def test_family_gamma():
    gamma = family_gamma()
    assert gamma.to_tokens() == "c1:-,c2:+"
    assert crossing_number(gamma) == 2
    assert GAMMA == "gamma"


def test_family_epsilon_and_w(family1):
    assert family1.epsilon == PositiveRational(3, 1)
    assert family1.w_gamma == PositiveRational(9, 1)


@pytest.mark.parametrize("n", [0, -3])
def test_family_index_range(n):
    with pytest.raises(ValueError):
        build_family(n)


def test_control_pair_separable(control_pair):
    assert is_separable(control_pair.surface)
