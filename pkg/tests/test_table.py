from fractions import Fraction as F

import pytest

from rectbilliard import CollisionPoint, Generator, Side, Slope, TableSpec, Vertex, normalize_generator
from rectbilliard.errors import BilliardError
from rectbilliard.table import AngleClass, physical_coordinates, vertex_coordinates


def test_table_rejects_nonpositive_rho():
    with pytest.raises(BilliardError):
        TableSpec(F(0))


def test_vertex_coordinates():
    t = TableSpec(F(3, 2))
    assert vertex_coordinates(Vertex.C, t) == (1, F(3, 2))
    assert vertex_coordinates(Vertex.D, t) == (0, F(3, 2))


def test_positions_run_from_first_vertex():
    t = TableSpec(F(2))
    assert physical_coordinates(CollisionPoint(Side.CD, F(3, 10)), t) == (F(7, 10), 2)
    assert physical_coordinates(CollisionPoint(Side.DA, F(1, 4)), t) == (0, F(3, 2))
    assert physical_coordinates(CollisionPoint(Side.BC, F(1, 4)), t) == (1, F(1, 2))


def test_collision_point_open_interval():
    for bad in (F(0), F(1), F(3, 2)):
        with pytest.raises(BilliardError):
            CollisionPoint(Side.AB, bad)


def test_angle_class_alternates_by_orientation():
    assert CollisionPoint(Side.AB, F(1, 2)).angle_class is AngleClass.ALPHA
    assert CollisionPoint(Side.BC, F(1, 2)).angle_class is AngleClass.COMPLEMENT


def test_generator_validation():
    with pytest.raises(BilliardError):
        Generator.square(F(1), F(1))
    with pytest.raises(BilliardError):
        Generator.square(F(-1, 2), F(1))
    with pytest.raises(BilliardError):
        Generator(Side.AB, F(0), Slope.vertical())


def test_slope_kinds():
    assert Slope.rational(F(3, 2)).exact
    assert Slope.vertical().exact
    assert not Slope.irrational(2 ** 0.5).exact
    with pytest.raises(BilliardError):
        Slope.rational(F(0))


def test_physical_to_normalized():
    g = Generator.physical(Side.AB, F(1, 5), F(1, 2), F(2))
    assert g.slope.value == F(1, 4)
    assert g.physical_tangent == F(1, 2)
    h = Generator.physical(Side.BC, F(1, 5), F(1, 2), F(2))
    assert h.physical_tangent == F(1, 2)


@pytest.mark.parametrize("side", list(Side))
def test_direction_points_inward(side):
    g = Generator.physical(side, F(1, 3), F(2), F(3, 4))
    (x, y), (dx, dy) = g.start_point(), g.direction()
    # a small step stays inside the table
    eps = F(1, 10**6)
    assert 0 < x + eps * dx < 1 and 0 < y + eps * dy < F(3, 4)


def test_normalize_vertical_side_inverts_slope():
    g = Generator.physical(Side.BC, F(1, 4), F(2), F(1))
    f = normalize_generator(g)
    assert f.start_side is Side.AB and f.table.rho == 1
    # measured against BC the launch is steep, so the rotated frame keeps tan = 2
    assert f.slope.value == F(2)
    assert g.slope.value == F(1, 2)


def test_normalize_rejects_irrational():
    with pytest.raises(BilliardError):
        normalize_generator(Generator.physical(Side.AB, F(1, 4), 2 ** 0.5))


def test_rotation_is_cyclic():
    for s in Side:
        assert s.rotate(4) is s
    assert Vertex.A.rotate(1) is Vertex.B
    with pytest.raises(BilliardError):
        Slope.vertical().inverted()
    assert Slope.rational(F(3, 2)).inverted().value == F(2, 3)
