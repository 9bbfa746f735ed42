import math
import statistics

import numpy as np
import pytest

from cyclesight.errors import (
    NegativeDeterminant,
    NonNegativeDeterminant,
    NotOnQuadric,
    PointCycleError,
    ZeroMatrix,
)
from cyclesight.liegeom import (
    CayleyDirection,
    Circle,
    CyclePair,
    HermitianCycle,
    Line,
    LiePoint,
    Model,
    Orientation,
    PointAtInfinity,
    PointCycle,
    ThetaLine,
    base_cycle,
    cayley,
    conjugate_figure,
    cycle_intersection_points,
    cycle_locus_distance,
    cycle_pair_of,
    cycle_to_lie,
    disk_point_of,
    figure_of,
    intersection_count,
    inversive_angle,
    lie_form,
    lie_to_cycle,
    matrix_of_cycle,
    moebius_apply,
    neg_det_figure,
    reverse_orientation,
    spear_of,
    spear_through,
)
from cyclesight.mat2 import JordanKind, Mat2, classify_jordan, eig2
from cyclesight.projline import ProjPoint

RNG = np.random.default_rng(20260810)


def random_matrix(rng, det_sign=None, tries=1000):
    for _ in range(tries):
        m = Mat2(*rng.uniform(-5.0, 5.0, size=4))
        if m.scale() < 1e-3:
            continue
        d = m.det()
        if det_sign is None and abs(d) > 1e-6:
            return m
        if det_sign == "+" and d > 1e-6:
            return m
        if det_sign == "-" and d < -1e-6:
            return m
    raise AssertionError("no sample found")


def random_cycle(rng):
    if rng.random() < 0.75:
        side = Orientation.OUTSIDE if rng.random() < 0.5 else Orientation.INSIDE
        return Circle(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(0.1, 3.0), side)
    ang = rng.uniform(0.0, 2.0 * math.pi)
    return Line(math.cos(ang), math.sin(ang), rng.uniform(-2.0, 2.0))


# --- bilinear form ------------------------------------------------------


def test_form_vanishes_on_quadric_points():
    rng = np.random.default_rng(1)
    for _ in range(200):
        p = cycle_to_lie(random_cycle(rng))
        assert abs(lie_form(p, p)) <= 1e-12


def test_form_example_yaxis_vs_point_i_pair():
    p = LiePoint(1, 0, 1, 0, 0)
    q = LiePoint(0, 2, 0, 2, 2)
    assert lie_form(p, q) == 0.0
    assert lie_form(p, q) == lie_form(q, p)


def test_lines_pass_through_infinity():
    inf = LiePoint(0, 0, 0, 1, 0)
    rng = np.random.default_rng(2)
    for _ in range(50):
        ang = rng.uniform(0, 2 * math.pi)
        line = cycle_to_lie(Line(math.cos(ang), math.sin(ang), rng.uniform(-3, 3)))
        assert abs(lie_form(inf, line)) <= 1e-15


# --- realization round trips --------------------------------------------


def test_lie_to_cycle_cases():
    assert lie_to_cycle(LiePoint(0, 0, 0, 1, 0)) == PointAtInfinity()
    line = lie_to_cycle(LiePoint(0, 1, 1, 0, 0))
    assert isinstance(line, Line)
    assert (line.nx, line.ny, line.offset) == (0.0, 1.0, 0.0)  # half-plane y >= 0
    pt = lie_to_cycle(LiePoint(0, 1, 0, 1, 1))
    assert pt == PointCycle(0.0, 1.0)


def test_lie_to_cycle_rejects_off_quadric():
    with pytest.raises(NotOnQuadric):
        lie_to_cycle(LiePoint(0, 0, 1, 1, 1))


def test_cycle_to_lie_examples():
    assert cycle_to_lie(PointAtInfinity()).almost_equal(LiePoint(0, 0, 0, 1, 0))
    # outside-oriented unit circle: quadric forces x4*x5 = -1
    unit = cycle_to_lie(Circle(0.0, 0.0, 1.0, Orientation.OUTSIDE))
    assert unit.almost_equal(LiePoint(0, 0, 1, -1, 1))
    assert abs(unit.quadric_residual()) <= 1e-15
    axis = cycle_to_lie(Line(0.0, 1.0, 0.0))
    assert axis.almost_equal(LiePoint(0, 1, 1, 0, 0))


def test_cycle_realization_round_trip_random():
    rng = np.random.default_rng(3)
    for _ in range(500):
        c = random_cycle(rng)
        p = cycle_to_lie(c)
        assert abs(p.quadric_residual()) <= 1e-12
        back = lie_to_cycle(p)
        assert type(back) is type(c)
        if isinstance(c, Circle):
            assert math.isclose(back.cx, c.cx, abs_tol=1e-9)
            assert math.isclose(back.cy, c.cy, abs_tol=1e-9)
            assert math.isclose(back.radius, c.radius, rel_tol=1e-9)
            assert back.orientation == c.orientation
        else:
            assert math.isclose(back.nx, c.nx, abs_tol=1e-9)
            assert math.isclose(back.ny, c.ny, abs_tol=1e-9)
            assert math.isclose(back.offset, c.offset, abs_tol=1e-9)


# --- orientation reversal ----------------------------------------------


def test_reverse_orientation_circle_and_line():
    outside = LiePoint(0, 0, 1, -1, 1)
    inside = reverse_orientation(outside)
    assert lie_to_cycle(inside) == Circle(0.0, 0.0, 1.0, Orientation.INSIDE)
    upper = LiePoint(0, 1, 1, 0, 0)
    lower = reverse_orientation(upper)
    got = lie_to_cycle(lower)
    assert isinstance(got, Line) and got.ny == -1.0
    # involution, and identity on point cycles
    assert reverse_orientation(inside).almost_equal(outside)
    pt = LiePoint(0, 1, 0, 1, 1)
    assert reverse_orientation(pt).almost_equal(pt)


# --- conjugation (RI / ORI) ---------------------------------------------


def test_conjugate_figure_flips_x2_slot_in_axis_model():
    m = Mat2(1.3, -0.4, 0.8, 2.0)
    pair = cycle_pair_of(m)
    ri = conjugate_figure(pair.cycle, Model.X_AXIS)
    assert ri.almost_equal(pair.partner)
    assert conjugate_figure(ri, Model.X_AXIS).almost_equal(pair.cycle)


def test_spears_are_self_conjugate():
    rng = np.random.default_rng(4)
    for _ in range(100):
        m = random_matrix(rng)
        p = ProjPoint(rng.uniform(-3, 3), rng.uniform(-3, 3))
        sp = spear_of(m, p)
        assert conjugate_figure(sp, Model.X_AXIS).almost_equal(sp)


def test_disk_conjugation_is_x4_x5_swap():
    # independent oracle: orientation-reversed inversion in the unit circle
    # exchanges the x4 and x5 slots
    rng = np.random.default_rng(5)
    for _ in range(100):
        p = cycle_to_lie(random_cycle(rng))
        ori = conjugate_figure(p, Model.UNIT_DISK)
        w = p.canonical()
        assert ori.almost_equal(LiePoint(w.x1, w.x2, w.x3, w.x5, w.x4), 1e-8)


def test_conjugation_commutes_with_cayley():
    rng = np.random.default_rng(6)
    for _ in range(100):
        p = cycle_to_lie(random_cycle(rng))
        lhs = cayley(conjugate_figure(p, Model.X_AXIS), CayleyDirection.TO_DISK)
        rhs = conjugate_figure(cayley(p, CayleyDirection.TO_DISK), Model.UNIT_DISK)
        assert lhs.almost_equal(rhs, 1e-8)


# --- spears -------------------------------------------------------------


def test_spear_identity_at_zero_degenerates_to_point():
    sp = spear_of(Mat2.identity(), ProjPoint(0.0, 1.0))
    assert sp.almost_equal(LiePoint(0, 0, 0, 0, -2))
    assert lie_to_cycle(sp) == PointCycle(0.0, 0.0)


def test_spear_rotation_gives_oriented_y_axis():
    sp = spear_of(Mat2(0.0, -1.0, 1.0, 0.0), ProjPoint(0.0, 1.0))
    assert sp.almost_equal(LiePoint(1, 0, 1, 0, 0))


def test_spear_quadric_identity_random():
    rng = np.random.default_rng(7)
    for _ in range(300):
        m = random_matrix(rng)
        p = ProjPoint(rng.uniform(-3, 3), rng.uniform(-3, 3))
        assert abs(spear_of(m, p).quadric_residual()) <= 1e-12


def test_spear_endpoints_are_p_and_image():
    rng = np.random.default_rng(8)
    for _ in range(100):
        m = random_matrix(rng)
        p = ProjPoint(rng.uniform(-3, 3), rng.uniform(-3, 3))
        img = m.act(p)
        sp = spear_of(m, p)
        for end in (p, img):
            if end.y == 0.0:
                pc = LiePoint(0, 0, 0, 1, 0)
            else:
                v = end.x / end.y
                pc = cycle_to_lie(PointCycle(v, 0.0))
            # a point lies on a cycle iff the form vanishes
            assert abs(lie_form(sp, pc)) <= 1e-9


def test_spear_through_matches_order_orientation():
    lp = spear_through(ProjPoint(1.0, 0.0), ProjPoint(0.0, 1.0))
    assert lp.almost_equal(LiePoint(1, 0, -1, 0, 0))
    rev = spear_through(ProjPoint(0.0, 1.0), ProjPoint(1.0, 0.0))
    assert rev.almost_equal(reverse_orientation(lp))
    circ = lie_to_cycle(spear_through(ProjPoint(1.0, 1.0), ProjPoint(2.0, 1.0)))
    assert isinstance(circ, Circle)
    assert math.isclose(circ.cx, 1.5) and math.isclose(circ.cy, 0.0)
    assert math.isclose(circ.radius, 0.5)


# --- cycle pair ----------------------------------------------------------


def test_pair_of_identity_is_oriented_axis():
    pair = cycle_pair_of(Mat2.identity())
    assert pair.cycle.almost_equal(LiePoint(0, 2, 2, 0, 0))
    assert pair.partner.almost_equal(reverse_orientation(pair.cycle))


def test_pair_of_rotation_is_point_pair():
    pair = cycle_pair_of(Mat2(0.0, -1.0, 1.0, 0.0))
    assert pair.cycle.almost_equal(LiePoint(0, 2, 0, 2, 2))
    assert lie_to_cycle(pair.cycle) == PointCycle(0.0, 1.0)
    assert lie_to_cycle(pair.partner) == PointCycle(0.0, -1.0)


def test_pair_of_singular_matrix_is_self_partnered():
    pair = cycle_pair_of(Mat2(1.0, 1.0, 1.0, 1.0))
    assert pair.cycle.almost_equal(LiePoint(0, 0, 2, -2, 2))
    assert pair.cycle.canonical().x2 == 0.0
    assert pair.cycle.almost_equal(pair.partner)


def test_pair_rejects_negative_determinant():
    with pytest.raises(NegativeDeterminant):
        cycle_pair_of(Mat2.diag(1.0, -1.0))
    with pytest.raises(ZeroMatrix):
        cycle_pair_of(Mat2(0.0, 0.0, 0.0, 0.0))


def test_universal_tangency_random():
    rng = np.random.default_rng(9)
    for _ in range(100):
        m = random_matrix(rng, "+")
        pair = cycle_pair_of(m)
        for _ in range(20):
            p = ProjPoint(rng.uniform(-3, 3), rng.uniform(-3, 3))
            sp = spear_of(m, p)
            assert abs(lie_form(sp, pair.cycle)) <= 1e-8
            assert abs(lie_form(sp, pair.partner)) <= 1e-8


def test_identity_pair_in_disk_model_is_base_circle():
    pair = cycle_pair_of(Mat2.identity(), Model.UNIT_DISK)
    cycles = {lie_to_cycle(pair.cycle), lie_to_cycle(pair.partner)}
    assert cycles == {
        Circle(-0.0, -0.0, 1.0, Orientation.INSIDE),
        Circle(0.0, 0.0, 1.0, Orientation.OUTSIDE),
    }


# --- matrix_of_cycle -----------------------------------------------------


def mat_proportional(m: Mat2, k: Mat2, tol=1e-9) -> bool:
    dot = sum(x * y for x, y in zip(m.entries(), k.entries()))
    return abs(abs(dot) - m.frobenius() * k.frobenius()) <= tol * m.frobenius() * k.frobenius()


def test_matrix_of_cycle_examples():
    assert mat_proportional(matrix_of_cycle(LiePoint(0, 2, 2, 0, 0)), Mat2.identity())
    got = matrix_of_cycle(LiePoint(0, 2, 0, 2, 2))
    assert mat_proportional(got, Mat2(0.0, -1.0, 1.0, 0.0))
    # sign convention at zero trace: the x2 > 0 representative is kept
    assert got.b < 0.0 < got.c


def test_matrix_of_cycle_round_trip_random():
    rng = np.random.default_rng(10)
    for _ in range(1000):
        m = random_matrix(rng, "+")
        model = Model.X_AXIS if rng.random() < 0.5 else Model.UNIT_DISK
        pair = cycle_pair_of(m, model)
        back = matrix_of_cycle(pair.cycle, model)
        assert mat_proportional(back, m, 1e-8)
        assert math.isclose(back.frobenius(), 1.0, rel_tol=1e-12)
        # the original cycle is one member of the rebuilt pair
        rebuilt = cycle_pair_of(back, model)
        assert pair.cycle.almost_equal(rebuilt.cycle, 1e-9) or pair.cycle.almost_equal(
            rebuilt.partner, 1e-9
        )


# --- negative determinant figure -----------------------------------------


def test_neg_det_diag_line_is_y_axis_with_theta_zero():
    fig = neg_det_figure(Mat2.diag(1.0, -1.0))
    got = lie_to_cycle(fig.line)
    assert isinstance(got, Line)
    assert abs(got.ny) <= 1e-15 and abs(got.offset) <= 1e-15
    assert abs(fig.theta) <= 1e-12
    assert math.isclose(fig.theta_formula, -1.0)
    assert fig.endpoints[0].almost_equal(ProjPoint(1.0, 0.0))
    assert fig.endpoints[1].almost_equal(ProjPoint(0.0, 1.0))


def test_neg_det_scale_invariance():
    for lam in (0.5, 2.0, 7.5):
        fig = neg_det_figure(Mat2.diag(lam, -lam))
        assert abs(fig.theta) <= 1e-12
        got = lie_to_cycle(fig.line)
        assert isinstance(got, Line) and abs(got.offset) <= 1e-12


def test_neg_det_singular_limit_matches_cycle_pair():
    m = Mat2.diag(1.0, -1e-6)
    fig = neg_det_figure(m)
    # theta approaches +-1 at a sqrt rate in the small eigenvalue
    assert abs(abs(fig.theta) - 1.0) <= 2e-3
    # the figure collapses onto the singular cycle-pair limit
    pair = cycle_pair_of(Mat2.diag(1.0, 0.0))
    a = lie_to_cycle(fig.line)
    b = lie_to_cycle(pair.cycle)
    assert isinstance(a, Line) and isinstance(b, Line)
    assert math.isclose(abs(a.nx), abs(b.nx), abs_tol=2e-6)
    assert abs(a.offset) <= 2e-6 and abs(b.offset) <= 1e-12


def test_neg_det_rejects_nonnegative():
    with pytest.raises(NonNegativeDeterminant):
        neg_det_figure(Mat2.diag(1.0, 1.0))


def test_constant_angle_property_random():
    rng = np.random.default_rng(11)
    for _ in range(50):
        m = random_matrix(rng, "-")
        fig = neg_det_figure(m)
        angles = []
        for _ in range(40):
            p = ProjPoint(rng.uniform(-3, 3), rng.uniform(-3, 3))
            try:
                alpha = inversive_angle(spear_of(m, p), fig.line)
            except PointCycleError:
                continue
            if alpha is not None:
                angles.append(alpha)
        assert len(angles) >= 30
        assert statistics.pstdev(angles) <= 1e-6


def test_figure_dispatch():
    assert isinstance(figure_of(Mat2.identity()), CyclePair)
    assert isinstance(figure_of(Mat2.diag(1.0, -1.0)), ThetaLine)
    assert isinstance(figure_of(Mat2(1.0, 1.0, 1.0, 1.0)), CyclePair)
    with pytest.raises(ZeroMatrix):
        figure_of(Mat2(0.0, 0.0, 0.0, 0.0))


def test_figure_scale_invariance():
    rng = np.random.default_rng(12)
    for _ in range(100):
        m = random_matrix(rng, "+")
        lam = rng.uniform(0.2, 5.0)
        f1 = cycle_pair_of(m)
        f2 = cycle_pair_of(m.scaled(lam))
        assert f1.cycle.almost_equal(f2.cycle, 1e-9)
        # negative scalar preserves the pair as a set
        f3 = cycle_pair_of(m.scaled(-lam))
        assert f3.cycle.almost_equal(f1.cycle, 1e-9) or f3.cycle.almost_equal(f1.partner, 1e-9)
        assert f3.partner.almost_equal(f1.cycle, 1e-9) or f3.partner.almost_equal(f1.partner, 1e-9)


# --- Moebius action -------------------------------------------------------


def test_moebius_identity():
    rng = np.random.default_rng(13)
    g = ((1.0 + 0j, 0j), (0j, 1.0 + 0j))
    for _ in range(50):
        p = cycle_to_lie(random_cycle(rng))
        assert moebius_apply(g, p).almost_equal(p, 1e-12)


def test_moebius_cayley_sends_axis_to_unit_circle():
    axis = LiePoint(0, 1, 1, 0, 0)
    got = lie_to_cycle(cayley(axis, CayleyDirection.TO_DISK))
    assert isinstance(got, Circle)
    assert math.isclose(got.radius, 1.0, rel_tol=1e-12)
    assert math.hypot(got.cx, got.cy) <= 1e-12


def test_moebius_preserves_tangency():
    rng = np.random.default_rng(14)
    pairs = []
    while len(pairs) < 100:
        # a circle and an orientedly tangent line built by hand
        c = Circle(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(0.2, 2.0), Orientation.OUTSIDE)
        ang = rng.uniform(0, 2 * math.pi)
        nx, ny = math.cos(ang), math.sin(ang)
        # tangent line with normal pointing at the circle centre
        off = nx * c.cx + ny * c.cy + c.radius
        line = Line(nx, ny, off)
        p, q = cycle_to_lie(c), reverse_orientation(cycle_to_lie(line))
        if abs(lie_form(p, q)) > 1e-12:
            q = cycle_to_lie(line)
        assert abs(lie_form(p, q)) <= 1e-12
        pairs.append((p, q))
    for _ in range(20):
        e = rng.uniform(-2.0, 2.0, size=8)
        g = (
            (complex(e[0], e[1]), complex(e[2], e[3])),
            (complex(e[4], e[5]), complex(e[6], e[7])),
        )
        det = g[0][0] * g[1][1] - g[0][1] * g[1][0]
        if abs(det) < 1e-3:
            continue
        for p, q in pairs[:20]:
            gp, gq = moebius_apply(g, p), moebius_apply(g, q)
            assert abs(lie_form(gp, gq)) <= 1e-8
            assert abs(gp.quadric_residual()) <= 1e-9


def test_cayley_point_i_goes_to_infinity():
    pt = cycle_to_lie(PointCycle(0.0, 1.0))
    assert lie_to_cycle(cayley(pt, CayleyDirection.TO_DISK)) == PointAtInfinity()


def test_cayley_axis_infinity_goes_to_minus_one():
    inf = LiePoint(0, 0, 0, 1, 0)
    got = lie_to_cycle(cayley(inf, CayleyDirection.TO_DISK))
    assert isinstance(got, PointCycle)
    assert math.isclose(got.x, -1.0, abs_tol=1e-12) and abs(got.y) <= 1e-12


def test_cayley_round_trip_random():
    rng = np.random.default_rng(15)
    for _ in range(1000):
        p = cycle_to_lie(random_cycle(rng))
        back = cayley(cayley(p, CayleyDirection.TO_DISK), CayleyDirection.TO_AXIS)
        assert back.almost_equal(p, 1e-9)


def test_cayley_maps_axis_spears_to_disk_spears():
    rng = np.random.default_rng(16)
    for _ in range(100):
        m = random_matrix(rng)
        p = ProjPoint(rng.uniform(-3, 3), rng.uniform(-3, 3))
        sp = cayley(spear_of(m, p), CayleyDirection.TO_DISK)
        w = sp.canonical()
        # disk spears are fixed by the x4/x5 swap
        assert abs(w.x4 - w.x5) <= 1e-9


def test_hermitian_bridge_round_trip():
    rng = np.random.default_rng(17)
    for _ in range(200):
        p = cycle_to_lie(random_cycle(rng))
        h = HermitianCycle.from_lie(p)
        assert h.to_lie().almost_equal(p, 1e-12)
        (h11, h12), (h21, h22) = h.matrix()
        det_h = (h11 * h22 - h12 * h21).real
        assert math.isclose(h.star * h.star, -det_h, rel_tol=1e-9, abs_tol=1e-12)


# --- angles ---------------------------------------------------------------


def test_inversive_angle_perpendicular_axes():
    x_axis = LiePoint(0, 1, 1, 0, 0)
    y_axis = LiePoint(1, 0, 1, 0, 0)
    assert math.isclose(inversive_angle(x_axis, y_axis), math.pi / 2.0)


def test_inversive_angle_disjoint_circles():
    a = cycle_to_lie(Circle(0, 0, 1.0, Orientation.OUTSIDE))
    b = cycle_to_lie(Circle(0, 0, 2.0, Orientation.OUTSIDE))
    assert inversive_angle(a, b) is None


def test_inversive_angle_sixty_degrees():
    a = cycle_to_lie(Circle(0, 0, 1.0, Orientation.OUTSIDE))
    b = cycle_to_lie(Circle(1.0, 0, 1.0, Orientation.OUTSIDE))
    assert math.isclose(inversive_angle(a, b), math.pi / 3.0)


def test_inversive_angle_rejects_points():
    pt = cycle_to_lie(PointCycle(1.0, 0.0))
    axis = LiePoint(0, 1, 1, 0, 0)
    with pytest.raises(PointCycleError):
        inversive_angle(pt, axis)


def test_tangency_is_angle_zero_and_reversal_is_pi():
    c = cycle_to_lie(Circle(0.0, 1.0, 1.0, Orientation.OUTSIDE))
    axis = LiePoint(0, 1, 1, 0, 0)
    assert math.isclose(inversive_angle(c, axis), 0.0, abs_tol=1e-12)
    assert math.isclose(inversive_angle(reverse_orientation(c), axis), math.pi)


# --- markers ---------------------------------------------------------------


def test_triangularity_marker():
    # upper triangular <=> axis cycle is a line <=> disk cycle meets (-1, 0)
    m = Mat2(2.0, 1.0, 0.0, 1.0)
    axis_cycle = lie_to_cycle(cycle_pair_of(m).cycle)
    assert isinstance(axis_cycle, Line)
    disk_cycle = lie_to_cycle(cycle_pair_of(m, Model.UNIT_DISK).cycle)
    assert cycle_locus_distance(disk_cycle, (-1.0, 0.0)) <= 1e-9
    # and a non-triangular matrix stays away from (-1, 0)
    m2 = Mat2(2.0, 1.0, 0.7, 1.0)
    disk2 = lie_to_cycle(cycle_pair_of(m2, Model.UNIT_DISK).cycle)
    assert cycle_locus_distance(disk2, (-1.0, 0.0)) > 1e-3


def test_eigendirection_marker_random():
    rng = np.random.default_rng(18)
    seen = {JordanKind.REAL_DISTINCT: 0, JordanKind.COMPLEX_PAIR: 0}
    for _ in range(200):
        m = random_matrix(rng, "+")
        kind = classify_jordan(m)
        if kind not in seen:
            continue
        seen[kind] += 1
        disk = lie_to_cycle(cycle_pair_of(m, Model.UNIT_DISK).cycle)
        pts = cycle_intersection_points(disk, Circle(0.0, 0.0, 1.0, Orientation.OUTSIDE))
        expected = {JordanKind.REAL_DISTINCT: 2, JordanKind.COMPLEX_PAIR: 0}[kind]
        assert len(pts) == expected
        dirs = [disk_point_of(e) for e in eig2(m).eigendirs]
        for d in dirs:
            assert min(math.hypot(d[0] - x, d[1] - y) for x, y in pts) <= 1e-8
    assert min(seen.values()) > 10


def test_eigendirection_marker_defective():
    # defective matrix: the disk cycle is tangent to the unit circle at the
    # Cayley image of the sole eigendirection
    m = Mat2(1.0, 1.0, -0.25, 2.0)  # trace 3, det 2.25, disc 0
    assert classify_jordan(m) is JordanKind.REAL_DEFECTIVE
    disk = lie_to_cycle(cycle_pair_of(m, Model.UNIT_DISK).cycle)
    base = base_cycle(Model.UNIT_DISK)
    assert intersection_count(cycle_to_lie(disk), base) == 1
    d = disk_point_of(eig2(m).eigendirs[0])
    assert cycle_locus_distance(disk, d) <= 1e-8


def test_rotation_similarity_preserves_disk_geometry():
    rng = np.random.default_rng(19)
    for _ in range(100):
        m = random_matrix(rng, "+")
        ang = rng.uniform(0, 2 * math.pi)
        q = Mat2.rotation(ang)
        sim = q.transpose() @ m @ q
        c1 = lie_to_cycle(cycle_pair_of(m, Model.UNIT_DISK).cycle)
        c2 = lie_to_cycle(cycle_pair_of(sim, Model.UNIT_DISK).cycle)
        if isinstance(c1, Circle) and isinstance(c2, Circle):
            assert math.isclose(c1.radius, c2.radius, rel_tol=1e-9, abs_tol=1e-9)
            assert math.isclose(
                math.hypot(c1.cx, c1.cy), math.hypot(c2.cx, c2.cy), rel_tol=1e-9, abs_tol=1e-9
            )
        elif isinstance(c1, Line) and isinstance(c2, Line):
            assert math.isclose(abs(c1.offset), abs(c2.offset), abs_tol=1e-9)


def test_quadric_closure_across_operations():
    rng = np.random.default_rng(20)
    for _ in range(100):
        m = random_matrix(rng, "+")
        outs = [
            cycle_pair_of(m).cycle,
            cycle_pair_of(m, Model.UNIT_DISK).cycle,
            spear_of(m, ProjPoint(1.0, 2.0)),
            conjugate_figure(cycle_pair_of(m).cycle, Model.UNIT_DISK),
        ]
        n = random_matrix(rng, "-")
        outs.append(neg_det_figure(n).line)
        outs.append(neg_det_figure(n, Model.UNIT_DISK).line)
        for p in outs:
            assert abs(p.quadric_residual()) <= 1e-9

