import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pyWFT.errors import InvalidScene, NoClassApplicable, PatternMismatch, \
    PreconditionError
from pyWFT.experimental_design import InteriorDirections
from pyWFT.inverse import balance_weights, plasticity_line
from pyWFT.quadrilateral import AngularConfig
from pyWFT.symmetrization import CLASS_A, CLASS_B, DIRECT, \
    direct_parallelogram_check, figure_geometry, select_class, symmetrize, \
    tangent_image

EXAMPLE = np.radians([0, 120, 210, 260])
LENGTHS = [5, 7.5, 5, 10]
FIRST = [0.81, 0.712, 0.444, 0.4]
SECOND = [0.76, 0.76, 0.34, 0.5]


def _cfg(weights, directions=EXAMPLE):
    return AngularConfig(0, directions, LENGTHS, weights=weights)


def test_tangent_image():
    image = tangent_image(_cfg([1, 2, 3, 4]))
    np.testing.assert_almost_equal(np.linalg.norm(image.points, axis=1),
                                   [1, 2, 3, 4])
    np.testing.assert_almost_equal(image.points[1],
                                   2 * np.array([-0.5, np.sqrt(3) / 2]))
    with pytest.raises(InvalidScene):
        tangent_image(AngularConfig(0, EXAMPLE, LENGTHS))


def test_select_class():
    assert select_class(_cfg(FIRST)) == CLASS_B
    assert select_class(_cfg([0.3, 0.4, 0.1, 0.2])) == CLASS_A
    with pytest.raises(NoClassApplicable):
        select_class(_cfg(SECOND))
    cross = _cfg([0.3, 0.2, 0.3, 0.2], np.radians([0, 70, 180, 250]))
    assert select_class(cross) == DIRECT


def test_rounded_weights():
    for weights in [FIRST, SECOND]:
        for klass in [CLASS_A, CLASS_B]:
            report = symmetrize(_cfg(weights), klass=klass, tol=5e-3)
            assert report.klass == klass
            assert report.is_parallelogram
            assert report.residual < 5e-3
            # The rounded weights miss the default verdict tolerance
            assert not symmetrize(_cfg(weights), klass=klass).is_parallelogram

    report = symmetrize(_cfg(FIRST), tol=5e-3)
    assert report.klass == CLASS_B
    with pytest.raises(NoClassApplicable):
        symmetrize(_cfg(SECOND))


def test_balanced_weights():
    weights = balance_weights(EXAMPLE, 2.37, 0.4)
    for klass in ["A", "b", "auto"]:
        report = symmetrize(_cfg(weights), klass=klass)
        assert report.is_parallelogram
        assert report.residual < 1e-12
        assert np.max(report.opposite_side_mismatch) < 1e-12

    # Diagonal midpoints sit half the residual apart
    for weights in [FIRST, SECOND, [1, 2, 3, 4]]:
        for klass in [CLASS_A, CLASS_B]:
            report = symmetrize(_cfg(weights), klass=klass)
            np.testing.assert_allclose(report.diagonal_midpoint_gap,
                                       report.residual / 2, atol=1e-14)

    report = symmetrize(_cfg(weights), klass=CLASS_A)
    np.testing.assert_almost_equal(report.reflected_points[0],
                                   -report.images[0])
    np.testing.assert_almost_equal(report.reflected_points[1],
                                   report.images[1])
    d = report.to_dict()
    assert d["class"] == CLASS_A
    assert len(d["reflected_points"]) == 4

    with pytest.raises(PreconditionError):
        symmetrize(_cfg(weights), klass="C")
    with pytest.raises(PreconditionError):
        symmetrize(_cfg(weights), klass="A", tol=-1.0)


def test_direct():
    cfg = _cfg([0.3, 0.2, 0.3, 0.2], np.radians([0, 70, 180, 250]))
    report = direct_parallelogram_check(cfg)
    assert report.klass == DIRECT
    assert report.is_parallelogram
    np.testing.assert_equal(report.reflected_points, report.images)
    assert symmetrize(cfg, klass="direct").is_parallelogram
    assert symmetrize(cfg).klass == DIRECT

    with pytest.raises(PatternMismatch):
        direct_parallelogram_check(_cfg(FIRST))
    with pytest.raises(PatternMismatch):
        direct_parallelogram_check(
            _cfg([0.3, 0.2, 0.3, 0.25], np.radians([0, 70, 180, 250])))


def test_figure_geometry():
    report = symmetrize(_cfg(FIRST), klass=CLASS_A, tol=5e-3)
    geometry = figure_geometry(report)
    assert sorted(geometry) == ["arcs", "parallelogram", "tangent_images"]
    assert [label for label, _, _ in geometry["arcs"]] == \
        ["A", "B", "C", "D"]
    assert len(geometry["tangent_images"]) == 5
    label, points, closed = geometry["parallelogram"][0]
    assert label == "A'*B'C'*D'" and closed and len(points) == 4

    # Rays reach past the farthest image
    reach = np.linalg.norm(geometry["arcs"][0][1][1])
    assert reach > np.max(np.linalg.norm(report.images, axis=1))


def _balanced(seed, c=1.0):
    t = InteriorDirections(num_pts=1, random_state=seed).generate_points()[0]
    line = plasticity_line(t, c)
    weights = line.weights_at(line.positivity_interval.midpoint())
    return _cfg(weights, t)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 6), st.floats(0.1, 10.0))
def test_scaling(seed, scale):
    cfg = _balanced(seed)
    scaled = cfg.with_weights(scale * cfg.weights)
    for klass in [CLASS_A, CLASS_B]:
        report = symmetrize(cfg, klass=klass)
        report_s = symmetrize(scaled, klass=klass)
        assert report.is_parallelogram and report_s.is_parallelogram
        np.testing.assert_allclose(report_s.reflected_points,
                                   scale * report.reflected_points,
                                   rtol=1e-12, atol=1e-15 * scale)
        np.testing.assert_allclose(report_s.side_lengths,
                                   scale * report.side_lengths, rtol=1e-12)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_classes_are_point_reflections(seed):
    cfg = _balanced(seed)
    report_a = symmetrize(cfg, klass=CLASS_A)
    report_b = symmetrize(cfg, klass=CLASS_B)
    np.testing.assert_equal(report_a.reflected_points,
                            -report_b.reflected_points)
    np.testing.assert_allclose(report_a.side_lengths, report_b.side_lengths,
                               rtol=1e-14)
    assert report_a.is_parallelogram and report_b.is_parallelogram


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 6),
       st.lists(st.floats(0.1, 2.0), min_size=4, max_size=4))
def test_side_and_midpoint_formulas(seed, weights):
    t = InteriorDirections(num_pts=1, random_state=seed).generate_points()[0]
    cfg = _cfg(weights, t)
    w = cfg.weights
    gaps = cfg.gaps()
    for klass in [CLASS_A, CLASS_B]:
        report = symmetrize(cfg, klass=klass)
        # Sides through neighbouring images, one of them reflected
        expected = [w[i] ** 2 + w[(i + 1) % 4] ** 2 +
                    2 * w[i] * w[(i + 1) % 4] * np.cos(gaps[i])
                    for i in range(4)]
        np.testing.assert_allclose(report.side_lengths ** 2, expected,
                                   rtol=1e-12, atol=1e-14)

        a, b, c, d = report.images
        if klass == CLASS_A:
            mid_ac, mid_bd = -(a + c) / 2, (b + d) / 2
        else:
            mid_ac, mid_bd = (a + c) / 2, -(b + d) / 2
        fig = report.reflected_points
        np.testing.assert_allclose((fig[0] + fig[2]) / 2, mid_ac, atol=1e-15)
        np.testing.assert_allclose((fig[1] + fig[3]) / 2, mid_bd, atol=1e-15)
        total = a + b + c + d
        np.testing.assert_allclose(report.diagonal_midpoint_gap,
                                   np.hypot(*total) / 2, atol=1e-14)


if __name__ == '__main__':
    test_tangent_image()
    test_select_class()
    test_rounded_weights()
    test_balanced_weights()
    test_direct()
    test_figure_geometry()
    test_scaling()
    test_classes_are_point_reflections()
    test_side_and_midpoint_formulas()
