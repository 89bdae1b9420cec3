import numpy as np
import pytest
from pyWFT import kplane
from pyWFT.errors import DegenerateArc, PreconditionError
from pyWFT.quadrilateral import INTERIOR, NOT_INTERIOR, ON_BOTH_DIAGONALS, \
    ON_DIAGONAL_BD, AngularConfig, VertexConfig, convexity_check, \
    extract_angular, realize_vertices, signed_angle
from pyWFT.utils import wrap_angle


def _cfg(degrees, k=0.0, lengths=(1, 1, 1, 1), **kwargs):
    return AngularConfig(k, np.radians(degrees), lengths, **kwargs)


def test_angular_config():
    cfg = _cfg([10, 130, 220, 270], weights=[1, 2, 3, 4])
    np.testing.assert_almost_equal(np.degrees(cfg.directions),
                                   [0, 120, 210, 260])
    np.testing.assert_almost_equal(np.degrees(cfg.orientation), 10)
    np.testing.assert_almost_equal(np.sum(cfg.gaps()), 2 * np.pi)
    np.testing.assert_almost_equal(np.degrees(cfg.gaps()),
                                   [120, 90, 50, 100])
    np.testing.assert_almost_equal(np.linalg.norm(cfg.unit_vectors(),
                                                  axis=1), np.ones(4))

    with pytest.raises(ValueError):  # Configurations are immutable
        cfg.directions[1] = 0.0

    cfg2 = cfg.with_weights([4, 3, 2, 1])
    np.testing.assert_equal(cfg2.weights, [4, 3, 2, 1])
    np.testing.assert_equal(cfg2.directions, cfg.directions)
    assert cfg2.orientation == cfg.orientation
    np.testing.assert_equal(cfg.with_lengths([2, 2, 2, 2]).lengths,
                            [2, 2, 2, 2])

    with pytest.raises(PreconditionError):
        _cfg([0, 90, 180], lengths=(1, 1, 1))
    with pytest.raises(PreconditionError):
        _cfg([0, 90, 180, 270], lengths=(1, 0, 1, 1))
    with pytest.raises(PreconditionError):
        _cfg([0, 90, 180, 270], weights=[1, -1, 1, 1])


def test_signed_angle():
    cfg = _cfg([0, 120, 210, 260])
    np.testing.assert_almost_equal(np.degrees(signed_angle(cfg, "A", "B")),
                                   120)
    np.testing.assert_almost_equal(np.degrees(signed_angle(cfg, "B", "A")),
                                   -120)
    np.testing.assert_almost_equal(np.degrees(cfg.signed_angle("A", "D")),
                                   -100)
    np.testing.assert_almost_equal(np.degrees(cfg.signed_angle(1, 3)), 140)
    assert signed_angle(cfg, "C", "C") == 0.0

    cross = _cfg([0, 90, 180, 270])
    assert signed_angle(cross, "A", "C") == np.pi


def test_convexity_check():
    assert convexity_check(_cfg([0, 120, 210, 260])) == INTERIOR
    assert convexity_check(_cfg([0, 90, 180, 270])) == ON_BOTH_DIAGONALS
    assert convexity_check(_cfg([0, 100, 190, 280])) == ON_DIAGONAL_BD
    assert convexity_check(_cfg([0, 90, 180, 200])) == INTERIOR
    assert convexity_check(_cfg([0, 30, 60, 90])) == NOT_INTERIOR
    assert convexity_check(_cfg([0, 180, 200, 300])) == NOT_INTERIOR
    assert convexity_check(_cfg([0, 0, 100, 200])) == NOT_INTERIOR
    # Boundary band
    assert convexity_check(_cfg([0, 100, 190, 280 + 1e-6])) == INTERIOR
    assert convexity_check(_cfg([0, 100, 190, 280 + 1e-6]),
                           tol=1e-6) == ON_DIAGONAL_BD


def test_realize_extract_round_trip():
    rng = np.random.RandomState(0)
    for k in [-1.0, 0.0, 1.0]:
        done = 0
        while done < 200:
            base = kplane.exp_map(k, kplane.origin(k),
                                  rng.uniform(-0.8, 0.8, 2))
            gaps = rng.uniform(0.3, 2.5, 4)
            gaps *= 2 * np.pi / np.sum(gaps)
            if np.any(gaps >= np.pi):
                continue
            done += 1
            t = np.concatenate(([0.0], np.cumsum(gaps[:3])))
            cfg = AngularConfig(k, t + rng.uniform(0, 2 * np.pi),
                                rng.uniform(0.2, 0.7, 4),
                                weights=[1, 2, 3, 4], basepoint=base)
            vc = realize_vertices(cfg)
            for i in range(4):
                np.testing.assert_allclose(
                    kplane.distance(k, base, vc.vertices[i]),
                    cfg.lengths[i], atol=1e-10)

            back = extract_angular(vc, base)
            np.testing.assert_allclose(back.lengths, cfg.lengths, atol=1e-10)
            np.testing.assert_allclose(
                wrap_angle(back.directions - cfg.directions), 0, atol=1e-9)
            assert abs(wrap_angle(back.orientation - cfg.orientation)) < 1e-9
            np.testing.assert_equal(back.weights, cfg.weights)
            assert convexity_check(back) == convexity_check(cfg)


def test_vertex_config():
    vc = VertexConfig(0, [[1, 1], [-1, 1], [-1, -1], [1, -1]],
                      weights=[1, 1, 1, 1])
    np.testing.assert_almost_equal(vc.perimeter(), 8)
    assert vc.perimeter_bound_check() == (True, np.inf)
    np.testing.assert_equal(vc.vertex("C"), [-1, -1])
    assert vc.with_weights([1, 2, 3, 4]).weights[3] == 4

    with pytest.raises(DegenerateArc):
        VertexConfig(0, [[1, 1], [1, 1], [-1, -1], [1, -1]])
    with pytest.raises(PreconditionError):
        VertexConfig(0, [[1, 1], [-1, 1], [-1, -1]])
    with pytest.raises(PreconditionError):
        VertexConfig(1, [[1, 1, 0], [-1, 1, 0], [-1, -1, 0], [1, -1, 0]])

    with pytest.raises(DegenerateArc):
        extract_angular(vc, [1, 1])


def test_perimeter_bound_check():
    ok, bound = _cfg([0, 90, 180, 270], k=1,
                     lengths=[1.2, 1.0, 0.9, 1.1]).perimeter_bound_check()
    assert not ok
    np.testing.assert_almost_equal(bound, 2 * np.pi)

    ok, bound = _cfg([0, 90, 180, 270], k=4,
                     lengths=[0.3, 0.3, 0.3, 0.3]).perimeter_bound_check()
    assert ok
    np.testing.assert_almost_equal(bound, np.pi)

    assert _cfg([0, 90, 180, 270], k=-1,
                lengths=[9, 9, 9, 9]).perimeter_bound_check() == \
        (True, np.inf)

    vc = realize_vertices(_cfg([0, 90, 180, 270], k=1,
                               lengths=[0.5, 0.5, 0.5, 0.5]))
    ok, bound = vc.perimeter_bound_check()
    assert ok and vc.perimeter() < bound


if __name__ == '__main__':
    test_angular_config()
    test_signed_angle()
    test_convexity_check()
    test_realize_extract_round_trip()
    test_vertex_config()
    test_perimeter_bound_check()
