import numpy as np
import pytest
import scipy.optimize as scpopt
from pyWFT import kplane
from pyWFT.errors import InvalidScene, NoConvergence, PerimeterTooLarge
from pyWFT.experimental_design import ArcLengths, InteriorDirections
from pyWFT.forward import ABSORBED, INTERIOR, FermatTorricelliProblem, \
    WeiszfeldSolver, solve_forward, stationarity_residual, \
    vertex_absorption_test
from pyWFT.inverse import balance_weights, plasticity_line
from pyWFT.quadrilateral import AngularConfig, VertexConfig, \
    realize_vertices

SQUARE = [[1, 1], [-1, 1], [-1, -1], [1, -1]]


def test_problem():
    prob = FermatTorricelliProblem(VertexConfig(0, SQUARE, [1, 1, 1, 1]))
    assert prob.dim == 2
    np.testing.assert_almost_equal(prob.eval(np.zeros(2)), 4 * np.sqrt(2))
    np.testing.assert_almost_equal(prob.descent(np.zeros(2)), [0, 0])
    h = prob.hessian(np.array([0.1, -0.2]))
    np.testing.assert_almost_equal(h, h.T)
    assert np.all(np.linalg.eigvalsh(h) > 0)

    with pytest.raises(InvalidScene):
        FermatTorricelliProblem(VertexConfig(0, SQUARE))


def test_square():
    result = solve_forward(VertexConfig(0, SQUARE, [1, 1, 1, 1]))
    assert result.status == INTERIOR
    assert result.vertex is None
    np.testing.assert_allclose(result.point, [0, 0], atol=1e-10)
    np.testing.assert_almost_equal(result.objective, 4 * np.sqrt(2))
    np.testing.assert_almost_equal(np.degrees(result.directions),
                                   [0, 90, 180, 270])
    assert result.residual <= 1e-10

    d = result.to_dict()
    assert d["status"] == INTERIOR
    assert len(d["arc_lengths"]) == 4


def test_absorbed():
    vc = VertexConfig(0, SQUARE, [10, 1, 1, 1])
    assert vertex_absorption_test(vc, "A")
    assert not vertex_absorption_test(vc, "B")
    result = solve_forward(vc)
    assert result.status == ABSORBED
    assert result.vertex == "A"
    np.testing.assert_equal(result.point, [1, 1])
    assert result.iterations == 0
    assert result.arc_lengths[0] == 0.0
    # Pull of B, C, D at A is 2 + sqrt(2)
    np.testing.assert_allclose(result.residual, 2 + np.sqrt(2) - 10)
    assert result.residual <= 0
    assert result.to_dict()["status"] == "AbsorbedAtVertex(A)"


def test_rounded_weights():
    directions = np.radians([0, 120, 210, 260])
    cfg = AngularConfig(0, directions, [5, 7.5, 5, 10],
                        weights=[0.81, 0.712, 0.444, 0.4])
    sums, residual = stationarity_residual(cfg)
    assert sums.shape == (4,)
    np.testing.assert_allclose(residual, 6.9e-4, atol=1e-4)

    result = solve_forward(realize_vertices(cfg))
    assert result.status == INTERIOR
    assert np.linalg.norm(result.point) < 0.02
    assert result.residual <= 1e-10
    history = np.array(result.objective_history)
    assert np.all(np.diff(history) <= 0)


def test_stationarity_residual():
    cfg = AngularConfig(0, np.radians([0, 120, 210, 260]), [1, 1, 1, 1])
    weights = balance_weights(cfg, 2.37, 0.4)
    sums, residual = stationarity_residual(cfg.with_weights(weights))
    assert residual < 1e-12
    np.testing.assert_allclose(sums, 0, atol=1e-12)

    vc = realize_vertices(cfg.with_weights(weights))
    _, residual = stationarity_residual(vc, np.zeros(2))
    assert residual < 1e-12

    # Residual is linear in the weights
    bumped = weights + np.array([0, 0.1, 0, 0])
    _, residual = stationarity_residual(cfg.with_weights(bumped))
    np.testing.assert_allclose(residual, 0.1, atol=1e-12)

    with pytest.raises(InvalidScene):
        stationarity_residual(cfg)


def test_no_convergence():
    cfg = AngularConfig(0, np.radians([0, 120, 210, 260]), [5, 7.5, 5, 10],
                        weights=[0.81, 0.712, 0.444, 0.4])
    with pytest.raises(NoConvergence) as e:
        WeiszfeldSolver(max_iter=1).solve(realize_vertices(cfg))
    assert e.value.result is not None
    assert e.value.result.iterations == 1
    assert e.value.result.residual > 1e-10


def test_perimeter_too_large():
    lat = np.radians(30)
    points = [[np.cos(lat) * np.cos(lon), np.cos(lat) * np.sin(lon),
               s * np.sin(lat)]
              for lon, s in zip(np.radians([0, 90, 180, 270]),
                                [1, -1, 1, -1])]
    vc = VertexConfig(1, points, [1, 1, 1, 1])
    assert not vc.perimeter_bound_check()[0]
    with pytest.raises(PerimeterTooLarge):
        solve_forward(vc)


def test_solver_options():
    with pytest.raises(ValueError):
        WeiszfeldSolver(tol=0)
    with pytest.raises(ValueError):
        WeiszfeldSolver(max_iter=0)
    with pytest.raises(ValueError):
        WeiszfeldSolver(contraction_factor=1.5)

    # Plain Weiszfeld steps reach the same point as the polished solver
    cfg = AngularConfig(-1, np.radians([0, 100, 200, 290]),
                        [0.6, 0.8, 0.7, 0.9], weights=[1, 1, 1, 1])
    vc = realize_vertices(cfg)
    r1 = WeiszfeldSolver(tol=1e-9, newton_polish=False).solve(vc)
    r2 = WeiszfeldSolver(tol=1e-9).solve(vc)
    assert kplane.distance(-1, r1.point, r2.point) < 1e-7
    assert r2.iterations <= r1.iterations


def test_round_trip():
    directions = InteriorDirections(num_pts=200,
                                    random_state=0).generate_points()
    solver = WeiszfeldSolver(tol=1e-11)
    for k, low, high, atol in [(0.0, 0.5, 2.0, 1e-6),
                               (1.0, 0.2, 0.6, 1e-5),
                               (-1.0, 0.2, 0.6, 1e-5)]:
        lengths = ArcLengths(num_pts=200, low=low, high=high,
                             random_state=1).generate_points()
        for t, l in zip(directions, lengths):
            line = plasticity_line(t, 1.0)
            weights = balance_weights(t, 1.0,
                                      line.positivity_interval.midpoint())
            cfg = AngularConfig(k, t, l, weights=weights)
            result = solver.solve(realize_vertices(cfg))
            assert result.status == INTERIOR
            assert kplane.distance(k, result.point, cfg.basepoint) < atol


def _brute_force_point(vertices, weights):
    """Grid search over the bounding box, then Nelder-Mead refinement."""
    vertices = np.asarray(vertices)

    def f(x):
        return np.dot(weights, np.linalg.norm(vertices - x, axis=1))

    lo, hi = vertices.min(axis=0), vertices.max(axis=0)
    gx, gy = np.meshgrid(np.linspace(lo[0], hi[0], 201),
                         np.linspace(lo[1], hi[1], 201))
    grid = np.column_stack((gx.ravel(), gy.ravel()))
    values = np.sum(weights * np.linalg.norm(
        grid[:, np.newaxis, :] - vertices[np.newaxis, :, :], axis=2), axis=1)
    x0 = grid[np.argmin(values)]
    res = scpopt.minimize(f, x0, method="Nelder-Mead",
                          options={"xatol": 1e-10, "fatol": 1e-13,
                                   "maxiter": 10000})
    return res.x, res.fun


def test_brute_force_agreement():
    directions = InteriorDirections(num_pts=50,
                                    random_state=4).generate_points()
    lengths = ArcLengths(num_pts=50, low=0.5, high=2.0,
                         random_state=5).generate_points()
    rng = np.random.RandomState(6)
    for t, l in zip(directions, lengths):
        weights = rng.uniform(0.5, 1.5, 4)
        vc = realize_vertices(AngularConfig(0, t, l, weights=weights))
        result = solve_forward(vc)
        x, fx = _brute_force_point(vc.vertices, weights)
        assert np.linalg.norm(result.point - x) < 1e-4
        assert result.objective <= fx + 1e-9


def test_radial_vertex_moves():
    directions = InteriorDirections(num_pts=20,
                                    random_state=7).generate_points()
    solver = WeiszfeldSolver(tol=1e-11)
    for k, low, high in [(0.0, 0.5, 2.0), (1.0, 0.2, 0.6),
                         (-1.0, 0.2, 0.6)]:
        lengths = ArcLengths(num_pts=20, low=low, high=high,
                             random_state=8).generate_points()
        for t, l in zip(directions, lengths):
            line = plasticity_line(t, 1.0)
            weights = balance_weights(t, 1.0,
                                      line.positivity_interval.midpoint())
            cfg = AngularConfig(k, t, l, weights=weights)
            for i in range(4):
                moved = np.array(l)
                moved[i] *= 0.3
                result = solver.solve(realize_vertices(
                    cfg.with_lengths(moved)))
                assert result.status == INTERIOR
                assert kplane.distance(k, result.point,
                                       cfg.basepoint) < 1e-6


if __name__ == '__main__':
    test_problem()
    test_square()
    test_absorbed()
    test_rounded_weights()
    test_stationarity_residual()
    test_no_convergence()
    test_perimeter_too_large()
    test_solver_options()
    test_round_trip()
    test_brute_force_agreement()
    test_radial_vertex_moves()
