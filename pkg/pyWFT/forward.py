"""
.. module:: forward
   :synopsis: Weighted Fermat-Torricelli point of a quadrilateral on a K-plane

.. moduleauthor:: pyWFT developers

:Module: forward
:Author: pyWFT developers
"""

import logging

import numpy as np
import scipy.linalg as scplinalg

from pyWFT import kplane
from pyWFT.errors import InvalidScene, NoConvergence, PerimeterTooLarge, \
    PreconditionError
from pyWFT.quadrilateral import VertexConfig, extract_angular
from pyWFT.utils import VERTEX_NAMES, array_str, vertex_index

# Get module-level logger
logger = logging.getLogger(__name__)

INTERIOR = "Interior"
ABSORBED = "AbsorbedAtVertex"

VERTEX_GUARD = 1e-9


class FermatTorricelliProblem(object):
    """Weighted length sum f(P) = sum_R w_R d(P, R) of a quadrilateral.

    :param vc: Quadrilateral with weights
    :type vc: VertexConfig

    :ivar k: Curvature
    :ivar dim: Dimension of the search space (always 2)
    :ivar vertices: The vertices A, B, C, D
    :ivar weights: The weights w_A, w_B, w_C, w_D
    :ivar info: Short description
    """
    def __init__(self, vc):
        if not isinstance(vc, VertexConfig):
            raise PreconditionError("expected a VertexConfig")
        if vc.weights is None:
            raise InvalidScene("weights are required", field="weights")
        self.k = vc.k
        self.dim = 2
        self.vertices = vc.vertices
        self.weights = np.array(vc.weights)
        self.info = "Weighted Fermat-Torricelli problem on the {}-plane".format(
            self.k)

    def arcs(self, point):
        """Lengths and unit directions of the arcs from point to the vertices.

        :param point: Point on the K-plane
        :type point: numpy.array
        :return: Lengths (4,) and unit directions (4 x 2), zero for a
            vertex at the point
        :rtype: tuple of numpy.array
        """
        v = np.array([kplane.log_map(self.k, point, r)
                      for r in self.vertices])
        lengths = np.hypot(v[:, 0], v[:, 1])
        u = np.zeros_like(v)
        nz = lengths > 0
        u[nz] = v[nz] / lengths[nz, np.newaxis]
        return lengths, u

    def eval(self, point):
        """Evaluate f at a point

        :param point: Point on the K-plane
        :type point: numpy.array
        :return: Weighted length sum
        :rtype: float
        """
        return float(np.dot(self.weights, self.arcs(point)[0]))

    def descent(self, point):
        """Weighted sum of unit directions, the negative Riemannian gradient."""
        _, u = self.arcs(point)
        return self.weights @ u

    def hessian(self, point):
        """Riemannian Hessian of f at a point away from the vertices."""
        lengths, u = self.arcs(point)
        h = np.zeros((2, 2))
        for w, l, ur in zip(self.weights, lengths, u):
            h += w * kplane.conjugate_cotangent(self.k, l) * \
                (np.eye(2) - np.outer(ur, ur))
        return h


class FTResult(object):
    """Result of a forward solve.

    :ivar point: The weighted Fermat-Torricelli point
    :ivar objective: Weighted length sum at the point
    :ivar arc_lengths: Distances to A, B, C, D
    :ivar directions: Directions of the arcs, normalized with theta_A = 0
        (nan towards an absorbing vertex)
    :ivar residual: Norm of the weighted sum of unit directions
        (excess of the pull over the vertex weight when absorbed)
    :ivar status: INTERIOR or ABSORBED
    :ivar vertex: Absorbing vertex id or None
    :ivar iterations: Number of iterations
    :ivar objective_history: Objective of every accepted iterate
    """
    def __init__(self, point, objective, arc_lengths, directions, residual,
                 status, iterations, vertex=None, objective_history=None):
        self.point = point
        self.objective = objective
        self.arc_lengths = arc_lengths
        self.directions = directions
        self.residual = residual
        self.status = status
        self.vertex = vertex
        self.iterations = iterations
        self.objective_history = objective_history or []

    def to_dict(self):
        status = self.status
        if self.vertex is not None:
            status = "{}({})".format(self.status, self.vertex)
        return {"point": np.asarray(self.point).tolist(),
                "objective": self.objective,
                "arc_lengths": np.asarray(self.arc_lengths).tolist(),
                "directions_deg": np.degrees(self.directions).tolist(),
                "residual": self.residual,
                "status": status,
                "iterations": self.iterations}


def stationarity_residual(cfg, point=None):
    """Stationarity of the weighted arcs at the basepoint.

    :param cfg: Angular configuration with weights, or a quadrilateral
        together with ``point``
    :type cfg: AngularConfig or VertexConfig
    :param point: Point to evaluate at when cfg is a VertexConfig
    :type point: numpy.array
    :return: The four sums sum_Q w_Q cos(angle QPR), R = A..D, and the norm
        of sum_Q w_Q u_Q
    :rtype: tuple (numpy.array, float)
    """
    if isinstance(cfg, VertexConfig):
        if point is None:
            raise PreconditionError("a point is required with a "
                                    "VertexConfig")
        cfg = extract_angular(cfg, point)
    if cfg.weights is None:
        raise InvalidScene("weights are required", field="weights")
    u = cfg.unit_vectors()
    g = cfg.weights @ u
    return u @ g, float(np.hypot(g[0], g[1]))


def _pull_at_vertex(vc, index):
    r = vc.vertices[index]
    pull = np.zeros(2)
    for j, q in enumerate(vc.vertices):
        if j != index:
            length, theta = kplane.direction(vc.k, r, q)
            pull += vc.weights[j] * np.array([np.cos(theta), np.sin(theta)])
    return pull


def vertex_absorption_test(vc, vertex):
    """Whether the weighted point is the vertex itself.

    The vertex R absorbs the point when the pull of the other weighted
    vertices, || sum_{Q != R} w_Q u_Q(R) ||, does not exceed w_R.

    :param vc: Quadrilateral with weights
    :type vc: VertexConfig
    :param vertex: Vertex id
    :type vertex: string or int
    :rtype: bool
    """
    if vc.weights is None:
        raise InvalidScene("weights are required", field="weights")
    i = vertex_index(vertex)
    return bool(np.linalg.norm(_pull_at_vertex(vc, i)) <= vc.weights[i])


class WeiszfeldSolver(object):
    """Riemannian Weiszfeld iteration with step halving.

    Each iteration moves from P along g = sum_R w_R u_R with step
    1/sum_R (w_R/l_R), halving the step until the objective decreases.
    Once the residual |g| is small a Newton step with the exact Hessian
    of the distance sum is tried first; it passes the same test.

    :param tol: Tolerance on the residual |g|
    :type tol: float
    :param max_iter: Maximum number of iterations
    :type max_iter: int
    :param contraction_factor: Step reduction on a failed decrease test
    :type contraction_factor: float
    :param max_halvings: Maximum number of step reductions per iteration
    :type max_halvings: int
    :param newton_polish: Whether to try Newton steps near the solution
    :type newton_polish: bool
    :param polish_threshold: Relative residual (|g| / sum w) below which
        Newton steps are tried
    :type polish_threshold: float
    """
    def __init__(self, tol=1e-10, max_iter=10000, contraction_factor=0.5,
                 max_halvings=60, newton_polish=True, polish_threshold=1e-3):
        if not tol > 0:
            raise ValueError("tol must be positive")
        if not (isinstance(max_iter, (int, np.integer)) and max_iter > 0):
            raise ValueError("max_iter must be a positive integer")
        if not 0 < contraction_factor < 1:
            raise ValueError("contraction_factor must lie in (0, 1)")
        self.tol = tol
        self.max_iter = int(max_iter)
        self.contraction_factor = contraction_factor
        self.max_halvings = max_halvings
        self.newton_polish = newton_polish
        self.polish_threshold = polish_threshold

    def _initial_point(self, prob):
        w = prob.weights / np.sum(prob.weights)
        if kplane.is_flat(prob.k):
            return np.sum(w[:, np.newaxis] * np.array(prob.vertices), axis=0)
        a = prob.vertices[0]
        v = sum(wi * kplane.log_map(prob.k, a, r)
                for wi, r in zip(w, prob.vertices))
        return kplane.exp_map(prob.k, a, v)

    def _push_off(self, prob, vc, index):
        """Restart point next to a non-absorbing vertex, towards its pull."""
        pull = _pull_at_vertex(vc, index)
        others = [kplane.distance(prob.k, prob.vertices[index], q)
                  for j, q in enumerate(prob.vertices) if j != index]
        step = 1e-3 * min(others) * pull / np.linalg.norm(pull)
        return kplane.exp_map(prob.k, prob.vertices[index], step)

    def _clamp(self, k, step):
        limit = 0.5 * kplane.max_arc_length(k)
        n = np.hypot(step[0], step[1])
        if n > limit:
            step = step * (limit / n)
        return step

    def _line_search(self, prob, point, f, res, step):
        """Backtrack along step; return the accepted point or None.

        A trial is accepted when it lowers the objective, or when it ties
        the objective exactly and lowers the residual.
        """
        alpha = 1.0
        for halvings in range(self.max_halvings):
            trial = kplane.exp_map(prob.k, point, alpha * step)
            lengths, u = prob.arcs(trial)
            f_new = float(np.dot(prob.weights, lengths))
            if f_new < f:
                return trial, f_new, halvings
            if f_new == f:
                g = prob.weights @ u
                if np.hypot(g[0], g[1]) < res:
                    return trial, f_new, halvings
            alpha *= self.contraction_factor
        return None, f, self.max_halvings

    def _result(self, vc, prob, point, residual, iterations, history):
        lengths, _ = prob.arcs(point)
        directions = extract_angular(vc, point).directions
        return FTResult(point, float(np.dot(prob.weights, lengths)), lengths,
                        np.array(directions), residual, INTERIOR, iterations,
                        objective_history=history)

    def _absorbed(self, vc, prob):
        best, best_margin = None, None
        for i in range(4):
            margin = vc.weights[i] - np.linalg.norm(_pull_at_vertex(vc, i))
            if margin >= 0 and (best is None or margin > best_margin):
                best, best_margin = i, margin
        if best is None:
            return None
        point = np.array(prob.vertices[best])
        lengths = np.zeros(4)
        angles = np.full(4, np.nan)
        for j, q in enumerate(prob.vertices):
            if j != best:
                lengths[j], angles[j] = kplane.direction(prob.k, point, q)
        ref = angles[0] if best != 0 else angles[1]
        directions = np.mod(angles - ref, 2 * np.pi)
        f = float(np.dot(prob.weights, lengths))
        logger.info("Vertex {} absorbs the weighted point".format(
            VERTEX_NAMES[best]))
        return FTResult(point, f, lengths, directions, float(-best_margin),
                        ABSORBED, 0, vertex=VERTEX_NAMES[best],
                        objective_history=[f])

    def solve(self, vc):
        """Find the weighted Fermat-Torricelli point of a quadrilateral.

        :param vc: Quadrilateral with weights
        :type vc: VertexConfig
        :return: The solution
        :rtype: FTResult

        :raises InvalidScene: If the weights are missing
        :raises PerimeterTooLarge: If the perimeter bound fails on a sphere
        :raises NoConvergence: If max_iter is reached
        """
        prob = FermatTorricelliProblem(vc)
        ok, bound = vc.perimeter_bound_check()
        if not ok:
            raise PerimeterTooLarge("perimeter is not below 2*pi/sqrt(k) = "
                                    "{:.6g}".format(bound), bound=bound)

        absorbed = self._absorbed(vc, prob)
        if absorbed is not None:
            return absorbed

        wsum = np.sum(prob.weights)
        point = self._initial_point(prob)
        lengths, u = prob.arcs(point)
        f = float(np.dot(prob.weights, lengths))
        history = [f]
        res = np.inf
        it = 0
        for it in range(1, self.max_iter + 1):
            near = np.argmin(lengths)
            if lengths[near] < VERTEX_GUARD:
                logger.warning("Iterate reached vertex {}, restarting next "
                               "to it".format(VERTEX_NAMES[near]))
                point = self._push_off(prob, vc, near)
                lengths, u = prob.arcs(point)
                f = float(np.dot(prob.weights, lengths))
                history.append(f)
                continue

            g = prob.weights @ u
            res = float(np.hypot(g[0], g[1]))
            if res <= self.tol:
                result = self._result(vc, prob, point, res, it, history)
                logger.info("Weighted point {} with objective {:.10e} after "
                            "{} iterations".format(array_str(point),
                                                   result.objective, it))
                return result

            steps = []
            if self.newton_polish and res <= self.polish_threshold * wsum:
                try:
                    chol = scplinalg.cho_factor(prob.hessian(point))
                    steps.append(scplinalg.cho_solve(chol, g))
                except scplinalg.LinAlgError:
                    pass
            steps.append(g / np.sum(prob.weights / lengths))

            trial = None
            for step in steps:
                step = self._clamp(prob.k, step)
                trial, f_new, halvings = self._line_search(prob, point, f,
                                                           res, step)
                if trial is not None:
                    break
            if trial is None:
                logger.warning("Step halving exhausted at residual "
                               "{:.3e}".format(res))
                break

            logger.debug("Iteration {}: f = {:.15e}, residual = {:.3e}, "
                         "halvings = {}".format(it, f_new, res, halvings))
            point, f = trial, f_new
            lengths, u = prob.arcs(point)
            history.append(f)

        g = prob.weights @ u
        res = float(np.hypot(g[0], g[1]))
        best = self._result(vc, prob, point, res, it, history)
        raise NoConvergence("no convergence, residual {:.3e} above "
                            "{:.3e}".format(res, self.tol), result=best)


def solve_forward(vc, tol=1e-10, max_iter=10000):
    """Solve for the weighted Fermat-Torricelli point.

    :param vc: Quadrilateral with weights
    :type vc: VertexConfig
    :param tol: Tolerance on the residual
    :type tol: float
    :param max_iter: Maximum number of iterations
    :type max_iter: int
    :rtype: FTResult
    """
    return WeiszfeldSolver(tol=tol, max_iter=max_iter).solve(vc)
