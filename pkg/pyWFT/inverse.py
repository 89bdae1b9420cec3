"""
.. module:: inverse
   :synopsis: Inverse weighted Fermat-Torricelli problem for quadrilaterals

.. moduleauthor:: pyWFT developers

:Module: inverse
:Author: pyWFT developers

Given the directions of the four arcs at a point P inside a convex
quadrilateral, the positive weights that make P the weighted
Fermat-Torricelli point form a one-parameter family

    w_R = a_R * w_D + b_R,    R = A, B, C,

on the budget w_A + w_B + w_C + w_D = c. Only the directions matter, so
every function accepts either an AngularConfig or an array of the four
directions (radians, counterclockwise from A).
"""

import logging

import numpy as np
import scipy.linalg as scplinalg

from pyWFT.errors import DegenerateTriangle, NotOnDiagonal, \
    PreconditionError, SingularSystem
from pyWFT.quadrilateral import AngularConfig, ON_BOTH_DIAGONALS, \
    ON_DIAGONAL_BD, NOT_INTERIOR, convexity_check
from pyWFT.utils import array_str, normalize_angle

# Get module-level logger
logger = logging.getLogger(__name__)

SINGULAR_TOL = 1e-12
AGREEMENT_TOL = 1e-10


def _as_config(cfg):
    if isinstance(cfg, AngularConfig):
        return cfg
    return AngularConfig(0.0, cfg, np.ones(4))


def _interior_directions(cfg):
    cfg = _as_config(cfg)
    status = convexity_check(cfg)
    if status == NOT_INTERIOR:
        raise PreconditionError("the point is not interior to the "
                                "quadrilateral (gaps {} deg)".format(
                                    array_str(np.degrees(cfg.gaps()))))
    return cfg.directions, status


def _check_budget(c):
    if not np.isfinite(c) or c <= 0:
        raise PreconditionError("the weight budget must be positive")
    return float(c)


def _sines(t):
    """Matrix s[X, Y] = sin(theta_Y - theta_X) of oriented angle sines."""
    return np.sin(t[np.newaxis, :] - t[:, np.newaxis])


class OpenInterval(object):
    """Open interval (lower, upper), empty when lower >= upper.

    :ivar lower: Lower end
    :ivar upper: Upper end (may be inf)
    """
    def __init__(self, lower, upper):
        self.lower = float(lower)
        self.upper = float(upper)

    @property
    def empty(self):
        return not self.lower < self.upper

    def contains(self, x):
        return self.lower < x < self.upper

    def midpoint(self):
        if self.empty or not np.isfinite(self.upper):
            return None
        return 0.5 * (self.lower + self.upper)

    def to_dict(self):
        return {"lower": self.lower,
                "upper": self.upper if np.isfinite(self.upper) else None,
                "empty": self.empty}

    def __repr__(self):
        return "OpenInterval({}, {})".format(self.lower, self.upper)


class PlasticityLine(object):
    """Weights w_R = a_R * w_D + b_R (R = A, B, C) balancing at P.

    :param a: Slopes a_A, a_B, a_C
    :type a: numpy.array
    :param b: Intercepts b_A, b_B, b_C
    :type b: numpy.array
    :param budget: Total weight c
    :type budget: float

    :ivar a: Slopes a_A, a_B, a_C
    :ivar b: Intercepts b_A, b_B, b_C
    :ivar budget: Total weight c
    :ivar positivity_interval: Values of w_D where all weights are positive
    """
    def __init__(self, a, b, budget):
        self.a = np.array(a, dtype=float)
        self.b = np.array(b, dtype=float)
        self.budget = float(budget)
        self.positivity_interval = positivity_interval(self)

    def evaluate(self, w_d):
        """Weights (w_A, w_B, w_C) at the given w_D."""
        return self.a * w_d + self.b

    def weights_at(self, w_d):
        """All four weights (w_A, w_B, w_C, w_D) at the given w_D."""
        return np.append(self.evaluate(w_d), w_d)

    def to_dict(self):
        return {"a": self.a.tolist(), "b": self.b.tolist(),
                "budget": self.budget,
                "positivity_interval": self.positivity_interval.to_dict()}

    def __repr__(self):
        return "PlasticityLine(a={}, b={}, c={})".format(
            array_str(self.a), array_str(self.b), self.budget)


class DiagonalLine(object):
    """Weights of a quadrilateral whose point P lies on the diagonal BD.

    In the working orientation (P between B and the diagonal crossing)
    w_C = x_C * w_D + y_C, w_B = x_B * w_D + y_B and w_A = -rho * w_C.
    When the caller's P is closer to D the quadrilateral is mirrored and
    B and D trade places; ``relabeled`` is then True, the free weight is
    the caller's w_B and :meth:`evaluate` maps back to the caller's labels.

    :ivar x_C: Slope of w_C
    :ivar y_C: Intercept of w_C
    :ivar x_B: Slope of w_B
    :ivar y_B: Intercept of w_B
    :ivar determinant: Determinant of the reduced 2 x 2 system
    :ivar rho: Ratio with w_A = -rho * w_C
    :ivar budget: Total weight c
    :ivar relabeled: Whether B and D were exchanged
    :ivar free_vertex: Vertex whose weight parametrizes the line
    """
    def __init__(self, x_C, y_C, x_B, y_B, determinant, rho, budget,
                 relabeled=False):
        self.x_C = float(x_C)
        self.y_C = float(y_C)
        self.x_B = float(x_B)
        self.y_B = float(y_B)
        self.determinant = float(determinant)
        self.rho = float(rho)
        self.budget = float(budget)
        self.relabeled = relabeled
        self.free_vertex = "B" if relabeled else "D"

    def evaluate(self, w_free):
        """Weights (w_A, w_B, w_C, w_D) in the caller's labels.

        :param w_free: Weight of ``free_vertex``
        :type w_free: float
        :rtype: numpy.array
        """
        w_c = self.x_C * w_free + self.y_C
        w_other = self.x_B * w_free + self.y_B
        w_a = -self.rho * w_c
        if self.relabeled:
            return np.array([w_a, w_free, w_c, w_other])
        return np.array([w_a, w_other, w_c, w_free])

    def to_dict(self):
        return {"x_C": self.x_C, "y_C": self.y_C, "x_B": self.x_B,
                "y_B": self.y_B, "determinant": self.determinant,
                "rho": self.rho, "budget": self.budget,
                "relabeled": self.relabeled, "free_vertex": self.free_vertex}


def _balance_matrix(t):
    m = np.vstack((np.cos(t[:3]), np.sin(t[:3]), np.ones(3)))
    scale = np.linalg.norm(m, axis=1)
    if abs(np.linalg.det(m / scale[:, np.newaxis])) < SINGULAR_TOL:
        raise SingularSystem("directions of A, B, C do not span the plane "
                             "with a unique balance")
    return m


def balance_weights(cfg, c, w_d):
    """Weights balancing the four unit directions for a given w_D.

    Solves the 3 x 3 system made of the two components of
    sum_R w_R u_R = 0 and the budget sum_R w_R = c. The result may
    contain non-positive weights when w_D is outside the positivity
    interval.

    :param cfg: Angular configuration or the four directions
    :type cfg: AngularConfig or numpy.array
    :param c: Weight budget
    :type c: float
    :param w_d: Weight of D
    :type w_d: float
    :return: Weights (w_A, w_B, w_C, w_D)
    :rtype: numpy.array

    :raises SingularSystem: If the system is rank deficient
    """
    t, _ = _interior_directions(cfg)
    c = _check_budget(c)
    if w_d < 0:
        raise PreconditionError("w_D must be non-negative")
    m = _balance_matrix(t)
    rhs = np.array([-w_d * np.cos(t[3]), -w_d * np.sin(t[3]), c - w_d])
    return np.append(scplinalg.solve(m, rhs), w_d)


def plasticity_line(cfg, c):
    """Plasticity line by direct linear algebra.

    :param cfg: Angular configuration or the four directions
    :type cfg: AngularConfig or numpy.array
    :param c: Weight budget
    :type c: float
    :return: The plasticity line
    :rtype: PlasticityLine

    :raises SingularSystem: If the balance system is rank deficient
    """
    t, _ = _interior_directions(cfg)
    c = _check_budget(c)
    lu = scplinalg.lu_factor(_balance_matrix(t))
    b = scplinalg.lu_solve(lu, np.array([0.0, 0.0, c]))
    a = scplinalg.lu_solve(lu, np.array([-np.cos(t[3]), -np.sin(t[3]),
                                         -1.0]))
    line = PlasticityLine(a, b, c)
    logger.info("Plasticity line: a = {}, b = {}, w_D in {}".format(
        array_str(a), array_str(b), line.positivity_interval))
    return line


def _ratios(s, i, j, l):
    """Ratios (w_j/w_i, w_l/w_i) of the triangle (i, j, l) at P."""
    if abs(s[l, j]) < SINGULAR_TOL or abs(s[j, l]) < SINGULAR_TOL:
        raise SingularSystem("arcs to vertices {} and {} are "
                             "collinear".format(j, l))
    return -s[l, i] / s[l, j], -s[j, i] / s[j, l]


def plasticity_line_closed_form(cfg, c):
    """Plasticity line assembled from the sub-triangle ratios.

    With s_XY = sin(angle XPY) (oriented), the triangle ABC gives the
    ratios r_B = (w_B/w_A)_ABC = -s_CA/s_CB and r_C = (w_C/w_A)_ABC =
    -s_BA/s_BC, and the products of these with the ACD and ABD ratios
    reduce to s_CD/s_CB and s_BD/s_BC. Then

        a_A = (s_CD/s_CB + s_BD/s_BC - 1) / (1 + r_B + r_C)
        b_A = c / (1 + r_B + r_C)
        a_B = r_B a_A - s_CD/s_CB,   b_B = r_B b_A
        a_C = r_C a_A - s_BD/s_BC,   b_C = r_C b_A

    :param cfg: Angular configuration or the four directions
    :type cfg: AngularConfig or numpy.array
    :param c: Weight budget
    :type c: float
    :return: The plasticity line
    :rtype: PlasticityLine

    :raises SingularSystem: If a sine denominator vanishes
    """
    t, _ = _interior_directions(cfg)
    c = _check_budget(c)
    s = _sines(t)
    A, B, C, D = range(4)
    r_b, r_c = _ratios(s, A, B, C)
    den = 1.0 + r_b + r_c
    if abs(den) < SINGULAR_TOL:
        raise SingularSystem("triangle ratios do not normalize")
    p_c = s[C, D] / s[C, B]
    p_b = s[B, D] / s[B, C]

    a_a = (p_c + p_b - 1.0) / den
    b_a = c / den
    a = np.array([a_a, r_b * a_a - p_c, r_c * a_a - p_b])
    b = np.array([b_a, r_b * b_a, r_c * b_a])
    return PlasticityLine(a, b, c)


def _triangle_weights(t3, c):
    s = _sines(np.asarray(t3, dtype=float))
    r1, r2 = _ratios(s, 0, 1, 2)
    den = 1.0 + r1 + r2
    if abs(den) < SINGULAR_TOL:
        raise SingularSystem("triangle ratios do not normalize")
    return c * np.array([1.0, r1, r2]) / den


def _check_triangle(t3):
    t3 = np.asarray(t3, dtype=float)
    if t3.shape != (3,) or not np.all(np.isfinite(t3)):
        raise DegenerateTriangle("a triangle needs 3 finite directions")
    d = normalize_angle(t3 - t3[0])
    gaps = np.array([d[1], d[2] - d[1], 2 * np.pi - d[2]])
    if np.any(gaps <= SINGULAR_TOL) or np.any(gaps >= np.pi - SINGULAR_TOL):
        raise DegenerateTriangle("the point is not interior to the "
                                 "triangle (gaps {} deg)".format(
                                     array_str(np.degrees(gaps))))
    return d


def triangle_inverse_ratios(directions):
    """Weight ratios solving the 3-inverse problem at P.

    :param directions: Directions of the arcs to the three vertices,
        counterclockwise
    :type directions: numpy.array
    :return: (w_2/w_1, w_3/w_1), both positive
    :rtype: tuple

    :raises DegenerateTriangle: If P is not strictly inside the triangle
    """
    d = _check_triangle(directions)
    try:
        return _ratios(_sines(d), 0, 1, 2)
    except SingularSystem as e:
        raise DegenerateTriangle(str(e))


def triangle_weights(directions, c=1.0):
    """Weights with sum c making P the Fermat-Torricelli point of a triangle.

    :param directions: Directions of the arcs to the three vertices
    :type directions: numpy.array
    :param c: Weight budget
    :type c: float
    :return: The three weights
    :rtype: numpy.array

    :raises DegenerateTriangle: If P is not strictly inside the triangle
    """
    d = _check_triangle(directions)
    return _triangle_weights(d, _check_budget(c))


def plasticity_line_from_triangles(cfg, c):
    """Plasticity line from the sub-triangle problems ABC and BCD.

    The normalized balancing weights alpha of ABC and beta of BCD both
    lie in the kernel of the direction matrix, hence

        a_R = (beta_R - alpha_R) / beta_D,   b_R = c * alpha_R,

    in particular a_A = -(w_A)_ABC / (w_D)_BCD. The sub-triangle weights
    may be negative when P lies outside that triangle.

    :param cfg: Angular configuration or the four directions
    :type cfg: AngularConfig or numpy.array
    :param c: Weight budget
    :type c: float
    :rtype: PlasticityLine
    """
    t, _ = _interior_directions(cfg)
    c = _check_budget(c)
    alpha = np.append(_triangle_weights(t[[0, 1, 2]], 1.0), 0.0)
    beta = np.insert(_triangle_weights(t[[1, 2, 3]], 1.0), 0, 0.0)
    if abs(beta[3]) < SINGULAR_TOL:
        raise SingularSystem("triangle BCD carries no weight at D")
    a = (beta[:3] - alpha[:3]) / beta[3]
    return PlasticityLine(a, c * alpha[:3], c)


def line_discrepancy(cfg, c):
    """Largest coefficient difference between the linear-solve and
    closed-form lines. Logged as a warning when above 1e-10."""
    ref = plasticity_line(cfg, c)
    closed = plasticity_line_closed_form(cfg, c)
    gap = float(max(np.max(np.abs(ref.a - closed.a)),
                    np.max(np.abs(ref.b - closed.b))))
    if gap > AGREEMENT_TOL * max(1.0, c):
        logger.warning("Closed form disagrees with the linear solve by "
                       "{:.3e}".format(gap))
    return gap


def sign_report(line):
    """Check the plasticity principle on a line.

    Increasing w_D must decrease the neighbouring weights w_A and w_C and
    increase the opposite weight w_B.

    :param line: A plasticity line
    :type line: PlasticityLine
    :return: Dictionary with ``principle_holds`` and the signed slopes
    :rtype: dict
    """
    a_a, a_b, a_c = line.a
    return {"principle_holds": bool(a_a < 0 and a_c < 0 and a_b > 0),
            "neighbors_decrease": bool(a_a < 0 and a_c < 0),
            "opposite_increases": bool(a_b > 0),
            "a_A": float(a_a), "a_B": float(a_b), "a_C": float(a_c)}


def positivity_interval(line):
    """Values of w_D > 0 for which a_R * w_D + b_R > 0 for R = A, B, C.

    :param line: A plasticity line
    :type line: PlasticityLine
    :rtype: OpenInterval
    """
    lower, upper = 0.0, np.inf
    for a, b in zip(line.a, line.b):
        if a > 0:
            lower = max(lower, -b / a)
        elif a < 0:
            upper = min(upper, -b / a)
        elif b <= 0:
            return OpenInterval(0.0, 0.0)
    return OpenInterval(lower, upper)


def diagonal_case(cfg, c):
    """Weights when P lies on the diagonal BD.

    The sine equation at B loses its D term, which ties w_A to w_C; the
    remaining equation at C and the budget leave a 2 x 2 system with
    determinant Det = (1 - rho) s_CB + rho s_CA, rho = s_BC/s_BA.

    :param cfg: Angular configuration or the four directions
    :type cfg: AngularConfig or numpy.array
    :param c: Weight budget
    :type c: float
    :rtype: DiagonalLine

    :raises NotOnDiagonal: If P is not on the diagonal BD
    """
    cfg = _as_config(cfg)
    c = _check_budget(c)
    status = convexity_check(cfg)
    if status not in (ON_DIAGONAL_BD, ON_BOTH_DIAGONALS):
        raise NotOnDiagonal("the point is not on the diagonal BD "
                            "({})".format(status))
    t = cfg.directions
    relabeled = False
    if status == ON_DIAGONAL_BD and t[2] < np.pi:
        # Mirror so that P lies between B and the diagonal crossing
        t = normalize_angle(-t[[0, 3, 2, 1]])
        relabeled = True
        logger.warning("Point closer to D than the diagonal crossing, "
                       "B and D exchanged")

    s = _sines(t)
    A, B, C, D = range(4)
    rho = s[B, C] / s[B, A]
    det = (1.0 - rho) * s[C, B] + s[C, A] * rho
    if status == ON_BOTH_DIAGONALS:
        line = DiagonalLine(-1.0, 0.5 * c, 1.0, 0.0, det, -1.0, c)
    else:
        line = DiagonalLine(
            (s[C, D] - s[C, B]) / det, c * s[C, B] / det,
            (-s[C, D] * (1.0 - rho) - s[C, A] * rho) / det,
            c * s[C, A] * rho / det, det, rho, c, relabeled=relabeled)
    logger.info("Diagonal line: x_C = {:.6g}, x_B = {:.6g}, Det = "
                "{:.6g}".format(line.x_C, line.x_B, line.determinant))
    return line
