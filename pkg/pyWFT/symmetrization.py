"""
.. module:: symmetrization
   :synopsis: Tangent-plane parallelograms of a weighted quadrilateral

.. moduleauthor:: pyWFT developers

:Module: symmetrization
:Author: pyWFT developers

The weighted quadrilateral is pulled back to the tangent plane at P by
putting each vertex R' at distance w_R in the direction of the arc P->R.
Reflecting one opposite pair through P turns A'B'C'D' into a
parallelogram exactly when the weights balance at P.
"""

import logging

import numpy as np

from pyWFT.errors import InvalidScene, NoClassApplicable, PatternMismatch, \
    PreconditionError
from pyWFT.quadrilateral import ON_BOTH_DIAGONALS, convexity_check
from pyWFT.utils import array_str

# Get module-level logger
logger = logging.getLogger(__name__)

CLASS_A = "A"
CLASS_B = "B"
DIRECT = "Direct"

PATTERN_TOL = 1e-10
PARALLELOGRAM_TOL = 1e-9


class TangentImage(object):
    """Points R' = w_R (cos theta_R, sin theta_R) in the tangent plane at P.

    :param cfg: Angular configuration with weights
    :type cfg: AngularConfig

    :ivar points: The points A', B', C', D' as a 4 x 2 array
    :ivar source: The angular configuration
    """
    def __init__(self, cfg):
        if cfg.weights is None:
            raise InvalidScene("weights are required", field="weights")
        self.source = cfg
        self.points = cfg.weights[:, np.newaxis] * cfg.unit_vectors()


def tangent_image(cfg):
    return TangentImage(cfg)


class ParallelogramReport(object):
    """Diagnostics of the figure obtained from the tangent images.

    :ivar klass: CLASS_A, CLASS_B or DIRECT
    :ivar images: The tangent images A', B', C', D'
    :ivar reflected_points: Corners of the figure, in order
    :ivar side_lengths: Lengths of the four sides of the figure
    :ivar opposite_side_mismatch: Differences of the opposite side lengths
    :ivar diagonal_midpoint_gap: Distance between the diagonal midpoints
    :ivar residual: Norm of the sum of the tangent images
    :ivar tolerance: Tolerance used for the verdict
    :ivar is_parallelogram: Verdict
    """
    def __init__(self, klass, images, figure, residual, tol):
        self.klass = klass
        self.images = images
        self.reflected_points = figure
        nxt = np.roll(figure, -1, axis=0)
        self.side_lengths = np.linalg.norm(nxt - figure, axis=1)
        self.opposite_side_mismatch = np.abs(
            self.side_lengths[:2] - self.side_lengths[2:])
        mid = 0.5 * (figure[0] + figure[2]) - 0.5 * (figure[1] + figure[3])
        self.diagonal_midpoint_gap = float(np.hypot(mid[0], mid[1]))
        self.residual = residual
        self.tolerance = tol
        self.is_parallelogram = bool(
            np.max(self.opposite_side_mismatch) <= tol and
            self.diagonal_midpoint_gap <= tol)

    def to_dict(self):
        return {"class": self.klass,
                "tangent_images": self.images.tolist(),
                "reflected_points": self.reflected_points.tolist(),
                "side_lengths": self.side_lengths.tolist(),
                "opposite_side_mismatch":
                    self.opposite_side_mismatch.tolist(),
                "diagonal_midpoint_gap": self.diagonal_midpoint_gap,
                "residual": self.residual,
                "tolerance": self.tolerance,
                "is_parallelogram": self.is_parallelogram}


def _tolerance(cfg, tol):
    if tol is None:
        return PARALLELOGRAM_TOL * float(np.max(cfg.weights))
    if tol < 0:
        raise PreconditionError("tolerance must be non-negative")
    return float(tol)


def _is_direct_pattern(cfg):
    w = cfg.weights
    return abs(w[0] - w[2]) <= PATTERN_TOL and \
        abs(w[1] - w[3]) <= PATTERN_TOL and \
        convexity_check(cfg) == ON_BOTH_DIAGONALS


def select_class(cfg):
    """Reflection class from the ordering of the weights.

    w_B > w_A > w_D > w_C selects class A, w_A > w_B > w_C > w_D class B,
    and the pattern w_A = w_C, w_B = w_D on both diagonals the direct
    case.

    :raises NoClassApplicable: If no rule applies
    """
    w_a, w_b, w_c, w_d = cfg.weights
    if w_b > w_a > w_d > w_c:
        return CLASS_A
    if w_a > w_b > w_c > w_d:
        return CLASS_B
    if _is_direct_pattern(cfg):
        return DIRECT
    raise NoClassApplicable("weights {} follow no reflection class".format(
        array_str(cfg.weights)))


def symmetrize(cfg, klass="auto", tol=None):
    """Reflect one opposite pair of tangent images through P.

    Class A reflects A' and C', class B reflects B' and D'. The figure is
    a parallelogram exactly when the weights balance, its diagonal
    midpoints then being half the residual apart.

    :param cfg: Angular configuration with weights
    :type cfg: AngularConfig
    :param klass: "A", "B", "direct" or "auto"
    :type klass: string
    :param tol: Tolerance of the verdict, defaults to 1e-9 times the
        largest weight
    :type tol: float
    :rtype: ParallelogramReport

    :raises NoClassApplicable: If auto selection finds no class
    """
    image = tangent_image(cfg)
    choice = str(klass).strip().lower()
    if choice == "auto":
        choice = select_class(cfg).lower()
        logger.info("Selected reflection class {}".format(choice))
    if choice == "direct":
        return direct_parallelogram_check(cfg, tol=tol)
    if choice not in ("a", "b"):
        raise PreconditionError("unknown reflection class {!r}".format(klass))

    p = image.points
    flip = np.array([-1.0, 1.0, -1.0, 1.0]) if choice == "a" else \
        np.array([1.0, -1.0, 1.0, -1.0])
    figure = flip[:, np.newaxis] * p
    total = np.sum(p, axis=0)
    report = ParallelogramReport(choice.upper(), p, figure,
                                 float(np.hypot(total[0], total[1])),
                                 _tolerance(cfg, tol))
    logger.info("Class {} figure: sides {}, midpoint gap {:.3e}".format(
        report.klass, array_str(report.side_lengths),
        report.diagonal_midpoint_gap))
    return report


def direct_parallelogram_check(cfg, tol=None):
    """A'B'C'D' itself when w_A = w_C, w_B = w_D and P is on both diagonals.

    :param cfg: Angular configuration with weights
    :type cfg: AngularConfig
    :param tol: Tolerance of the verdict
    :type tol: float
    :rtype: ParallelogramReport

    :raises PatternMismatch: If the weights or directions do not fit
    """
    image = tangent_image(cfg)
    if not _is_direct_pattern(cfg):
        raise PatternMismatch("direct parallelogram needs w_A = w_C, "
                              "w_B = w_D and P on both diagonals")
    p = image.points
    total = np.sum(p, axis=0)
    return ParallelogramReport(DIRECT, p, p.copy(),
                               float(np.hypot(total[0], total[1])),
                               _tolerance(cfg, tol))


def figure_geometry(report):
    """Planar polylines of a report, keyed by drawing role.

    :param report: A parallelogram report
    :type report: ParallelogramReport
    :return: Dictionary with the roles "arcs" (rays from P along the arc
        directions), "tangent_images" (the quadrilateral A'B'C'D') and
        "parallelogram" (the reflected figure), each a list of
        (label, list of points, closed)
    :rtype: dict
    """
    p = report.images
    reach = 1.15 * float(np.max(np.linalg.norm(p, axis=1)))
    names = ("A", "B", "C", "D")
    arcs = []
    for name, q in zip(names, p):
        u = q / np.linalg.norm(q)
        arcs.append((name, [np.zeros(2), reach * u], False))
    images = [("A'B'C'D'", list(p), True)]
    images += [(name + "'", [np.zeros(2), q], False)
               for name, q in zip(names, p)]
    if report.klass == CLASS_A:
        labels = "A'*B'C'*D'"
    elif report.klass == CLASS_B:
        labels = "A'B'*C'D'*"
    else:
        labels = "A'B'C'D'"
    figure = [(labels, list(report.reflected_points), True)]
    return {"arcs": arcs, "tangent_images": images, "parallelogram": figure}
