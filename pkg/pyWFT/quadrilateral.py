"""
.. module:: quadrilateral
   :synopsis: Convex quadrilaterals seen from their weighted Fermat-Torricelli point

.. moduleauthor:: pyWFT developers

:Module: quadrilateral
:Author: pyWFT developers
"""

import logging

import numpy as np

from pyWFT import kplane
from pyWFT.errors import AntipodalPoints, DegenerateArc, PreconditionError
from pyWFT.utils import VERTEX_NAMES, array_str, check_quad_values, \
    normalize_angle, vertex_index, wrap_angle

# Get module-level logger
logger = logging.getLogger(__name__)

INTERIOR = "Interior"
ON_DIAGONAL_BD = "OnDiagonalBD"
ON_BOTH_DIAGONALS = "OnBothDiagonals"
NOT_INTERIOR = "NotInterior"

BOUNDARY_TOL = 1e-9


def _frozen(x):
    x = np.array(x, dtype=float)
    x.setflags(write=False)
    return x


class AngularConfig(object):
    """A quadrilateral ABCD described from a point P inside it.

    The directions are the frame angles of the shortest arcs P->R at the
    basepoint P. They are stored rotated so that the A-direction is 0;
    the rotation that was removed is kept in ``orientation`` so the
    vertices can be realized where they were.

    :param k: Curvature of the K-plane
    :type k: float
    :param directions: Directions of the arcs to A, B, C, D in radians
    :type directions: list or numpy.array
    :param lengths: Lengths of the arcs to A, B, C, D
    :type lengths: list or numpy.array
    :param weights: Weights of A, B, C, D (optional)
    :type weights: list or numpy.array
    :param basepoint: Location of P, defaults to the model origin
    :type basepoint: numpy.array
    :param orientation: Frame angle of the A-direction before normalization
    :type orientation: float

    :ivar k: Curvature
    :ivar directions: Normalized directions, theta_A = 0
    :ivar lengths: Arc lengths
    :ivar weights: Weights, or None
    :ivar basepoint: Location of P
    :ivar orientation: Frame angle of the A-direction at the basepoint
    """
    def __init__(self, k, directions, lengths, weights=None, basepoint=None,
                 orientation=0.0):
        self.k = kplane.check_curvature(k)
        directions = np.array(directions, dtype=float)
        if directions.shape != (4,) or not np.all(np.isfinite(directions)):
            raise PreconditionError("directions must hold 4 finite angles")
        self.lengths = _frozen(check_quad_values(lengths, "lengths"))
        if weights is None:
            self.weights = None
        else:
            self.weights = _frozen(check_quad_values(weights, "weights"))
        if basepoint is None:
            basepoint = kplane.origin(self.k)
        self.basepoint = _frozen(kplane.check_point(self.k, basepoint))

        self.orientation = normalize_angle(orientation + directions[0])
        self.directions = _frozen(
            normalize_angle(directions - directions[0]))

    def gaps(self):
        """Angles APB, BPC, CPD, DPA between consecutive arcs.

        :return: The four gaps, summing to 2*pi
        :rtype: numpy.array
        """
        t = self.directions
        return np.array([t[1] - t[0], t[2] - t[1], t[3] - t[2],
                         2 * np.pi - t[3]])

    def unit_vectors(self):
        """Unit directions u_R of the arcs as a 4 x 2 array."""
        return np.column_stack((np.cos(self.directions),
                                np.sin(self.directions)))

    def signed_angle(self, source, target):
        return signed_angle(self, source, target)

    def with_weights(self, weights):
        """Copy of the configuration carrying other weights."""
        return AngularConfig(self.k, self.directions, self.lengths,
                             weights=weights, basepoint=self.basepoint,
                             orientation=self.orientation)

    def with_lengths(self, lengths):
        """Copy of the configuration with other arc lengths."""
        return AngularConfig(self.k, self.directions, lengths,
                             weights=self.weights, basepoint=self.basepoint,
                             orientation=self.orientation)

    def with_directions(self, directions):
        """Copy of the configuration with other directions."""
        return AngularConfig(self.k, directions, self.lengths,
                             weights=self.weights, basepoint=self.basepoint,
                             orientation=self.orientation)

    def perimeter_bound_check(self):
        """Check the perimeter bound of the quadrilateral on a sphere.

        Each arc must be shorter than pi/sqrt(k) and twice the total arc
        length, which bounds the perimeter by the triangle inequality,
        must stay below 2*pi/sqrt(k).

        :return: Whether the bound holds and the bound 2*pi/sqrt(k)
        :rtype: tuple (bool, float)
        """
        bound = 2 * kplane.max_arc_length(self.k)
        if not np.isfinite(bound):
            return True, bound
        ok = bool(np.all(self.lengths < 0.5 * bound) and
                  2 * np.sum(self.lengths) < bound)
        return ok, bound

    def __repr__(self):
        return "AngularConfig(k={}, directions={}, lengths={}, " \
               "weights={})".format(
                   self.k, array_str(np.degrees(self.directions)),
                   array_str(self.lengths),
                   None if self.weights is None else array_str(self.weights))


class VertexConfig(object):
    """A quadrilateral ABCD given by its vertices in counterclockwise order.

    :param k: Curvature of the K-plane
    :type k: float
    :param vertices: The points A, B, C, D
    :type vertices: list of numpy.array
    :param weights: Weights of A, B, C, D (optional)
    :type weights: list or numpy.array

    :raises DegenerateArc: If two vertices coincide
    :raises AntipodalPoints: If two vertices are antipodal (k > 0)
    """
    def __init__(self, k, vertices, weights=None):
        self.k = kplane.check_curvature(k)
        if len(vertices) != 4:
            raise PreconditionError("a quadrilateral needs 4 vertices")
        self.vertices = tuple(_frozen(kplane.check_point(self.k, v))
                              for v in vertices)
        if weights is None:
            self.weights = None
        else:
            self.weights = _frozen(check_quad_values(weights, "weights"))

        for i in range(4):
            for j in range(i + 1, 4):
                if kplane.distance(self.k, self.vertices[i],
                                   self.vertices[j]) <= kplane.DEGENERATE_TOL:
                    raise DegenerateArc("vertices {} and {} coincide".format(
                        VERTEX_NAMES[i], VERTEX_NAMES[j]))

    def with_weights(self, weights):
        return VertexConfig(self.k, self.vertices, weights=weights)

    def vertex(self, vertex):
        return self.vertices[vertex_index(vertex)]

    def perimeter(self):
        return float(sum(kplane.distance(self.k, self.vertices[i],
                                         self.vertices[(i + 1) % 4])
                         for i in range(4)))

    def perimeter_bound_check(self):
        """Check that the perimeter is below 2*pi/sqrt(k) on a sphere.

        :return: Whether the bound holds and the bound 2*pi/sqrt(k)
        :rtype: tuple (bool, float)
        """
        bound = 2 * kplane.max_arc_length(self.k)
        if not np.isfinite(bound):
            return True, bound
        try:
            return self.perimeter() < bound, bound
        except AntipodalPoints:
            return False, bound


def signed_angle(cfg, source, target):
    """Signed angle from the arc to ``source`` to the arc to ``target``.

    Counterclockwise is positive, so sin(signed_angle(cfg, R, S)) is the
    sine of the oriented angle RPS.

    :param cfg: Angular configuration
    :type cfg: AngularConfig
    :param source: Vertex id
    :type source: string or int
    :param target: Vertex id
    :type target: string or int
    :return: Angle in (-pi, pi]
    :rtype: float
    """
    t = cfg.directions
    return wrap_angle(t[vertex_index(target)] - t[vertex_index(source)])


def realize_vertices(cfg):
    """Construct the vertices at the end of the four arcs.

    :param cfg: Angular configuration
    :type cfg: AngularConfig
    :return: The quadrilateral with the same weights
    :rtype: VertexConfig

    :raises StepTooLong: If an arc is too long for the sphere
    """
    vertices = [kplane.polar_point(cfg.k, cfg.basepoint, cfg.lengths[i],
                                   cfg.directions[i] + cfg.orientation)
                for i in range(4)]
    return VertexConfig(cfg.k, vertices, weights=cfg.weights)


def extract_angular(vc, p):
    """Describe a quadrilateral from a point p.

    :param vc: Quadrilateral
    :type vc: VertexConfig
    :param p: The point to look from
    :type p: numpy.array
    :return: The angular configuration at p
    :rtype: AngularConfig

    :raises DegenerateArc: If p coincides with a vertex
    :raises AntipodalPoints: If p is antipodal to a vertex
    """
    p = kplane.check_point(vc.k, p, tol=1e-9)
    lengths = np.zeros(4)
    angles = np.zeros(4)
    for i, v in enumerate(vc.vertices):
        lengths[i], angles[i] = kplane.direction(vc.k, p, v)
    return AngularConfig(vc.k, angles, lengths, weights=vc.weights,
                         basepoint=p)


def convexity_check(cfg, tol=BOUNDARY_TOL):
    """Classify the position of the basepoint inside the quadrilateral.

    The basepoint is interior to the convex quadrilateral when all four
    gaps lie strictly in (0, pi). It lies on the diagonal BD when the
    angle BPD is pi, on AC when the angle APC is pi.

    :param cfg: Angular configuration
    :type cfg: AngularConfig
    :param tol: Tolerance band on the boundary cases
    :type tol: float
    :return: One of INTERIOR, ON_DIAGONAL_BD, ON_BOTH_DIAGONALS, NOT_INTERIOR
    :rtype: string
    """
    g = cfg.gaps()
    if np.any(g <= tol) or np.any(g >= np.pi - tol):
        return NOT_INTERIOR
    t = cfg.directions
    on_bd = abs(t[3] - t[1] - np.pi) <= tol
    on_ac = abs(t[2] - t[0] - np.pi) <= tol
    if on_bd and on_ac:
        return ON_BOTH_DIAGONALS
    if on_bd:
        return ON_DIAGONAL_BD
    if on_ac:
        logger.debug("basepoint on diagonal AC, treated as interior")
    return INTERIOR
