"""
.. module:: kplane
   :synopsis: Geometry of the plane of constant curvature k

.. moduleauthor:: pyWFT developers

:Module: kplane
:Author: pyWFT developers

The curvature k is a plain real number. Points are numpy arrays in the
canonical coordinates of the model selected by the sign of k:

- k = 0: the Euclidean plane, points are (x, y)
- k > 0: the sphere of radius 1/sqrt(k), points are unit 3-vectors
- k < 0: the hyperbolic plane of radius 1/sqrt(-k), points (x0, x1, x2)
  on the upper sheet x0^2 - x1^2 - x2^2 = 1 of the hyperboloid

Tangent vectors are 2-vectors of components (in length units) in the
canonical orthonormal frame at their base point, see :func:`tangent_frame`.
|k| < FLAT_TOL is treated as flat.
"""

import numpy as np

from pyWFT.errors import AntipodalPoints, DegenerateArc, InvalidPoint, \
    PerimeterTooLarge, PreconditionError, StepTooLong, \
    TriangleInequalityViolated

FLAT_TOL = 1e-12
ANTIPODAL_TOL = 1e-9
POLE_TOL = 1e-9
SHORT_ARC = 1e-8
DEGENERATE_TOL = 1e-14


def check_curvature(k):
    """Check that a curvature is a finite real and return it as a float."""
    try:
        k = float(k)
    except (TypeError, ValueError):
        raise PreconditionError("curvature must be a real number")
    if not np.isfinite(k):
        raise PreconditionError("curvature must be finite")
    return k


def is_flat(k):
    return abs(k) < FLAT_TOL


def radius(k):
    """Radius 1/sqrt(|k|) of the model, infinite when flat."""
    if is_flat(k):
        return np.inf
    return 1.0 / np.sqrt(abs(k))


def max_arc_length(k):
    """Longest admissible geodesic length pi/sqrt(k) (infinite unless k>0)."""
    if k > 0 and not is_flat(k):
        return np.pi / np.sqrt(k)
    return np.inf


def sn(k, x):
    """Generalized sine: sin(sqrt(k) x)/sqrt(k), x or sinh(sqrt(-k) x)/sqrt(-k)

    :param k: Curvature
    :type k: float
    :param x: Length
    :type x: float
    :return: The generalized sine of x
    :rtype: float
    """
    if is_flat(k):
        return x
    s = np.sqrt(abs(k))
    if abs(s * x) < SHORT_ARC:
        return x
    if k > 0:
        return np.sin(s * x) / s
    return np.sinh(s * x) / s


def asn(k, y):
    """Inverse of :func:`sn` on [0, pi/(2 sqrt(k))] for k > 0."""
    if is_flat(k):
        return y
    s = np.sqrt(abs(k))
    if abs(s * y) < SHORT_ARC:
        return y
    if k > 0:
        return np.arcsin(np.clip(s * y, -1.0, 1.0)) / s
    return np.arcsinh(s * y) / s


def conjugate_cotangent(k, length):
    """Ratio sn'(l)/sn(l), the Hessian factor of the distance function.

    The Riemannian Hessian of the distance to a point at distance l is
    this value times the projection orthogonal to the radial direction.

    :param k: Curvature
    :type k: float
    :param length: Distance l > 0
    :type length: float
    :return: 1/l, sqrt(k) cot(sqrt(k) l) or sqrt(-k) coth(sqrt(-k) l)
    :rtype: float
    """
    if is_flat(k):
        return 1.0 / length
    s = np.sqrt(abs(k))
    if abs(s * length) < SHORT_ARC:
        return 1.0 / length
    if k > 0:
        return s / np.tan(s * length)
    return s / np.tanh(s * length)


def _minkowski(x, y):
    return x[0] * y[0] - x[1] * y[1] - x[2] * y[2]


def origin(k):
    """Model origin: (0, 0), the north pole or the hyperboloid apex."""
    if is_flat(k):
        return np.zeros(2)
    if k > 0:
        return np.array([0.0, 0.0, 1.0])
    return np.array([1.0, 0.0, 0.0])


def check_point(k, p, tol=1e-12):
    """Check that p is a valid point of the model for curvature k.

    :param k: Curvature
    :type k: float
    :param p: Point
    :type p: numpy.array
    :param tol: Tolerance on the model equation
    :type tol: float
    :return: The point as a float array
    :rtype: numpy.array

    :raises InvalidPoint: If p is not on the model
    """
    p = np.asarray(p, dtype=float)
    dim = 2 if is_flat(k) else 3
    if p.shape != (dim,):
        raise InvalidPoint("points need {} coordinates for k={}".format(
            dim, k))
    if not np.all(np.isfinite(p)):
        raise InvalidPoint("point coordinates must be finite")
    if k > 0 and not is_flat(k) and abs(np.linalg.norm(p) - 1.0) > tol:
        raise InvalidPoint("sphere points must have unit norm")
    if k < 0 and not is_flat(k):
        if abs(_minkowski(p, p) - 1.0) > tol or p[0] <= 0:
            raise InvalidPoint("hyperbolic points must lie on the upper "
                               "sheet of the hyperboloid")
    return p


def project_point(k, p):
    """Project a nearly valid point onto the model."""
    p = np.asarray(p, dtype=float)
    if is_flat(k):
        return p.copy()
    if k > 0:
        return p / np.linalg.norm(p)
    return np.array([np.sqrt(1.0 + p[1] ** 2 + p[2] ** 2), p[1], p[2]])


def tangent_frame(k, p):
    """Canonical orthonormal frame (e1, e2) at p, as ambient vectors.

    On the sphere the frame is (east, north): the unit vectors along the
    parallel and the meridian through p, both built from the coordinates
    of p and its distance to the polar axis. Within POLE_TOL of a pole
    the x axis projected on the tangent plane is used instead, which is
    (x, y) at the north pole and (x, -y) at the south pole. On the
    hyperboloid the frame is the image of the frame at the apex under the
    boost taking the apex to p. Both frames are positively oriented.

    :param k: Curvature
    :type k: float
    :param p: Base point
    :type p: numpy.array
    :return: Frame vectors e1, e2
    :rtype: tuple of numpy.array
    """
    if is_flat(k):
        return np.array([1.0, 0.0]), np.array([0.0, 1.0])
    x0, x1, x2 = p
    if k > 0:
        rho = np.hypot(x0, x1)
        if rho < POLE_TOL:
            # x axis projected on the tangent plane, then completed by p x e1
            p = np.asarray(p, dtype=float) / np.linalg.norm(p)
            e1 = np.array([1.0, 0.0, 0.0]) - p[0] * p
            e1 /= np.linalg.norm(e1)
            return e1, np.cross(p, e1)
        east = np.array([-x1 / rho, x0 / rho, 0.0])
        north = np.array([-x2 * x0 / rho, -x2 * x1 / rho, rho])
        return east, north
    h = 1.0 + x0
    e1 = np.array([x1, 1.0 + x1 * x1 / h, x1 * x2 / h])
    e2 = np.array([x2, x1 * x2 / h, 1.0 + x2 * x2 / h])
    return e1, e2


def _components(k, p, x):
    e1, e2 = tangent_frame(k, p)
    if k > 0:
        return np.array([np.dot(x, e1), np.dot(x, e2)])
    return np.array([-_minkowski(x, e1), -_minkowski(x, e2)])


def distance(k, p, q):
    """Geodesic distance between p and q.

    :param k: Curvature
    :type k: float
    :param p: First point
    :type p: numpy.array
    :param q: Second point
    :type q: numpy.array
    :return: Distance >= 0
    :rtype: float

    :raises AntipodalPoints: If k > 0 and q is (nearly) the antipode of p
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if is_flat(k):
        return float(np.linalg.norm(q - p))
    if k > 0:
        if np.linalg.norm(p + q) < ANTIPODAL_TOL:
            raise AntipodalPoints("points are antipodal")
        t = np.arctan2(np.linalg.norm(np.cross(p, q)), np.dot(p, q))
        return float(radius(k) * t)
    d = q - p
    m = max(-_minkowski(d, d), 0.0)
    return float(2.0 * radius(k) * np.arcsinh(0.5 * np.sqrt(m)))


def exp_map(k, base, v):
    """Exponential map: walk from base along the geodesic with velocity v.

    :param k: Curvature
    :type k: float
    :param base: Base point
    :type base: numpy.array
    :param v: Tangent vector at base, components in the canonical frame
    :type v: numpy.array
    :return: The point at distance |v| from base in direction v
    :rtype: numpy.array

    :raises StepTooLong: If k > 0 and |v| >= pi/sqrt(k)
    """
    base = np.asarray(base, dtype=float)
    v = np.asarray(v, dtype=float)
    if is_flat(k):
        return base + v
    nv = np.hypot(v[0], v[1])
    if nv >= max_arc_length(k):
        raise StepTooLong("step of length {:.6g} reaches the cut locus "
                          "(limit {:.6g})".format(nv, max_arc_length(k)))
    if nv == 0.0:
        return base.copy()
    e1, e2 = tangent_frame(k, base)
    d = (v[0] * e1 + v[1] * e2) / nv
    t = nv / radius(k)
    if k > 0:
        p = np.cos(t) * base + np.sin(t) * d
        return p / np.linalg.norm(p)
    p = np.cosh(t) * base + np.sinh(t) * d
    return project_point(k, p)


def log_map(k, base, target):
    """Logarithm map: the tangent vector at base pointing to target.

    :param k: Curvature
    :type k: float
    :param base: Base point
    :type base: numpy.array
    :param target: Target point
    :type target: numpy.array
    :return: Components of the initial velocity, of length distance(base, target)
    :rtype: numpy.array

    :raises AntipodalPoints: If k > 0 and target is the antipode of base
    """
    base = np.asarray(base, dtype=float)
    target = np.asarray(target, dtype=float)
    if is_flat(k):
        return target - base
    d = target - base
    if k > 0:
        if np.linalg.norm(base + target) < ANTIPODAL_TOL:
            raise AntipodalPoints("log map undefined at the antipode")
        w = d - np.dot(base, d) * base
        nw = np.linalg.norm(w)
        t = np.arctan2(np.linalg.norm(np.cross(base, target)),
                       np.dot(base, target))
    else:
        w = d - _minkowski(base, d) * base
        nw = np.sqrt(max(-_minkowski(w, w), 0.0))
        t = 2.0 * np.arcsinh(0.5 * np.sqrt(max(-_minkowski(d, d), 0.0)))
    if nw == 0.0 or t == 0.0:
        return np.zeros(2)
    return _components(k, base, (radius(k) * t / nw) * w)


def polar_point(k, base, length, theta):
    """Point reached from base by an arc of the given length and direction."""
    return exp_map(k, base, length * np.array([np.cos(theta), np.sin(theta)]))


def direction(k, base, target):
    """Length and frame angle of the shortest arc from base to target.

    :return: (length, angle in (-pi, pi])
    :rtype: tuple
    :raises DegenerateArc: If target coincides with base
    """
    v = log_map(k, base, target)
    nv = np.hypot(v[0], v[1])
    if nv <= DEGENERATE_TOL:
        raise DegenerateArc("arc endpoints coincide")
    return float(nv), float(np.arctan2(v[1], v[0]))


def angle_at(k, vertex, p, q):
    """Unsigned angle at vertex between the shortest arcs to p and q.

    :param k: Curvature
    :type k: float
    :param vertex: Common point of the two arcs
    :type vertex: numpy.array
    :param p: End point of the first arc
    :type p: numpy.array
    :param q: End point of the second arc
    :type q: numpy.array
    :return: Angle in [0, pi]
    :rtype: float

    :raises DegenerateArc: If p or q coincides with vertex
    """
    u = log_map(k, vertex, p)
    w = log_map(k, vertex, q)
    if np.hypot(*u) <= DEGENERATE_TOL or np.hypot(*w) <= DEGENERATE_TOL:
        raise DegenerateArc("arc endpoint coincides with the vertex")
    return float(np.arctan2(abs(u[0] * w[1] - u[1] * w[0]), np.dot(u, w)))


def _check_sides(a, b, c):
    if min(a, b, c) <= 0:
        raise TriangleInequalityViolated("side lengths must be positive")
    slack = 1e-12 * (a + b + c)
    if a > b + c + slack or b > a + c + slack or c > a + b + slack:
        raise TriangleInequalityViolated(
            "sides ({:.6g}, {:.6g}, {:.6g}) violate the triangle "
            "inequality".format(a, b, c))


def loc_angle_from_sides(k, a, b, c):
    """Angle opposite side c in the triangle with sides a, b, c.

    Uses the half-angle form of the law of cosines for the K-plane,
    which stays accurate for thin triangles.

    :param k: Curvature
    :type k: float
    :param a: Side adjacent to the angle
    :type a: float
    :param b: Side adjacent to the angle
    :type b: float
    :param c: Side opposite the angle
    :type c: float
    :return: Angle in [0, pi]
    :rtype: float

    :raises TriangleInequalityViolated: If the sides do not form a triangle
    :raises PerimeterTooLarge: If k > 0 and a + b + c >= 2 pi/sqrt(k)
    """
    _check_sides(a, b, c)
    if k > 0 and not is_flat(k):
        bound = 2 * max_arc_length(k)
        if a + b + c >= bound:
            raise PerimeterTooLarge(
                "perimeter {:.6g} is not below 2*pi/sqrt(k) = {:.6g}".format(
                    a + b + c, bound), bound=bound)
    hav = sn(k, 0.5 * (c + a - b)) * sn(k, 0.5 * (c - a + b)) / \
        (sn(k, a) * sn(k, b))
    return float(2.0 * np.arcsin(np.sqrt(np.clip(hav, 0.0, 1.0))))


def loc_side_from_sides_angle(k, a, b, gamma):
    """Side opposite the angle gamma enclosed by sides a and b.

    :param k: Curvature
    :type k: float
    :param a: First enclosing side
    :type a: float
    :param b: Second enclosing side
    :type b: float
    :param gamma: Enclosed angle in [0, pi]
    :type gamma: float
    :return: Length of the third side
    :rtype: float

    :raises StepTooLong: If k > 0 and a or b is at least pi/sqrt(k)
    """
    if a <= 0 or b <= 0:
        raise TriangleInequalityViolated("side lengths must be positive")
    if not 0.0 <= gamma <= np.pi:
        raise PreconditionError("enclosed angle must lie in [0, pi]")
    if max(a, b) >= max_arc_length(k):
        raise StepTooLong("side reaches the cut locus (limit {:.6g})".format(
            max_arc_length(k)))
    rhs = sn(k, 0.5 * (a - b)) ** 2 + \
        sn(k, a) * sn(k, b) * np.sin(0.5 * gamma) ** 2
    return float(2.0 * asn(k, np.sqrt(max(rhs, 0.0))))
