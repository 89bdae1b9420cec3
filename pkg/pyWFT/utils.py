"""
.. module:: utils
   :synopsis: Help functions for pyWFT

.. moduleauthor:: pyWFT developers

:Module: utils
:Author: pyWFT developers
"""

import numpy as np

from pyWFT.errors import PreconditionError

VERTEX_NAMES = ("A", "B", "C", "D")


def vertex_index(vertex):
    """Map a vertex id to its position in the counterclockwise order

    :param vertex: Vertex id ("A", "B", "C", "D") or an index 0..3
    :type vertex: string or int
    :return: Index in 0..3
    :rtype: int

    :raises PreconditionError: If the vertex id is unknown
    """
    if isinstance(vertex, (int, np.integer)) and 0 <= vertex < 4:
        return int(vertex)
    try:
        return VERTEX_NAMES.index(str(vertex).upper())
    except ValueError:
        raise PreconditionError("unknown vertex id {!r}".format(vertex))


def wrap_angle(x):
    """Wrap an angle into (-pi, pi]

    :param x: Angle(s) in radians
    :type x: float or numpy.array
    :return: Wrapped angle(s)
    :rtype: float or numpy.array
    """
    r = np.mod(np.asarray(x, dtype=float) + np.pi, 2 * np.pi) - np.pi
    r = np.where(r <= -np.pi, r + 2 * np.pi, r)
    if r.ndim == 0:
        return float(r)
    return r


def normalize_angle(x):
    """Map an angle into [0, 2*pi)

    :param x: Angle(s) in radians
    :type x: float or numpy.array
    :return: Angle(s) in [0, 2*pi)
    :rtype: float or numpy.array
    """
    r = np.mod(np.asarray(x, dtype=float), 2 * np.pi)
    r = np.where(r >= 2 * np.pi, r - 2 * np.pi, r)
    if r.ndim == 0:
        return float(r)
    return r


def array_str(x):
    """Compact one-line rendering of an array for log messages."""
    return np.array_str(np.asarray(x), max_line_width=np.inf,
                        precision=5, suppress_small=True)


def check_quad_values(values, name, allow_zero=False):
    """Check that a quantity given per vertex holds 4 finite positive reals.

    :param values: The values, one per vertex A, B, C, D
    :type values: list or numpy.array
    :param name: Name used in the error message
    :type name: string
    :param allow_zero: Whether zero is accepted
    :type allow_zero: bool
    :return: The values as a float array of shape (4,)
    :rtype: numpy.array

    :raises PreconditionError: If the values are malformed
    """
    try:
        x = np.array(values, dtype=float)
    except (TypeError, ValueError):
        raise PreconditionError("{} must be numeric".format(name))
    if x.shape != (4,):
        raise PreconditionError("{} must hold exactly 4 values".format(name))
    if not np.all(np.isfinite(x)):
        raise PreconditionError("{} must be finite".format(name))
    if allow_zero:
        if np.any(x < 0):
            raise PreconditionError("{} must be non-negative".format(name))
    elif np.any(x <= 0):
        raise PreconditionError("{} must be positive".format(name))
    return x
