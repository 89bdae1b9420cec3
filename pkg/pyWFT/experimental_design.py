"""
.. module:: experimental_design
   :synopsis: Designs of random quadrilateral configurations

.. moduleauthor:: pyWFT developers

:Module: experimental_design
:Author: pyWFT developers
"""

import abc

import numpy as np
import pyDOE2 as pydoe

from pyWFT.quadrilateral import AngularConfig, INTERIOR, ON_DIAGONAL_BD, \
    convexity_check

MARGIN = 1e-6


class ExperimentalDesign(abc.ABC):
    """Base class for designs of configurations.

    :ivar dim: Number of values per design point
    :ivar num_pts: Number of points in the design
    """
    def __init__(self):  # pragma: no cover
        self.dim = None
        self.num_pts = None

    @abc.abstractmethod
    def generate_points(self):  # pragma: no cover
        pass


def _lhs(dim, num_pts, criterion, rng):
    return pydoe.lhs(dim, samples=num_pts, criterion=criterion,
                     random_state=rng)


class InteriorDirections(ExperimentalDesign):
    """Directions of quadrilaterals seen from an interior point.

    The four gaps are drawn from a Latin hypercube in
    (min_gap, max_gap)^4 and rescaled to sum to 2*pi. Draws whose
    rescaled gaps leave (0, pi) or that fall on a diagonal are rejected.

    :param num_pts: Number of configurations
    :type num_pts: int
    :param min_gap: Smallest gap before rescaling (radians)
    :type min_gap: float
    :param max_gap: Largest gap before rescaling (radians)
    :type max_gap: float
    :param criterion: pyDOE2 criterion, None for random placement
        within the strata
    :type criterion: string
    :param random_state: Seed or RandomState
    :type random_state: int or numpy.random.RandomState

    :ivar dim: Number of directions (4)
    :ivar num_pts: Number of configurations
    """
    def __init__(self, num_pts, min_gap=np.radians(5.0),
                 max_gap=np.radians(175.0), criterion=None,
                 random_state=None):
        if not (isinstance(num_pts, int) and num_pts > 0):
            raise ValueError("num_pts must be a positive integer")
        if not 0 < min_gap < max_gap < np.pi:
            raise ValueError("gaps must satisfy 0 < min_gap < max_gap < pi")
        self.dim = 4
        self.num_pts = num_pts
        self.min_gap = min_gap
        self.max_gap = max_gap
        self.criterion = criterion
        self.rng = np.random.RandomState(random_state) \
            if not isinstance(random_state, np.random.RandomState) \
            else random_state

    def generate_points(self):
        """Generate the directions.

        :return: Directions of size num_pts x 4, first column zero
        :rtype: numpy.array
        """
        out = []
        while len(out) < self.num_pts:
            x = _lhs(4, self.num_pts, self.criterion, self.rng)
            gaps = self.min_gap + (self.max_gap - self.min_gap) * x
            gaps *= 2 * np.pi / np.sum(gaps, axis=1)[:, np.newaxis]
            for g in gaps:
                if np.all(g > MARGIN) and np.all(g < np.pi - MARGIN):
                    t = np.concatenate(([0.0], np.cumsum(g[:3])))
                    cfg = AngularConfig(0.0, t, np.ones(4))
                    if convexity_check(cfg) == INTERIOR:
                        out.append(t)
        return np.array(out[:self.num_pts])


class DiagonalDirections(ExperimentalDesign):
    """Directions of quadrilaterals seen from a point of the diagonal BD.

    theta_B is drawn in (min_gap, pi - min_gap), theta_D = theta_B + pi
    and theta_C in between, away from pi so the point is on one diagonal
    only.

    :param num_pts: Number of configurations
    :type num_pts: int
    :param min_gap: Smallest gap (radians)
    :type min_gap: float
    :param random_state: Seed or RandomState
    :type random_state: int or numpy.random.RandomState
    """
    def __init__(self, num_pts, min_gap=np.radians(5.0), random_state=None):
        if not (isinstance(num_pts, int) and num_pts > 0):
            raise ValueError("num_pts must be a positive integer")
        self.dim = 4
        self.num_pts = num_pts
        self.min_gap = min_gap
        self.rng = np.random.RandomState(random_state) \
            if not isinstance(random_state, np.random.RandomState) \
            else random_state

    def generate_points(self):
        """Generate the directions.

        :return: Directions of size num_pts x 4
        :rtype: numpy.array
        """
        out = []
        m = self.min_gap
        while len(out) < self.num_pts:
            x = _lhs(2, self.num_pts, None, self.rng)
            for xb, xc in x:
                tb = m + (np.pi - 2 * m) * xb
                td = tb + np.pi
                tc = tb + m + (np.pi - 2 * m) * xc
                t = np.array([0.0, tb, tc, td])
                if convexity_check(AngularConfig(0.0, t, np.ones(4))) == \
                        ON_DIAGONAL_BD:
                    out.append(t)
        return np.array(out[:self.num_pts])


class ArcLengths(ExperimentalDesign):
    """Arc lengths from a Latin hypercube in (low, high)^4.

    :param num_pts: Number of length vectors
    :type num_pts: int
    :param low: Smallest length
    :type low: float
    :param high: Largest length
    :type high: float
    :param random_state: Seed or RandomState
    :type random_state: int or numpy.random.RandomState
    """
    def __init__(self, num_pts, low, high, random_state=None):
        if not 0 < low < high:
            raise ValueError("lengths must satisfy 0 < low < high")
        self.dim = 4
        self.num_pts = num_pts
        self.low = low
        self.high = high
        self.rng = np.random.RandomState(random_state) \
            if not isinstance(random_state, np.random.RandomState) \
            else random_state

    def generate_points(self):
        """Generate lengths of size num_pts x 4."""
        x = _lhs(4, self.num_pts, None, self.rng)
        return self.low + (self.high - self.low) * x
