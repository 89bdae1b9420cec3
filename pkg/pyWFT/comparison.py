"""
.. module:: comparison
   :synopsis: Comparison triangles and glued quadrilaterals

.. moduleauthor:: pyWFT developers

:Module: comparison
:Author: pyWFT developers

The quadrilateral splits at P into the four sub-triangles PAD, PDC, PCB
and PBA. Each one can be replaced by its comparison triangle (same side
lengths) on another K-plane, which changes its angle at P. Gluing the
four pieces back at P gives a perturbed angular configuration whose
plasticity line is compared with the original one.
"""

import logging

import numpy as np
import scipy.optimize as scpopt

from pyWFT import kplane
from pyWFT.errors import NoRoot, PreconditionError
from pyWFT.inverse import plasticity_line
from pyWFT.quadrilateral import NOT_INTERIOR, convexity_check
from pyWFT.utils import array_str

# Get module-level logger
logger = logging.getLogger(__name__)

MPRIME = "MPrime"
MDOUBLEPRIME = "MDoublePrime"

# Sub-triangles in gluing order as (vertex, vertex, index into cfg.gaps())
SUB_TRIANGLES = (("A", "D", 3), ("D", "C", 2), ("C", "B", 1), ("B", "A", 0))
_INDEX = {"A": 0, "B": 1, "C": 2, "D": 3}

DEFECT_TOL = 1e-10
ZERO_DEFECT = 1e-12


def comparison_angle(k_source, k_target, a, b, gamma):
    """Angle of the comparison triangle on another K-plane.

    The triangle with sides a, b enclosing gamma on the k_source-plane has
    a third side c; the triangle with sides a, b, c on the k_target-plane
    encloses angle_target.

    :param k_source: Curvature of the original triangle
    :type k_source: float
    :param k_target: Curvature of the comparison triangle
    :type k_target: float
    :param a: First side at the angle
    :type a: float
    :param b: Second side at the angle
    :type b: float
    :param gamma: Enclosed angle on the source plane
    :type gamma: float
    :return: (angle_target, gamma - angle_target)
    :rtype: tuple

    :raises PerimeterTooLarge: If the triangle does not fit on a sphere
    """
    if k_source == k_target:
        return float(gamma), 0.0
    c = kplane.loc_side_from_sides_angle(k_source, a, b, gamma)
    angle = kplane.loc_angle_from_sides(k_target, a, b, c)
    return angle, float(gamma) - angle


def _case(case):
    key = str(case).replace("_", "").replace("-", "").lower()
    if key in ("mprime", "m'"):
        return MPRIME
    if key in ("mdoubleprime", "m''"):
        return MDOUBLEPRIME
    raise PreconditionError("unknown gluing case {!r}".format(case))


class GlueSpec(object):
    """Outcome of gluing the comparison triangles at P.

    Angles and shifts are listed for the sub-triangles PAD, PDC, PCB, PBA.
    The shifts are magnitudes: MPrime glues the angles DPA - eps_1,
    CPD - eps_2, BPC + eps_3, APB + eps_4 and MDoublePrime glues DPA,
    CPD, BPC - eps_3, APB + eps_4.

    :ivar case: MPRIME or MDOUBLEPRIME
    :ivar k_source: Curvature of the quadrilateral
    :ivar k1: Lower curvature bound
    :ivar k2: Upper curvature bound
    :ivar s: Interpolation parameter reaching the 2*pi angle sum
    :ivar k2_effective: k_source + s (k2 - k_source)
    :ivar target_curvatures: Curvature each sub-triangle is moved to
    :ivar source_angles: Angles at P before gluing
    :ivar glued_angles: Angles at P after normalization
    :ivar epsilon: Normalized shifts eps_1..eps_4
    :ivar raw_epsilon: Shifts with the full k2
    :ivar raw_defect: Angle sum minus 2*pi with the full k2
    :ivar angle_sum_defect: Angle sum minus 2*pi after normalization
    :ivar vertex_angles: Angles of each comparison triangle at its two
        outer vertices
    """
    def __init__(self, **kwargs):
        for key, value in kwargs.items():
            setattr(self, key, value)

    def to_dict(self):
        return {"case": self.case, "k_source": self.k_source,
                "k1": self.k1, "k2": self.k2, "s": self.s,
                "k2_effective": self.k2_effective,
                "target_curvatures": list(self.target_curvatures),
                "source_angles_deg": np.degrees(self.source_angles).tolist(),
                "glued_angles_deg": np.degrees(self.glued_angles).tolist(),
                "epsilon": list(self.epsilon),
                "raw_epsilon": list(self.raw_epsilon),
                "raw_defect": self.raw_defect,
                "angle_sum_defect": self.angle_sum_defect,
                "vertex_angles_deg": np.degrees(self.vertex_angles).tolist()}


def _targets(case, k, k1, k2s):
    if case == MPRIME:
        return [k1, k1, k2s, k2s]
    return [k, k, k1, k2s]


def _glued(cfg, case, k1, k2s):
    gaps = cfg.gaps()
    angles = []
    for (r, q, g), kt in zip(SUB_TRIANGLES, _targets(case, cfg.k, k1, k2s)):
        angle, _ = comparison_angle(cfg.k, kt, cfg.lengths[_INDEX[r]],
                                    cfg.lengths[_INDEX[q]], gaps[g])
        angles.append(angle)
    return np.array(angles)


def _vertex_angles(cfg, targets):
    gaps = cfg.gaps()
    out = np.zeros((4, 2))
    for i, ((r, q, g), kt) in enumerate(zip(SUB_TRIANGLES, targets)):
        l_r, l_q = cfg.lengths[_INDEX[r]], cfg.lengths[_INDEX[q]]
        c = kplane.loc_side_from_sides_angle(cfg.k, l_r, l_q, gaps[g])
        out[i, 0] = kplane.loc_angle_from_sides(kt, l_r, c, l_q)
        out[i, 1] = kplane.loc_angle_from_sides(kt, l_q, c, l_r)
    return out


def _shifts(case, source, glued):
    # Magnitudes with the sign convention of each case
    diff = glued - source
    if case == MPRIME:
        return [-diff[0], -diff[1], diff[2], diff[3]]
    return [0.0, 0.0, -diff[2], diff[3]]


def glue_quad(cfg, case, k1, k2):
    """Glue the comparison triangles of the four sub-triangles at P.

    For MPrime, PAD and PDC move to the k1-plane and PCB, PBA to the
    k2-plane. For MDoublePrime, PAD and PDC stay, PCB moves to k1 and PBA
    to k2. The glued angles rarely sum to 2*pi; the curvature of the
    pieces sent to k2 is pulled back to k_source + s (k2 - k_source),
    with s in [0, 1] found by Brent's method, until they do.

    :param cfg: Angular configuration
    :type cfg: AngularConfig
    :param case: MPRIME or MDOUBLEPRIME
    :type case: string
    :param k1: Lower curvature, at most cfg.k
    :type k1: float
    :param k2: Upper curvature, at least cfg.k
    :type k2: float
    :return: The gluing summary and the perturbed configuration
    :rtype: tuple (GlueSpec, AngularConfig)

    :raises NoRoot: If no s in [0, 1] closes the angle sum
    """
    case = _case(case)
    k1 = kplane.check_curvature(k1)
    k2 = kplane.check_curvature(k2)
    if not k1 <= cfg.k <= k2:
        raise PreconditionError("curvatures must satisfy k1 <= k <= k2, got "
                                "k1={}, k={}, k2={}".format(k1, cfg.k, k2))
    if convexity_check(cfg) == NOT_INTERIOR:
        raise PreconditionError("the point is not interior to the "
                                "quadrilateral")

    gaps = cfg.gaps()
    source = np.array([gaps[g] for _, _, g in SUB_TRIANGLES])
    k = cfg.k

    def defect(s):
        return float(np.sum(_glued(cfg, case, k1, k + s * (k2 - k))) -
                     2 * np.pi)

    raw = _glued(cfg, case, k1, k2)
    d1 = float(np.sum(raw) - 2 * np.pi)
    d0 = defect(0.0)
    logger.debug("Angle sum defect {:.6e} at s = 0, {:.6e} at s = 1".format(
        d0, d1))
    if abs(d1) <= ZERO_DEFECT:
        s = 1.0
    elif abs(d0) <= ZERO_DEFECT:
        s = 0.0
    elif d0 * d1 < 0:
        s = scpopt.brentq(defect, 0.0, 1.0, xtol=1e-15, maxiter=200)
    else:
        raise NoRoot("angle sum defect keeps its sign on [0, 1]: "
                     "[{:.3e}, {:.3e}]".format(d0, d1), defect_range=(d0, d1))
    if abs(d1) > ZERO_DEFECT:
        logger.warning("Raw angle sum defect {:.3e} from 2*pi, normalized "
                       "with s = {:.12f}".format(d1, s))

    k2s = k + s * (k2 - k)
    glued = _glued(cfg, case, k1, k2s)
    targets = _targets(case, k, k1, k2s)
    spec = GlueSpec(
        case=case, k_source=k, k1=k1, k2=k2, s=float(s),
        k2_effective=float(k2s), target_curvatures=targets,
        source_angles=source, glued_angles=glued,
        epsilon=_shifts(case, source, glued),
        raw_epsilon=_shifts(case, source, raw),
        raw_defect=d1, angle_sum_defect=float(np.sum(glued) - 2 * np.pi),
        vertex_angles=_vertex_angles(cfg, targets))

    t = cfg.directions
    if k1 == k == k2:
        directions = np.array(t)
    elif case == MPRIME:
        theta_b = glued[3]
        directions = np.array([0.0, theta_b, theta_b + glued[2],
                               2 * np.pi - glued[0]])
    else:
        directions = np.array([0.0, glued[3], t[2], t[3]])
    perturbed = cfg.with_directions(directions)
    logger.info("Glued angles {} deg, defect {:.3e}".format(
        array_str(np.degrees(glued)), spec.angle_sum_defect))
    return spec, perturbed


class ComparativePlasticityReport(object):
    """Plasticity lines before and after gluing.

    :ivar original_line: Line of the original configuration
    :ivar glued_line: Line of the glued configuration
    :ivar deltas: Changes of the slopes a_A, a_B, a_C
    :ivar w_d: Weight of D at which the ratios are compared
    :ivar ratio_table: Entry [R][S] is (w_R/w_S) glued over (w_R/w_S)
        original
    """
    def __init__(self, original_line, glued_line, w_d):
        self.original_line = original_line
        self.glued_line = glued_line
        self.deltas = glued_line.a - original_line.a
        self.w_d = float(w_d)
        wo = original_line.weights_at(self.w_d)
        wg = glued_line.weights_at(self.w_d)
        with np.errstate(divide="ignore", invalid="ignore"):
            self.ratio_table = np.outer(wg, 1.0 / wg) / \
                np.outer(wo, 1.0 / wo)

    def to_dict(self):
        return {"original_line": self.original_line.to_dict(),
                "glued_line": self.glued_line.to_dict(),
                "deltas": self.deltas.tolist(),
                "w_d": self.w_d,
                "ratio_table": self.ratio_table.tolist()}


def _matched_w_d(original, glued, c):
    lo = max(original.positivity_interval.lower,
             glued.positivity_interval.lower)
    hi = min(original.positivity_interval.upper,
             glued.positivity_interval.upper)
    if lo < hi and np.isfinite(hi):
        return 0.5 * (lo + hi)
    mid = original.positivity_interval.midpoint()
    return mid if mid is not None else 0.25 * c


def comparative_plasticity(cfg, perturbed, c, w_d=None):
    """Compare the plasticity lines of a configuration and its gluing.

    :param cfg: Original angular configuration
    :type cfg: AngularConfig
    :param perturbed: Configuration returned by :func:`glue_quad`
    :type perturbed: AngularConfig
    :param c: Weight budget
    :type c: float
    :param w_d: Weight of D for the ratio table, defaults to the midpoint
        of the common positivity interval
    :type w_d: float
    :rtype: ComparativePlasticityReport
    """
    original = plasticity_line(cfg, c)
    glued = plasticity_line(perturbed, c)
    if w_d is None:
        w_d = _matched_w_d(original, glued, c)
    report = ComparativePlasticityReport(original, glued, w_d)
    logger.info("Slope changes {} (sum {:.3e})".format(
        array_str(report.deltas), float(np.sum(report.deltas))))
    return report
