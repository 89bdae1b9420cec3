"""
.. module:: scene
   :synopsis: Scene files describing a weighted quadrilateral

.. moduleauthor:: pyWFT developers

:Module: scene
:Author: pyWFT developers

A scene is a JSON object::

    {
      "curvature": 0,
      "angular": {"directions_deg": [0, 120, 210, 260],
                  "lengths": [5, 7.5, 5, 10],
                  "weights": [0.81, 0.712, 0.444, 0.4]},
      "solver": {"tol": 1e-10, "max_iter": 10000}
    }

with either "angular" or "vertices" ({"points": [...], "weights": [...]}).
Angles are in degrees. Optional keys: "name", "description",
"alternate_weights" (a second weight set) and "angular.basepoint".
"""

import hashlib
import json
import logging

import numpy as np

from pyWFT import kplane
from pyWFT.errors import InvalidScene, PreconditionError
from pyWFT.quadrilateral import AngularConfig, VertexConfig

# Get module-level logger
logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 10000
PROJECTION_TOL = 1e-6

_TOP_KEYS = {"curvature", "angular", "vertices", "solver", "name",
             "description", "alternate_weights"}
_ANGULAR_KEYS = {"directions_deg", "lengths", "weights", "basepoint"}
_VERTEX_KEYS = {"points", "weights"}
_SOLVER_KEYS = {"tol", "max_iter"}


class QuadScene(object):
    """A validated scene.

    :ivar curvature: Curvature of the K-plane
    :ivar angular: AngularConfig, or None
    :ivar vertices: VertexConfig, or None
    :ivar alternate_weights: Second weight set, or None
    :ivar tol: Solver tolerance
    :ivar max_iter: Solver iteration limit
    :ivar name: Scene name
    :ivar digest: SHA-256 of the scene source
    """
    def __init__(self, curvature, angular=None, vertices=None,
                 alternate_weights=None, tol=DEFAULT_TOL,
                 max_iter=DEFAULT_MAX_ITER, name=None, digest=None):
        if (angular is None) == (vertices is None):
            raise InvalidScene("exactly one of angular and vertices is "
                               "required")
        self.curvature = curvature
        self.angular = angular
        self.vertices = vertices
        self.alternate_weights = alternate_weights
        self.tol = tol
        self.max_iter = max_iter
        self.name = name
        self.digest = digest

    @property
    def weights(self):
        cfg = self.angular if self.angular is not None else self.vertices
        return cfg.weights

    def select_weights(self, which="primary"):
        """Copy of the scene using the primary or the alternate weights."""
        if which == "primary":
            return self
        if which != "alternate":
            raise PreconditionError("unknown weight set {!r}".format(which))
        if self.alternate_weights is None:
            raise InvalidScene("scene has no alternate weights",
                               field="alternate_weights")
        w = self.alternate_weights
        return QuadScene(
            self.curvature,
            angular=None if self.angular is None else
            self.angular.with_weights(w),
            vertices=None if self.vertices is None else
            self.vertices.with_weights(w),
            tol=self.tol, max_iter=self.max_iter, name=self.name,
            digest=self.digest)


def _number(value, field, positive=False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidScene("must be a number", field=field)
    if not np.isfinite(value):
        raise InvalidScene("must be finite", field=field)
    if positive and value <= 0:
        raise InvalidScene("must be positive", field=field)
    return float(value)


def _quad(values, field, positive=True):
    if not isinstance(values, list) or len(values) != 4:
        raise InvalidScene("must be a list of 4 numbers", field=field)
    return np.array([_number(v, "{}[{}]".format(field, i), positive)
                     for i, v in enumerate(values)])


def _point(k, values, field):
    dim = 2 if kplane.is_flat(k) else 3
    if not isinstance(values, list) or len(values) != dim:
        raise InvalidScene("must be a list of {} coordinates".format(dim),
                           field=field)
    p = np.array([_number(v, "{}[{}]".format(field, i))
                  for i, v in enumerate(values)])
    try:
        kplane.check_point(k, p, tol=PROJECTION_TOL)
    except PreconditionError as e:
        raise InvalidScene(str(e), field=field)
    return kplane.project_point(k, p)


def _unknown(d, allowed, field):
    extra = sorted(set(d) - allowed)
    if extra:
        name = extra[0] if field is None else "{}.{}".format(field, extra[0])
        raise InvalidScene("unknown field", field=name)


def check_scene(d):
    """Validate a scene dictionary field by field.

    :param d: Parsed JSON scene
    :type d: dict
    :return: The validated scene
    :rtype: QuadScene

    :raises InvalidScene: On the first offending field
    """
    if not isinstance(d, dict):
        raise InvalidScene("a scene must be a JSON object")
    _unknown(d, _TOP_KEYS, None)
    if "curvature" not in d:
        raise InvalidScene("missing", field="curvature")
    k = _number(d["curvature"], "curvature")
    if ("angular" in d) == ("vertices" in d):
        raise InvalidScene("exactly one of angular and vertices is required")

    tol, max_iter = DEFAULT_TOL, DEFAULT_MAX_ITER
    if "solver" in d:
        solver = d["solver"]
        if not isinstance(solver, dict):
            raise InvalidScene("must be an object", field="solver")
        _unknown(solver, _SOLVER_KEYS, "solver")
        if "tol" in solver:
            tol = _number(solver["tol"], "solver.tol", positive=True)
        if "max_iter" in solver:
            max_iter = solver["max_iter"]
            if isinstance(max_iter, bool) or not isinstance(max_iter, int) \
                    or max_iter <= 0:
                raise InvalidScene("must be a positive integer",
                                   field="solver.max_iter")

    alternate = None
    if "alternate_weights" in d:
        alternate = _quad(d["alternate_weights"], "alternate_weights")

    angular, vertices = None, None
    try:
        if "angular" in d:
            a = d["angular"]
            if not isinstance(a, dict):
                raise InvalidScene("must be an object", field="angular")
            _unknown(a, _ANGULAR_KEYS, "angular")
            for key in ("directions_deg", "lengths"):
                if key not in a:
                    raise InvalidScene("missing",
                                       field="angular." + key)
            directions = np.radians(_quad(a["directions_deg"],
                                          "angular.directions_deg",
                                          positive=False))
            lengths = _quad(a["lengths"], "angular.lengths")
            weights = _quad(a["weights"], "angular.weights") \
                if "weights" in a else None
            basepoint = _point(k, a["basepoint"], "angular.basepoint") \
                if "basepoint" in a else None
            angular = AngularConfig(k, directions, lengths, weights=weights,
                                    basepoint=basepoint)
        else:
            v = d["vertices"]
            if not isinstance(v, dict):
                raise InvalidScene("must be an object", field="vertices")
            _unknown(v, _VERTEX_KEYS, "vertices")
            if "points" not in v:
                raise InvalidScene("missing", field="vertices.points")
            points = v["points"]
            if not isinstance(points, list) or len(points) != 4:
                raise InvalidScene("must be a list of 4 points",
                                   field="vertices.points")
            points = [_point(k, p, "vertices.points[{}]".format(i))
                      for i, p in enumerate(points)]
            weights = _quad(v["weights"], "vertices.weights") \
                if "weights" in v else None
            vertices = VertexConfig(k, points, weights=weights)
    except InvalidScene:
        raise
    except PreconditionError as e:
        raise InvalidScene(str(e), field="angular" if "angular" in d
                           else "vertices")

    name = d.get("name")
    return QuadScene(k, angular=angular, vertices=vertices,
                     alternate_weights=alternate, tol=tol,
                     max_iter=max_iter, name=name)


def loads_scene(text):
    """Parse and validate a scene from a JSON string.

    :raises InvalidScene: On malformed JSON (with line and column) or an
        invalid field
    """
    try:
        d = json.loads(text)
    except ValueError as e:
        line = getattr(e, "lineno", None)
        col = getattr(e, "colno", None)
        raise InvalidScene("malformed JSON at line {}, column {}: {}".format(
            line, col, getattr(e, "msg", e)))
    scene = check_scene(d)
    scene.digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    return scene


def load_scene(path):
    """Read, parse and validate a scene file (UTF-8).

    :param path: Path of the scene file
    :type path: string
    :rtype: QuadScene

    :raises InvalidScene: If the file cannot be read or is invalid
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except (IOError, OSError, UnicodeDecodeError) as e:
        raise InvalidScene("cannot read scene file {}: {}".format(path, e))
    scene = loads_scene(text)
    logger.info("Loaded scene {} ({})".format(path, scene.digest[:12]))
    return scene


def angular_to_dict(cfg):
    """Scene dictionary describing an angular configuration.

    The output is accepted by :func:`check_scene`.
    """
    angular = {"directions_deg":
               np.degrees(cfg.directions + cfg.orientation).tolist(),
               "lengths": cfg.lengths.tolist()}
    if cfg.weights is not None:
        angular["weights"] = cfg.weights.tolist()
    if np.any(cfg.basepoint != kplane.origin(cfg.k)):
        angular["basepoint"] = cfg.basepoint.tolist()
    return {"curvature": cfg.k, "angular": angular}
