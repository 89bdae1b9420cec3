"""
.. module:: cli
   :synopsis: Command-line front end

.. moduleauthor:: pyWFT developers

:Module: cli
:Author: pyWFT developers

Usage::

    pywft check --scene pyWFT/examples/plastic-quad.json
    pywft forward --scene square.json --text
    pywft inverse --scene plastic-quad.json --budget 2.37 --wd sweep 0:0.8:9
    pywft symmetrize --scene plastic-quad.json --class A --out-svg fig.svg
    pywft glue --scene sphere-quad.json --case mprime --k1 0.5 --k2 2

Exit codes: 0 success, 1 invalid input or precondition, 2 no convergence,
3 algebraic failure.
"""

import argparse
import json
import logging
import sys

import numpy as np

from pyWFT import __version__
from pyWFT.comparison import comparative_plasticity, glue_quad
from pyWFT.errors import AlgebraicFailure, InvalidScene, NoConvergence, \
    PreconditionError, WFTError
from pyWFT.forward import ABSORBED, WeiszfeldSolver, stationarity_residual
from pyWFT.inverse import balance_weights, diagonal_case, line_discrepancy, \
    plasticity_line, sign_report
from pyWFT.quadrilateral import NOT_INTERIOR, ON_BOTH_DIAGONALS, \
    ON_DIAGONAL_BD, convexity_check, extract_angular, realize_vertices
from pyWFT.scene import angular_to_dict, load_scene
from pyWFT.svg import write_svg
from pyWFT.sweep import parse_sweep, run_weight_sweep
from pyWFT.symmetrization import symmetrize

# Get module-level logger
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_NO_CONVERGENCE = 2
EXIT_ALGEBRAIC = 3

# Residual below this share of the total weight counts as approximately
# balanced
APPROX_RESIDUAL = 1e-2
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class _WarningCollector(logging.Handler):
    def __init__(self):
        logging.Handler.__init__(self, level=logging.WARNING)
        self.messages = []

    def emit(self, record):
        if record.levelno == logging.WARNING:
            self.messages.append(record.getMessage())


def sanitize(obj):
    """Plain JSON values: numpy scalars and arrays unwrapped, nan and
    infinities replaced by None."""
    if isinstance(obj, dict):
        return {str(k): sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [sanitize(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj) if np.isfinite(obj) else None
    return obj


class RunReport(object):
    """Everything a subcommand prints.

    :ivar command: Subcommand name
    :ivar argv: Arguments as given
    :ivar scene: Scene name and SHA-256 digest
    :ivar results: Subcommand results
    :ivar warnings: Warnings logged while running
    :ivar error: Error type and message, or None
    :ivar exit_status: Process exit code
    """
    def __init__(self, command, argv, scene):
        self.command = command
        self.argv = list(argv)
        self.scene = {"name": scene.name, "digest": scene.digest}
        self.results = {}
        self.warnings = []
        self.error = None
        self.exit_status = EXIT_OK

    def to_dict(self):
        return sanitize({"command": self.command, "argv": self.argv,
                         "scene": self.scene, "results": self.results,
                         "warnings": self.warnings, "error": self.error,
                         "exit_status": self.exit_status})

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2,
                          allow_nan=False)

    def to_text(self):
        lines = []
        _text_lines(self.to_dict(), 0, lines)
        return "\n".join(lines)


def _text_lines(value, depth, lines):
    pad = "  " * depth
    for key in sorted(value):
        item = value[key]
        if isinstance(item, dict) and item:
            lines.append("{}{}:".format(pad, key))
            _text_lines(item, depth + 1, lines)
        elif isinstance(item, list) and item and \
                any(isinstance(v, (dict, list)) for v in item):
            lines.append("{}{}:".format(pad, key))
            for v in item:
                if isinstance(v, dict):
                    lines.append("{}  -".format(pad))
                    _text_lines(v, depth + 2, lines)
                else:
                    lines.append("{}  - {}".format(pad, v))
        else:
            lines.append("{}{}: {}".format(pad, key, item))


def _solver(scene, args):
    tol = args.tol if args.tol is not None else scene.tol
    max_iter = args.max_iter if args.max_iter is not None else \
        scene.max_iter
    return WeiszfeldSolver(tol=tol, max_iter=max_iter)


def _solve(scene, args, report):
    vc = scene.vertices if scene.vertices is not None else \
        realize_vertices(scene.angular)
    if vc.weights is None:
        raise InvalidScene("weights are required", field="weights")
    try:
        result = _solver(scene, args).solve(vc)
    except NoConvergence as e:
        if e.result is not None:
            report.results["forward"] = e.result.to_dict()
        raise
    report.results["forward"] = result.to_dict()
    return vc, result


def _angular(scene, args, report):
    """Angular configuration at the scene's point, solving first for
    vertex scenes."""
    if scene.angular is not None:
        return scene.angular
    vc, result = _solve(scene, args, report)
    if result.status == ABSORBED:
        raise PreconditionError("the weighted point is absorbed at vertex "
                                "{}".format(result.vertex))
    return extract_angular(vc, result.point)


def _budget(scene, args):
    if args.budget is not None:
        return args.budget
    if scene.weights is not None:
        return float(np.sum(scene.weights))
    return 1.0


def _wd_values(tokens):
    if tokens and tokens[0] == "sweep":
        tokens = tokens[1:]
    if not tokens:
        raise PreconditionError("--wd needs a value or start:stop:num")
    return np.concatenate([parse_sweep(t) for t in tokens])


def _residual_verdict(residual, tol, total):
    if residual <= tol * max(1.0, total):
        return "pass"
    if residual <= APPROX_RESIDUAL * total:
        logger.warning("Weights are only approximately balanced, residual "
                       "{:.3e}".format(residual))
        return "warn"
    return "fail"


def cmd_check(scene, args, report):
    """Convexity, perimeter bound and stationarity of the given weights."""
    cfg = scene.angular if scene.angular is not None else scene.vertices
    ok, bound = cfg.perimeter_bound_check()
    checks = {"perimeter": {"ok": ok, "bound": bound}}
    if not ok:
        logger.warning("Perimeter bound 2*pi/sqrt(k) = {:.6g} is "
                       "violated".format(bound))
    tol = args.verdict_tol if args.verdict_tol is not None else scene.tol

    angular = scene.angular
    if angular is None and ok and scene.weights is not None:
        vc, result = _solve(scene, args, report)
        if result.status != ABSORBED:
            angular = extract_angular(vc, result.point)
        else:
            checks["convexity"] = NOT_INTERIOR
    if angular is not None:
        checks["convexity"] = convexity_check(angular)
    elif "convexity" not in checks:
        checks["convexity"] = None

    if angular is not None and angular.weights is not None:
        sums, residual = stationarity_residual(angular)
        checks["stationarity"] = {
            "sums": sums, "residual": residual,
            "verdict": _residual_verdict(residual, tol,
                                         float(np.sum(angular.weights)))}
    else:
        checks["stationarity"] = {"verdict": "skipped"}

    passed = bool(ok and checks["convexity"] not in (None, NOT_INTERIOR) and
                  checks["stationarity"]["verdict"] != "fail")
    checks["passed"] = passed
    report.results.update(checks)
    return EXIT_OK if passed else EXIT_PRECONDITION


def cmd_forward(scene, args, report):
    """Weighted Fermat-Torricelli point of the scene, with the angular
    configuration seen from it as a scene."""
    vc, result = _solve(scene, args, report)
    if result.status != ABSORBED:
        report.results["angular_scene"] = angular_to_dict(
            extract_angular(vc, result.point))
    return EXIT_OK


def cmd_inverse(scene, args, report):
    """Plasticity line of the scene's directions, with the diagonal line
    when the point lies on BD."""
    cfg = _angular(scene, args, report)
    c = _budget(scene, args)
    status = convexity_check(cfg)
    report.results["convexity"] = status
    report.results["budget"] = c
    if status == NOT_INTERIOR:
        raise PreconditionError("the point is not interior to the "
                                "quadrilateral")

    line = plasticity_line(cfg, c)
    report.results["plasticity_line"] = line.to_dict()
    report.results["closed_form_discrepancy"] = line_discrepancy(cfg, c)
    report.results["sign_report"] = sign_report(line)
    if status in (ON_DIAGONAL_BD, ON_BOTH_DIAGONALS):
        report.results["diagonal_line"] = diagonal_case(cfg, c).to_dict()

    if args.wd:
        rows = run_weight_sweep(lambda w_d: balance_weights(cfg, c, w_d),
                                _wd_values(args.wd),
                                num_workers=args.workers)
        report.results["weights"] = [{"w_D": w, "weights": weights}
                                     for w, weights in rows]
    return EXIT_OK


def cmd_symmetrize(scene, args, report):
    """Reflected tangent images and the parallelogram verdict."""
    cfg = _angular(scene, args, report)
    sym = symmetrize(cfg, klass=args.klass, tol=args.verdict_tol)
    report.results["parallelogram"] = sym.to_dict()
    if args.out_svg:
        try:
            write_svg(sym, args.out_svg, title=scene.name or "")
        except (IOError, OSError) as e:
            raise PreconditionError("cannot write {}: {}".format(
                args.out_svg, e))
        report.results["svg"] = args.out_svg
    return EXIT_OK


def cmd_glue(scene, args, report):
    """Glued comparison triangles and the change of the plasticity line."""
    cfg = _angular(scene, args, report)
    c = _budget(scene, args)
    spec, perturbed = glue_quad(cfg, args.case, args.k1, args.k2)
    report.results["glue"] = spec.to_dict()
    report.results["glued_scene"] = angular_to_dict(perturbed)
    report.results["comparison"] = comparative_plasticity(
        cfg, perturbed, c).to_dict()
    return EXIT_OK


COMMANDS = {"check": cmd_check, "forward": cmd_forward,
            "inverse": cmd_inverse, "symmetrize": cmd_symmetrize,
            "glue": cmd_glue}


def build_parser():
    """Argument parser with one sub-parser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scene", required=True,
                        help="scene file (JSON, UTF-8)")
    output = common.add_mutually_exclusive_group()
    output.add_argument("--json", dest="text", action="store_false",
                        default=False,
                        help="print the JSON report (default)")
    output.add_argument("--text", dest="text", action="store_true",
                        help="print a readable summary instead of JSON")
    common.add_argument("--tol", type=float, default=None,
                        help="solver tolerance, overrides the scene")
    common.add_argument("--max-iter", type=int, default=None,
                        help="solver iteration limit, overrides the scene")
    common.add_argument("--weights", choices=("primary", "alternate"),
                        default="primary", help="weight set of the scene")
    common.add_argument("--log-level", default="warning",
                        choices=("critical", "error", "warning", "info",
                                 "debug"))
    common.add_argument("--log-file", default=None,
                        help="log file, defaults to stderr")

    parser = argparse.ArgumentParser(
        prog="pywft", description="Weighted Fermat-Torricelli problems "
        "for quadrilaterals on K-planes.")
    parser.add_argument("--version", action="version",
                        version="%(prog)s " + __version__)
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("check", parents=[common], help="validate a scene")
    p.add_argument("--verdict-tol", type=float, default=None,
                   help="stationarity tolerance, defaults to the scene's "
                   "solver tolerance")
    sub.add_parser("forward", parents=[common],
                   help="find the weighted Fermat-Torricelli point")

    p = sub.add_parser("inverse", parents=[common],
                       help="weights making the point optimal")
    p.add_argument("--budget", type=float, default=None,
                   help="total weight, defaults to the scene's weight sum")
    p.add_argument("--wd", nargs="+", default=None,
                   help="w_D value, start:stop:num or sweep start:stop:num")
    p.add_argument("--workers", type=int, default=4,
                   help="threads evaluating a sweep")

    p = sub.add_parser("symmetrize", parents=[common],
                       help="reflect the tangent images into a parallelogram")
    p.add_argument("--class", dest="klass", default="auto",
                   choices=("A", "B", "a", "b", "auto", "direct"))
    p.add_argument("--verdict-tol", type=float, default=None,
                   help="parallelogram tolerance, defaults to 1e-9 times "
                   "the largest weight")
    p.add_argument("--out-svg", default=None, help="figure file")

    p = sub.add_parser("glue", parents=[common],
                       help="glue comparison triangles at the point")
    p.add_argument("--case", required=True,
                   choices=("mprime", "mdoubleprime"))
    p.add_argument("--k1", type=float, required=True)
    p.add_argument("--k2", type=float, required=True)
    p.add_argument("--budget", type=float, default=None)
    return parser


def _handler(args):
    if args.log_file:
        handler = logging.FileHandler(args.log_file, encoding="utf-8")
    else:
        handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(getattr(logging, args.log_level.upper()))
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    return handler


def _error(e):
    info = {"type": type(e).__name__, "message": str(e)}
    for key in ("field", "bound", "defect_range"):
        if getattr(e, key, None) is not None:
            info[key] = getattr(e, key)
    return info


def _exit_code(e):
    if isinstance(e, NoConvergence):
        return EXIT_NO_CONVERGENCE
    if isinstance(e, AlgebraicFailure):
        return EXIT_ALGEBRAIC
    return EXIT_PRECONDITION


def main(argv=None):
    """Run the command line.

    :param argv: Arguments, defaults to sys.argv[1:]
    :type argv: list of string
    :return: Exit code
    :rtype: int
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)

    package = logging.getLogger("pyWFT")
    level = getattr(logging, args.log_level.upper())
    old_level = package.level
    package.setLevel(min(level, logging.WARNING))
    handler = _handler(args)
    collector = _WarningCollector()
    package.addHandler(handler)
    package.addHandler(collector)
    try:
        try:
            scene = load_scene(args.scene).select_weights(args.weights)
        except WFTError as e:
            logger.error("Invalid scene: {}".format(e))
            return EXIT_PRECONDITION

        report = RunReport(args.command, argv, scene)
        try:
            report.exit_status = COMMANDS[args.command](scene, args, report)
        except WFTError as e:
            report.error = _error(e)
            report.exit_status = _exit_code(e)
            logger.error("{} failed: {}".format(args.command, e))
        report.warnings = collector.messages + report.warnings

        print(report.to_text() if args.text else report.to_json())
        return report.exit_status
    finally:
        package.removeHandler(handler)
        package.removeHandler(collector)
        package.setLevel(old_level)
        handler.close()


if __name__ == "__main__":
    sys.exit(main())
