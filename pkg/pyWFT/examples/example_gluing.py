"""
.. module:: example_gluing
  :synopsis: Glue comparison triangles and compare plasticity lines
.. moduleauthor:: pyWFT developers
"""

from pyWFT.comparison import comparative_plasticity, glue_quad
from pyWFT.scene import load_scene

import numpy as np
import os.path
import logging


def example_gluing():
    if not os.path.exists("./logfiles"):
        os.makedirs("logfiles")
    if os.path.exists("./logfiles/example_gluing.log"):
        os.remove("./logfiles/example_gluing.log")
    logging.basicConfig(filename="./logfiles/example_gluing.log",
                        level=logging.INFO)

    path = os.path.join(os.path.dirname(__file__), "sphere-quad.json")
    cfg = load_scene(path).angular
    budget = float(np.sum(cfg.weights))

    for case in ["MPrime", "MDoublePrime"]:
        spec, perturbed = glue_quad(cfg, case, 0.5, 2.0)
        report = comparative_plasticity(cfg, perturbed, budget)
        print("{}: s = {:.6f}, raw defect {:.3e}".format(
            case, spec.s, spec.raw_defect))
        print("  slope changes {} (sum {:.1e})".format(
            np.array_str(report.deltas, precision=5),
            np.sum(report.deltas)))


if __name__ == '__main__':
    example_gluing()
