"""
.. module:: example_forward_solve
  :synopsis: Recover a prescribed weighted point on the three K-planes
.. moduleauthor:: pyWFT developers
"""

from pyWFT.forward import WeiszfeldSolver
from pyWFT.inverse import balance_weights
from pyWFT.quadrilateral import AngularConfig, realize_vertices
from pyWFT import kplane

import numpy as np
import os.path
import logging


def example_forward_solve():
    if not os.path.exists("./logfiles"):
        os.makedirs("logfiles")
    if os.path.exists("./logfiles/example_forward_solve.log"):
        os.remove("./logfiles/example_forward_solve.log")
    logging.basicConfig(filename="./logfiles/example_forward_solve.log",
                        level=logging.INFO)

    directions = np.radians([0, 120, 210, 260])
    lengths = np.array([0.5, 0.75, 0.5, 1.0])
    weights = balance_weights(directions, 1.0, 0.2)
    solver = WeiszfeldSolver(tol=1e-12, max_iter=5000)

    for k in [-1.0, 0.0, 1.0]:
        cfg = AngularConfig(k, directions, lengths, weights=weights)
        vc = realize_vertices(cfg)
        result = solver.solve(vc)
        error = kplane.distance(k, result.point, cfg.basepoint)
        print("k = {:4.1f}: status {}, {} iterations, residual {:.2e}, "
              "distance to P {:.2e}".format(k, result.status,
                                            result.iterations,
                                            result.residual, error))


if __name__ == '__main__':
    example_forward_solve()
