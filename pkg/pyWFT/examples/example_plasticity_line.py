"""
.. module:: example_plasticity_line
  :synopsis: Plasticity line of a quadrilateral and a concurrent w_D sweep
.. moduleauthor:: pyWFT developers
"""

from pyWFT.inverse import balance_weights, plasticity_line, \
    plasticity_line_closed_form, sign_report
from pyWFT.quadrilateral import AngularConfig
from pyWFT.sweep import run_weight_sweep

import numpy as np
import os.path
import logging


def example_plasticity_line():
    if not os.path.exists("./logfiles"):
        os.makedirs("logfiles")
    if os.path.exists("./logfiles/example_plasticity_line.log"):
        os.remove("./logfiles/example_plasticity_line.log")
    logging.basicConfig(filename="./logfiles/example_plasticity_line.log",
                        level=logging.INFO)

    budget = 2.37
    num_threads = 4
    cfg = AngularConfig(0.0, np.radians([0, 120, 210, 260]),
                        [5, 7.5, 5, 10])

    line = plasticity_line(cfg, budget)
    closed = plasticity_line_closed_form(cfg, budget)
    print("Slopes a: {}".format(np.array_str(line.a, precision=5)))
    print("Intercepts b: {}".format(np.array_str(line.b, precision=5)))
    print("Closed form differs by {:.2e}".format(
        np.max(np.abs(line.a - closed.a))))
    print("Positive weights for w_D in {}".format(line.positivity_interval))
    print("Plasticity principle holds: {}".format(
        sign_report(line)["principle_holds"]))

    # Evaluate the line with a pool of threads
    w_values = np.linspace(0.0, 0.8, 9)
    rows = run_weight_sweep(lambda w_d: balance_weights(cfg, budget, w_d),
                            w_values, num_workers=num_threads)
    print("\nw_D     w_A     w_B     w_C")
    for w_d, weights in rows:
        print("{:.3f}   {:.4f}  {:.4f}  {:.4f}".format(w_d, *weights[:3]))


if __name__ == '__main__':
    example_plasticity_line()
