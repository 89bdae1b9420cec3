"""
.. module:: sweep
   :synopsis: Concurrent evaluation of weights along a plasticity line

.. moduleauthor:: pyWFT developers

:Module: sweep
:Author: pyWFT developers
"""

import logging

import numpy as np
from poap.controller import BasicWorkerThread, ThreadController
from poap.strategy import BaseStrategy, RetryStrategy

from pyWFT.errors import PreconditionError
from pyWFT.utils import array_str

# Get module-level logger
logger = logging.getLogger(__name__)


def parse_sweep(spec):
    """Parse a sweep given as "start:stop:num" or a single value.

    :param spec: Sweep specification
    :type spec: string
    :return: The values of w_D
    :rtype: numpy.array

    :raises PreconditionError: On malformed input
    """
    spec = str(spec).strip()
    if spec.startswith("sweep:"):
        spec = spec[len("sweep:"):]
    parts = spec.split(":")
    try:
        if len(parts) == 1:
            values = np.array([float(parts[0])])
        elif len(parts) == 3:
            num = int(parts[2])
            if num <= 0:
                raise PreconditionError("sweep needs a positive count")
            values = np.linspace(float(parts[0]), float(parts[1]), num)
        else:
            raise PreconditionError("sweep must be start:stop:num")
    except ValueError:
        raise PreconditionError("cannot parse w_D sweep {!r}".format(spec))
    if not np.all(np.isfinite(values)) or np.any(values < 0):
        raise PreconditionError("w_D values must be finite and non-negative")
    return values


class WeightSweep(BaseStrategy):
    """Evaluate a fixed list of w_D values using all workers.

    :param values: Values of w_D to evaluate
    :type values: list or numpy.array
    """
    def __init__(self, values):
        self.values = [float(v) for v in values]
        self.retry = RetryStrategy()
        for w_d in self.values:
            self.retry.rput(self.propose_eval(w_d))

    def propose_action(self):
        """Propose an action based on outstanding points."""
        if not self.retry.empty():
            return self.retry.get()
        elif self.retry.num_eval_outstanding == 0:
            return self.propose_terminate()


def run_weight_sweep(objective, values, num_workers=4):
    """Evaluate objective(w_D) for all values with a pool of threads.

    :param objective: Function mapping w_D to the four weights
    :type objective: callable
    :param values: Values of w_D
    :type values: numpy.array
    :param num_workers: Number of worker threads
    :type num_workers: int
    :return: Rows (w_D, weights) sorted by w_D
    :rtype: list of tuple
    """
    if not (isinstance(num_workers, int) and num_workers > 0):
        raise ValueError("num_workers must be a positive integer")
    controller = ThreadController()
    controller.strategy = WeightSweep(values)
    for _ in range(num_workers):
        controller.launch_worker(BasicWorkerThread(controller, objective))
    controller.run(merit=lambda r: r.params[0])

    rows = sorted(((float(r.params[0]), np.asarray(r.value))
                   for r in controller.fevals if r.is_completed),
                  key=lambda row: row[0])
    for w_d, weights in rows:
        logger.info("w_D = {:.6g}: weights {}".format(w_d,
                                                       array_str(weights)))
    return rows
