import numpy as np
import pytest
from pyWFT.errors import PreconditionError
from pyWFT.inverse import balance_weights
from pyWFT.sweep import WeightSweep, parse_sweep, run_weight_sweep

EXAMPLE = np.radians([0, 120, 210, 260])


def test_parse_sweep():
    np.testing.assert_equal(parse_sweep("0.4"), [0.4])
    np.testing.assert_allclose(parse_sweep("0.1:0.5:5"),
                               [0.1, 0.2, 0.3, 0.4, 0.5])
    np.testing.assert_allclose(parse_sweep("sweep:0:0.8:9"),
                               np.linspace(0, 0.8, 9))
    np.testing.assert_equal(parse_sweep(" 0.25 "), [0.25])

    for spec in ["", "a", "0:1", "0:1:0", "0:1:x", "-0.1", "nan", "0:inf:3",
                 "1:2:3:4"]:
        with pytest.raises(PreconditionError):
            parse_sweep(spec)


def test_strategy():
    strategy = WeightSweep([0.1, 0.2])
    assert strategy.values == [0.1, 0.2]
    assert not strategy.retry.empty()


def test_run_weight_sweep():
    def objective(w_d):
        return balance_weights(EXAMPLE, 2.37, w_d)

    values = parse_sweep("0:0.8:9")
    rows = run_weight_sweep(objective, values, num_workers=3)
    assert len(rows) == 9
    np.testing.assert_allclose([w_d for w_d, _ in rows], values)
    weights = np.array([w for _, w in rows])
    assert np.all(np.diff(weights[:, 1]) > 0)
    assert np.all(np.diff(weights[:, 0]) < 0)
    assert np.all(np.diff(weights[:, 2]) < 0)
    np.testing.assert_allclose(np.sum(weights, axis=1), 2.37)
    np.testing.assert_allclose(rows[4][1], objective(0.4))

    rows = run_weight_sweep(objective, [0.4], num_workers=1)
    assert len(rows) == 1

    with pytest.raises(ValueError):
        run_weight_sweep(objective, values, num_workers=0)


if __name__ == '__main__':
    test_parse_sweep()
    test_strategy()
    test_run_weight_sweep()
