import numpy as np
import pytest
from pyWFT.errors import PreconditionError, WFTError
from pyWFT.utils import array_str, check_quad_values, normalize_angle, \
    vertex_index, wrap_angle


def test_wrap_angle():
    np.testing.assert_almost_equal(wrap_angle(3 * np.pi / 2), -np.pi / 2)
    np.testing.assert_almost_equal(wrap_angle(-np.pi / 2), -np.pi / 2)
    assert wrap_angle(np.pi) == np.pi
    assert wrap_angle(-np.pi) == np.pi

    X = np.random.RandomState(0).uniform(-20, 20, 100)
    W = wrap_angle(X)
    assert np.all(W > -np.pi) and np.all(W <= np.pi)
    np.testing.assert_almost_equal(np.sin(W), np.sin(X))
    np.testing.assert_almost_equal(np.cos(W), np.cos(X))


def test_normalize_angle():
    np.testing.assert_almost_equal(normalize_angle(-np.pi / 2),
                                   3 * np.pi / 2)
    assert normalize_angle(2 * np.pi) == 0.0
    X = normalize_angle(np.radians([-90, 0, 360, 725]))
    np.testing.assert_almost_equal(np.degrees(X), [270, 0, 0, 5])


def test_vertex_index():
    assert vertex_index("A") == 0
    assert vertex_index("d") == 3
    assert vertex_index(2) == 2
    with pytest.raises(PreconditionError):
        vertex_index("E")
    with pytest.raises(PreconditionError):
        vertex_index(4)


def test_check_quad_values():
    x = check_quad_values([1, 2, 3, 4], "lengths")
    np.testing.assert_equal(x, [1.0, 2.0, 3.0, 4.0])
    check_quad_values([0, 1, 1, 1], "weights", allow_zero=True)
    with pytest.raises(PreconditionError):
        check_quad_values([0, 1, 1, 1], "weights")
    with pytest.raises(PreconditionError):
        check_quad_values([1, 1, 1], "weights")
    with pytest.raises(PreconditionError):
        check_quad_values([1, np.nan, 1, 1], "weights")
    with pytest.raises(ValueError):  # The errors are ValueErrors
        check_quad_values(["a", 1, 1, 1], "weights")
    assert issubclass(PreconditionError, WFTError)


def test_array_str():
    assert "\n" not in array_str(np.arange(40.0))
    assert array_str([1e-20, 1.0]).startswith("[0.")


if __name__ == '__main__':
    test_wrap_angle()
    test_normalize_angle()
    test_vertex_index()
    test_check_quad_values()
    test_array_str()
