from pyWFT.experimental_design import ExperimentalDesign, ArcLengths, \
    DiagonalDirections, InteriorDirections
from pyWFT.quadrilateral import AngularConfig, INTERIOR, ON_DIAGONAL_BD, \
    convexity_check
import numpy as np
import pytest


def test_interior_directions():
    design = InteriorDirections(num_pts=50, random_state=0)
    X = design.generate_points()
    assert (isinstance(design, ExperimentalDesign))
    assert (np.all(X.shape == (50, 4)))
    assert (design.num_pts == 50)
    assert (design.dim == 4)
    np.testing.assert_equal(X[:, 0], np.zeros(50))
    assert (np.all(np.diff(X, axis=1) > 0))
    for t in X:
        assert convexity_check(AngularConfig(0, t, np.ones(4))) == INTERIOR

    # Same seed, same design
    Y = InteriorDirections(num_pts=50, random_state=0).generate_points()
    np.testing.assert_equal(X, Y)

    X = InteriorDirections(num_pts=8, criterion='c',
                           random_state=1).generate_points()
    assert (np.all(X.shape == (8, 4)))

    with pytest.raises(ValueError):
        InteriorDirections(num_pts=0)
    with pytest.raises(ValueError):
        InteriorDirections(num_pts=5, min_gap=1.0, max_gap=0.5)


def test_diagonal_directions():
    design = DiagonalDirections(num_pts=20, random_state=2)
    X = design.generate_points()
    assert (np.all(X.shape == (20, 4)))
    np.testing.assert_allclose(X[:, 3] - X[:, 1], np.pi)
    for t in X:
        assert convexity_check(AngularConfig(0, t, np.ones(4))) == \
            ON_DIAGONAL_BD


def test_arc_lengths():
    design = ArcLengths(num_pts=10, low=0.1, high=0.5, random_state=3)
    X = design.generate_points()
    assert (np.all(X.shape == (10, 4)))
    assert (X.min() >= 0.1 and X.max() <= 0.5)

    with pytest.raises(ValueError):  # This should raise an exception
        ArcLengths(num_pts=10, low=0.5, high=0.1)


if __name__ == '__main__':
    test_interior_directions()
    test_diagonal_directions()
    test_arc_lengths()
