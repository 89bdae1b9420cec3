"""
.. module:: errors
   :synopsis: Exceptions raised by pyWFT

.. moduleauthor:: pyWFT developers

:Module: errors
:Author: pyWFT developers
"""


class WFTError(ValueError):
    """Base class for all pyWFT errors.

    Derives from ValueError so code that guards against bad input with
    ``except ValueError`` keeps working.
    """
    pass


class PreconditionError(WFTError):
    """The input violates a precondition of the requested operation."""
    pass


class AlgebraicFailure(WFTError):
    """The input is valid but the requested algebraic object does not exist."""
    pass


class InvalidPoint(PreconditionError):
    pass


class InvalidScene(PreconditionError):
    """A scene file or scene dictionary failed validation.

    :param message: What is wrong
    :type message: string
    :param field: JSON path of the offending field, e.g. ``angular.lengths``
    :type field: string

    :ivar field: JSON path of the offending field (or None)
    """
    def __init__(self, message, field=None):
        if field is not None:
            message = "{}: {}".format(field, message)
        super(InvalidScene, self).__init__(message)
        self.field = field


class AntipodalPoints(PreconditionError):
    pass


class StepTooLong(PreconditionError):
    pass


class DegenerateArc(PreconditionError):
    pass


class TriangleInequalityViolated(PreconditionError):
    pass


class PerimeterTooLarge(PreconditionError):
    """The perimeter exceeds 2*pi/sqrt(k) on a sphere.

    :ivar bound: The perimeter bound 2*pi/sqrt(k)
    """
    def __init__(self, message, bound=None):
        super(PerimeterTooLarge, self).__init__(message)
        self.bound = bound


class DegenerateTriangle(PreconditionError):
    pass


class NotOnDiagonal(PreconditionError):
    pass


class NoConvergence(WFTError):
    """The forward solver ran out of iterations.

    :ivar result: Best iterate found, as an FTResult
    """
    def __init__(self, message, result=None):
        super(NoConvergence, self).__init__(message)
        self.result = result


class SingularSystem(AlgebraicFailure):
    pass


class NoClassApplicable(AlgebraicFailure):
    pass


class PatternMismatch(AlgebraicFailure):
    pass


class NoRoot(AlgebraicFailure):
    """The glued angle sum cannot be brought to 2*pi.

    :ivar defect_range: Angle sum defect at s=0 and at s=1
    """
    def __init__(self, message, defect_range=None):
        super(NoRoot, self).__init__(message)
        self.defect_range = defect_range
