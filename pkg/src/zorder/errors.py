"""Exception hierarchy.

Two families: :class:`InputError` for bad arguments or files (a ``ValueError``)
and :class:`NumericalError` for failures of a numerical procedure on valid
input (an ``ArithmeticError``).  The command-line front end maps them to
different exit codes.
"""


class ZOrderError(Exception):
    """Base class for every error raised by this package."""


class InputError(ZOrderError, ValueError):
    """Invalid argument, configuration, or file content."""


class NumericalError(ZOrderError, ArithmeticError):
    """A numerical procedure could not produce a trustworthy result."""


class ZeroZWithPositiveSupport(InputError):
    pass


class OutsideROC(InputError):
    pass


class UnitCircleOutsideROC(OutsideROC):
    pass


class NonpositiveZ(InputError):
    pass


class EmptyCommonSupport(InputError):
    pass


class InvalidFamilyParameters(InputError):
    pass


class UnknownItem(InputError):
    pass


class PreconditionError(InputError):
    """The caller asked for a check whose stated precondition is false."""


class NearPoleEvaluation(NumericalError):
    pass


class RootFindingDivergence(NumericalError):
    pass


class DenominatorUnderflow(NumericalError):
    pass


class ZeroPrefixMass(DenominatorUnderflow):
    pass


class QuadratureNonconvergence(NumericalError):
    pass
