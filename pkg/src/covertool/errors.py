"""Exception hierarchy shared by all covertool modules.

The CLI maps these onto exit codes: FindingError -> 1, ArgumentError and
LabelingError -> 2, ResourceLimitError -> 3.
"""


class CovertoolError(Exception):
    """Base class for all errors raised by covertool."""


class ArgumentError(CovertoolError):
    """Bad input: malformed file, out-of-range index, violated precondition."""


class LabelingError(ArgumentError):
    """A graph operation required a complete (x_i, y_i) pairing and none was given."""


class ResourceLimitError(CovertoolError):
    """A configurable enumeration/computation cap was exceeded.

    Carries enough context to re-run with a larger cap.
    """

    def __init__(self, message, *, cap=None, reached=None):
        super().__init__(message)
        self.cap = cap
        self.reached = reached


class FindingError(CovertoolError):
    """A mathematical expectation failed; the payload is a potential counterexample.

    Raised only where a computation is documented to surface such events
    instead of swallowing them (e.g. a prefix colon of a cover-ideal power
    that is not generated by variables).
    """

    def __init__(self, message, *, witness=None):
        super().__init__(message)
        self.witness = witness
