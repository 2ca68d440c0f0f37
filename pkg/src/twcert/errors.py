"""Error taxonomy shared by all modules.

Legitimate alternative outcomes (a dichotomy returning the other branch, an
honest failure report from a heuristic stage) are ordinary return values, not
exceptions.  Exceptions are reserved for violated preconditions and exceeded
resource caps.
"""


class InputError(ValueError):
    """A precondition on the inputs was violated."""


class CapacityError(RuntimeError):
    """The instance exceeds a configured exact-computation cap."""

    def __init__(self, message, attachment=None):
        super().__init__(message)
        self.attachment = attachment


class InternalConsistencyError(AssertionError):
    """A validated object failed a property it provably must satisfy."""
