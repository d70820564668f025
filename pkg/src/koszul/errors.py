"""Exception hierarchy shared by every module.

The CLI maps each class onto an exit code, so new failure modes should
subclass one of these rather than ``Exception`` directly.
"""


class KoszulError(Exception):
    """Base class for all library errors."""

    exit_code = 4


class ParseError(KoszulError):
    """Input file or expression could not be parsed."""

    exit_code = 1


class VerificationError(KoszulError):
    """A structure failed a machine check (d^2 != 0, Leibniz, ...)."""

    exit_code = 2

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class PreconditionError(KoszulError):
    """Input is well formed but outside an operation's domain."""

    exit_code = 3


class WindowTooSmall(PreconditionError):
    """Requested degrees need data beyond the finite degree window."""


class InvariantBreach(KoszulError):
    """An internal consistency check failed; indicates a bug."""

    exit_code = 4
