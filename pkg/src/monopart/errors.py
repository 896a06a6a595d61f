"""Exception types shared across the package."""


class MonoPartError(Exception):
    """Base class for all package errors."""


class CapExceeded(MonoPartError):
    """An exact routine was asked to run above its size cap."""


class PreconditionViolated(MonoPartError):
    """The input does not satisfy the hypothesis of the routine."""


class InternalContradiction(MonoPartError):
    """A guaranteed object was not found.

    Raised only when the inputs satisfy every hypothesis, so this always
    signals a bug (or a counterexample to the underlying theorem).
    """


class InvalidParams(MonoPartError, ValueError):
    """Bad parameters for a generator or helper."""


class GenerationFailed(MonoPartError):
    """A constrained random generator ran out of retries."""


class GraphFormatError(MonoPartError, ValueError):
    """Malformed graph file."""
