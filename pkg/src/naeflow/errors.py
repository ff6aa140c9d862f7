"""Shared exception types."""


class PreconditionError(ValueError):
    """An operation was invoked on an input outside its documented domain."""


class FormatError(ValueError):
    """A file or JSON document does not match the expected format."""


class GadgetError(RuntimeError):
    """A gadget generator hit a structural situation it cannot repair.

    Raised instead of silently patching the construction, so that a broken
    assumption surfaces with diagnostics.
    """


class SolveTimeout(TimeoutError):
    """A solver exceeded its deadline."""
