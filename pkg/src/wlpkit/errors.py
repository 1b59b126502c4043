"""Exception hierarchy; the CLI maps each class to an exit code."""


class WlpkitError(Exception):
    exit_code = 1


class InputError(WlpkitError, ValueError):
    """Malformed input text or document."""

    exit_code = 1


class PreconditionError(WlpkitError, ValueError):
    """An operation was called outside the hypotheses it is valid for."""

    exit_code = 2


class CrossCheckError(WlpkitError, AssertionError):
    """Two independent routes disagreed.  Always a bug."""

    exit_code = 3
