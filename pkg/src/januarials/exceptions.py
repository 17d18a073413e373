"""Exception hierarchy shared by the library and the command-line front end."""


class JanuarialError(Exception):
    """Base class for errors raised by this package."""


class InvalidInputError(JanuarialError, ValueError):
    """The caller supplied data that violates a documented precondition."""


class InvariantViolation(JanuarialError, RuntimeError):
    """An internal consistency check failed.

    These indicate a bug (or corrupted input that slipped past validation),
    never an expected outcome; the CLI maps them to exit code 3.
    """
