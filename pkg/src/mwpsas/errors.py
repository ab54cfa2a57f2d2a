"""Exception hierarchy.

Everything raised on purpose derives from :class:`MwpsasError`, which the
command line maps to exit code 1.
"""


class MwpsasError(Exception):
    """Base class for domain errors."""


class CoverageError(MwpsasError):
    pass


class WeightError(MwpsasError):
    pass


class WeightOverflowError(WeightError, OverflowError):
    """A weight sum left the unsigned 64-bit range."""


class MachineCountError(MwpsasError):
    pass


class IdError(MwpsasError):
    pass


class PartitionError(MwpsasError):
    pass


class VariantError(MwpsasError):
    """An operation restricted to the M1 or N1 variant got another instance."""


class InternalInvariantError(MwpsasError):
    """A self-check inside a solver failed. Indicates a bug, not bad input."""


class PreconditionError(MwpsasError):
    pass


class Part3FormatError(MwpsasError):
    pass


class ParameterError(MwpsasError):
    pass


class FormatSyntaxError(MwpsasError):
    """Malformed text file. ``lineno`` is 1-based, or None for whole-file problems."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class DigestMismatchError(MwpsasError):
    pass
