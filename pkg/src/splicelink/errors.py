"""Shared base class for the domain errors raised by this package."""


class ComputationError(Exception):
    """Base class for expected computation failures.

    The command line interface maps every subclass to exit code 2 and
    prints the module-qualified error name on stderr.
    """
