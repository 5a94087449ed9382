"""Exception hierarchy shared by every codec and the CLI."""


class RiordanError(Exception):
    """Base class for all errors raised by this package."""


class InputError(RiordanError, ValueError):
    """Malformed or out-of-domain input (exit status 1 on the command line)."""


class NonPrimeModulusError(InputError):
    """A counting or bijection routine was asked to work modulo a composite."""

    def __init__(self, p):
        super().__init__(f"modulus p={p} is not prime; counting and bijections need a prime p")
        self.p = p


class ConsistencyError(RiordanError):
    """Two independent computations of the same quantity disagree.

    Never expected in practice; the CLI maps it to exit status 2.
    """
