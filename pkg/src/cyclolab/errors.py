"""Exception hierarchy.

Everything raised on purpose by this package derives from CycloLabError.
The CLI maps CycloLabError to exit code 2 and VerificationFailed to exit
code 3; a VerificationFailed means a mathematical consistency check did
not hold, which signals a bug rather than bad input.
"""


class CycloLabError(Exception):
    """Base class for all domain errors."""


class NotDivisible(CycloLabError):
    """Exact polynomial division left a remainder or a fractional coefficient."""


class ModulusMismatch(CycloLabError):
    """Two modular polynomials with different prime moduli were combined."""


class NotCoprime(CycloLabError):
    """An argument required to be coprime to the modulus is not."""


class PrimalityError(CycloLabError):
    """A number required to be prime is composite (or out of testable range)."""


class RamifiedPrime(CycloLabError):
    """The prime divides the conductor, so the requested operation is undefined."""


class FactorizationLimit(CycloLabError):
    """A required integer factorization exceeds the trial-division budget."""


class LimitExceeded(CycloLabError):
    """An input exceeds a configured size guard (conductor or sieve limit)."""


class SamePrime(CycloLabError):
    """Two prime powers that must involve distinct primes share one."""


class BoundExhausted(CycloLabError):
    """The prime scan ended before the witnesses covered the whole unit group.

    Attributes carry the partial state so callers can report how far the
    scan got: `witnesses` is the list of primes used, `covered` the number
    of unit-group elements reached, `group_order` the target.
    """

    def __init__(self, message, witnesses=(), covered=0, group_order=0):
        super().__init__(message)
        self.witnesses = tuple(witnesses)
        self.covered = covered
        self.group_order = group_order


class VerificationFailed(CycloLabError):
    """An internal mathematical check failed; this is a bug, never expected."""
