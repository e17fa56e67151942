"""Shared exception types and the default work budget."""


class FriezeError(Exception):
    """Base class for all errors raised by this package."""


class NonPrimeCharacteristic(FriezeError):
    """Field characteristic is not a prime number."""


class ReducibleModulus(FriezeError):
    """Supplied extension modulus factors over the prime field."""


class SingularMatrix(FriezeError):
    """Attempt to invert a 2x2 matrix with determinant zero."""


class InvalidWidth(FriezeError):
    """Frieze width outside the supported range (w >= 1)."""


class OddN(FriezeError):
    """Operation requires an even number of points."""


class OddNWithSignFilter(OddN):
    """Sign-class filtering requested for an odd-length configuration."""


class NotLiftable(FriezeError):
    """Even-length configuration outside the plus class has no equal-determinant lift."""


class CriterionFails(FriezeError):
    """First row does not satisfy the -Id matrix criterion."""


class NonIntegralResult(FriezeError):
    """An exact division that must be integral left a remainder (implementation bug)."""


class BudgetExceeded(FriezeError):
    """Estimated work is above the configured budget."""


class DescriptorError(FriezeError):
    """Malformed field descriptor string."""


# Cap on elementary operations (matrix multiplications, configuration visits)
# accepted by the enumeration routines unless the caller overrides it.
DEFAULT_BUDGET = 10**8
