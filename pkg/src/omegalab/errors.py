"""Exception types shared across the library."""


class OmegalabError(Exception):
    """Base class for all library errors."""


class NotPrime(OmegalabError):
    """An integer or polynomial that must be prime/irreducible is not."""


class ReducibleModulus(OmegalabError):
    """A supplied field modulus is reducible over its base."""


class ConstantInput(OmegalabError):
    """A nonconstant polynomial was required."""


class IncompatibleLevels(OmegalabError):
    """Field elements live at levels with no stored compositum."""


class IncompatibleRing(OmegalabError):
    """A skew polynomial cannot act on the given ring element."""


class NotCoprime(OmegalabError):
    """Automorphism semantics requested for a non-unit residue."""


class RootMismatch(OmegalabError):
    """The supplied field element is not a root of the polynomial."""


class PrecisionLoss(OmegalabError):
    """A truncation cannot be certified at the requested precision."""


class IdentityViolation(OmegalabError):
    """A verified identity has a defect above the certified noise floor."""


class ReconstructionFailure(OmegalabError):
    """A Laurent coefficient did not stabilize to an element of K."""


class RouteMismatch(OmegalabError):
    """Two independent computations of the same quantity disagree."""


class CongruenceViolation(OmegalabError):
    """A congruence identity fails modulo some prime."""


class NonInvertibleDenominator(OmegalabError):
    """A denominator is not invertible modulo the given prime."""


class DivergentPoint(OmegalabError):
    """Evaluation requested at a point where the series diverges."""


class InconclusiveAtPrecision(OmegalabError):
    """A nonzero witness could not be certified at working precision."""
