"""Exception types shared across the library."""


class AlgebraError(Exception):
    """Base class for every error raised by this package."""


class DomainError(AlgebraError, ValueError):
    """Input outside the documented domain of an operation."""


class RingMismatch(AlgebraError):
    """Operands belong to different rings (or to rings of different parameters)."""


class ShapeMismatch(AlgebraError):
    """Matrix dimensions are incompatible with the requested operation."""


class NotAUnit(AlgebraError):
    """Element has no two-sided multiplicative inverse in its ring."""

    def __init__(self, message: str, ring: str = ""):
        super().__init__(message if not ring else f"{message} (in {ring})")
        self.ring = ring


class NotInWeightSet(AlgebraError):
    """The requested size admits no vanishing sum of roots of unity."""


class OracleTooLarge(AlgebraError):
    """Brute-force enumeration would exceed the configured multiset bound."""


class HypothesisNotSatisfied(AlgebraError):
    """A stated hypothesis of a construction fails in the given ring.

    `hypothesis` holds a short machine-checkable name of the failing
    assumption, e.g. ``"omega^i - omega^j in U(R)"``.
    """

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        super().__init__(f"hypothesis not satisfied: {hypothesis}"
                         + (f" -- {detail}" if detail else ""))


class NotACyclicConjugator(AlgebraError):
    """The candidate unit does not conjugate u to omega^{-1} u."""


class InternalCheckFailed(AlgebraError):
    """An identity that must hold by construction failed; implementation bug."""
