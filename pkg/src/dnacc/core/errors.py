from typing import Optional


class DnaccError(Exception):
    """Base exception for dnacc."""
    exit_code = 1


# ─── Input errors (exit 2) ──────────────────────────────────────────────────

class InputError(DnaccError):
    """Raised when an input file or value cannot be turned into a domain object."""
    exit_code = 2


class ParseError(InputError):
    """Raised when a JSON or matrix file is malformed."""
    pass


class InvalidBitVector(InputError):
    """Raised when a bit string or bit value does not fit its length."""
    pass


class WrongCount(InputError):
    """Raised when a message does not hold exactly M strands."""
    pass


class LengthMismatch(InputError):
    """Raised when an index-field or data-field has the wrong bit length."""
    pass


class DuplicateIndex(InputError):
    """Raised when two strands of a message share an index-field."""
    pass


class DuplicateData(InputError):
    """Raised when data-fields that must be distinct repeat."""
    pass


# ─── Parameter errors (exit 3) ──────────────────────────────────────────────

class ParameterError(DnaccError):
    """Raised when parameters are out of range or inconsistent."""
    exit_code = 3


class InvalidParams(ParameterError):
    pass


class ParamMismatch(ParameterError):
    """Raised when two objects are compared under different parameters."""
    pass


class SizeMismatch(ParameterError):
    pass


class TooFewCodewords(ParameterError):
    pass


class NotPowerOfTwo(ParameterError):
    pass


class OutOfRange(ParameterError):
    pass


class UnsupportedD(ParameterError):
    pass


class InvalidInner(ParameterError):
    """Raised when an inner code does not fit a coset construction."""
    pass


class NotLinear(ParameterError):
    """Raised when a word set is not closed under addition."""
    pass


class OverlapWindow(ParameterError):
    pass


class EmptySpace(ParameterError):
    """Raised when the distinct-data space is empty."""
    pass


class InvalidCode(ParameterError):
    """Raised when rows violate the index-distance requirement."""
    pass


# ─── Oracle / resource / precondition errors ───────────────────────────────

class TheoremDiscrepancy(DnaccError):
    """Raised when brute force contradicts a guaranteed distance verdict."""
    exit_code = 4


class BudgetExceeded(DnaccError):
    """Raised when an enumeration or search would exceed its cap."""
    exit_code = 5

    def __init__(self, what: str, required: int, cap: Optional[int]):
        self.what = what
        self.required = required
        self.cap = cap
        super().__init__(f"{what}: requires {required} but the cap is {cap}")


class PreconditionError(DnaccError):
    """Raised when an operation is invoked outside the regime it is defined for."""
    exit_code = 6


class UnsupportedEd(PreconditionError):
    """Raised when a distance-based criterion is asked for e_d > 0."""
    pass


class AmbiguousMajority(PreconditionError):
    """Raised when the plurality decoder meets a tie (an out-of-model pool)."""
    pass
