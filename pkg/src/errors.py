"""
Exception hierarchy for the IVIFN lattice library
"""

from typing import Any, Optional


class IVIFNError(ValueError):
    """Root of every error raised by the library"""


class ValidationError(IVIFNError):
    """An IVIFN invariant does not hold"""

    def __init__(self, field: str, value: Any, message: str):
        super().__init__(f"{field}: {message} (got {value})")
        self.field = field
        self.value = value


class OutOfUnit(ValidationError):
    """A bound lies outside [0, 1]"""


class IntervalInverted(ValidationError):
    """Lower bound exceeds upper bound"""


class CapacityExceeded(ValidationError):
    """mu_hi + nu_hi > 1"""


class Malformed(IVIFNError):
    """Input text or document cannot be parsed"""

    def __init__(self, text: Any, message: Optional[str] = None):
        super().__init__(message or f"malformed input: {text!r}")
        self.text = text


class Infeasible(IVIFNError):
    """Statistics do not describe any IVIFN"""

    def __init__(self, condition: str, message: Optional[str] = None):
        super().__init__(message or f"infeasible statistics: {condition} violated")
        self.condition = condition


class EmptyFamily(IVIFNError):
    """An operation that needs a nonempty family got an empty one"""


class DuplicateLabel(IVIFNError):
    """A label appears more than once"""

    def __init__(self, label: str):
        super().__init__(f"duplicate label: {label!r}")
        self.label = label


class UnknownOrder(IVIFNError):
    """No ranking principle is registered under the requested name"""
