"""
Interval-valued intuitionistic fuzzy numbers
Exact representation, validation and derived statistics
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple, Union

from .errors import CapacityExceeded, IntervalInverted, Malformed, OutOfUnit

Rational = Fraction
RationalLike = Union[Fraction, int, str]

FIELDS = ("mu_lo", "mu_hi", "nu_lo", "nu_hi")

_DECIMAL = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?")
_FRACTION = re.compile(r"[+-]?\d+/\d+")


def parse_rational(text: str) -> Fraction:
    """Parse a decimal literal (exponent allowed), a fraction or an integer exactly"""
    if not isinstance(text, str):
        raise Malformed(text)
    candidate = text.strip()
    if _DECIMAL.fullmatch(candidate) or _FRACTION.fullmatch(candidate):
        try:
            return Fraction(candidate)
        except ZeroDivisionError as e:
            raise Malformed(text, f"zero denominator: {text!r}") from e
    raise Malformed(text)


def format_rational(value: Fraction) -> str:
    """Canonical text: 'p/q', or 'p' for integers"""
    return str(Fraction(value))


def approx(value: Fraction, digits: int = 4) -> str:
    """Decimal approximation for display only"""
    return f"{float(value):.{digits}f}"


def as_rational(value: RationalLike, field: str = "value") -> Fraction:
    """Coerce an exact input to Fraction; floats are refused"""
    if isinstance(value, bool):
        raise Malformed(value, f"{field}: booleans are not degrees")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise Malformed(value, f"{field}: expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class IVIFN:
    """An interval-valued intuitionistic fuzzy number <[mu_lo, mu_hi], [nu_lo, nu_hi]>"""

    mu_lo: Fraction
    mu_hi: Fraction
    nu_lo: Fraction
    nu_hi: Fraction

    def __post_init__(self):
        for name in FIELDS:
            object.__setattr__(self, name, as_rational(getattr(self, name), name))

        for name in FIELDS:
            value = getattr(self, name)
            if value < 0 or value > 1:
                raise OutOfUnit(name, value, "degree outside [0, 1]")

        if self.mu_lo > self.mu_hi:
            raise IntervalInverted("mu_lo", self.mu_lo, f"exceeds mu_hi={self.mu_hi}")
        if self.nu_lo > self.nu_hi:
            raise IntervalInverted("nu_lo", self.nu_lo, f"exceeds nu_hi={self.nu_hi}")
        if self.mu_hi + self.nu_hi > 1:
            raise CapacityExceeded(
                "nu_hi", self.nu_hi, f"mu_hi + nu_hi = {self.mu_hi + self.nu_hi} > 1"
            )

    def __str__(self):
        mu = f"[{self.mu_lo},{self.mu_hi}]"
        nu = f"[{self.nu_lo},{self.nu_hi}]"
        return f"<{mu},{nu}>"

    def as_tuple(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.mu_lo, self.mu_hi, self.nu_lo, self.nu_hi)

    def to_dict(self) -> Dict[str, str]:
        return {name: format_rational(getattr(self, name)) for name in FIELDS}


def make_ivifn(
    mu_lo: RationalLike, mu_hi: RationalLike, nu_lo: RationalLike, nu_hi: RationalLike
) -> IVIFN:
    """Validate and build an IVIFN"""
    return IVIFN(mu_lo, mu_hi, nu_lo, nu_hi)


def ivifn_from_dict(data: Dict[str, RationalLike]) -> IVIFN:
    """Build an IVIFN from a mapping with the four field names"""
    if not isinstance(data, dict):
        raise Malformed(data, f"expected an object with {', '.join(FIELDS)}, got {data!r}")
    missing = [name for name in FIELDS if name not in data]
    if missing:
        raise Malformed(data, f"missing field(s): {', '.join(missing)}")
    return make_ivifn(*(data[name] for name in FIELDS))


BOTTOM = IVIFN(Fraction(0), Fraction(0), Fraction(1), Fraction(1))
TOP = IVIFN(Fraction(1), Fraction(1), Fraction(0), Fraction(0))


@dataclass(frozen=True)
class StatVector:
    """Score, accuracy, entropies, uncertainty indices and indeterminacy interval"""

    s: Fraction
    h: Fraction
    e1: Fraction
    e2: Fraction
    e3: Fraction
    t: Fraction
    g: Fraction
    pi_lo: Fraction
    pi_hi: Fraction

    def to_dict(self) -> Dict[str, str]:
        return {
            "S": format_rational(self.s),
            "H": format_rational(self.h),
            "E1": format_rational(self.e1),
            "E2": format_rational(self.e2),
            "E3": format_rational(self.e3),
            "T": format_rational(self.t),
            "G": format_rational(self.g),
            "pi": [format_rational(self.pi_lo), format_rational(self.pi_hi)],
        }


def stats(a: IVIFN) -> StatVector:
    """All derived statistics of an IVIFN, exactly"""
    mu_mid = (a.mu_lo + a.mu_hi) / 2
    nu_mid = (a.nu_lo + a.nu_hi) / 2
    mu_width = a.mu_hi - a.mu_lo
    nu_width = a.nu_hi - a.nu_lo

    return StatVector(
        s=mu_mid - nu_mid,
        h=mu_mid + nu_mid,
        e1=(1 - a.mu_lo - a.mu_hi) / 2 + (1 - a.nu_lo - a.nu_hi) / 2,
        e2=(mu_width + nu_width) / 2,
        e3=mu_width,
        t=mu_width - nu_width,
        g=mu_width + nu_width,
        pi_lo=1 - a.mu_hi - a.nu_hi,
        pi_hi=1 - a.mu_lo - a.nu_lo,
    )


def score(a: IVIFN) -> Fraction:
    return (a.mu_lo + a.mu_hi - a.nu_lo - a.nu_hi) / 2


def accuracy(a: IVIFN) -> Fraction:
    return (a.mu_lo + a.mu_hi + a.nu_lo + a.nu_hi) / 2


def indeterminacy(a: IVIFN) -> Tuple[Fraction, Fraction]:
    """The hesitation interval [1 - mu_hi - nu_hi, 1 - mu_lo - nu_lo]"""
    return (1 - a.mu_hi - a.nu_hi, 1 - a.mu_lo - a.nu_lo)
