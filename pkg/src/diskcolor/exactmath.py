"""Exact arithmetic over the quadratic field Q[sqrt(3)].

Every coordinate that the geometric predicates touch is of the form
a + b*sqrt(3) with rational a, b.  Sums, differences, products and
quotients stay in this form, so sign tests and comparisons are exact:
no epsilons, no floating point anywhere near a decision.

Rationals are gmpy2.mpq when available (much faster), otherwise
fractions.Fraction.  Decimal strings are converted exactly.
"""
from __future__ import annotations

import math
from fractions import Fraction

try:
    from gmpy2 import mpq as _QImpl
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _QImpl = Fraction

_RATIONAL_TYPES = (int, Fraction, type(_QImpl(1)))


def as_rational(value):
    """Convert int / Fraction / decimal string to an exact rational.

    Floats are rejected: they carry binary rounding the caller never
    asked for.  Strings must be plain decimals such as "2", "-0.75",
    "1.08253" (an optional "a/b" fraction form is accepted too).
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(value, _RATIONAL_TYPES):
        return _QImpl(value) if not isinstance(value, int) else _QImpl(value, 1)
    if isinstance(value, float):
        raise TypeError(
            "floats are not accepted (binary rounding); pass a decimal string"
        )
    if isinstance(value, str):
        s = value.strip()
        if "/" in s:
            num, den = s.split("/", 1)
            return _QImpl(int(num), int(den))
        sign = 1
        if s.startswith(("+", "-")):
            if s[0] == "-":
                sign = -1
            s = s[1:]
        if "." in s:
            int_part, frac_part = s.split(".", 1)
            int_part = int_part or "0"
            if not frac_part.isdigit() or not int_part.isdigit():
                raise ValueError(f"not a decimal string: {value!r}")
            scale = 10 ** len(frac_part)
            return _QImpl(sign * (int(int_part) * scale + int(frac_part)), scale)
        if not s.isdigit():
            raise ValueError(f"not a decimal string: {value!r}")
        return _QImpl(sign * int(s), 1)
    raise TypeError(f"cannot convert {type(value).__name__} to exact rational")


def _rat_num_den(r):
    if isinstance(r, Fraction):
        return r.numerator, r.denominator
    return int(r.numerator), int(r.denominator)


class ExactScalar:
    """A number a + b*sqrt(3) with exact rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = as_rational(a)
        self.b = as_rational(b)

    # -- construction helpers ------------------------------------------

    @staticmethod
    def sqrt3(coeff=1) -> "ExactScalar":
        return ExactScalar(0, coeff)

    @staticmethod
    def _wrap(a, b) -> "ExactScalar":
        out = ExactScalar.__new__(ExactScalar)
        out.a = a
        out.b = b
        return out

    # -- ring / field operations ---------------------------------------

    def __add__(self, other) -> "ExactScalar":
        other = as_scalar(other)
        return ExactScalar._wrap(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other) -> "ExactScalar":
        other = as_scalar(other)
        return ExactScalar._wrap(self.a - other.a, self.b - other.b)

    def __rsub__(self, other) -> "ExactScalar":
        return as_scalar(other).__sub__(self)

    def __mul__(self, other) -> "ExactScalar":
        other = as_scalar(other)
        return ExactScalar._wrap(
            self.a * other.a + 3 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ExactScalar":
        other = as_scalar(other)
        # 1/(a + b*sqrt3) = (a - b*sqrt3) / (a^2 - 3 b^2)
        norm = other.a * other.a - 3 * other.b * other.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q[sqrt(3)]")
        return self * ExactScalar._wrap(other.a / norm, -other.b / norm)

    def __rtruediv__(self, other) -> "ExactScalar":
        return as_scalar(other).__truediv__(self)

    def __neg__(self) -> "ExactScalar":
        return ExactScalar._wrap(-self.a, -self.b)

    def __abs__(self) -> "ExactScalar":
        return -self if self.sign() < 0 else self

    # -- exact sign and order ------------------------------------------

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(3), by rational case analysis."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        # opposite signs: compare a^2 with 3 b^2, outcome carries sa's sign
        diff = self.a * self.a - 3 * self.b * self.b
        if diff == 0:
            return 0  # unreachable: sqrt(3) is irrational
        return sa if diff > 0 else sb

    def __eq__(self, other) -> bool:
        if isinstance(other, (ExactScalar, int, str, Fraction)) or isinstance(
            other, _RATIONAL_TYPES
        ):
            other = as_scalar(other)
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((Fraction(*_rat_num_den(self.a)), Fraction(*_rat_num_den(self.b))))

    def __lt__(self, other) -> bool:
        return (self - as_scalar(other)).sign() < 0

    def __le__(self, other) -> bool:
        return (self - as_scalar(other)).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - as_scalar(other)).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - as_scalar(other)).sign() >= 0

    # -- rounding -------------------------------------------------------

    def is_rational(self) -> bool:
        return self.b == 0

    def floor(self) -> int:
        """Exact floor, correct for any magnitude."""
        if self.b == 0:
            num, den = _rat_num_den(self.a)
            return num // den
        bn, bd = _rat_num_den(self.b)
        bits = 64 + max(abs(bn), bd).bit_length()
        lo3, hi3 = _sqrt3_bounds(bits)
        if self.b > 0:
            approx = self.a + self.b * lo3
        else:
            approx = self.a + self.b * hi3
        num, den = _rat_num_den(approx)
        n = num // den
        # exact fixup (at most a step or two)
        while self >= n + 1:
            n += 1
        while self < n:
            n -= 1
        return n

    def ceil(self) -> int:
        return -((-self).floor())

    def __float__(self) -> float:
        an, ad = _rat_num_den(self.a)
        bn, bd = _rat_num_den(self.b)
        try:
            return an / ad + (bn / bd) * math.sqrt(3.0)
        except OverflowError:  # pragma: no cover - astronomically large values
            lo, hi = self.approx_interval(80)
            n, d = _rat_num_den(lo)
            return n / d

    def approx_interval(self, bits=80):
        """Rational interval [lo, hi] containing the value, width ~2^-bits."""
        lo3, hi3 = _sqrt3_bounds(bits + 8)
        if self.b >= 0:
            return self.a + self.b * lo3, self.a + self.b * hi3
        return self.a + self.b * hi3, self.a + self.b * lo3

    def __repr__(self):
        if self.b == 0:
            return f"ExactScalar({self.a})"
        return f"ExactScalar({self.a} + {self.b}*sqrt3)"


def as_scalar(value) -> ExactScalar:
    """Coerce int / rational / decimal string / ExactScalar to ExactScalar."""
    if isinstance(value, ExactScalar):
        return value
    return ExactScalar(as_rational(value), 0)


def compare(a, b) -> int:
    """Exact three-way comparison: -1, 0 or 1."""
    return (as_scalar(a) - as_scalar(b)).sign()


_SQRT3_CACHE = {}


def _sqrt3_bounds(bits):
    """Rational lo <= sqrt(3) <= hi with hi - lo = 2^-bits."""
    cached = _SQRT3_CACHE.get(bits)
    if cached is not None:
        return cached
    scale = 1 << bits
    root = math.isqrt(3 * scale * scale)
    lo = _QImpl(root, scale)
    hi = _QImpl(root + 1, scale)
    _SQRT3_CACHE[bits] = (lo, hi)
    return lo, hi


def sqrt_interval(x: ExactScalar, rel_bits=40):
    """Rational interval [lo, hi] containing sqrt(x), for x >= 0.

    Used only for *reporting* irrational roots (the value sqrt(x) leaves
    Q[sqrt(3)]); every decision that matters compares squares instead.
    """
    if x.sign() < 0:
        raise ValueError("sqrt of a negative value")
    xlo, xhi = x.approx_interval(2 * rel_bits + 16)
    if xlo < 0:
        xlo = as_rational(0)
    scale = 1 << rel_bits
    ln, ld = _rat_num_den(xlo)
    hn, hd = _rat_num_den(xhi)
    lo = _QImpl(math.isqrt((ln * scale * scale) // ld), scale)
    hi = _QImpl(math.isqrt((hn * scale * scale) // hd) + 1, scale)
    return lo, hi


def sqrt_float(x: ExactScalar) -> float:
    """float approximation of sqrt(x) with error far below 1e-9."""
    lo, hi = sqrt_interval(x, rel_bits=48)
    n, d = _rat_num_den(lo + hi)
    return n / (2 * d)


def rational_to_decimal(r, max_digits=40) -> str:
    """Exact decimal string for a rational whose denominator is 2^a * 5^b."""
    num, den = _rat_num_den(r)
    sign = "-" if num < 0 else ""
    num = abs(num)
    digits = 0
    d = den
    while d % 2 == 0:
        d //= 2
        digits += 1
    fives = 0
    while d % 5 == 0:
        d //= 5
        fives += 1
    digits = max(digits, fives)
    if d != 1:
        raise ValueError(f"{r} has no finite decimal expansion")
    if digits > max_digits:
        raise ValueError(f"{r} needs {digits} decimal digits")
    scaled = num * 10**digits // den
    if digits == 0:
        return f"{sign}{scaled}"
    text = str(scaled).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"
