"""Exact bicomplex and hyperbolic scalar arithmetic.

A bicomplex number carries two commuting imaginary units ``i`` and ``j``;
with ``k = i*j`` the idempotents ``e+ = (1 + k)/2`` and ``e- = (1 - k)/2``
split the algebra into two complex lines.  Every value here is stored by
its idempotent coordinates ``(alpha, beta)``, on which multiplication acts
componentwise.  The Cartesian pair ``(z1, z2)`` with ``Z = z1 + j*z2`` and
the unit-basis quadruple ``(1, i, j, k)`` are derived views:

    alpha = z1 - i*z2        z1 = (alpha + beta) / 2
    beta  = z1 + i*z2        z2 = i*(alpha - beta) / 2

All coefficients are Gaussian rationals (exact rational real and imaginary
parts), so every identity in this package is decided by exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "BicomplexError",
    "NullConeError",
    "GaussianRational",
    "Hyperbolic",
    "Bicomplex",
    "DAGGER",
    "TILDE",
    "STAR",
    "CONJUGATION_KINDS",
    "ONE",
    "ZERO",
    "I",
    "J",
    "K",
    "E_PLUS",
    "E_MINUS",
]


class BicomplexError(Exception):
    """Base class for the domain errors raised by this package."""


class NullConeError(BicomplexError, ZeroDivisionError):
    """Inversion of a zero divisor (a value with alpha*beta = 0)."""


RationalLike = Union[int, Fraction]

DAGGER = "dagger"  # negates the j-part: swaps idempotent coordinates
TILDE = "tilde"    # conjugates the complex coefficients: bar + swap
STAR = "star"      # both: bar on each idempotent coordinate
CONJUGATION_KINDS = (DAGGER, TILDE, STAR)


def _check_kind(kind: str) -> None:
    if kind not in CONJUGATION_KINDS:
        raise ValueError(f"unknown conjugation kind {kind!r}; expected one of {CONJUGATION_KINDS}")


def _fraction_text(q: Fraction) -> str:
    return str(q)


def _signed_unit_term(coeff: Fraction, unit: str) -> str:
    """Render coeff*unit with coeff != 0, e.g. ``i``, ``-i``, ``3/2*k``."""
    if coeff == 1:
        return unit
    if coeff == -1:
        return "-" + unit
    return f"{_fraction_text(coeff)}*{unit}"


def _join_terms(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


def _fraction_from_strings(num: str, den: str, path: str) -> Fraction:
    try:
        n, d = int(num), int(den)
    except (TypeError, ValueError):
        raise BicomplexError(f"{path}: numerator/denominator must be decimal integer strings")
    if d <= 0:
        raise BicomplexError(f"{path}: denominator must be positive")
    q = Fraction(n, d)
    if q.numerator != n or q.denominator != d:
        raise BicomplexError(f"{path}: fraction {n}/{d} is not in lowest terms")
    return q


class GaussianRational:
    """A complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def norm2(self) -> Fraction:
        """The squared modulus re^2 + im^2 (an exact rational)."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm2()
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * GaussianRational.coerce(other).inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an integer")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = GaussianRational(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        terms = []
        if self.re != 0:
            terms.append(_fraction_text(self.re))
        if self.im != 0:
            terms.append(_signed_unit_term(self.im, "i"))
        return _join_terms(terms)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def to_json(self) -> list[str]:
        """Four decimal strings: [re_num, re_den, im_num, im_den]."""
        return [
            str(self.re.numerator),
            str(self.re.denominator),
            str(self.im.numerator),
            str(self.im.denominator),
        ]

    @classmethod
    def from_json(cls, data, path: str = "coeff") -> "GaussianRational":
        if not isinstance(data, (list, tuple)) or len(data) != 4:
            raise BicomplexError(f"{path}: expected an array of 4 integer strings")
        re = _fraction_from_strings(data[0], data[1], f"{path}[0:2]")
        im = _fraction_from_strings(data[2], data[3], f"{path}[2:4]")
        return cls(re, im)


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


@dataclass(frozen=True)
class Hyperbolic:
    """A hyperbolic number x_plus*e+ + x_minus*e- with rational coordinates.

    Equivalently x + y*k with x = (x_plus + x_minus)/2, y = (x_plus - x_minus)/2.
    """

    x_plus: Fraction
    x_minus: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x_plus", Fraction(self.x_plus))
        object.__setattr__(self, "x_minus", Fraction(self.x_minus))

    @classmethod
    def from_xy(cls, x: RationalLike, y: RationalLike) -> "Hyperbolic":
        x, y = Fraction(x), Fraction(y)
        return cls(x + y, x - y)

    @property
    def x(self) -> Fraction:
        return (self.x_plus + self.x_minus) / 2

    @property
    def y(self) -> Fraction:
        return (self.x_plus - self.x_minus) / 2

    def is_zero(self) -> bool:
        return self.x_plus == 0 and self.x_minus == 0

    def to_bicomplex(self) -> "Bicomplex":
        return Bicomplex(GaussianRational(self.x_plus), GaussianRational(self.x_minus))

    def __str__(self):
        return str(self.to_bicomplex())


class Bicomplex:
    """A bicomplex number stored by its idempotent coordinates (alpha, beta)."""

    __slots__ = ("alpha", "beta")

    def __init__(self, alpha=0, beta=0):
        self.alpha = GaussianRational.coerce(alpha)
        self.beta = GaussianRational.coerce(beta)

    @classmethod
    def from_cartesian(cls, z1, z2) -> "Bicomplex":
        z1 = GaussianRational.coerce(z1)
        z2 = GaussianRational.coerce(z2)
        return cls(z1 - GR_I * z2, z1 + GR_I * z2)

    @classmethod
    def from_units(cls, a, b=0, c=0, d=0) -> "Bicomplex":
        """Build a + b*i + c*j + d*k from rational unit-basis coordinates."""
        return cls.from_cartesian(GaussianRational(a, b), GaussianRational(c, d))

    @property
    def z1(self) -> GaussianRational:
        return (self.alpha + self.beta) / 2

    @property
    def z2(self) -> GaussianRational:
        return GR_I * (self.alpha - self.beta) / 2

    def units(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        z1, z2 = self.z1, self.z2
        return (z1.re, z1.im, z2.re, z2.im)

    # ring operations: everything acts componentwise on (alpha, beta)

    def __add__(self, other):
        other = Bicomplex.coerce(other)
        return Bicomplex(self.alpha + other.alpha, self.beta + other.beta)

    __radd__ = __add__

    def __sub__(self, other):
        other = Bicomplex.coerce(other)
        return Bicomplex(self.alpha - other.alpha, self.beta - other.beta)

    def __rsub__(self, other):
        return Bicomplex.coerce(other) - self

    def __neg__(self):
        return Bicomplex(-self.alpha, -self.beta)

    def __mul__(self, other):
        other = Bicomplex.coerce(other)
        return Bicomplex(self.alpha * other.alpha, self.beta * other.beta)

    __rmul__ = __mul__

    def __truediv__(self, divisor):
        """Scalar division by a nonzero rational."""
        if not isinstance(divisor, (int, Fraction)):
            raise TypeError("bicomplex division is only defined by rational scalars")
        if divisor == 0:
            raise ZeroDivisionError("division of a bicomplex number by zero")
        q = Fraction(1, 1) / divisor
        return Bicomplex(self.alpha * q, self.beta * q)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an integer")
        if exponent < 0:
            return self.invert() ** (-exponent)
        return Bicomplex(self.alpha ** exponent, self.beta ** exponent)

    @classmethod
    def coerce(cls, value) -> "Bicomplex":
        if isinstance(value, Bicomplex):
            return value
        if isinstance(value, Hyperbolic):
            return value.to_bicomplex()
        if isinstance(value, (int, Fraction, GaussianRational)):
            g = GaussianRational.coerce(value)
            return cls(g, g)
        raise TypeError(f"cannot interpret {value!r} as a bicomplex number")

    def conjugate(self, kind: str) -> "Bicomplex":
        """One of the three conjugations: dagger swaps (alpha, beta), star bars
        both coordinates, tilde does both."""
        _check_kind(kind)
        if kind == DAGGER:
            return Bicomplex(self.beta, self.alpha)
        if kind == STAR:
            return Bicomplex(self.alpha.conjugate(), self.beta.conjugate())
        return Bicomplex(self.beta.conjugate(), self.alpha.conjugate())

    def det(self) -> GaussianRational:
        """z1^2 + z2^2, the determinant of the 2x2 matrix view; equals alpha*beta."""
        z1, z2 = self.z1, self.z2
        return z1 * z1 + z2 * z2

    def is_null_cone(self) -> bool:
        return self.alpha.is_zero() or self.beta.is_zero()

    def invert(self) -> "Bicomplex":
        if self.is_null_cone():
            raise NullConeError("value lies on the null cone (alpha*beta = 0) and is not invertible")
        return Bicomplex(self.alpha.inverse(), self.beta.inverse())

    def real_part(self) -> Fraction:
        """The classical real part (Z + Z^dagger + Z~ + Z^*)/4 = (Re alpha + Re beta)/2."""
        return (self.alpha.re + self.beta.re) / 2

    def hyperbolic_part(self) -> Hyperbolic:
        """The hyperbolic real part (Z + Z^*)/2, with coordinates (Re alpha, Re beta)."""
        return Hyperbolic(self.alpha.re, self.beta.re)

    def real_parts(self) -> tuple[Fraction, Hyperbolic]:
        return self.real_part(), self.hyperbolic_part()

    def is_real(self) -> bool:
        return self.alpha == self.beta and self.alpha.is_real()

    def is_hyperbolic(self) -> bool:
        return self.alpha.is_real() and self.beta.is_real()

    def is_idempotent(self) -> bool:
        return self.alpha * self.alpha == self.alpha and self.beta * self.beta == self.beta

    def predicates(self) -> dict[str, bool]:
        return {
            "is_real": self.is_real(),
            "is_hyperbolic": self.is_hyperbolic(),
            "is_null_cone": self.is_null_cone(),
            "is_idempotent": self.is_idempotent(),
        }

    def is_zero(self) -> bool:
        return self.alpha.is_zero() and self.beta.is_zero()

    def __eq__(self, other):
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return self.alpha == other.alpha and self.beta == other.beta

    def __hash__(self):
        return hash((self.alpha, self.beta))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        a, b, c, d = self.units()
        terms = []
        if a != 0:
            terms.append(_fraction_text(a))
        for coeff, unit in ((b, "i"), (c, "j"), (d, "k")):
            if coeff != 0:
                terms.append(_signed_unit_term(coeff, unit))
        return _join_terms(terms)

    def idempotent_str(self) -> str:
        return f"{self.alpha} | {self.beta}"

    def __repr__(self):
        return f"Bicomplex({self.alpha!r}, {self.beta!r})"

    def to_json(self) -> list[str]:
        """Eight decimal strings covering alpha then beta, each as 4-string rationals."""
        return self.alpha.to_json() + self.beta.to_json()

    @classmethod
    def from_json(cls, data, path: str = "bicomplex") -> "Bicomplex":
        if not isinstance(data, (list, tuple)) or len(data) != 8:
            raise BicomplexError(f"{path}: expected an array of 8 integer strings")
        alpha = GaussianRational.from_json(data[:4], f"{path}[0:4]")
        beta = GaussianRational.from_json(data[4:], f"{path}[4:8]")
        return cls(alpha, beta)


ZERO = Bicomplex(0, 0)
ONE = Bicomplex(1, 1)
I = Bicomplex(GR_I, GR_I)
J = Bicomplex(GaussianRational(0, -1), GR_I)
K = Bicomplex(1, -1)
E_PLUS = Bicomplex(1, 0)
E_MINUS = Bicomplex(0, 1)
