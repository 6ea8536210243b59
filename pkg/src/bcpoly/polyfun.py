"""Sparse polynomial bicomplex-valued functions in the idempotent variables.

A function f maps the bicomplex plane to itself and is stored as the pair
(f_plus, f_minus) with f = f_plus*e+ + f_minus*e-.  Each component is a
sparse polynomial in the four variables

    index 0: alpha    index 1: conj(alpha)    index 2: beta    index 3: conj(beta)

with Gaussian-rational coefficients.  Conjugations, real parts, evaluation
and differentiation all act componentwise in this basis, which is what makes
every operator in :mod:`bcpoly.operators` diagonal.
"""

from __future__ import annotations

from fractions import Fraction
from math import perm
from typing import Iterable, Optional

from .bicomplex import Bicomplex, GaussianRational
from .bicomplex import DAGGER, STAR, TILDE, _check_kind

__all__ = ["Poly4", "BicomplexFunction", "NVARS", "PAIR_ALPHA", "PAIR_BETA"]

NVARS = 4
Monomial = tuple[int, int, int, int]

PAIR_ALPHA = (0, 1)
PAIR_BETA = (2, 3)

_ZERO_MONO: Monomial = (0, 0, 0, 0)


def _as_monomial(key) -> Monomial:
    key = tuple(key)
    if len(key) != NVARS or any((not isinstance(e, int)) or e < 0 for e in key):
        raise ValueError(f"monomial key must be 4 nonnegative integers, got {key!r}")
    return key  # type: ignore[return-value]


class Poly4:
    """A sparse polynomial in (alpha, conj alpha, beta, conj beta).

    Immutable by convention: no method mutates ``terms`` after construction,
    and no zero coefficient is ever stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        clean: dict[Monomial, GaussianRational] = {}
        if terms:
            for key, coeff in terms.items():
                coeff = GaussianRational.coerce(coeff)
                if not coeff.is_zero():
                    clean[_as_monomial(key)] = coeff
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "Poly4":
        # internal fast path: caller guarantees clean keys and no zeros
        out = object.__new__(cls)
        out.terms = terms
        return out

    @classmethod
    def zero(cls) -> "Poly4":
        return cls._raw({})

    @classmethod
    def constant(cls, coeff) -> "Poly4":
        coeff = GaussianRational.coerce(coeff)
        return cls._raw({} if coeff.is_zero() else {_ZERO_MONO: coeff})

    @classmethod
    def monomial(cls, key, coeff=1) -> "Poly4":
        coeff = GaussianRational.coerce(coeff)
        return cls._raw({} if coeff.is_zero() else {_as_monomial(key): coeff})

    @classmethod
    def variable(cls, index: int) -> "Poly4":
        key = [0, 0, 0, 0]
        key[index] = 1
        return cls.monomial(tuple(key))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly4):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Poly4") -> "Poly4":
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = out.get(key)
            total = coeff if acc is None else acc + coeff
            if total.is_zero():
                out.pop(key, None)
            else:
                out[key] = total
        return Poly4._raw(out)

    def __neg__(self) -> "Poly4":
        return Poly4._raw({key: -coeff for key, coeff in self.terms.items()})

    def __sub__(self, other: "Poly4") -> "Poly4":
        return self + (-other)

    def __mul__(self, other: "Poly4") -> "Poly4":
        out: dict[Monomial, GaussianRational] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                key = (ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3])
                prod = ca * cb
                acc = out.get(key)
                total = prod if acc is None else acc + prod
                if total.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = total
        return Poly4._raw(out)

    def __pow__(self, exponent: int) -> "Poly4":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        out = Poly4.constant(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def scale(self, coeff) -> "Poly4":
        coeff = GaussianRational.coerce(coeff)
        if coeff.is_zero():
            return Poly4.zero()
        return Poly4._raw({key: c * coeff for key, c in self.terms.items()})

    def bar(self) -> "Poly4":
        """Pointwise complex conjugate: conjugate every coefficient and swap
        each variable with its conjugate partner (0<->1, 2<->3)."""
        return Poly4._raw(
            {(b, a, d, c): coeff.conjugate() for (a, b, c, d), coeff in self.terms.items()}
        )

    def is_bar_fixed(self) -> bool:
        """True when the polynomial is real-valued at every point."""
        for (a, b, c, d), coeff in self.terms.items():
            partner = self.terms.get((b, a, d, c))
            if partner is None or partner != coeff.conjugate():
                return False
        return True

    def diff(self, var: int, times: int = 1) -> "Poly4":
        if times < 0:
            raise ValueError("cannot differentiate a negative number of times")
        if times == 0:
            return self
        out: dict[Monomial, GaussianRational] = {}
        for key, coeff in self.terms.items():
            e = key[var]
            if e < times:
                continue
            factor = perm(e, times)
            new_key = list(key)
            new_key[var] = e - times
            out[tuple(new_key)] = coeff * factor  # keys stay distinct: injective shift
        return Poly4._raw(out)

    def substitute(self, values: tuple) -> GaussianRational:
        values = tuple(GaussianRational.coerce(v) for v in values)
        total = GaussianRational(0)
        for key, coeff in self.terms.items():
            term = coeff
            for var, e in enumerate(key):
                if e:
                    term = term * (values[var] ** e)
            total = total + term
        return total

    def degree(self, var: int) -> Optional[int]:
        """Max exponent of one variable; ``None`` for the zero polynomial."""
        if not self.terms:
            return None
        return max(key[var] for key in self.terms)

    def degrees(self) -> tuple[Optional[int], Optional[int], Optional[int], Optional[int]]:
        if not self.terms:
            return (None, None, None, None)
        return tuple(max(key[var] for key in self.terms) for var in range(NVARS))  # type: ignore

    def total_degree(self) -> Optional[int]:
        if not self.terms:
            return None
        return max(sum(key) for key in self.terms)

    def uses_only(self, variables: Iterable[int]) -> bool:
        allowed = set(variables)
        return all(
            all(e == 0 for var, e in enumerate(key) if var not in allowed)
            for key in self.terms
        )

    def group_by(self, positions: tuple[int, ...]) -> dict[tuple[int, ...], "Poly4"]:
        """Split into coefficient polynomials keyed by the exponents at
        ``positions`` (which are zeroed out in the returned values)."""
        groups: dict[tuple[int, ...], dict[Monomial, GaussianRational]] = {}
        for key, coeff in self.terms.items():
            index = tuple(key[p] for p in positions)
            residual = list(key)
            for p in positions:
                residual[p] = 0
            groups.setdefault(index, {})[tuple(residual)] = coeff
        return {index: Poly4._raw(terms) for index, terms in groups.items()}

    def sorted_terms(self) -> list[tuple[Monomial, GaussianRational]]:
        return sorted(self.terms.items(), key=lambda item: item[0])

    def __repr__(self):
        return f"Poly4({dict(self.sorted_terms())!r})"


# component polynomials of the coordinate functions, as (plus, minus) pairs:
#   Z      -> (alpha, beta)            Z^dagger -> (beta, alpha)
#   Z^*    -> (conj a, conj b)         Z~       -> (conj b, conj a)
_COMPONENTS_Z = (Poly4.variable(0), Poly4.variable(2))
_COMPONENTS_ZD = (Poly4.variable(2), Poly4.variable(0))
_COMPONENTS_ZS = (Poly4.variable(1), Poly4.variable(3))
_COMPONENTS_ZT = (Poly4.variable(3), Poly4.variable(1))


class BicomplexFunction:
    """A polynomial map of the bicomplex plane, stored componentwise."""

    __slots__ = ("plus", "minus")

    def __init__(self, plus: Poly4, minus: Poly4):
        if not isinstance(plus, Poly4) or not isinstance(minus, Poly4):
            raise TypeError("components must be Poly4 instances")
        self.plus = plus
        self.minus = minus

    @classmethod
    def zero(cls) -> "BicomplexFunction":
        return cls(Poly4.zero(), Poly4.zero())

    @classmethod
    def constant(cls, value) -> "BicomplexFunction":
        value = Bicomplex.coerce(value)
        return cls(Poly4.constant(value.alpha), Poly4.constant(value.beta))

    @classmethod
    def from_shared(cls, poly: Poly4) -> "BicomplexFunction":
        """The function whose both components are the same polynomial."""
        return cls(poly, poly)

    @classmethod
    def variable(cls) -> "BicomplexFunction":
        """The identity function Z."""
        return cls(*_COMPONENTS_Z)

    @classmethod
    def variable_dagger(cls) -> "BicomplexFunction":
        return cls(*_COMPONENTS_ZD)

    @classmethod
    def variable_star(cls) -> "BicomplexFunction":
        return cls(*_COMPONENTS_ZS)

    @classmethod
    def variable_tilde(cls) -> "BicomplexFunction":
        return cls(*_COMPONENTS_ZT)

    def is_zero(self) -> bool:
        return self.plus.is_zero() and self.minus.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, BicomplexFunction):
            return NotImplemented
        return self.plus == other.plus and self.minus == other.minus

    def __hash__(self):
        return hash((self.plus, self.minus))

    def __add__(self, other: "BicomplexFunction") -> "BicomplexFunction":
        return BicomplexFunction(self.plus + other.plus, self.minus + other.minus)

    def __sub__(self, other: "BicomplexFunction") -> "BicomplexFunction":
        return BicomplexFunction(self.plus - other.plus, self.minus - other.minus)

    def __neg__(self) -> "BicomplexFunction":
        return BicomplexFunction(-self.plus, -self.minus)

    def __mul__(self, other) -> "BicomplexFunction":
        if isinstance(other, BicomplexFunction):
            return BicomplexFunction(self.plus * other.plus, self.minus * other.minus)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, divisor):
        if not isinstance(divisor, (int, Fraction)):
            raise TypeError("function division is only defined by rational scalars")
        if divisor == 0:
            raise ZeroDivisionError("division of a function by zero")
        q = Fraction(1, 1) / divisor
        return BicomplexFunction(self.plus.scale(q), self.minus.scale(q))

    def __pow__(self, exponent: int) -> "BicomplexFunction":
        return BicomplexFunction(self.plus ** exponent, self.minus ** exponent)

    def scale(self, value) -> "BicomplexFunction":
        """Multiply by a bicomplex scalar: alpha-part on plus, beta-part on minus."""
        value = Bicomplex.coerce(value)
        return BicomplexFunction(self.plus.scale(value.alpha), self.minus.scale(value.beta))

    def conjugate(self, kind: str) -> "BicomplexFunction":
        """Pointwise conjugation of values: for every Z the conjugated function
        evaluates to ``conjugate(f(Z), kind)``."""
        _check_kind(kind)
        if kind == DAGGER:
            return BicomplexFunction(self.minus, self.plus)
        if kind == STAR:
            return BicomplexFunction(self.plus.bar(), self.minus.bar())
        return BicomplexFunction(self.minus.bar(), self.plus.bar())

    def evaluate(self, point) -> Bicomplex:
        point = Bicomplex.coerce(point)
        values = (point.alpha, point.alpha.conjugate(), point.beta, point.beta.conjugate())
        return Bicomplex(self.plus.substitute(values), self.minus.substitute(values))

    def hyperbolic_part(self) -> "BicomplexFunction":
        """(f + f^*)/2 -- hyperbolic-valued, each component fixed by bar."""
        return (self + self.conjugate(STAR)) / 2

    def real_part(self) -> "BicomplexFunction":
        """(f + f^dagger + f~ + f^*)/4 -- real-valued, components equal."""
        total = self + self.conjugate(DAGGER) + self.conjugate(TILDE) + self.conjugate(STAR)
        return total / 4

    def real_parts(self) -> tuple["BicomplexFunction", "BicomplexFunction"]:
        return self.hyperbolic_part(), self.real_part()

    def is_hyperbolic_valued(self) -> bool:
        return self.plus.is_bar_fixed() and self.minus.is_bar_fixed()

    def is_real_valued(self) -> bool:
        return self.plus == self.minus and self.plus.is_bar_fixed()

    def is_constant(self) -> bool:
        return all(
            set(p.terms) <= {_ZERO_MONO} for p in (self.plus, self.minus)
        )

    def constant_value(self) -> Bicomplex:
        if not self.is_constant():
            raise ValueError("function is not constant")
        return Bicomplex(
            self.plus.terms.get(_ZERO_MONO, GaussianRational(0)),
            self.minus.terms.get(_ZERO_MONO, GaussianRational(0)),
        )

    def degrees(self) -> dict[str, tuple]:
        return {"plus": self.plus.degrees(), "minus": self.minus.degrees()}

    def total_degree(self) -> int:
        degs = [p.total_degree() for p in (self.plus, self.minus)]
        return max((d for d in degs if d is not None), default=0)

    def __repr__(self):
        return f"BicomplexFunction({self.plus!r}, {self.minus!r})"
