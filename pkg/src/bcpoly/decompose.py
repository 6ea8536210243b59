"""Constructive expansions and real-part inversions.

Every routine here produces data that reconstructs its input by exact
polynomial identity:

* conjugate-basis expansion in powers of the three conjugate coordinates,
  with componentwise-holomorphic coefficients;
* expansion in powers of the full conjugate coordinate alone, for functions
  whose components live on their own variable pair;
* the layered harmonic decomposition (complex, one variable pair at a time,
  and its bicomplex lift weighted by powers of Z*Z^*);
* inversion of the real part of a single-pair polynomial into a polyanalytic
  one, and the two hyperbolic-real-part inversions built on it;
* the two-index kernel decomposition of a hyperbolic-valued function into
  coefficient functions times powers of the dagger/tilde coordinates.

Normalizations are chosen once and frozen: harmonic layers assign the
monomial ``z^p zbar^q`` to layer ``min(p, q)``, and real-part inversion never
emits a monomial whose conjugate exponent exceeds the plain one.  Both rules
make every decomposition of a polynomial unique without solving any linear
system.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .bicomplex import BicomplexError
from .classify import class_membership, pair_polyharmonic_order, polyharmonic_order
from .operators import laplacian, wirtinger
from .polyfun import PAIR_ALPHA, PAIR_BETA, BicomplexFunction, Poly4

__all__ = [
    "NotInClass",
    "NotRealValued",
    "NotHyperbolicValued",
    "MixedPairError",
    "PreconditionViolation",
    "ConjugateExpansion",
    "AlmansiDecomposition",
    "MainDecomposition",
    "expand_conjugate_basis",
    "expand_zstar",
    "almansi_complex",
    "almansi_bicomplex",
    "repart_to_polyanalytic",
    "rehyp_to_holomorphic",
    "rehyp_to_polyholomorphic_A1",
    "main_decomposition",
]


class NotInClass(BicomplexError):
    """Input is outside the class the expansion is defined on."""


class NotRealValued(BicomplexError):
    """Coefficient symmetry for a real-valued polynomial fails."""


class NotHyperbolicValued(BicomplexError):
    """A component of the input is not fixed by pointwise conjugation."""


class MixedPairError(BicomplexError):
    """A single-pair operation received a polynomial mixing variable pairs."""


class PreconditionViolation(BicomplexError):
    """A kernel or harmonicity precondition failed; names the first failure."""

    def __init__(self, condition: str, message: str):
        super().__init__(message)
        self.condition = condition


def _function_star_dagger_tilde() -> tuple[BicomplexFunction, BicomplexFunction, BicomplexFunction]:
    return (
        BicomplexFunction.variable_star(),
        BicomplexFunction.variable_dagger(),
        BicomplexFunction.variable_tilde(),
    )


@dataclass(frozen=True)
class ConjugateExpansion:
    """f = sum over (l1, l2, l3) of Z*^l1 Z~^l2 Zdagger^l3 times a
    componentwise-holomorphic coefficient function."""

    coeffs: dict[tuple[int, int, int], BicomplexFunction]

    def reconstruct(self) -> BicomplexFunction:
        star, dagger, tilde = _function_star_dagger_tilde()
        total = BicomplexFunction.zero()
        for (l1, l2, l3), coeff in self.coeffs.items():
            total = total + (star ** l1) * (tilde ** l2) * (dagger ** l3) * coeff
        return total


def expand_conjugate_basis(fn: BicomplexFunction) -> ConjugateExpansion:
    """Extract the coefficient of each conjugate-power basis monomial.

    In components: the plus part groups by (conj-alpha, conj-beta, beta)
    exponents leaving a polynomial in alpha, the minus part symmetrically by
    (conj-beta, conj-alpha, alpha) leaving one in beta.
    """
    plus_groups = fn.plus.group_by((1, 3, 2))
    minus_groups = fn.minus.group_by((3, 1, 0))
    coeffs: dict[tuple[int, int, int], BicomplexFunction] = {}
    for index in set(plus_groups) | set(minus_groups):
        coeffs[index] = BicomplexFunction(
            plus_groups.get(index, Poly4.zero()),
            minus_groups.get(index, Poly4.zero()),
        )
    return ConjugateExpansion(coeffs)


def expand_zstar(fn: BicomplexFunction) -> list[BicomplexFunction]:
    """Write f as sum of Z*^t g_t with componentwise-holomorphic g_t.

    Requires each component to depend only on its own variable pair; the list
    has length max of the two exact conjugate orders, with the top entry
    nonzero.
    """
    member = class_membership(fn)
    if member.a1_orders is None:
        raise NotInClass(
            "conjugate-power expansion needs each component on its own variable pair "
            "(plus on alpha/conj-alpha, minus on beta/conj-beta)"
        )
    order = member.zstar_order or 0
    plus_groups = fn.plus.group_by((1,))
    minus_groups = fn.minus.group_by((3,))
    layers = []
    for t in range(order):
        layers.append(
            BicomplexFunction(
                plus_groups.get((t,), Poly4.zero()),
                minus_groups.get((t,), Poly4.zero()),
            )
        )
    return layers


@dataclass(frozen=True)
class AlmansiDecomposition:
    """Layers h_0 .. h_{m-1} with input = sum of |.|^{2t} h_t.

    ``pair`` is "alpha" or "beta" for the single-pair (complex) case, where
    parts are Poly4 layers and the weight is (z zbar)^t; it is ``None`` for
    the bicomplex case, where parts are functions and the weight is (Z Z^*)^t.
    """

    parts: tuple
    pair: Optional[str] = None

    @property
    def order(self) -> int:
        return len(self.parts)

    def reconstruct(self):
        if self.pair is not None:
            z, zbar = PAIR_ALPHA if self.pair == "alpha" else PAIR_BETA
            weight_key = [0, 0, 0, 0]
            weight_key[z] = 1
            weight_key[zbar] = 1
            weight = Poly4.monomial(tuple(weight_key))
            total = Poly4.zero()
            for t, part in enumerate(self.parts):
                total = total + (weight ** t) * part
            return total
        weight = BicomplexFunction.variable() * BicomplexFunction.variable_star()
        total = BicomplexFunction.zero()
        for t, part in enumerate(self.parts):
            total = total + (weight ** t) * part
        return total


def _pair_indices(pair: str) -> tuple[int, int]:
    if pair == "alpha":
        return PAIR_ALPHA
    if pair == "beta":
        return PAIR_BETA
    raise ValueError(f"pair must be 'alpha' or 'beta', got {pair!r}")


def _almansi_layers(poly: Poly4, pair: tuple[int, int]) -> list[Poly4]:
    """Assign each monomial to layer min(p, q) in the pair's exponents,
    keeping the residual (a pure power of z or zbar times the parameters)."""
    order = pair_polyharmonic_order(poly, pair)
    z, zbar = pair
    layers: list[dict] = [dict() for _ in range(order)]
    for key, coeff in poly.terms.items():
        p, q = key[z], key[zbar]
        t = min(p, q)
        residual = list(key)
        residual[z] = p - t
        residual[zbar] = q - t
        layers[t][tuple(residual)] = coeff  # distinct keys stay distinct
    return [Poly4(layer) for layer in layers]


def almansi_complex(poly: Poly4, pair: str = "alpha") -> AlmansiDecomposition:
    """Layered harmonic decomposition of a polynomial in one variable pair."""
    indices = _pair_indices(pair)
    if not poly.uses_only(indices):
        raise MixedPairError(f"polynomial must use only the {pair} variable pair")
    return AlmansiDecomposition(tuple(_almansi_layers(poly, indices)), pair=pair)


def almansi_bicomplex(fn: BicomplexFunction) -> AlmansiDecomposition:
    """Bicomplex layered decomposition: F = sum of (Z Z^*)^t H_t with every
    H_t annihilated by the bicomplex Laplacian.

    Works componentwise, each component in its own pair with the other pair
    riding along as parameters; the shorter layer list is padded with zeros.
    """
    order = polyharmonic_order(fn, laplacian(1))
    plus_layers = _almansi_layers(fn.plus, PAIR_ALPHA)
    minus_layers = _almansi_layers(fn.minus, PAIR_BETA)
    plus_layers += [Poly4.zero()] * (order - len(plus_layers))
    minus_layers += [Poly4.zero()] * (order - len(minus_layers))
    parts = tuple(
        BicomplexFunction(p, m) for p, m in zip(plus_layers, minus_layers)
    )
    return AlmansiDecomposition(parts, pair=None)


def repart_to_polyanalytic(poly: Poly4, pair: str = "alpha") -> Poly4:
    """Invert the real part on one variable pair.

    For real-valued u = sum c_pq z^p zbar^q (so c_qp = conj(c_pq)) return
    f = sum over p > q of 2 c_pq z^p zbar^q, plus the diagonal kept with
    weight one; then Re f = u exactly and the conjugate-exponent order of f
    equals the layer count of u.  No output monomial has q > p.
    """
    indices = _pair_indices(pair)
    if not poly.uses_only(indices):
        raise MixedPairError(f"polynomial must use only the {pair} variable pair")
    z, zbar = indices
    out: dict = {}
    for key, coeff in poly.terms.items():
        p, q = key[z], key[zbar]
        mirror = list(key)
        mirror[z], mirror[zbar] = q, p
        partner = poly.terms.get(tuple(mirror))
        if partner is None or partner != coeff.conjugate():
            raise NotRealValued(
                "coefficient symmetry c[q,p] = conj(c[p,q]) fails; the input is not real-valued"
            )
        if p > q:
            out[key] = coeff * 2
        elif p == q:
            out[key] = coeff
    return Poly4(out)


def _require_kernel(fn: BicomplexFunction, name: str, op, power: int = 1) -> None:
    image = (op ** power).apply(fn)
    if not image.is_zero():
        raise PreconditionViolation(name, f"precondition failed: {name} does not annihilate the input")


def rehyp_to_holomorphic(fn: BicomplexFunction) -> BicomplexFunction:
    """Produce the componentwise-holomorphic function whose hyperbolic real
    part is the given one.

    Preconditions: hyperbolic-valued, annihilated by the bicomplex Laplacian
    and by both the dagger- and tilde-direction derivatives.  The output is
    normalized to zero hyperbolic-imaginary part at the origin (its constant
    coefficients are real).
    """
    if not fn.is_hyperbolic_valued():
        raise NotHyperbolicValued("input must be hyperbolic-valued (components fixed by bar)")
    _require_kernel(fn, "d1-harmonic", laplacian(1))
    _require_kernel(fn, "dZdagger-kernel", wirtinger("Zdagger"))
    _require_kernel(fn, "dZtilde-kernel", wirtinger("Ztilde"))
    return BicomplexFunction(
        repart_to_polyanalytic(fn.plus, "alpha"),
        repart_to_polyanalytic(fn.minus, "beta"),
    )


def rehyp_to_polyholomorphic_A1(fn: BicomplexFunction) -> tuple[BicomplexFunction, tuple[int, int]]:
    """Invert the hyperbolic real part within the first-kind class.

    Preconditions: hyperbolic-valued and annihilated by the dagger- and
    tilde-direction derivatives (each component on its own pair).  Returns
    the inverted function together with its exact componentwise conjugate
    orders (r, s); their max is the layer count of the input.
    """
    if not fn.is_hyperbolic_valued():
        raise NotHyperbolicValued("input must be hyperbolic-valued (components fixed by bar)")
    _require_kernel(fn, "dZdagger-kernel", wirtinger("Zdagger"))
    _require_kernel(fn, "dZtilde-kernel", wirtinger("Ztilde"))
    inverted = BicomplexFunction(
        repart_to_polyanalytic(fn.plus, "alpha"),
        repart_to_polyanalytic(fn.minus, "beta"),
    )
    orders = (
        pair_polyharmonic_order(fn.plus, PAIR_ALPHA),
        pair_polyharmonic_order(fn.minus, PAIR_BETA),
    )
    return inverted, orders


@dataclass(frozen=True)
class MainDecomposition:
    """Two-index kernel decomposition of a hyperbolic-valued function.

    ``coeffs`` maps (l1, l2) to the coefficient function G with plus part in
    (alpha, conj alpha) and minus part in (beta, conj beta), satisfying
    F = sum G_(l1,l2) * Zdagger^l1 * Ztilde^l2.  ``inverted`` carries the
    refined form (each coefficient replaced by a first-kind function whose
    hyperbolic real part it is) and is present only when every coefficient is
    real-valued; otherwise ``non_real`` lists the offending components.
    """

    bound_dagger: int
    bound_tilde: int
    coeffs: dict[tuple[int, int], BicomplexFunction]
    inverted: Optional[dict[tuple[int, int], BicomplexFunction]]
    non_real: tuple[tuple[str, int, int], ...] = field(default_factory=tuple)

    def reconstruct(self) -> BicomplexFunction:
        return self._weighted_sum(self.coeffs)

    def reconstruct_from_inverted(self) -> BicomplexFunction:
        if self.inverted is None:
            raise NotRealValued(
                "no refined form: some coefficient functions are not real-valued"
            )
        rehyps = {index: fn.hyperbolic_part() for index, fn in self.inverted.items()}
        return self._weighted_sum(rehyps)

    @staticmethod
    def _weighted_sum(coeffs: dict[tuple[int, int], BicomplexFunction]) -> BicomplexFunction:
        dagger = BicomplexFunction.variable_dagger()
        tilde = BicomplexFunction.variable_tilde()
        total = BicomplexFunction.zero()
        for (l1, l2), coeff in coeffs.items():
            total = total + coeff * (dagger ** l1) * (tilde ** l2)
        return total


def main_decomposition(fn: BicomplexFunction, bound_dagger: int, bound_tilde: int) -> MainDecomposition:
    """Decompose a hyperbolic-valued F with dagger^n- and tilde^k-kernel
    bounds into coefficient functions times dagger/tilde coordinate powers.

    The coefficients are extracted by matching powers: the plus component in
    (beta, conj beta), the minus component in (alpha, conj alpha).  When all
    extracted coefficients are real-valued the refined inverted form is
    produced as well; a hyperbolic-valued input only forces the cross
    symmetry pairing (l1, l2) with (l2, l1), so non-real coefficients are
    possible and reported instead of guessed around.
    """
    if bound_dagger < 1 or bound_tilde < 1:
        raise ValueError("kernel bounds must be at least 1")
    if not fn.is_hyperbolic_valued():
        raise NotHyperbolicValued("input must be hyperbolic-valued (components fixed by bar)")
    _require_kernel(fn, f"dZdagger^{bound_dagger}-kernel", wirtinger("Zdagger"), bound_dagger)
    _require_kernel(fn, f"dZtilde^{bound_tilde}-kernel", wirtinger("Ztilde"), bound_tilde)

    plus_groups = fn.plus.group_by((2, 3))
    minus_groups = fn.minus.group_by((0, 1))
    coeffs: dict[tuple[int, int], BicomplexFunction] = {}
    for index in set(plus_groups) | set(minus_groups):
        coeffs[index] = BicomplexFunction(
            plus_groups.get(index, Poly4.zero()),
            minus_groups.get(index, Poly4.zero()),
        )

    non_real: list[tuple[str, int, int]] = []
    for (l1, l2), coeff in coeffs.items():
        if not coeff.plus.is_bar_fixed():
            non_real.append(("plus", l1, l2))
        if not coeff.minus.is_bar_fixed():
            non_real.append(("minus", l1, l2))
    non_real.sort()

    inverted = None
    if not non_real:
        inverted = {
            index: BicomplexFunction(
                repart_to_polyanalytic(coeff.plus, "alpha"),
                repart_to_polyanalytic(coeff.minus, "beta"),
            )
            for index, coeff in coeffs.items()
        }
    return MainDecomposition(
        bound_dagger=bound_dagger,
        bound_tilde=bound_tilde,
        coeffs=coeffs,
        inverted=inverted,
        non_real=tuple(non_real),
    )
