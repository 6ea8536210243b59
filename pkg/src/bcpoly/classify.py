"""Exact-order classification of polynomial bicomplex functions.

Three gauges are computed here, each with two independent routes (closed-form
degree bookkeeping vs. brute iteration of the operators):

* the annihilation signature (m, n, k): minimal powers with
  ``d/dZ*^m f = d/dZ~^n f = d/dZ^dagger^k f = 0``;
* the polyharmonic order of f with respect to any of the Laplacians;
* membership in the structured classes: componentwise-holomorphic functions,
  the first-kind class (each component polyanalytic in its own variable
  pair), and the conjugate-power class it spans.

The zero function is assigned order 0 and signature (0, 0, 0) so that every
operation stays total.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bicomplex import BicomplexError
from .operators import Operator, laplacian, wirtinger
from .polyfun import BicomplexFunction, Poly4

__all__ = [
    "NotNilpotent",
    "Signature",
    "ClassMembership",
    "polyharmonic_order",
    "pair_polyharmonic_order",
    "signature_by_degrees",
    "signature_by_iteration",
    "polyholo_signature",
    "class_membership",
    "laplacian_orders",
    "classification_report",
]


class NotNilpotent(BicomplexError):
    """Raised when iterated application never reaches zero within the cap."""


@dataclass(frozen=True)
class Signature:
    """Minimal annihilation triple under (d/dZ*, d/dZ~, d/dZ^dagger)."""

    m: int
    n: int
    k: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.m, self.n, self.k)


@dataclass(frozen=True)
class ClassMembership:
    """Structured class flags for one function.

    ``a1_orders`` is the (m, n) pair of exact componentwise polyanalytic
    orders when each component depends only on its own variable pair, else
    ``None``; ``zstar_order`` is their max (the conjugate-power order).
    """

    is_bc_holomorphic: bool
    a1_orders: Optional[tuple[int, int]]
    zstar_order: Optional[int]


def polyharmonic_order(fn: BicomplexFunction, op: Operator, cap: Optional[int] = None) -> int:
    """Smallest p >= 0 with op^p fn = 0 (0 only for the zero function).

    The cap guards against non-degree-lowering operators; every Laplacian
    strictly lowers a degree functional so total degree + 2 always suffices.
    """
    if cap is None:
        cap = fn.total_degree() + 2
    count = 0
    current = fn
    while not current.is_zero():
        if count >= cap:
            raise NotNilpotent(f"operator did not annihilate the function within {cap} applications")
        current = op.apply(current)
        count += 1
    return count


def pair_polyharmonic_order(poly: Poly4, pair: tuple[int, int]) -> int:
    """Order of one component under its own-pair Laplacian d_z d_zbar,
    treating the other two variables as coefficient parameters."""
    if poly.is_zero():
        return 0
    z, zbar = pair
    return 1 + max(min(key[z], key[zbar]) for key in poly.terms)


def _degree_or(value: Optional[int], default: int = -1) -> int:
    return default if value is None else value


def signature_by_degrees(fn: BicomplexFunction) -> Signature:
    """Signature read off the componentwise conjugate-variable degrees."""
    dp = fn.plus.degrees()
    dm = fn.minus.degrees()
    m = 1 + max(_degree_or(dp[1]), _degree_or(dm[3]))
    n = 1 + max(_degree_or(dp[3]), _degree_or(dm[1]))
    k = 1 + max(_degree_or(dp[2]), _degree_or(dm[0]))
    return Signature(m, n, k)


def _annihilation_order(fn: BicomplexFunction, op: Operator) -> int:
    return polyharmonic_order(fn, op, cap=fn.total_degree() + 2)


def signature_by_iteration(fn: BicomplexFunction) -> Signature:
    """Independent route: brute-force iteration of the three operators."""
    return Signature(
        _annihilation_order(fn, wirtinger("Zstar")),
        _annihilation_order(fn, wirtinger("Ztilde")),
        _annihilation_order(fn, wirtinger("Zdagger")),
    )


polyholo_signature = signature_by_degrees


def class_membership(fn: BicomplexFunction) -> ClassMembership:
    holo = fn.plus.uses_only((0,)) and fn.minus.uses_only((2,))
    a1: Optional[tuple[int, int]] = None
    zstar: Optional[int] = None
    if fn.plus.uses_only((0, 1)) and fn.minus.uses_only((2, 3)):
        m = 1 + _degree_or(fn.plus.degree(1))
        n = 1 + _degree_or(fn.minus.degree(3))
        a1 = (m, n)
        zstar = max(m, n)
    return ClassMembership(holo, a1, zstar)


def laplacian_orders(fn: BicomplexFunction) -> dict[str, int]:
    return {f"d{i}": polyharmonic_order(fn, laplacian(i)) for i in range(1, 8)}


def classification_report(fn: BicomplexFunction) -> dict:
    """JSON-ready report combining signature, class flags, and orders."""
    sig = signature_by_degrees(fn)
    member = class_membership(fn)
    return {
        "signature": list(sig.as_tuple()),
        "bc_holomorphic": member.is_bc_holomorphic,
        "a1": list(member.a1_orders) if member.a1_orders is not None else None,
        "zstar_order": member.zstar_order,
        "orders": laplacian_orders(fn),
    }
