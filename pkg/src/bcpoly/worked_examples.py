"""Built-in worked examples and their fixed verification block.

The pair of functions here demonstrates the failure of the classical
real-part correspondence: ``real_cross_term`` is real-valued and annihilated
by the bicomplex Laplacian, yet it is not the real part of any
componentwise-holomorphic function; ``cross_term_realizer`` realizes it as a
classical real part while sitting strictly outside the holomorphic class.
"""

from __future__ import annotations

from .classify import laplacian_orders, signature_by_degrees, signature_by_iteration
from .decompose import PreconditionViolation, expand_conjugate_basis, rehyp_to_holomorphic
from .expr import format_function, parse
from .operators import laplacian
from .polyfun import BicomplexFunction

__all__ = ["real_cross_term", "cross_term_realizer", "run_checks"]


def real_cross_term() -> BicomplexFunction:
    """(a + ac)*(b + bc) in both components: real-valued and d1-harmonic."""
    return parse("(a+ac)*(b+bc)", raw=True)


def cross_term_realizer() -> BicomplexFunction:
    """2*star(Z)*(dag(Z) + til(Z)): its classical real part is the cross term."""
    return parse("2*star(Z)*(dag(Z) + til(Z))")


def run_checks() -> list[dict]:
    """Run the fixed example checks; each entry reports name, pass, detail."""
    cross = real_cross_term()
    realizer = cross_term_realizer()
    checks: list[dict] = []

    def record(name: str, passed: bool, detail: str) -> None:
        checks.append({"name": name, "pass": bool(passed), "detail": detail})

    image = laplacian(1).apply(cross)
    record("cross-term-d1-harmonic", image.is_zero(), f"d1 image: {format_function(image)}")

    image = laplacian(5).apply(cross)
    expected = BicomplexFunction.constant(1)
    record("cross-term-d5-constant-one", image == expected, f"d5 image: {format_function(image)}")

    sig = signature_by_degrees(cross).as_tuple()
    sig_iter = signature_by_iteration(cross).as_tuple()
    record(
        "cross-term-signature-222",
        sig == (2, 2, 2) and sig_iter == (2, 2, 2),
        f"degree route {sig}, iteration route {sig_iter}",
    )

    orders = laplacian_orders(cross)
    record("cross-term-d1-order-1", orders["d1"] == 1, f"orders: {orders}")

    realized = realizer.real_part()
    record(
        "realizer-real-part-is-cross-term",
        realized == cross,
        f"real part: {format_function(realized)}",
    )

    expansion = expand_conjugate_basis(realizer)
    two = BicomplexFunction.constant(2)
    expected_coeffs = {(1, 0, 1): two, (1, 1, 0): two}
    record(
        "realizer-conjugate-basis",
        expansion.coeffs == expected_coeffs and expansion.reconstruct() == realizer,
        f"indices: {sorted(expansion.coeffs)}",
    )

    try:
        rehyp_to_holomorphic(cross)
    except PreconditionViolation as exc:
        record(
            "cross-term-rehyp-inversion-rejected",
            exc.condition == "dZdagger-kernel",
            f"rejected with condition {exc.condition}",
        )
    else:
        record("cross-term-rehyp-inversion-rejected", False, "inversion unexpectedly succeeded")

    return checks
