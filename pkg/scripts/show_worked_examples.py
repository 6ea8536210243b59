#!/usr/bin/env python3
"""Walk through the built-in worked examples with readable output."""

from bcpoly import (
    classification_report,
    expand_conjugate_basis,
    format_function,
    laplacian,
    main_decomposition,
)
from bcpoly.worked_examples import cross_term_realizer, real_cross_term, run_checks


def main() -> None:
    cross = real_cross_term()
    realizer = cross_term_realizer()

    print("cross term          :", format_function(cross))
    print("  d1 image          :", format_function(laplacian(1).apply(cross)))
    print("  d5 image          :", format_function(laplacian(5).apply(cross)))
    print("  classification    :", classification_report(cross))
    print()
    print("realizing function  :", format_function(realizer))
    print("  classical real part equals the cross term:", realizer.real_part() == cross)
    expansion = expand_conjugate_basis(realizer)
    print("  conjugate basis   :", {index: format_function(fn) for index, fn in sorted(expansion.coeffs.items())})
    print()
    dec = main_decomposition(cross, 2, 2)
    print("two-index decomposition of the cross term (bounds 2, 2):")
    for index, coeff in sorted(dec.coeffs.items()):
        print(f"  G{index}: {format_function(coeff)}")
    assert dec.inverted is not None
    for index, fn in sorted(dec.inverted.items()):
        print(f"  f{index}: {format_function(fn)}")
    print("  reconstruction exact:", dec.reconstruct() == cross)
    print("  refined form exact  :", dec.reconstruct_from_inverted() == cross)
    print()
    print("fixed checks:")
    for check in run_checks():
        print(f"  [{'ok' if check['pass'] else 'FAIL'}] {check['name']}: {check['detail']}")


if __name__ == "__main__":
    main()
