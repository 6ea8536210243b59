"""Acceptance criteria, one test per criterion.

Every check is an exact (zero-tolerance) equality over Gaussian rationals at
its stated trial count and time budget.  Each test prints one pass/fail line
(run with ``pytest tests/test_acceptance.py -v -s`` to see them).
"""

import json
import time
from pathlib import Path

import pytest

from bcpoly import (
    Bicomplex,
    E_MINUS,
    E_PLUS,
    K,
    ONE,
    PreconditionViolation,
    Sampler,
    Signature,
    almansi_bicomplex,
    almansi_complex,
    class_membership,
    expand_conjugate_basis,
    laplacian,
    main_decomposition,
    polyharmonic_order,
    rehyp_to_holomorphic,
    rehyp_to_polyholomorphic_A1,
    signature_by_degrees,
    signature_by_iteration,
    wirtinger,
)
from bcpoly.classify import pair_polyharmonic_order
from bcpoly.expr import format_function, function_from_json, function_to_json, parse
from bcpoly.operators import Operator
from bcpoly.polyfun import PAIR_ALPHA, PAIR_BETA, BicomplexFunction, Poly4
from bcpoly.worked_examples import cross_term_realizer, real_cross_term, run_checks

GOLDEN = Path(__file__).parent / "golden"


def timed(name, budget, body):
    start = time.perf_counter()
    try:
        body()
    except Exception:
        print(f"criterion {name}: FAIL")
        raise
    elapsed = time.perf_counter() - start
    suffix = f" < {budget}s budget" if budget is not None else ""
    print(f"criterion {name}: PASS ({elapsed:.2f}s{suffix})")
    if budget is not None:
        assert elapsed < budget, f"time budget exceeded: {elapsed:.2f}s >= {budget}s"


def test_c01_core_algebraic_identities():
    def body():
        sampler = Sampler(1)
        assert E_PLUS * E_PLUS == E_PLUS and E_MINUS * E_MINUS == E_MINUS
        assert E_PLUS * E_MINUS == Bicomplex(0, 0)
        assert E_PLUS + E_MINUS == ONE and E_PLUS - E_MINUS == K
        for _ in range(1000):
            z = sampler.bicomplex()
            assert z.det() == z.alpha * z.beta
            assert z.hyperbolic_part().to_bicomplex() == (z + z.conjugate("star")) / 2

    timed("1 core-algebra", 1.0, body)


def test_c02_operational_conjugation_calculus():
    def body():
        sampler = Sampler(2)
        d = wirtinger("Z")
        assert d.conjugate("star_op") == wirtinger("Zstar")
        assert d.conjugate("dagger_op") == wirtinger("Zdagger")
        assert d.conjugate("tilde_op") == wirtinger("Ztilde")
        rotations = (
            ("star_op", "dagger_op", "tilde_op"),
            ("dagger_op", "star_op", "tilde_op"),
            ("star_op", "tilde_op", "dagger_op"),
            ("tilde_op", "star_op", "dagger_op"),
            ("dagger_op", "tilde_op", "star_op"),
            ("tilde_op", "dagger_op", "star_op"),
        )
        for _ in range(1000):
            op = sampler.operator()
            for kind in ("star_op", "dagger_op", "tilde_op"):
                assert op.conjugate(kind).conjugate(kind) == op
            for first, second, expected in rotations:
                assert op.conjugate(first).conjugate(second) == op.conjugate(expected)

    timed("2 conjugation-calculus", 2.0, body)


def test_c03_reduction_lemma():
    def body():
        sampler = Sampler(3)
        d = {i: laplacian(i) for i in range(1, 8)}
        assert d[7] == d[1] + d[6]
        for _ in range(1000):
            f = sampler.function()
            assert d[6].apply(f) == d[1].apply(f.conjugate("dagger")).conjugate("dagger")
            assert d[5].apply(f) == d[2].apply(f.conjugate("star")).conjugate("star")
            assert d[4].apply(f) == d[3].apply(f.conjugate("star")).conjugate("star")
            assert d[7].apply(f) == d[1].apply(f) + d[6].apply(f)

    timed("3 reduction-lemma", 10.0, body)


def test_c04_counterexample_block():
    def body():
        cross = real_cross_term()
        realizer = cross_term_realizer()
        assert laplacian(1).apply(cross).is_zero()
        conj_pair_derivative = Operator(
            Poly4.monomial((0, 1, 0, 1)), Poly4.monomial((0, 1, 0, 1))
        )
        assert conj_pair_derivative.apply(cross) == BicomplexFunction.constant(1)
        assert signature_by_degrees(cross) == Signature(2, 2, 2)
        assert signature_by_iteration(cross) == Signature(2, 2, 2)
        assert realizer.real_part() == cross
        expansion = expand_conjugate_basis(realizer)
        two = BicomplexFunction.constant(2)
        assert expansion.coeffs == {(1, 0, 1): two, (1, 1, 0): two}
        star = BicomplexFunction.variable_star()
        dagger = BicomplexFunction.variable_dagger()
        tilde = BicomplexFunction.variable_tilde()
        assert realizer == (star * (dagger + tilde)).scale(2)
        with pytest.raises(PreconditionViolation) as err:
            rehyp_to_holomorphic(cross)
        assert err.value.condition == "dZdagger-kernel"

    timed("4 counterexample-block", None, body)


def test_c05_hyperbolic_real_part_theorem():
    def body():
        sampler = Sampler(5)
        d1 = laplacian(1)
        dagger, tilde = wirtinger("Zdagger"), wirtinger("Ztilde")
        for _ in range(500):
            holo = sampler.bc_holomorphic(real_constants=True)
            part = holo.hyperbolic_part()
            assert dagger.apply(part).is_zero()
            assert tilde.apply(part).is_zero()
            assert d1.apply(part).is_zero()
            assert rehyp_to_holomorphic(part) == holo

    timed("5 hyperbolic-real-part", 5.0, body)


def test_c06_layered_harmonic_decompositions():
    def body():
        sampler = Sampler(6)
        d1 = laplacian(1)
        for _ in range(500):
            pair = "alpha" if sampler.rng.random() < 0.5 else "beta"
            indices = PAIR_ALPHA if pair == "alpha" else PAIR_BETA
            poly = sampler.pair_poly(pair)
            dec = almansi_complex(poly, pair)
            assert dec.reconstruct() == poly
            assert dec.order == pair_polyharmonic_order(poly, indices) <= 5
            for part in dec.parts:
                assert part.diff(indices[0]).diff(indices[1]).is_zero()

            fn = sampler.function()
            bdec = almansi_bicomplex(fn)
            assert bdec.reconstruct() == fn
            assert bdec.order == polyharmonic_order(fn, d1) <= 5
            for part in bdec.parts:
                assert d1.apply(part).is_zero()

    timed("6 layered-decomposition", 10.0, body)


def test_c07_first_kind_round_trip():
    def body():
        sampler = Sampler(7)
        d1 = laplacian(1)
        for _ in range(500):
            m, n = sampler.rng.randint(1, 4), sampler.rng.randint(1, 4)
            for attempt in range(10):
                f = sampler.a1_function(m, n, normalized=True)
                part = f.hyperbolic_part()
                top = max(m, n)
                if (d1 ** top).apply(part).is_zero() and not (d1 ** (top - 1)).apply(part).is_zero():
                    break
            else:
                raise AssertionError("degenerate draws exhausted the retry budget")
            inverted, orders = rehyp_to_polyholomorphic_A1(part)
            assert inverted == f and orders == (m, n)

    timed("7 first-kind-round-trip", 10.0, body)


def test_c08_main_theorem():
    def body():
        sampler = Sampler(8)
        d1 = laplacian(1)
        dagger, tilde = wirtinger("Zdagger"), wirtinger("Ztilde")
        for _ in range(500):
            m, n, k = (sampler.rng.randint(1, 3) for _ in range(3))
            f = sampler.a2_function(m, n, k)
            part = f.hyperbolic_part()
            power = max(n, k)
            assert (dagger ** power).apply(part).is_zero()
            assert (tilde ** power).apply(part).is_zero()
        for trial in range(500):
            real_case = trial % 2 == 0
            n = sampler.rng.randint(1, 3)
            k = sampler.rng.randint(1, 3)
            if not real_case:
                n, k = max(n, 2), max(k, 2)
            fn, expected_non_real = sampler.kernel_box_function(n, k, real_coeffs=real_case)
            dec = main_decomposition(fn, n, k)
            assert dec.reconstruct() == fn
            order = polyharmonic_order(fn, d1)
            for coeff in dec.coeffs.values():
                assert polyharmonic_order(coeff, d1) <= order
            if real_case:
                assert dec.inverted is not None and not dec.non_real
                assert dec.reconstruct_from_inverted() == fn
                for inverted in dec.inverted.values():
                    assert class_membership(inverted).a1_orders is not None
            else:
                assert dec.inverted is None
                assert list(dec.non_real) == [tuple(entry) for entry in expected_non_real]

    timed("8 main-theorem", 15.0, body)


def test_c09_classification_oracle_equivalence():
    def body():
        sampler = Sampler(9)
        for _ in range(1000):
            f = sampler.function()
            assert signature_by_degrees(f) == signature_by_iteration(f)

    timed("9 classification-oracle", 5.0, body)


def test_c10_serialization_round_trips_and_goldens():
    def body():
        sampler = Sampler(10)
        for _ in range(500):
            f = sampler.function()
            assert parse(format_function(f), raw=True) == f
            assert function_from_json(function_to_json(f)) == f
        cross, realizer = real_cross_term(), cross_term_realizer()
        assert (GOLDEN / "cross_term.txt").read_bytes() == (format_function(cross) + "\n").encode()
        assert (GOLDEN / "realizer.txt").read_bytes() == (format_function(realizer) + "\n").encode()
        assert (GOLDEN / "cross_term.json").read_bytes() == (function_to_json(cross) + "\n").encode()
        assert (GOLDEN / "realizer.json").read_bytes() == (function_to_json(realizer) + "\n").encode()
        report = json.dumps(run_checks(), separators=(",", ":")) + "\n"
        assert (GOLDEN / "worked_examples.json").read_bytes() == report.encode()

    timed("10 serialization", 2.0, body)
