"""Command-line interface.

Subcommands: ``eval``, ``apply``, ``classify``, ``decompose``, ``verify``,
``paper-examples``.  Machine output is JSON on stdout (compact with
``--json``, indented otherwise where JSON is the natural shape); domain
errors are reported as structured JSON on stderr.  Exit codes: 0 success,
1 evaluation/verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bicomplex import BicomplexError
from .classify import classification_report
from .decompose import (
    almansi_bicomplex,
    expand_conjugate_basis,
    expand_zstar,
    main_decomposition,
    rehyp_to_holomorphic,
    rehyp_to_polyholomorphic_A1,
)
from .expr import (
    format_function,
    function_to_json_obj,
    parse,
    parse_point,
)
from .operators import laplacian, wirtinger
from .verify import SUITE_NAMES, report_to_json, run_suites
from .worked_examples import run_checks

USAGE_ERROR = 2
FAILURE = 1

_OPERATOR_NAMES = {
    "dZ": lambda: wirtinger("Z"),
    "dZs": lambda: wirtinger("Zstar"),
    "dZd": lambda: wirtinger("Zdagger"),
    "dZt": lambda: wirtinger("Ztilde"),
    **{f"d{i}": (lambda i=i: laplacian(i)) for i in range(1, 8)},
}

DECOMPOSE_KINDS = ("conjbasis", "zstar", "almansi", "rehyp-holo", "rehyp-a1", "main")


class UsageError(Exception):
    pass


def _emit(obj, compact: bool) -> None:
    if compact:
        print(json.dumps(obj, separators=(",", ":")))
    else:
        print(json.dumps(obj, indent=2))


def _domain_error(exc: Exception) -> int:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    condition = getattr(exc, "condition", None)
    if condition is not None:
        payload["condition"] = condition
    print(json.dumps(payload, separators=(",", ":")), file=sys.stderr)
    return FAILURE


def _parse_operator_spec(spec: str):
    name, _, power_text = spec.partition("^")
    if name not in _OPERATOR_NAMES:
        raise UsageError(f"unknown operator {name!r}; expected dZ, dZs, dZd, dZt or d1..d7")
    power = 1
    if power_text:
        try:
            power = int(power_text)
        except ValueError:
            raise UsageError(f"bad operator power {power_text!r}") from None
        if power < 0:
            raise UsageError("operator power must be nonnegative")
    return _OPERATOR_NAMES[name]() ** power


def _usage(message: str) -> int:
    print(json.dumps({"error": "UsageError", "message": message}), file=sys.stderr)
    return USAGE_ERROR


def _index_key(index) -> str:
    return ",".join(str(part) for part in index)


def cmd_eval(args) -> int:
    try:
        fn = parse(args.expr, raw=args.raw_idempotent)
        point = parse_point(args.at)
        value = fn.evaluate(point)
    except BicomplexError as exc:
        return _domain_error(exc)
    if args.json:
        _emit(value.to_json(), compact=True)
    else:
        print(str(value))
    return 0


def cmd_apply(args) -> int:
    operator = _parse_operator_spec(args.operator)
    try:
        fn = parse(args.expr, raw=args.raw_idempotent)
        image = operator.apply(fn)
    except BicomplexError as exc:
        return _domain_error(exc)
    if args.json:
        _emit(function_to_json_obj(image), compact=True)
    else:
        print(format_function(image))
    return 0


def cmd_classify(args) -> int:
    try:
        fn = parse(args.expr, raw=args.raw_idempotent)
        report = classification_report(fn)
    except BicomplexError as exc:
        return _domain_error(exc)
    _emit(report, compact=args.json)
    return 0


def cmd_decompose(args) -> int:
    try:
        fn = parse(args.expr, raw=args.raw_idempotent)
        if args.kind == "conjbasis":
            expansion = expand_conjugate_basis(fn)
            payload = {
                _index_key(index): function_to_json_obj(coeff)
                for index, coeff in sorted(expansion.coeffs.items())
            }
        elif args.kind == "zstar":
            layers = expand_zstar(fn)
            payload = {str(i): function_to_json_obj(layer) for i, layer in enumerate(layers)}
        elif args.kind == "almansi":
            dec = almansi_bicomplex(fn)
            payload = {str(i): function_to_json_obj(part) for i, part in enumerate(dec.parts)}
        elif args.kind == "rehyp-holo":
            payload = function_to_json_obj(rehyp_to_holomorphic(fn))
        elif args.kind == "rehyp-a1":
            inverted, orders = rehyp_to_polyholomorphic_A1(fn)
            payload = {"function": function_to_json_obj(inverted), "orders": list(orders)}
        else:  # main
            if args.n is None or args.k is None:
                return _usage("the 'main' decomposition needs --n and --k kernel bounds")
            dec = main_decomposition(fn, args.n, args.k)
            payload = {
                "G": {_index_key(i): function_to_json_obj(c) for i, c in sorted(dec.coeffs.items())},
                "f": (
                    {_index_key(i): function_to_json_obj(c) for i, c in sorted(dec.inverted.items())}
                    if dec.inverted is not None
                    else None
                ),
                "non_real": [list(entry) for entry in dec.non_real],
            }
    except BicomplexError as exc:
        return _domain_error(exc)
    _emit(payload, compact=args.json)
    return 0


def cmd_verify(args) -> int:
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    for name in names:
        if name not in SUITE_NAMES:
            return _usage(f"unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)} or 'all'")
    results = run_suites(
        names,
        trials=args.trials,
        seed=args.seed,
        max_degree=args.max_degree,
        coeff_bound=args.coeff_bound,
    )
    print(report_to_json(results, indent=None if args.json else 2))
    return 0 if sum(result.failures for result in results) == 0 else FAILURE


def cmd_paper_examples(args) -> int:
    checks = run_checks()
    _emit(checks, compact=args.json)
    return 0 if all(check["pass"] for check in checks) else FAILURE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="compact machine JSON on stdout")
    common.add_argument(
        "--raw-idempotent",
        action="store_true",
        help="accept the idempotent variables a, ac, b, bc in expressions",
    )

    parser = argparse.ArgumentParser(
        prog="bcpoly",
        description="Exact bicomplex polynomial calculus: evaluate, differentiate, classify, decompose, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression at a point")
    p.add_argument("expr")
    p.add_argument("--at", required=True, help="bicomplex point, e.g. '1 + 2i + 3j + 4k'")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("apply", parents=[common], help="apply a differential operator")
    p.add_argument("operator", help="dZ, dZs, dZd, dZt or d1..d7, with optional ^power")
    p.add_argument("expr")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("classify", parents=[common], help="signature, class flags, and orders")
    p.add_argument("expr")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", parents=[common], help="run a constructive decomposition")
    p.add_argument("kind", choices=DECOMPOSE_KINDS)
    p.add_argument("expr")
    p.add_argument("--n", type=int, default=None, help="dagger-direction kernel bound (main)")
    p.add_argument("--k", type=int, default=None, help="tilde-direction kernel bound (main)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="run seeded randomized verification suites")
    p.add_argument("suite", help=f"one of {', '.join(SUITE_NAMES)}, or 'all'")
    p.add_argument("--trials", type=int, default=None, help="override the per-suite trial count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--coeff-bound", type=int, default=9)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("paper-examples", parents=[common], help="re-run the built-in worked examples")
    p.set_defaults(func=cmd_paper_examples)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        return _usage(str(exc))


if __name__ == "__main__":
    sys.exit(main())
