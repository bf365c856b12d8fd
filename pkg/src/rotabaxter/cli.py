"""Command-line front end.

Subcommands: eval, saturate, ascent, reduce, member, prime, char,
enumerate-ops, verify, to-poly.  Text output is deterministic; --json
emits the documented schemas.  Exit codes: 0 success, 2 parse/usage
errors, 3 unstable saturation under --require-stable.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classify, jsonio
from .algebra import RBAlgebra
from .divided_powers import to_poly
from .finite_rings import FiniteRing, RBOperator, characteristic, enumerate_rb_operators, verify_rb_operator
from .ideals import saturate
from .parse import ParseError, parse_ascent_pairs, parse_expression
from .rings import CoeffRing

__all__ = ["main"]

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_UNSTABLE = 3


def _add_algebra_flags(sub, *, bound=False):
    sub.add_argument("--ring", required=True, help="coefficient ring: z, q or z:<n>")
    sub.add_argument("--weight", required=True, help="weight of the algebra (ring element)")
    if bound:
        sub.add_argument("--bound", type=int, required=True, help="degree bound of the report")


def _add_ideal_flags(sub):
    sub.add_argument(
        "--gens",
        action="append",
        default=[],
        help="generator expression; repeatable, ';' separates several in one flag",
    )
    sub.add_argument("--ideal-file", help="JSON ideal file (ring/weight/generators/bound)")
    sub.add_argument("--slack-max", type=int, default=12, help="largest saturation slack tried")
    sub.add_argument("--require-stable", action="store_true", help="exit 3 unless saturation stabilized")


def _add_json_flag(sub):
    sub.add_argument("--json", action="store_true", help="emit JSON instead of text")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rbx",
        description="Exact computations in the free Rota-Baxter algebra on its base ring.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("eval", help="evaluate an element expression")
    _add_algebra_flags(p)
    _add_json_flag(p)
    p.add_argument("expression")

    for name, help_text in (
        ("saturate", "full saturation report (levels, ascent, stability)"),
        ("ascent", "ascent set of a finitely generated ideal"),
    ):
        p = subs.add_parser(name, help=help_text)
        _add_algebra_flags(p, bound=True)
        _add_ideal_flags(p)
        _add_json_flag(p)

    p = subs.add_parser("reduce", help="canonical quotient representative of an element")
    _add_algebra_flags(p, bound=True)
    _add_ideal_flags(p)
    _add_json_flag(p)
    p.add_argument("expression")

    p = subs.add_parser("member", help="ideal membership verdict for an element")
    _add_algebra_flags(p, bound=True)
    _add_ideal_flags(p)
    _add_json_flag(p)
    p.add_argument("expression")

    p = subs.add_parser("prime", help="prime classification of a weight-0 ideal over Z")
    p.add_argument("--pairs", required=True, help="ascent pairs s:omega[,s:omega...]")
    p.add_argument("--weight", default="0", help="must be 0 (the classified case)")
    _add_json_flag(p)

    p = subs.add_parser("char", help="characteristic (kernel ascent set) of a finite ring")
    p.add_argument("ring_spec", nargs="?", help="zmod:<n> shorthand")
    p.add_argument("--ring-file", help="JSON ring file (orders/unit/mult/operator)")
    p.add_argument("--op", type=int, help="multiplication-by-c operator for zmod rings")
    p.add_argument("--weight", required=True, type=int)
    p.add_argument("--bound", type=int, default=8)
    _add_json_flag(p)

    p = subs.add_parser("enumerate-ops", help="all Rota-Baxter operators on Z/n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", required=True, type=int)
    _add_json_flag(p)

    p = subs.add_parser("verify", help="check the Rota-Baxter identity on a finite ring")
    p.add_argument("ring_spec", nargs="?", help="zmod:<n> shorthand")
    p.add_argument("--ring-file", help="JSON ring file")
    p.add_argument("--op", type=int, help="multiplication-by-c operator for zmod rings")
    p.add_argument("--weight", required=True, type=int)
    _add_json_flag(p)

    p = subs.add_parser("to-poly", help="divided-power polynomial image (ring q, weight 0)")
    p.add_argument("--weight", default="0", help="must be 0 (the bridge case)")
    _add_json_flag(p)
    p.add_argument("expression")

    return parser


def _algebra(args) -> RBAlgebra:
    return RBAlgebra(CoeffRing.from_descriptor(args.ring), args.weight)


def _gather_ideal(args):
    """Returns (algebra, generators, bound) from flags or an ideal file."""
    if args.ideal_file:
        with open(args.ideal_file, "r", encoding="utf-8") as handle:
            algebra, gens, bound = jsonio.ideal_input_from_dict(json.load(handle))
        if getattr(args, "bound", None) is not None:
            bound = args.bound
        return algebra, gens, bound
    algebra = _algebra(args)
    texts = []
    for blob in args.gens:
        texts.extend(part for part in blob.split(";") if part.strip())
    if not texts:
        raise ValueError("no generators given (use --gens or --ideal-file)")
    gens = [parse_expression(algebra, text) for text in texts]
    return algebra, gens, args.bound


def _saturated(args):
    algebra, gens, bound = _gather_ideal(args)
    return saturate(gens, bound, slack_max=args.slack_max)


def _finite_ring(args):
    if args.ring_file:
        with open(args.ring_file, "r", encoding="utf-8") as handle:
            ring, op = jsonio.finite_ring_from_dict(json.load(handle))
        if op is None:
            if args.op is None:
                raise ValueError("no operator in the ring file and no --op given")
            op = RBOperator.scaling(args.op)
        return ring, op
    spec = args.ring_spec or ""
    if not spec.startswith("zmod:"):
        raise ValueError("expected a zmod:<n> ring spec or --ring-file")
    n = int(spec.split(":", 1)[1])
    if args.op is None:
        raise ValueError("--op <c> is required with zmod:<n>")
    return FiniteRing.zmod(n), RBOperator.scaling(args.op)


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _run(args) -> int:
    if args.command == "eval":
        value = parse_expression(_algebra(args), args.expression)
        _emit(args, str(value), {"element": jsonio.element_pairs(value)})
        return EXIT_OK

    if args.command in ("saturate", "ascent"):
        state = _saturated(args)
        if args.command == "saturate":
            report = jsonio.saturation_report(state)
            lines = [
                "omegas[0..{}]: {}".format(state.bound, " ".join(report["omegas"])),
                f"ascent: {state.ascent_set(allow_unstable=True)}",
                "stable: {} (slack {})".format("yes" if state.stable else "no", state.slack_used),
            ]
            if state.diagnostic:
                lines.append(f"diagnostic: {state.diagnostic}")
            _emit(args, "\n".join(lines), report)
        else:
            ascent = state.ascent_set(allow_unstable=True)
            _emit(
                args,
                f"{ascent} {'stable' if state.stable else 'unstable'}",
                jsonio.ascent_to_dict(ascent),
            )
        if args.require_stable and not state.stable:
            return EXIT_UNSTABLE
        return EXIT_OK

    if args.command == "reduce":
        state = _saturated(args)
        if args.require_stable and not state.stable:
            print("saturation did not stabilize", file=sys.stderr)
            return EXIT_UNSTABLE
        ascent = state.ascent_set(allow_unstable=True)
        gens = state.ascent_generating_set() if state.stable else None
        if gens is None:
            raise ValueError("cannot reduce against an unstable saturation")
        value = parse_expression(state.algebra, args.expression)
        reduced = classify.canonical_representative(value, ascent, gens)
        _emit(args, str(reduced), {"element": jsonio.element_pairs(reduced)})
        return EXIT_OK

    if args.command == "member":
        state = _saturated(args)
        value = parse_expression(state.algebra, args.expression)
        verdict = state.membership(value)
        _emit(args, verdict, {"verdict": verdict})
        if args.require_stable and not state.stable:
            return EXIT_UNSTABLE
        return EXIT_OK

    if args.command == "prime":
        ring = CoeffRing.integers()
        ascent = parse_ascent_pairs(ring, args.pairs)
        result = classify.classify_prime(ascent, weight=args.weight)
        if result.prime:
            text = f"prime, quotient {result.quotient}"
        elif result.witness is not None:
            text = f"not prime, witness ({result.witness[0]}, {result.witness[1]})"
        else:
            text = "not prime"
        _emit(args, text, jsonio.prime_report(result))
        return EXIT_OK

    if args.command == "char":
        ring, op = _finite_ring(args)
        result = characteristic(ring, op, args.weight, args.bound)
        payload = jsonio.ascent_to_dict(result.ascent)
        payload["omegas"] = [str(level.gen) for level in result.omegas]
        payload["stable"] = result.stable
        _emit(args, str(result), payload)
        return EXIT_OK

    if args.command == "enumerate-ops":
        ops = enumerate_rb_operators(args.n, args.weight)
        _emit(args, " ".join(map(str, ops)), {"n": args.n, "weight": args.weight, "operators": ops})
        return EXIT_OK

    if args.command == "verify":
        ring, op = _finite_ring(args)
        ok = verify_rb_operator(ring, op, args.weight)
        _emit(args, "ok" if ok else "violates identity", {"ok": ok})
        return EXIT_OK

    if args.command == "to-poly":
        algebra = RBAlgebra(CoeffRing.rationals(), 0)
        if CoeffRing.rationals().coerce(args.weight) != 0:
            raise ValueError("the polynomial bridge exists only at weight 0")
        value = parse_expression(algebra, args.expression)
        poly = to_poly(value)
        _emit(
            args,
            str(poly),
            {"poly": str(poly), "coeffs": [str(c) for c in poly.coeffs]},
        )
        return EXIT_OK

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
