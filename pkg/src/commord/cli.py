"""Batch command-line front end with JSON payloads on stdout.

Exit codes: 0 = success (every "ok" flag in the payload is true),
1 = a verification or hypothesis failure, 2 = usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import serialize
from .errors import (
    AlgebraError,
    DomainError,
    HypothesisNotSatisfied,
    NotInWeightSet,
)
from .rings import Ring, coerce, ring_from_spec
from .structure import quantum_plane_demo
from .weightset import decompose
from .witness import (
    build_C,
    build_theorem32,
    corollary_units,
    lemma_pd_check,
    realize_commutator,
)


def _emit(payload) -> None:
    sys.stdout.write(serialize.dumps(payload) + "\n")


def _fail(message: str, code: int) -> int:
    sys.stderr.write(f"error: {message}\n")
    return code


def _parse_ring_element(ring: Ring, text: str):
    try:
        if "/" in text:
            return coerce(ring, Fraction(text))
        return ring.from_int(int(text))
    except (ValueError, AlgebraError) as exc:
        raise DomainError(f"cannot read {text!r} as an element of {ring!r}: {exc}")


def cmd_decide(args) -> int:
    if args.k < 2 or args.n < 1:
        return _fail("decide needs --k >= 2 and --n >= 1", 2)
    cert = decompose(args.k, args.n)
    _emit({
        "k": cert.k,
        "n": cert.n,
        "nonempty": cert.coefficients is not None,
        "primes": list(cert.primes),
        "coefficients": None if cert.coefficients is None else list(cert.coefficients),
    })
    return 0


def cmd_witness(args) -> int:
    if args.k < 2 or args.n < 1:
        return _fail("witness needs --k >= 2 and --n >= 1", 2)
    try:
        witness = realize_commutator(build_C(args.k, args.n), args.k)
    except NotInWeightSet as exc:
        _emit({"k": args.k, "n": args.n, "nonempty": False, "error": str(exc)})
        return 1
    payload = serialize.witness_to_json(witness)
    text = serialize.dumps(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    sys.stdout.write(text + "\n")
    return 0


def cmd_verify(args) -> int:
    try:
        with open(args.path, "r", encoding="utf-8") as fh:
            raw = fh.read()
        obj = json.loads(raw)
        witness = serialize.witness_from_json(obj)
    except (OSError, json.JSONDecodeError, DomainError, AlgebraError, ValueError) as exc:
        return _fail(f"cannot read witness file: {exc}", 2)
    checks = witness.checks()
    failed = [name for name, ok in checks.items() if not ok]
    _emit({"checks": checks, "ok": not failed,
           "failed": failed or None, "k": witness.k, "n": witness.n})
    if failed:
        return _fail(f"witness checks failed: {', '.join(failed)}", 1)
    return 0


def cmd_lemma_pd(args) -> int:
    if args.n < 2:
        return _fail("lemma-pd needs --n >= 2", 2)
    try:
        ring = ring_from_spec(args.ring)
    except DomainError as exc:
        return _fail(str(exc), 2)
    try:
        report = lemma_pd_check(args.n, ring)
    except AlgebraError as exc:
        _emit({"n": args.n, "ring": args.ring, "ok": False, "error": str(exc)})
        return 1
    _emit({
        "n": report["n"],
        "ring": args.ring,
        "one_minus_n": serialize.scalar_to_json(report["one_minus_n"]),
        "routes_agree": report["routes_agree"],
        "ok": report["ok"],
    })
    return 0


def cmd_theorem32(args) -> int:
    if args.n < 2:
        return _fail("theorem32 needs --n >= 2", 2)
    try:
        ring = ring_from_spec(args.ring)
    except DomainError as exc:
        return _fail(str(exc), 2)
    u = None
    if args.u is not None:
        try:
            u = _parse_ring_element(ring, args.u)
        except DomainError as exc:
            return _fail(str(exc), 2)
    try:
        dec = corollary_units(args.n, ring, args.strategy, u=u)
        build_theorem32(args.n, dec)
    except HypothesisNotSatisfied as exc:
        _emit({"n": args.n, "ring": args.ring, "strategy": args.strategy,
               "ok": False, "hypothesis": exc.hypothesis, "error": str(exc)})
        return 1
    except DomainError as exc:
        return _fail(str(exc), 2)
    _emit({
        "n": args.n,
        "ring": args.ring,
        "strategy": args.strategy,
        "units": [serialize.scalar_to_json(v) for v in dec.units],
        "commutator_is_cyclic_shift": True,
        "power_ok": True,
        "ok": True,
    })
    return 0


def cmd_structure_demo(args) -> int:
    if not 2 <= args.n <= 6:
        return _fail("structure-demo needs 2 <= --n <= 6", 2)
    report = quantum_plane_demo(args.n, seed=args.seed)
    _emit({
        "n": report["n"],
        "u_power_ok": report["u_power_ok"],
        "conjugation_ok": report["conjugation_ok"],
        "dim_corner": report["dim_corner"],
        "phi_bijective": report["phi_bijective"],
        "e0_coeffs": [serialize.scalar_to_json(c) for c in report["e0_coeffs"]],
    })
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commord",
        description="Exact decisions and witnesses for commutators of finite "
                    "multiplicative order.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide",
                       help="is there an n x n commutator whose k-th power is Id?")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_decide)

    p = sub.add_parser("witness", help="construct a checked witness pair (A, B)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", type=str, default=None,
                   help="also write the witness JSON to this file")
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("verify", help="re-run all checks on a witness file")
    p.add_argument("path", type=str)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("lemma-pd",
                       help="check [D,P]^n = (1-n) Id by two independent routes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ring", type=str, default="Q",
                   help="Q, Zmod:m or Cyclo:m (default Q)")
    p.set_defaults(handler=cmd_lemma_pd)

    p = sub.add_parser("theorem32",
                       help="build (A, B) with [A,B]^n = Id from central units")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ring", type=str, default="Q")
    p.add_argument("--strategy", type=str, required=True,
                   choices=["n2", "n3", "inverse_n_minus_1", "char_divides"])
    p.add_argument("--u", type=str, default=None,
                   help="the unit u for the n3 strategy (integer or p/q)")
    p.set_defaults(handler=cmd_theorem32)

    p = sub.add_parser("structure-demo",
                       help="full matrix-ring recognition demo on the quantum plane")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the randomized homomorphism checks")
    p.set_defaults(handler=cmd_structure_demo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except DomainError as exc:
        return _fail(str(exc), 2)
    except AlgebraError as exc:
        return _fail(str(exc), 1)


def entry_point() -> None:
    raise SystemExit(main())
