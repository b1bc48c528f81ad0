"""Command-line front end.

Thin adapter over the library: parses arguments, loads states, calls
one library routine, and renders the result.  All numeric work lives in
the other modules; JSON is the source of truth and the table renderers
format the same values.

Exit codes: 0 success, 1 criterion verdict FAIL (criterion command
only), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys

import numpy as np

from .entanglement import purity_summary
from .scan import scan
from .states import (
    CATALOG_NAMES,
    PureState,
    StateFileError,
    load_state_file,
    make_state,
    named_state,
)
from .teleport import (
    RoleAssignment,
    criterion_check,
    pauli_factorization_check,
    simulate,
)

__all__ = ["main"]

_THETA_ALIASES = {
    "pi": math.pi,
    "pi/2": math.pi / 2.0,
    "pi/3": math.pi / 3.0,
    "pi/4": math.pi / 4.0,
    "pi/6": math.pi / 6.0,
}

_PRODUCT_ZERO = re.compile(r"^product_zero_(\d+)$")


class CliError(Exception):
    """Input error; rendered to stderr with exit code 2."""


def _load_state(source: str) -> PureState:
    match = _PRODUCT_ZERO.match(source)
    if match:
        count = int(match.group(1))
        if count < 1:
            raise CliError(f"bad state {source!r}: qubit count must be positive")
        return named_state("product_zero_n", count)
    if source in CATALOG_NAMES:
        return named_state(source)
    try:
        return load_state_file(source)
    except StateFileError as exc:
        raise CliError(str(exc)) from exc


def _parse_theta(text: str) -> float:
    key = text.strip().lower().replace(" ", "")
    if key in _THETA_ALIASES:
        return _THETA_ALIASES[key]
    try:
        return float(key)
    except ValueError:
        aliases = ", ".join(sorted(_THETA_ALIASES))
        raise CliError(
            f"bad theta {text!r}: expected radians or one of {aliases}"
        ) from None


def _parse_pair(text: str, flag: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise CliError(f"{flag} expects two comma-separated qubit labels, got {text!r}")
    try:
        pair = tuple(int(p) for p in parts)
    except ValueError:
        raise CliError(f"{flag} expects integers, got {text!r}") from None
    return pair  # range/distinctness checked by RoleAssignment


def _assignment(args: argparse.Namespace) -> RoleAssignment:
    try:
        return RoleAssignment(
            _parse_pair(args.alice, "--alice"),
            _parse_pair(args.bob, "--bob"),
            args.charlie,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _parse_input(text: str, seed: int) -> tuple[PureState, int | None]:
    """Input coefficients or 'random'; returns the state and echoed seed."""
    if text.strip().lower() == "random":
        rng = np.random.default_rng(seed)
        vec = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        return make_state(2, vec / np.linalg.norm(vec)), seed
    parts = text.split(",")
    if len(parts) != 4:
        raise CliError(
            f"--input expects 'random' or four comma-separated complex "
            f"coefficients, got {text!r}"
        )
    try:
        coeffs = [complex(p.strip().replace(" ", "")) for p in parts]
    except ValueError:
        raise CliError(f"--input has a bad complex coefficient in {text!r}") from None
    norm_sq = sum(abs(c) ** 2 for c in coeffs)
    if abs(norm_sq - 1.0) > 1e-6:
        raise CliError(
            f"--input squared norm {norm_sq!r} deviates from 1 by more than 1e-06"
        )
    return make_state(2, coeffs), None


def _print_json(doc) -> None:
    print(json.dumps(doc, indent=2))


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _render_purity(doc: dict) -> None:
    print("pair purities:")
    for pair, value in doc["pairs"].items():
        print(f"  {pair}  {_fmt(value)}")
    print("single purities:")
    for qubit, value in doc["singles"].items():
        print(f"  {qubit}   {_fmt(value)}")
    print(f"mmes: {_fmt(doc['mmes'])}")
    print(f"worst pair: {doc['worst_pair']}  max deviation: {_fmt(doc['max_deviation'])}")


def _render_assignment(doc: dict) -> str:
    alice = ",".join(str(q) for q in doc["alice"])
    bob = ",".join(str(q) for q in doc["bob"])
    return f"alice=({alice}) bob=({bob}) charlie={doc['charlie']}"


def _render_criterion(doc: dict) -> None:
    print(f"assignment: {_render_assignment(doc['assignment'])}")
    print(f"theta: {_fmt(doc['theta'])}")
    print(f"sigma111 defect: {_fmt(doc['sigma111_defect'])}")
    print(f"sigma112 defect: {_fmt(doc['sigma112_defect'])}")
    print(f"purity alice pair: {_fmt(doc['purity_alice_pair'])}")
    print(f"purity bob pair: {_fmt(doc['purity_bob_pair'])}")
    print(f"verdict: {'PASS' if doc['pass'] else 'FAIL'}")


def _render_scan(entries: list[dict]) -> None:
    for doc in entries:
        roots = (
            "-"
            if doc["roots"] is None
            else "[" + ", ".join(_fmt(r) for r in doc["roots"]) + "]"
        )
        print(
            f"{_render_assignment(doc)}  kind={doc['kind']}  roots={roots}  "
            f"min_defect={_fmt(doc['min_defect'])}  "
            f"argmin_theta={_fmt(doc['argmin_theta'])}  "
            f"purity_alice={_fmt(doc['purity_alice'])}  "
            f"purity_bob={_fmt(doc['purity_bob'])}"
        )


def _render_teleport(doc: dict) -> None:
    print(f"assignment: {_render_assignment(doc['assignment'])}")
    print(f"theta: {_fmt(doc['theta'])}")
    if doc["seed"] is not None:
        print(f"seed: {doc['seed']}")
    print("outcome  probability  fidelity")
    for record in doc["records"]:
        i, j, n = record["outcome"]
        flag = "  unrecoverable" if record.get("unrecoverable") else ""
        print(
            f"({i},{j},{n})  {_fmt(record['probability'])}  "
            f"{_fmt(record['fidelity'])}{flag}"
        )
    print(f"average fidelity: {_fmt(doc['average_fidelity'])}")


def _render_eq5(doc: dict) -> None:
    print(f"assignment: {_render_assignment(doc['assignment'])}")
    print(f"theta: {_fmt(doc['theta'])}")
    print(f"max deviation: {_fmt(doc['max_deviation'])}")
    print(f"holds: {_fmt(doc['holds'])}")


def _cmd_purity(args: argparse.Namespace) -> int:
    state = _load_state(args.state)
    if state.num_qubits != 5:
        raise CliError(f"purity needs a five-qubit state, got {state.num_qubits} qubits")
    doc = purity_summary(state, args.tol)
    if args.output == "json":
        _print_json(doc)
    else:
        _render_purity(doc)
    return 0


def _cmd_criterion(args: argparse.Namespace) -> int:
    state = _load_state(args.state)
    report = criterion_check(state, _assignment(args), _parse_theta(args.theta), args.tol)
    doc = report.as_dict()
    if args.output == "json":
        _print_json(doc)
    else:
        _render_criterion(doc)
    return 0 if report.passed else 1


def _cmd_scan(args: argparse.Namespace) -> int:
    state = _load_state(args.state)
    entries = scan(state, args.tol).as_dicts()
    if args.output == "json":
        _print_json(entries)
    else:
        _render_scan(entries)
    return 0


def _cmd_teleport(args: argparse.Namespace) -> int:
    state = _load_state(args.state)
    input_state, seed = _parse_input(args.input, args.seed)
    records = simulate(
        state, _assignment(args), _parse_theta(args.theta), input_state
    )
    doc = {
        "assignment": _assignment(args).as_dict(),
        "theta": _parse_theta(args.theta),
        "input": [[z.real, z.imag] for z in input_state.amplitudes],
        "seed": seed,
        "records": [record.as_dict() for record in records],
        "average_fidelity": sum(r.probability * r.fidelity for r in records),
    }
    if args.output == "json":
        _print_json(doc)
    else:
        _render_teleport(doc)
    return 0


def _cmd_eq5check(args: argparse.Namespace) -> int:
    state = _load_state(args.state)
    report = pauli_factorization_check(
        state, _assignment(args), _parse_theta(args.theta), args.tol
    )
    doc = {
        "assignment": _assignment(args).as_dict(),
        "theta": _parse_theta(args.theta),
        "holds": report.holds,
        "max_deviation": report.max_deviation,
    }
    if args.output == "json":
        _print_json(doc)
    else:
        _render_eq5(doc)
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--state",
        required=True,
        help="catalog state name or path to a state file (JSON or text)",
    )
    parser.add_argument(
        "--tol",
        type=float,
        default=1e-10,
        help="numeric tolerance for pass/fail decisions (default 1e-10)",
    )
    parser.add_argument(
        "--output",
        choices=("table", "json"),
        default="table",
        help="report format (default table)",
    )


def _add_assignment(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--alice", required=True, help="Alice's channel qubit pair, e.g. 1,2"
    )
    parser.add_argument(
        "--bob", required=True, help="Bob's channel qubit pair, e.g. 3,4"
    )
    parser.add_argument(
        "--charlie", required=True, type=int, help="Charlie's channel qubit"
    )
    parser.add_argument(
        "--theta",
        required=True,
        help="Charlie's basis angle in radians (aliases: pi, pi/2, pi/3, pi/4, pi/6)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="telecrit",
        description=(
            "Certify whether a five-qubit entangled channel supports faithful "
            "controlled teleportation of an arbitrary two-qubit state."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("purity", help="pair/single reduction purities of a channel")
    _add_common(p)
    p.set_defaults(func=_cmd_purity)

    p = sub.add_parser(
        "criterion",
        help="unitarity test of the two base operators (exit 1 on FAIL)",
    )
    _add_common(p)
    _add_assignment(p)
    p.set_defaults(func=_cmd_criterion)

    p = sub.add_parser("scan", help="classify all 30 role assignments of a channel")
    _add_common(p)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("teleport", help="simulate the full protocol, all 32 outcomes")
    _add_common(p)
    _add_assignment(p)
    p.add_argument(
        "--input",
        required=True,
        help="four comma-separated complex coefficients, or 'random'",
    )
    p.add_argument(
        "--seed",
        type=int,
        default=0,
        help="seed for --input random (default 0; echoed in the report)",
    )
    p.set_defaults(func=_cmd_teleport)

    p = sub.add_parser(
        "eq5check",
        help="verify all 32 outcome operators factor through the base operators",
    )
    _add_common(p)
    _add_assignment(p)
    p.set_defaults(func=_cmd_eq5check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (StateFileError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
