"""Command-line front end.

Exit status: 0 when every check passes, 1 when a check fails or the input
has the wrong structure, 2 on usage errors, 3 on unreadable/malformed files.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import opfile
from .bell import (
    CHSH3_QUANTUM_MAX,
    TSIRELSON,
    chsh3_bracket,
    chsh3_oracle,
    chsh3_value,
    chsh_correlators,
    network_distribution,
    tsirelson_setting,
)
from .compose import composite_dims
from .cspace import BellOutcome, ComplexOp, named_bell_state
from .errors import DimensionError, StructureError
from .kahler import (
    KahlerOp,
    KahlerState,
    complexify_op,
    complexify_state,
    realify_op,
    realify_state,
)
from .verify import SUITE_NAMES, Report, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _g(x: float) -> str:
    return f"{x:.15g}"


def _emit(report: Report, as_json: bool) -> None:
    print(json.dumps(report.to_dict()) if as_json else report.line())


def cmd_verify(args) -> int:
    reports = run_suites(args.suite, args.trials, args.seed, args.tol if args.tol is not None else 1e-10)
    for r in reports:
        _emit(r, args.json)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_chsh(args) -> int:
    tol = args.tol if args.tol is not None else 1e-9
    start = time.perf_counter()
    state = realify_state(named_bell_state("psi-"))
    values = chsh_correlators(state, tsirelson_setting())
    value = values[0] + values[1] - values[2] + values[3]
    deviation = abs(value - TSIRELSON)
    report = Report("chsh", 1, deviation, tol, 0, int(round((time.perf_counter() - start) * 1000)))
    if not args.json:
        for name, v in zip(("C00", "C10", "C01", "C11"), values):
            print(f"{name}={_g(v)}")
        print(f"value={_g(value)} target={_g(TSIRELSON)} deviation={deviation:.3g}")
    _emit(report, args.json)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_chsh3(args) -> int:
    tol = args.tol if args.tol is not None else 1e-9
    start = time.perf_counter()
    outcome = BellOutcome.parse(args.outcome)
    value = chsh3_value(outcome)
    oracle = chsh3_oracle(outcome)
    bracket = chsh3_bracket(outcome)
    deviation = max(abs(value - CHSH3_QUANTUM_MAX), abs(value - oracle))
    report = Report(f"chsh3-{outcome}", 1, deviation, tol, 0,
                    int(round((time.perf_counter() - start) * 1000)))
    if not args.json:
        print(f"outcome={outcome} post_selected_state=bell({outcome})")
        print("bracket=[[" + ", ".join(_g(v) for v in bracket[0]) + "], ["
              + ", ".join(_g(v) for v in bracket[1]) + "]]")
        print(f"value={_g(value)} oracle={_g(oracle)} target={_g(CHSH3_QUANTUM_MAX)} "
              f"deviation={abs(value - CHSH3_QUANTUM_MAX):.3g}")
        if abs(oracle - CHSH3_QUANTUM_MAX) > tol:
            print(f"finding: complex-side value {_g(oracle)} differs from 6*sqrt(2)")
    _emit(report, args.json)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_dims(args) -> int:
    kron_dim, symp_dim = composite_dims(args.m, args.n)
    if args.json:
        print(json.dumps({"m": args.m, "n": args.n, "kronecker": kron_dim,
                          "symplectic": symp_dim, "ratio": kron_dim // symp_dim}))
    else:
        print(f"m={args.m} n={args.n} kronecker={kron_dim} symplectic={symp_dim} "
              f"ratio={kron_dim // symp_dim}")
    return EXIT_OK


def _map(op: ComplexOp, direction: str) -> ComplexOp:
    rows, cols = op.shape
    if direction == "realify":
        if cols == 1:
            return ComplexOp.real(realify_state(op).mat)
        if rows != cols:
            raise DimensionError(f"realify needs a square operator or a column state, got {rows}x{cols}")
        return ComplexOp.real(realify_op(op).mat)
    if op.im.any():
        raise StructureError("complexify expects a real matrix (im must be absent or zero)")
    if cols == 2 and rows % 2 == 0 and rows != 2:
        return complexify_state(KahlerState(op.re))
    return complexify_op(KahlerOp(op.re))


def cmd_map(args) -> int:
    try:
        op = opfile.load(args.file)
    except opfile.OperatorFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        print(opfile.dumps(_map(op, args.direction)))
    except (DimensionError, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_network(args) -> int:
    dist = network_distribution()
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                dist.to_csv(fh)
        except OSError as exc:
            print(f"error: {args.output}: {exc.strerror}", file=sys.stderr)
            return EXIT_IO
    else:
        dist.to_csv(sys.stdout)
    return EXIT_OK


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kahlerqm", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="pass tolerance")
    common.add_argument("--json", action="store_true", help="emit the report as JSON")

    v = sub.add_parser("verify", parents=[common], help="run a property suite")
    v.add_argument("suite", choices=SUITE_NAMES)
    v.add_argument("--trials", type=_positive, default=1000)
    v.add_argument("--seed", type=int, default=42)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("chsh", parents=[common], help="CHSH value on psi- (target 2*sqrt(2))")
    c.set_defaults(func=cmd_chsh)

    c3 = sub.add_parser("chsh3", parents=[common], help="CHSH3 value for one Bell outcome")
    c3.add_argument("--outcome", choices=["00", "01", "10", "11"], default="00")
    c3.set_defaults(func=cmd_chsh3)

    d = sub.add_parser("dims", help="Kronecker-doubled vs symplectic composite dimension")
    d.add_argument("m", type=_positive)
    d.add_argument("n", type=_positive)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_dims)

    m = sub.add_parser("map", help="realify or complexify an operator/state file")
    m.add_argument("file")
    m.add_argument("--direction", choices=["realify", "complexify"], default="realify")
    m.set_defaults(func=cmd_map)

    n = sub.add_parser("network", help="export the entanglement-swapping distribution as CSV")
    n.add_argument("--output", "-o", help="file path (default: stdout)")
    n.set_defaults(func=cmd_network)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
