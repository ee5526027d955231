"""Command-line interface over the circuit text format.

Exit codes: 0 for success/affirmative answers, 1 for well-formed input with
a negative answer (not perfectly nested, verification failed), 2 for usage
or parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path

from .binseq import build_Sm
from .circuits import Circuit, format_circuit, one_step_reductions, parse_circuits
from .dot import family_dot, iso_dot, sm_dot
from .errors import NestcircError, NotPncError, TrivialPncError
from .family import family_bfs_oracle, family_closed_form, one_reduction, zero_reduction
from .iso import build_f, verify_iso
from .pnc import decompose, random_pnc, recognize

__all__ = ["main"]


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_circuits(path: str) -> list[Circuit]:
    return parse_circuits(_read_text(path))


def _load_single(path: str) -> Circuit:
    circuits = _load_circuits(path)
    if len(circuits) != 1:
        raise NestcircError(f"expected exactly one circuit, got {len(circuits)}")
    return circuits[0]


def _write_atomic(path: str, text: str) -> None:
    """Write via a temporary file in the target directory, then rename."""
    target = Path(path).absolute()
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def cmd_check(args: argparse.Namespace) -> int:
    status = 0
    for circuit in _load_circuits(args.input):
        try:
            p = recognize(circuit)
        except NotPncError as exc:
            print(f"NOT-PNC {exc.reason}")
            status = 1
        else:
            flat = ",".join(str(k) for k in p.internal.flat())
            print(f"PNC m={p.m} internal={flat}")
    return status


def cmd_decompose(args: argparse.Namespace) -> int:
    status = 0
    for circuit in _load_circuits(args.input):
        try:
            p = recognize(circuit)
        except NotPncError as exc:
            print(f"NOT-PNC {exc.reason}")
            status = 1
            continue
        chain = decompose(p)
        for idx, link in enumerate(chain.links):
            print(f"link {idx}: {format_circuit(link)}")
            if idx < len(chain.joints):
                print(f"joint {idx}: {chain.joints[idx]}")
    return status


def cmd_reduce(args: argparse.Namespace) -> int:
    status = 0
    for circuit in _load_circuits(args.input):
        if not (args.zero or args.one):
            for reduct in sorted(one_step_reductions(circuit)):
                print(format_circuit(reduct))
            continue
        try:
            p = recognize(circuit)
            reduct = one_reduction(p) if args.one else zero_reduction(p)
        except NotPncError as exc:
            print(f"NOT-PNC {exc.reason}")
            status = 1
        except TrivialPncError as exc:
            print(f"error: {exc}", file=sys.stderr)
            status = 1
        else:
            print(format_circuit(reduct.circuit))
    return status


def _build_family(circuit: Circuit, use_oracle: bool):
    if use_oracle:
        return family_bfs_oracle(circuit)
    return family_closed_form(recognize(circuit))


def cmd_family(args: argparse.Namespace) -> int:
    circuit = _load_single(args.input)
    try:
        fam = _build_family(circuit, args.oracle)
    except NotPncError as exc:
        print(f"NOT-PNC {exc.reason}", file=sys.stderr)
        return 1
    for member in fam.members:
        print(format_circuit(member))
    if args.dot:
        _write_atomic(args.dot, family_dot(fam))
    return 0


def cmd_hasse(args: argparse.Namespace) -> int:
    circuit = _load_single(args.input)
    try:
        fam = _build_family(circuit, args.oracle)
    except NotPncError as exc:
        print(f"NOT-PNC {exc.reason}", file=sys.stderr)
        return 1
    text = family_dot(fam)
    if args.out:
        _write_atomic(args.out, text)
    else:
        print(text, end="")
    return 0


def cmd_sm(args: argparse.Namespace) -> int:
    if args.m is not None:
        m = args.m
        if m < 0:
            print("error: -m must be non-negative", file=sys.stderr)
            return 2
    else:
        try:
            m = recognize(_load_single(args.input)).m
        except NotPncError as exc:
            print(f"NOT-PNC {exc.reason}", file=sys.stderr)
            return 1
    sm = build_Sm(m)
    for cls in sm.classes:
        print(cls.render())
    if args.dot:
        _write_atomic(args.dot, sm_dot(sm))
    return 0


def cmd_iso(args: argparse.Namespace) -> int:
    circuit = _load_single(args.input)
    try:
        p = recognize(circuit)
    except NotPncError as exc:
        print(f"NOT-PNC {exc.reason}", file=sys.stderr)
        return 1
    fam = family_closed_form(p)
    sm = build_Sm(p.m)
    witness = build_f(p)
    report = verify_iso(witness, fam, sm)
    for member, cls in witness.pairs:
        print(f"{format_circuit(member)} -> {cls.render()}")
    if args.dot:
        _write_atomic(args.dot, iso_dot(witness, fam, sm))
    if report.ok:
        print(f"PASS {report.pair_count} pairs")
        return 0
    for violation in report.violations:
        print(f"FAIL {violation}")
    return 1


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        p = random_pnc(args.seed, args.m, args.max_link)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(format_circuit(p.circuit))
    return 0


def _add_input(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("input", nargs="?", default="-", help="circuit file, or - for stdin")


def _add_mode(sp: argparse.ArgumentParser) -> None:
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument(
        "--closed-form",
        dest="oracle",
        action="store_false",
        help="use the chain closed form (default; root must be perfectly nested)",
    )
    mode.add_argument(
        "--oracle",
        dest="oracle",
        action="store_true",
        help="enumerate by breadth-first closure of one-step reductions",
    )
    sp.set_defaults(oracle=False)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nestcirc",
        description="Perfectly nested circuits: recognition, reductions, and order structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="recognize perfectly nested circuits")
    _add_input(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("decompose", help="print the chain-of-cycles form")
    _add_input(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("reduce", help="print reductions of each circuit")
    _add_input(sp)
    step = sp.add_mutually_exclusive_group()
    step.add_argument("--zero", action="store_true", help="only the 0-reduction (drop the innermost link)")
    step.add_argument("--one", action="store_true", help="only the 1-reduction (drop the outermost link)")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("family", help="list the reduction family")
    _add_input(sp)
    _add_mode(sp)
    sp.add_argument("--dot", metavar="PATH", help="also write the Hasse diagram as DOT")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("hasse", help="emit the family's Hasse diagram as DOT")
    _add_input(sp)
    _add_mode(sp)
    sp.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")
    sp.set_defaults(func=cmd_hasse)

    sp = sub.add_parser("sm", help="list the binary-sequence classes up to a bound")
    _add_input(sp)
    sp.add_argument("-m", type=int, default=None, help="bound (default: taken from the input circuit)")
    sp.add_argument("--dot", metavar="PATH", help="also write the class poset as DOT")
    sp.set_defaults(func=cmd_sm)

    sp = sub.add_parser("iso", help="verify the family/class-poset isomorphism")
    _add_input(sp)
    sp.add_argument("--dot", metavar="PATH", help="write side-by-side Hasse diagrams as DOT")
    sp.set_defaults(func=cmd_iso)

    sp = sub.add_parser("generate", help="print a deterministic random perfectly nested circuit")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--m", type=int, required=True, help="number of internal vertices")
    sp.add_argument("--max-link", type=int, default=8, help="maximum edges per link (default 8)")
    sp.set_defaults(func=cmd_generate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NestcircError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
