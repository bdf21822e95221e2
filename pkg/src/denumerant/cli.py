"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ConsistencyError, WavePeriodError
from .exact import rational_str
from .partitions import Components, denumerant_bruteforce
from .verify import random_component_sets, verify_components
from .waves import DedekindSumSpec, fourier_dedekind, quasipolynomial, wave


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    return values


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _components(values) -> Components:
    if values is None:
        raise UsageError("-d/--components is required")
    try:
        return Components(values)
    except ValueError as exc:
        raise UsageError(f"invalid components: {exc}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="denumerant", description="Restricted partition counts and Sylvester waves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, formats=("text", "json", "csv"), default="text"):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=formats, default=default)
        return p

    p = add("count", "denumerant values for l = 0..L (brute force)")
    p.add_argument("-d", "--components", type=_int_list)
    p.add_argument("-L", "--max-l", type=_nonneg, required=True)

    p = add("quasipoly", "all waves as a quasipolynomial", formats=("json", "text"), default="json")
    p.add_argument("-d", "--components", type=_int_list)

    p = add("wave", "one wave W_q", formats=("text", "json"))
    p.add_argument("-d", "--components", type=_int_list)
    p.add_argument("-q", "--period", type=int, required=True)

    p = add("dedekind", "Fourier-Dedekind sum s_l(betas; q)", formats=("text", "json"))
    p.add_argument("-l", "--value", type=int, required=True)
    p.add_argument("-b", "--betas", type=_int_list, required=True)
    p.add_argument("-q", "--period", type=int, required=True)

    p = add("verify", "cross-check brute force, series and waves", formats=("text", "json"))
    p.add_argument("-d", "--components", type=_int_list)
    p.add_argument("-L", "--max-l", type=_nonneg, default=100)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, help="verify a seeded random corpus instead of -d")
    p.add_argument("--corpus-size", type=int, default=30)
    return parser


def cmd_count(args, out) -> int:
    table = denumerant_bruteforce(args.max_l, _components(args.components))
    if args.format == "csv":
        out.write(table.to_csv())
    elif args.format == "json":
        out.write(table.to_json() + "\n")
    else:
        for l, v in enumerate(table.values):
            out.write(f"{l},{v}\n")
    return 0


def cmd_quasipoly(args, out) -> int:
    qp = quasipolynomial(_components(args.components))
    if args.format == "json":
        out.write(qp.to_json() + "\n")
        return 0
    out.write(f"components: {','.join(map(str, qp.components.d))}\n")
    out.write(f"lbar = l + {rational_str(qp.shift)}\n")
    for w in qp.waves:
        for r, p in enumerate(w.residue_polys):
            out.write(f"W_{w.q}[l = {r} mod {w.q}] = {p}\n".replace("x", "lbar"))
    return 0


def cmd_wave(args, out) -> int:
    comps = _components(args.components)
    if args.period < 1:
        raise UsageError("q must be a positive integer")
    try:
        w = wave(args.period, comps)
    except WavePeriodError as exc:
        raise UsageError(str(exc))
    if args.format == "json":
        data = w.to_dict()
        data["shift"] = rational_str(w.shift)
        out.write(json.dumps(data) + "\n")
    else:
        for r, p in enumerate(w.residue_polys):
            out.write(f"{r}: {' '.join(rational_str(c) for c in p.coeffs) or '0'}\n")
    return 0


def cmd_dedekind(args, out) -> int:
    try:
        spec = DedekindSumSpec(args.value, tuple(args.betas), args.period)
    except ValueError as exc:
        raise UsageError(str(exc))
    value = rational_str(fourier_dedekind(spec))
    out.write((json.dumps(value) if args.format == "json" else value) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    if args.seed is not None:
        if args.components is not None:
            raise UsageError("give either -d or --seed, not both")
        sets = random_component_sets(args.seed, args.corpus_size)
    else:
        sets = [_components(args.components).d]
    results = [verify_components(s, args.max_l, args.workers) for s in sets]
    if args.format == "json":
        out.write(json.dumps([{"components": list(r.components), "L": r.L, "ok": r.ok,
                               "detail": r.describe()} for r in results]) + "\n")
    elif len(results) == 1:
        out.write(results[0].describe() + "\n")
    else:
        for r in results:
            out.write(f"{','.join(map(str, r.components))}: {r.describe()}\n")
        passed = sum(r.ok for r in results)
        out.write(f"{passed}/{len(results)} OK\n")
    return 0 if all(r.ok for r in results) else 1


COMMANDS = {
    "count": cmd_count,
    "quasipoly": cmd_quasipoly,
    "wave": cmd_wave,
    "dedekind": cmd_dedekind,
    "verify": cmd_verify,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"denumerant {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"denumerant {args.command}: internal consistency failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
