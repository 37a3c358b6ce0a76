"""Command-line interface: ``leoquat {seq,quat,classify,pisano,verify}``.

Exit status is 0 on success, 1 when ``verify`` finds an unexpected verdict,
and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import classification, verifier
from .lifts import quaternion_term
from .quaternions import ZZ, PrimeField, annihilator_witness, inverse, is_zero_divisor
from .sequences import Kind, SequenceFamily, check_odd_prime, pisano_period, terms

FORMATS = ("table", "json", "csv")


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            start, end = int(lo), int(hi)
        else:
            start = end = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or START..END, got {text!r}") from None
    if start < 0 or end < start:
        raise argparse.ArgumentTypeError(f"need 0 <= START <= END, got {text!r}")
    return start, end


def _odd_prime(text: str) -> int:
    try:
        return check_odd_prime(int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an odd prime, got {text!r}") from None


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = -1
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def _family(parser: argparse.ArgumentParser, args) -> SequenceFamily:
    try:
        return SequenceFamily(Kind(args.family), args.p)
    except ValueError as exc:
        parser.error(str(exc))


def _emit_csv(rows: list[dict], out) -> None:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    out.write(buf.getvalue())


def _emit_json(payload, out) -> None:
    out.write(json.dumps(payload, indent=2) + "\n")


def cmd_seq(parser, args, out) -> int:
    family = _family(parser, args)
    start, end = args.n
    values = terms(family, start, end)
    rows = [{"n": start + i, "value": v} for i, v in enumerate(values)]
    if args.format == "json":
        _emit_json({"family": family.kind.value, "p": family.p, "terms": rows}, out)
    elif args.format == "csv":
        _emit_csv(rows, out)
    else:
        width = len(str(end))
        for row in rows:
            out.write(f"{row['n']:>{width}}  {row['value']}\n")
    return 0


def cmd_quat(parser, args, out) -> int:
    family = _family(parser, args)
    ring = ZZ if args.mod is None else PrimeField(args.mod)
    x = quaternion_term(family, args.n, ring)
    record = {
        "family": family.kind.value,
        "p": family.p,
        "n": args.n,
        "ring": "integers" if args.mod is None else f"GF({args.mod})",
        "coefficients": list(x.coeffs),
        "quaternion": str(x),
        "norm": x.norm(),
    }
    if args.mod is not None:
        zd = is_zero_divisor(x)
        record["zero_divisor"] = zd
        record["invertible"] = x.norm() != 0
        record["witness"] = str(annihilator_witness(x)) if zd else None
        record["inverse"] = str(inverse(x)) if x.norm() != 0 else None

    if args.format == "json":
        _emit_json(record, out)
    elif args.format == "csv":
        _emit_csv([{**record, "coefficients": " ".join(map(str, x.coeffs))}], out)
    else:
        out.write(f"{family} n={args.n} over {record['ring']}\n")
        out.write(f"  quaternion: {x}\n")
        out.write(f"  norm:       {record['norm']}\n")
        if args.mod is not None:
            if record["zero_divisor"]:
                out.write("  verdict:    zero divisor\n")
                out.write(f"  witness:    {record['witness']}  (x * witness = 0)\n")
            elif record["invertible"]:
                out.write("  verdict:    invertible\n")
                out.write(f"  inverse:    {record['inverse']}\n")
            else:
                out.write("  verdict:    zero quaternion\n")
    return 0


def cmd_classify(parser, args, out) -> int:
    family = _family(parser, args)
    c = classification.classify(family, args.q)
    record = c.as_dict()
    if args.format == "json":
        _emit_json(record, out)
    elif args.format == "csv":
        flat = {k: " ".join(map(str, v)) if isinstance(v, list) else v for k, v in record.items()}
        _emit_csv([flat], out)
    else:
        out.write(f"{family} over GF({c.q}), sequence period {c.period}\n")
        if c.all_invertible:
            out.write("  all invertible\n")
        else:
            classes = ", ".join(map(str, c.residues))
            out.write(f"  zero divisor iff n = {classes} (mod {c.modulus})\n")
        if c.vanishing_residues:
            out.write(f"  vanishing at n = {', '.join(map(str, c.vanishing_residues))} (mod {c.period})\n")
    return 0


def cmd_pisano(parser, args, out) -> int:
    if args.m < 2:
        parser.error(f"modulus must be >= 2, got {args.m}")
    pp = pisano_period(args.m)
    record = {"modulus": pp.modulus, "length": pp.length, "cycle": list(pp.cycle)}
    if args.format == "json":
        _emit_json(record, out)
    elif args.format == "csv":
        _emit_csv([{**record, "cycle": " ".join(map(str, pp.cycle))}], out)
    else:
        out.write(f"{pp.length}\n")
        out.write(" ".join(map(str, pp.cycle)) + "\n")
    return 0


def cmd_verify(parser, args, out) -> int:
    known = {s.id for s in verifier.registry()}
    unknown = [i for i in args.id or [] if i not in known]
    if unknown:
        parser.error(f"unknown identity id(s): {', '.join(unknown)}")
    try:
        start = time.perf_counter()
        reports = verifier.run_all(args.p_max, args.n_max, args.id or None)
        elapsed = time.perf_counter() - start
    except ValueError as exc:
        parser.error(str(exc))
    passed = verifier.suite_passed(reports)
    ledger = verifier.discrepancy_ledger(reports)

    if args.format == "json":
        _emit_json({
            "passed": passed,
            "p_max": args.p_max,
            "n_max": args.n_max,
            "reports": [r.as_dict() for r in reports],
            "discrepancy_ledger": ledger,
            "display_audit": verifier.audit_initial_displays(args.p_max),
        }, out)
    elif args.format == "csv":
        rows = []
        for r in reports:
            d = r.as_dict()
            ce = d.pop("first_counterexample")
            d["grid"] = " ".join(f"{p}:{lo}..{hi}" for p, lo, hi in r.grid)
            d["counterexample_p"] = "" if ce is None else ce["p"]
            d["counterexample_n"] = "" if ce is None else ce["n"]
            rows.append(d)
        _emit_csv(rows, out)
    else:
        for r in reports:
            mark = "ok  " if r.as_expected else "FAIL"
            verdict = "holds" if r.holds else "fails"
            line = f"{mark} {r.id:<28} {verdict:<6} {r.points:>6} points"
            if r.first_counterexample is not None:
                ce = r.first_counterexample
                line += f"  first counterexample p={ce.p} n={ce.n}"
            out.write(line + "\n")
        for entry in ledger:
            out.write(
                f"discrepancy: {entry['as_printed']} -> {entry['corrected']} "
                f"(corrected holds: {entry['corrected_holds']})\n"
            )
        out.write(f"{'PASSED' if passed else 'FAILED'}: {len(reports)} identities\n")
    print(f"verify: {len(reports)} identities in {elapsed:.2f}s", file=sys.stderr)
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")

    fam = argparse.ArgumentParser(add_help=False)
    fam.add_argument("--family", required=True, choices=[k.value for k in Kind])
    fam.add_argument("-p", "--p", type=int, default=1, help="order p (default 1)")

    parser = argparse.ArgumentParser(prog="leoquat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", parents=[common, fam], help="print sequence terms")
    p.add_argument("-n", type=_parse_range, required=True, metavar="START..END")
    p.set_defaults(func=cmd_seq, subparser=p)

    p = sub.add_parser("quat", parents=[common, fam], help="inspect one sequence quaternion")
    p.add_argument("-n", type=_nonneg, required=True)
    ring = p.add_mutually_exclusive_group()
    ring.add_argument("--exact", action="store_true", help="integer coefficients (default)")
    ring.add_argument("--mod", type=_odd_prime, metavar="Q", help="reduce into GF(Q)")
    p.set_defaults(func=cmd_quat, subparser=p)

    p = sub.add_parser("classify", parents=[common, fam], help="zero-divisor residue classes over GF(q)")
    p.add_argument("-q", "--mod", dest="q", type=_odd_prime, required=True, metavar="Q")
    p.set_defaults(func=cmd_classify, subparser=p)

    p = sub.add_parser("pisano", parents=[common], help="Pisano period of the Fibonacci numbers")
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_pisano, subparser=p)

    p = sub.add_parser("verify", parents=[common], help="run the identity suite")
    p.add_argument("--p-max", type=int, default=6)
    p.add_argument("--n-max", type=int, default=200)
    p.add_argument("--id", action="append", metavar="ID", help="restrict to this identity (repeatable)")
    p.set_defaults(func=cmd_verify, subparser=p)
    return parser


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args.subparser, args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
