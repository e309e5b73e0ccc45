"""Command-line interface: ``srnt enumerate|derive|linked-pair|construct|verify``.

Exit codes: 0 success/feasible, 1 infeasible/violation, 2 usage, 3 overflow, 4 I/O.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
from fractions import Fraction

from . import constructions
from .enumeration import COLUMNS, enumerate_for_q, enumerate_up_to_n
from .graph import (
    GraphFormatError,
    SrntCertificate,
    StructureError,
    block_identities_check,
    from_json,
    moore_antipodal_check,
    subconstituent,
    to_json,
    verify_srnt,
    x2_annihilator_check,
    x2_diameter,
    x2_multiplicities,
)
from .linked import linked_pair_family
from .params import ParamSet, derive_from_kc, derive_from_qc

TEXT_HEADER = ("n", "k", "c", "s", "ℓ", "λ₁", "λ₂", "m₁", "m₂", "K₁", "K₂")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_OVERFLOW, EXIT_IO = 0, 1, 2, 3, 4


def fmt(x) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


def parse_value(text: str):
    """Inverse of :func:`fmt`."""
    if "/" in text:
        return Fraction(text)
    return int(text)


def row_dict(p: ParamSet) -> dict:
    return dict(zip(COLUMNS, p.as_row()))


def _json_value(x):
    return fmt(x) if isinstance(x, Fraction) and x.denominator != 1 else int(x)


def render_rows(rows: list[ParamSet], form: str, labels: list[str] | None = None) -> str:
    if form == "json":
        out = []
        for i, p in enumerate(rows):
            obj = {key: _json_value(v) for key, v in row_dict(p).items()}
            if labels:
                obj = {"graph": labels[i], **obj}
            out.append(obj)
        return json.dumps(out, indent=2) + "\n"
    cells = [[fmt(v) for v in p.as_row()] for p in rows]
    if form == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow((["graph"] if labels else []) + list(COLUMNS))
        for i, r in enumerate(cells):
            w.writerow(([labels[i]] if labels else []) + r)
        return buf.getvalue()
    header = list(TEXT_HEADER)
    if labels:
        header = [""] + header
        cells = [[labels[i]] + r for i, r in enumerate(cells)]
    widths = [max(len(str(x)) for x in col) for col in zip(header, *cells)]
    lines = ["  ".join(str(x).rjust(w) for x, w in zip(line, widths)) for line in [header] + cells]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- commands

def cmd_enumerate(args, out) -> int:
    if (args.q is None) == (args.max_n is None):
        raise UsageError("give exactly one of --q and --max-n")
    if args.q is not None:
        if args.q < 1:
            raise UsageError("--q must be at least 1")
        rows = enumerate_for_q(args.q)
    else:
        if args.max_n < 10:
            raise UsageError("--max-n must be at least 10")
        rows = enumerate_up_to_n(args.max_n)
    out.write(render_rows(rows, args.format))
    return EXIT_OK


def cmd_derive(args, out) -> int:
    if args.c is None or (args.k is None) == (args.lam is None):
        raise UsageError("give --c together with exactly one of --k and --lambda")
    try:
        report = derive_from_kc(args.k, args.c) if args.k is not None else derive_from_qc(args.lam, args.c)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.format == "json":
        obj = {
            "k": report.k,
            "c": report.c,
            "verdict": report.verdict,
            "failures": list(report.failures),
            "params": {key: _json_value(v) for key, v in row_dict(report.params).items()} if report.params else None,
        }
        out.write(json.dumps(obj, indent=2) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["verdict", "failures"] + list(COLUMNS))
        vals = report.values
        w.writerow([report.verdict, ";".join(report.failures)]
                   + [fmt(vals[key]) if key in vals else "" for key in
                      ("n", "k", "c", "s", "ell", "q", "lambda2", "m1", "m2", "K1", "K2")])
        out.write(buf.getvalue())
    else:
        out.write(f"k={report.k} c={report.c}: {report.verdict}\n")
        if report.failures:
            out.write("failed: " + ", ".join(report.failures) + "\n")
            evaluated = ", ".join(f"{key}={fmt(v)}" for key, v in report.values.items())
            out.write(f"evaluated: {evaluated}\n")
        else:
            out.write(render_rows([report.params], "text"))
    return EXIT_OK if report.feasible else EXIT_FAIL


def cmd_linked_pair(args, out) -> int:
    if args.q < 1:
        raise UsageError("--q must be at least 1")
    pair = linked_pair_family(args.q)
    if args.format == "json":
        obj = {
            "q": pair.q,
            "r": pair.r,
            "discriminant": pair.discriminant,
            "existence": pair.existence,
            "unprimed": {key: _json_value(v) for key, v in row_dict(pair.unprimed).items()},
            "primed": {key: _json_value(v) for key, v in row_dict(pair.primed).items()},
        }
        out.write(json.dumps(obj, indent=2) + "\n")
        return EXIT_OK
    rows = render_rows([pair.unprimed, pair.primed], args.format, labels=["X", "X'"])
    if args.format == "text":
        out.write(f"q={pair.q} r={pair.r} discriminant={pair.discriminant} ({pair.existence})\n")
    out.write(rows)
    return EXIT_OK


def cmd_construct(args, out) -> int:
    try:
        g = constructions.by_name(args.name)
    except KeyError as e:
        raise UsageError(e.args[0]) from None
    text = to_json(g)
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text + "\n")
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_IO
    else:
        out.write(text + "\n")
    if args.canonical_hash:
        out.write(hashlib.sha256(text.encode()).hexdigest() + "\n")
    return EXIT_OK


def _full_sweep(g, cert: SrntCertificate, out) -> bool:
    k, c = cert.k, cert.c
    diameters = set()
    x2_certs = {}
    mults = set()
    for v in range(g.n):
        try:
            dec = subconstituent(g, v)
            if not block_identities_check(dec, k, c):
                out.write(f"FAIL block identities at vertex {v}\n")
                return False
            diameters.add(x2_diameter(dec))
            if not x2_annihilator_check(dec, k, c):
                out.write(f"FAIL annihilator at vertex {v}\n")
                return False
            mults.add(tuple(sorted(x2_multiplicities(dec, k, c).items(), reverse=True)))
            if c == 1 and not moore_antipodal_check(dec, k):
                out.write(f"FAIL antipodal cover at vertex {v}\n")
                return False
        except StructureError as e:
            out.write(f"FAIL at vertex {v}: {e}\n")
            return False
        sub = verify_srnt(dec.x2_graph)
        key = (sub.k, sub.c) if isinstance(sub, SrntCertificate) else sub.axiom
        x2_certs[key] = x2_certs.get(key, 0) + 1
    out.write(f"block identities: pass at all {g.n} vertices\n")
    out.write(f"X2 diameter: {', '.join(map(str, sorted(diameters)))}\n")
    out.write(f"X2 spectrum within {{k-c, l1, l2, -c}}: pass at all {g.n} vertices\n")
    for m in sorted(mults):
        out.write("X2 multiplicities: " + ", ".join(f"{mu}^{cnt}" for mu, cnt in m) + "\n")
    if c == 1:
        out.write(f"Moore case: X2 is an antipodal {k - 1}-fold cover of K{k} at every vertex\n")
    for key, cnt in x2_certs.items():
        if isinstance(key, tuple):
            out.write(f"X2 certifies as SRNT (k={key[0]}, c={key[1]}) at {cnt} of {g.n} vertices\n")
        else:
            out.write(f"X2 is not SRNT ({key}) at {cnt} of {g.n} vertices\n")
    return True


def cmd_verify(args, out) -> int:
    try:
        with open(args.file) as fh:
            g = from_json(fh.read())
    except (OSError, GraphFormatError) as e:
        print(f"error: {args.file}: {e}", file=sys.stderr)
        return EXIT_IO
    cert = verify_srnt(g)
    if not isinstance(cert, SrntCertificate):
        out.write(f"violation: {cert}\n")
        return EXIT_FAIL
    out.write(f"SRNT: n={cert.n} k={cert.k} c={cert.c} connected, not bipartite\n")
    if args.full and not _full_sweep(g, cert, out):
        return EXIT_FAIL
    return EXIT_OK


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="srnt", description="Strongly regular triangle-free graphs.")
    sub = parser.add_subparsers(dest="command", required=True)
    formats = dict(choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("enumerate", help="list feasible parameter sets")
    p.add_argument("--q", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--format", **formats)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("derive", help="derive and check parameters from (k, c) or (lambda1, c)")
    p.add_argument("--k", type=int)
    p.add_argument("--lambda", dest="lam", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--format", **formats)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("linked-pair", help="parameters of the linked pair for q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--format", **formats)
    p.set_defaults(func=cmd_linked_pair)

    p = sub.add_parser("construct", help="write one of the known graphs as JSON")
    p.add_argument("name")
    p.add_argument("--out")
    p.add_argument("--canonical-hash", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a graph JSON file")
    p.add_argument("file")
    p.add_argument("--full", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except UsageError as e:
        print(f"srnt {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OverflowError as e:
        print(f"srnt {args.command}: overflow: {e}", file=sys.stderr)
        return EXIT_OVERFLOW


if __name__ == "__main__":
    sys.exit(main())
