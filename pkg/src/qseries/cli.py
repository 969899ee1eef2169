"""Command-line front end: expand, verify, scan, omega, oracle.

Exit codes: 0 success, 1 verification or runtime failure, 2 usage error.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys

from . import series as S
from .catalog import parse_filter, verify_all
from .errors import QSeriesError
from .eta import EtaQuotientSpec, eta_quotient
from .partitions import PartitionFamilySpec, family_series, tuple_oracle
from .quadforms import omega_enumerate_table, omega_series
from .scanner import scan, zero_progressions

FORMATS = ("tsv", "csv", "json-lines")
CACHE_ENV = "QSERIES_CACHE"

_NAMED = {"a3": (3, 1), "A3": (3, 2), "B3": (3, 3)}


class UsageError(Exception):
    pass


def parse_family(text: str) -> tuple[str, EtaQuotientSpec]:
    """Resolve a family name to (canonical name, eta quotient)."""
    if text in _NAMED:
        t, k = _NAMED[text]
        return text, EtaQuotientSpec(PartitionFamilySpec(t, k).eta_terms())
    if text.startswith("a3k:"):
        tok = text[4:]
        if not tok.isdigit() or int(tok) < 1:
            raise UsageError(f"malformed family {text!r}: bad tuple length {tok!r}")
        k = int(tok)
        return f"a3k:{k}", EtaQuotientSpec(PartitionFamilySpec(3, k).eta_terms())
    if text.startswith("eta:"):
        return parse_eta(text[4:])
    raise UsageError(f"unknown family {text!r} (expected a3, A3, B3, a3k:<k> or eta:<spec>)")


def parse_eta(text: str) -> tuple[str, EtaQuotientSpec]:
    try:
        spec = EtaQuotientSpec.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return f"eta:{spec}", spec


class RowWriter:
    def __init__(self, fmt: str, fields: list, out=None):
        self.fmt = fmt
        self.fields = fields
        self.out = out or sys.stdout
        self._header_done = False

    def _cell(self, v):
        return "" if v is None else str(v)

    def write(self, row: dict):
        if self.fmt == "json-lines":
            self.out.write(json.dumps({f: row[f] for f in self.fields}) + "\n")
            return
        if not self._header_done:
            self._line(self.fields)
            self._header_done = True
        self._line([self._cell(row[f]) for f in self.fields])

    def _line(self, cells):
        if self.fmt == "tsv":
            self.out.write("\t".join(cells) + "\n")
        else:
            buf = io.StringIO()
            csv.writer(buf, lineterminator="\n").writerow(cells)
            self.out.write(buf.getvalue())


def _cache_path(cache_dir: str, name: str) -> str:
    return os.path.join(cache_dir, re.sub(r"[^A-Za-z0-9_.-]", "_", name) + ".qs")


def expand_cached(name: str, spec: EtaQuotientSpec, order: int, cache_dir: str | None):
    """Eta quotient through q^order, reading and refreshing the cache when enabled."""
    if not cache_dir:
        return eta_quotient(spec, order)
    path = _cache_path(cache_dir, name)
    if os.path.exists(path):
        try:
            cached_name, cached = S.load(path)
        except (OSError, ValueError) as exc:
            print(f"qseries: ignoring unreadable cache file {path}: {exc}", file=sys.stderr)
        else:
            if cached_name == name and cached.order >= order:
                return S.truncate(cached, order)
    result = eta_quotient(spec, order)
    os.makedirs(cache_dir, exist_ok=True)
    S.save(path, result, name)
    return result


def _family_from_args(args):
    if args.family and args.eta:
        raise UsageError("give either --family or --eta, not both")
    if args.eta:
        return parse_eta(args.eta)
    if args.family:
        return parse_family(args.family)
    raise UsageError("one of --family or --eta is required")


def _nonneg(name, value, minimum=0):
    if value < minimum:
        raise UsageError(f"{name} must be >= {minimum}, got {value}")


def cmd_expand(args) -> int:
    _nonneg("--upto", args.upto)
    name, spec = _family_from_args(args)
    s = expand_cached(name, spec, args.upto, args.cache_dir)
    w = RowWriter(args.format, ["n", "value"])
    for n, c in enumerate(s.coeffs):
        w.write({"n": n, "value": c})
    return 0


def cmd_verify(args) -> int:
    _nonneg("--order", args.order, 1)
    try:
        parse_filter(args.filter)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    reports = verify_all(args.order, args.filter)
    if not reports:
        print(f"qseries: filter {args.filter!r} matched no entries", file=sys.stderr)
    w = RowWriter(args.format, ["id", "verdict", "mismatch", "ms"])
    for r in reports:
        ms = None if args.no_timing else round(r.ms, 1)
        w.write({"id": r.id, "verdict": r.verdict, "mismatch": r.mismatch, "ms": ms})
        if not r.passed:
            print(f"qseries: {r.id} fails at index {r.mismatch}: lhs={r.lhs_value} rhs={r.rhs_value}",
                  file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


def cmd_scan(args) -> int:
    _nonneg("--order", args.order)
    _nonneg("--max-step", args.max_step, 1)
    _nonneg("--min-evidence", args.min_evidence, 2)
    name, spec = _family_from_args(args)
    s = expand_cached(name, spec, args.order, args.cache_dir)
    claims = scan(s, args.max_step, args.min_evidence)
    for step, residue, evidence in zero_progressions(s, args.max_step, args.min_evidence):
        print(f"qseries: progression {step}n+{residue} is identically zero ({evidence} terms)",
              file=sys.stderr)
    w = RowWriter(args.format, ["step", "residue", "modulus", "evidence", "status"])
    for c in claims:
        w.write(c.as_row())
    return 0


def cmd_omega(args) -> int:
    _nonneg("-k", args.k, 1)
    _nonneg("--upto", args.upto)
    if args.method == "theta":
        values = omega_series(args.k, args.upto).coeffs
    else:
        values = omega_enumerate_table(args.k, args.upto)
    w = RowWriter(args.format, ["n", "value"])
    for n, v in enumerate(values):
        w.write({"n": n, "value": v})
    return 0


def cmd_oracle(args) -> int:
    _nonneg("--t", args.t, 2)
    _nonneg("-k", args.k, 1)
    _nonneg("--upto", args.upto)
    w = RowWriter(args.format, ["n", "value"])
    for n in range(args.upto + 1):
        w.write({"n": n, "value": tuple_oracle(args.t, args.k, n)})
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qseries", description="Exact q-series for 3-core partition families.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=FORMATS, default="tsv")

    def family_opts(sp):
        sp.add_argument("--family", help="a3 | A3 | B3 | a3k:<k> | eta:<k1:e1,...>")
        sp.add_argument("--eta", help="eta quotient as scale:exponent pairs, e.g. 3:9,1:-3")
        sp.add_argument("--cache-dir", default=os.environ.get(CACHE_ENV),
                        help=f"series cache directory (default: ${CACHE_ENV})")

    sp = sub.add_parser("expand", help="print coefficients of a generating function")
    family_opts(sp)
    sp.add_argument("--upto", type=int, required=True, help="last exponent to print")
    common(sp)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("verify", help="check the identity catalog")
    sp.add_argument("--order", type=int, required=True, help="check exponents 0..ORDER of every entry")
    sp.add_argument("--filter", help="comma-separated ids; * and ? are wildcards")
    sp.add_argument("--no-timing", action="store_true", help="leave the ms column empty")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan", help="search for congruences F(an+b) = 0 mod m")
    family_opts(sp)
    sp.add_argument("--max-step", type=int, required=True, help="largest progression step a to try")
    sp.add_argument("--min-evidence", type=int, default=20, help="minimum in-range terms before a claim is made (default 20)")
    sp.add_argument("--order", type=int, required=True, help="expansion order of the scanned series")
    common(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("omega", help="representation numbers of x-block + 3*y-block forms")
    sp.add_argument("-k", type=int, required=True, help="number of squares in each block")
    sp.add_argument("--upto", type=int, required=True, help="last n to print")
    sp.add_argument("--method", choices=("theta", "enumerate"), default="theta", help="theta product or direct lattice count")
    common(sp)
    sp.set_defaults(func=cmd_omega)

    sp = sub.add_parser("oracle", help="brute-force t-core tuple counts")
    sp.add_argument("--t", type=int, required=True, help="core parameter t >= 2")
    sp.add_argument("-k", type=int, required=True, help="tuple length k >= 1")
    sp.add_argument("--upto", type=int, required=True, help="last n to print")
    common(sp)
    sp.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qseries: error: {exc}", file=sys.stderr)
        return 2
    except QSeriesError as exc:
        print(f"qseries: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # anything else is an internal failure, still exit 1
        print(f"qseries: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
