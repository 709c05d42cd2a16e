"""Command line front end.

Exit codes: 0 success, 1 usage problems, 2 a verification found a
counterexample (or the landmark self-check failed), 3 I/O problems such
as a missing or corrupt catalog file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from . import equations
from .canon import canonical_form, key_hex
from .catalog import (
    FormatError,
    generate_catalog,
    lattice_from_hex,
    load_catalog,
    save_catalog,
)
from .core import (
    InvalidMeetTable,
    OrderTooLarge,
    OrderTooSmall,
    Semilattice,
    bits,
    make_chain,
    make_fan,
)
from .extremal import (
    COUNTEREXAMPLE,
    UnknownMetric,
    profile_catalog,
    verify_cover_bounds,
    verify_empty_bucket_dominance,
    verify_first_kind_max,
    verify_inconsistent_bounds,
    verify_unique_coatom_minimum,
)
from .landmarks import landmark_report, spire5

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_IO = 3

_BUILTIN_RE = re.compile(r"^(chain|fan|spire)(\d+)$")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _n_range(text: str):
    m = re.match(r"^(\d+)(?:\.\.(\d+))?$", text)
    if m is None:
        raise argparse.ArgumentTypeError(
            f"expected N or LO..HI, got {text!r}"
        )
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _build_parser() -> _Parser:
    parser = _Parser(prog="semlat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_gen = sub.add_parser("gen", help="generate a catalog file")
    p_gen.add_argument("--n", type=int, required=True, help="order (2..10 by default)")
    p_gen.add_argument("--out", required=True, help="output path")
    p_gen.add_argument("--jobs", type=int, default=1)

    p_prof = sub.add_parser("profile", help="statistics for every catalog entry")
    p_prof.add_argument("--catalog", required=True, help="catalog file to read")
    p_prof.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p_prof.add_argument("--out", help="output path (default stdout)")
    p_prof.add_argument("--jobs", type=int, default=1)

    p_ver = sub.add_parser("verify", help="run exhaustive claim sweeps")
    p_ver.add_argument(
        "--claim",
        choices=("t1", "t2", "t4", "conjecture", "bounds", "all"),
        required=True,
    )
    p_ver.add_argument("--n", type=_n_range, required=True, metavar="N or LO..HI")
    p_ver.add_argument("--m", type=int, default=1, help="variable budget for t1")
    p_ver.add_argument("--jobs", type=int, default=1)

    p_show = sub.add_parser("show", help="describe one structure")
    group = p_show.add_mutually_exclusive_group(required=True)
    group.add_argument("--builtin", help="chainN, fanN, or spire5")
    group.add_argument("--key", help="n*n base-16 digits, row-major")

    sub.add_parser("landmarks", help="order-5 reference comparison")

    return parser


def _cmd_gen(args) -> int:
    cat = generate_catalog(args.n, jobs=args.jobs)
    save_catalog(cat, args.out)
    print(f"n={cat.n} count={len(cat)}")
    return EXIT_OK


def _records_json(records) -> str:
    out = []
    for r in records:
        out.append(json.dumps({
            "canonicalKey": r.canonical_key,
            "n": r.n,
            "inconsistentCount": {str(m): c for m, c in r.inconsistent_count},
            "cov1Vector": list(r.cov1_vector),
            "sigmaCov1": r.sigma_cov1,
            "sigma": r.sigma,
            "histogramSummary": {
                "emptyBucketSize": r.histogram_summary.empty_bucket_size,
                "maxBucketSize": r.histogram_summary.max_bucket_size,
                "numRealizedSolutionSets":
                    r.histogram_summary.num_realized_solution_sets,
            },
            "coatomCount": r.coatom_count,
            "atomCount": r.atom_count,
        }, sort_keys=True))
    return "\n".join(out) + "\n"


def _records_csv(records) -> str:
    buf = io.StringIO()
    ms = [m for m, _ in records[0].inconsistent_count] if records else [1, 2]
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["canonicalKey", "n"]
        + [f"inconsistentCount_m{m}" for m in ms]
        + ["cov1Vector", "sigmaCov1", "sigma", "emptyBucketSize",
           "maxBucketSize", "numRealizedSolutionSets", "coatomCount",
           "atomCount"]
    )
    for r in records:
        by_m = dict(r.inconsistent_count)
        writer.writerow(
            [r.canonical_key, r.n]
            + [by_m[m] for m in ms]
            + [" ".join(map(str, r.cov1_vector)), r.sigma_cov1, r.sigma,
               r.histogram_summary.empty_bucket_size,
               r.histogram_summary.max_bucket_size,
               r.histogram_summary.num_realized_solution_sets,
               r.coatom_count, r.atom_count]
        )
    return buf.getvalue()


def _records_text(records) -> str:
    lines = []
    for r in records:
        lines.append(
            f"{r.canonical_key} n={r.n}"
            f" sigma={r.sigma} sigmaCov1={r.sigma_cov1}"
            f" cov1=[{' '.join(map(str, r.cov1_vector))}]"
            f" inconsistent={dict(r.inconsistent_count)}"
            f" atoms={r.atom_count} coatoms={r.coatom_count}"
            f" emptyBucket={r.histogram_summary.empty_bucket_size}"
        )
    return "\n".join(lines) + "\n"


def _cmd_profile(args) -> int:
    cat = load_catalog(args.catalog)
    records = profile_catalog(cat, jobs=args.jobs)
    render = {"json": _records_json, "csv": _records_csv, "text": _records_text}
    text = render[args.format](records)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


_CLAIMS = {
    "t1": lambda a: verify_inconsistent_bounds(a.n, m=a.m, jobs=a.jobs),
    "t2": lambda a: verify_first_kind_max(a.n, jobs=a.jobs),
    "t4": lambda a: verify_empty_bucket_dominance(a.n, jobs=a.jobs),
    "conjecture": lambda a: verify_unique_coatom_minimum(a.n, jobs=a.jobs),
    "bounds": lambda a: verify_cover_bounds(a.n, jobs=a.jobs),
}


def _cmd_verify(args) -> int:
    names = list(_CLAIMS) if args.claim == "all" else [args.claim]
    failed = False
    for name in names:
        report = _CLAIMS[name](args)
        print(f"claim {report.claim}: {report.status}"
              f" (orders {report.n_range[0]}..{report.n_range[1]},"
              f" {report.elapsed:.2f}s)")
        for line in report.details:
            print(f"  {line}")
        for w in report.witnesses:
            print(f"  witness: {w}")
        failed = failed or report.status == COUNTEREXAMPLE
    return EXIT_COUNTEREXAMPLE if failed else EXIT_OK


def _describe(latt: Semilattice) -> str:
    lines = [f"n={latt.n} bottom={latt.bottom} top={latt.top}"]
    lines.append(f"key={key_hex(canonical_form(latt).key)}")
    lines.append("covers:")
    for e in range(latt.n):
        covers = list(bits(latt.lower_covers(e)))
        if covers:
            lines.append(f"  {e} covers {' '.join(map(str, covers))}")
    lines.append(f"atoms: {' '.join(str(a) for a in bits(latt.atoms()))}")
    lines.append(f"coatoms: {' '.join(str(c) for c in bits(latt.coatoms()))}")
    lines.append(f"heights: {' '.join(map(str, latt.heights))}")
    vec = [equations.first_kind_count(latt, e) for e in range(latt.n)]
    lines.append(f"first-kind counts: {' '.join(map(str, vec))}"
                 f" (total {sum(vec)})")
    lines.append("table:")
    for row in latt.meet:
        lines.append("  " + "".join(format(v, "x") for v in row))
    return "\n".join(lines)


def _cmd_show(args) -> int:
    if args.builtin:
        m = _BUILTIN_RE.match(args.builtin)
        if m is None:
            print(f"unknown builtin {args.builtin!r}", file=sys.stderr)
            return EXIT_USAGE
        kind, n = m.group(1), int(m.group(2))
        try:
            if kind == "chain":
                latt = make_chain(n)
            elif kind == "fan":
                latt = make_fan(n)
            elif n == 5:
                latt = spire5()
            else:
                print("spire is only defined at order 5", file=sys.stderr)
                return EXIT_USAGE
        except (OrderTooSmall, OrderTooLarge) as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_USAGE
    else:
        try:
            latt = lattice_from_hex(args.key)
        except (ValueError, InvalidMeetTable) as exc:
            print(f"bad key: {exc}", file=sys.stderr)
            return EXIT_USAGE
    print(_describe(latt))
    return EXIT_OK


def _cmd_landmarks(_args) -> int:
    lines, ok = landmark_report()
    for line in lines:
        print(line)
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


_HANDLERS = {
    "gen": _cmd_gen,
    "profile": _cmd_profile,
    "verify": _cmd_verify,
    "show": _cmd_show,
    "landmarks": _cmd_landmarks,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        return _HANDLERS[args.command](args)
    except FormatError as exc:
        print(f"catalog error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (OrderTooSmall, OrderTooLarge, UnknownMetric, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_exit() -> None:
    sys.exit(main())
