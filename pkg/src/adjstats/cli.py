"""Batch command-line front end.

Subcommands: dist, totals, avoid, partition-dist, gap, verify, bijection,
oeis-check.  Output is JSON (default) or CSV with identical numeric
content; polynomials serialize as ascending coefficient arrays with an
explicit variable label, and every big integer is a decimal string so no
consumer can overflow.  Exit codes: 0 pass, 1 check failure, 2 usage
error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import absdiff, bijections, kary, oeis, oracle, partitions, verify
from .algebra import QPoly


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _parse_range(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..", 1)
        out = range(int(lo), int(hi) + 1)
    else:
        out = range(int(text), int(text) + 1)
    if not out:
        raise argparse.ArgumentTypeError(f"empty range: {text!r}")
    return out


def _parse_word(text: str) -> tuple[int, ...]:
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"words are digit strings, got {text!r}")
    return tuple(int(c) for c in text)


def _poly_json(poly: QPoly) -> dict:
    return {"var": "q", "coeffs": [str(c) for c in poly.coeffs] or ["0"]}


def _scalar(value) -> str:
    return str(value)


def _flatten(value):
    if isinstance(value, dict) and set(value) == {"var", "coeffs"}:
        return ";".join(value["coeffs"])
    if isinstance(value, (list, tuple)):
        return ";".join(str(v) for v in value)
    return value


def _emit(payload: dict, fmt: str, out_path) -> None:
    if fmt == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        rows = payload.get("rows", [])
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()), lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow({k: _flatten(v) for k, v in row.items()})
        text = buf.getvalue()
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_dist(args) -> int:
    rows = []
    for n in args.n:
        if args.stat == "mu":
            dist = kary.a_table(kary.KSParams(args.k, args.s), n).totals[n]
        else:
            dist = absdiff.b_table(args.k, args.s, n).totals[n]
        row = {"n": n, "dist": _poly_json(dist)}
        if args.q is not None:
            row["value"] = _scalar(dist(args.q))
        if args.verify:
            try:
                if args.stat == "mu":
                    reference = oracle.distribution_mu(args.k, args.s, n, args.cap)
                    closed = kary.gf_A(kary.KSParams(args.k, args.s)).series(n)[n]
                else:
                    reference = oracle.distribution_nu(args.k, args.s, n, args.cap)
                    closed = None
                    if absdiff.regime(args.k, args.s) == "small":
                        closed = absdiff.gf_B_small(args.k, args.s).series(n)[n]
            except oracle.EnumerationTooLarge as exc:
                row["warning"] = f"oracle skipped: {exc}"
            else:
                row["oracle_agrees"] = dist == reference
                if closed is not None:
                    row["closed_form_agrees"] = dist == closed
        rows.append(row)
    _emit({"command": "dist", "stat": args.stat, "k": args.k, "s": args.s, "rows": rows},
          args.format, args.out)
    if args.verify and not all(r.get("oracle_agrees", True) for r in rows):
        return 1
    return 0


def _cmd_totals(args) -> int:
    if args.family == "words" and args.k is None:
        print("totals --words needs --k", file=sys.stderr)
        return 2
    rows = []
    for n in args.n:
        if args.family == "words":
            value = kary.total_occurrences(kary.KSParams(args.k, args.s), n)
        elif args.k is not None:
            value = partitions.total_pnk(n, args.k, args.s)
        else:
            value = partitions.q_total(n, args.s)
        rows.append({"n": n, "total": _scalar(value)})
    _emit({"command": "totals", "family": args.family, "k": args.k, "s": args.s,
           "rows": rows}, args.format, args.out)
    return 0


def _cmd_avoid(args) -> int:
    values = kary.avoid_count(kary.KSParams(args.k, args.s), args.n[-1])
    rows = [{"n": n, "count": _scalar(values[n])} for n in args.n]
    _emit({"command": "avoid", "k": args.k, "s": args.s, "rows": rows},
          args.format, args.out)
    return 0


def _cmd_partition_dist(args) -> int:
    rows = []
    for n in args.n:
        try:
            dist = partitions.p_dist_oracle(n, args.k, args.s, args.cap)
        except partitions.EnumerationTooLarge as exc:
            rows.append({"n": n, "warning": f"skipped: {exc}"})
            continue
        row = {"n": n, "dist": _poly_json(dist)}
        if args.q is not None:
            row["value"] = _scalar(dist(args.q))
        rows.append(row)
    _emit({"command": "partition-dist", "k": args.k, "s": args.s, "rows": rows},
          args.format, args.out)
    return 0


def _cmd_gap(args) -> int:
    rows = []
    for n in args.n:
        dist = kary.gap_distribution(kary.KSParams(args.k, args.s), args.r, n)
        rows.append({"n": n, "dist": _poly_json(dist)})
    _emit({"command": "gap", "k": args.k, "s": args.s, "r": args.r, "rows": rows},
          args.format, args.out)
    return 0


def _cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    checks = verify.run_suites(names, kmax=args.kmax, nmax=args.nmax, smax=args.smax)
    failed = [c for c in checks if not c.passed]
    payload = {
        "command": "verify",
        "suites": names,
        "checks": len(checks),
        "failed": len(failed),
        "rows": [c.to_dict() for c in (checks if args.full_report else failed)],
    }
    _emit(payload, args.format, args.out)
    return 1 if failed else 0


def _cmd_bijection(args) -> int:
    if args.v_to_w is not None:
        word = bijections.v_to_w(args.v_to_w)
        payload = {"command": "bijection", "map": "v-to-w",
                   "input": "".join(map(str, args.v_to_w)),
                   "output": "".join(map(str, word))}
    elif args.w_to_v is not None:
        word = bijections.w_to_v(args.w_to_v)
        payload = {"command": "bijection", "map": "w-to-v",
                   "input": "".join(map(str, args.w_to_v)),
                   "output": "".join(map(str, word))}
    elif args.word_to_tiling is not None:
        tiling = bijections.jpp_to_tiling(args.word_to_tiling)
        payload = {"command": "bijection", "map": "word-to-tiling",
                   "input": "".join(map(str, args.word_to_tiling)),
                   "output": [("square" if p == 1 else "domino") for p in tiling]}
    elif args.tiling_to_word is not None:
        pieces = tuple(int(c) for c in args.tiling_to_word.split(","))
        word = bijections.tiling_to_jpp(pieces)
        payload = {"command": "bijection", "map": "tiling-to-word",
                   "input": list(pieces), "output": "".join(map(str, word))}
    else:
        comp = _parse_composition(args.composition)
        moves = bijections.composition_to_maneuvers(comp)
        v_word = bijections.maneuvers_to_v_word(moves)
        w_word = bijections.v_to_w(v_word)
        payload = {
            "command": "bijection",
            "map": "composition-chain",
            "composition": [
                {"size": size, "colored": sorted(colored)} for size, colored in comp.parts
            ],
            "maneuvers": list(moves),
            "v_word": "".join(map(str, v_word)),
            "w_word": "".join(map(str, w_word)),
        }
    _emit(payload, args.format, args.out)
    return 0


def _parse_composition(text: str) -> bijections.ColoredComposition:
    """Parse 'size:c1,c2+size:c1' into a colored composition."""
    parts = []
    for chunk in text.split("+"):
        size_text, _, colors_text = chunk.partition(":")
        colors = frozenset(int(c) for c in colors_text.split(",") if c)
        parts.append((int(size_text), colors))
    return bijections.ColoredComposition(tuple(parts))


def _cmd_oeis_check(args) -> int:
    if args.generator is not None:
        spec = oeis.CheckSpec(args.id, args.generator, args.shift or 0,
                              args.length or 20)
    elif args.id in oeis.DEFAULT_CHECKS:
        base = oeis.DEFAULT_CHECKS[args.id]
        spec = oeis.CheckSpec(
            base.sequence_id,
            base.generator,
            base.shift if args.shift is None else args.shift,
            base.length if args.length is None else args.length,
        )
    else:
        print(f"no registered generator for {args.id}; pass --generator",
              file=sys.stderr)
        return 2
    try:
        with open(args.bfile) as handle:
            text = handle.read()
    except OSError as exc:
        print(f"cannot read b-file: {exc}", file=sys.stderr)
        return 2
    report = oeis.reconcile(spec, oeis.parse_bfile(text))
    payload = {"command": "oeis-check", **report.to_dict()}
    _emit(payload, args.format, args.out)
    return 0 if report.passed else 1


def _add_common(sub) -> None:
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--out", default=None, help="write output to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adjstats",
        description="Exact adjacency-difference statistics on k-ary words "
        "and set partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="distribution of the rise/jump count")
    p.add_argument("--stat", choices=("mu", "nu"), required=True,
                   help="mu: signed rise by s; nu: jump of absolute size s")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=_parse_range, required=True, help="length or a..b")
    p.add_argument("--q", type=_parse_rational, default=None,
                   help="also evaluate at this exact rational, e.g. 7/3")
    p.add_argument("--verify", action="store_true",
                   help="cross-check against enumeration and closed forms")
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    _add_common(p)
    p.set_defaults(fn=_cmd_dist)

    p = sub.add_parser("totals", help="summed statistic over a whole family")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--words", dest="family", action="store_const", const="words")
    group.add_argument("--partitions", dest="family", action="store_const",
                       const="partitions")
    p.add_argument("--k", type=int, default=None,
                   help="alphabet size (words) or block count (partitions)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=_parse_range, required=True)
    _add_common(p)
    p.set_defaults(fn=_cmd_totals)

    p = sub.add_parser("avoid", help="words with no rise by s")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=_parse_range, required=True)
    _add_common(p)
    p.set_defaults(fn=_cmd_avoid)

    p = sub.add_parser("partition-dist",
                       help="distribution of (a, a+s) on k-block partitions")
    p.add_argument("--n", type=_parse_range, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--q", type=_parse_rational, default=None)
    p.add_argument("--cap", type=int, default=partitions.DEFAULT_RGF_CAP)
    _add_common(p)
    p.set_defaults(fn=_cmd_partition_dist)

    p = sub.add_parser("gap", help="distribution of w[i+r] - w[i] = s counts")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=_parse_range, required=True)
    _add_common(p)
    p.set_defaults(fn=_cmd_gap)

    p = sub.add_parser("verify", help="run a cross-validation suite")
    p.add_argument("--suite", choices=sorted(verify.SUITES) + ["all"], required=True)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--smax", type=int, default=None)
    p.add_argument("--full-report", action="store_true",
                   help="list every check, not only failures")
    _add_common(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("bijection", help="apply one of the explicit bijections")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--v-to-w", type=_parse_word, default=None,
                       help="rewrite a word avoiding 2-4/3-4, e.g. 113")
    group.add_argument("--w-to-v", type=_parse_word, default=None)
    group.add_argument("--word-to-tiling", type=_parse_word, default=None)
    group.add_argument("--tiling-to-word", default=None,
                       help="comma-separated piece lengths, e.g. 1,2,1")
    group.add_argument("--composition", default=None,
                       help="colored composition 'size:c1,c2+size:c1'; prints "
                       "the full chain down to the 1-3/2-4 avoider")
    _add_common(p)
    p.set_defaults(fn=_cmd_bijection)

    p = sub.add_parser("oeis-check", help="reconcile a computed sequence "
                       "against a local OEIS b-file")
    p.add_argument("--id", required=True)
    p.add_argument("--bfile", required=True)
    p.add_argument("--shift", type=int, default=None)
    p.add_argument("--length", type=int, default=None)
    p.add_argument("--generator", choices=sorted(oeis.GENERATORS), default=None)
    _add_common(p)
    p.set_defaults(fn=_cmd_oeis_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (oracle.EnumerationTooLarge, partitions.EnumerationTooLarge) as exc:
        print(f"enumeration too large: {exc}", file=sys.stderr)
        return 2
    except (bijections.InvalidComposition, bijections.InvalidSequence,
            bijections.InvalidWord, oeis.BFileParseError,
            absdiff.WrongRegime, partitions.WrongRegime, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
