"""Command-line front end: ``hfsim distance|similarity|rank|reproduce-paper``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from pathlib import Path

from .core import ExtensionPolicy
from .distances import Distance, DistanceSpec, distance, exponential_distance
from .documents import parse_pair, parse_problem
from .errors import HFSError
from .experiment import reproduce
from .madm import relative_similarity
from .reference import TOLERANCE
from .similarities import Similarity, SimilaritySpec, Transform, similarity

EXIT_OK, EXIT_INVALID, EXIT_TOLERANCE = 0, 1, 2

DISTANCE_NAMES = [d.value for d in Distance]
SIMILARITY_NAMES = [s.value for s in Similarity if s is not Similarity.FROM_DISTANCE]


def fmt(x: float) -> str:
    return f"{x:.6f}"


def _p_list(values):
    out = []
    for v in values:
        for part in str(v).split(","):
            if part.strip():
                try:
                    out.append(float(part))
                except ValueError:
                    raise argparse.ArgumentTypeError(f"invalid p value {part!r}") from None
    return out


def _p_label(p):
    return "-" if p is None else f"{p:g}"


_NUM = re.compile(r'"\\u0000(-?[0-9.]+)"')


def _json(obj) -> str:
    # numbers are pre-formatted as "\0<digits>" strings, then unquoted
    return _NUM.sub(r"\1", json.dumps(obj, indent=2, ensure_ascii=False)) + "\n"


def _num(x: float) -> str:
    return "\0" + fmt(x)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _plain(header, rows) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[k]) for r in rows)) if rows else len(h)
              for k, h in enumerate(header)]
    line = lambda cells: "  ".join(c.ljust(wd) for c, wd in zip(cells, widths)).rstrip()
    return "\n".join([line(header), line(["-" * wd for wd in widths])] + [line(r) for r in rows]) + "\n"


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise HFSError(f"cannot read {path}: {exc.strerror}") from None


def _distance_spec(name, p, weights):
    fam = Distance(name)
    w = weights if fam in (Distance.TYPE2_WEIGHTED, Distance.LP_WEIGHTED) else None
    if w is None and fam in (Distance.TYPE2_WEIGHTED, Distance.LP_WEIGHTED):
        raise HFSError(f"{name} needs 'weights' in the input document")
    return DistanceSpec(fam, p, w)


def _similarity_spec(name, p, transform, weights=None):
    if name in DISTANCE_NAMES:
        base = _distance_spec(name, p, weights)
        return SimilaritySpec(Similarity.FROM_DISTANCE, p, None, base, Transform(transform))
    return SimilaritySpec(Similarity(name), p, weights)


def cmd_pairwise(args) -> tuple:
    pair = parse_pair(_read(args.input))
    policy = ExtensionPolicy.parse(args.policy)
    rows = []
    for p in args.p:
        if args.command == "distance":
            spec = _distance_spec(args.measure, p, pair.weights)
            fn = exponential_distance if args.exponential else distance
            value = fn(pair.A, pair.B, spec, policy)
            p_used = spec.p
        else:
            spec = _similarity_spec(args.measure, p, args.transform, pair.weights)
            value = similarity(pair.A, pair.B, spec, policy)
            p_used = spec.base.p if spec.base is not None else spec.p
        # fixed-order families report the order actually used
        rows.append((p_used, value))
    if args.format == "json":
        out = _json({"command": args.command, "measure": args.measure,
                     "results": [{"p": _num(p), "value": _num(v)} for p, v in rows]})
    else:
        table = [(f"{p:g}", fmt(v)) for p, v in rows]
        out = (_csv if args.format == "csv" else _plain)(["p", "value"], table)
    return EXIT_OK, out


def cmd_rank(args) -> tuple:
    problem = parse_problem(_read(args.input))
    policy = ExtensionPolicy.parse(args.policy)
    results = []
    for p in args.p:
        spec = _similarity_spec(args.measure, p, args.transform, problem.weights)
        results.append((p, relative_similarity(problem, spec, policy,
                                               use_weights=not args.unweighted)))
    if args.format == "json":
        doc = {"command": "rank", "measure": args.measure, "results": [
            {"p": _num(p), "ranking": r.ranking_string(),
             "scores": [{"alternative": n, "score": _num(s), "rank": r.order.index(n) + 1}
                        for n, s in zip(r.names, r.scores)]}
            for p, r in results]}
        return EXIT_OK, _json(doc)
    rows = [(f"{p:g}", n, fmt(s), r.order.index(n) + 1)
            for p, r in results for n, s in zip(r.names, r.scores)]
    if args.format == "csv":
        return EXIT_OK, _csv(["p", "alternative", "score", "rank"], rows)
    out = []
    for p, r in results:
        body = [(n, fmt(s), r.order.index(n) + 1) for n, s in zip(r.names, r.scores)]
        out.append(f"{args.measure}, p={p:g}\n" + _plain(["alternative", "score", "rank"], body)
                   + f"ranking: {r.ranking_string()}\n")
    return EXIT_OK, "\n".join(out)


def cmd_reproduce(args) -> tuple:
    problem = parse_problem(_read(args.input)) if args.input else None
    rows = reproduce(problem, ExtensionPolicy.parse(args.policy))
    worst = max(r.max_deviation for r in rows)
    rankings_ok = all(r.ranking_matches for r in rows)
    status = EXIT_OK if worst <= TOLERANCE and rankings_ok else EXIT_TOLERANCE
    names = rows[0].result.names

    if args.format == "csv":
        body = [(r.measure, _p_label(r.p), n, fmt(s), fmt(ref), fmt(abs(s - ref)),
                 r.result.order.index(n) + 1)
                for r in rows for n, s, ref in zip(names, r.result.scores, r.reference)]
        return status, _csv(["measure", "p", "alternative", "score", "reference", "deviation",
                             "rank"], body)
    if args.format == "json":
        doc = {"command": "reproduce-paper", "tolerance": _num(TOLERANCE),
               "max_abs_deviation": _num(worst), "rankings_match": rankings_ok,
               "rows": [{"measure": r.measure, "p": None if r.p is None else r.p,
                         "scores": [_num(s) for s in r.result.scores],
                         "reference": [_num(s) for s in r.reference],
                         "max_abs_deviation": _num(r.max_deviation),
                         "ranking": r.result.ranking_string(),
                         "reference_ranking": r.reference_ranking} for r in rows]}
        return status, _json(doc)

    out = []
    for measure in dict.fromkeys(r.measure for r in rows):
        group = [r for r in rows if r.measure == measure]
        body = [[_p_label(r.p)] + [fmt(s) for s in r.result.scores]
                + [fmt(r.max_deviation), r.result.ranking_string(),
                   "ok" if r.ranking_matches else f"expected: {r.reference_ranking}"]
                for r in group]
        out.append(f"{measure}\n" + _plain(["p", *names, "max dev", "ranking", "vs reference"], body))
    out.append(f"max abs deviation: {fmt(worst)} (tolerance {TOLERANCE:g}); "
               f"rankings {'all match' if rankings_ok else 'differ'}\n")
    return status, "\n".join(out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hfsim",
                                     description="Hesitant fuzzy set distances, similarities and ranking.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, measures, default_p="1"):
        sp.add_argument("--input", required=True, help="JSON input document")
        sp.add_argument("--measure", required=True, choices=measures)
        sp.add_argument("--p", nargs="+", default=[default_p],
                        help="one or more p values (space or comma separated)")
        sp.add_argument("--transform", default="linear", choices=[t.value for t in Transform],
                        help="decreasing map for similarities built from a distance")
        sp.add_argument("--policy", default="pessimistic",
                        choices=[e.value for e in ExtensionPolicy])
        sp.add_argument("--format", default="plain", choices=["plain", "csv", "json"])

    d = sub.add_parser("distance", help="distance between the A and B sets of a pair document")
    common(d, DISTANCE_NAMES)
    d.add_argument("--exponential", action="store_true",
                   help="report the exponential normalization of the distance")
    common(sub.add_parser("similarity", help="similarity between the A and B sets"),
           SIMILARITY_NAMES + DISTANCE_NAMES)
    r = sub.add_parser("rank", help="rank the alternatives of a problem document")
    common(r, SIMILARITY_NAMES + DISTANCE_NAMES)
    r.add_argument("--unweighted", action="store_true",
                   help="ignore the attribute weights of the problem")

    rp = sub.add_parser("reproduce-paper",
                        help="re-run the bundled energy-project example against its reference scores")
    rp.add_argument("--input", help="problem document to use instead of the bundled one")
    rp.add_argument("--policy", default="pessimistic", choices=[e.value for e in ExtensionPolicy])
    rp.add_argument("--format", default="plain", choices=["plain", "csv", "json"])
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        if getattr(args, "p", None) is not None:
            args.p = _p_list(args.p)
        handler = {"distance": cmd_pairwise, "similarity": cmd_pairwise,
                   "rank": cmd_rank, "reproduce-paper": cmd_reproduce}[args.command]
        status, text = handler(args)
    except (HFSError, argparse.ArgumentTypeError) as exc:
        print(f"hfsim: error: {exc}", file=stderr)
        return EXIT_INVALID
    stdout.write(text)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
