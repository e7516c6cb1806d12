"""Command line front end: `deplen analyze` and `deplen oracle`.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

import argparse
import os
import sys

from .analysis import (aggregate, analyze_sentence, summarize,
                       write_plot_csv, write_results_csv)
from .baselines import BaselineKind
from .conllu import IngestReport, read_treebank
from .tree import (mean_deplen_all_orders, mean_deplen_projective,
                   projective_count)

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; our contract reserves 2 for data errors
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _fail(message):
    print(f"error: {message}", file=sys.stderr)
    raise SystemExit(DATA_ERROR)


def build_parser():
    parser = _Parser(prog="deplen",
                     description="Dependency length vs. randomized baselines")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", parents=[], prog="deplen analyze",
                             help="run baselines over a corpus and write CSVs")
    analyze.add_argument("--input", action="append", required=True,
                         metavar="FILE", help="CoNLL-U file (repeatable)")
    analyze.add_argument("--baselines", default="random-tree,free,projective,head-fixed",
                         help="comma-separated subset of "
                              "{random-tree,free,projective,head-fixed}")
    analyze.add_argument("--samples", type=int, default=100, metavar="M",
                         help="samples per sentence per baseline")
    analyze.add_argument("--seed", type=int, default=0)
    analyze.add_argument("--exclude-punct", action="store_true",
                         help="drop leaf punctuation before measuring")
    analyze.add_argument("--min-len", type=int, default=1)
    analyze.add_argument("--max-len", type=int, default=None)
    analyze.add_argument("--min-bin", type=int, default=3,
                         help="smallest length bin kept in the plot data")
    analyze.add_argument("--results-out", default="results.csv")
    analyze.add_argument("--plot-out", default="plot.csv")

    oracle = sub.add_parser("oracle", prog="deplen oracle",
                            help="exact small-sentence sample-space statistics")
    oracle.add_argument("--input", action="append", required=True,
                        metavar="FILE")
    oracle.add_argument("--cap", type=int, default=10,
                        help="longest sentence the enumeration will accept")
    oracle.add_argument("--exclude-punct", action="store_true")
    return parser


def _check_analyze_args(parser, args):
    if args.samples < 1:
        parser.error("--samples must be >= 1")
    if args.min_len < 1:
        parser.error("--min-len must be >= 1")
    if args.max_len is not None and args.min_len > args.max_len:
        parser.error("--min-len exceeds --max-len")
    if args.min_bin < 1:
        parser.error("--min-bin must be >= 1")
    try:
        kinds = [BaselineKind.parse(tok.strip())
                 for tok in args.baselines.split(",") if tok.strip()]
    except ValueError as exc:
        parser.error(str(exc))
    if not kinds:
        parser.error("--baselines must name at least one baseline")
    return set(kinds)


def _load_corpus(paths, exclude_punct, report):
    trees = []
    for path in paths:
        if not os.path.isfile(path):
            _fail(f"no such input file: {path}")
        trees.extend(read_treebank(path, exclude_punct=exclude_punct,
                                   report=report))
    return trees


def cmd_analyze(parser, args):
    kinds = _check_analyze_args(parser, args)
    report = IngestReport()
    trees = _load_corpus(args.input, args.exclude_punct, report)
    skipped_length = 0
    kept = []
    for tree in trees:
        if tree.n < args.min_len or (args.max_len is not None
                                     and tree.n > args.max_len):
            skipped_length += 1
            continue
        kept.append(tree)
    if not kept:
        _fail("no valid sentences after filtering")

    results = [analyze_sentence(tree, kinds, args.samples, args.seed)
               for tree in sorted(kept, key=lambda t: t.sentence_id)]
    try:
        write_results_csv(results, args.results_out)
        write_plot_csv(aggregate(results, min_bin=args.min_bin), args.plot_out)
    except OSError as exc:
        _fail(f"cannot write output: {exc}")

    print(f"ingest: parsed={report.parsed} "
          f"skipped_invalid={report.skipped_invalid} "
          f"punct_dropped={report.punct_dropped} "
          f"nonleaf_punct_kept={report.nonleaf_punct_kept} "
          f"length_filtered={skipped_length}")
    print(f"{'baseline':<12} {'observed':>10} {'baseline':>10} {'shorter':>8}")
    for row in summarize(results):
        print(f"{row.kind.value:<12} {row.observed_mean:>10.4f} "
              f"{row.baseline_mean:>10.4f} {row.fraction_shorter:>8.4f}")
    print(f"OK {len(results)} sentences")
    return 0


def cmd_oracle(parser, args):
    if args.cap < 1:
        parser.error("--cap must be >= 1")
    report = IngestReport()
    trees = _load_corpus(args.input, args.exclude_punct, report)
    if not trees:
        _fail("no valid sentences")
    for tree in trees:
        if tree.n > args.cap:
            _fail(f"sentence {tree.sentence_id} has {tree.n} words, "
                  f"over the enumeration cap {args.cap}")
        print(f"{tree.sentence_id} n={tree.n} "
              f"projective_count={projective_count(tree)} "
              f"projective_mean={mean_deplen_projective(tree, cap=args.cap):.4f} "
              f"permutation_mean={mean_deplen_all_orders(tree):.4f}")
    print(f"OK {len(trees)} sentences")
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "analyze":
        return cmd_analyze(parser, args)
    return cmd_oracle(parser, args)


if __name__ == "__main__":
    sys.exit(main())
