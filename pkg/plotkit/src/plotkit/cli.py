"""`plot` command: chart a deplen plot-data CSV.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

import argparse
import sys

from .render import PlotDataError, PlotSpec, render


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def main(argv=None):
    parser = _Parser(prog="plot",
                     description="Mean dependency length vs. sentence length")
    parser.add_argument("--input", required=True, metavar="CSV",
                        help="plot-data CSV (length,series,mean_deplen,n_sentences)")
    parser.add_argument("--output", required=True, metavar="IMAGE",
                        help="image file to write (format from extension)")
    parser.add_argument("--title", default=None)
    args = parser.parse_args(argv)
    spec = PlotSpec(input_csv=args.input, output_path=args.output,
                    title=args.title)
    try:
        render(spec)
    except PlotDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
