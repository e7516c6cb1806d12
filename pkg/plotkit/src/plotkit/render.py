"""Figure-4-style chart: mean dependency length vs. sentence length,
one line per series, read from the plot-data CSV contract
(`length,series,mean_deplen,n_sentences`)."""

import csv
from dataclasses import dataclass

from matplotlib.figure import Figure

EXPECTED_HEADER = ["length", "series", "mean_deplen", "n_sentences"]

# attested is drawn black and the free nonprojective baseline red;
# remaining series get distinct fixed styles, then a fallback cycle
SERIES_STYLES = {
    "attested": dict(color="black", linestyle="-", marker="o"),
    "free": dict(color="red", linestyle="-", marker="s"),
    "projective": dict(color="tab:blue", linestyle="--", marker="^"),
    "head-fixed": dict(color="tab:green", linestyle="-.", marker="v"),
    "random-tree": dict(color="tab:purple", linestyle=":", marker="d"),
}
FALLBACK_COLORS = ["tab:orange", "tab:brown", "tab:pink", "tab:gray",
                   "tab:olive", "tab:cyan"]
FALLBACK_STYLES = ["-", "--", "-.", ":"]


class PlotDataError(ValueError):
    """The input CSV does not satisfy the plot-data contract."""


@dataclass(frozen=True)
class PlotSpec:
    input_csv: str
    output_path: str
    title: str | None = None


def read_plot_data(path):
    """Rows of the plot-data CSV as (length, series, mean_deplen) tuples."""
    try:
        handle = open(path, encoding="utf-8", newline="")
    except OSError as exc:
        raise PlotDataError(f"cannot read {path}: {exc}") from exc
    with handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header != EXPECTED_HEADER:
            raise PlotDataError(
                f"expected header {','.join(EXPECTED_HEADER)}, "
                f"got {header!r}")
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                rows.append((int(row[0]), row[1], float(row[2])))
            except (IndexError, ValueError) as exc:
                raise PlotDataError(f"line {lineno}: bad row {row!r}") from exc
    if not rows:
        raise PlotDataError(f"{path} has no data rows")
    return rows


def style_for(series, index):
    if series in SERIES_STYLES:
        return SERIES_STYLES[series]
    return dict(color=FALLBACK_COLORS[index % len(FALLBACK_COLORS)],
                linestyle=FALLBACK_STYLES[index % len(FALLBACK_STYLES)],
                marker=".")


def build_figure(rows, title=None):
    """One polyline per series over (length, mean_deplen), with legend."""
    by_series = {}
    for length, series, mean in rows:
        by_series.setdefault(series, []).append((length, mean))
    fig = Figure(figsize=(7, 5))
    ax = fig.add_subplot()
    unknown = 0
    for series in sorted(by_series, key=lambda s: (s != "attested", s)):
        points = sorted(by_series[series])
        style = style_for(series, unknown)
        if series not in SERIES_STYLES:
            unknown += 1
        ax.plot([p[0] for p in points], [p[1] for p in points],
                label=series, markersize=3, **style)
    ax.set_xlabel("Sentence length (words)")
    ax.set_ylabel("Mean dependency length")
    if title:
        ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    return fig


def render(spec):
    """Read the CSV, draw the chart, and write the image file."""
    rows = read_plot_data(spec.input_csv)
    fig = build_figure(rows, title=spec.title)
    fig.savefig(spec.output_path, dpi=150)
    return spec.output_path
