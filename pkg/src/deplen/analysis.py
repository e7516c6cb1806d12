"""Monte Carlo harness: per-sentence baseline statistics, length-binned
aggregation, and the delimited outputs.

A corpus run is a pure function of (corpus, flags, seed): per-sentence
generators are derived from the sentence id, so sentence order and any
parallel scheduling cannot change a single number.
"""

import csv
import math
from dataclasses import dataclass
from statistics import fmean

from .baselines import (BaselineKind, derive_rng, sample_free,
                        sample_head_fixed, sample_projective,
                        sample_random_tree)
from .tree import deplen, identity_order

_SAMPLERS = {
    BaselineKind.FREE: sample_free,
    BaselineKind.PROJECTIVE: sample_projective,
    BaselineKind.HEAD_FIXED: sample_head_fixed,
}

RESULTS_HEADER = ("sentence_id", "length", "observed",
                  "baseline", "mean", "stddev", "samples")
PLOT_HEADER = ("length", "series", "mean_deplen", "n_sentences")
ATTESTED_SERIES = "attested"


@dataclass(frozen=True)
class BaselineStat:
    mean: float
    stddev: float
    samples: int


@dataclass(frozen=True)
class SentenceResult:
    sentence_id: str
    n: int
    observed: int
    baselines: dict


@dataclass(frozen=True)
class ComparisonRow:
    length: int
    series: str
    mean_deplen: float
    n_sentences: int


@dataclass(frozen=True)
class BaselineSummary:
    kind: BaselineKind
    observed_mean: float
    baseline_mean: float
    fraction_shorter: float


def _stat(values):
    m = len(values)
    mean = fmean(values)
    if m > 1:
        var = sum((x - mean) ** 2 for x in values) / (m - 1)
        sd = math.sqrt(var)
    else:
        sd = 0.0
    return BaselineStat(mean=mean, stddev=sd, samples=m)


def analyze_sentence(tree, kinds, samples, seed):
    """Score the attested order and Monte Carlo means for each baseline.

    The generator for each (sentence, baseline) pair is derived from
    (seed, sentence_id, baseline), so adding or removing baselines does
    not perturb the others.
    """
    if samples < 1:
        raise ValueError("need at least one sample per baseline")
    observed = deplen(tree)
    ident = identity_order(tree.n)
    stats = {}
    for kind in BaselineKind:
        if kind not in kinds:
            continue
        rng = derive_rng(seed, tree.sentence_id, kind.value)
        if kind is BaselineKind.RANDOM_TREE:
            values = [deplen(sample_random_tree(tree.n, rng), ident)
                      for _ in range(samples)]
        else:
            sampler = _SAMPLERS[kind]
            values = [deplen(tree, sampler(tree, rng))
                      for _ in range(samples)]
        stats[kind] = _stat(values)
    return SentenceResult(sentence_id=tree.sentence_id, n=tree.n,
                          observed=observed, baselines=stats)


def aggregate(results, min_bin=3):
    """Length-binned comparison rows: one per (exact length, series).

    The attested series averages observed lengths; each baseline series
    averages the per-sentence sample means. Bins with fewer than
    ``min_bin`` sentences are dropped.
    """
    by_length = {}
    for r in results:
        by_length.setdefault(r.n, []).append(r)
    rows = []
    for length in sorted(by_length):
        group = by_length[length]
        if len(group) < min_bin:
            continue
        rows.append(ComparisonRow(length, ATTESTED_SERIES,
                                  fmean(r.observed for r in group),
                                  len(group)))
        for kind in BaselineKind:
            if all(kind in r.baselines for r in group):
                rows.append(ComparisonRow(
                    length, kind.value,
                    fmean(r.baselines[kind].mean for r in group),
                    len(group)))
    return rows


def summarize(results):
    """Corpus-level view: per baseline, grand means and the fraction of
    sentences whose attested order is strictly shorter than the baseline
    sample mean."""
    results = list(results)
    rows = []
    if not results:
        return rows
    observed_mean = fmean(r.observed for r in results)
    for kind in BaselineKind:
        with_kind = [r for r in results if kind in r.baselines]
        if not with_kind:
            continue
        baseline_mean = fmean(r.baselines[kind].mean for r in with_kind)
        shorter = sum(1 for r in with_kind
                      if r.observed < r.baselines[kind].mean)
        rows.append(BaselineSummary(
            kind=kind,
            observed_mean=observed_mean,
            baseline_mean=baseline_mean,
            fraction_shorter=shorter / len(with_kind)))
    return rows


def write_results_csv(results, path):
    """Per-sentence CSV, one row per (sentence, baseline), sorted by
    sentence id so output never depends on corpus order."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(RESULTS_HEADER)
        for r in sorted(results, key=lambda r: r.sentence_id):
            for kind in BaselineKind:
                if kind not in r.baselines:
                    continue
                stat = r.baselines[kind]
                writer.writerow((r.sentence_id, r.n, r.observed, kind.value,
                                 f"{stat.mean:.4f}", f"{stat.stddev:.4f}",
                                 stat.samples))


def write_plot_csv(rows, path):
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(PLOT_HEADER)
        for row in rows:
            writer.writerow((row.length, row.series,
                             f"{row.mean_deplen:.4f}", row.n_sentences))
