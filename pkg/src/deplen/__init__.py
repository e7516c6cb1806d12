"""Dependency length measurement and randomized linearization baselines."""

from .analysis import (BaselineStat, ComparisonRow, SentenceResult,
                       aggregate, analyze_sentence, summarize,
                       write_plot_csv, write_results_csv)
from .baselines import (BaselineKind, derive_rng, sample_free,
                        sample_head_fixed, sample_projective,
                        sample_random_tree)
from .conllu import (IngestReport, RawSentence, Token, ValidationError,
                     parse_conllu, read_treebank, strip_punct, to_conllu,
                     validate)
from .tree import (DepTree, deplen, enumerate_projective, identity_order,
                   is_projective, mean_deplen_all_orders,
                   mean_deplen_projective, projective_count)

__all__ = [
    "BaselineKind", "BaselineStat", "ComparisonRow", "DepTree",
    "IngestReport", "RawSentence", "SentenceResult", "Token",
    "ValidationError", "aggregate", "analyze_sentence", "deplen",
    "derive_rng", "enumerate_projective", "identity_order", "is_projective",
    "mean_deplen_all_orders", "mean_deplen_projective", "parse_conllu",
    "projective_count", "read_treebank", "sample_free", "sample_head_fixed",
    "sample_projective", "sample_random_tree", "strip_punct", "summarize",
    "to_conllu", "validate", "write_plot_csv", "write_results_csv",
]
