"""CoNLL-U parsing, tree validation, and punctuation stripping.

Only the ID, FORM, UPOS, HEAD and DEPREL columns are retained; the other
five CoNLL-U fields are parsed positionally and ignored. Sentences that
fail to parse or validate are skipped with a count, never aborting a
corpus run.
"""

import os
from dataclasses import dataclass, field

from .tree import DepTree

N_COLUMNS = 10


class ValidationError(ValueError):
    """A sentence whose head references do not form a valid tree."""

    def __init__(self, sentence_id, token_index, message):
        self.sentence_id = sentence_id
        self.token_index = token_index
        super().__init__(f"{sentence_id}: token {token_index}: {message}")


@dataclass(frozen=True)
class Token:
    index: int          # 1-based position in the sentence
    form: str
    upos: str
    head: int           # 0 for the root, else 1-based head position
    deprel: str

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"token index {self.index} < 1")
        if self.head < 0:
            raise ValueError(f"token {self.index}: negative head {self.head}")
        if self.head == self.index:
            raise ValueError(f"token {self.index} is its own head")


@dataclass(frozen=True)
class RawSentence:
    sentence_id: str
    tokens: tuple

    def __len__(self):
        return len(self.tokens)


@dataclass
class IngestReport:
    """Counters for one ingest run; parsed + skipped_invalid = sentences seen."""
    parsed: int = 0
    skipped_invalid: int = 0
    punct_dropped: int = 0
    nonleaf_punct_kept: int = 0
    errors: list = field(default_factory=list)

    def note(self, message):
        self.errors.append(message)


def _parse_token(line):
    cols = line.split("\t")
    if len(cols) != N_COLUMNS:
        raise ValueError(f"expected {N_COLUMNS} columns, got {len(cols)}")
    ident = cols[0]
    if "-" in ident or "." in ident:
        return None  # multiword range or empty node: not a tree node
    return Token(index=int(ident), form=cols[1], upos=cols[3],
                 head=int(cols[6]), deprel=cols[7])


def parse_conllu(lines, source="<stream>", report=None):
    """Yield one RawSentence per blank-line-delimited block of UTF-8 text.

    ``lines`` is any iterable of text lines. Comment lines set the
    sentence id via ``# sent_id = ...``; otherwise ids fall back to
    ``<source>:<running index>``. Blocks with malformed token lines or
    non-contiguous ids are skipped and counted on the report.
    """
    if report is None:
        report = IngestReport()
    tokens = []
    sent_id = None
    bad = None
    seen = 0

    def finish():
        nonlocal tokens, sent_id, bad, seen
        if not tokens and bad is None:
            return None
        seen += 1
        sid = sent_id if sent_id is not None else f"{source}:{seen}"
        result = None
        if bad is None and [t.index for t in tokens] != list(range(1, len(tokens) + 1)):
            bad = "token ids are not 1..n"
        if bad is None:
            result = RawSentence(sentence_id=sid, tokens=tuple(tokens))
        else:
            report.skipped_invalid += 1
            report.note(f"{sid}: {bad}")
        tokens = []
        sent_id = None
        bad = None
        return result

    for line in lines:
        line = line.rstrip("\n").rstrip("\r")
        if not line:
            sentence = finish()
            if sentence is not None:
                yield sentence
            continue
        if line.startswith("#"):
            key, sep, value = line[1:].partition("=")
            if sep and key.strip() == "sent_id":
                sent_id = value.strip()
            continue
        if bad is not None:
            continue
        try:
            token = _parse_token(line)
        except ValueError as exc:
            bad = str(exc)
            continue
        if token is not None:
            tokens.append(token)
    sentence = finish()
    if sentence is not None:
        yield sentence


def validate(raw):
    """Check that the head references form a single rooted tree.

    Returns the corresponding DepTree with the attested (file) order;
    raises ValidationError naming the sentence and offending token.
    """
    n = len(raw.tokens)
    roots = [t.index for t in raw.tokens if t.head == 0]
    if not roots:
        raise ValidationError(raw.sentence_id, 0, "no root")
    if len(roots) > 1:
        raise ValidationError(raw.sentence_id, roots[1],
                              f"multiple roots {roots}")
    for t in raw.tokens:
        if t.head > n:
            raise ValidationError(raw.sentence_id, t.index,
                                  f"head {t.head} out of range 1..{n}")
    heads = [t.head for t in raw.tokens]
    # walk up from every node; a walk longer than n nodes means a cycle
    for t in raw.tokens:
        steps = 0
        v = t.index
        while v != 0:
            v = heads[v - 1]
            steps += 1
            if steps > n:
                raise ValidationError(raw.sentence_id, t.index, "cycle")
    return DepTree(heads,
                   forms=[t.form for t in raw.tokens],
                   upos=[t.upos for t in raw.tokens],
                   deprels=[t.deprel for t in raw.tokens],
                   sentence_id=raw.sentence_id)


def strip_punct(tree, report=None):
    """Drop punctuation that hangs off the tree as leaves.

    A PUNCT token is removed iff its whole subtree is PUNCT (plain leaves
    are the common case; this closure keeps the operation idempotent).
    PUNCT tokens governing non-PUNCT material are kept and counted.
    Raises ValidationError if nothing would remain.
    """
    if tree.upos is None:
        return tree
    drop = [False] * (tree.n + 1)
    for v in reversed(tree.topo):
        if tree.upos[v - 1] == "PUNCT":
            drop[v] = all(drop[c] for c in tree.children[v])
    kept = [v for v in range(1, tree.n + 1) if not drop[v]]
    dropped = tree.n - len(kept)
    if not kept:
        raise ValidationError(tree.sentence_id, 0,
                              "sentence is all punctuation")
    if report is not None:
        report.punct_dropped += dropped
        report.nonleaf_punct_kept += sum(
            1 for v in kept if tree.upos[v - 1] == "PUNCT")
    if dropped == 0:
        return tree
    renum = {v: i + 1 for i, v in enumerate(kept)}
    renum[0] = 0
    parents = [renum[tree.parents[v - 1]] for v in kept]
    return DepTree(parents,
                   forms=[tree.forms[v - 1] for v in kept],
                   upos=[tree.upos[v - 1] for v in kept],
                   deprels=[tree.deprels[v - 1] for v in kept],
                   sentence_id=tree.sentence_id)


def to_conllu(tree):
    """Serialize a DepTree back to CoNLL-U text (one block, blank-line terminated)."""
    lines = []
    if tree.sentence_id:
        lines.append(f"# sent_id = {tree.sentence_id}")
    for v in range(1, tree.n + 1):
        form = tree.forms[v - 1] if tree.forms else "_"
        upos = tree.upos[v - 1] if tree.upos else "_"
        deprel = tree.deprels[v - 1] if tree.deprels else "_"
        cols = (str(v), form, "_", upos, "_", "_",
                str(tree.parents[v - 1]), deprel, "_", "_")
        lines.append("\t".join(cols))
    return "\n".join(lines) + "\n\n"


def read_treebank(path, exclude_punct=False, report=None):
    """Parse, validate and optionally punctuation-strip one treebank file.

    Yields DepTrees; invalid sentences are counted on the report and
    skipped. Fallback sentence ids are namespaced by the file name.
    """
    if report is None:
        report = IngestReport()
    source = os.path.basename(str(path))
    with open(path, encoding="utf-8") as handle:
        for raw in parse_conllu(handle, source=source, report=report):
            try:
                tree = validate(raw)
                if exclude_punct:
                    tree = strip_punct(tree, report=report)
            except ValidationError as exc:
                report.skipped_invalid += 1
                report.note(str(exc))
                continue
            report.parsed += 1
            yield tree
