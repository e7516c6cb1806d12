#!/usr/bin/env python3
"""Generate the bundled sample treebank (data/sample.conllu).

Trees are random recursive attachments; word orders are projective with
each dependent assigned a side at random and same-side sisters placed
short-before-long from the head outward, with a little noise. That gives
the corpus the dependency-length-minimizing character of real treebanks
while staying fully synthetic. A trailing period is attached to most
roots so punctuation handling has something to chew on.

Run from the repository root:  python tools/make_corpus.py
"""

import argparse
import random
import sys
from pathlib import Path

SEED = 20240601
LEFT_PROB = 0.4
NOISE_PROB = 0.15
PUNCT_PROB = 0.7

ONSETS = "b d f g k l m n p r s t v z br dr gr kl pl st tr".split()
VOWELS = "a e i o u ai ei ou".split()
LEAF_POS = ["NOUN", "DET", "ADJ", "ADV", "PRON", "PROPN", "NUM"]
INNER_POS = ["VERB", "NOUN", "ADJ"]
DEPRELS = ["nsubj", "obj", "obl", "nmod", "amod", "det", "advmod",
           "case", "mark", "conj", "xcomp", "acl"]


def pseudo_word(rng):
    k = rng.choice((2, 2, 3))
    return "".join(rng.choice(ONSETS) + rng.choice(VOWELS) for _ in range(k))


def random_shape(n, rng):
    """Children lists of a random recursive tree on abstract nodes 0..n-1."""
    children = [[] for _ in range(n)]
    for v in range(1, n):
        children[rng.randrange(v)].append(v)
    return children


def subtree_sizes(children):
    n = len(children)
    size = [1] * n
    for v in reversed(range(n)):  # children always have larger indices
        for c in children[v]:
            size[v] += size[c]
    return size


def linearize(children, rng):
    """Surface order of abstract nodes: random sides, short-near-head."""
    size = subtree_sizes(children)

    def lay(v):
        left, right = [], []
        for c in children[v]:
            (left if rng.random() < LEFT_PROB else right).append(c)
        left.sort(key=lambda c: size[c], reverse=True)   # biggest outermost
        right.sort(key=lambda c: size[c])                # smallest innermost
        for side in (left, right):
            if len(side) > 1 and rng.random() < NOISE_PROB:
                i = rng.randrange(len(side) - 1)
                side[i], side[i + 1] = side[i + 1], side[i]
        out = []
        for c in left:
            out.extend(lay(c))
        out.append(v)
        for c in right:
            out.extend(lay(c))
        return out

    return lay(0)


def make_sentence(n, rng):
    """Heads, forms, upos, deprels for one synthetic sentence of n words."""
    children = random_shape(n, rng)
    order = linearize(children, rng)
    position = {v: i + 1 for i, v in enumerate(order)}
    heads = [0] * n
    for v in range(n):
        for c in children[v]:
            heads[position[c] - 1] = position[v]
    forms, upos, deprels = [], [], []
    for i in range(n):
        v = order[i]
        forms.append(pseudo_word(rng))
        upos.append(rng.choice(INNER_POS) if children[v] else
                    rng.choice(LEAF_POS))
        deprels.append("root" if heads[i] == 0 else rng.choice(DEPRELS))
    if rng.random() < PUNCT_PROB:
        root_pos = heads.index(0) + 1
        heads.append(root_pos)
        forms.append(rng.choice([".", ".", ".", "!", "?"]))
        upos.append("PUNCT")
        deprels.append("punct")
    return heads, forms, upos, deprels


def emit(out, index, heads, forms, upos, deprels):
    out.write(f"# sent_id = synth-{index:04d}\n")
    out.write(f"# text = {' '.join(forms)}\n")
    for i, (h, f, u, d) in enumerate(zip(heads, forms, upos, deprels)):
        out.write(f"{i+1}\t{f}\t_\t{u}\t_\t_\t{h}\t{d}\t_\t_\n")
    out.write("\n")


def target_lengths():
    lengths = []
    for n in range(3, 10):
        lengths.extend([n] * 4)
    for n in range(10, 35):
        lengths.extend([n] * 20)
    for n in range(35, 41):
        lengths.extend([n] * 5)
    return lengths


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="data/sample.conllu")
    parser.add_argument("--seed", type=int, default=SEED)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    path = Path(args.out)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as out:
        for index, n in enumerate(target_lengths(), start=1):
            emit(out, index, *make_sentence(n, rng))
    print(f"wrote {index} sentences to {path}", file=sys.stderr)


if __name__ == "__main__":
    main()
