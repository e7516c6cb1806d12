"""Randomized baselines: free word orders, projective and head-fixed
projective word orders over a fixed tree, and random ordered trees.

Every sampler takes an explicit random.Random so corpus runs are
reproducible; identical (input, seed) gives identical samples.
"""

import heapq
import random
from enum import Enum
from hashlib import blake2b

from .tree import DepTree


class BaselineKind(Enum):
    RANDOM_TREE = "random-tree"
    FREE = "free"
    PROJECTIVE = "projective"
    HEAD_FIXED = "head-fixed"

    @classmethod
    def parse(cls, token):
        for kind in cls:
            if kind.value == token:
                return kind
        names = ", ".join(k.value for k in cls)
        raise ValueError(f"unknown baseline {token!r} (choose from {names})")


def derive_rng(seed, *parts):
    """A generator keyed on (seed, *parts) via a stable 64-bit hash.

    Used for per-sentence, per-baseline streams: results depend only on
    the sentence identity, never on corpus position or worker scheduling.
    """
    h = blake2b(digest_size=8)
    h.update(str(seed).encode("utf-8"))
    for part in parts:
        h.update(b"\x00")
        h.update(str(part).encode("utf-8"))
    return random.Random(int.from_bytes(h.digest(), "big"))


def sample_free(tree, rng):
    """A uniformly random linearization; the tree is untouched."""
    positions = list(range(1, tree.n + 1))
    rng.shuffle(positions)
    return tuple(positions)


def _invert(seq):
    pos = [0] * len(seq)
    for i, v in enumerate(seq):
        pos[v - 1] = i + 1
    return tuple(pos)


def sample_projective(tree, rng):
    """A uniform draw from the projective linearizations of the tree.

    At each node the node itself and its dependents' subtree blocks are
    shuffled (Fisher-Yates via rng.shuffle), making every arrangement of
    every node independently uniform, hence every projective order has
    probability 1 / prod (deg+1)!.
    """
    seq = []
    # explicit stack; negative entries mean "emit this node itself"
    stack = [tree.root]
    while stack:
        v = stack.pop()
        if v < 0:
            seq.append(-v)
            continue
        blocks = [-v] + list(tree.children[v])
        rng.shuffle(blocks)
        stack.extend(reversed(blocks))
    return _invert(seq)


def sample_head_fixed(tree, rng):
    """A projective draw that keeps every dependent on its attested side.

    Left subtree blocks are shuffled among the left slots and right
    blocks among the right slots; the head itself never crosses its
    dependents. Sample space size is prod over nodes of L! * R!.
    """
    seq = []
    stack = [tree.root]
    while stack:
        v = stack.pop()
        if v < 0:
            seq.append(-v)
            continue
        left = [c for c in tree.children[v] if c < v]
        right = [c for c in tree.children[v] if c > v]
        rng.shuffle(left)
        rng.shuffle(right)
        blocks = left + [-v] + right
        stack.extend(reversed(blocks))
    return _invert(seq)


def _decode_pruefer(seq, n):
    """Edges of the labeled tree on 1..n encoded by a Pruefer sequence."""
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return edges


def sample_random_tree(n, rng):
    """A uniformly random rooted labeled tree on nodes 1..n.

    Draws a uniform Pruefer sequence (a bijection with labeled trees),
    then a uniform root, and orients edges away from it. Each of the
    n^(n-1) rooted labeled trees is equally likely. The attested order
    of the result is the identity.
    """
    if n < 1:
        raise ValueError("need at least one node")
    if n == 1:
        return DepTree([0])
    if n == 2:
        edges = [(1, 2)]
    else:
        seq = [rng.randrange(1, n + 1) for _ in range(n - 2)]
        edges = _decode_pruefer(seq, n)
    root = rng.randrange(1, n + 1)

    adjacent = [[] for _ in range(n + 1)]
    for u, w in edges:
        adjacent[u].append(w)
        adjacent[w].append(u)
    parents = [0] * n
    stack = [root]
    seen = [False] * (n + 1)
    seen[root] = True
    while stack:
        v = stack.pop()
        for w in adjacent[v]:
            if not seen[w]:
                seen[w] = True
                parents[w - 1] = v
                stack.append(w)
    return DepTree(parents)
