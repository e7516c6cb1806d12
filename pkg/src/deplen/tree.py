"""Dependency trees, the dependency length metric, and projectivity.

Nodes are numbered 1..n in attested surface order, so the attested
linearization is always the identity. A linearization is a tuple whose
entry i is the 1-based sentence position of node i+1.
"""

from itertools import permutations, product
from math import factorial

Linearization = tuple  # pos-by-node: order[v - 1] = position of node v


class DepTree:
    """A rooted dependency tree over nodes 1..n.

    ``parents[i]`` is the head of node i+1, with 0 marking the root.
    Children are kept in attested (ascending id) order. Instances are
    treated as immutable after construction.
    """

    __slots__ = ("n", "root", "parents", "children", "edges", "topo",
                 "forms", "upos", "deprels", "sentence_id")

    def __init__(self, parents, forms=None, upos=None, deprels=None,
                 sentence_id=""):
        parents = tuple(parents)
        n = len(parents)
        if n == 0:
            raise ValueError("empty tree")
        roots = [v for v in range(1, n + 1) if parents[v - 1] == 0]
        if len(roots) != 1:
            raise ValueError(f"expected exactly one root, found {len(roots)}")
        children = [[] for _ in range(n + 1)]
        for v in range(1, n + 1):
            h = parents[v - 1]
            if h < 0 or h > n:
                raise ValueError(f"head {h} of node {v} out of range 1..{n}")
            if h == v:
                raise ValueError(f"node {v} is its own head")
            if h:
                children[h].append(v)
        self.n = n
        self.root = roots[0]
        self.parents = parents
        self.children = tuple(tuple(c) for c in children)
        self.edges = tuple((parents[v - 1], v)
                           for v in range(1, n + 1) if parents[v - 1])
        self.topo = self._toposort()
        self.forms = tuple(forms) if forms is not None else None
        self.upos = tuple(upos) if upos is not None else None
        self.deprels = tuple(deprels) if deprels is not None else None
        self.sentence_id = sentence_id

    def _toposort(self):
        # Root-first order; doubles as the cycle/connectivity check.
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(self.children[v])
        if len(order) != self.n:
            raise ValueError("tree is cyclic or disconnected")
        return tuple(order)

    def subtree_sizes(self):
        """Number of nodes in each subtree, indexed by node (entry 0 unused)."""
        size = [1] * (self.n + 1)
        size[0] = 0
        for v in reversed(self.topo):
            h = self.parents[v - 1]
            if h:
                size[h] += size[v]
        return size

    def __eq__(self, other):
        if not isinstance(other, DepTree):
            return NotImplemented
        return (self.parents == other.parents and self.forms == other.forms
                and self.upos == other.upos and self.deprels == other.deprels
                and self.sentence_id == other.sentence_id)

    def __hash__(self):
        return hash((self.parents, self.forms, self.upos, self.deprels))

    def __repr__(self):
        return f"DepTree(n={self.n}, root={self.root}, parents={self.parents})"


def identity_order(n):
    """The attested linearization: node v at position v."""
    return tuple(range(1, n + 1))


def _check_order(tree, order):
    if len(order) != tree.n or sorted(order) != list(range(1, tree.n + 1)):
        raise ValueError(
            f"order {order!r} is not a bijection over nodes 1..{tree.n}")


def deplen(tree, order=None):
    """Total dependency length: sum over edges of |pos(head) - pos(dep)|.

    The root's attachment contributes nothing. With no order given, the
    attested (identity) order is scored.
    """
    if order is None:
        order = identity_order(tree.n)
    else:
        _check_order(tree, order)
    return sum(abs(order[h - 1] - order[d - 1]) for h, d in tree.edges)


def is_projective(tree, order=None):
    """True iff every subtree occupies a contiguous span of positions.

    Equivalent to the no-crossing-arcs plus no-arc-over-the-root reading
    of projectivity; runs in O(n).
    """
    if order is None:
        order = identity_order(tree.n)
    else:
        _check_order(tree, order)
    n = tree.n
    lo = [0] + list(order)
    hi = list(lo)
    size = [1] * (n + 1)
    for v in reversed(tree.topo):
        h = tree.parents[v - 1]
        if h:
            if lo[v] < lo[h]:
                lo[h] = lo[v]
            if hi[v] > hi[h]:
                hi[h] = hi[v]
            size[h] += size[v]
        if hi[v] - lo[v] + 1 != size[v]:
            return False
    return True


def projective_count(tree):
    """Number of projective linearizations: prod over nodes of (deg+1)!."""
    count = 1
    for v in range(1, tree.n + 1):
        count *= factorial(len(tree.children[v]) + 1)
    return count


def enumerate_projective(tree, cap=10):
    """Yield every projective linearization of the tree exactly once.

    Works by arranging, at each node, the node itself plus its dependents'
    subtree blocks in every possible order. Refuses trees above ``cap``
    nodes since the count grows as prod (deg+1)!.
    """
    if tree.n > cap:
        raise ValueError(f"tree has {tree.n} nodes, enumeration cap is {cap}")

    def seqs(v):
        kids = tree.children[v]
        if not kids:
            return [(v,)]
        blocks = [[(v,)]] + [seqs(c) for c in kids]
        out = []
        for arrangement in permutations(blocks):
            for combo in product(*arrangement):
                seq = ()
                for part in combo:
                    seq += part
                out.append(seq)
        return out

    n = tree.n
    kids = tree.children[tree.root]
    blocks = [[(tree.root,)]] + [seqs(c) for c in kids]
    for arrangement in permutations(blocks):
        for combo in product(*arrangement):
            seq = ()
            for part in combo:
                seq += part
            pos = [0] * n
            for i, v in enumerate(seq):
                pos[v - 1] = i + 1
            yield tuple(pos)


def mean_deplen_all_orders(tree):
    """Exact mean dependency length over all n! linearizations.

    For a uniformly random pair of distinct positions among 1..n the
    expected distance is (n+1)/3, and each of the n-1 edges contributes
    independently in expectation.
    """
    if tree.n < 2:
        return 0.0
    return len(tree.edges) * (tree.n + 1) / 3


def mean_deplen_projective(tree, cap=10):
    """Exact mean dependency length over all projective linearizations."""
    total = 0
    count = 0
    for order in enumerate_projective(tree, cap=cap):
        total += deplen(tree, order)
        count += 1
    return total / count
