"""Increasing trees and forests, their word bijections, and marked-forest counts.

A word w with nu copies of each label and t copies of 0 factorizes uniquely
on its least letter x as  w = w_1 x w_2 x ... x w_(nu+1), and recursing on
the factors turns w into an ordered tree: x becomes an internal node whose
nu+1 child slots hold the subtrees of the factors (empty factor = external
leaf).  At the top, the t copies of 0 produce a root with t+1 slots when
t >= 1; when t = 0 there is no 0-node and the root is the least label with
the full nu+1 slots (or the tree is empty when there are no labels at all).
Labels increase along every root path, because the least letter of a factor
is larger than the letter that cut it.  Reading the tree back in depth-first
order, emitting each node's label between consecutive slots, inverts the
construction exactly.

Statistics: E(T) collects the internal non-root nodes sitting in the first
(leftmost) slot of their parent, and the distinguished pool D(T) is E(T) for
t >= 1, E(T) plus the root label for t = 0 on a nonempty tree, and empty for
the empty tree.  Over a forest, |D(F)| = n - (total ascents of the word
tuple), which is the bridge to the Ward numbers: the order-nu Ward number
W(n, k) counts pairs (F, M) where F ranges over the forests of the
order-(nu+1) word model and M over (n-k)-subsets of D(F).  That count is
implemented literally in ``ward_marked_count``, giving a route to the Ward
triangle that never touches its recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .eulerian import Params
from .numerics import binomial
from .stirlingperm import (
    GenStirlingSeq,
    GenStirlingWord,
    enumerate_sequences,
    seq_ascent_count,
    validate_word,
)

__all__ = [
    "TreeNode",
    "IncTree",
    "IncForest",
    "perm_to_tree",
    "tree_to_perm",
    "seq_to_forest",
    "forest_to_seq",
    "tree_labels",
    "leftmost_internal_set",
    "distinguished_set",
    "forest_distinguished_set",
    "marked_statistic_check",
    "ward_marked_row",
    "ward_marked_count",
    "tree_stats",
    "validate_tree",
    "tree_to_json",
    "forest_to_json",
    "tree_to_dot",
    "forest_to_dot",
]


@dataclass(frozen=True)
class TreeNode:
    """Internal node: a label and an ordered tuple of slots (None = external)."""

    label: int
    slots: tuple

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(self.slots))


@dataclass(frozen=True)
class IncTree:
    """One increasing tree.

    ``d`` is the slot count of every internal non-root node; the root has
    t+1 slots and label 0 when t >= 1, and is an ordinary least-label node
    with d slots when t = 0.  ``root`` is None only for the empty tree
    (t = 0 and no labels).
    """

    t: int
    d: int
    root: TreeNode | None


@dataclass(frozen=True)
class IncForest:
    """Ordered tuple of increasing trees over disjoint label sets."""

    trees: tuple[IncTree, ...]

    def __post_init__(self):
        object.__setattr__(self, "trees", tuple(self.trees))

    @property
    def tvec(self) -> tuple[int, ...]:
        return tuple(tr.t for tr in self.trees)

    @property
    def n(self) -> int:
        return sum(len(tree_labels(tr)) for tr in self.trees)


def _split_at(letters, positions):
    """Cut a word at the given letter positions, dropping the cutters."""
    parts = []
    prev = -1
    for p in list(positions) + [len(letters)]:
        parts.append(letters[prev + 1 : p])
        prev = p
    return parts


def perm_to_tree(w: GenStirlingWord) -> IncTree:
    """Factorize a valid word on least letters into its increasing tree."""
    if not validate_word(w):
        raise ValueError("not a valid generalized Stirling permutation: %r" % (w,))
    nu = w.nu

    def build(seg) -> TreeNode:
        x = min(seg)
        pos = [i for i, y in enumerate(seg) if y == x]
        parts = _split_at(seg, pos)
        return TreeNode(x, tuple(build(part) if part else None for part in parts))

    letters = w.letters
    if w.t >= 1:
        zero_pos = [i for i, y in enumerate(letters) if y == 0]
        parts = _split_at(letters, zero_pos)
        root = TreeNode(0, tuple(build(part) if part else None for part in parts))
    elif letters:
        root = build(letters)
    else:
        root = None
    return IncTree(w.t, nu + 1, root)


def tree_to_perm(tree: IncTree) -> GenStirlingWord:
    """Depth-first reading of a tree; exact inverse of perm_to_tree."""

    def emit(node: TreeNode) -> list[int]:
        out: list[int] = []
        last = len(node.slots) - 1
        for idx, child in enumerate(node.slots):
            if child is not None:
                out.extend(emit(child))
            if idx < last:
                out.append(node.label)
        return out

    letters = tuple(emit(tree.root)) if tree.root is not None else ()
    return GenStirlingWord(letters, tree.d - 1, tree.t)


def seq_to_forest(seq: GenStirlingSeq) -> IncForest:
    return IncForest(tuple(perm_to_tree(e) for e in seq.entries))


def forest_to_seq(forest: IncForest) -> GenStirlingSeq:
    return GenStirlingSeq(tuple(tree_to_perm(tr) for tr in forest.trees))


def _walk(node: TreeNode):
    yield node
    for child in node.slots:
        if child is not None:
            yield from _walk(child)


def tree_labels(tree: IncTree) -> tuple[int, ...]:
    """Sorted labels of the tree (the 0-root, when present, is not a label)."""
    if tree.root is None:
        return ()
    labels = [node.label for node in _walk(tree.root) if node.label != 0]
    return tuple(sorted(labels))


def leftmost_internal_set(tree: IncTree) -> frozenset[int]:
    """Labels of internal non-root nodes occupying slot 1 of their parent."""
    found: set[int] = set()
    if tree.root is None:
        return frozenset()
    for node in _walk(tree.root):
        first = node.slots[0]
        if first is not None:
            found.add(first.label)
    return frozenset(found)


def distinguished_set(tree: IncTree) -> frozenset[int]:
    """The distinguished pool: E(T), plus the root label when t = 0."""
    if tree.root is None:
        return frozenset()
    base = leftmost_internal_set(tree)
    if tree.t == 0:
        return base | {tree.root.label}
    return base


def forest_distinguished_set(forest: IncForest) -> frozenset[int]:
    out: frozenset[int] = frozenset()
    for tr in forest.trees:
        out = out | distinguished_set(tr)
    return out


def marked_statistic_check(seq: GenStirlingSeq) -> bool:
    """|D(F)| must equal n minus the total ascent count of the sequence."""
    forest = seq_to_forest(seq)
    return len(forest_distinguished_set(forest)) == seq.n - seq_ascent_count(seq)


def ward_marked_row(p: Params, n: int) -> list[int]:
    """Row n of the order-nu (s,t)-Ward triangle, counted through marked forests.

    Enumerates the order-(nu+1) word model (the Ward order sits one below
    the Eulerian order of the words it marks), maps every sequence to its
    forest, and counts the (n-k)-subsets of each distinguished pool.  No
    recurrence involved, which is the point: this is the independent
    combinatorial route the Ward recurrence is checked against.
    """
    if p.s < 1:
        raise ValueError("the forest model needs s >= 1")
    word_params = Params(p.nu + 1, p.s, p.t, p.tvec)
    row = [0] * (n + 1)
    for seq in enumerate_sequences(word_params, n):
        dsize = len(forest_distinguished_set(seq_to_forest(seq)))
        for k in range(n + 1):
            c = binomial(dsize, n - k)
            if c:
                row[k] += c
    return row


def ward_marked_count(p: Params, n: int, k: int) -> int:
    """The single entry W(n, k) of ward_marked_row."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return ward_marked_row(p, n)[k]


def tree_stats(tree: IncTree) -> tuple[int, int, int]:
    """(internal non-root nodes, edges, external slots) of a tree.

    Every slot is one edge, to an internal child or to an external leaf, so
    a tree with m internal non-root nodes and root arity d0 must show
    d m + d0 edges and (d-1) m + d0 externals.
    """
    if tree.root is None:
        return (0, 0, 0)
    nodes = 0
    slots = 0
    externals = 0
    for node in _walk(tree.root):
        nodes += 1
        slots += len(node.slots)
        externals += sum(1 for c in node.slots if c is None)
    return (nodes - 1, slots, externals)


def validate_tree(tree: IncTree) -> bool:
    """Audit arities, label growth along paths, and the edge/leaf counts."""
    if tree.d < 2:
        return False
    if tree.root is None:
        return tree.t == 0
    root_arity = tree.t + 1 if tree.t >= 1 else tree.d
    if len(tree.root.slots) != root_arity:
        return False
    if tree.t >= 1 and tree.root.label != 0:
        return False
    if tree.t == 0 and tree.root.label <= 0:
        return False

    def grows(node: TreeNode) -> bool:
        for child in node.slots:
            if child is None:
                continue
            if len(child.slots) != tree.d:
                return False
            if child.label <= node.label:
                return False
            if not grows(child):
                return False
        return True

    if not grows(tree.root):
        return False
    labels = tree_labels(tree)
    if tree.t == 0 and labels and tree.root.label != labels[0]:
        return False
    m, edges, externals = tree_stats(tree)
    return edges == tree.d * m + root_arity and externals == (tree.d - 1) * m + root_arity


def _node_to_json(node: TreeNode | None):
    if node is None:
        return None
    return {"label": node.label, "slots": [_node_to_json(c) for c in node.slots]}


def tree_to_json(tree: IncTree) -> dict:
    """Nested dict form: {'t', 'd', 'root'}, external slots as null."""
    return {"t": tree.t, "d": tree.d, "root": _node_to_json(tree.root)}


def forest_to_json(forest: IncForest) -> list[dict]:
    return [tree_to_json(tr) for tr in forest.trees]


def _emit_dot(node: TreeNode, prefix: str, counter: list[int], lines: list[str]) -> str:
    my_id = "%sn%d" % (prefix, counter[0])
    counter[0] += 1
    lines.append('  %s [label="%d"];' % (my_id, node.label))
    for idx, child in enumerate(node.slots):
        if child is None:
            ext_id = "%se%d" % (prefix, counter[1])
            counter[1] += 1
            lines.append("  %s [shape=point];" % (ext_id,))
            lines.append('  %s -> %s [label="%d"];' % (my_id, ext_id, idx + 1))
        else:
            child_id = _emit_dot(child, prefix, counter, lines)
            lines.append('  %s -> %s [label="%d"];' % (my_id, child_id, idx + 1))
    return my_id


def tree_to_dot(tree: IncTree, name: str = "tree") -> str:
    """GraphViz text; slot order is preserved as 1-based edge labels."""
    lines = ["digraph %s {" % (name,), "  ordering=out;"]
    if tree.root is not None:
        _emit_dot(tree.root, "", [0, 0], lines)
    lines.append("}")
    return "\n".join(lines)


def forest_to_dot(forest: IncForest, name: str = "forest") -> str:
    lines = ["digraph %s {" % (name,), "  ordering=out;"]
    for i, tr in enumerate(forest.trees):
        lines.append("  subgraph cluster_%d {" % (i,))
        lines.append('    label="tree %d (t=%d)";' % (i + 1, tr.t))
        if tr.root is not None:
            sub: list[str] = []
            _emit_dot(tr.root, "t%d_" % (i,), [0, 0], sub)
            lines.extend("  " + l for l in sub)
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines)
