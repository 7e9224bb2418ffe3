"""Leaf-labeled trees: enumeration, quartets, planarity and compatibility.

Trees are stored by their split systems: each internal edge induces a leaf
bipartition, kept canonically as the side not containing the first leaf.
A trivalent tree on n leaves has exactly n-3 splits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional


class DegenerateSupportError(ValueError):
    """Compatibility is undefined for fully collinear quadruples."""


@dataclass(frozen=True)
class LabeledTree:
    leaves: tuple
    splits: frozenset  # frozensets of leaf labels, canonical sides

    @staticmethod
    def make(leaves, sides) -> "LabeledTree":
        leaves = tuple(leaves)
        root = leaves[0]
        full = set(leaves)
        canon = set()
        for side in sides:
            side = frozenset(side)
            if not side < full:
                raise ValueError(f"split {set(side)} is not a proper leaf subset")
            if root in side:
                side = frozenset(full - side)
            if not 2 <= len(side) <= len(leaves) - 2:
                raise ValueError("trivial split")
            canon.add(side)
        for a, b in itertools.combinations(canon, 2):
            if not (a <= b or b <= a or not (a & b)):
                raise ValueError(f"incompatible splits {set(a)} / {set(b)}")
        return LabeledTree(leaves, frozenset(canon))

    @property
    def is_trivalent(self) -> bool:
        return len(self.splits) == len(self.leaves) - 3

    def min_side_sizes(self) -> tuple:
        n = len(self.leaves)
        return tuple(sorted(min(len(s), n - len(s)) for s in self.splits))

    def quartet(self, four) -> Optional[frozenset]:
        """Induced pairing on a 4-subset: frozenset of two 2-subsets, or None."""
        four = frozenset(four)
        for side in self.splits:
            inter = side & four
            if len(inter) == 2:
                return frozenset({frozenset(inter), frozenset(four - inter)})
        return None

    def shape6(self) -> str:
        """caterpillar / snowflake / non_trivalent, for six-leaf trees."""
        if len(self.leaves) != 6:
            raise ValueError("shape classification is defined for six leaves")
        if not self.is_trivalent:
            return "non_trivalent"
        # A snowflake's three internal edges all separate cherries (2|4);
        # equivalently no internal vertex touches a leaf edge on both sides.
        return "snowflake" if 3 not in self.min_side_sizes() else "caterpillar"

    def sorted_splits(self) -> list:
        return sorted(tuple(sorted(s)) for s in self.splits)


def enumerate_trees(labels) -> list:
    """All trivalent trees on the given labeled leaves ((2n-5)!! of them)."""
    labels = tuple(labels)
    n = len(labels)
    if n < 3:
        raise ValueError("need at least three leaves")
    trees = [(((0, labels[0]), (0, labels[1]), (0, labels[2])), 1)]
    for leaf in labels[3:]:
        grown = []
        for edges, n_int in trees:
            for idx in range(len(edges)):
                u, v = edges[idx]
                w = n_int
                new_edges = edges[:idx] + edges[idx + 1 :] + ((u, w), (w, v), (w, leaf))
                grown.append((new_edges, n_int + 1))
        trees = grown
    return [_tree_from_edges(labels, edges) for edges, _ in trees]


def _tree_from_edges(labels, edges) -> LabeledTree:
    adjacency: dict = {}
    for u, v in edges:
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)
    sides = []
    label_set = set(labels)
    for u, v in edges:
        if u in label_set or v in label_set:
            continue  # leaf edge, trivial split
        # leaves reachable from u without crossing (u, v)
        seen = {u, v}
        stack = [u]
        side = set()
        while stack:
            node = stack.pop()
            for nxt in adjacency[node]:
                if nxt in seen:
                    continue
                seen.add(nxt)
                if nxt in label_set:
                    side.add(nxt)
                else:
                    stack.append(nxt)
        sides.append(side)
    return LabeledTree.make(labels, sides)


def tree_from_quartets(labels, quartets) -> LabeledTree:
    """Assemble a tree from resolved quartets.

    quartets maps each 4-subset (frozenset) to a pairing (frozenset of two
    2-subsets) or None for an unresolved quartet.  A candidate bipartition
    is a tree split iff every quartet straddling it 2|2 resolves accordingly.
    """
    labels = tuple(labels)
    rest = labels[1:]
    sides = []
    for size in range(2, len(labels) - 1):
        for combo in itertools.combinations(rest, size):
            side = frozenset(combo)
            other = [l for l in labels if l not in side]
            ok = True
            for pair_in in itertools.combinations(side, 2):
                for pair_out in itertools.combinations(other, 2):
                    four = frozenset(pair_in) | frozenset(pair_out)
                    want = frozenset({frozenset(pair_in), frozenset(pair_out)})
                    if quartets.get(four) != want:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                sides.append(side)
    return LabeledTree.make(labels, sides)


def is_planar_realizable(tree: LabeledTree, cyclic_order) -> bool:
    """Planar embedding with leaves on a circle in the given cyclic order.

    Holds iff every split is an arc of the cyclic order.
    """
    if not tree.is_trivalent:
        raise ValueError("planarity test expects a trivalent tree")
    order = tuple(cyclic_order)
    if set(order) != set(tree.leaves):
        raise ValueError("cyclic order must use exactly the tree's leaves")
    pos = {label: i for i, label in enumerate(order)}
    n = len(order)
    for side in tree.splits:
        idxs = {pos[l] for l in side}
        jumps = sum(1 for i in idxs if (i + 1) % n not in idxs)
        if jumps != 1:
            return False
    return True


def is_compatible(tree: LabeledTree, positions) -> bool:
    """Convex-position compatibility of a trivalent tree with a support.

    For every induced quartet split (ij|kl), the convex hull of the four
    support points must have conv(a_i,a_j) or conv(a_k,a_l) as an edge.  For
    supports with collinear boundary points the edge test is: the other two
    points lie in one closed half-plane and not inside the segment.
    """
    if not tree.is_trivalent:
        raise ValueError("compatibility test expects a trivalent tree")
    for four in itertools.combinations(tree.leaves, 4):
        pts = [tuple(positions[l]) for l in four]
        if _affinely_collinear(pts):
            raise DegenerateSupportError(f"quartet {four} is collinear in the support")
        pairing = tree.quartet(four)
        assert pairing is not None
        pair_a, pair_b = tuple(pairing)
        a = [positions[l] for l in sorted(pair_a)]
        b = [positions[l] for l in sorted(pair_b)]
        if not (_segment_is_hull_edge(a[0], a[1], b) or _segment_is_hull_edge(b[0], b[1], a)):
            return False
    return True


def _affinely_collinear(pts) -> bool:
    (x0, y0) = pts[0]
    vs = [(x - x0, y - y0) for x, y in pts[1:]]
    for v, w in itertools.combinations(vs, 2):
        if v[0] * w[1] - v[1] * w[0] != 0:
            return False
    return True


def _segment_is_hull_edge(p, q, others) -> bool:
    ux, uy = q[0] - p[0], q[1] - p[1]
    signs = []
    for r in others:
        c = ux * (r[1] - p[1]) - uy * (r[0] - p[0])
        if c == 0 and _inside_segment(r, p, q):
            return False
        signs.append(c)
    return not any(s > 0 for s in signs) or not any(s < 0 for s in signs)


def _inside_segment(r, p, q) -> bool:
    dot = (r[0] - p[0]) * (q[0] - p[0]) + (r[1] - p[1]) * (q[1] - p[1])
    if dot <= 0:
        return False
    return dot < (q[0] - p[0]) ** 2 + (q[1] - p[1]) ** 2
