"""Convexity number of extended P4-laden graphs in polynomial time.

The number is assembled from a decomposition tree. Connected components are
combined with the union formula; a component is a base graph, a join, or a
pseudo-split graph / quasi-spider, each with a closed form in terms of sizes
and independence numbers of subtrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .decomposition import (
    C5,
    CO_P5,
    EMPTY,
    JOIN,
    P5,
    PSEUDO_SPLIT,
    QUASI_SPIDER,
    UNION,
    VERTEX,
    DecompositionTree,
    NotExtendedP4Laden,
    check_partition,
    decompose,
)
from .convexity import interval_mask
from .graph import Graph, to_mask


@dataclass(frozen=True)
class ConvexityNumber:
    value: int
    witness: frozenset[int]
    tree: DecompositionTree


# -- independence number -----------------------------------------------------

def _matching_mis(vertices, adjacent) -> set[int]:
    """Maximum independent set of a graph whose components have at most 2 vertices."""
    out: set[int] = set()
    for v in sorted(vertices):
        if not any(adjacent(v, u) for u in out):
            out.add(v)
    return out


def _split_side_mis(node: DecompositionTree, r_set: frozenset[int]) -> frozenset[int]:
    """Best independent set of a quasi-spider node given a maximum independent set of ``R``.

    Any independent set either avoids the clique side (then it is an independent
    subset of the near-independent side plus one of ``R``) or contains one or two
    clique-side vertices and nothing from ``R``.
    """
    edges = node.local_edges

    def adjacent(a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in edges

    s_side = node.s_side()
    c_side = sorted(node.c_side())
    best = _matching_mis(s_side, adjacent) | r_set
    choices = [(c,) for c in c_side] + [
        pair for pair in combinations(c_side, 2) if not adjacent(*pair)
    ]
    for K in choices:
        rest = [s for s in s_side if not any(adjacent(s, k) for k in K)]
        cand = _matching_mis(rest, adjacent) | set(K)
        if len(cand) > len(best):
            best = cand
    return frozenset(best)


def max_independent_set(tree: DecompositionTree) -> frozenset[int]:
    kind = tree.kind
    if kind == EMPTY:
        return frozenset()
    if kind == VERTEX:
        return tree.vertices
    if kind == C5:
        return frozenset(tree.order[0:3:2])
    if kind == P5:
        return frozenset(tree.order[0::2])
    if kind == CO_P5:
        # independent sets of the complement of a path are its edges
        return frozenset(tree.order[:2])
    if kind == UNION:
        return frozenset().union(*(max_independent_set(c) for c in tree.children))
    if kind == JOIN:
        return max((max_independent_set(c) for c in tree.children), key=len)
    if kind in (PSEUDO_SPLIT, QUASI_SPIDER):
        r_set = max_independent_set(tree.children[0]) if tree.children else frozenset()
        if kind == PSEUDO_SPLIT:
            return tree.partition.S | r_set
        return _split_side_mis(tree, r_set)
    raise ValueError(f"malformed decomposition tree: unknown node kind {kind!r}")


def alpha_ext_p4_laden(tree: DecompositionTree) -> int:
    return len(max_independent_set(tree))


# -- closed forms ------------------------------------------------------------

def con_union(n1: int, n2: int, con1: int, con2: int) -> int:
    return max(n1 + con2, con1 + n2)


def con_join(n1: int, n2: int, alpha1: int, alpha2: int, c1: int, c2: int) -> int:
    """Convexity number of ``G1 ∨ G2``; ``c_i`` is the smallest component size of ``G_i``."""
    if n1 < 1 or n2 < 1:
        raise ValueError("both sides of a join need at least one vertex")
    if n1 == 1:
        return max(alpha2, n2 - c2 + 1)
    if n2 == 1:
        return max(alpha1, n1 - c1 + 1)
    return max(alpha1, alpha2)


def _split_s_size(node: DecompositionTree) -> int:
    q = node.quasi
    if q is not None and q.role == "S" and q.replacement == "co-K2":
        # doubling an S vertex into a non-edge is itself pseudo-split with the larger S
        return len(node.s_side())
    return len(node.partition.S)


def con_pseudo_split(G: Graph, node: DecompositionTree, alpha_R: int) -> int:
    """Convexity number of a connected pseudo-split graph or quasi-spider node."""
    if node.kind not in (PSEUDO_SPLIT, QUASI_SPIDER) or node.partition is None:
        raise ValueError("con_pseudo_split needs a pseudo-split or quasi-spider node")
    part = node.partition
    if node.quasi is None and not check_partition(
        G, to_mask(part.S), to_mask(part.C), to_mask(part.R)
    ):
        raise ValueError("partition violates the pseudo-split conditions")
    X = to_mask(node.vertices)
    delta = min((G.nbr_mask(v) & X).bit_count() for v in node.vertices)
    if delta == 0:
        raise ValueError("pseudo-split formula needs a connected graph")
    if delta == 1:
        return node.size - 1
    return alpha_R + _split_s_size(node)


# -- per-component evaluation ------------------------------------------------

def _smallest_component(tree: DecompositionTree) -> frozenset[int]:
    if tree.kind == UNION:
        return min((c.vertices for c in tree.children), key=lambda vs: (len(vs), sorted(vs)))
    return tree.vertices


def _base_leaf_witness(G: Graph, tree: DecompositionTree) -> frozenset[int]:
    """Largest proper convex subset of a five-vertex base component, by enumeration."""
    verts = sorted(tree.vertices)
    for k in range(len(verts) - 1, -1, -1):
        for combo in combinations(verts, k):
            mask = to_mask(combo)
            if interval_mask(G, mask) == mask:
                return frozenset(combo)
    return frozenset()


_BASE_CON = {C5: 3, CO_P5: 3, P5: 4}


def _join_con(tree: DecompositionTree) -> tuple[int, frozenset[int]]:
    first, rest = tree.children[0], tree.children[1:]
    n1, n2 = first.size, sum(c.size for c in rest)
    mis1 = max_independent_set(first)
    mis2 = max((max_independent_set(c) for c in rest), key=len)
    c1 = len(_smallest_component(first))
    small2 = _smallest_component(rest[0]) if len(rest) == 1 else frozenset().union(*(c.vertices for c in rest))
    c2 = len(small2)
    value = con_join(n1, n2, len(mis1), len(mis2), c1, c2)
    if n1 == 1:
        witness = mis2 if len(mis2) >= n2 - c2 + 1 else tree.vertices - small2
    elif n2 == 1:
        small1 = _smallest_component(first)
        witness = mis1 if len(mis1) >= n1 - c1 + 1 else tree.vertices - small1
    else:
        witness = mis1 if len(mis1) >= len(mis2) else mis2
    return value, witness


def _component_con(G: Graph, tree: DecompositionTree) -> tuple[int, frozenset[int]]:
    kind = tree.kind
    if kind in (EMPTY, VERTEX):
        return 0, frozenset()
    if kind in (C5, P5, CO_P5):
        witness = _base_leaf_witness(G, tree)
        assert len(witness) == _BASE_CON[kind]
        return _BASE_CON[kind], witness
    if kind == JOIN:
        return _join_con(tree)
    if kind in (PSEUDO_SPLIT, QUASI_SPIDER):
        r_set = max_independent_set(tree.children[0]) if tree.children else frozenset()
        value = con_pseudo_split(G, tree, len(r_set))
        if value == tree.size - 1:
            X = to_mask(tree.vertices)
            leaf = min(v for v in tree.vertices if (G.nbr_mask(v) & X).bit_count() == 1)
            return value, tree.vertices - {leaf}
        q = tree.quasi
        s_part = tree.s_side() if q is not None and (q.role, q.replacement) == ("S", "co-K2") else tree.partition.S
        return value, s_part | r_set
    raise ValueError(f"component node of kind {kind!r} is not connected")


def convexity_number(G: Graph) -> ConvexityNumber:
    """Convexity number with a witnessing convex set, via the decomposition tree."""
    tree = decompose(G)
    if tree is None:
        raise NotExtendedP4Laden("graph is not extended P4-laden")
    components = tree.children if tree.kind == UNION else (tree,)
    best = None
    for comp in sorted(components, key=lambda c: sorted(c.vertices)):
        value, witness = _component_con(G, comp)
        total = G.n - comp.size + value
        if best is None or total > best[0]:
            best = (total, frozenset(range(G.n)) - comp.vertices | witness)
    return ConvexityNumber(best[0], best[1], tree)


def con_ext_p4_laden(G: Graph) -> int:
    return convexity_number(G).value
