"""Structural decomposition of extended P4-laden graphs.

A graph is extended P4-laden iff it has at most one vertex, is C5, P5 or the
complement of P5, is a union or join of extended P4-laden graphs, or is a
pseudo-split graph / quasi-spider whose part ``R`` is extended P4-laden.
:func:`decompose` walks that case list top-down and returns ``None`` when no
case applies.

Partition search relies on a degree fact: in an ``(S, C, R)`` pseudo-split
graph every vertex of ``S`` has degree at most ``|C| - 1`` and every other
vertex has degree at least ``|C|``. So ``S`` is a lower degree class,
``C = N(S)``, and trying each degree threshold enumerates every partition.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from itertools import combinations, product
from typing import Iterator

from .graph import Graph, components_mask, from_mask, iter_bits, to_mask

EMPTY = "empty"
VERTEX = "vertex"
C5 = "C5"
P5 = "P5"
CO_P5 = "co-P5"
UNION = "union"
JOIN = "join"
PSEUDO_SPLIT = "pseudo-split"
QUASI_SPIDER = "quasi-spider"

LEAF_KINDS = (EMPTY, VERTEX, C5, P5, CO_P5)


class NotExtendedP4Laden(ValueError):
    pass


@dataclass(frozen=True)
class PseudoSplitPartition:
    S: frozenset[int]
    C: frozenset[int]
    R: frozenset[int]


@dataclass(frozen=True)
class SpiderKind:
    kind: str  # "thin" or "thick"
    pairing: tuple[tuple[int, int], ...]  # (c, f(c)) sorted by c


@dataclass(frozen=True)
class QuasiSpiderInfo:
    base: SpiderKind
    partition: PseudoSplitPartition  # partition of the spider before replacement
    role: str  # "S" or "C": part of the replaced vertex
    replacement: str  # "K2" or "co-K2"
    pair: tuple[int, int]  # (v, v'): v sits in the partition, v' is its twin


@dataclass(frozen=True)
class DecompositionTree:
    kind: str
    vertices: frozenset[int]
    children: tuple[DecompositionTree, ...] = ()
    order: tuple[int, ...] = ()
    partition: PseudoSplitPartition | None = None
    spider: SpiderKind | None = None
    quasi: QuasiSpiderInfo | None = None
    local_edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def s_side(self) -> frozenset[int]:
        """``S`` plus the twin vertex when an ``S`` vertex was replaced."""
        part = self.partition
        if self.quasi is not None and self.quasi.role == "S":
            return part.S | {self.quasi.pair[1]}
        return part.S

    def c_side(self) -> frozenset[int]:
        part = self.partition
        if self.quasi is not None and self.quasi.role == "C":
            return part.C | {self.quasi.pair[1]}
        return part.C

    def walk(self) -> Iterator[DecompositionTree]:
        yield self
        for child in self.children:
            yield from child.walk()


# -- small fixed graphs ------------------------------------------------------

def _edges_within(G: Graph, X: int) -> list[tuple[int, int]]:
    masks = G.nbr_masks
    return [(u, v) for u in iter_bits(X) for v in iter_bits(masks[u] & X) if u < v]


def _path_order(G: Graph, X: int, masks) -> tuple[int, ...] | None:
    """Vertex order if ``G[X]`` (given by ``masks``) is a path on all of ``X``."""
    degs = {v: (masks[v] & X).bit_count() for v in iter_bits(X)}
    ends = sorted(v for v, d in degs.items() if d == 1)
    if len(ends) != 2 or any(d not in (1, 2) for d in degs.values()):
        return None
    order = [ends[0]]
    prev = -1
    while len(order) < X.bit_count():
        nxt = [w for w in iter_bits(masks[order[-1]] & X) if w != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    if order[-1] != ends[1]:
        return None
    return tuple(order)


def _five_vertex_leaf(G: Graph, X: int) -> tuple[str, tuple[int, ...]] | None:
    masks = G.nbr_masks
    degs = [(masks[v] & X).bit_count() for v in iter_bits(X)]
    m = sum(degs) // 2
    if m == 5 and all(d == 2 for d in degs):
        start = (X & -X).bit_length() - 1
        order = [start]
        prev = -1
        while len(order) < 5:
            nxt = min(w for w in iter_bits(masks[order[-1]] & X) if w != prev)
            prev = order[-1]
            order.append(nxt)
            if nxt == start:
                return None
        if (masks[order[-1]] >> start) & 1:
            return C5, tuple(order)
        return None
    if m == 4:
        order = _path_order(G, X, masks)
        if order is not None:
            return P5, order
    if m == 6:
        comp = {v: X & ~masks[v] & ~(1 << v) for v in iter_bits(X)}
        order = _path_order(G, X, comp)
        if order is not None:
            return CO_P5, order
    return None


def leaf_edges(kind: str, order: tuple[int, ...]) -> set[tuple[int, int]]:
    if kind == C5:
        return {tuple(sorted((order[i], order[(i + 1) % 5]))) for i in range(5)}
    path = {tuple(sorted((order[i], order[i + 1]))) for i in range(len(order) - 1)}
    if kind == P5:
        return path
    if kind == CO_P5:
        return {(u, v) for u, v in combinations(sorted(order), 2)} - path
    return set()


# -- partitions --------------------------------------------------------------

def check_partition(G: Graph, S: int, C: int, R: int) -> bool:
    """Literal check of the pseudo-split conditions for masks ``S``, ``C``, ``R``."""
    masks = G.nbr_masks
    if S.bit_count() < 2 or C.bit_count() < 2:
        return False
    if S & C or S & R or C & R:
        return False
    for s in iter_bits(S):
        nb = masks[s]
        if nb & S or nb & R:
            return False
        if nb & C == C:
            return False
    for c in iter_bits(C):
        nb = masks[c]
        if (nb | (1 << c)) & C != C:
            return False
        if nb & R != R:
            return False
        if not nb & S:
            return False
    return True


def pseudo_split_partitions(G: Graph, X: int) -> Iterator[PseudoSplitPartition]:
    """Every ``(S, C, R)`` pseudo-split partition of ``G[X]``, by increasing ``|S|``."""
    masks = G.nbr_masks
    deg = {v: (masks[v] & X).bit_count() for v in iter_bits(X)}
    for d in sorted(set(deg.values())):
        S = to_mask(v for v, dv in deg.items() if dv <= d)
        C = 0
        for s in iter_bits(S):
            C |= masks[s]
        C &= X
        if C & S:
            continue
        R = X & ~S & ~C
        if check_partition(G, S, C, R):
            yield PseudoSplitPartition(from_mask(S), from_mask(C), from_mask(R))


def spider_kind(G: Graph, part: PseudoSplitPartition) -> SpiderKind | None:
    if len(part.S) != len(part.C):
        return None
    S = to_mask(part.S)
    masks = G.nbr_masks
    for kind in ("thin", "thick"):
        pairing = []
        for c in sorted(part.C):
            hit = masks[c] & S if kind == "thin" else S & ~masks[c]
            if hit.bit_count() != 1:
                break
            pairing.append((c, hit.bit_length() - 1))
        else:
            if len({s for _, s in pairing}) == len(pairing):
                return SpiderKind(kind, tuple(pairing))
    return None


def _twin_pairs(G: Graph, X: int) -> Iterator[tuple[int, int, bool]]:
    """Pairs ``(a, b, adjacent)`` with ``a < b`` and equal neighbourhoods in ``G[X]``."""
    masks = G.nbr_masks
    open_classes: dict[int, list[int]] = {}
    closed_classes: dict[int, list[int]] = {}
    for v in iter_bits(X):
        open_classes.setdefault(masks[v] & X, []).append(v)
        closed_classes.setdefault((masks[v] | (1 << v)) & X, []).append(v)
    pairs = []
    for group in closed_classes.values():
        pairs.extend((a, b, True) for a, b in combinations(group, 2))
    for group in open_classes.values():
        pairs.extend((a, b, False) for a, b in combinations(group, 2))
    yield from sorted(pairs)


def find_quasi_spider(G: Graph, X: int) -> QuasiSpiderInfo | None:
    """A quasi-spider structure of ``G[X]`` that is not itself pseudo-split.

    Those are the spiders with an ``S`` vertex doubled into a ``K2`` or a ``C``
    vertex doubled into a ``co-K2``. The other two replacements give
    pseudo-split graphs and are found by :func:`pseudo_split_partitions`.
    """
    for a, b, adjacent in _twin_pairs(G, X):
        Y = X & ~(1 << b)
        for part in pseudo_split_partitions(G, Y):
            base = spider_kind(G, part)
            if base is None:
                continue
            if adjacent and a in part.S:
                return QuasiSpiderInfo(base, part, "S", "K2", (a, b))
            if not adjacent and a in part.C:
                return QuasiSpiderInfo(base, part, "C", "co-K2", (a, b))
    return None


def find_pseudo_split_partition(
    G: Graph, X: int | None = None
) -> tuple[PseudoSplitPartition, SpiderKind | None, QuasiSpiderInfo | None] | None:
    """First pseudo-split partition (with spider kind), else a quasi-spider, else ``None``."""
    if X is None:
        X = G.full_mask
    for part in pseudo_split_partitions(G, X):
        return part, spider_kind(G, part), None
    quasi = find_quasi_spider(G, X)
    if quasi is not None:
        return quasi.partition, quasi.base, quasi
    return None


# -- decomposition -----------------------------------------------------------

def _co_components(G: Graph, X: int) -> list[int]:
    masks = G.nbr_masks
    comps = []
    rest = X
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= X & ~masks[v] & ~(1 << v)
            frontier = grow & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def _decompose(G: Graph, X: int) -> DecompositionTree | None:
    size = X.bit_count()
    verts = from_mask(X)
    if size == 0:
        return DecompositionTree(EMPTY, verts)
    if size == 1:
        return DecompositionTree(VERTEX, verts)
    if size == 5:
        leaf = _five_vertex_leaf(G, X)
        if leaf is not None:
            return DecompositionTree(leaf[0], verts, order=leaf[1])
    for kind, parts in ((UNION, components_mask(G, X)), (JOIN, _co_components(G, X))):
        if len(parts) > 1:
            children = []
            for part in parts:
                child = _decompose(G, part)
                if child is None:
                    return None
                children.append(child)
            return DecompositionTree(kind, verts, tuple(children))
    found = find_pseudo_split_partition(G, X)
    if found is None:
        return None
    part, spider, quasi = found
    R = to_mask(part.R)
    children = ()
    if R:
        child = _decompose(G, R)
        if child is None:
            return None
        children = (child,)
    local = X & ~R
    kind = PSEUDO_SPLIT if quasi is None else QUASI_SPIDER
    return DecompositionTree(
        kind, verts, children, partition=part, spider=spider, quasi=quasi,
        local_edges=frozenset(_edges_within(G, local)),
    )


def decompose(G: Graph) -> DecompositionTree | None:
    """Decomposition tree of ``G``, or ``None`` if ``G`` is not extended P4-laden."""
    return _decompose(G, G.full_mask)


def materialize_edges(tree: DecompositionTree) -> set[tuple[int, int]]:
    """Rebuild the edge set described by a decomposition tree."""
    edges: set[tuple[int, int]] = set()
    for child in tree.children:
        edges |= materialize_edges(child)
    if tree.kind in (C5, P5, CO_P5):
        edges |= leaf_edges(tree.kind, tree.order)
    elif tree.kind == JOIN:
        for a, b in combinations(tree.children, 2):
            edges |= {tuple(sorted((u, v))) for u in a.vertices for v in b.vertices}
    elif tree.kind in (PSEUDO_SPLIT, QUASI_SPIDER):
        edges |= set(tree.local_edges)
        edges |= {tuple(sorted((c, r))) for c in tree.c_side() for r in tree.partition.R}
    return edges


def validate_tree(G: Graph, tree: DecompositionTree) -> None:
    """Raise ``AssertionError`` unless ``tree`` is a correct decomposition of ``G``."""
    assert tree.vertices == frozenset(range(G.n)), "root must cover every vertex"
    assert materialize_edges(tree) == set(G.edges), "materialized edges differ from G"
    for node in tree.walk():
        X = to_mask(node.vertices)
        if node.kind == EMPTY:
            assert node.size == 0
        elif node.kind == VERTEX:
            assert node.size == 1
        elif node.kind in (C5, P5, CO_P5):
            assert _five_vertex_leaf(G, X) == (node.kind, node.order)
        elif node.kind in (UNION, JOIN):
            assert len(node.children) >= 2
            covered = frozenset().union(*(c.vertices for c in node.children))
            assert covered == node.vertices
            assert sum(c.size for c in node.children) == node.size
        else:
            part = node.partition
            assert node.children == () if not part.R else node.children[0].vertices == part.R
            if node.quasi is None:
                assert check_partition(G, to_mask(part.S), to_mask(part.C), to_mask(part.R))
            else:
                q = node.quasi
                v, twin = q.pair
                assert X == to_mask(part.S | part.C | part.R) | (1 << twin)
                assert check_partition(G, to_mask(part.S), to_mask(part.C), to_mask(part.R))
                assert spider_kind(G, part) == q.base
                masks = G.nbr_masks
                same = (masks[v] & ~(1 << twin) & X) == (masks[twin] & ~(1 << v) & X)
                assert same, "replacement vertices must be twins"
                assert G.has_edge(v, twin) == (q.replacement == "K2")


# -- literal membership test -------------------------------------------------

def _is_induced_p4(G: Graph, quad: tuple[int, ...]) -> bool:
    masks = G.nbr_masks
    X = to_mask(quad)
    degs = sorted((masks[v] & X).bit_count() for v in quad)
    return degs == [1, 1, 2, 2]


def is_pseudo_split_bruteforce(G: Graph, vertices) -> bool:
    """Try every assignment of ``vertices`` to ``S``, ``C`` or ``R``."""
    vertices = list(vertices)
    for labels in product(range(3), repeat=len(vertices)):
        parts = [0, 0, 0]
        for v, lab in zip(vertices, labels):
            parts[lab] |= 1 << v
        if check_partition(G, *parts):
            return True
    return False


def _has_induced_2k2_or_c4(G: Graph, vertices) -> bool:
    masks = G.nbr_masks
    for quad in combinations(vertices, 4):
        X = to_mask(quad)
        degs = [(masks[v] & X).bit_count() for v in quad]
        if degs == [1, 1, 1, 1] or degs == [2, 2, 2, 2]:
            return True
    return False


def is_extended_p4_laden_literal(G: Graph) -> bool:
    """Check the defining property on every induced subgraph of 5 or 6 vertices.

    A subgraph with more than two induced P4s must be pseudo-split in the
    classical sense, i.e. free of induced ``2K2`` and ``C4`` (this admits ``C5``).
    Exponential; meant for validating :func:`decompose` on small graphs.
    Subgraphs on 4 or fewer vertices hold at most one induced P4.
    """
    for k in (5, 6):
        for sub in combinations(range(G.n), k):
            count = 0
            for quad in combinations(sub, 4):
                if _is_induced_p4(G, quad):
                    count += 1
                    if count > 2:
                        break
            if count > 2 and _has_induced_2k2_or_c4(G, sub):
                return False
    return True


# -- random generator --------------------------------------------------------

def _relabel_tree(tree: DecompositionTree, perm: list[int]) -> DecompositionTree:
    def fs(xs):
        return frozenset(perm[x] for x in xs)

    def part(p):
        return None if p is None else PseudoSplitPartition(fs(p.S), fs(p.C), fs(p.R))

    def spider(sp):
        if sp is None:
            return None
        return SpiderKind(sp.kind, tuple(sorted((perm[c], perm[s]) for c, s in sp.pairing)))

    quasi = tree.quasi
    if quasi is not None:
        quasi = QuasiSpiderInfo(
            spider(quasi.base), part(quasi.partition), quasi.role, quasi.replacement,
            (perm[quasi.pair[0]], perm[quasi.pair[1]]),
        )
    return replace(
        tree,
        vertices=fs(tree.vertices),
        children=tuple(_relabel_tree(c, perm) for c in tree.children),
        order=tuple(perm[x] for x in tree.order),
        partition=part(tree.partition),
        spider=spider(tree.spider),
        quasi=quasi,
        local_edges=frozenset(tuple(sorted((perm[u], perm[v]))) for u, v in tree.local_edges),
    )


class _Builder:
    def __init__(self, rng: random.Random):
        self.rng = rng
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def fresh(self, k: int) -> list[int]:
        out = list(range(self.n, self.n + k))
        self.n += k
        return out

    def build(self, budget: int) -> DecompositionTree:
        rng = self.rng
        if budget == 1:
            return DecompositionTree(VERTEX, frozenset(self.fresh(1)))
        options = [(UNION, 2), (JOIN, 2)]
        if budget == 5:
            options.append(("leaf5", 4))
        if budget >= 4:
            options.append((PSEUDO_SPLIT, 3))
            options.append(("spider", 2))
        if budget >= 5:
            options.append((QUASI_SPIDER, 2))
        kinds, weights = zip(*options)
        kind = rng.choices(kinds, weights)[0]
        if kind in (UNION, JOIN):
            left = rng.randint(1, budget - 1)
            a = self.build(left)
            b = self.build(budget - left)
            if kind == JOIN:
                self.edges.extend((u, v) for u in a.vertices for v in b.vertices)
            return DecompositionTree(kind, a.vertices | b.vertices, (a, b))
        if kind == "leaf5":
            return self._leaf5()
        if kind == PSEUDO_SPLIT:
            return self._pseudo_split(budget)
        if kind == "spider":
            k = rng.randint(2, budget // 2)
            return self._spider(k, budget - 2 * k, None)
        k = rng.randint(2, (budget - 1) // 2)
        return self._spider(k, budget - 2 * k - 1, rng.choice(["S-K2", "S-co-K2", "C-K2", "C-co-K2"]))

    def _leaf5(self) -> DecompositionTree:
        order = tuple(self.fresh(5))
        kind = self.rng.choice([C5, P5, CO_P5])
        self.edges.extend(leaf_edges(kind, order))
        return DecompositionTree(kind, frozenset(order), order=order)

    def _with_r(self, r: int, C: list[int]) -> tuple[tuple[DecompositionTree, ...], frozenset[int]]:
        if r == 0:
            return (), frozenset()
        sub = self.build(r)
        self.edges.extend((c, x) for c in C for x in sub.vertices)
        return (sub,), sub.vertices

    def _pseudo_split(self, budget: int) -> DecompositionTree:
        rng = self.rng
        s = rng.randint(2, budget - 2)
        c = rng.randint(2, budget - s)
        S = self.fresh(s)
        C = self.fresh(c)
        sc = None
        for _ in range(50):
            cand = {(x, y) for x in S for y in C if rng.random() < 0.5}
            if all(any((x, y) in cand for x in S) for y in C) and all(
                any((x, y) not in cand for y in C) for x in S
            ):
                sc = cand
                break
        if sc is None:
            sc = {(S[i % s], y) for i, y in enumerate(C)}
        local = [tuple(sorted(e)) for e in sc] + [(a, b) for a, b in combinations(C, 2)]
        self.edges.extend(local)
        children, R = self._with_r(budget - s - c, C)
        part = PseudoSplitPartition(frozenset(S), frozenset(C), R)
        verts = frozenset(S) | frozenset(C) | R
        return DecompositionTree(PSEUDO_SPLIT, verts, children, partition=part,
                                 local_edges=frozenset(local))

    def _spider(self, k: int, r: int, replacement: str | None) -> DecompositionTree:
        rng = self.rng
        S = self.fresh(k)
        C = self.fresh(k)
        thick = rng.random() < 0.5
        local = set(combinations(C, 2))
        for i, c in enumerate(C):
            for j, s in enumerate(S):
                if (i == j) != thick:
                    local.add((s, c))
        if thick and k == 2:
            # a 2-spider is thin and thick at once; report it as thin
            pairing = ((C[0], S[1]), (C[1], S[0]))
        else:
            pairing = tuple((c, S[i]) for i, c in enumerate(C))
        base_kind = SpiderKind("thick" if thick and k > 2 else "thin", tuple(sorted(pairing)))
        quasi = None
        c_side = list(C)
        extra_set: set[int] = set()
        if replacement is not None:
            role, rep = replacement.split("-", 1)
            base = rng.choice(S if role == "S" else C)
            extra = self.fresh(1)[0]
            extra_set = {extra}
            for u, v in list(local):
                if base in (u, v):
                    local.add((v if u == base else u, extra))
            if rep == "K2":
                local.add((base, extra))
            if role == "C":
                c_side.append(extra)
            quasi = (role, rep, (base, extra))
        local = {tuple(sorted(e)) for e in local}
        children, R = self._with_r(r, c_side)
        self.edges.extend(local)
        part = PseudoSplitPartition(frozenset(S), frozenset(C), R)
        verts = frozenset(S) | frozenset(C) | R | extra_set
        if quasi is None:
            return DecompositionTree(PSEUDO_SPLIT, verts, children, partition=part,
                                     spider=base_kind, local_edges=frozenset(local))
        info = QuasiSpiderInfo(base_kind, part, *quasi)
        return DecompositionTree(QUASI_SPIDER, verts, children, partition=part, spider=base_kind,
                                 quasi=info, local_edges=frozenset(local))


def generate_random_ext_p4_laden(seed: int, budget: int) -> tuple[Graph, DecompositionTree]:
    """Random extended P4-laden graph on exactly ``budget`` vertices.

    The returned tree is the construction tree; it materializes to the graph but
    its pseudo-split and quasi-spider nodes carry only ``local_edges``. Vertex
    ids are shuffled.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    rng = random.Random(seed)
    builder = _Builder(rng)
    tree = builder.build(budget)
    perm = list(range(builder.n))
    rng.shuffle(perm)
    G = Graph(builder.n, ((perm[u], perm[v]) for u, v in builder.edges))
    return G, _relabel_tree(tree, perm)


QUASI_VARIANTS = ("S-K2", "S-co-K2", "C-K2", "C-co-K2")


def generate_pseudo_split_instance(
    seed: int, budget: int, variant: str | None = None
) -> tuple[Graph, DecompositionTree]:
    """Random graph whose top node is pseudo-split, a spider or a quasi-spider.

    ``variant`` is ``None`` for a general pseudo-split graph, ``"spider"``, or one
    of :data:`QUASI_VARIANTS`. The graph need not be connected.
    """
    rng = random.Random(seed)
    builder = _Builder(rng)
    if variant is None:
        if budget < 4:
            raise ValueError("a pseudo-split graph needs at least 4 vertices")
        tree = builder._pseudo_split(budget)
    elif variant == "spider":
        if budget < 4:
            raise ValueError("a spider needs at least 4 vertices")
        k = rng.randint(2, budget // 2)
        tree = builder._spider(k, budget - 2 * k, None)
    elif variant in QUASI_VARIANTS:
        if budget < 5:
            raise ValueError("a quasi-spider needs at least 5 vertices")
        k = rng.randint(2, (budget - 1) // 2)
        tree = builder._spider(k, budget - 2 * k - 1, variant)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    perm = list(range(builder.n))
    rng.shuffle(perm)
    G = Graph(builder.n, ((perm[u], perm[v]) for u, v in builder.edges))
    return G, _relabel_tree(tree, perm)
