"""Percolation time: exact on cacti, and the decision ``pn(G) >= 2`` on any graph.

On a cactus the answer is read off the bipartite forest whose nodes are the
vertices and the cycles of the graph (a vertex is joined to every cycle through
it). For general graphs the ``k = 2`` decision looks for an edge ``vw`` lying on
a chordless cycle together with a second cycle through ``w`` that avoids ``v``
and meets at most one other neighbour of ``v``; such a pair yields a set whose
second interval layer is strictly larger than the first, which is then grown
into a hull set.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

from .convexity import hull_mask, interval_mask, layers_mask, time_mask
from .graph import (
    Graph,
    GraphError,
    check_vertices,
    components_blocks_bridges,
    cycle_through,
    from_mask,
    iter_bits,
    relabel,
    shortest_path_avoiding,
    to_mask,
)
from .oracles import PercolationResult


class NotACactus(ValueError):
    pass


# -- cactus recognition ------------------------------------------------------

def cactus_violation(G: Graph) -> tuple[int, int] | None:
    """An edge lying on two distinct cycles, or ``None`` when ``G`` is a cactus.

    A block that is neither a bridge nor a simple cycle has more edges than
    vertices, and every edge of such a block lies on at least two cycles.
    """
    for block in components_blocks_bridges(G).blocks:
        if len(block.vertices) >= 3 and len(block.edges) != len(block.vertices):
            return block.edges[0]
    return None


def is_cactus(G: Graph) -> bool:
    return cactus_violation(G) is None


def _cycle_order(block_vertices: frozenset[int], edges) -> tuple[int, ...]:
    nbrs: dict[int, list[int]] = {v: [] for v in block_vertices}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    start = min(block_vertices)
    order = [start]
    prev, cur = -1, start
    while True:
        a, b = nbrs[cur]
        nxt = a if a != prev else b
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


@dataclass(frozen=True)
class CycleIncidenceForest:
    """Bipartite forest over vertices ``0..n-1`` and cycle nodes ``n..n+c-1``."""

    n: int
    cycles: tuple[tuple[int, ...], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def n_cycles(self) -> int:
        return len(self.cycles)

    def is_cycle_node(self, node: int) -> bool:
        return node >= self.n

    def cycle_of(self, node: int) -> tuple[int, ...]:
        return self.cycles[node - self.n]


def cycle_incidence_forest(G: Graph) -> CycleIncidenceForest:
    bd = components_blocks_bridges(G)
    cycles = []
    for block in bd.blocks:
        if len(block.vertices) < 3:
            continue
        if len(block.edges) != len(block.vertices):
            raise NotACactus(f"edge {block.edges[0]} lies on more than one cycle")
        cycles.append(_cycle_order(block.vertices, block.edges))
    cycles.sort()
    assert len(cycles) == G.m - G.n + bd.n_components, "cycle count of a cactus is m - n + c"
    adj: list[list[int]] = [[] for _ in range(G.n + len(cycles))]
    for i, cyc in enumerate(cycles):
        node = G.n + i
        for v in sorted(cyc):
            adj[node].append(v)
            adj[v].append(node)
    return CycleIncidenceForest(G.n, tuple(cycles), tuple(tuple(a) for a in adj))


def _bfs_tree(forest: CycleIncidenceForest, root: int) -> tuple[dict[int, int], dict[int, int]]:
    """Distances and parents of a BFS from ``root``; ties resolved by node id."""
    dist = {root: 0}
    parent = {root: -1}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in forest.adjacency[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                parent[y] = x
                queue.append(y)
    return dist, parent


def _farthest(dist: dict[int, int]) -> int:
    return min(dist, key=lambda x: (-dist[x], x))


def _longest_paths(forest: CycleIncidenceForest) -> list[list[int]]:
    """One longest path per tree of the forest that contains a cycle node."""
    seen: set[int] = set()
    paths = []
    for c in range(forest.n, forest.n + forest.n_cycles):
        if c in seen:
            continue
        dist, _ = _bfs_tree(forest, c)
        seen.update(dist)
        # leaves of a tree containing a cycle are vertex nodes, so both sweeps end on vertices
        a = _farthest(dist)
        dist_a, parent = _bfs_tree(forest, a)
        b = _farthest(dist_a)
        path = [b]
        while path[-1] != a:
            path.append(parent[path[-1]])
        paths.append(path[::-1])
    return paths


def cactus_longest_cycle_path(G: Graph) -> int:
    """Length (in edges) of a longest induced path of the cycle-adjacency graph."""
    forest = cycle_incidence_forest(G)
    if forest.n_cycles == 0:
        raise ValueError("graph has no cycle")
    return max(len(p) // 2 for p in _longest_paths(forest)) - 1


def pn_cactus(G: Graph) -> PercolationResult:
    """Percolation time of a cactus together with a hull set attaining it.

    Each tree of the incidence forest is rooted at an end of a longest path. Every
    cycle leaves exactly one of its non-parent vertices out of the witness, and
    along the longest path the omitted vertex is the next path vertex. An omitted
    vertex enters one step after its parent vertex, so the last one enters after
    as many steps as there are cycles on the path.
    """
    forest = cycle_incidence_forest(G)
    if forest.n_cycles == 0:
        return PercolationResult(0, frozenset(G.vertices))
    omitted: set[int] = set()
    best = 0
    for path in _longest_paths(forest):
        best = max(best, len(path) // 2)
        _, parent = _bfs_tree(forest, path[0])
        on_path = {path[i]: path[i + 1] for i in range(1, len(path) - 1, 2)}
        for node, par in parent.items():
            if not forest.is_cycle_node(node):
                continue
            if node in on_path:
                omitted.add(on_path[node])
            else:
                omitted.add(min(v for v in forest.adjacency[node] if v != par))
    witness = frozenset(G.vertices) - omitted
    t = time_mask(G, to_mask(witness))
    assert t == best, "cactus witness must percolate in exactly pn steps"
    return PercolationResult(best, witness)


def random_cactus(seed: int, n: int, max_cycle: int = 6) -> Graph:
    """Random cactus on ``n`` vertices built by gluing cycles and pendant edges.

    Occasionally starts a new component, so forests and disconnected cacti occur.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    size = 1 if n else 0
    while size < n:
        room = n - size
        r = rng.random()
        if r < 0.08:
            size += 1
            continue
        anchor = rng.randrange(size)
        if r < 0.3 or room < 2:
            edges.append((anchor, size))
            size += 1
            continue
        length = rng.randint(3, min(max_cycle, room + 1))
        ring = [anchor] + list(range(size, size + length - 1))
        edges.extend((ring[i], ring[(i + 1) % length]) for i in range(length))
        size += length - 1
    perm = list(range(n))
    rng.shuffle(perm)
    return relabel(Graph(n, edges), perm)


# -- pn >= 2 on general graphs -----------------------------------------------

def _require_edge(G: Graph, v: int, w: int) -> None:
    check_vertices(G, (v, w))
    if not G.has_edge(v, w):
        raise GraphError(f"{v} and {w} are not adjacent")


def induced_cycle_through_edge(G: Graph, v: int, w: int) -> tuple[int, ...] | None:
    """A chordless cycle through the edge ``vw``, or ``None`` when ``vw`` is a bridge.

    A shortest ``v``-``w`` path avoiding the edge closes a cycle; a chord would
    give a shorter path.
    """
    _require_edge(G, v, w)
    path = shortest_path_avoiding(G, v, w, skip_edge=(v, w))
    return None if path is None else tuple(path)


def companion_cycle(G: Graph, v: int, w: int) -> tuple[tuple[int, ...], int | None] | None:
    """A cycle through ``w`` avoiding ``v`` that meets at most one other neighbour of ``v``.

    Returns the cycle (starting at ``w``) and the neighbour of ``v`` it is allowed
    to use, trying "no neighbour" first and then neighbours in increasing order.
    """
    _require_edge(G, v, w)
    others = G.nbr_mask(v) & ~(1 << w)
    base = G.full_mask & ~(1 << v)
    for a in [None, *iter_bits(others)]:
        banned = others if a is None else others & ~(1 << a)
        cyc = cycle_through(G, w, base & ~banned)
        if cyc is not None:
            return tuple(cyc), a
    return None


@dataclass(frozen=True)
class RStructure:
    v: int
    w: int
    A: tuple[int, ...]
    B: tuple[int, ...]
    allowed_neighbor: int | None = None

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.A) | frozenset(self.B)


def check_r_structure(G: Graph, rs: RStructure) -> None:
    """Raise ``ValueError`` unless ``rs`` meets every membership condition."""
    v, w = rs.v, rs.w
    _require_edge(G, v, w)

    def is_cycle(seq) -> bool:
        return (
            len(seq) >= 3
            and len(set(seq)) == len(seq)
            and all(G.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))
        )

    A = frozenset(rs.A)
    if not is_cycle(rs.A) or v not in A or w not in A:
        raise ValueError("A is not a cycle through the edge vw")
    if not {rs.A.index(v) - rs.A.index(w)} & {1, -1, len(rs.A) - 1, 1 - len(rs.A)}:
        raise ValueError("A does not use the edge vw")
    if sum((G.nbr_mask(x) & to_mask(A)).bit_count() for x in A) != 2 * len(A):
        raise ValueError("A has a chord")
    B = frozenset(rs.B)
    if not is_cycle(rs.B) or w not in B or v in B:
        raise ValueError("B is not a cycle through w avoiding v")
    if (G.nbr_mask(v) & to_mask(B - {w})).bit_count() > 1:
        raise ValueError("v has more than one neighbour in B - w")


def find_r_structure(G: Graph) -> RStructure | None:
    """First ordered adjacent pair ``(v, w)`` admitting the structure, if any."""
    for a, b in G.edges:
        for v, w in ((a, b), (b, a)):
            A = induced_cycle_through_edge(G, v, w)
            if A is None:
                break  # a bridge in one orientation is a bridge in both
            found = companion_cycle(G, v, w)
            if found is not None:
                return RStructure(v, w, A, found[0], found[1])
    return None


@dataclass(frozen=True)
class SeedSet:
    S: frozenset[int]
    v: int


def seed_set_from_structure(G: Graph, rs: RStructure) -> SeedSet:
    """A set ``S`` with ``v`` in its second interval layer but not its first."""
    check_r_structure(G, rs)
    v, w = rs.v, rs.w
    rest = frozenset(rs.B) - {w}
    if (G.nbr_mask(v) & to_mask(rest)).bit_count() == 1:
        S = rest
    else:
        S = rs.vertices - {v, w}
    mask = to_mask(S)
    one = interval_mask(G, mask)
    two = interval_mask(G, one)
    if (one >> v) & 1 or not (two >> v) & 1:
        raise AssertionError("seed set does not delay v to the second layer")
    return SeedSet(S, v)


def _second_layer_only(G: Graph, v: int, Q: int) -> bool:
    one = interval_mask(G, Q)
    return not (one >> v) & 1 and bool((interval_mask(G, one) >> v) & 1)


def extend_to_hull_set(G: Graph, v: int, Q) -> frozenset[int]:
    """Grow ``Q`` into a hull set ``S`` with ``v`` outside ``I(S)``.

    Start from ``V' = {v} + Q + (V - H(Q))``. While some vertex outside ``H(Q)``
    shares a cycle with ``v`` in ``G[V' - R]``, move the smallest such vertex
    into ``R``. The result is ``V' - R - {v}``.
    """
    Q = check_vertices(G, Q)
    qmask = to_mask(Q)
    if not _second_layer_only(G, v, qmask):
        raise ValueError("v must lie in the second interval layer of Q and not the first")
    outside = G.full_mask & ~hull_mask(G, qmask)
    vprime = (1 << v) | qmask | outside
    removed = 0
    while True:
        bd = components_blocks_bridges(G, vprime & ~removed)
        near = 0
        for block in bd.blocks:
            if len(block.vertices) >= 3 and v in block.vertices:
                near |= to_mask(block.vertices)
        pick = near & outside & ~removed
        if not pick:
            break
        removed |= pick & -pick
    S = vprime & ~removed & ~(1 << v)
    assert hull_mask(G, S) == G.full_mask, "extended set must be a hull set"
    assert not (interval_mask(G, S) >> v) & 1, "v must stay outside I(S)"
    return from_mask(S)


def pn_at_least_2(G: Graph) -> frozenset[int] | None:
    """A hull set ``S`` with ``I(S) != V``, or ``None`` when none exists."""
    if G.n < 3:
        return None
    rs = find_r_structure(G)
    if rs is None:
        return None
    seed = seed_set_from_structure(G, rs)
    return extend_to_hull_set(G, seed.v, seed.S)


@dataclass(frozen=True)
class Decision:
    """Outcome of "is there a hull set ``S`` with ``I^(k-1)(S) != V``"."""

    k: int
    holds: bool
    witness: frozenset[int] | None = None
    layers: tuple[frozenset[int], ...] = field(default=(), compare=False)


def pn_decide(G: Graph, k: int) -> Decision:
    """Decide ``pn(G) >= k`` for ``k`` in ``{0, 1, 2}`` with a witness hull set."""
    if k not in (0, 1, 2):
        raise ValueError("polynomial decision is available for k in {0, 1, 2} only")
    if k == 0:
        witness: frozenset[int] | None = frozenset(G.vertices)
    elif k == 1:
        on_cycle = components_blocks_bridges(G).on_cycle()
        witness = frozenset(G.vertices) - {min(on_cycle)} if on_cycle else None
    else:
        witness = pn_at_least_2(G)
    if witness is None:
        return Decision(k, False)
    layers = tuple(from_mask(x) for x in layers_mask(G, to_mask(witness)))
    return Decision(k, True, witness, layers)
