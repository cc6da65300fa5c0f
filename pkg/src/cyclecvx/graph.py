"""Simple undirected graphs with dense integer vertex ids.

Vertex sets are passed around as ``frozenset[int]`` at the API level. Hot
loops (hulls, oracles) work on integer bitmasks instead; ``to_mask`` and
``from_mask`` convert between the two.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

VertexSet = frozenset


class GraphError(ValueError):
    pass


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "_adj", "_masks", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self._adj = tuple(tuple(sorted(s)) for s in nbrs)
        self._masks = tuple(to_mask(s) for s in nbrs)
        self._edges = tuple((u, v) for u in range(n) for v in self._adj[u] if u < v)

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return self._edges

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adj(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def nbr_mask(self, v: int) -> int:
        return self._masks[v]

    @property
    def nbr_masks(self) -> tuple[int, ...]:
        return self._masks

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self._masks[u] >> v) & 1 == 1

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def complement(self) -> Graph:
        full = self.full_mask
        pairs = []
        for u in range(self.n):
            rest = full & ~self._masks[u] & ~((2 << u) - 1)
            pairs.extend((u, v) for v in iter_bits(rest))
        return Graph(self.n, pairs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph, dropping duplicate edges. Self-loops are rejected."""
    return Graph(n, ((int(u), int(v)) for u, v in pairs))


def check_vertices(G: Graph, S: Iterable[int]) -> frozenset[int]:
    S = frozenset(S)
    for v in S:
        if not (isinstance(v, int) and 0 <= v < G.n):
            raise GraphError(f"vertex {v!r} is not a vertex of a graph with {G.n} vertices")
    return S


@dataclass(frozen=True)
class Subgraph:
    graph: Graph
    to_old: tuple[int, ...]
    to_new: dict[int, int]


def induced_subgraph(G: Graph, S: Iterable[int]) -> Subgraph:
    """``G[S]`` relabelled to ``0..|S|-1`` in increasing order of old id."""
    members = sorted(check_vertices(G, S))
    to_new = {v: i for i, v in enumerate(members)}
    pairs = [(to_new[u], to_new[v]) for u, v in G.edges if u in to_new and v in to_new]
    return Subgraph(Graph(len(members), pairs), tuple(members), to_new)


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
    return Graph(G.n, ((perm[u], perm[v]) for u, v in G.edges))


def disjoint_union(*graphs: Graph) -> Graph:
    pairs = []
    offset = 0
    for H in graphs:
        pairs.extend((u + offset, v + offset) for u, v in H.edges)
        offset += H.n
    return Graph(offset, pairs)


def join(G1: Graph, G2: Graph) -> Graph:
    pairs = list(G1.edges)
    pairs.extend((u + G1.n, v + G1.n) for u, v in G2.edges)
    pairs.extend((u, G1.n + v) for u in range(G1.n) for v in range(G2.n))
    return Graph(G1.n + G2.n, pairs)


# -- named graphs ----------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


# -- connectivity ----------------------------------------------------------

def components_mask(G: Graph, allowed: int) -> list[int]:
    """Connected components of ``G[allowed]`` as bitmasks, ordered by lowest vertex."""
    masks = G.nbr_masks
    comps = []
    rest = allowed
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= masks[v]
            frontier = grow & allowed & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(G: Graph, S: Iterable[int] | None = None) -> list[frozenset[int]]:
    allowed = G.full_mask if S is None else to_mask(check_vertices(G, S))
    return [from_mask(c) for c in components_mask(G, allowed)]


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(components_mask(G, G.full_mask)) == 1


def is_forest(G: Graph, S: Iterable[int] | None = None) -> bool:
    """True iff ``G[S]`` (default ``G``) has no cycle."""
    return is_forest_mask(G, G.full_mask if S is None else to_mask(S))


def is_forest_mask(G: Graph, allowed: int) -> bool:
    size = allowed.bit_count()
    if size == 0:
        return True
    masks = G.nbr_masks
    edges2 = sum((masks[v] & allowed).bit_count() for v in iter_bits(allowed))
    return edges2 // 2 == size - len(components_mask(G, allowed))


@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edges: tuple[tuple[int, int], ...]

    @property
    def is_cycle_block(self) -> bool:
        """A block lies on a cycle iff it has at least 3 vertices."""
        return len(self.vertices) >= 3


@dataclass(frozen=True)
class BlockDecomposition:
    component: tuple[int, ...]
    n_components: int
    blocks: tuple[Block, ...]
    bridges: frozenset[tuple[int, int]]
    articulation_points: frozenset[int]

    def on_cycle(self) -> frozenset[int]:
        return frozenset(v for b in self.blocks if b.is_cycle_block for v in b.vertices)


def components_blocks_bridges(G: Graph, allowed: int | None = None) -> BlockDecomposition:
    """Components, biconnected blocks and bridges of ``G`` (or ``G[allowed]``).

    Iterative Hopcroft-Tarjan with an edge stack. Isolated vertices get no block.
    Vertices outside ``allowed`` are labelled with component ``-1``.
    """
    if allowed is None:
        allowed = G.full_mask
    n = G.n
    disc = [-1] * n
    low = [0] * n
    comp = [-1] * n
    blocks: list[Block] = []
    bridges: set[tuple[int, int]] = set()
    arts: set[int] = set()
    timer = 0
    n_comp = 0
    edge_stack: list[tuple[int, int]] = []

    for root in iter_bits(allowed):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        comp[root] = n_comp
        root_children = 0
        # frame: (vertex, parent, iterator over neighbours)
        stack = [(root, -1, iter(G.adj(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if not (allowed >> w) & 1:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    comp[w] = n_comp
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(G.adj(w))))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    arts.add(parent)
                block_edges = []
                while True:
                    e = edge_stack.pop()
                    block_edges.append((min(e), max(e)))
                    if e == (parent, v):
                        break
                verts = frozenset(x for e in block_edges for x in e)
                blocks.append(Block(verts, tuple(sorted(block_edges))))
                if len(block_edges) == 1:
                    bridges.add((min(parent, v), max(parent, v)))
        if root_children > 1:
            arts.add(root)
        n_comp += 1

    return BlockDecomposition(tuple(comp), n_comp, tuple(blocks), frozenset(bridges), frozenset(arts))


def shortest_path_avoiding(
    G: Graph,
    s: int,
    t: int,
    forbidden: Iterable[int] = (),
    skip_edge: tuple[int, int] | None = None,
) -> list[int] | None:
    """BFS shortest ``s``-``t`` path in ``G - forbidden``, optionally without one edge.

    Neighbours are explored in increasing id order, so the result is deterministic.
    """
    forbidden = check_vertices(G, forbidden)
    if s in forbidden or t in forbidden:
        raise GraphError("path endpoints may not be forbidden")
    if s == t:
        return [s]
    skip = frozenset(skip_edge) if skip_edge is not None else None
    parent = {s: s}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in G.adj(u):
            if w in parent or w in forbidden:
                continue
            if skip is not None and u in skip and w in skip:
                continue
            parent[w] = u
            if w == t:
                path = [t]
                while path[-1] != s:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(w)
    return None


def cycle_through(G: Graph, w: int, allowed: int) -> list[int] | None:
    """Some cycle of ``G[allowed]`` through ``w``, as a vertex sequence starting at ``w``.

    Finds the smallest pair of neighbours of ``w`` that share a component of
    ``G[allowed - w]`` and closes a shortest path between them.
    """
    if not (allowed >> w) & 1:
        return None
    rest = allowed & ~(1 << w)
    nw = G.nbr_mask(w) & rest
    for comp in components_mask(G, rest):
        hit = nw & comp
        if hit.bit_count() >= 2:
            a, b = list(iter_bits(hit))[:2]
            outside = from_mask(G.full_mask & ~comp)
            path = shortest_path_avoiding(G, a, b, outside)
            return [w] + path
    return None


# -- edge-list text format ---------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``. ``#`` starts a comment line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise GraphError("empty graph file: missing 'n m' header")
    lineno, head = rows[0]
    if len(head) != 2:
        raise GraphError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError(f"line {lineno}: header must contain two integers") from None
    if n < 0 or m < 0:
        raise GraphError(f"line {lineno}: negative count in header")
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"header declares {m} edges but {len(body)} edge lines follow")
    pairs = []
    for lineno, fields in body:
        if len(fields) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        try:
            pairs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: vertex ids must be integers") from None
    try:
        return from_edge_list(n, pairs)
    except GraphError as exc:
        raise GraphError(f"invalid edge list: {exc}") from None


def format_edge_list(G: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{G.n} {G.m}")
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())
