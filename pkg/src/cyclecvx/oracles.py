"""Brute-force reference answers.

Everything here is exponential and guarded by a vertex-count cap. Exceeding
the cap raises :class:`OracleCapExceeded` rather than truncating silently.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from itertools import combinations

from .convexity import hull_mask, interval_mask
from .graph import Graph, from_mask, is_forest_mask, iter_bits, to_mask

DEFAULT_CAP = 16

_settings = {"cap": DEFAULT_CAP}


class OracleCapExceeded(RuntimeError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"oracle cap exceeded: graph has {n} vertices, cap is {cap}")
        self.n = n
        self.cap = cap


def set_default_cap(cap: int) -> None:
    _settings["cap"] = int(cap)


def get_default_cap() -> int:
    return _settings["cap"]


def _guard(G: Graph, cap: int | None) -> None:
    limit = _settings["cap"] if cap is None else cap
    if G.n > limit:
        raise OracleCapExceeded(G.n, limit)


@dataclass(frozen=True)
class PercolationResult:
    value: int
    witness: frozenset[int]


def _subsets_by_size_desc(n: int, top: int):
    for k in range(top, -1, -1):
        for combo in combinations(range(n), k):
            yield to_mask(combo)


# -- literal interval operator -----------------------------------------------

def _cycle_through(G: Graph, u: int, allowed: int) -> bool:
    """Backtracking search for a simple cycle through ``u`` inside ``allowed``."""
    masks = G.nbr_masks
    start_nbrs = masks[u] & allowed
    if start_nbrs.bit_count() < 2:
        return False

    def extend(v: int, used: int, length: int) -> bool:
        if length >= 2 and (masks[v] >> u) & 1:
            return True
        for w in iter_bits(masks[v] & allowed & ~used):
            if extend(w, used | (1 << w), length + 1):
                return True
        return False

    for first in iter_bits(start_nbrs):
        if extend(first, (1 << u) | (1 << first), 1):
            return True
    return False


def literal_interval_step(G: Graph, S) -> frozenset[int]:
    """``S`` plus every ``u`` such that ``G[S + u]`` has a simple cycle through ``u``."""
    mask = to_mask(S)
    out = mask
    for u in range(G.n):
        if not (mask >> u) & 1 and _cycle_through(G, u, mask | (1 << u)):
            out |= 1 << u
    return from_mask(out)


# -- convexity number --------------------------------------------------------

def oracle_largest_convex_set(G: Graph, cap: int | None = None) -> frozenset[int]:
    """A largest convex set other than ``V``; the first one found at that size."""
    _guard(G, cap)
    for S in _subsets_by_size_desc(G.n, G.n - 1):
        if interval_mask(G, S) == S:
            return from_mask(S)
    return frozenset()


def oracle_convexity_number(G: Graph, cap: int | None = None) -> int:
    return len(oracle_largest_convex_set(G, cap))


# -- percolation time --------------------------------------------------------

def percolation_time_table(G: Graph, cap: int | None = None) -> array:
    """Percolation time of every subset, indexed by bitmask; ``-1`` marks non-hull sets."""
    _guard(G, cap)
    full = G.full_mask
    table = array("b", [-2]) * (1 << G.n)
    table[full] = 0
    for start in range(1 << G.n):
        if table[start] != -2:
            continue
        chain = []
        x = start
        while table[x] == -2:
            nxt = interval_mask(G, x)
            if nxt == x:
                table[x] = -1
                break
            chain.append(x)
            x = nxt
        val = table[x]
        for y in reversed(chain):
            val = -1 if val == -1 else val + 1
            table[y] = val
    return table


def oracle_percolation_time(G: Graph, cap: int | None = None) -> PercolationResult:
    table = percolation_time_table(G, cap)
    best = max(table)
    return PercolationResult(best, from_mask(table.index(best)))


def oracle_exists_late_vertex(G: Graph, cap: int | None = None) -> bool:
    """Whether some ``S`` has ``I^2(S) - I(S)`` non-empty."""
    _guard(G, cap)
    for S in range(1 << G.n):
        one = interval_mask(G, S)
        if one != S and interval_mask(G, one) != one:
            return True
    return False


# -- independence and forests ------------------------------------------------

def oracle_max_independent_set(G: Graph, cap: int | None = None) -> frozenset[int]:
    _guard(G, cap)
    masks = G.nbr_masks

    def solve(avail: int) -> int:
        if not avail:
            return 0
        pick, pick_deg = -1, -1
        for v in iter_bits(avail):
            d = (masks[v] & avail).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
        if pick_deg == 0:
            return avail
        bit = 1 << pick
        take = bit | solve(avail & ~bit & ~masks[pick])
        if pick_deg == 1:
            return take
        skip = solve(avail & ~bit)
        return take if take.bit_count() >= skip.bit_count() else skip

    return from_mask(solve(G.full_mask))


def oracle_alpha(G: Graph, cap: int | None = None) -> int:
    return len(oracle_max_independent_set(G, cap))


def oracle_max_induced_forest(G: Graph, cap: int | None = None) -> int:
    _guard(G, cap)
    for S in _subsets_by_size_desc(G.n, G.n):
        if is_forest_mask(G, S):
            return S.bit_count()
    return 0


def oracle_rank(G: Graph, cap: int | None = None) -> int:
    """Size of a largest convexly independent set, by definition."""
    _guard(G, cap)
    for S in _subsets_by_size_desc(G.n, G.n):
        if all(not (hull_mask(G, S & ~(1 << v)) >> v) & 1 for v in iter_bits(S)):
            return S.bit_count()
    return 0


def minimal_hull_sets(G: Graph, cap: int | None = None) -> list[frozenset[int]]:
    """All inclusion-minimal hull sets."""
    _guard(G, cap)
    full = G.full_mask
    hulls = [S for S in range(1 << G.n) if hull_mask(G, S) == full]
    found = set(hulls)
    minimal = [S for S in hulls if not any((S & ~(1 << v)) in found for v in iter_bits(S))]
    return [from_mask(S) for S in minimal]
