"""Interval operator, hulls and convexity predicates of the cycle convexity.

A vertex ``u`` outside ``S`` joins ``I(S)`` exactly when ``G[S + u]`` has a cycle
through ``u``, i.e. when ``u`` has two neighbours in one component of ``G[S]``.
Everything here uses that characterization; the literal cycle search lives in
:mod:`cyclecvx.oracles` as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, check_vertices, from_mask, is_forest, iter_bits, to_mask


def interval_mask(G: Graph, S: int) -> int:
    """One application of the interval operator on a bitmask."""
    masks = G.nbr_masks
    gained = 0
    rest = S
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        once = 0
        twice = 0
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                nb = masks[v]
                twice |= once & nb
                once |= nb
                grow |= nb
            frontier = grow & S & ~comp
            comp |= frontier
        gained |= twice
        rest &= ~comp
    return S | (gained & ~S)


def hull_mask(G: Graph, S: int) -> int:
    while True:
        nxt = interval_mask(G, S)
        if nxt == S:
            return S
        S = nxt


def layers_mask(G: Graph, S: int) -> list[int]:
    """``[I^0(S), I^1(S), ..., H(S)]``; the last entry is the fixpoint."""
    layers = [S]
    while True:
        nxt = interval_mask(G, layers[-1])
        if nxt == layers[-1]:
            return layers
        layers.append(nxt)


def time_mask(G: Graph, S: int) -> int | None:
    """Smallest ``t`` with ``I^t(S) = V``, or ``None`` if ``S`` is not a hull set."""
    full = G.full_mask
    t = 0
    while S != full:
        nxt = interval_mask(G, S)
        if nxt == S:
            return None
        S = nxt
        t += 1
    return t


@dataclass(frozen=True)
class HullTrace:
    """All layers ``I^0(S) ⊂ I^1(S) ⊂ ... ⊂ H(S)`` of a hull computation."""

    layers: tuple[frozenset[int], ...]

    @property
    def converged_at(self) -> int:
        return len(self.layers) - 1

    @property
    def hull(self) -> frozenset[int]:
        return self.layers[-1]

    def layer(self, k: int) -> frozenset[int]:
        """``I^k(S)``; indices past convergence return the hull."""
        return self.layers[min(k, len(self.layers) - 1)]

    def entry_time(self, v: int) -> int | None:
        for k, layer in enumerate(self.layers):
            if v in layer:
                return k
        return None

    def as_lists(self) -> list[list[int]]:
        return [sorted(layer) for layer in self.layers]


def interval_step(G: Graph, S: Iterable[int]) -> frozenset[int]:
    S = check_vertices(G, S)
    return from_mask(interval_mask(G, to_mask(S)))


def hull(G: Graph, S: Iterable[int]) -> HullTrace:
    S = check_vertices(G, S)
    return HullTrace(tuple(from_mask(x) for x in layers_mask(G, to_mask(S))))


def is_convex(G: Graph, S: Iterable[int]) -> bool:
    mask = to_mask(check_vertices(G, S))
    return interval_mask(G, mask) == mask


def is_hull_set(G: Graph, S: Iterable[int]) -> bool:
    return hull_mask(G, to_mask(check_vertices(G, S))) == G.full_mask


def percolation_time_of_set(G: Graph, S: Iterable[int]) -> int | None:
    return time_mask(G, to_mask(check_vertices(G, S)))


def is_convexly_independent(G: Graph, S: Iterable[int]) -> bool:
    """No member of ``S`` lies in the hull of the others."""
    mask = to_mask(check_vertices(G, S))
    for v in iter_bits(mask):
        if (hull_mask(G, mask & ~(1 << v)) >> v) & 1:
            return False
    return True


def induces_forest(G: Graph, S: Iterable[int]) -> bool:
    return is_forest(G, check_vertices(G, S))
