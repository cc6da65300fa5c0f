import random

import pytest

from cyclecvx.decomposition import (
    C5,
    CO_P5,
    JOIN,
    P5,
    PSEUDO_SPLIT,
    QUASI_SPIDER,
    QUASI_VARIANTS,
    UNION,
    VERTEX,
    check_partition,
    decompose,
    find_pseudo_split_partition,
    generate_pseudo_split_instance,
    generate_random_ext_p4_laden,
    is_extended_p4_laden_literal,
    is_pseudo_split_bruteforce,
    materialize_edges,
    spider_kind,
    validate_tree,
)
from cyclecvx.graph import Graph, cycle_graph, join, path_graph, to_mask
from cyclecvx.reductions import build_thick_spider_instance

from conftest import atlas, random_graph
from drawn_graphs import quasi_spider_k2_in_s


def test_single_vertex_is_a_leaf():
    assert decompose(Graph(1)).kind == VERTEX


@pytest.mark.parametrize("G, kind", [(cycle_graph(5), C5), (path_graph(5), P5), (path_graph(5).complement(), CO_P5)])
def test_five_vertex_leaves(G, kind):
    tree = decompose(G)
    assert tree.kind == kind
    assert materialize_edges(tree) == set(G.edges)


def test_thick_spider_over_c4():
    G = build_thick_spider_instance(cycle_graph(4)).graph
    tree = decompose(G)
    assert tree.kind == PSEUDO_SPLIT
    part = tree.partition
    assert check_partition(G, to_mask(part.S), to_mask(part.C), to_mask(part.R))
    assert part.R == set(range(6, 10))
    child = tree.children[0]
    assert child.kind == JOIN
    assert all(c.kind == UNION for c in child.children)
    validate_tree(G, tree)


def test_thick_spider_without_remainder():
    G = build_thick_spider_instance(Graph(0)).graph
    part, spider, quasi = find_pseudo_split_partition(G)
    assert quasi is None
    assert spider.kind == "thick"
    for c, s in spider.pairing:
        nbrs = {x for x in G.adj(c) if x in part.S}
        assert nbrs == part.S - {s}


def test_c4_has_no_partition():
    assert find_pseudo_split_partition(cycle_graph(4)) is None
    assert not is_pseudo_split_bruteforce(cycle_graph(4), range(4))


def test_quasi_spider_from_drawing():
    G, ids = quasi_spider_k2_in_s()
    tree = decompose(G)
    assert tree.kind == QUASI_SPIDER
    assert tree.quasi.replacement == "K2"
    assert tree.quasi.role == "S"
    assert set(tree.quasi.pair) == {ids["v"], ids["u"]}
    validate_tree(G, tree)


def test_spider_kind_requires_equal_sides():
    G = build_thick_spider_instance(path_graph(2)).graph
    part, _, _ = find_pseudo_split_partition(G)
    assert spider_kind(G, part).kind == "thick"


def test_p6_is_rejected():
    # six-vertex path: several induced P4s and no pseudo-split partition
    assert not is_extended_p4_laden_literal(path_graph(6))
    assert decompose(path_graph(6)) is None


def test_generator_budget_one():
    G, tree = generate_random_ext_p4_laden(0, 1)
    assert G.n == 1 and tree.kind == VERTEX


def test_generator_is_deterministic():
    assert generate_random_ext_p4_laden(42, 10)[0] == generate_random_ext_p4_laden(42, 10)[0]


def test_generator_rejects_empty_budget():
    with pytest.raises(ValueError):
        generate_random_ext_p4_laden(0, 0)


def test_generated_graphs_decompose():
    kinds = set()
    for seed in range(300):
        G, built = generate_random_ext_p4_laden(seed, 1 + seed % 12)
        assert G.n == 1 + seed % 12
        assert materialize_edges(built) == set(G.edges)
        tree = decompose(G)
        assert tree is not None
        validate_tree(G, tree)
        kinds.update(node.kind for node in tree.walk())
    assert {UNION, JOIN, PSEUDO_SPLIT, QUASI_SPIDER, C5, P5, CO_P5} <= kinds


def test_generated_graphs_pass_literal_membership():
    for seed in range(60):
        G, _ = generate_random_ext_p4_laden(seed, 4 + seed % 7)
        assert is_extended_p4_laden_literal(G)


@pytest.mark.parametrize("variant", [None, "spider", *QUASI_VARIANTS])
def test_pseudo_split_generator_variants(variant):
    for seed in range(20):
        G, node = generate_pseudo_split_instance(seed, 5 + seed % 7, variant)
        assert materialize_edges(node) == set(G.edges)
        if variant in (None, "spider"):
            p = node.partition
            assert check_partition(G, to_mask(p.S), to_mask(p.C), to_mask(p.R))


def test_decompose_is_total_on_random_graphs():
    rng = random.Random(17)
    accepted = rejected = 0
    for _ in range(500):
        G = random_graph(rng, rng.randint(1, 10))
        tree = decompose(G)
        if tree is None:
            rejected += 1
            continue
        accepted += 1
        validate_tree(G, tree)
        assert materialize_edges(tree) == set(G.edges)
    assert accepted and rejected


def test_rejection_agrees_with_literal_definition():
    for G in atlas(7):
        assert (decompose(G) is not None) == is_extended_p4_laden_literal(G)


def test_join_of_two_unions():
    G = join(Graph(2), Graph(2))
    tree = decompose(G)
    assert tree.kind == JOIN
    assert [c.kind for c in tree.children] == [UNION, UNION]
