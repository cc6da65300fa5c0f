import random
from itertools import combinations

import pytest

from cyclecvx.graph import (
    Graph,
    GraphError,
    components_blocks_bridges,
    connected_components,
    cycle_graph,
    cycle_through,
    disjoint_union,
    format_edge_list,
    from_edge_list,
    induced_subgraph,
    is_forest,
    join,
    parse_edge_list,
    path_graph,
    shortest_path_avoiding,
    to_mask,
)

from conftest import atlas, random_graph

BOWTIE = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def test_from_edge_list_triangle():
    G = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    assert G.m == 3
    assert G.adj(0) == (1, 2)


def test_from_edge_list_dedups_symmetric_pairs():
    assert from_edge_list(2, [(0, 1), (1, 0)]).m == 1


@pytest.mark.parametrize("pairs", [[(0, 0)], [(0, 4)], [(-1, 2)]])
def test_from_edge_list_rejects_bad_pairs(pairs):
    with pytest.raises(GraphError):
        from_edge_list(4, pairs)


def test_adjacency_is_symmetric_and_sorted():
    G = random_graph(random.Random(1), 9)
    for u in G.vertices:
        assert list(G.adj(u)) == sorted(G.adj(u))
        for v in G.adj(u):
            assert u in G.adj(v)


def test_induced_subgraph_of_triangle():
    sub = induced_subgraph(cycle_graph(3), [0, 1])
    assert sub.graph.n == 2 and sub.graph.m == 1


def test_induced_subgraph_full_set_is_identity():
    G = BOWTIE
    sub = induced_subgraph(G, G.vertices)
    assert sub.graph == G
    assert sub.to_old == tuple(G.vertices)


def test_induced_subgraph_three_consecutive_c5_vertices_is_p3():
    sub = induced_subgraph(cycle_graph(5), [1, 2, 3])
    assert sub.graph == path_graph(3)


def test_induced_subgraph_maps_both_ways():
    G = BOWTIE
    sub = induced_subgraph(G, [4, 2, 0])
    for new, old in enumerate(sub.to_old):
        assert sub.to_new[old] == new


def test_induced_subgraph_edge_count_matches_direct_count():
    rng = random.Random(7)
    for _ in range(100):
        G = random_graph(rng, rng.randint(1, 10))
        S = [v for v in G.vertices if rng.random() < 0.5]
        direct = sum(1 for u, v in G.edges if u in S and v in S)
        assert induced_subgraph(G, S).graph.m == direct


def test_induced_subgraph_rejects_out_of_range():
    with pytest.raises(GraphError):
        induced_subgraph(path_graph(3), [5])


def test_blocks_of_a_tree_are_single_edges():
    bd = components_blocks_bridges(path_graph(5))
    assert len(bd.blocks) == 4
    assert all(len(b.vertices) == 2 for b in bd.blocks)
    assert len(bd.bridges) == 4


def test_c4_is_one_block_without_bridges():
    bd = components_blocks_bridges(cycle_graph(4))
    assert len(bd.blocks) == 1 and len(bd.blocks[0].vertices) == 4
    assert not bd.bridges


def test_bowtie_blocks():
    bd = components_blocks_bridges(BOWTIE)
    assert sorted(len(b.vertices) for b in bd.blocks) == [3, 3]
    assert not bd.bridges
    assert bd.articulation_points == {2}


def _cut_count(G, drop=None):
    edges = [e for e in G.edges if e != drop]
    return len(connected_components(Graph(G.n, edges)))


def test_bridges_match_edge_removal():
    rng = random.Random(3)
    for _ in range(200):
        G = random_graph(rng, rng.randint(1, 8), rng.uniform(0.1, 0.5))
        base = _cut_count(G)
        expected = {e for e in G.edges if _cut_count(G, e) > base}
        assert components_blocks_bridges(G).bridges == expected


def test_blocks_partition_the_edges():
    rng = random.Random(4)
    for _ in range(200):
        G = random_graph(rng, rng.randint(1, 10))
        edges = [e for b in components_blocks_bridges(G).blocks for e in b.edges]
        assert sorted(edges) == sorted(G.edges)


def _on_some_cycle(G, v):
    # v lies on a cycle iff two of its neighbours stay connected without v
    nbrs = G.adj(v)
    rest = Graph(G.n, [e for e in G.edges if v not in e])
    comps = connected_components(rest)
    return any(sum(1 for u in nbrs if u in c) >= 2 for c in comps)


def test_on_cycle_matches_exhaustive_check():
    for G in atlas(6):
        on_cycle = components_blocks_bridges(G).on_cycle()
        assert on_cycle == {v for v in G.vertices if _on_some_cycle(G, v)}


def test_component_labels():
    G = disjoint_union(cycle_graph(3), path_graph(2))
    bd = components_blocks_bridges(G)
    assert bd.n_components == 2
    assert bd.component == (0, 0, 0, 1, 1)


def test_iterative_dfs_handles_long_paths():
    G = path_graph(20000)
    assert len(components_blocks_bridges(G).bridges) == 19999


def test_shortest_path_adjacent():
    assert shortest_path_avoiding(cycle_graph(5), 0, 1) == [0, 1]


def test_shortest_path_blocked():
    assert shortest_path_avoiding(path_graph(3), 0, 2, forbidden=[1]) is None


def test_shortest_path_uses_chord():
    G = Graph(6, list(cycle_graph(6).edges) + [(0, 3)])
    assert shortest_path_avoiding(G, 0, 3) == [0, 3]


def test_shortest_path_rejects_forbidden_endpoint():
    with pytest.raises(GraphError):
        shortest_path_avoiding(path_graph(3), 0, 2, forbidden=[0])


def test_shortest_path_skipping_an_edge():
    assert shortest_path_avoiding(cycle_graph(4), 0, 1, skip_edge=(0, 1)) == [0, 3, 2, 1]


def test_cycle_through_returns_real_cycle():
    rng = random.Random(5)
    for _ in range(200):
        G = random_graph(rng, rng.randint(3, 9))
        for w in G.vertices:
            cyc = cycle_through(G, w, G.full_mask)
            if cyc is None:
                assert not _on_some_cycle(G, w)
                continue
            assert cyc[0] == w and len(set(cyc)) == len(cyc) >= 3
            assert all(G.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def test_is_forest():
    assert is_forest(path_graph(4))
    assert not is_forest(cycle_graph(3))
    assert is_forest(cycle_graph(3), [0, 1])


def test_join_and_union_sizes():
    G = join(path_graph(2), cycle_graph(3))
    assert G.n == 5 and G.m == 1 + 3 + 6
    assert disjoint_union(path_graph(2), path_graph(2)).m == 2


def test_edge_list_round_trip():
    text = format_edge_list(BOWTIE, comment="bow tie")
    assert text.startswith("# bow tie\n5 6\n")
    assert parse_edge_list(text) == BOWTIE


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n0 1\n",
        "3 2\n0 1\n",
        "3 1\n0 1 2\n",
        "3 1\n0 x\n",
        "3 1\n0 3\n",
        "3 1\n1 1\n",
    ],
)
def test_edge_list_parser_is_strict(text):
    with pytest.raises(GraphError):
        parse_edge_list(text)


def test_edge_list_comments_and_blank_lines():
    G = parse_edge_list("# c\n\n3 2\n# mid\n0 1\n\n1 2\n")
    assert G == path_graph(3)


def test_complement_of_complement():
    G = random_graph(random.Random(9), 8)
    assert G.complement().complement() == G
    for u, v in combinations(G.vertices, 2):
        assert G.has_edge(u, v) != G.complement().has_edge(u, v)


def test_to_mask():
    assert to_mask([0, 3]) == 0b1001
