import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete_graph, cycle_graph, graphs, path_graph
from powergraph.core.edgelist import format_edge_list, parse_edge_list, read_edge_list, write_edge_list
from powergraph.core.graph import (
    Geodesic,
    Graph,
    bfs_distances,
    build_graph,
    diameter,
    distance_matrix,
    eccentricity,
    edge_count,
    find_geodesic,
    geodesic_from,
    is_connected,
    is_regular,
    min_degree,
    neighborhood_of_path,
    r_neighborhood,
)
from powergraph.errors import DisconnectedError, EdgeListParseError, GraphValidationError


def floyd_warshall(g: Graph) -> list[list[float]]:
    dist = [[0 if u == v else (1 if g.has_edge(u, v) else math.inf) for v in range(g.n)] for u in range(g.n)]
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if dist[i][k] + dist[k][j] < dist[i][j]:
                    dist[i][j] = dist[i][k] + dist[k][j]
    return dist


def test_build_graph_rejects_out_of_range_vertex():
    """Aresta com extremo fora de 0..n-1 é rejeitada."""
    with pytest.raises(GraphValidationError):
        build_graph(3, [(0, 3)])


def test_build_graph_rejects_loop_when_not_allowed():
    """Laço só entra em grafo com loops_allowed."""
    with pytest.raises(GraphValidationError, match="loop"):
        build_graph(3, [(1, 1)])


def test_graph_rejects_asymmetric_adjacency():
    """A adjacência precisa ser simétrica."""
    with pytest.raises(GraphValidationError, match="symmetric"):
        Graph(n=2, loops_allowed=False, adjacency=(0b10, 0b00))


def test_repeated_edges_collapse():
    """Pares repetidos ou invertidos viram uma única aresta."""
    g = build_graph(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
    assert list(g.edges()) == [(0, 1), (1, 2)]
    assert edge_count(g) == 2


def test_edge_count_counts_each_loop_once():
    """Triângulo com laços tem 3 arestas mais 3 laços."""
    g = complete_graph(3, loops_allowed=True)
    assert edge_count(g) == 6
    assert g.loop_count() == 3
    assert min_degree(g) == 3


def test_bfs_distances_on_path_and_unreachable():
    """Distâncias na trilha e None para vértice inalcançável."""
    g = build_graph(5, [(0, 1), (1, 2), (2, 3)])
    dv = bfs_distances(g, 0)
    assert dv.dist == (0, 1, 2, 3, None)
    assert not dv.reachable(4)
    assert dv.eccentricity() == math.inf


def test_diameter_edge_cases():
    """Diâmetro da trilha, do grafo desconexo, do vazio e do vértice isolado."""
    assert diameter(path_graph(4)) == 3
    assert diameter(build_graph(3, [(0, 1)])) == math.inf
    assert diameter(build_graph(0, [])) == 0
    assert diameter(build_graph(1, [])) == 0


def test_eccentricity_on_cycle():
    """Todo vértice de C_n tem excentricidade floor(n/2)."""
    g = cycle_graph(9)
    assert {eccentricity(g, v) for v in range(9)} == {4}


def test_r_neighborhood_on_cycle():
    """N^2(0) em C_6 deixa de fora só o vértice oposto."""
    g = cycle_graph(6)
    assert r_neighborhood(g, [0], 2) == frozenset({0, 1, 2, 4, 5})
    assert r_neighborhood(g, [0, 3], 0) == frozenset({0, 3})


def test_r_neighborhood_rejects_empty_set_and_negative_r():
    g = cycle_graph(6)
    with pytest.raises(GraphValidationError):
        r_neighborhood(g, [], 2)
    with pytest.raises(GraphValidationError):
        r_neighborhood(g, [0], -1)


def test_find_geodesic_length_matches_distance():
    """A geodésica tem comprimento d(x, y) e passos de aresta."""
    g = cycle_graph(10)
    path = find_geodesic(g, 0, 6)
    assert path.length == 4
    assert path.source == 0 and path.target == 6
    assert all(g.has_edge(a, b) for a, b in zip(path.vertices, path.vertices[1:]))


def test_find_geodesic_across_components_raises():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedError):
        find_geodesic(g, 0, 3)


def test_geodesic_from_returns_none_beyond_eccentricity():
    """Não há geodésica de comprimento maior que a excentricidade."""
    g = path_graph(4)
    assert geodesic_from(g, 0, 3).vertices == (0, 1, 2, 3)
    assert geodesic_from(g, 1, 3) is None


def test_geodesic_requires_distinct_vertices():
    with pytest.raises(ValueError):
        Geodesic(vertices=(0, 1, 0))


def test_regularity_and_connectivity_helpers():
    assert is_regular(cycle_graph(7))
    assert not is_regular(path_graph(4))
    assert is_connected(path_graph(4))
    assert not is_connected(build_graph(2, []))


def test_distance_matrix_is_symmetric():
    g = path_graph(5)
    matrix = distance_matrix(g)
    assert all(matrix[u][v] == matrix[v][u] for u in range(5) for v in range(5))
    assert matrix[0][4] == 4


def test_diameter_matches_networkx_on_petersen():
    """Petersen tem diâmetro 2."""
    petersen = nx.petersen_graph()
    g = build_graph(10, petersen.edges())
    assert diameter(g) == nx.diameter(petersen) == 2


def test_parse_edge_list_with_comments():
    text = "# gerado\nn=3 loops=1\n0 1  # aresta\n\n2 2\n"
    g = parse_edge_list(text)
    assert g.n == 3 and g.loops_allowed
    assert list(g.edges()) == [(0, 1), (2, 2)]


def test_parse_edge_list_reports_line_numbers():
    """Erros de leitura apontam a linha."""
    with pytest.raises(EdgeListParseError, match="line 2") as info:
        parse_edge_list("n=3 loops=0\n0 9\n")
    assert info.value.line_number == 2

    with pytest.raises(EdgeListParseError, match="line 3"):
        parse_edge_list("n=3 loops=0\n0 1\n1 1\n")

    with pytest.raises(EdgeListParseError, match="line 1"):
        parse_edge_list("vertices 3\n")


def test_parse_edge_list_without_header():
    with pytest.raises(EdgeListParseError, match="missing header"):
        parse_edge_list("# nada\n")


def test_write_and_read_edge_list(tmp_path):
    """Arquivo gravado e relido reproduz o grafo."""
    g = cycle_graph(5, loops_allowed=True)
    path = write_edge_list(g, tmp_path / "c5.txt", comments=["ciclo"])
    text = path.read_text(encoding="utf-8")
    assert text.startswith("# ciclo\nn=5 loops=1\n")
    assert read_edge_list(path) == g


def test_read_edge_list_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        read_edge_list(tmp_path / "nao_existe.txt")


def test_format_edge_list_is_deterministic():
    g = build_graph(3, [(2, 1), (1, 0)])
    assert format_edge_list(g) == "n=3 loops=0\n0 1\n1 2\n"


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_bfs_matches_floyd_warshall(g):
    """BFS e Floyd-Warshall concordam em todos os pares."""
    reference = floyd_warshall(g)
    for u in range(g.n):
        dist = bfs_distances(g, u).dist
        for v in range(g.n):
            expected = reference[u][v]
            assert (dist[v] is None) == (expected == math.inf)
            if dist[v] is not None:
                assert dist[v] == expected


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_triangle_inequality(g):
    matrix = distance_matrix(g)
    for x in range(g.n):
        for y in range(g.n):
            for z in range(g.n):
                if None in (matrix[x][y], matrix[y][z]):
                    continue
                assert matrix[x][z] <= matrix[x][y] + matrix[y][z]


@settings(max_examples=60, deadline=None)
@given(graphs(), st.integers(min_value=0, max_value=5))
def test_r_neighborhood_matches_distances(g, r):
    """N^r(v) é exatamente {u : d(v, u) <= r}."""
    for v in range(g.n):
        dist = bfs_distances(g, v).dist
        expected = {u for u, d in enumerate(dist) if d is not None and d <= r}
        assert r_neighborhood(g, [v], r) == expected


@settings(max_examples=40, deadline=None)
@given(graphs(loops=False))
def test_diameter_matches_networkx(g):
    reference = nx.Graph()
    reference.add_nodes_from(range(g.n))
    reference.add_edges_from(g.edges())
    if nx.is_connected(reference):
        assert diameter(g) == nx.diameter(reference)
    else:
        assert diameter(g) == math.inf


def _path_neighborhood_bound_holds(g: Graph, path: Geodesic) -> bool:
    k = path.length
    return neighborhood_of_path(g, path).bit_count() >= (k // 3 + 1) * min_degree(g)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_geodesic_neighborhood_bound(g):
    """|N(V(P))| >= (floor(k/3) + 1) * delta para toda geodésica P de comprimento k."""
    for x in range(g.n):
        dist = bfs_distances(g, x).dist
        for y in range(x + 1, g.n):
            if dist[y] is not None:
                assert _path_neighborhood_bound_holds(g, find_geodesic(g, x, y))
        for k in range(1, g.n):
            path = geodesic_from(g, x, k)
            if path is None:
                break
            assert _path_neighborhood_bound_holds(g, path)


def test_geodesic_neighborhood_bound_is_tight_on_cycle():
    g = cycle_graph(12)
    path = find_geodesic(g, 0, 6)
    assert neighborhood_of_path(g, path).bit_count() == 9
    assert (path.length // 3 + 1) * min_degree(g) == 6


def test_parse_edge_list_rejects_non_ascii_digits():
    with pytest.raises(EdgeListParseError, match="line 2"):
        parse_edge_list("n=3 loops=0\n0 ²\n")
    with pytest.raises(EdgeListParseError, match="line 1"):
        parse_edge_list("n=٣ loops=0\n")


def test_read_edge_list_rejects_invalid_utf8(tmp_path):
    path = tmp_path / "g.txt"
    path.write_bytes(b"n=2 loops=0\n\xff\xfe\n")
    with pytest.raises(EdgeListParseError, match="line 2"):
        read_edge_list(path)
