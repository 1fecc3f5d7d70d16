"""
Grafo imutável com primitivas de distância (BFS, excentricidade, diâmetro,
vizinhanças N^r e geodésicas).

A adjacência de cada vértice é um bitset (int do Python): o bit u de
adjacency[v] está ligado quando uv é aresta. Um laço em v liga o próprio bit v.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from powergraph.errors import DisconnectedError, GraphValidationError

logger = logging.getLogger(__name__)

INFINITE = math.inf


def iter_bits(mask: int) -> Iterator[int]:
    """Itera os vértices de um bitset em ordem crescente."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True, slots=True)
class Graph:
    """Grafo não direcionado, opcionalmente com laços, vértices 0..n-1."""

    n: int
    loops_allowed: bool
    adjacency: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphValidationError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.adjacency) != self.n:
            raise GraphValidationError(f"adjacency has {len(self.adjacency)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adjacency):
            if row < 0 or row & ~full:
                raise GraphValidationError(f"vertex {u} lists a neighbour outside 0..{self.n - 1}")
            if not self.loops_allowed and (row >> u) & 1:
                raise GraphValidationError(f"loop at {u} but loops are not allowed")
            for v in iter_bits(row):
                if not (self.adjacency[v] >> u) & 1:
                    raise GraphValidationError(f"adjacency is not symmetric at ({u}, {v})")

    @classmethod
    def from_trusted_rows(cls, n: int, loops_allowed: bool, adjacency: tuple[int, ...]) -> "Graph":
        """Constrói sem revalidar; as linhas já são simétricas por construção."""
        graph = object.__new__(cls)
        object.__setattr__(graph, "n", n)
        object.__setattr__(graph, "loops_allowed", loops_allowed)
        object.__setattr__(graph, "adjacency", adjacency)
        return graph

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adjacency[u] >> v) & 1)

    def has_loop(self, v: int) -> bool:
        return self.has_edge(v, v)

    def loop_count(self) -> int:
        return sum(1 for v in range(self.n) if self.has_loop(v))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Arestas (u, v) com u <= v, em ordem lexicográfica."""
        for u, row in enumerate(self.adjacency):
            for v in iter_bits(row >> u):
                yield u, u + v


class Geodesic(BaseModel):
    """Caminho mínimo x_0..x_k; length = k."""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[int, ...]

    @field_validator("vertices")
    @classmethod
    def _distinct(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if not v:
            raise ValueError("a geodesic has at least one vertex")
        if len(set(v)) != len(v):
            raise ValueError("geodesic vertices must be distinct")
        return v

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def target(self) -> int:
        return self.vertices[-1]


class DistanceVector(BaseModel):
    """Distâncias a partir de source; None marca vértice inalcançável."""

    model_config = ConfigDict(frozen=True)

    source: int
    dist: tuple[Optional[int], ...]

    @model_validator(mode="after")
    def _source_at_zero(self) -> "DistanceVector":
        if self.dist[self.source] != 0:
            raise ValueError("dist[source] must be 0")
        return self

    def reachable(self, v: int) -> bool:
        return self.dist[v] is not None

    def eccentricity(self) -> float:
        if any(d is None for d in self.dist):
            return INFINITE
        return max(self.dist)


def build_graph(n: int, edges: Iterable[Sequence[int]], loops_allowed: bool = False) -> Graph:
    if n < 0:
        raise GraphValidationError(f"vertex count must be nonnegative, got {n}")
    rows = [0] * n
    # pares repetidos (ou invertidos) colapsam no mesmo bit
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphValidationError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v and not loops_allowed:
            raise GraphValidationError(f"loop ({u}, {u}) supplied but loops are not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n=n, loops_allowed=loops_allowed, adjacency=tuple(rows))


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphValidationError(f"vertex {v} outside 0..{g.n - 1}")


def bfs_layers(g: Graph, sources: int, depth: Optional[int] = None) -> list[int]:
    """
    BFS em nível sobre bitsets a partir do conjunto `sources` (bitset).

    Retorna as camadas: layers[k] é o bitset dos vértices a distância exata k.
    Para quando a fronteira esvazia ou a profundidade `depth` é atingida.
    """
    adjacency = g.adjacency
    visited = sources
    frontier = sources
    layers = [sources]
    while frontier and (depth is None or len(layers) <= depth):
        reached = 0
        for v in iter_bits(frontier):
            reached |= adjacency[v]
        frontier = reached & ~visited
        if not frontier:
            break
        visited |= frontier
        layers.append(frontier)
    return layers


def ball_mask(g: Graph, sources: int, r: int) -> int:
    """Bitset de N^r(X) para X dado como bitset."""
    mask = 0
    for layer in bfs_layers(g, sources, r):
        mask |= layer
    return mask


def bfs_distances(g: Graph, source: int) -> DistanceVector:
    _check_vertex(g, source)
    dist: list[Optional[int]] = [None] * g.n
    for k, layer in enumerate(bfs_layers(g, 1 << source)):
        for v in iter_bits(layer):
            dist[v] = k
    return DistanceVector(source=source, dist=tuple(dist))


def eccentricity(g: Graph, v: int) -> float:
    _check_vertex(g, v)
    layers = bfs_layers(g, 1 << v)
    reached = 0
    for layer in layers:
        reached |= layer
    if reached != g.full_mask:
        return INFINITE
    return len(layers) - 1


def diameter(g: Graph) -> float:
    """Maior distância entre pares; math.inf se desconexo."""
    if g.n == 0:
        return 0
    if not is_connected(g):
        return INFINITE
    return max(len(bfs_layers(g, 1 << v)) - 1 for v in range(g.n))


def distance_matrix(g: Graph) -> list[tuple[Optional[int], ...]]:
    return [bfs_distances(g, v).dist for v in range(g.n)]


def r_neighborhood(g: Graph, X: Iterable[int], r: int) -> frozenset[int]:
    vertices = list(X)
    if not vertices:
        raise GraphValidationError("r_neighborhood needs a nonempty vertex set")
    if r < 0:
        raise GraphValidationError(f"r must be nonnegative, got {r}")
    for v in vertices:
        _check_vertex(g, v)
    return frozenset(iter_bits(ball_mask(g, mask_of(vertices), r)))


def trace_geodesic(g: Graph, layers: list[int], target: int) -> Geodesic:
    """
    Reconstrói a geodésica até `target` a partir das camadas de uma BFS de
    fonte única; o pai é sempre o menor predecessor na camada anterior.
    """
    k = next(i for i, layer in enumerate(layers) if (layer >> target) & 1)
    path = [target]
    current = target
    for level in range(k - 1, -1, -1):
        current = lowest_bit(g.adjacency[current] & layers[level])
        path.append(current)
    path.reverse()
    return Geodesic(vertices=tuple(path))


def find_geodesic(g: Graph, x: int, y: int) -> Geodesic:
    _check_vertex(g, x)
    _check_vertex(g, y)
    layers = bfs_layers(g, 1 << x)
    if not any((layer >> y) & 1 for layer in layers):
        raise DisconnectedError(x, y)
    return trace_geodesic(g, layers, y)


def geodesic_from(g: Graph, v: int, k: int) -> Optional[Geodesic]:
    """Geodésica de comprimento k saindo de v (alvo: menor vértice a distância k), ou None."""
    _check_vertex(g, v)
    if k < 0:
        return None
    layers = bfs_layers(g, 1 << v, k)
    if len(layers) <= k:
        return None
    return trace_geodesic(g, layers, lowest_bit(layers[k]))


def neighborhood_of_path(g: Graph, path: Geodesic) -> int:
    """Bitset de N(V(P))."""
    mask = 0
    for v in path.vertices:
        mask |= g.adjacency[v]
    return mask


def min_degree(g: Graph) -> int:
    if g.n == 0:
        return 0
    return min(row.bit_count() for row in g.adjacency)


def is_regular(g: Graph) -> bool:
    return len({row.bit_count() for row in g.adjacency}) <= 1


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return ball_mask(g, 1, g.n) == g.full_mask


def edge_count(g: Graph) -> int:
    """Número de arestas; um laço conta como uma aresta."""
    degree_sum = sum(row.bit_count() for row in g.adjacency)
    return (degree_sum + g.loop_count()) // 2
