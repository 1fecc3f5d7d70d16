"""
Potência G^r de um grafo por uma BFS truncada (profundidade r) por vértice.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from powergraph.core.edgelist import format_edge_list
from powergraph.core.graph import Graph, ball_mask, edge_count
from powergraph.errors import EmptyGraphError, GraphValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PowerResult:
    """G^r junto com e(G) e e(G^r)."""

    power_graph: Graph
    r: int
    base_edges: int
    power_edges: int

    def stats_header(self) -> str:
        return f"r={self.r} e_base={self.base_edges} e_power={self.power_edges}"


def _power_rows(g: Graph, sources: Sequence[int], r: int) -> list[int]:
    rows = []
    for v in sources:
        ball = ball_mask(g, 1 << v, r)
        if not g.loops_allowed:
            ball &= ~(1 << v)
        rows.append(ball)
    return rows


def _chunks(n: int, parts: int) -> list[range]:
    size = -(-n // parts)
    return [range(start, min(start + size, n)) for start in range(0, n, size)]


def graph_power(g: Graph, r: int, workers: Optional[int] = None) -> PowerResult:
    """
    G^r: xy é aresta quando 1 <= d(x, y) <= r. Se o grafo admite laços, a
    potência tem laço em todo vértice (d(x, x) = 0 <= r).
    """
    if r < 1:
        raise GraphValidationError(f"power requires r >= 1, got {r}")

    if workers and workers > 1 and g.n > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            parts = executor.map(lambda chunk: _power_rows(g, chunk, r), _chunks(g.n, workers))
            rows = [row for part in parts for row in part]
    else:
        rows = _power_rows(g, range(g.n), r)

    power_graph = Graph.from_trusted_rows(g.n, g.loops_allowed, tuple(rows))
    result = PowerResult(
        power_graph=power_graph,
        r=r,
        base_edges=edge_count(g),
        power_edges=edge_count(power_graph),
    )
    logger.info(f"📊 Potência calculada: {result.stats_header()}")
    return result


def power_ratio(g: Graph, r: int) -> Fraction:
    result = graph_power(g, r)
    if result.base_edges == 0:
        raise EmptyGraphError("e(G^r)/e(G) is undefined for an edgeless graph")
    return Fraction(result.power_edges, result.base_edges)


def add_loops(g: Graph) -> Graph:
    """Cópia de g com um laço em cada vértice."""
    if g.loop_count():
        raise GraphValidationError("add_loops expects a loopless graph")
    rows = tuple(row | (1 << v) for v, row in enumerate(g.adjacency))
    return Graph.from_trusted_rows(g.n, True, rows)


def format_power_result(result: PowerResult) -> str:
    return format_edge_list(result.power_graph, comments=[result.stats_header()])
