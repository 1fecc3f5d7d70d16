"""
Regulares aleatórios conexos pelo modelo de configuração (pareamento de
semi-arestas). Laços e multiarestas nunca entram no grafo: as semi-arestas que
os formariam são re-sorteadas, e a tentativa inteira é rejeitada quando não há
mais par válido ou quando o resultado é desconexo.
"""

import logging
from collections import defaultdict
from typing import Optional

import numpy as np

from powergraph.core.graph import Graph, build_graph, is_connected
from powergraph.errors import GraphValidationError, RegularGenerationError
from powergraph.system.settings import load_settings

logger = logging.getLogger(__name__)


def _has_free_pair(edges: set[tuple[int, int]], pending: dict[int, int]) -> bool:
    # ainda existe algum par de semi-arestas pendentes que forma aresta nova?
    vertices = sorted(pending)
    if not vertices:
        return True
    for i, a in enumerate(vertices):
        for b in vertices[i + 1:]:
            if (a, b) not in edges:
                return True
    return False


def _try_pairing(n: int, d: int, rng: np.random.Generator) -> Optional[set[tuple[int, int]]]:
    """
    Uma rodada do modelo de configuração: pareia as semi-arestas ao acaso e
    re-sorteia apenas as que geraram laço ou aresta repetida.
    """
    edges: set[tuple[int, int]] = set()
    stubs = np.repeat(np.arange(n), d)

    while stubs.size:
        pending: dict[int, int] = defaultdict(int)
        shuffled = rng.permutation(stubs)
        for a, b in shuffled.reshape(-1, 2):
            a, b = int(min(a, b)), int(max(a, b))
            if a != b and (a, b) not in edges:
                edges.add((a, b))
            else:
                pending[a] += 1
                pending[b] += 1

        if not _has_free_pair(edges, pending):
            return None

        stubs = np.array([v for v, count in sorted(pending.items()) for _ in range(count)], dtype=int)
    return edges


def random_regular_connected(
    n: int,
    d: int,
    seed: int,
    attempt_budget: Optional[int] = None,
) -> Graph:
    if (n * d) % 2:
        raise GraphValidationError("n*d must be even")
    if not 0 <= d < n:
        raise GraphValidationError("random regular graph requires 0 <= d < n")
    if (n > 1 and d == 0) or (n > 2 and d == 1):
        raise GraphValidationError(f"no connected {d}-regular graph on {n} vertices exists")

    budget = attempt_budget or load_settings().attempt_budget
    rng = np.random.default_rng(seed)

    for attempt in range(1, budget + 1):
        edges = _try_pairing(n, d, rng)
        if edges is None:
            continue
        graph = build_graph(n, edges)
        if is_connected(graph):
            logger.info(f"🎲 Regular aleatório: n={n} d={d} seed={seed} tentativas={attempt}")
            return graph

    logger.error(f"❌ Orçamento esgotado: n={n} d={d} seed={seed}")
    raise RegularGenerationError(n, d, budget)
