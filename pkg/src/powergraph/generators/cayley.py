import logging
from typing import Iterable

from powergraph.core.graph import Graph, build_graph
from powergraph.errors import GraphValidationError

logger = logging.getLogger(__name__)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    divisor = 2
    while divisor * divisor <= p:
        if p % divisor == 0:
            return False
        divisor += 1
    return True


def connection_set(p: int, A: Iterable[int]) -> frozenset[int]:
    """A ∪ (-A) reduzido mod p."""
    residues = {a % p for a in A}
    return frozenset(residues | {(-a) % p for a in residues})


def cayley_graph(p: int, A: Iterable[int]) -> Graph:
    """Grafo de Cayley de A ⊆ Z_p: xy é aresta quando x - y ∈ A ou y - x ∈ A."""
    generators = list(A)
    if not is_prime(p):
        raise GraphValidationError(f"cayley graph requires a prime p, got {p}")
    if not generators:
        raise GraphValidationError("cayley graph requires a nonempty set A")
    if any(a % p == 0 for a in generators):
        raise GraphValidationError("cayley graph requires 0 ∉ A")

    edges = [(x, (x + a) % p) for x in range(p) for a in connection_set(p, generators)]
    graph = build_graph(p, edges)
    logger.info(f"🔄 Cayley construído: p={p} A={sorted(set(generators))}")
    return graph
