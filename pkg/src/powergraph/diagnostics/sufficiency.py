"""
Vértices suficientes (|N^r(v)| >= (r/3 + 1) delta) e a partição dos
insuficientes pela relação d(x, y) <= 2.
"""

import logging

from powergraph.core.graph import (
    Graph,
    ball_mask,
    diameter,
    is_connected,
    iter_bits,
    lowest_bit,
    mask_of,
    min_degree,
)
from powergraph.errors import ClaimViolationError, HypothesisError
from powergraph.models.claims_models import InsufficientPartition, SufficiencyMap

logger = logging.getLogger(__name__)


def check_hypotheses(g: Graph, r: int) -> None:
    """Hipóteses do caso 3 | r: laços, conexo, r >= 6 e diâmetro >= r."""
    if not g.loops_allowed:
        raise HypothesisError("loops not allowed")
    if not is_connected(g):
        raise HypothesisError("graph is disconnected")
    if r % 3 != 0:
        raise HypothesisError("r ≢ 0 mod 3")
    if r < 6:
        raise HypothesisError("r < 6")
    if diameter(g) < r:
        raise HypothesisError("diameter < r")


def sufficiency_threshold(r: int, delta: int) -> int:
    return (r // 3 + 1) * delta


def classify(g: Graph, r: int) -> SufficiencyMap:
    check_hypotheses(g, r)
    delta = min_degree(g)
    threshold = sufficiency_threshold(r, delta)
    sizes = tuple(ball_mask(g, 1 << v, r).bit_count() for v in range(g.n))
    smap = SufficiencyMap(
        r=r,
        delta=delta,
        threshold=threshold,
        ball_sizes=sizes,
        sufficient=tuple(size >= threshold for size in sizes),
    )
    logger.info(f"📊 Classificação r={r}: limiar {threshold}, {len(smap.insufficient)} insuficientes")
    return smap


def _relation_layers(near: dict[int, int], start: int, within: int) -> list[int]:
    """Camadas da BFS no grafo da relação ~ restrito ao bitset `within`."""
    visited = 1 << start
    frontier = visited
    layers = [frontier]
    while frontier:
        reached = 0
        for v in iter_bits(frontier):
            reached |= near[v]
        frontier = reached & within & ~visited
        if frontier:
            visited |= frontier
            layers.append(frontier)
    return layers


def partition_insufficient(smap: SufficiencyMap, g: Graph) -> InsufficientPartition:
    """
    Componentes da relação d <= 2 nos insuficientes. Se a relação não for
    transitiva dentro de uma componente, levanta ClaimViolationError com a
    tripla x ~ y, y ~ z, d(x, z) > 2.
    """
    insufficient = smap.insufficient
    X = mask_of(insufficient)
    near = {v: ball_mask(g, 1 << v, 2) & X for v in insufficient}

    classes = []
    remaining = X
    while remaining:
        start = lowest_bit(remaining)
        layers = _relation_layers(near, start, X)
        component = 0
        for layer in layers:
            component |= layer

        for v in iter_bits(component):
            if near[v] & component != component:
                v_layers = _relation_layers(near, v, component)
                z = lowest_bit(v_layers[2])
                y = lowest_bit(near[z] & v_layers[1])
                raise ClaimViolationError("insufficient-vertex relation is not transitive", (v, y, z))

        classes.append(list(iter_bits(component)))
        remaining &= ~component

    partition = InsufficientPartition(classes=classes)
    logger.info(f"🧩 {partition.l} classes de vértices insuficientes")
    return partition
