"""
Famílias extremais em camadas: G_m (r não divisível por 3) e H_m (3 | r).

Ambas partem de camadas N_0..N_k completas internamente e completamente
ligadas a camada seguinte; G_m remove um ciclo hamiltoniano das camadas
internas, H_m remove emparelhamentos perfeitos de N_1 e N_r.
"""

import logging

from powergraph.core.graph import Graph, build_graph
from powergraph.errors import GraphValidationError
from powergraph.models.construction_models import LayeredBlueprint

logger = logging.getLogger(__name__)

HM_MATCHING_NOTE = (
    "matchings removed from N_1 and N_r: the literal 'N_2 and N_r' reading fails, "
    "N_2 is a single vertex when r = 0 mod 3 and N_1 has degree 4m+1 before deletion"
)


def gm_layer_sizes(r: int, m: int) -> list[int]:
    return [m - 1 if i % 3 == 1 else 2 for i in range(r + 1)]


def hm_layer_sizes(r: int, m: int) -> list[int]:
    sizes = []
    for i in range(r + 2):
        if i in (0, r + 1):
            sizes.append(2 * m + 1)
        elif i % 3 == 2:
            sizes.append(1)
        else:
            sizes.append(2 * m)
    return sizes


def gm_order(r: int, m: int) -> int:
    if r % 3 == 1:
        return (r * m + 2 * m + 3 * r) // 3
    return (r + 1) * (m + 3) // 3


def gm_edges(r: int, m: int) -> int:
    return gm_order(r, m) * m // 2


def gm_power_edges(r: int, m: int) -> int:
    n = gm_order(r, m)
    return n * (n - 1) // 2


def hm_order(r: int, m: int) -> int:
    return (4 * r * m + r + 12 * m + 6) // 3


def hm_edges(r: int, m: int) -> int:
    return hm_order(r, m) * 4 * m // 2


def hm_power_edges(r: int, m: int) -> int:
    # só faltam os pares entre N_0 e N_{r+1}
    n = hm_order(r, m)
    return n * (n - 1) // 2 - (2 * m + 1) ** 2


def validate_gm(r: int, m: int) -> None:
    if r % 3 == 0:
        raise GraphValidationError("Gm requires r ≢ 0 mod 3")
    if r < 4:
        raise GraphValidationError("Gm requires r ≥ 4")
    if m < 3:
        raise GraphValidationError("Gm requires m ≥ 3")


def validate_hm(r: int, m: int) -> None:
    if r % 3 != 0:
        raise GraphValidationError("Hm requires r ≡ 0 mod 3")
    if r < 3:
        raise GraphValidationError("Hm requires r ≥ 3")
    if m < 1:
        raise GraphValidationError("Hm requires m ≥ 1")


def _layers(sizes: list[int]) -> list[range]:
    layers = []
    start = 0
    for size in sizes:
        layers.append(range(start, start + size))
        start += size
    return layers


def _layered_edges(layers: list[range]) -> set[tuple[int, int]]:
    edges = set()
    for i, layer in enumerate(layers):
        for a in layer:
            for b in layer:
                if a < b:
                    edges.add((a, b))
        if i + 1 < len(layers):
            for a in layer:
                for b in layers[i + 1]:
                    edges.add((a, b))
    return edges


def snake_cycle(layers: list[range], r: int) -> list[int]:
    """
    Ciclo por todos os vértices de N_1..N_{r-1}.

    Ida: todo N_1, depois N_i sem o vértice reservado w_i (i = 2..r-2), depois
    todo N_{r-1}. Volta: w_{r-2}, ..., w_2 e fecha no primeiro vértice de N_1.
    Exige |N_i| >= 2 nas camadas internas.
    """
    forward = list(layers[1])
    reserved = {}
    for i in range(2, r - 1):
        vertices = list(layers[i])
        reserved[i] = vertices[-1]
        forward.extend(vertices[:-1])
    forward.extend(layers[r - 1])
    back = [reserved[i] for i in range(r - 2, 1, -1)]
    return forward + back


def cycle_edges(cycle: list[int]) -> set[tuple[int, int]]:
    closed = zip(cycle, cycle[1:] + cycle[:1])
    return {(min(a, b), max(a, b)) for a, b in closed}


def _layer_of(sizes: list[int]) -> list[int]:
    return [i for i, size in enumerate(sizes) for _ in range(size)]


def build_gm(r: int, m: int) -> tuple[Graph, LayeredBlueprint]:
    validate_gm(r, m)
    sizes = gm_layer_sizes(r, m)
    layers = _layers(sizes)
    cycle = snake_cycle(layers, r)
    edges = _layered_edges(layers) - cycle_edges(cycle)

    graph = build_graph(sum(sizes), edges)
    blueprint = LayeredBlueprint(
        family="Gm",
        r=r,
        m=m,
        layer_sizes=sizes,
        layer_of=_layer_of(sizes),
        removed_cycle=cycle,
    )
    logger.info(f"🔗 G_m construído: r={r} m={m} n={graph.n}")
    return graph, blueprint


def build_hm(r: int, m: int) -> tuple[Graph, LayeredBlueprint]:
    validate_hm(r, m)
    sizes = hm_layer_sizes(r, m)
    layers = _layers(sizes)

    matchings = []
    for layer_index in (1, r):
        vertices = list(layers[layer_index])
        pairs = [(vertices[j], vertices[j + 1]) for j in range(0, len(vertices), 2)]
        matchings.append((layer_index, pairs))

    removed = {pair for _, pairs in matchings for pair in pairs}
    edges = _layered_edges(layers) - removed

    graph = build_graph(sum(sizes), edges)
    blueprint = LayeredBlueprint(
        family="Hm",
        r=r,
        m=m,
        layer_sizes=sizes,
        layer_of=_layer_of(sizes),
        removed_matchings=matchings,
    )
    logger.info(f"🧩 H_m construído: r={r} m={m} n={graph.n}")
    return graph, blueprint
