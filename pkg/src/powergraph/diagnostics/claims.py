"""
Auditoria das afirmações C1..C8 do caso 3 | r sobre um grafo com laços.

Cada afirmação vira uma verificação sobre as tuplas de vértices em que ela se
aplica. Abaixo do limite exaustivo todas as tuplas são checadas; acima dele os
pares são amostrados com um gerador numpy semeado. Falhas carregam uma
testemunha que pode ser rechecada com as primitivas de distância.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional

import numpy as np

from powergraph.bounds.formulas import regular_ratio_bound
from powergraph.constants import CLAIM_IDS
from powergraph.core.graph import Graph, bfs_layers, iter_bits, mask_of, trace_geodesic
from powergraph.core.power import graph_power
from powergraph.diagnostics.sufficiency import classify, partition_insufficient
from powergraph.errors import ClaimViolationError, HypothesisError
from powergraph.models.claims_models import (
    ClaimResult,
    ClaimsReport,
    InsufficientPartition,
    SufficiencyMap,
)
from powergraph.system.settings import load_settings

logger = logging.getLogger(__name__)


class _DistanceCache:
    """Camadas de BFS por fonte, calculadas sob demanda."""

    def __init__(self, g: Graph):
        self.g = g
        self._layers: dict[int, list[int]] = {}
        self._dist: dict[int, list[Optional[int]]] = {}

    def layers(self, x: int) -> list[int]:
        if x not in self._layers:
            self._layers[x] = bfs_layers(self.g, 1 << x)
        return self._layers[x]

    def dist(self, x: int, y: int) -> Optional[int]:
        if x not in self._dist:
            row: list[Optional[int]] = [None] * self.g.n
            for k, layer in enumerate(self.layers(x)):
                for v in iter_bits(layer):
                    row[v] = k
            self._dist[x] = row
        return self._dist[x][y]

    def eccentricity(self, x: int) -> int:
        return len(self.layers(x)) - 1

    def ball(self, x: int, k: int) -> int:
        mask = 0
        for layer in self.layers(x)[: max(k, -1) + 1]:
            mask |= layer
        return mask


class _Tracker:
    """Acumula instâncias de uma afirmação: contagem, primeira falha e a mais apertada."""

    def __init__(self, claim_id: str):
        self.claim_id = claim_id
        self.checked = 0
        self.failure: Optional[tuple[int, ...]] = None
        self.detail = ""
        self.tight: Optional[tuple[Fraction, Fraction, tuple[int, ...]]] = None

    def record(self, lhs, rhs, witness: Iterable[int], ok: Optional[bool] = None) -> None:
        lhs, rhs, witness = Fraction(lhs), Fraction(rhs), tuple(witness)
        ok = lhs >= rhs if ok is None else ok
        self.checked += 1
        if self.tight is None or lhs - rhs < self.tight[0] - self.tight[1]:
            self.tight = (lhs, rhs, witness)
        if not ok and self.failure is None:
            self.failure = witness
            self.detail = f"lhs={lhs} rhs={rhs}"

    def fail(self, witness: Iterable[int], detail: str) -> None:
        if self.failure is None:
            self.failure = tuple(witness)
            self.detail = detail

    def result(self) -> ClaimResult:
        if self.failure is not None:
            status = "fail"
        elif self.checked == 0:
            status = "vacuous"
        else:
            status = "pass"
        tight_lhs, tight_rhs, tight_witness = self.tight or (None, None, ())
        return ClaimResult(
            claim_id=self.claim_id,
            status=status,
            checked=self.checked,
            witness=self.failure or (),
            detail=self.detail,
            tight_lhs=tight_lhs,
            tight_rhs=tight_rhs,
            tight_witness=tight_witness,
        )


def _all_pairs(n: int) -> Iterator[tuple[int, int]]:
    return combinations(range(n), 2)


def _sampled_pairs(rng: np.random.Generator, first: list[int], n: int, size: int) -> Iterator[tuple[int, int]]:
    xs = rng.choice(np.array(first), size=size)
    ys = rng.integers(0, n, size=size)
    for x, y in zip(xs, ys):
        if x != y:
            yield int(x), int(y)


def _insufficient_pairs(smap: SufficiencyMap, n: int) -> Iterator[tuple[int, int]]:
    """Pares com ao menos um membro insuficiente, cada par uma vez."""
    insufficient = smap.insufficient
    for x in insufficient:
        for y in range(n):
            if y == x or (not smap.sufficient[y] and y < x):
                continue
            yield x, y


def _check_geodesics(g: Graph, cache: _DistanceCache, delta: int, pairs: Iterable[tuple[int, int]]) -> ClaimResult:
    tracker = _Tracker("C1")
    for x, y in pairs:
        layers = cache.layers(x)
        if cache.dist(x, y) is None:
            continue
        path = trace_geodesic(g, layers, y)
        covered = 0
        for v in path.vertices:
            covered |= g.adjacency[v]
        rhs = (path.length // 3 + 1) * delta
        tracker.record(covered.bit_count(), rhs, path.vertices)
    return tracker.result()


def _check_eccentricity(smap: SufficiencyMap, cache: _DistanceCache) -> ClaimResult:
    tracker = _Tracker("C2")
    for v in smap.insufficient:
        tracker.record(cache.eccentricity(v), smap.r + 1, (v,))
    return tracker.result()


def _check_pairs(
    g: Graph,
    smap: SufficiencyMap,
    cache: _DistanceCache,
    pairs: Iterable[tuple[int, int]],
) -> tuple[ClaimResult, ClaimResult, ClaimResult]:
    """C3, C4 e C5: o par qualificado tem um membro suficiente."""
    r = smap.r
    c3, c4, c5 = _Tracker("C3"), _Tracker("C4"), _Tracker("C5")
    full = g.full_mask

    for x, y in pairs:
        d = cache.dist(x, y)
        best = max(smap.ball_sizes[x], smap.ball_sizes[y])
        if 2 < d < r:
            c3.record(best, smap.threshold, (x, y))
        if d == r:
            c5.record(best, smap.threshold, (x, y))
        if d in (r, r + 1):
            far = full & ~cache.ball(x, r - 2) & ~cache.ball(y, r - 2)
            if far:
                z = (far & -far).bit_length() - 1
                c4.record(best, smap.threshold, (x, y, z))

    return c3.result(), c4.result(), c5.result()


def _class_distance(g: Graph, a: list[int], b: list[int]) -> int:
    target = mask_of(b)
    for k, layer in enumerate(bfs_layers(g, mask_of(a))):
        if layer & target:
            return k
    raise HypothesisError("graph is disconnected")


def _check_order(g: Graph, smap: SufficiencyMap, partition: InsufficientPartition) -> ClaimResult:
    """C6 e os fatos de distância entre classes usados na sua prova."""
    tracker = _Tracker("C6")
    classes = partition.classes
    if not classes:
        return tracker.result()

    r = smap.r
    at_r_plus_one = []
    for i, j in combinations(range(len(classes)), 2):
        d = _class_distance(g, classes[i], classes[j])
        if d < r + 1:
            tracker.fail((classes[i][0], classes[j][0]), f"class distance {d} < r+1")
        elif d == r + 1:
            at_r_plus_one.append((classes[i][0], classes[j][0]))
    if at_r_plus_one and partition.l != 2:
        tracker.fail(at_r_plus_one[0], f"classes at distance r+1 but l={partition.l}")

    rhs = Fraction(r + 3, 6) * smap.delta * partition.l
    tracker.record(g.n, rhs, tuple(c[0] for c in classes))
    return tracker.result()


def _check_insufficient_balls(smap: SufficiencyMap, partition: InsufficientPartition) -> ClaimResult:
    tracker = _Tracker("C7")
    for cls in partition.classes:
        rhs = len(cls) + (smap.r // 3) * smap.delta
        for x in cls:
            tracker.record(smap.ball_sizes[x], rhs, (x,))
    return tracker.result()


def _check_final_inequality(
    g: Graph, smap: SufficiencyMap, partition: InsufficientPartition, workers: Optional[int]
) -> ClaimResult:
    """C8, junto com a identidade 2e(G^r) = soma |N^r(v)| + |G|."""
    tracker = _Tracker("C8")
    n = g.n
    power_edges = graph_power(g, smap.r, workers=workers).power_edges
    representatives = tuple(c[0] for c in partition.classes)

    if 2 * power_edges != sum(smap.ball_sizes) + n:
        tracker.fail(representatives, "loop identity 2e(G^r) = sum |N^r(v)| + |G| fails")

    lhs = 2 * power_edges - regular_ratio_bound(smap.r) * smap.delta * n - n
    half_delta = Fraction(smap.delta, 2)
    rhs = sum(((len(c) - half_delta) ** 2 for c in partition.classes), Fraction(0))
    tracker.record(lhs, rhs, representatives)
    return tracker.result()


def audit_claims(
    g: Graph,
    r: int,
    seed: int = 0,
    exhaustive_limit: Optional[int] = None,
    sample_size: Optional[int] = None,
    workers: Optional[int] = None,
) -> ClaimsReport:
    """
    Roda C1..C8. Grafos fora das hipóteses geram um relatório inaplicável;
    falhas viram entradas do relatório, nunca exceções.
    """
    settings = load_settings()
    limit = exhaustive_limit or settings.exhaustive_limit
    size = sample_size or settings.sample_size

    try:
        smap = classify(g, r)
    except HypothesisError as e:
        logger.warning(f"⚠️ Auditoria inaplicável: {e.hypothesis}")
        return ClaimsReport(r=r, applicable=False, reason=e.hypothesis)

    cache = _DistanceCache(g)
    exhaustive = g.n <= limit
    rng = np.random.default_rng(seed)

    if exhaustive:
        geodesic_pairs = _all_pairs(g.n)
        claim_pairs = _insufficient_pairs(smap, g.n)
    else:
        geodesic_pairs = _sampled_pairs(rng, list(range(g.n)), g.n, size)
        insufficient = smap.insufficient
        claim_pairs = _sampled_pairs(rng, insufficient, g.n, size) if insufficient else iter(())

    results = [
        _check_geodesics(g, cache, smap.delta, geodesic_pairs),
        _check_eccentricity(smap, cache),
    ]
    results.extend(_check_pairs(g, smap, cache, claim_pairs))

    try:
        partition = partition_insufficient(smap, g)
    except ClaimViolationError as e:
        logger.error(f"❌ {e}")
        partition = None
        failed = ClaimResult(claim_id="C3", status="fail", witness=e.witness, detail=str(e))
        results = [failed if result.claim_id == "C3" else result for result in results]

    if partition is not None:
        results.append(_check_order(g, smap, partition))
        results.append(_check_insufficient_balls(smap, partition))
        results.append(_check_final_inequality(g, smap, partition, workers))
    else:
        for claim_id in ("C6", "C7", "C8"):
            results.append(ClaimResult(claim_id=claim_id, status="vacuous", detail="no valid partition"))

    report = ClaimsReport(
        r=r,
        delta=smap.delta,
        exhaustive=exhaustive,
        partition=partition,
        results=sorted(results, key=lambda result: CLAIM_IDS.index(result.claim_id)),
    )
    failing = [result.claim_id for result in report.results if result.status == "fail"]
    if failing:
        logger.error(f"❌ Afirmações falharam: {failing}")
    else:
        logger.info(f"✅ Auditoria das afirmações concluída (exaustiva={exhaustive})")
    return report
