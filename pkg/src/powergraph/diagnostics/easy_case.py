"""
Caso r não divisível por 3: cada vértice recebe um certificado de que
|N^r(v)| >= ceil(r/3) delta.
"""

import logging

from powergraph.bounds.formulas import ceil_third
from powergraph.core.graph import (
    Graph,
    ball_mask,
    diameter,
    eccentricity,
    geodesic_from,
    is_connected,
    min_degree,
    neighborhood_of_path,
)
from powergraph.errors import HypothesisError
from powergraph.models.claims_models import VertexCertificate

logger = logging.getLogger(__name__)


def _check_hypotheses(g: Graph, r: int) -> None:
    if not g.loops_allowed:
        raise HypothesisError("loops not allowed")
    if not is_connected(g):
        raise HypothesisError("graph is disconnected")
    if r % 3 == 0:
        raise HypothesisError("r ≡ 0 mod 3")
    if r < 4:
        raise HypothesisError("r < 4")
    if diameter(g) < r:
        raise HypothesisError("diameter < r")


def easy_case_witness(g: Graph, r: int) -> list[VertexCertificate]:
    _check_hypotheses(g, r)
    threshold = ceil_third(r) * min_degree(g)
    certificates = []

    for v in range(g.n):
        ball = ball_mask(g, 1 << v, r)
        if eccentricity(g, v) >= r - 1:
            path = geodesic_from(g, v, r - 1)
            covered = neighborhood_of_path(g, path)
            certificate = VertexCertificate(
                vertex=v,
                kind="geodesic",
                geodesic=path.vertices,
                certified_count=covered.bit_count(),
                threshold=threshold,
                ball_size=ball.bit_count(),
                contained=covered & ~ball == 0,
            )
        else:
            # N^r(v) = V(G)
            certificate = VertexCertificate(
                vertex=v,
                kind="whole_graph",
                certified_count=g.n,
                threshold=threshold,
                ball_size=ball.bit_count(),
            )
        if not certificate.valid:
            logger.error(f"❌ Certificado inválido para o vértice {v}: {certificate.model_dump()}")
        certificates.append(certificate)

    logger.info(f"✅ {len(certificates)} vértices certificados com limiar {threshold}")
    return certificates
