"""
Vereditos: decide qual teorema se aplica a um grafo, calcula a cota e compara
com o observado em aritmética racional exata.
"""

import logging
from fractions import Fraction
from functools import cached_property
from typing import Callable, Optional

from powergraph.bounds.formulas import (
    cayley_ratio_bound,
    loops_edge_bound,
    min_degree_edge_bound,
    regular_ratio_bound,
)
from powergraph.constants import (
    EXTERNAL_R3_PROVENANCE,
    THEOREM_CAYLEY,
    THEOREM_LOOPS,
    THEOREM_MIN_DEGREE,
    THEOREM_REGULAR,
)
from powergraph.core.graph import Graph, diameter, is_connected, is_regular, min_degree
from powergraph.core.power import PowerResult, graph_power
from powergraph.models.bound_models import Verdict

logger = logging.getLogger(__name__)


class _Observation:
    """Quantidades do grafo calculadas uma vez e compartilhadas entre teoremas."""

    def __init__(self, g: Graph, r: int, workers: Optional[int] = None):
        self.g = g
        self.r = r
        self.workers = workers

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    @cached_property
    def diameter(self) -> float:
        return diameter(self.g)

    @cached_property
    def delta(self) -> int:
        return min_degree(self.g)

    @cached_property
    def power(self) -> PowerResult:
        return graph_power(self.g, self.r, workers=self.workers)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.power.power_edges, self.power.base_edges)


def _inapplicable(theorem: str, reason: str) -> Verdict:
    return Verdict(theorem=theorem, applicable=False, reason=reason)


def _common_hypotheses(obs: _Observation, min_r: int) -> Optional[str]:
    if not obs.connected:
        return "graph is disconnected"
    if obs.r < min_r:
        return f"r < {min_r}"
    if obs.diameter < obs.r:
        return "diameter < r"
    return None


def _provenance(r: int) -> str:
    return EXTERNAL_R3_PROVENANCE if r == 3 else "proved"


def _regular(obs: _Observation) -> Verdict:
    g = obs.g
    if g.loops_allowed:
        return _inapplicable(THEOREM_REGULAR, "loops allowed")
    if not is_regular(g):
        return _inapplicable(THEOREM_REGULAR, "graph is not regular")
    reason = _common_hypotheses(obs, min_r=3)
    if reason:
        return _inapplicable(THEOREM_REGULAR, reason)
    return Verdict(
        theorem=THEOREM_REGULAR,
        applicable=True,
        bound=regular_ratio_bound(obs.r),
        observed=obs.ratio,
        provenance=_provenance(obs.r),
    )


def _min_degree(obs: _Observation) -> Verdict:
    if obs.g.loops_allowed:
        return _inapplicable(THEOREM_MIN_DEGREE, "loops allowed")
    reason = _common_hypotheses(obs, min_r=3)
    if reason:
        return _inapplicable(THEOREM_MIN_DEGREE, reason)
    return Verdict(
        theorem=THEOREM_MIN_DEGREE,
        applicable=True,
        bound=min_degree_edge_bound(obs.r, obs.delta, obs.g.n),
        observed=Fraction(obs.power.power_edges),
        provenance=_provenance(obs.r),
    )


def _loops(obs: _Observation) -> Verdict:
    if not obs.g.loops_allowed:
        return _inapplicable(THEOREM_LOOPS, "loops not allowed")
    reason = _common_hypotheses(obs, min_r=6)
    if reason:
        return _inapplicable(THEOREM_LOOPS, reason)
    return Verdict(
        theorem=THEOREM_LOOPS,
        applicable=True,
        bound=loops_edge_bound(obs.r, obs.delta, obs.g.n),
        observed=Fraction(obs.power.power_edges),
    )


def _cayley(obs: _Observation) -> Verdict:
    if not obs.connected:
        return _inapplicable(THEOREM_CAYLEY, "graph is disconnected")
    if obs.r < 1:
        return _inapplicable(THEOREM_CAYLEY, "r < 1")
    if obs.r >= obs.diameter:
        return _inapplicable(THEOREM_CAYLEY, "r ≥ diameter")
    return Verdict(
        theorem=THEOREM_CAYLEY,
        applicable=True,
        bound=cayley_ratio_bound(obs.r),
        observed=obs.ratio,
    )


_THEOREMS: dict[str, Callable[[_Observation], Verdict]] = {
    THEOREM_CAYLEY: _cayley,
    THEOREM_LOOPS: _loops,
    THEOREM_REGULAR: _regular,
    THEOREM_MIN_DEGREE: _min_degree,
}


def _most_specific(g: Graph, cayley: bool) -> str:
    if cayley:
        return THEOREM_CAYLEY
    if g.loops_allowed:
        return THEOREM_LOOPS
    if is_regular(g):
        return THEOREM_REGULAR
    return THEOREM_MIN_DEGREE


def verify(g: Graph, r: int, cayley: bool = False, workers: Optional[int] = None) -> Verdict:
    """
    Veredito do teorema mais específico para g: Cayley (se marcado), laços,
    regular ou grau mínimo, nessa ordem. Inaplicabilidade é um valor, nunca
    uma exceção.
    """
    theorem = _most_specific(g, cayley)
    verdict = _THEOREMS[theorem](_Observation(g, r, workers))
    logger.info(f"📊 {theorem}: {verdict.to_line()}")
    if verdict.status == "violation":
        logger.error(f"❌ Violação de {theorem} com r={r}: {verdict.to_line()}")
    return verdict


def verify_all(g: Graph, r: int, cayley: bool = False, workers: Optional[int] = None) -> list[Verdict]:
    """Um veredito por teorema; o de Cayley só entra quando o grafo é marcado como tal."""
    obs = _Observation(g, r, workers)
    return [
        check(obs)
        for theorem, check in _THEOREMS.items()
        if cayley or theorem != THEOREM_CAYLEY
    ]
