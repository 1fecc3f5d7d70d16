import logging
from typing import Any

from powergraph.bounds.verdicts import verify, verify_all
from powergraph.constants import THEOREM_MIN_DEGREE, THEOREM_REGULAR
from powergraph.core.power import add_loops
from powergraph.generators.random_regular import random_regular_connected
from powergraph.models.run_models import TrialOutcome

logger = logging.getLogger(__name__)


class TrialExecutor:
    @staticmethod
    def execute_with_error_handling(label: str, executor_func, *args, **kwargs) -> Any:
        try:
            return executor_func(*args, **kwargs)
        except Exception as e:
            error_msg = f"Erro na execucao de {label}: {str(e)}"
            logger.error(f"❌ {error_msg}")
            return error_msg


def _status(verdicts) -> str:
    statuses = {verdict.status for verdict in verdicts}
    if "violation" in statuses:
        return "violation"
    if "holds" in statuses:
        return "holds"
    return "inapplicable"


def run_trial(trial: int, seed: int, n: int, d: int, r: int, loops: bool = False) -> TrialOutcome:
    """Um grafo aleatório, os teoremas regular e de grau mínimo e, com loops, o teorema com laços."""
    graph = random_regular_connected(n, d, seed)
    verdicts = [
        verdict
        for verdict in verify_all(graph, r)
        if verdict.theorem in (THEOREM_REGULAR, THEOREM_MIN_DEGREE)
    ]
    if loops:
        verdicts.append(verify(add_loops(graph), r))
    return TrialOutcome(trial=trial, seed=seed, status=_status(verdicts), verdicts=verdicts)


class RandomRegularTrialExecutor(TrialExecutor):
    @staticmethod
    def run(trial: int, seed: int, n: int, d: int, r: int, loops: bool = False) -> TrialOutcome:
        result = TrialExecutor.execute_with_error_handling(
            f"ensaio {trial}",
            run_trial,
            trial=trial,
            seed=seed,
            n=n,
            d=d,
            r=r,
            loops=loops,
        )
        if isinstance(result, TrialOutcome):
            return result
        return TrialOutcome(trial=trial, seed=seed, status="error", error=result)
