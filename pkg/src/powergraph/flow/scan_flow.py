"""
Varredura de teoremas sobre regulares aleatórios conexos.

Toda a aleatoriedade vem de uma única semente: cada ensaio recebe uma semente
filha de np.random.SeedSequence(seed). Os ensaios rodam em paralelo, mas a
saída segue sempre a ordem do índice do ensaio.
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Optional

import numpy as np

from powergraph.flow.state import ScanState
from powergraph.flow.trial_executors import RandomRegularTrialExecutor
from powergraph.models.run_models import TrialOutcome
from powergraph.utils.console_time import timed

logger = logging.getLogger(__name__)


def trial_seeds(seed: int, trials: int) -> list[int]:
    children = np.random.SeedSequence(seed).spawn(trials)
    return [int(child.generate_state(1)[0]) for child in children]


class ScanFlow:
    def __init__(self, state: ScanState, workers: Optional[int] = None):
        self.state = state
        self.workers = workers or 1

    def initialize_scan(self) -> str:
        logger.info(f"🚀 Iniciando varredura: n={self.state.n} d={self.state.d} r={self.state.r}")
        self.state.trial_seeds = trial_seeds(self.state.seed, self.state.trials)
        self.state.outcomes = {}
        return "initialized"

    def _run_one(self, trial: int) -> TrialOutcome:
        return RandomRegularTrialExecutor.run(
            trial=trial,
            seed=self.state.trial_seeds[trial],
            n=self.state.n,
            d=self.state.d,
            r=self.state.r,
            loops=self.state.loops,
        )

    def run_all_trials_parallel(self) -> str:
        """Executa todos os ensaios em paralelo"""
        trials = range(self.state.trials)
        if self.workers <= 1:
            for trial in trials:
                self.state.outcomes[trial] = self._run_one(trial)
            return "all_completed"

        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            future_to_trial = {executor.submit(self._run_one, trial): trial for trial in trials}

            for future in as_completed(future_to_trial):
                trial = future_to_trial[future]
                try:
                    self.state.outcomes[trial] = future.result()
                except Exception as e:
                    self.state.outcomes[trial] = TrialOutcome(
                        trial=trial,
                        seed=self.state.trial_seeds[trial],
                        status="error",
                        error=str(e),
                    )
        return "all_completed"

    def summarize(self) -> list[str]:
        lines = [outcome.to_line() for outcome in self.state.ordered()]
        lines.append(
            f"trials={self.state.trials} holds={self.state.count('holds')} "
            f"inapplicable={self.state.count('inapplicable')} errors={self.state.count('error')}"
        )
        lines.append(f"violations={self.state.violations}")
        return lines

    def kickoff(self) -> list[str]:
        with timed("SCAN_FLOW"):
            self.initialize_scan()
            self.run_all_trials_parallel()
            lines = self.summarize()

        if self.state.violations:
            logger.error(f"❌ {self.state.violations} violações encontradas")
        else:
            logger.info("✅ Varredura concluída sem violações")
        return lines
