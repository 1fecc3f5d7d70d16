from typing import Dict, List

from pydantic import BaseModel

from powergraph.models.run_models import TrialOutcome


class ScanState(BaseModel):
    n: int
    d: int
    r: int
    trials: int
    seed: int = 0
    loops: bool = False
    trial_seeds: List[int] = []
    outcomes: Dict[int, TrialOutcome] = {}

    def ordered(self) -> List[TrialOutcome]:
        return [self.outcomes[i] for i in sorted(self.outcomes)]

    def count(self, status: str) -> int:
        return sum(1 for outcome in self.outcomes.values() if outcome.status == status)

    @property
    def violations(self) -> int:
        return self.count("violation")
