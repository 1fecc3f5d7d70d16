"""
Modelos de execução da CLI: parâmetros, resultado de comando e ensaios da varredura.
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from powergraph.constants import DEFAULT_FORMAT, DEFAULT_TRIALS, Family, OutputFormat
from powergraph.models.bound_models import Verdict

Subcommand = Literal["gen", "power", "verify", "claims", "convergence", "scan"]


class RunConfig(BaseModel):
    subcommand: Subcommand
    family: Optional[Family] = None
    r: Optional[int] = Field(None, ge=1)
    m: Optional[int] = None
    m_values: List[int] = Field(default_factory=list)
    n: Optional[int] = Field(None, ge=0)
    d: Optional[int] = Field(None, ge=0)
    p: Optional[int] = None
    a: List[int] = Field(default_factory=list)
    seed: Optional[int] = None
    trials: int = Field(DEFAULT_TRIALS, ge=1)
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    format: OutputFormat = DEFAULT_FORMAT
    loops: bool = False
    cayley: bool = False
    all_theorems: bool = False

    @model_validator(mode="after")
    def _required_fields(self) -> "RunConfig":
        needs_r = {"power", "verify", "claims", "convergence", "scan"}
        if self.subcommand in needs_r and self.r is None:
            raise ValueError(f"{self.subcommand} requires --r")
        if self.subcommand in {"power", "verify", "claims"} and not self.input_path:
            raise ValueError(f"{self.subcommand} requires an input file")
        if self.subcommand == "scan" and (self.n is None or self.d is None):
            raise ValueError("scan requires --n and --d")
        return self


class CommandResult(BaseModel):
    subcommand: Subcommand
    exit_code: int
    lines: List[str] = Field(default_factory=list)
    records: List[Dict[str, Any]] = Field(default_factory=list)
    error: Optional[str] = None


TrialStatus = Literal["holds", "violation", "inapplicable", "error"]


class TrialOutcome(BaseModel):
    trial: int
    seed: int
    status: TrialStatus
    verdicts: List[Verdict] = Field(default_factory=list)
    error: str = ""

    def to_line(self) -> str:
        if self.status == "error":
            return f"trial={self.trial} seed={self.seed} error={self.error}"
        parts = [f"{verdict.theorem}={verdict.status}" for verdict in self.verdicts]
        return f"trial={self.trial} seed={self.seed} " + " ".join(parts)
