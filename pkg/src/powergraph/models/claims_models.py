"""
Modelos do diagnóstico de vértices suficientes e da auditoria das afirmações.
"""

from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, computed_field

from powergraph.constants import CLAIM_DESCRIPTIONS, ClaimStatus
from powergraph.models.rational import Rational


class SufficiencyMap(BaseModel):
    """sufficient[v] <=> ball_sizes[v] >= threshold = (r/3 + 1) * delta."""

    r: int
    delta: int
    threshold: int
    ball_sizes: Tuple[int, ...]
    sufficient: Tuple[bool, ...]

    @property
    def insufficient(self) -> List[int]:
        return [v for v, ok in enumerate(self.sufficient) if not ok]


class InsufficientPartition(BaseModel):
    """Classes X_1..X_l da relação d(x, y) <= 2 sobre os vértices insuficientes."""

    classes: List[List[int]] = Field(default_factory=list)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.classes)

    def class_of(self, v: int) -> Optional[List[int]]:
        return next((c for c in self.classes if v in c), None)


class ClaimResult(BaseModel):
    claim_id: str
    status: ClaimStatus
    checked: int = 0
    witness: Tuple[int, ...] = ()
    detail: str = ""
    # instância mais apertada (menor lhs - rhs)
    tight_lhs: Optional[Rational] = None
    tight_rhs: Optional[Rational] = None
    tight_witness: Tuple[int, ...] = ()

    @computed_field
    @property
    def description(self) -> str:
        return CLAIM_DESCRIPTIONS[self.claim_id]

    @property
    def tight_gap(self) -> Optional[Rational]:
        if self.tight_lhs is None or self.tight_rhs is None:
            return None
        return self.tight_lhs - self.tight_rhs

    def to_line(self) -> str:
        line = f"{self.claim_id} {self.status}"
        if self.status == "fail":
            line += " witness=" + ",".join(map(str, self.witness))
        return line


class ClaimsReport(BaseModel):
    r: int
    applicable: bool = True
    reason: str = ""
    delta: Optional[int] = None
    exhaustive: bool = True
    partition: Optional[InsufficientPartition] = None
    results: List[ClaimResult] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.applicable and all(result.status != "fail" for result in self.results)

    def get(self, claim_id: str) -> ClaimResult:
        for result in self.results:
            if result.claim_id == claim_id:
                return result
        raise KeyError(claim_id)

    def to_lines(self) -> List[str]:
        if not self.applicable:
            return [f"inapplicable reason={self.reason}"]
        return [result.to_line() for result in self.results]


class VertexCertificate(BaseModel):
    """
    Certificado do caso r não divisível por 3: uma geodésica de comprimento r-1
    saindo de v, ou o grafo inteiro quando tudo está a distância <= r-1 de v.
    """

    vertex: int
    kind: Literal["geodesic", "whole_graph"]
    geodesic: Optional[Tuple[int, ...]] = None
    certified_count: int
    threshold: int
    ball_size: int
    contained: bool = Field(True, description="N(V(P)) esta contido em N^r(v)")

    @property
    def valid(self) -> bool:
        return self.contained and self.threshold <= self.certified_count <= self.ball_size
