"""
Veredito de um teorema sobre um grafo concreto.
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from powergraph.models.rational import Rational

VerdictStatus = Literal["holds", "violation", "inapplicable"]


class Verdict(BaseModel):
    """
    holds <=> observed >= bound, comparado em racionais exatos.

    Um veredito inaplicável nunca carrega holds=True: reason nomeia a hipótese
    que falhou.
    """

    theorem: str
    applicable: bool
    reason: str = ""
    bound: Optional[Rational] = None
    observed: Optional[Rational] = None
    holds: Optional[bool] = None
    margin: Optional[Rational] = None
    provenance: str = Field("proved", description="origem da cota (r=3 vem de resultado externo)")

    @model_validator(mode="after")
    def _consistent(self) -> "Verdict":
        if not self.applicable:
            if self.holds is not None:
                raise ValueError("an inapplicable verdict cannot hold or fail")
            return self
        if self.bound is None or self.observed is None:
            raise ValueError("an applicable verdict needs bound and observed")
        self.margin = self.observed - self.bound
        self.holds = self.observed >= self.bound
        return self

    @property
    def status(self) -> VerdictStatus:
        if not self.applicable:
            return "inapplicable"
        return "holds" if self.holds else "violation"

    def to_line(self) -> str:
        if not self.applicable:
            return f"inapplicable reason={self.reason}"
        return f"{self.status} bound={self.bound} observed={self.observed} margin={self.margin}"

    def to_record(self) -> dict:
        """Registro plano com chaves string; racionais como "p/q"."""
        return self.model_dump(mode="json")
