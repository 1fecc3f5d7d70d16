"""
Modelos das construções em camadas e das auditorias.
"""

from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from powergraph.models.rational import Rational


class LayeredBlueprint(BaseModel):
    """
    Estrutura N_0..N_k usada por G_m e H_m.

    Vértices numerados de forma contígua e crescente com o índice da camada.
    """

    family: Literal["Gm", "Hm"]
    r: int
    m: int
    layer_sizes: List[int]
    layer_of: List[int]
    removed_cycle: Optional[List[int]] = None
    removed_matchings: List[Tuple[int, List[Tuple[int, int]]]] = Field(default_factory=list)

    def layer_start(self, i: int) -> int:
        return sum(self.layer_sizes[:i])

    def layer_vertices(self, i: int) -> range:
        start = self.layer_start(i)
        return range(start, start + self.layer_sizes[i])

    def to_text(self) -> str:
        lines = [f"family={self.family} r={self.r} m={self.m}"]
        for i in range(len(self.layer_sizes)):
            vertices = self.layer_vertices(i)
            lines.append(f"layer {i} {vertices.start}..{vertices.stop - 1}")
        if self.removed_cycle:
            lines.append("cycle " + " ".join(map(str, self.removed_cycle)))
        for layer, pairs in self.removed_matchings:
            lines.append(f"matching {layer} " + " ".join(f"{u}-{v}" for u, v in pairs))
        return "\n".join(lines) + "\n"


class ConstructionAudit(BaseModel):
    """Compara as formas fechadas declaradas com o grafo construído."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    family: str
    claimed_order: int
    actual_order: int
    claimed_degree: int
    regular_degree: int | Literal["irregular"]
    connected: bool
    claimed_diameter: Optional[int] = None
    diameter: Optional[int] = Field(None, description="None quando o grafo e desconexo")
    r: Optional[int] = None
    claimed_power_edges: Optional[int] = None
    power_edges: Optional[int] = None
    ratio: Optional[Rational] = None
    checks: dict[str, bool] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def audit_line(self) -> str:
        diameter = "infinite" if self.diameter is None else self.diameter
        verdict = "PASS" if self.passed else "FAIL"
        return f"order={self.actual_order} degree={self.regular_degree} diameter={diameter} {verdict}"


class ConvergenceRow(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    m: int
    order: int
    ratio: Rational
    bound: Rational
    gap: Rational
    audit_passed: bool


class ConvergenceTable(BaseModel):
    family: Literal["Gm", "Hm"]
    r: int
    rows: List[ConvergenceRow]

    @property
    def gap_strictly_decreasing(self) -> bool:
        gaps = [row.gap for row in self.rows]
        return all(row.gap > 0 for row in self.rows) and all(a > b for a, b in zip(gaps, gaps[1:]))

    def to_lines(self) -> List[str]:
        lines = ["m\torder\tratio\tbound\tgap"]
        for row in self.rows:
            lines.append(f"{row.m}\t{row.order}\t{row.ratio}\t{row.bound}\t{row.gap}")
        return lines
