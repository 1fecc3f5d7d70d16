"""
Hierarquia de exceções do powergraph.
"""

from typing import Sequence


class PowerGraphError(Exception):
    """Erro base do pacote."""


class GraphValidationError(PowerGraphError, ValueError):
    """Entrada inválida: vértice fora do intervalo, laço proibido, parâmetro fora do domínio."""


class EdgeListParseError(GraphValidationError):
    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class DisconnectedError(GraphValidationError):
    def __init__(self, x: int, y: int):
        self.x = x
        self.y = y
        super().__init__(f"vertices {x} and {y} are in different components")


class EmptyGraphError(GraphValidationError):
    """Razão pedida para um grafo sem arestas."""


class HypothesisError(PowerGraphError):
    """Hipótese de um teorema ou afirmação não satisfeita."""

    def __init__(self, hypothesis: str):
        self.hypothesis = hypothesis
        super().__init__(hypothesis)


class ClaimViolationError(PowerGraphError):
    def __init__(self, message: str, witness: Sequence[int]):
        self.witness = tuple(witness)
        super().__init__(f"{message} (witness={','.join(map(str, self.witness))})")


class RegularGenerationError(PowerGraphError):
    def __init__(self, n: int, d: int, attempts: int):
        self.attempts = attempts
        super().__init__(
            f"no connected simple {d}-regular graph on {n} vertices after {attempts} attempts"
        )
