"""
Leitura dos parâmetros compostos da CLI (faixas de m, conjuntos A) e montagem do RunConfig.
"""

import re
from typing import Any

from pydantic import ValidationError

from powergraph.errors import GraphValidationError
from powergraph.models.run_models import RunConfig

RANGE_PATTERN = re.compile(r"^(\d+)\.\.(\d+)$")


def parse_m_values(text: str) -> list[int]:
    """Aceita "1..5" (inclusivo), "1,3,8" ou um único inteiro."""
    text = text.strip()
    match = RANGE_PATTERN.match(text)
    if match:
        start, end = int(match.group(1)), int(match.group(2))
        if start > end:
            raise GraphValidationError(f"empty m range {text!r}")
        return list(range(start, end + 1))
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise GraphValidationError(f"cannot read m values from {text!r}") from e


def parse_int_set(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise GraphValidationError(f"cannot read integers from {text!r}") from e
    return sorted(set(values))


def build_run_config(subcommand: str, **params: Any) -> RunConfig:
    values = {key: value for key, value in params.items() if value is not None}
    try:
        return RunConfig(subcommand=subcommand, **values)
    except ValidationError as e:
        messages = "; ".join(error["msg"] for error in e.errors())
        raise GraphValidationError(messages) from e
