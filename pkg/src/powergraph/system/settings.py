import logging
import os
from functools import lru_cache
from pathlib import Path

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field

from powergraph.constants import DEFAULT_SEED

logger = logging.getLogger(__name__)

load_dotenv()

CONFIG_PATH = Path(__file__).parent / "config" / "defaults.yaml"

_ENV_KEYS = {
    "threads": "POWERGRAPH_THREADS",
    "attempt_budget": "POWERGRAPH_ATTEMPT_BUDGET",
    "exhaustive_limit": "POWERGRAPH_EXHAUSTIVE_LIMIT",
    "sample_size": "POWERGRAPH_SAMPLE_SIZE",
    "default_seed": "POWERGRAPH_DEFAULT_SEED",
    "output_dir": "POWERGRAPH_OUTPUT_DIR",
}


class Settings(BaseModel):
    threads: int = Field(1, ge=1, description="Limite de threads para BFS, linhas de tabela e ensaios")
    attempt_budget: int = Field(1000, ge=1, description="Tentativas do modelo de configuracao")
    exhaustive_limit: int = Field(300, ge=1, description="Maior ordem auditada exaustivamente")
    sample_size: int = Field(100_000, ge=1, description="Tuplas amostradas acima do limite")
    default_seed: int = Field(DEFAULT_SEED, ge=0, description="Semente quando --seed não é informado")
    output_dir: str = "outputs"


def _read_defaults() -> dict:
    if not CONFIG_PATH.exists():
        logger.warning(f"⚠️ Arquivo de configuração ausente: {CONFIG_PATH}")
        return {}
    with open(CONFIG_PATH, "r", encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


@lru_cache(maxsize=1)
def load_settings() -> Settings:
    values = _read_defaults()
    for field, env_key in _ENV_KEYS.items():
        raw = os.getenv(env_key)
        if raw:
            values[field] = raw
    settings = Settings(**values)
    logger.info(f"📊 Configuração carregada: {settings.model_dump()}")
    return settings
