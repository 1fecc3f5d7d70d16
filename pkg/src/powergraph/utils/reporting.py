"""
Exportação dos artefatos de `gen`: lista de arestas, blueprint e auditoria.
"""

import logging
import re
import unicodedata
from pathlib import Path
from typing import Optional

from powergraph.core.edgelist import write_edge_list
from powergraph.core.graph import Graph
from powergraph.models.construction_models import ConstructionAudit, LayeredBlueprint
from powergraph.utils.json_export import write_json

logger = logging.getLogger(__name__)


def slugify(value) -> str:
    """Normaliza string para ser usada como nome de arquivo."""
    value = str(value)
    value = unicodedata.normalize("NFKD", value).encode("ascii", "ignore").decode("ascii")
    value = re.sub(r"[^\w\s-]", "", value).strip().lower()
    return re.sub(r"[-\s]+", "_", value)


def default_output_path(output_dir: str | Path, family: str, description: str, prefix: str = "graph") -> Path:
    """<output_dir>/<family>/<prefix>_<slug>.txt, criando as pastas."""
    folder = Path(output_dir) / slugify(family)
    folder.mkdir(parents=True, exist_ok=True)

    slug = slugify(description)
    if len(slug) > 50:
        slug = slug[:50].rstrip("_")
    return folder / f"{prefix}_{slug}.txt"


def export_construction(
    graph: Graph,
    audit: ConstructionAudit,
    path: str | Path,
    blueprint: Optional[LayeredBlueprint] = None,
    comments: tuple[str, ...] = (),
) -> dict[str, str]:
    """
    Grava <path> (lista de arestas), <path>.blueprint (famílias em camadas) e
    <path>.audit.json.
    """
    edge_path = Path(path)
    edge_path.parent.mkdir(parents=True, exist_ok=True)
    paths = {"edges": str(write_edge_list(graph, edge_path, comments))}

    if blueprint is not None:
        blueprint_path = edge_path.with_name(edge_path.name + ".blueprint")
        blueprint_path.write_text(blueprint.to_text(), encoding="utf-8")
        paths["blueprint"] = str(blueprint_path)

    audit_path = edge_path.with_name(edge_path.name + ".audit.json")
    paths["audit"] = str(write_json(audit_path, audit))
    logger.info(f"✅ Artefatos salvos: {paths}")
    return paths
