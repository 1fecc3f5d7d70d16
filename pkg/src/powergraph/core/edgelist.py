"""
Formato texto de lista de arestas.

Linha 1: "n=<int> loops=<0|1>"; depois um par "u v" por linha. Comentários com '#'.
"""

import logging
import re
from pathlib import Path
from typing import Iterable

from powergraph.core.graph import Graph, build_graph
from powergraph.errors import EdgeListParseError, GraphValidationError

logger = logging.getLogger(__name__)

HEADER_PATTERN = re.compile(r"^n=([0-9]+)\s+loops=([01])$")
EDGE_PATTERN = re.compile(r"^([0-9]+)\s+([0-9]+)$")


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n={g.n} loops={int(g.loops_allowed)}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []

    for line_number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        if header is None:
            match = HEADER_PATTERN.match(line)
            if not match:
                raise EdgeListParseError(line_number, f"expected 'n=<int> loops=<0|1>', got {line!r}")
            header = (int(match.group(1)), match.group(2) == "1")
            continue

        n, loops_allowed = header
        match = EDGE_PATTERN.match(line)
        if not match:
            raise EdgeListParseError(line_number, f"expected 'u v', got {line!r}")
        u, v = int(match.group(1)), int(match.group(2))
        if u >= n or v >= n:
            raise EdgeListParseError(line_number, f"vertex out of range 0..{n - 1}")
        if u == v and not loops_allowed:
            raise EdgeListParseError(line_number, f"loop at {u} but loops=0")
        edges.append((u, v))

    if header is None:
        raise EdgeListParseError(0, "missing header line 'n=<int> loops=<0|1>'")

    n, loops_allowed = header
    try:
        return build_graph(n, edges, loops_allowed=loops_allowed)
    except GraphValidationError as e:
        raise EdgeListParseError(0, str(e)) from e


def read_edge_list(path: str | Path) -> Graph:
    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"Arquivo não encontrado: {path}")
    raw = file_path.read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        # linha do primeiro byte inválido
        line_number = raw[: e.start].count(b"\n") + 1
        raise EdgeListParseError(line_number, f"invalid UTF-8 byte at offset {e.start}") from e
    graph = parse_edge_list(text)
    logger.info(f"📄 Grafo lido de {file_path}: n={graph.n}")
    return graph


def write_edge_list(g: Graph, path: str | Path, comments: Iterable[str] = ()) -> Path:
    file_path = Path(path)
    file_path.write_text(format_edge_list(g, comments), encoding="utf-8")
    logger.info(f"✅ Lista de arestas salva: {file_path}")
    return file_path
