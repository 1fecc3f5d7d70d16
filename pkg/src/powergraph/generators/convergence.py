"""
Tabela de convergência: razão e(X^r)/e(X) das famílias extremais contra o
limite quando m cresce.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Iterable, Optional

from powergraph.bounds.formulas import BoundValue, regular_ratio_bound
from powergraph.generators.audit import audit_layered
from powergraph.generators.layered import build_gm, build_hm, validate_gm, validate_hm
from powergraph.models.construction_models import ConvergenceRow, ConvergenceTable
from powergraph.utils.console_time import timed

logger = logging.getLogger(__name__)


def family_for(r: int) -> str:
    return "Hm" if r % 3 == 0 else "Gm"


def limit_ratio(r: int) -> BoundValue:
    """Limite de e(X^r)/e(X) quando m -> infinito; coincide com a cota regular."""
    return regular_ratio_bound(r)


def _row(r: int, m: int, bound: Fraction) -> ConvergenceRow:
    build = build_hm if r % 3 == 0 else build_gm
    graph, blueprint = build(r, m)
    audit = audit_layered(graph, blueprint)
    return ConvergenceRow(
        m=m,
        order=audit.actual_order,
        ratio=audit.ratio,
        bound=bound,
        gap=audit.ratio - bound,
        audit_passed=audit.passed,
    )


def convergence_table(
    r: int, m_values: Iterable[int], workers: Optional[int] = None
) -> ConvergenceTable:
    """
    Uma linha auditada por m. A família vem do resíduo de r: H_m quando 3 | r,
    G_m caso contrário. As linhas saem na ordem de m_values.
    """
    family = family_for(r)
    m_list = list(m_values)
    validate = validate_hm if family == "Hm" else validate_gm
    for m in m_list:
        validate(r, m)

    bound = limit_ratio(r)
    with timed(f"CONVERGENCE_{family}_r{r}"):
        if workers and workers > 1 and len(m_list) > 1:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                rows = list(executor.map(lambda m: _row(r, m, bound), m_list))
        else:
            rows = [_row(r, m, bound) for m in m_list]

    table = ConvergenceTable(family=family, r=r, rows=rows)
    if not table.gap_strictly_decreasing:
        logger.warning(f"⚠️ Gap não estritamente decrescente para {family} r={r}")
    logger.info(f"📊 Tabela de convergência {family} r={r}: {len(rows)} linhas")
    return table
