"""
Lados direitos dos teoremas, sempre como Fraction (sem ponto flutuante).
"""

from fractions import Fraction

from powergraph.errors import GraphValidationError

BoundValue = Fraction


def ceil_third(r: int) -> int:
    return -(-r // 3)


def regular_ratio_bound(r: int) -> BoundValue:
    """e(G^r)/e(G) >= (r+3)/3 - 3/(2(r+3)) se 3 | r, senão >= ceil(r/3)."""
    if r < 3:
        raise GraphValidationError(f"regular ratio bound is stated for r >= 3, got r={r}")
    if r % 3 == 0:
        return Fraction(r + 3, 3) - Fraction(3, 2 * (r + 3))
    return Fraction(ceil_third(r))


def edge_coefficient(r: int) -> BoundValue:
    """Coeficiente de delta*|G| na cota de arestas."""
    if r < 1:
        raise GraphValidationError(f"r must be positive, got {r}")
    if r % 3 == 0:
        return Fraction(r + 3, 6) - Fraction(3, 4 * (r + 3))
    return Fraction(ceil_third(r), 2)


def leftover_coefficient(r: int) -> BoundValue:
    # termo descartado ao passar da versão com laços para a versão sem laços
    return edge_coefficient(r) - Fraction(1, 2)


def _check_domain(r: int, delta: int, n: int, min_r: int) -> None:
    if r < min_r:
        raise GraphValidationError(f"bound requires r >= {min_r}, got r={r}")
    if delta < 1:
        raise GraphValidationError(f"bound requires delta >= 1, got {delta}")
    if n < 1:
        raise GraphValidationError(f"bound requires n >= 1, got {n}")


def min_degree_edge_bound(r: int, delta: int, n: int) -> BoundValue:
    _check_domain(r, delta, n, min_r=3)
    return edge_coefficient(r) * delta * n


def loops_edge_bound(r: int, delta: int, n: int) -> BoundValue:
    _check_domain(r, delta, n, min_r=6)
    return edge_coefficient(r) * delta * n + Fraction(n, 2)


def cayley_ratio_bound(r: int) -> BoundValue:
    if r < 1:
        raise GraphValidationError(f"r must be positive, got {r}")
    return Fraction(r)
