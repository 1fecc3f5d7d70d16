from fractions import Fraction

import pytest

from conftest import complete_graph, path_graph
from powergraph.bounds.formulas import (
    cayley_ratio_bound,
    edge_coefficient,
    leftover_coefficient,
    loops_edge_bound,
    min_degree_edge_bound,
    regular_ratio_bound,
)
from powergraph.bounds.verdicts import verify, verify_all
from powergraph.constants import (
    EXTERNAL_R3_PROVENANCE,
    THEOREM_CAYLEY,
    THEOREM_LOOPS,
    THEOREM_MIN_DEGREE,
    THEOREM_REGULAR,
)
from powergraph.core.graph import build_graph
from powergraph.errors import GraphValidationError
from powergraph.generators.cayley import cayley_graph
from powergraph.generators.layered import build_gm
from powergraph.models.bound_models import Verdict


def test_regular_ratio_bound_values():
    assert regular_ratio_bound(6) == Fraction(17, 6)
    assert regular_ratio_bound(3) == Fraction(7, 4)
    assert regular_ratio_bound(8) == 3
    assert isinstance(regular_ratio_bound(8), Fraction)


def test_regular_ratio_bound_rejects_small_r():
    with pytest.raises(GraphValidationError):
        regular_ratio_bound(2)


def test_min_degree_edge_bound_values():
    assert min_degree_edge_bound(4, 3, 30) == 90
    assert min_degree_edge_bound(6, 4, 20) == Fraction(340, 3)
    # r=3: (1 - 1/8) * 1 * 2
    assert min_degree_edge_bound(3, 1, 2) == Fraction(7, 4)


def test_min_degree_edge_bound_domain():
    with pytest.raises(GraphValidationError):
        min_degree_edge_bound(2, 1, 5)
    with pytest.raises(GraphValidationError):
        min_degree_edge_bound(4, 0, 5)
    with pytest.raises(GraphValidationError):
        min_degree_edge_bound(4, 1, 0)


def test_loops_edge_bound_values():
    assert loops_edge_bound(6, 5, 16) == Fraction(364, 3)
    assert loops_edge_bound(7, 3, 12) == 60
    with pytest.raises(GraphValidationError, match="r >= 6"):
        loops_edge_bound(5, 3, 12)


def test_cayley_ratio_bound():
    assert cayley_ratio_bound(4) == 4
    with pytest.raises(GraphValidationError):
        cayley_ratio_bound(0)


def test_fractional_bound_sits_between_integer_candidates():
    """Para 3 | r: r/3 < cota < r/3 + 1."""
    for r in range(3, 61, 3):
        bound = regular_ratio_bound(r)
        assert Fraction(r, 3) < bound < Fraction(r, 3) + 1


def test_loops_bound_reduces_to_min_degree_bound():
    """cota com laços (delta+1) - n = cota sem laços + sobra não negativa."""
    for r in range(6, 31):
        assert leftover_coefficient(r) >= 0
        for delta in (1, 3, 7):
            for n in (5, 12, 40):
                loopy = loops_edge_bound(r, delta + 1, n)
                assert loopy - n == min_degree_edge_bound(r, delta, n) + leftover_coefficient(r) * n


def test_edge_coefficient_is_half_the_ratio_bound():
    for r in range(3, 31):
        assert 2 * edge_coefficient(r) == regular_ratio_bound(r)


def test_verify_gm_7_5(gm_7_5):
    """G_m(7,5): teorema regular, observado 21/5 contra 3."""
    verdict = verify(gm_7_5[0], 7)
    assert verdict.theorem == THEOREM_REGULAR
    assert verdict.status == "holds"
    assert verdict.to_line() == "holds bound=3 observed=21/5 margin=6/5"


def test_verify_hm_6_1_loopless(hm_6_1):
    verdict = verify(hm_6_1[0], 6)
    assert verdict.observed == Fraction(111, 32)
    assert verdict.bound == Fraction(17, 6)
    assert verdict.holds


def test_verify_path_with_large_r_is_inapplicable():
    verdict = verify(path_graph(3), 4)
    assert not verdict.applicable
    assert verdict.holds is None
    assert verdict.to_line() == "inapplicable reason=diameter < r"


def test_verify_disconnected_graph():
    verdict = verify(build_graph(4, [(0, 1), (2, 3)]), 3)
    assert verdict.status == "inapplicable"
    assert verdict.reason == "graph is disconnected"


def test_verify_irregular_graph_uses_min_degree_theorem():
    verdict = verify(path_graph(8), 4)
    assert verdict.theorem == THEOREM_MIN_DEGREE
    # e(P_8^4) = 7 + 6 + 5 + 4 contra (1/2)*2*1*8
    assert verdict.observed == 22
    assert verdict.bound == 8
    assert verdict.holds


def test_verify_loopy_hm(loopy_h1):
    verdict = verify(loopy_h1, 6)
    assert verdict.theorem == THEOREM_LOOPS
    assert verdict.observed == 127
    assert verdict.bound == Fraction(364, 3)
    assert verdict.holds


def test_verify_cayley_ratio():
    """C_11 com r=3 < diâmetro: razão 3 >= 3, margem zero."""
    verdict = verify(cayley_graph(11, [1]), 3, cayley=True)
    assert verdict.theorem == THEOREM_CAYLEY
    assert verdict.observed == 3 and verdict.margin == 0
    assert verdict.holds


def test_verify_cayley_needs_r_below_diameter():
    verdict = verify(cayley_graph(11, [1]), 5, cayley=True)
    assert verdict.reason == "r ≥ diameter"


def test_verify_r3_carries_external_provenance():
    g, _ = build_gm(4, 3)
    verdict = verify(g, 3)
    assert verdict.applicable
    assert verdict.provenance == EXTERNAL_R3_PROVENANCE


def test_verify_all_lists_every_theorem(gm_7_5):
    verdicts = {v.theorem: v for v in verify_all(gm_7_5[0], 7)}
    assert set(verdicts) == {THEOREM_REGULAR, THEOREM_MIN_DEGREE, THEOREM_LOOPS}
    assert verdicts[THEOREM_MIN_DEGREE].bound == 165
    assert verdicts[THEOREM_MIN_DEGREE].observed == 231
    assert verdicts[THEOREM_LOOPS].reason == "loops not allowed"


def test_verify_all_with_cayley_tag():
    verdicts = verify_all(cayley_graph(13, [1, 3]), 1, cayley=True)
    assert THEOREM_CAYLEY in {v.theorem for v in verdicts}


def test_verify_on_complete_graph_is_inapplicable():
    verdict = verify(complete_graph(6), 3)
    assert verdict.reason == "diameter < r"


def test_verdict_record_keys():
    record = verify(path_graph(10), 4).to_record()
    assert {"theorem", "applicable", "reason", "bound", "observed", "holds", "margin"} <= set(record)
    assert record["bound"] == "10"
    assert isinstance(record["observed"], str)


def test_inapplicable_verdict_cannot_hold():
    with pytest.raises(ValueError):
        Verdict(theorem=THEOREM_REGULAR, applicable=False, reason="x", holds=True)
