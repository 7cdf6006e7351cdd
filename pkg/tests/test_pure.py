from fractions import Fraction
from math import comb

import pytest

from bettikit.pure import (PureDiagram, family_deq, family_tilde, hk_diagram,
                           kappa_max, kappa_next_max, multiplicity)
from bettikit.selftest import (sweep_deq_closed_forms, sweep_dual_multiplicity,
                               sweep_hilbert_divisibility, sweep_strand_bound_lemma,
                               sweep_tilde_closed_forms)
from bettikit.tables import BettiTable, DegreeSequence


def test_hk_diagram_0345():
    diagram = hk_diagram(DegreeSequence((0, 3, 4, 5)))
    assert diagram.table == BettiTable({(0, 0): 1, (1, 2): 10, (2, 2): 15, (3, 2): 6})
    assert diagram.multiplicity == 10


def test_hk_diagram_0235():
    diagram = hk_diagram(DegreeSequence((0, 2, 3, 5)))
    assert diagram.table == BettiTable({(0, 0): 1, (1, 1): 5, (2, 1): 5, (3, 2): 1})
    assert diagram.multiplicity == 5


def test_hk_diagram_0245():
    diagram = hk_diagram(DegreeSequence((0, 2, 4, 5)))
    assert diagram.table == BettiTable(
        {(0, 0): 1, (1, 1): Fraction(10, 3), (2, 2): 5, (3, 2): Fraction(8, 3)})
    assert diagram.multiplicity == Fraction(20, 3)


def test_hk_diagram_shifted_start():
    diagram = hk_diagram(DegreeSequence((1, 3)))
    assert diagram.table == BettiTable({(0, 1): 1, (1, 2): 1})
    assert diagram.multiplicity == 2


def test_hk_diagram_free_module():
    diagram = hk_diagram(DegreeSequence((0,)))
    assert diagram.table == BettiTable({(0, 0): 1})
    assert diagram.multiplicity == 1


def test_hk_diagram_rejects_bad_input():
    with pytest.raises(ValueError):
        hk_diagram((0, 2, 2))
    with pytest.raises(ValueError):
        hk_diagram((-1, 2))


def test_one_entry_per_column():
    for degrees in [(0, 2, 3, 7), (0, 1, 5), (2, 4, 6, 9, 11)]:
        diagram = hk_diagram(DegreeSequence(degrees))
        columns = sorted(p for p, _ in diagram.table.entries)
        assert columns == list(range(len(degrees)))
        for p, d_p in enumerate(degrees):
            assert diagram.table.entry(p, d_p - p) > 0
        assert diagram.table.entry(0, degrees[0]) == 1


def test_integer_cleared():
    table, scale = hk_diagram(DegreeSequence((0, 2, 4, 5))).integer_cleared()
    assert scale == 3
    assert table == BettiTable({(0, 0): 3, (1, 1): 10, (2, 2): 15, (3, 2): 8})


def test_family_deq():
    assert family_deq(2, 2) == DegreeSequence((0, 3, 4))
    assert family_deq(3, 1) == DegreeSequence((0, 2, 3, 4))
    assert family_deq(1, 1) == DegreeSequence((0, 2))
    with pytest.raises(ValueError):
        family_deq(0, 1)


def test_family_tilde():
    assert family_tilde(3, 1) == DegreeSequence((0, 2, 3, 5))
    assert family_tilde(3, 2) == DegreeSequence((0, 3, 4, 7))
    assert family_tilde(2, 1) == DegreeSequence((0, 2, 4))
    with pytest.raises(ValueError):
        family_tilde(1, 1)


def test_kappa_max_values():
    assert kappa_max(1, 2, 2) == 4
    assert kappa_max(2, 2, 4) == 45
    assert kappa_max(3, 1, 3) == 3
    # vanishing ranges
    assert kappa_max(3, 2, 2) == 0
    assert kappa_max(0, 2, 2) == 0


def test_kappa_max_cross_checks_diagram():
    assert hk_diagram(family_deq(2, 2)).table.entry(1, 2) == kappa_max(1, 2, 2)
    assert hk_diagram(family_deq(4, 2)).table.entry(2, 2) == kappa_max(2, 2, 4)
    assert hk_diagram(family_deq(3, 1)).table.entry(3, 1) == kappa_max(3, 1, 3)


def test_kappa_next_max_values():
    assert kappa_next_max(1, 3) == 5
    assert kappa_next_max(2, 3) == 5
    assert kappa_next_max(1, 2) == 2
    assert kappa_next_max(3, 3) == 0
    assert kappa_next_max(5, 3) == 0
    assert hk_diagram(family_tilde(3, 1)).table.entry(1, 1) == kappa_next_max(1, 3)


def test_multiplicity_function():
    assert multiplicity(DegreeSequence((0, 2, 3))) == 3
    assert multiplicity(DegreeSequence((0, 3, 4))) == 6
    assert multiplicity(DegreeSequence((0,))) == 1


def test_deq_closed_forms_sweep():
    cases, failures = sweep_deq_closed_forms(e_max=10, q_max=10)
    assert cases == 100
    assert failures == []


def test_tilde_closed_forms_sweep():
    cases, failures = sweep_tilde_closed_forms(e_max=10)
    assert cases == 9
    assert failures == []


def test_strand_bound_lemma_sweep():
    cases, failures = sweep_strand_bound_lemma(e_max=4, q_max=3, slack=4)
    assert failures == []
    assert cases > 0


def test_dual_multiplicity_sweep():
    _, failures = sweep_dual_multiplicity(e_max=5, q_max=4)
    assert failures == []


def test_hilbert_divisibility_sweep():
    _, failures = sweep_hilbert_divisibility(e_max=5, q_max=3, slack=2)
    assert failures == []


def test_pure_diagram_is_frozen():
    diagram = hk_diagram(DegreeSequence((0, 2)))
    assert isinstance(diagram, PureDiagram)
    with pytest.raises(AttributeError):
        diagram.multiplicity = Fraction(1)


def test_deq_multiplicity_closed_form_spot():
    for e, q in [(2, 2), (5, 3), (7, 1)]:
        assert hk_diagram(family_deq(e, q)).multiplicity == comb(e + q, q)
