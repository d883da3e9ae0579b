import pytest

import matroid_core
import ideal_kernel
from ideal_kernel import MonomialIdeal
import regularity


@pytest.mark.parametrize('k, n', [(1, 2), (1, 3), (2, 3), (2, 4), (3, 5)])
@pytest.mark.parametrize('t', [1, 2, 3])
def test_formula_on_uniform(k, n, t):
    assert regularity.reg_formula(matroid_core.uniform(k, n), t) == (k + 1) * t


@pytest.mark.parametrize('t', [1, 2, 3, 11])
def test_formula_on_square(square, t):
    assert regularity.reg_formula(square, t) == 2 * t + 1


def test_formula_uses_the_core(star):
    assert regularity.reg_formula(star, 2) == 2 * 1 + 1 + 1


@pytest.mark.parametrize('t', [0, -2])
def test_power_must_be_positive(square, t):
    with pytest.raises(ideal_kernel.InvalidPower):
        regularity.reg_formula(square, t)
    with pytest.raises(ideal_kernel.InvalidPower):
        regularity.a_top_search(square, t)


def test_formula_needs_a_circuit():
    with pytest.raises(regularity.NoCircuit):
        regularity.reg_formula(matroid_core.free_matroid(3), 1)


def test_local_cohomology(square):
    assert regularity.local_cohomology_dim(matroid_core.uniform(1, 2), 1, (0, 0), 1) == 1
    assert regularity.local_cohomology_dim(square, 11, (1, 8, 3, 2), 2) == 0
    assert regularity.local_cohomology_dim(square, 1, (-1, 0, -1, 0), 2) == 0


def test_a_top_search_principal():
    assert regularity.a_top_search(matroid_core.uniform(1, 2), 1) == (0, (0, 0))


def test_a_top_search_square(square):
    value, witness = regularity.a_top_search(square, 2)
    assert value == 2
    assert witness == (1, 0, 1, 0)
    assert witness.is_nonnegative()


def test_a_top_search_rejects_stars(star):
    with pytest.raises(regularity.NotCore):
        regularity.a_top_search(star, 1)


def test_budget():
    budget = regularity.EvaluationBudget(3)
    with pytest.raises(regularity.BudgetExceeded):
        regularity.a_top_search(matroid_core.uniform(2, 4), 3, budget=budget)


@pytest.mark.parametrize('k, n, t', [(1, 2, 3), (2, 4, 1), (2, 4, 2), (1, 3, 2)])
def test_takayama_on_uniform(k, n, t):
    assert regularity.reg_takayama(matroid_core.uniform(k, n), t) == (k + 1) * t


def test_takayama_on_square(square):
    assert regularity.reg_takayama(square, 1) == 3
    assert regularity.reg_takayama(square, 2) == 5


def test_lower_bound_witness(square):
    a = regularity.lower_bound_witness(square, 3)
    assert a == (2, 0, 2, 0)
    assert regularity.local_cohomology_dim(square, 3, a, 2) == 1


def test_betti_of_principal_ideal():
    ideal = MonomialIdeal(2, [(1, 1)])
    assert regularity.betti_oracle(ideal) == ((0, (1, 1), 1),)
    assert regularity.reg_from_betti(ideal) == 2
    assert regularity.has_linear_resolution(ideal)


def test_betti_of_complete_intersection(square):
    ideal = ideal_kernel.symbolic_generators(square, 1)
    table = regularity.betti_oracle(ideal)
    assert (1, (1, 1, 1, 1), 1) in table
    assert regularity.graded_betti(table) == {(0, 2): 2, (1, 4): 1}
    assert regularity.reg_from_betti(ideal) == 3
    assert not regularity.has_linear_resolution(ideal)


def test_betti_three_points_is_linear():
    ideal = MonomialIdeal(3, [(1, 1, 0), (1, 0, 1), (0, 1, 1)])
    assert regularity.has_linear_resolution(ideal)
    assert regularity.reg_from_betti(ideal) == 2
    assert regularity.graded_betti(regularity.betti_oracle(ideal)) == {(0, 2): 3, (1, 3): 2}


def test_betti_symbolic_square_of_square(square):
    ideal = ideal_kernel.symbolic_generators(square, 2)
    assert regularity.reg_from_betti(ideal) == 5
    assert not regularity.has_linear_resolution(ideal)


def test_betti_principal_power():
    ideal = MonomialIdeal(2, [(3, 3)])
    assert regularity.has_linear_resolution(ideal)
    assert regularity.reg_from_betti(ideal) == 6


def test_betti_cap():
    with pytest.raises(regularity.BoxTooLarge):
        regularity.betti_oracle(MonomialIdeal(2, [(3, 3)]), cap=3)


def test_report_agrees(square):
    report = regularity.regularity_report(square, 2)
    assert report.formula_value == 5
    assert report.takayama_value == 5
    assert report.betti_value == 5
    assert report.agree
    assert report.consistent()
    assert [row[0] for row in report.rows()] == list(regularity.METHODS)


def test_report_skips_betti_outside_limits(square):
    report = regularity.regularity_report(square, 3)
    assert report.betti_value is None
    assert report.rows()[2][1] == 'Skipped'
    assert report.agree


def test_check_regsym(square, u24):
    assert regularity.check_regsym(square, 2).passed
    assert regularity.check_regsym(u24, 1).passed


def test_regsym_rechecks_the_witness(square, star):
    assert regularity.check_regsym(square, 2).values['recheck'] == (True, True)
    record = regularity.check_regsym(star, 2)
    assert record.passed
    assert record.values['recheck'] == (True, True)


def test_recheck_top_witness(square):
    assert regularity.recheck_top_witness(square, 2, (1, 0, 1, 0)) == (True, True)
    assert regularity.recheck_top_witness(square, 2, (2, 0, 0, 0)) == (True, False)
    assert regularity.recheck_top_witness(square, 2, (1, 1, 1, 0)) == (False, False)


def test_check_upper(square, u24):
    record = regularity.check_upper(square, 2)
    assert record.passed
    assert record.values['max'] == 2
    record = regularity.check_upper(u24, 2)
    assert record.passed
    assert record.values['max'] == 3


def test_check_uniform_characterization_at_t1(square, u24):
    record = regularity.check_uniform_characterization(u24, 1)
    assert record.passed
    assert record.values['linear']
    record = regularity.check_uniform_characterization(square, 1)
    assert record.passed
    assert not record.values['linear'] and not record.values['uniform']


def test_symbolic_square_of_three_points_is_not_linear():
    m = matroid_core.uniform(1, 3)
    assert not regularity.has_linear_resolution(ideal_kernel.symbolic_generators(m, 2))
    record = regularity.check_uniform_characterization(m, 2)
    assert not record.passed
    assert record.values['uniform']


def test_hypersurface_stays_linear():
    record = regularity.check_uniform_characterization(matroid_core.uniform(2, 3), 2)
    assert record.passed


def test_check_cm_guard(square):
    record = regularity.check_cm_guard(square, 2)
    assert record.passed
    assert record.note == 'bounded evidence, not proof'


def test_check_circ_link(square, u24):
    assert regularity.check_circ_link(square).passed
    record = regularity.check_circ_link(u24)
    assert record.passed
    assert record.values['observed'] == 2
