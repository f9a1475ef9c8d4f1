import pytest

from ann_workbench.algebra import cyclic_ring, quotient_bimodule, ring_bimodule
from ann_workbench.axioms import SUITES, check_prop1, check_prop2, check_suite, check_thm1, check_thm2, get_suite
from ann_workbench.axioms.theorems import PROP2_PREMISE, PROP2_RELAXED_PREMISE
from ann_workbench.diagram import CATALOG
from ann_workbench.exceptions import UnknownNameError
from ann_workbench.model import trivial_model


def test_suite_membership():
    assert 'lfun_c' in SUITES['ann']
    assert 'lfun_c' not in SUITES['ann1_minus_c']
    assert 'lfun_c' not in SUITES['cring']
    assert {'d3.1', 'd3.1p'} <= set(SUITES['cring'])
    assert {'d1.5', 'd1.5p', 'd1.6', 'd1.6p', 'lhat_consistency', 'rhat_consistency'} == set(SUITES['u'])
    assert set(SUITES['ann']) == set(SUITES['pic']) | set(SUITES['tensor']) | set(SUITES['ann1']) | set(
        SUITES['ann2']) | set(SUITES['ann3'])


def test_every_suite_member_is_known():
    for suite in SUITES.values():
        for name in suite:
            assert name in CATALOG or name.endswith('_consistency'), name


def test_unknown_suite():
    with pytest.raises(UnknownNameError):
        get_suite('ann4')


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("suite", sorted(SUITES))
def test_trivial_model_passes(n, suite):
    ring = cyclic_ring(n)
    report = check_suite(trivial_model(ring, ring_bimodule(ring)), suite)
    assert report.passed
    assert report.failed == ()


def test_trivial_model_over_reduction_bimodule():
    z4 = cyclic_ring(4)
    assert check_suite(trivial_model(z4, quotient_bimodule(z4, 2)), 'ann').passed


def test_ann3_violator(d14_violator):
    report = check_suite(d14_violator, 'ann3')
    assert report.failed == ('d1.4',)
    failures = report.report('d1.4').failures
    assert [f.assignment for f in failures] == [(1, 1)]


def test_ann_reports_every_failure(d14_violator):
    report = check_suite(d14_violator, 'ann')
    assert 'd1.4' in report.failed
    assert len(report.reports) == len(SUITES['ann'])


def test_unit_suite_negative_control(lhat_inconsistent):
    report = check_suite(lhat_inconsistent, 'u')
    assert report.failed == ('lhat_consistency', 'd1.5')
    consistency = report.report('lhat_consistency')
    assert consistency.total == 4
    assert [(f.assignment, f.lhs, f.rhs) for f in consistency.failures] == [((1, 1), 1, 0)]
    assert [f.assignment for f in report.report('d1.5').failures] == [(1, 1)]


def test_report_lookup(trivial_z2):
    report = check_suite(trivial_z2, 'ann3')
    assert report.report('d1.4p').passed
    with pytest.raises(UnknownNameError):
        report.report('d1.1')


@pytest.mark.parametrize("check", [check_prop1, check_prop2, check_thm1, check_thm2])
def test_properties_on_trivial_model(check, trivial_z2):
    verdict = check(trivial_z2)
    assert verdict.premise and verdict.conclusion
    assert verdict.respected


def test_prop2_vacuous_when_premise_fails(lhat_inconsistent):
    # L(1,0,1) = 1 breaks d1.1 and lfun_c at A = 1
    verdict = check_prop2(lhat_inconsistent)
    assert not verdict.premise
    assert not verdict.conclusion
    assert verdict.respected


def test_relaxed_prop2_drops_the_hexagon(trivial_z2):
    assert set(PROP2_PREMISE) - set(PROP2_RELAXED_PREMISE) == {'hexagon'}
    # symmetric but not additive in its second argument: only the hexagon of Pic fails
    model = trivial_z2.patched('eta', {(1, 1): 1, (1, 0): 1, (0, 1): 1})
    assert check_suite(model, 'pic').failed == ('hexagon',)
    relaxed = check_prop2(model, relaxed=True)
    assert not check_prop2(model).premise
    assert relaxed.respected


def test_thm1_vacuous_off_pic(trivial_z2):
    model = trivial_z2.patched('eta', {(0, 1): 1})
    verdict = check_thm1(model)
    assert not verdict.premise
    assert verdict.respected


def test_thm2_vacuous_on_inconsistent_units(lhat_inconsistent):
    verdict = check_thm2(lhat_inconsistent)
    assert not verdict.premise
    assert verdict.respected


def test_prop1_vacuous_off_ann(d14_violator):
    verdict = check_prop1(d14_violator)
    assert not verdict.premise
    assert verdict.respected
