import numpy as np
import pytest

from ann_workbench.algebra import cyclic_ring, ring_bimodule
from ann_workbench.axioms import batch_verdicts, suite_passes
from ann_workbench.axioms.suites import PIC
from ann_workbench.diagram import (
    CATALOG, ONE, AssignmentGrid, Comp, DiagramSpec, Id, Inv, TermEvaluator, Var, build_v, build_v_alternative,
    check_diagram, con, diagram_verdicts, eval_obj, eval_term, evaluate_spec, get_diagram, render, trace_path,
)
from ann_workbench.exceptions import ArityError, ObjectMismatchError, UnknownNameError
from ann_workbench.model import Morphism, SkeletalModel, trivial_model
from ann_workbench.search import SearchSpace

X0, X1, X2, X3 = (Var(i) for i in range(4))


@pytest.fixture
def z4():
    return cyclic_ring(4)


@pytest.fixture
def m4(z4):
    return ring_bimodule(z4)


def test_eval_obj(z4):
    assert eval_obj(X0 + X1, z4, (1, 2)) == 3
    assert eval_obj(ONE * X0, z4, (3,)) == 3
    assert eval_obj((X0 + X1) * X2, z4, (1, 2, 3)) == 1


def test_eval_obj_unbound_variable(z4):
    with pytest.raises(ArityError):
        eval_obj(X0 + X2, z4, (1, 2))


def test_constraint_then_inverse_is_identity(rng):
    z3 = cyclic_ring(3)
    model = SkeletalModel.random(z3, ring_bimodule(z3), rng, tables=('g',))
    term = Comp(con('g', X0), Inv(con('g', X0)))
    for x in range(3):
        assert eval_term(term, model, (x,)) == Morphism(x, x, 0)


def test_eval_term_out_of_range(trivial_z2):
    with pytest.raises(ArityError):
        eval_term(con('g', X0), trivial_z2, (2,))
    with pytest.raises(ArityError):
        eval_term(con('c', X0, X1), trivial_z2, (1,))


def test_ill_typed_composite_is_rejected():
    z3 = cyclic_ring(3)
    model = trivial_model(z3, ring_bimodule(z3))
    with pytest.raises(ObjectMismatchError):
        eval_term(Id(X0) >> Id(X1), model, (1, 2))
    bad = DiagramSpec('bad', ('x', 'y'), Id(X0), Id(X1))
    with pytest.raises(ObjectMismatchError):
        evaluate_spec(bad, model.batch())


def test_composition_is_associative_on_terms(rng, z4, m4):
    model = SkeletalModel.random(z4, m4, rng)
    f, g, h = con('aplus', X0, X1, X2), ~con('aplus', X0, X1, X2), con('aplus', X0, X1, X2)
    for point in [(0, 1, 2), (3, 3, 1), (2, 0, 3)]:
        assert eval_term((f >> g) >> h, model, point) == eval_term(f >> (g >> h), model, point)


def test_constraint_arity_is_checked():
    with pytest.raises(ArityError):
        con('L', X0, X1)


def test_render():
    assert render(con('L', X0, X1, X2), ('A', 'X', 'Y')) == "L(A,X,Y)"
    assert render(Id(X0) * con('g', X1), ('A', 'X')) == "(id(A)⊗g(X))"
    assert render(~con('c', X0, X1) >> Id(X0 + X1), ('x', 'y')) == "c(x,y)⁻¹ ; id((x+y))"


def _v_values(model):
    grid = AssignmentGrid.exhaustive(model.ring.order, 4)
    value = TermEvaluator(model.batch(), grid).term(build_v(X0, X1, X2, X3)).value[0]
    return grid.objects, value


def test_v_on_trivial_model(z4, m4):
    _, value = _v_values(trivial_model(z4, m4))
    assert np.all(value == 0)


def test_v_with_only_a_symmetry(rng):
    z3 = cyclic_ring(3)
    model = SkeletalModel.random(z3, ring_bimodule(z3), rng, tables=('eta',))
    (u, v, z, t), value = _v_values(model)
    assert np.array_equal(value, model.eta[v, z])


def test_v_closed_form(rng, z4, m4):
    model = SkeletalModel.random(z4, m4, rng, tables=('xi', 'eta'))
    (u, v, z, t), value = _v_values(model)
    xi, eta = model.xi, model.eta
    expected = (xi[u, v, (z + t) % 4] - xi[v, z, t] + eta[v, z] + xi[z, v, t] - xi[u, z, (v + t) % 4]) % 4
    assert np.array_equal(value, expected)


def test_v_is_coherent_on_pic_models():
    space = SearchSpace.from_tokens(ring='z2', module='regular', vary='xi,eta')
    batch = space.batch(0, space.total)
    pic = suite_passes(batch_verdicts(batch, PIC), 'pic')
    v = DiagramSpec('v', ('U', 'V', 'Z', 'T'), build_v(X0, X1, X2, X3), build_v_alternative(X0, X1, X2, X3))
    agree = diagram_verdicts(v, batch)
    assert pic.sum() > 1
    assert np.all(agree[pic])


def test_d14_trivial_z3():
    z3 = cyclic_ring(3)
    report = check_diagram(get_diagram('d1.4'), trivial_model(z3, ring_bimodule(z3)))
    assert report.passed
    assert report.total == 9
    assert report.failures == ()


def test_d14_violator(d14_violator):
    report = check_diagram(get_diagram('d1.4'), d14_violator)
    assert not report.passed
    assert [f.assignment for f in report.failures] == [(1, 1)]
    assert (report.witness.lhs, report.witness.rhs) == (1, 0)


def _random_models(ring, module, rng, count=100):
    return [SkeletalModel.random(ring, module, rng) for _ in range(count)]


def _sides(name, model):
    lhs, rhs, grid = evaluate_spec(get_diagram(name), model.batch())
    return lhs.value[0], rhs.value[0], grid.objects


def test_d11_matches_closed_form(rng, z4, m4):
    for model in _random_models(z4, m4, rng):
        lhs, rhs, (A, B, X, Y) = _sides('d1.1', model)
        alpha, L = model.alpha, model.ldist
        assert np.array_equal(lhs, (alpha[A, B, (X + Y) % 4] + L[(A * B) % 4, X, Y]) % 4)
        assert np.array_equal(
            rhs, (A * L[B, X, Y] + L[A, (B * X) % 4, (B * Y) % 4] + alpha[A, B, X] + alpha[A, B, Y]) % 4
        )


def test_d14_matches_closed_form(rng, z4, m4):
    for model in _random_models(z4, m4, rng):
        lhs, rhs, (X, Y) = _sides('d1.4', model)
        lam = model.lam_u
        assert np.array_equal(lhs, (model.ldist[1, X, Y] + lam[X] + lam[Y]) % 4)
        assert np.array_equal(rhs, lam[(X + Y) % 4])


def test_lfun_c_matches_closed_form(rng, z4, m4):
    for model in _random_models(z4, m4, rng):
        lhs, rhs, (A, X, Y) = _sides('lfun_c', model)
        eta, L = model.eta, model.ldist
        assert np.array_equal(lhs, (A * eta[X, Y] + L[A, Y, X]) % 4)
        assert np.array_equal(rhs, (L[A, X, Y] + eta[(A * X) % 4, (A * Y) % 4]) % 4)


@pytest.mark.parametrize("n", [2, 3])
def test_naturality_holds_for_garbage_tables(n, rng):
    ring = cyclic_ring(n)
    module = ring_bimodule(ring)
    names = [name for name in CATALOG if name.startswith('nat_')]
    assert len(names) == 9
    for model in _random_models(ring, module, rng, count=50):
        for name in names:
            assert check_diagram(get_diagram(name), model).passed, name


@pytest.mark.parametrize("n", [2, 3])
def test_trivial_model_passes_every_diagram(n):
    ring = cyclic_ring(n)
    model = trivial_model(ring, ring_bimodule(ring))
    for name, spec in CATALOG.items():
        assert check_diagram(spec, model).passed, name


def test_every_diagram_is_well_typed(rng, z4, m4):
    model = SkeletalModel.random(z4, m4, rng).with_derived_units()
    for spec in CATALOG.values():
        lhs, rhs, _ = evaluate_spec(spec, model.batch())
        assert np.array_equal(lhs.source, rhs.source)


def test_unit_diagrams_derive_units_on_demand(lhat_inconsistent):
    report = check_diagram(get_diagram('d1.5'), lhat_inconsistent)
    assert [f.assignment for f in report.failures] == [(1, 1)]


def test_trace_d14(d14_violator, trivial_z2):
    spec = get_diagram('d1.4')
    lhs = trace_path(spec.lhs, d14_violator, (1, 1), names=spec.variables)
    rhs = trace_path(spec.rhs, d14_violator, (1, 1), names=spec.variables)
    assert [step.arrow for step in lhs] == ["L(1,X,Y)", "(l(X)⊕l(Y))"]
    assert (lhs[-1].running, rhs[-1].running) == (1, 0)
    assert trace_path(spec.lhs, trivial_z2, (1, 1))[-1].running == 0


def test_trace_agrees_with_evaluation(rng, z4, m4):
    model = SkeletalModel.random(z4, m4, rng)
    spec = get_diagram('d1.1')
    for point in [(1, 2, 3, 0), (3, 3, 3, 3)]:
        for side in (spec.lhs, spec.rhs):
            assert trace_path(side, model, point)[-1].running == eval_term(side, model, point).value


def test_naturality_uses_generic_slots(rng):
    z3 = cyclic_ring(3)
    model = SkeletalModel.random(z3, ring_bimodule(z3), rng)
    spec = get_diagram('nat_L')
    assert spec.generic_slots == 3
    lhs = eval_term(spec.lhs, model, (1, 2, 0), (1, 1, 2), spec.slots)
    rhs = eval_term(spec.rhs, model, (1, 2, 0), (1, 1, 2), spec.slots)
    assert lhs == rhs


def test_unknown_diagram():
    with pytest.raises(UnknownNameError):
        get_diagram('d9.9')


def test_grid_slices_cover_a_large_ring_lazily():
    spec = get_diagram('nat_L')
    dims = (32, spec.arity, 32, spec.generic_slots)
    total = AssignmentGrid.exhaustive_size(*dims)
    assert total == 32 ** (spec.arity + spec.generic_slots)
    slices = AssignmentGrid.chunks(*dims, max_points=2**16)
    (first_offset, first), (second_offset, second) = next(slices), next(slices)
    assert (first_offset, second_offset) == (0, 2**16)
    assert first.size == second.size == 2**16
    assert first.point(0) == ((0,) * spec.arity, (0,) * spec.generic_slots)
    last = np.concatenate([first.objects[:, -1], first.generics[:, -1]])
    following = np.concatenate([second.objects[:, 0], second.generics[:, 0]])
    assert np.ravel_multi_index(following, (32,) * len(following)) == np.ravel_multi_index(last, (32,) * len(last)) + 1


def test_grid_slices_match_the_whole_grid():
    whole = AssignmentGrid.exhaustive(4, 2, 4, 1)
    slices = list(AssignmentGrid.chunks(4, 2, 4, 1, max_points=10))
    assert [offset for offset, _ in slices] == list(range(0, 64, 10))
    assert np.array_equal(np.concatenate([grid.objects for _, grid in slices], axis=1), whole.objects)
    assert np.array_equal(np.concatenate([grid.generics for _, grid in slices], axis=1), whole.generics)


@pytest.mark.parametrize("name", ['d1.1', 'd1.4', 'lfun_c', 'nat_L'])
def test_sliced_check_keeps_failures_in_order(name, rng, z4, m4):
    for model in _random_models(z4, m4, rng, count=10):
        whole = check_diagram(get_diagram(name), model)
        sliced = check_diagram(get_diagram(name), model, max_cells=7)
        assert sliced.total == whole.total
        assert sliced.failures == whole.failures


def test_sliced_verdicts_agree(rng, z4, m4):
    batch = SearchSpace.from_tokens(ring='z4', module='regular', vary='L', random=True, seed=4, count=64).batch(0, 64)
    spec = get_diagram('d1.4')
    assert np.array_equal(diagram_verdicts(spec, batch), diagram_verdicts(spec, batch, max_cells=5))
    model = SkeletalModel.random(z4, m4, rng)
    assert diagram_verdicts(spec, model.batch(), max_cells=3)[0] == check_diagram(spec, model).passed


@pytest.mark.slow
def test_naturality_on_z16_within_a_cell_budget():
    ring = cyclic_ring(16)
    report = check_diagram(get_diagram('nat_L'), trivial_model(ring, ring_bimodule(ring)), max_cells=2**20)
    assert report.passed
    assert report.total == 16**6
