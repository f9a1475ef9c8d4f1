import hypothesis
import hypothesis.strategies as strat
import pytest

from ann_workbench.algebra import cyclic_ring, quotient_bimodule, ring_bimodule
from ann_workbench.exceptions import ObjectMismatchError
from ann_workbench.model import Morphism, SkeletalGroupoid


def groupoids():
    regular = strat.integers(1, 6).map(lambda n: SkeletalGroupoid(cyclic_ring(n), ring_bimodule(cyclic_ring(n))))
    reduced = strat.sampled_from([2, 4, 6]).map(lambda n: SkeletalGroupoid(cyclic_ring(n), quotient_bimodule(cyclic_ring(n), 2)))
    return strat.one_of(regular, reduced)


@strat.composite
def endomorphisms(draw, groupoid, count=1, same_object=True):
    """`count` morphisms of `groupoid`, all on one object unless same_object is False."""
    x = draw(strat.integers(0, groupoid.ring.order - 1))
    arrows = []
    for _ in range(count):
        if not same_object:
            x = draw(strat.integers(0, groupoid.ring.order - 1))
        u = draw(strat.integers(0, groupoid.module.order - 1))
        arrows.append(Morphism(x, x, u))
    return arrows


@hypothesis.given(strat.data())
def test_identity_law(data):
    gp = data.draw(groupoids())
    (f,) = data.draw(endomorphisms(gp))
    assert gp.compose(f, gp.identity(f.source)) == f
    assert gp.compose(gp.identity(f.source), f) == f


@hypothesis.given(strat.data())
def test_inverse_law(data):
    gp = data.draw(groupoids())
    (f,) = data.draw(endomorphisms(gp))
    assert gp.compose(f, gp.invert(f)) == gp.identity(f.source)
    assert gp.compose(gp.invert(f), f) == gp.identity(f.source)


@hypothesis.given(strat.data())
def test_composition_is_associative(data):
    gp = data.draw(groupoids())
    f, g, h = data.draw(endomorphisms(gp, count=3))
    assert gp.compose(gp.compose(f, g), h) == gp.compose(f, gp.compose(g, h))


@hypothesis.given(strat.data())
def test_oplus_is_a_bifunctor(data):
    gp = data.draw(groupoids())
    f, f2 = data.draw(endomorphisms(gp, count=2))
    g, g2 = data.draw(endomorphisms(gp, count=2))
    # (f;f2) ⊕ (g;g2) = (f⊕g) ; (f2⊕g2)
    assert gp.oplus(gp.compose(f, f2), gp.compose(g, g2)) == gp.compose(gp.oplus(f, g), gp.oplus(f2, g2))
    assert gp.oplus(gp.identity(f.source), gp.identity(g.source)) == gp.identity(gp.ring.plus(f.source, g.source))


@hypothesis.given(strat.data())
def test_otimes_is_a_bifunctor(data):
    gp = data.draw(groupoids())
    f, f2 = data.draw(endomorphisms(gp, count=2))
    g, g2 = data.draw(endomorphisms(gp, count=2))
    assert gp.otimes(gp.compose(f, f2), gp.compose(g, g2)) == gp.compose(gp.otimes(f, g), gp.otimes(f2, g2))
    assert gp.otimes(gp.identity(f.source), gp.identity(g.source)) == gp.identity(gp.ring.times(f.source, g.source))


@hypothesis.given(strat.data())
def test_invert_commutes_with_tensor(data):
    gp = data.draw(groupoids())
    f, g = data.draw(endomorphisms(gp, count=2, same_object=False))
    assert gp.invert(gp.otimes(f, g)) == gp.otimes(gp.invert(f), gp.invert(g))
    assert gp.invert(gp.oplus(f, g)) == gp.oplus(gp.invert(f), gp.invert(g))


def test_compose_in_z2():
    z2 = cyclic_ring(2)
    gp = SkeletalGroupoid(z2, ring_bimodule(z2))
    assert gp.compose(Morphism(1, 1, 1), Morphism(1, 1, 1)) == Morphism(1, 1, 0)


def test_oplus_adds_objects_and_values():
    z3 = cyclic_ring(3)
    gp = SkeletalGroupoid(z3, ring_bimodule(z3))
    assert gp.oplus(Morphism(1, 1, 2), Morphism(2, 2, 2)) == Morphism(0, 0, 1)


def test_left_tensor_with_identity_acts():
    z4 = cyclic_ring(4)
    gp = SkeletalGroupoid(z4, ring_bimodule(z4))
    # id_A ⊗ (x, x, u) = (Ax, Ax, A·u)
    assert gp.otimes(gp.identity(2), Morphism(3, 3, 3)) == Morphism(2, 2, 2)
    assert gp.otimes(Morphism(3, 3, 3), gp.identity(2)) == Morphism(2, 2, 2)


def test_invert_in_z3():
    z3 = cyclic_ring(3)
    gp = SkeletalGroupoid(z3, ring_bimodule(z3))
    assert gp.invert(Morphism(1, 1, 2)) == Morphism(1, 1, 1)
    assert gp.invert(gp.identity(2)) == gp.identity(2)


def test_compose_rejects_mismatched_objects():
    z3 = cyclic_ring(3)
    gp = SkeletalGroupoid(z3, ring_bimodule(z3))
    with pytest.raises(ObjectMismatchError):
        gp.compose(Morphism(1, 1, 0), Morphism(2, 2, 0))
