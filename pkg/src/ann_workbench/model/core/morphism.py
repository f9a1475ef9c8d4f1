"""
Morphisms of a skeletal model and the groupoid operations on them.

Every morphism is an endomorphism x -> x carrying a bimodule value. Fields
may be plain ints or integer arrays; arrays broadcast, which is how the
diagram engine evaluates a whole grid of assignments (and a stack of
models) in one pass.
"""
from dataclasses import dataclass

import numpy as np

from ...algebra.core.finite_bimodule import FiniteBimodule
from ...algebra.core.finite_ring import FiniteRing
from ...algebra.core.tables import Index
from ...exceptions import ObjectMismatchError


@dataclass(frozen=True)
class Morphism:
    source: Index
    target: Index
    value: Index


def same_objects(x: Index, y: Index) -> bool:
    """True when two objects (or arrays of objects) agree everywhere."""
    return bool(np.all(np.equal(x, y)))


class SkeletalGroupoid:
    """Composition, ⊕, ⊗ and inversion over a fixed (ring, bimodule)."""

    def __init__(self, ring: FiniteRing, module: FiniteBimodule):
        self.ring = ring
        self.module = module

    def identity(self, x: Index) -> Morphism:
        """The identity of x, value 0."""
        zero = self.module.zero if np.ndim(x) == 0 else np.full(np.shape(x), self.module.zero)
        return Morphism(x, x, zero)

    def compose(self, f: Morphism, g: Morphism) -> Morphism:
        """f then g."""
        if not same_objects(f.target, g.source):
            raise ObjectMismatchError(f"cannot compose: target {f.target} of f is not source {g.source} of g")
        return Morphism(f.source, g.target, self.module.plus(f.value, g.value))

    def oplus(self, f: Morphism, g: Morphism) -> Morphism:
        """f ⊕ g on x+y with value u + v."""
        ring = self.ring
        return Morphism(
            ring.plus(f.source, g.source),
            ring.plus(f.target, g.target),
            self.module.plus(f.value, g.value),
        )

    def otimes(self, f: Morphism, g: Morphism) -> Morphism:
        """f ⊗ g on xy with value x·v + u·y."""
        ring, module = self.ring, self.module
        return Morphism(
            ring.times(f.source, g.source),
            ring.times(f.target, g.target),
            module.plus(module.lact(f.source, g.value), module.ract(f.value, g.source)),
        )

    def invert(self, f: Morphism) -> Morphism:
        """Inverse with the negated value."""
        return Morphism(f.target, f.source, self.module.negate(f.value))
