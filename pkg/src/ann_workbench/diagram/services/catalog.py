"""
The diagram catalog: every coherence condition the workbench checks, as data.

Each entry is a DiagramSpec, a pair of parallel morphism terms over named
object variables. Naturality squares (`nat_<kind>`) additionally declare one
generic-morphism slot per variable.
"""
import logging
from dataclasses import dataclass
from functools import partial
from typing import Dict, FrozenSet, Tuple

from ...exceptions import UnknownNameError
from ...model.core.constraints import SIGNATURES, STRUCTURAL_KINDS, TABLE_ARITY, ConstraintKind
from ..core.terms import ONE, ZERO, Id, MorTerm, ObjExpr, Var, con, kinds, lift

logger = logging.getLogger(__name__)

# Tables a derived-unit computation reads.
UNIT_INPUTS = frozenset({'g', 'd', 'ldist', 'rdist'})


@dataclass(frozen=True)
class DiagramSpec:
    name: str
    variables: Tuple[str, ...]
    lhs: MorTerm
    rhs: MorTerm
    slots: Tuple[ObjExpr, ...] = ()
    citation: str = ""

    @property
    def arity(self) -> int:
        return len(self.variables)

    @property
    def generic_slots(self) -> int:
        return len(self.slots)

    @property
    def kinds(self) -> FrozenSet[ConstraintKind]:
        return kinds(self.lhs) | kinds(self.rhs)

    @property
    def requires_units(self) -> bool:
        return any(kind.derived for kind in self.kinds)

    @property
    def tables(self) -> FrozenSet[str]:
        """Constraint tables the verdict depends on, derived units resolved to their inputs."""
        used = {SIGNATURES[kind].table for kind in self.kinds if not kind.derived}
        if self.requires_units:
            used |= UNIT_INPUTS
        return frozenset(used)


aplus = partial(con, ConstraintKind.APLUS)
c = partial(con, ConstraintKind.C)
g = partial(con, ConstraintKind.G)
d = partial(con, ConstraintKind.D)
a = partial(con, ConstraintKind.A)
l = partial(con, ConstraintKind.L_UNIT)  # noqa: E741
r = partial(con, ConstraintKind.R_UNIT)
L = partial(con, ConstraintKind.L)
R = partial(con, ConstraintKind.R)
lhat = partial(con, ConstraintKind.LHAT)
rhat = partial(con, ConstraintKind.RHAT)


def build_v(U: ObjExpr, V: ObjExpr, Z: ObjExpr, T: ObjExpr) -> MorTerm:
    """
    The middle-four interchange v: (U+V)+(Z+T) -> (U+Z)+(V+T), through

        U+(V+(Z+T)) -> U+((V+Z)+T) -> U+((Z+V)+T) -> U+(Z+(V+T))
    """
    return (
        aplus(U, V, Z + T)
        >> (Id(U) + ~aplus(V, Z, T))
        >> (Id(U) + (c(V, Z) + Id(T)))
        >> (Id(U) + aplus(Z, V, T))
        >> ~aplus(U, Z, V + T)
    )


def build_v_alternative(U: ObjExpr, V: ObjExpr, Z: ObjExpr, T: ObjExpr) -> MorTerm:
    """v routed through ((U+V)+Z)+T instead of U+(V+(Z+T))."""
    return (
        ~aplus(U + V, Z, T)
        >> (aplus(U, V, Z) + Id(T))
        >> ((Id(U) + c(V, Z)) + Id(T))
        >> (~aplus(U, Z, V) + Id(T))
        >> aplus(U + Z, V, T)
    )


def _vars(names: str) -> Tuple[ObjExpr, ...]:
    return tuple(Var(i) for i in range(len(names.split())))


def _spec(name: str, names: str, lhs: MorTerm, rhs: MorTerm, citation: str) -> DiagramSpec:
    return DiagramSpec(name, tuple(names.split()), lhs, rhs, citation=citation)


def _pic() -> Dict[str, DiagramSpec]:
    x, y, z, w = _vars("x y z w")
    return {
        'pentagon_plus': _spec(
            'pentagon_plus', "x y z w",
            aplus(x + y, z, w) >> aplus(x, y, z + w),
            (aplus(x, y, z) + Id(w)) >> aplus(x, y + z, w) >> (Id(x) + aplus(y, z, w)),
            "Pic-category: pentagon for a+",
        ),
        'hexagon': _spec(
            'hexagon', "x y z",
            aplus(x, y, z) >> c(x, y + z) >> aplus(y, z, x),
            (c(x, y) + Id(z)) >> aplus(y, x, z) >> (Id(y) + c(x, z)),
            "Pic-category: compatibility of c with a+",
        ),
        'symmetry': _spec(
            'symmetry', "x y",
            c(x, y) >> c(y, x),
            Id(x + y),
            "Pic-category: c is a symmetry",
        ),
        'triangle_plus': _spec(
            'triangle_plus', "x y",
            aplus(x, ZERO, y) >> (Id(x) + g(y)),
            d(x) + Id(y),
            "Pic-category: triangle for (0, g, d)",
        ),
    }


def _tensor() -> Dict[str, DiagramSpec]:
    x, y, z, w = _vars("x y z w")
    return {
        'pentagon_times': _spec(
            'pentagon_times', "x y z w",
            a(x, y, z * w) >> a(x * y, z, w),
            (Id(x) * a(y, z, w)) >> a(x, y * z, w) >> (a(x, y, z) * Id(w)),
            "monoidal structure: pentagon for a",
        ),
        'triangle_times': _spec(
            'triangle_times', "x y",
            a(x, ONE, y) >> (r(x) * Id(y)),
            Id(x) * l(y),
            "monoidal structure: triangle for (1, l, r)",
        ),
    }


def _ann1() -> Dict[str, DiagramSpec]:
    A, X, Y, Z = _vars("A X Y Z")
    specs = {
        'lfun_aplus': _spec(
            'lfun_aplus', "A X Y Z",
            L(A, X + Y, Z) >> (L(A, X, Y) + Id(A * Z)) >> aplus(A * X, A * Y, A * Z),
            (Id(A) * aplus(X, Y, Z)) >> L(A, X, Y + Z) >> (Id(A * X) + L(A, Y, Z)),
            "Ann-1: A⊗- is compatible with a+",
        ),
        'lfun_c': _spec(
            'lfun_c', "A X Y",
            (Id(A) * c(X, Y)) >> L(A, Y, X),
            L(A, X, Y) >> c(A * X, A * Y),
            "Ann-1: A⊗- is compatible with c",
        ),
    }
    X, Y, Z, A = _vars("X Y Z A")
    specs.update({
        'rfun_aplus': _spec(
            'rfun_aplus', "X Y Z A",
            R(X + Y, Z, A) >> (R(X, Y, A) + Id(Z * A)) >> aplus(X * A, Y * A, Z * A),
            (aplus(X, Y, Z) * Id(A)) >> R(X, Y + Z, A) >> (Id(X * A) + R(Y, Z, A)),
            "Ann-1: -⊗A is compatible with a+",
        ),
    })
    X, Y, A = _vars("X Y A")
    specs.update({
        'rfun_c': _spec(
            'rfun_c', "X Y A",
            (c(X, Y) * Id(A)) >> R(Y, X, A),
            R(X, Y, A) >> c(X * A, Y * A),
            "Ann-1: -⊗A is compatible with c",
        ),
    })
    return specs


def _ann2() -> Dict[str, DiagramSpec]:
    A, B, X, Y = _vars("A B X Y")
    specs = {
        'd1.1': _spec(
            'd1.1', "A B X Y",
            a(A, B, X + Y) >> L(A * B, X, Y),
            (Id(A) * L(B, X, Y)) >> L(A, B * X, B * Y) >> (a(A, B, X) + a(A, B, Y)),
            "Ann-2: a with the left distributivity",
        ),
        'd1.3': _spec(
            'd1.3', "A B X Y",
            L(A + B, X, Y) >> (R(A, B, X) + R(A, B, Y)) >> build_v(A * X, B * X, A * Y, B * Y),
            R(A, B, X + Y) >> (L(A, X, Y) + L(B, X, Y)),
            "Ann-2: the two distributivities agree on (A+B)(X+Y)",
        ),
    }
    X, Y, B, A = _vars("X Y B A")
    specs['d1.1p'] = _spec(
        'd1.1p', "X Y B A",
        a(X + Y, B, A) >> (R(X, Y, B) * Id(A)) >> R(X * B, Y * B, A),
        R(X, Y, B * A) >> (a(X, B, A) + a(Y, B, A)),
        "Ann-2: a with the right distributivity",
    )
    A, X, Y, B = _vars("A X Y B")
    specs['d1.2'] = _spec(
        'd1.2', "A X Y B",
        a(A, X + Y, B) >> (L(A, X, Y) * Id(B)) >> R(A * X, A * Y, B),
        (Id(A) * R(X, Y, B)) >> L(A, X * B, Y * B) >> (a(A, X, B) + a(A, Y, B)),
        "Ann-2: a with both distributivities",
    )
    return {name: specs[name] for name in ('d1.1', 'd1.1p', 'd1.2', 'd1.3')}


def _ann3() -> Dict[str, DiagramSpec]:
    X, Y = _vars("X Y")
    return {
        'd1.4': _spec(
            'd1.4', "X Y",
            L(ONE, X, Y) >> (l(X) + l(Y)),
            l(X + Y),
            "Ann-3: left distributivity at the unit",
        ),
        'd1.4p': _spec(
            'd1.4p', "X Y",
            R(X, Y, ONE) >> (r(X) + r(Y)),
            r(X + Y),
            "Ann-3: right distributivity at the unit",
        ),
    }


def _units() -> Dict[str, DiagramSpec]:
    A, X = _vars("A X")
    return {
        'd1.5': _spec(
            'd1.5', "A X",
            L(A, ZERO, X) >> (lhat(A) + Id(A * X)) >> g(A * X),
            Id(A) * g(X),
            "(U): A⊗- is compatible with g",
        ),
        'd1.5p': _spec(
            'd1.5p', "A X",
            L(A, X, ZERO) >> (Id(A * X) + lhat(A)) >> d(A * X),
            Id(A) * d(X),
            "(U): A⊗- is compatible with d",
        ),
        'd1.6': _spec(
            'd1.6', "A X",
            R(ZERO, X, A) >> (rhat(A) + Id(X * A)) >> g(X * A),
            g(X) * Id(A),
            "(U): -⊗A is compatible with g",
        ),
        'd1.6p': _spec(
            'd1.6p', "A X",
            R(X, ZERO, A) >> (Id(X * A) + rhat(A)) >> d(X * A),
            d(X) * Id(A),
            "(U): -⊗A is compatible with d",
        ),
    }


def _commutation() -> Dict[str, DiagramSpec]:
    X, A, B = _vars("X A B")
    A1, B1 = A * ONE, B * ONE
    return {
        'd2.1': _spec(
            'd2.1', "X A B",
            L(X, A1, B1) >> c(X * A1, X * B1),
            (Id(X) * c(A1, B1)) >> L(X, B1, A1),
            "c-compatibility of X⊗- on the objects A1, B1",
        ),
    }


def _cring() -> Dict[str, DiagramSpec]:
    r_, x, y, z, t = _vars("r x y z t")
    specs = {
        'd3.1': _spec(
            'd3.1', "r x y z t",
            L(r_, x + y, z + t) >> (L(r_, x, y) + L(r_, z, t)) >> build_v(r_ * x, r_ * y, r_ * z, r_ * t),
            (Id(r_) * build_v(x, y, z, t)) >> L(r_, x + z, y + t) >> (L(r_, x, z) + L(r_, y, t)),
            "categorical ring: left distributivity commutes with v",
        ),
    }
    x, y, z, t, s = _vars("x y z t s")
    specs['d3.1p'] = _spec(
        'd3.1p', "x y z t s",
        R(x + y, z + t, s) >> (R(x, y, s) + R(z, t, s)) >> build_v(x * s, y * s, z * s, t * s),
        (build_v(x, y, z, t) * Id(s)) >> R(x + z, y + t, s) >> (R(x, z, s) + R(y, t, s)),
        "categorical ring: right distributivity commutes with v",
    )
    x, a_, b, c_ = _vars("x a b c")
    specs['d3.2'] = _spec(
        'd3.2', "x a b c",
        L(x, a_, b + c_) >> (Id(x * a_) + L(x, b, c_)) >> ~aplus(x * a_, x * b, x * c_),
        (Id(x) * ~aplus(a_, b, c_)) >> L(x, a_ + b, c_) >> (L(x, a_, b) + Id(x * c_)),
        "x⊗- is compatible with a+, read from x(a+(b+c))",
    )
    a_, b, c_, x = _vars("a b c x")
    specs['d3.2p'] = _spec(
        'd3.2p', "a b c x",
        R(a_, b + c_, x) >> (Id(a_ * x) + R(b, c_, x)) >> ~aplus(a_ * x, b * x, c_ * x),
        (~aplus(a_, b, c_) * Id(x)) >> R(a_ + b, c_, x) >> (R(a_, b, x) + Id(c_ * x)),
        "-⊗x is compatible with a+, read from (a+(b+c))x",
    )
    return specs


def naturality_spec(kind: ConstraintKind) -> DiagramSpec:
    """The naturality square of a constraint, one generic slot per argument."""
    arity = TABLE_ARITY[SIGNATURES[kind].table]
    variables = tuple(f"x{i}" for i in range(arity))
    args = tuple(Var(i) for i in range(arity))
    square = con(kind, *args)
    return DiagramSpec(
        name=f"nat_{kind.value}",
        variables=variables,
        lhs=lift(square.source) >> square,
        rhs=square >> lift(square.target),
        slots=args,
        citation=f"naturality of {kind.value}",
    )


def _build_catalog() -> Dict[str, DiagramSpec]:
    catalog: Dict[str, DiagramSpec] = {}
    for part in (_pic, _tensor, _ann1, _ann2, _ann3, _units, _commutation, _cring):
        catalog.update(part())
    for kind in STRUCTURAL_KINDS:
        spec = naturality_spec(kind)
        catalog[spec.name] = spec
    return catalog


CATALOG: Dict[str, DiagramSpec] = _build_catalog()


def get_diagram(name: str) -> DiagramSpec:
    """Look up a catalog diagram by name; raises UnknownNameError."""
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownNameError(f"unknown diagram '{name}'")
