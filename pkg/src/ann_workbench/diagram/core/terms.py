"""
The term language of coherence diagrams.

Object expressions (ObjExpr) are built from variables and the constants 0
and 1 with `+` and `*`. Morphism terms (MorTerm) are built from identities,
constraint instances and generic morphisms with

    f >> g    composite, f then g
    f + g     f ⊕ g
    f * g     f ⊗ g
    ~f        inverse

so a diagram edge such as "id_A ⊗ L̆^B followed by L̆^A" reads
`(Id(A) * L(B, X, Y)) >> L(A, B * X, B * Y)`.
"""
from dataclasses import dataclass
from typing import FrozenSet, List, Sequence, Tuple, Union

from ...exceptions import ArityError
from ...model.core.constraints import SIGNATURES, ConstraintKind


class ObjExpr:
    def __add__(self, other: "ObjExpr") -> "ObjExpr":
        return Sum(self, other)

    def __mul__(self, other: "ObjExpr") -> "ObjExpr":
        return Product(self, other)


@dataclass(frozen=True)
class Var(ObjExpr):
    index: int


@dataclass(frozen=True)
class Zero(ObjExpr):
    pass


@dataclass(frozen=True)
class One(ObjExpr):
    pass


@dataclass(frozen=True)
class Sum(ObjExpr):
    left: ObjExpr
    right: ObjExpr


@dataclass(frozen=True)
class Product(ObjExpr):
    left: ObjExpr
    right: ObjExpr


ZERO = Zero()
ONE = One()


class _SymbolicOps:
    """Object algebra over ObjExpr, so constraint signatures can build expressions."""

    zero = ZERO
    one = ONE

    @staticmethod
    def plus(x: ObjExpr, y: ObjExpr) -> ObjExpr:
        return Sum(x, y)

    @staticmethod
    def times(x: ObjExpr, y: ObjExpr) -> ObjExpr:
        return Product(x, y)


SYMBOLIC = _SymbolicOps()


class MorTerm:
    def __rshift__(self, other: "MorTerm") -> "MorTerm":
        return Comp(self, other)

    def __add__(self, other: "MorTerm") -> "MorTerm":
        return OPlus(self, other)

    def __mul__(self, other: "MorTerm") -> "MorTerm":
        return OTimes(self, other)

    def __invert__(self) -> "MorTerm":
        return Inv(self)


@dataclass(frozen=True)
class Id(MorTerm):
    obj: ObjExpr


@dataclass(frozen=True)
class Constraint(MorTerm):
    kind: ConstraintKind
    args: Tuple[ObjExpr, ...]

    def __post_init__(self):
        kind = self.kind if isinstance(self.kind, ConstraintKind) else ConstraintKind.parse(self.kind)
        object.__setattr__(self, 'kind', kind)
        object.__setattr__(self, 'args', tuple(self.args))
        expected = SIGNATURES[kind].arity
        if len(self.args) != expected:
            raise ArityError(f"constraint '{kind.value}' takes {expected} arguments, got {len(self.args)}")

    @property
    def source(self) -> ObjExpr:
        return SIGNATURES[self.kind].source(SYMBOLIC, *self.args)

    @property
    def target(self) -> ObjExpr:
        return SIGNATURES[self.kind].target(SYMBOLIC, *self.args)


@dataclass(frozen=True)
class GenMor(MorTerm):
    """A generic automorphism of the object declared for `slot`."""

    slot: int


@dataclass(frozen=True)
class Inv(MorTerm):
    term: MorTerm


@dataclass(frozen=True)
class Comp(MorTerm):
    first: MorTerm
    second: MorTerm


@dataclass(frozen=True)
class OPlus(MorTerm):
    left: MorTerm
    right: MorTerm


@dataclass(frozen=True)
class OTimes(MorTerm):
    left: MorTerm
    right: MorTerm


def con(kind: Union[ConstraintKind, str], *args: ObjExpr) -> Constraint:
    """Constraint term from a kind or its token, e.g. con('L', A, X, Y)."""
    return Constraint(kind, tuple(args))


def lift(expr: ObjExpr) -> MorTerm:
    """
    The morphism obtained by substituting generic morphism i for variable i
    in an object expression (identities on the constants).
    """
    match expr:
        case Var(index):
            return GenMor(index)
        case Zero() | One():
            return Id(expr)
        case Sum(left, right):
            return OPlus(lift(left), lift(right))
        case Product(left, right):
            return OTimes(lift(left), lift(right))
    raise TypeError(f"not an object expression: {expr!r}")


def kinds(term: MorTerm) -> FrozenSet[ConstraintKind]:
    """Constraint kinds occurring in a term."""
    match term:
        case Constraint(kind, _):
            return frozenset({kind})
        case Id(_) | GenMor(_):
            return frozenset()
        case Inv(inner):
            return kinds(inner)
        case Comp(left, right) | OPlus(left, right) | OTimes(left, right):
            return kinds(left) | kinds(right)
    raise TypeError(f"not a morphism term: {term!r}")


def flatten_comp(term: MorTerm) -> List[MorTerm]:
    """The arrows of a composite chain, in order."""
    if isinstance(term, Comp):
        return flatten_comp(term.first) + flatten_comp(term.second)
    return [term]


def max_var(expr: ObjExpr) -> int:
    """Largest variable index in an expression, -1 when there is none."""
    match expr:
        case Var(index):
            return index
        case Sum(left, right) | Product(left, right):
            return max(max_var(left), max_var(right))
    return -1


def term_objects(term: MorTerm) -> List[ObjExpr]:
    match term:
        case Id(obj):
            return [obj]
        case Constraint(_, args):
            return list(args)
        case GenMor(_):
            return []
        case Inv(inner):
            return term_objects(inner)
        case Comp(left, right) | OPlus(left, right) | OTimes(left, right):
            return term_objects(left) + term_objects(right)
    raise TypeError(f"not a morphism term: {term!r}")


def render_obj(expr: ObjExpr, names: Sequence[str]) -> str:
    match expr:
        case Var(index):
            return names[index] if index < len(names) else f"x{index}"
        case Zero():
            return "0"
        case One():
            return "1"
        case Sum(left, right):
            return f"({render_obj(left, names)}+{render_obj(right, names)})"
        case Product(left, right):
            return f"{_factor(left, names)}{_factor(right, names)}"
    raise TypeError(f"not an object expression: {expr!r}")


def _factor(expr: ObjExpr, names: Sequence[str]) -> str:
    text = render_obj(expr, names)
    if isinstance(expr, Product) or (isinstance(expr, Var) and len(text) > 1):
        return f"({text})"
    return text


def render(term: MorTerm, names: Sequence[str] = ()) -> str:
    """Human-readable form of a term, e.g. `id(A)⊗L(B,X,Y)`."""
    match term:
        case Id(obj):
            return f"id({render_obj(obj, names)})"
        case Constraint(kind, args):
            return f"{kind.value}({','.join(render_obj(a, names) for a in args)})"
        case GenMor(slot):
            return f"u{slot}"
        case Inv(inner):
            return f"{render(inner, names)}⁻¹"
        case Comp(first, second):
            return f"{render(first, names)} ; {render(second, names)}"
        case OPlus(left, right):
            return f"({render(left, names)}⊕{render(right, names)})"
        case OTimes(left, right):
            return f"({render(left, names)}⊗{render(right, names)})"
    raise TypeError(f"not a morphism term: {term!r}")
