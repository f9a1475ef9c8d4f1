"""
Constraint kinds and their signatures.

A signature gives the arity, the backing table and the source/target object
of each constraint as functions of an object algebra `ops` that provides
`plus`, `times`, `zero` and `one`. A FiniteRing is such an algebra (numeric
objects, scalar or vectorised); so is the symbolic algebra of the diagram
language, which is how naturality squares are generated.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Tuple

from ...exceptions import UnknownNameError

# Order of the structure-constant tables, also the enumeration order of a search.
TABLE_NAMES: Tuple[str, ...] = ('xi', 'eta', 'g', 'd', 'alpha', 'lam_u', 'rho_u', 'ldist', 'rdist')

# Number of ring arguments per table.
TABLE_ARITY: Dict[str, int] = {
    'xi': 3, 'eta': 2, 'g': 1, 'd': 1, 'alpha': 3, 'lam_u': 1, 'rho_u': 1, 'ldist': 3, 'rdist': 3,
}

# Model-file section names; everything else uses the table name itself.
FILE_KEYS: Dict[str, str] = {'ldist': 'L', 'rdist': 'R'}

TABLE_ALIASES: Dict[str, str] = {
    **{name: name for name in TABLE_NAMES},
    'L': 'ldist', 'R': 'rdist', 'Ldist': 'ldist', 'Rdist': 'rdist',
    'lam': 'lam_u', 'rho': 'rho_u', 'a': 'alpha', 'aplus': 'xi', 'c': 'eta',
}


class ConstraintKind(str, Enum):
    APLUS = "aplus"
    C = "c"
    G = "g"
    D = "d"
    A = "a"
    L_UNIT = "l"
    R_UNIT = "r"
    L = "L"
    R = "R"
    LHAT = "lhat"
    RHAT = "rhat"

    @classmethod
    def parse(cls, token: str) -> "ConstraintKind":
        try:
            return cls(token)
        except ValueError:
            raise UnknownNameError(f"unknown constraint kind '{token}'")

    @property
    def derived(self) -> bool:
        return self in (ConstraintKind.LHAT, ConstraintKind.RHAT)


@dataclass(frozen=True)
class Signature:
    arity: int
    table: str
    source: Callable
    target: Callable
    description: str


SIGNATURES: Dict[ConstraintKind, Signature] = {
    ConstraintKind.APLUS: Signature(
        3, 'xi',
        lambda o, x, y, z: o.plus(o.plus(x, y), z),
        lambda o, x, y, z: o.plus(x, o.plus(y, z)),
        "(x+y)+z -> x+(y+z)",
    ),
    ConstraintKind.C: Signature(
        2, 'eta',
        lambda o, x, y: o.plus(x, y),
        lambda o, x, y: o.plus(y, x),
        "x+y -> y+x",
    ),
    ConstraintKind.G: Signature(
        1, 'g',
        lambda o, x: o.plus(o.zero, x),
        lambda o, x: x,
        "0+x -> x",
    ),
    ConstraintKind.D: Signature(
        1, 'd',
        lambda o, x: o.plus(x, o.zero),
        lambda o, x: x,
        "x+0 -> x",
    ),
    ConstraintKind.A: Signature(
        3, 'alpha',
        lambda o, x, y, z: o.times(x, o.times(y, z)),
        lambda o, x, y, z: o.times(o.times(x, y), z),
        "x(yz) -> (xy)z",
    ),
    ConstraintKind.L_UNIT: Signature(
        1, 'lam_u',
        lambda o, x: o.times(o.one, x),
        lambda o, x: x,
        "1x -> x",
    ),
    ConstraintKind.R_UNIT: Signature(
        1, 'rho_u',
        lambda o, x: o.times(x, o.one),
        lambda o, x: x,
        "x1 -> x",
    ),
    ConstraintKind.L: Signature(
        3, 'ldist',
        lambda o, a, x, y: o.times(a, o.plus(x, y)),
        lambda o, a, x, y: o.plus(o.times(a, x), o.times(a, y)),
        "A(X+Y) -> AX+AY",
    ),
    ConstraintKind.R: Signature(
        3, 'rdist',
        lambda o, x, y, a: o.times(o.plus(x, y), a),
        lambda o, x, y, a: o.plus(o.times(x, a), o.times(y, a)),
        "(X+Y)A -> XA+YA",
    ),
    ConstraintKind.LHAT: Signature(
        1, 'lhat',
        lambda o, a: o.times(a, o.zero),
        lambda o, a: o.zero,
        "A0 -> 0",
    ),
    ConstraintKind.RHAT: Signature(
        1, 'rhat',
        lambda o, a: o.times(o.zero, a),
        lambda o, a: o.zero,
        "0A -> 0",
    ),
}

STRUCTURAL_KINDS: Tuple[ConstraintKind, ...] = tuple(k for k in ConstraintKind if not k.derived)


def table_name(token: str) -> str:
    """Canonical table name for a table token (accepts L/R and other aliases)."""
    try:
        return TABLE_ALIASES[token]
    except KeyError:
        raise UnknownNameError(f"unknown constraint table '{token}'")
