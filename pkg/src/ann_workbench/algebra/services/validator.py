"""
Exhaustive law checks for FiniteRing and FiniteBimodule.

Every law is evaluated over its whole index domain at once; a violated law
is reported with the lexicographically first witness tuple.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from ...exceptions import ShapeError
from ..core.finite_bimodule import FiniteBimodule
from ..core.finite_ring import FiniteRing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LawViolation:
    law: str
    witness: Tuple[int, ...]
    detail: str = ""

    def __str__(self):
        extra = f" ({self.detail})" if self.detail else ""
        return f"{self.law}{extra} fails at {self.witness}"


@dataclass(frozen=True)
class ValidationReport:
    subject: str
    violations: List[LawViolation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def laws(self) -> List[str]:
        return [v.law for v in self.violations]

    def summary(self) -> str:
        if self.passed:
            return f"{self.subject}: all laws hold"
        return f"{self.subject}: " + "; ".join(str(v) for v in self.violations)


def _first_failure(ok: np.ndarray):
    bad = np.argwhere(~np.asarray(ok, dtype=bool))
    if len(bad) == 0:
        return None
    return tuple(int(i) for i in bad[0])


class _Collector:
    def __init__(self):
        self.violations: List[LawViolation] = []

    def check(self, law: str, ok: np.ndarray, detail: str = ""):
        witness = _first_failure(ok)
        if witness is not None:
            self.violations.append(LawViolation(law, witness, detail))


def _group_laws(collector: _Collector, add: np.ndarray, zero: int, neg: np.ndarray):
    k = len(add)
    x, y, z = np.ix_(np.arange(k), np.arange(k), np.arange(k))
    a = np.arange(k)
    collector.check("additive associativity", add[add[x, y], z] == add[x, add[y, z]])
    collector.check("additive commutativity", add == add.T)
    collector.check("additive identity", (add[zero, a] == a) & (add[a, zero] == a))
    collector.check("additive inverse", (add[a, neg] == zero) & (add[neg, a] == zero))


def validate_ring(ring: FiniteRing) -> ValidationReport:
    """All FiniteRing laws, pointwise over every tuple."""
    n = ring.order
    add, mul = ring.add, ring.mul
    if add.shape != (n, n) or mul.shape != (n, n) or ring.neg.shape != (n,):
        raise ShapeError(f"ring tables do not match order {n}")

    collector = _Collector()
    _group_laws(collector, add, ring.zero, ring.neg)

    x, y, z = np.ix_(np.arange(n), np.arange(n), np.arange(n))
    a = np.arange(n)
    collector.check("multiplicative associativity", mul[mul[x, y], z] == mul[x, mul[y, z]])
    collector.check("multiplicative identity", (mul[ring.one, a] == a) & (mul[a, ring.one] == a))
    collector.check("left distributivity", mul[x, add[y, z]] == add[mul[x, y], mul[x, z]])
    collector.check("right distributivity", mul[add[x, y], z] == add[mul[x, z], mul[y, z]])

    report = ValidationReport("ring", collector.violations)
    if not report.passed:
        logger.info(report.summary())
    return report


def validate_bimodule(ring: FiniteRing, module: FiniteBimodule) -> ValidationReport:
    """All FiniteBimodule laws over `ring`, pointwise over every tuple."""
    n, m = ring.order, module.order
    if module.left_action.shape != (n, m) or module.right_action.shape != (m, n):
        raise ShapeError(
            f"action tables {module.left_action.shape}/{module.right_action.shape} "
            f"do not match ring order {n} and module order {m}"
        )

    collector = _Collector()
    add, left, right = module.add, module.left_action, module.right_action
    _group_laws(collector, add, module.zero, module.neg)

    u = np.arange(m)
    collector.check("unital action", left[ring.one, u] == u, "left")
    collector.check("unital action", right[u, ring.one] == u, "right")

    # (x, y, u) grids
    x, y, v = np.ix_(np.arange(n), np.arange(n), np.arange(m))
    collector.check(
        "additivity of action", left[ring.add[x, y], v] == add[left[x, v], left[y, v]], "left, ring argument"
    )
    collector.check(
        "additivity of action", right[v, ring.add[x, y]] == add[right[v, x], right[v, y]], "right, ring argument"
    )
    collector.check("associativity of action", left[ring.mul[x, y], v] == left[x, left[y, v]], "left")
    collector.check("associativity of action", right[v, ring.mul[x, y]] == right[right[v, x], y], "right")
    collector.check("compatibility of actions", right[left[x, v], y] == left[x, right[v, y]])

    # (x, u, w) grids
    x, v, w = np.ix_(np.arange(n), np.arange(m), np.arange(m))
    collector.check(
        "additivity of action", left[x, add[v, w]] == add[left[x, v], left[x, w]], "left, module argument"
    )
    collector.check(
        "additivity of action", right[add[v, w], x] == add[right[v, x], right[w, x]], "right, module argument"
    )

    report = ValidationReport("bimodule", collector.violations)
    if not report.passed:
        logger.info(report.summary())
    return report
