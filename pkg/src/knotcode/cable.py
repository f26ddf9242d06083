"""Torus-knot Alexander polynomials in closed form and the dimension
calculus for (iterated) torus knots around companions.

No cable diagrams are built: over a field every evaluated elementary
ideal is 0 or everything, so an ideal sequence is just the first index
where it becomes everything (the code dimension), and cabling transforms
that index by one closed-form rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .laurent import ONE, LaurentPoly, T
from .fields import FqElem, FqField
from .diagram import Diagram
from .exactlin import rank
from .coloring import fox_rows_at


def torus_alexander(a: int, b: int) -> LaurentPoly:
    """Closed form (T^{ab} - 1)(T - 1) / ((T^a - 1)(T^b - 1)); the division
    is exact for coprime parameters.  Signs are dropped: mirrors share the
    polynomial up to units."""
    a, b = abs(a), abs(b)
    if a == 0 or b == 0:
        raise ValueError("torus parameters must be nonzero")
    if math.gcd(a, b) != 1:
        raise ValueError(f"({a},{b}) not coprime")
    num = (T.subst_power(a * b) - ONE) * (T - ONE)
    den = (T.subst_power(a) - ONE) * (T.subst_power(b) - ONE)
    return num.exact_div(den).alexander_normalized()


def cable_alexander(base: LaurentPoly, a: int, b: int) -> LaurentPoly:
    """Alexander polynomial of the (a,b)-torus knot around a companion
    with polynomial base: the torus factor times base(T^b)."""
    a, b = abs(a), abs(b)
    return (torus_alexander(a, b) * base.subst_power(b)).alexander_normalized()


@dataclass(frozen=True)
class EvaluatedIdealSeq:
    """Evaluated elementary ideals of a coloring matrix over a field:
    flag k is True when the k-th ideal is the whole field.  Flags are
    monotone, so the sequence is just its threshold, which equals the
    code dimension."""

    field: FqField
    t: FqElem
    dimension: int
    length: int | None = None  # columns of the matrix, when it came from one

    def flag(self, k: int) -> bool:
        return k >= self.dimension

    def flags_prefix(self, upto: int | None = None) -> tuple[bool, ...]:
        stop = self.dimension + 2 if upto is None else upto
        return tuple(self.flag(k) for k in range(stop + 1))


def ideal_seq_from_diagram(d: Diagram, field: FqField, t) -> EvaluatedIdealSeq:
    te = field.element(t)
    rows = fox_rows_at(d, field, te.val)
    n = max(d.arc_count, 1)
    dim = n - rank(field, rows)
    if d.n >= 1 and dim < 1:
        raise AssertionError("coloring matrix of a knot diagram must be singular")
    return EvaluatedIdealSeq(field, te, dim, n)


def torus_delta(field: FqField, a: int, b: int, t) -> FqElem:
    """The torus Alexander value at t, the quantity that decides whether
    cabling bumps the dimension."""
    te = field.element(t)
    return FqElem(field, field.eval_laurent(torus_alexander(a, b), te.val))


def cable_ideal_seq(base: EvaluatedIdealSeq, a: int, b: int, t) -> EvaluatedIdealSeq:
    """Ideal sequence of the (a,b)-torus knot around the companion whose
    sequence is base, evaluated at t.

    The k-th flag becomes (delta != 0 and e_k) or e_{k-1} with
    delta = torus Alexander at t, so the dimension moves up by one
    exactly when delta vanishes.  base must be evaluated at t^b.
    """
    a, b = abs(a), abs(b)
    te = base.field.element(t)
    if (te ** b).val != base.t.val:
        raise ValueError("base sequence must be evaluated at t^b")
    delta = torus_delta(base.field, a, b, te)
    bump = 1 if delta.is_zero else 0
    return EvaluatedIdealSeq(base.field, te, base.dimension + bump, None)


def unknot_ideal_seq(field: FqField, t) -> EvaluatedIdealSeq:
    """Companion seed: the unknot has only the trivial colorings."""
    return EvaluatedIdealSeq(field, field.element(t), 1, 1)


def iterated_cable_length(p: int, m: int) -> int:
    """Length of the code of the m-fold (2,p) iterated torus knot:
    n_1 = 3 and n_{m+1} = 4 n_m + p."""
    if m < 1:
        raise ValueError("need m >= 1 iterations")
    n = 3
    for _ in range(m - 1):
        n = 4 * n + p
    return n
