"""Coloring matrices of a diagram and what they compute: the Alexander
polynomial, the knot determinant, colorability over quotient rings, exact
coloring counts, and the passage between strand and region colorings.

The Fox coloring matrix has one row per crossing and one column per arc:
the overstrand gets 1-T, the understrand leaving on the over direction's
left gets -1, the one on its right gets T (coincident roles are summed,
so a twisted crossing can have a lighter row).  The Dehn matrix has a
column per region with coefficients 1, -T, -1, T on the four quadrants.
Strand colorings are kernel vectors of the Fox matrix; region colorings
are kernel vectors of the Dehn matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .laurent import ONE, ZERO, LaurentPoly, T
from . import fields as ff
from .fields import FqField
from .diagram import Diagram, DiagramError, dehn_role_tokens
from .exactlin import RingFpT, RingZ, laurent_det, minor_dets, snf

_ONE_MINUS_T = ONE - T
_MINUS_ONE = -ONE


@dataclass(frozen=True)
class FoxMatrix:
    entries: tuple  # n x n LaurentPoly, rows by crossing, columns by arc
    arc_order: tuple[int, ...]
    crossing_order: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "entries": [[e.to_json() for e in row] for row in self.entries],
            "arc_order": list(self.arc_order),
            "crossing_order": list(self.crossing_order),
        }


@dataclass(frozen=True)
class DehnMatrix:
    entries: tuple  # n x (n+2) LaurentPoly, columns by region, unbounded last
    region_order: tuple[int, ...]
    crossing_order: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "entries": [[e.to_json() for e in row] for row in self.entries],
            "region_order": list(self.region_order),
            "crossing_order": list(self.crossing_order),
        }


def fox_matrix(d: Diagram) -> FoxMatrix:
    """Alexander / Fox coloring matrix over Z[T, T^-1]."""
    d._require_valid()
    if d.n == 0:
        raise DiagramError("the 0-crossing unknot has no coloring relations")
    n = d.n
    arcs = d.arcs
    rows = []
    for c in d.crossings:
        row = [ZERO] * n
        for arc, coeff in _fox_row_roles(c, arcs):
            row[arc] = row[arc] + coeff
        rows.append(tuple(row))
    return FoxMatrix(tuple(rows), tuple(range(n)), tuple(range(n)))


def _fox_row_roles(c, arcs):
    over = arcs[c.over_in]
    if c.sign == 1:
        left_arc, right_arc = arcs[c.under_out], arcs[c.under_in]
    else:
        left_arc, right_arc = arcs[c.under_in], arcs[c.under_out]
    return ((over, _ONE_MINUS_T), (left_arc, _MINUS_ONE), (right_arc, T))


def dehn_matrix(d: Diagram) -> DehnMatrix:
    """Dehn coloring matrix over Z[T, T^-1], one column per region."""
    d._require_valid()
    if d.n == 0:
        return DehnMatrix((), (0, 1), ())
    n = d.n
    regions = d.regions
    coeffs = (ONE, -T, _MINUS_ONE, T)
    rows = []
    for c in d.crossings:
        row = [ZERO] * (n + 2)
        for tok, coeff in zip(dehn_role_tokens(c), coeffs):
            r = regions[tok]
            row[r] = row[r] + coeff
        rows.append(tuple(row))
    return DehnMatrix(tuple(rows), tuple(range(n + 2)), tuple(range(n)))


# -- evaluated matrices over F_q -----------------------------------------------


def fox_rows_at(d: Diagram, field: FqField, t: int) -> list[list[int]]:
    """Fox matrix evaluated at the field element t (encoded ints)."""
    d._require_valid()
    arcs = d.arcs
    one = field.from_int(1)
    one_minus_t = field.sub(one, t)
    minus_one = field.neg(one)
    rows = []
    for c in d.crossings:
        row = [0] * d.n
        over = arcs[c.over_in]
        if c.sign == 1:
            left_arc, right_arc = arcs[c.under_out], arcs[c.under_in]
        else:
            left_arc, right_arc = arcs[c.under_in], arcs[c.under_out]
        row[over] = field.add(row[over], one_minus_t)
        row[left_arc] = field.add(row[left_arc], minus_one)
        row[right_arc] = field.add(row[right_arc], t)
        rows.append(row)
    return rows


def dehn_rows_at(d: Diagram, field: FqField, t: int) -> list[list[int]]:
    d._require_valid()
    regions = d.regions
    one = field.from_int(1)
    coeffs = (one, field.neg(t), field.neg(one), t)
    rows = []
    for c in d.crossings:
        row = [0] * (d.n + 2)
        for tok, coeff in zip(dehn_role_tokens(c), coeffs):
            r = regions[tok]
            row[r] = field.add(row[r], coeff)
        rows.append(row)
    return rows


def fox_rows_mod(d: Diagram, m: int, t: int) -> list[list[int]]:
    """Fox matrix evaluated at an integer t, entries reduced mod m."""
    rows = fox_rows_int(d, t)
    return [[x % m for x in row] for row in rows]


def fox_rows_int(d: Diagram, t: int) -> list[list[int]]:
    d._require_valid()
    arcs = d.arcs
    rows = []
    for c in d.crossings:
        row = [0] * d.n
        for arc, coeff in _fox_row_roles(c, arcs):
            row[arc] += coeff.eval_int(t)
        rows.append(row)
    return rows


# -- Alexander polynomial ---------------------------------------------------------


def alexander_polynomial(d: Diagram) -> LaurentPoly:
    """Normalized generator of the first elementary ideal: the (1,1) minor
    of the Fox matrix scaled to a positive constant term."""
    d._require_valid()
    if d.n == 0:
        return ONE
    rows = fox_matrix(d).entries
    minor = [list(row[1:]) for row in rows[1:]]
    delta = laurent_det(minor).alexander_normalized()
    if abs(delta.eval_int(1)) != 1:
        raise AssertionError("Alexander normalization failed: |value at 1| != 1")
    return delta


def knot_determinant(d: Diagram) -> int:
    return abs(alexander_polynomial(d).eval_int(-1))


def minor_family(d: Diagram, kind: str, k: int) -> list[LaurentPoly]:
    """All minors of the coloring matrix of order (columns - k), unnormalized."""
    if kind == "fox":
        rows = [list(r) for r in fox_matrix(d).entries]
        size = d.n
    elif kind == "dehn":
        rows = [list(r) for r in dehn_matrix(d).entries]
        size = d.n + 2
    else:
        raise ValueError("kind must be 'fox' or 'dehn'")
    if k < 0 or k > size:
        raise ValueError(f"minor order {k} outside matrix bounds")
    return minor_dets(rows, size - k)


# -- colorability and counting ------------------------------------------------------


@dataclass(frozen=True)
class IntMod:
    """The quotient ring Z/(m)."""

    m: int


@dataclass(frozen=True)
class PolyMod:
    """The quotient ring F_p[T]/(f), f given by ascending coefficients."""

    p: int
    f: tuple[int, ...]


def is_colorable(d: Diagram, ring, t) -> bool:
    """Nontrivial Fox colorability over the ring: the modulus and the
    Alexander value at t have a common factor."""
    delta = alexander_polynomial(d)
    if isinstance(ring, IntMod):
        m = ring.m
        if m < 2:
            raise ValueError("modulus must be a non-unit: m >= 2")
        if math.gcd(m, t % m) != 1:
            raise ValueError(f"t = {t} is not invertible mod {m}")
        return math.gcd(m, delta.eval_int(t) % m) != 1
    if isinstance(ring, PolyMod):
        p, f = ring.p, ff.fp_trim(ring.f, ring.p)
        if len(f) < 2:
            raise ValueError("modulus must be a non-unit polynomial (degree >= 1)")
        tp = _as_fp_poly(t, p)
        if ff.poly_gcd(f, tp, p) != (1,):
            raise ValueError("t is not invertible in the quotient")
        value = ff.fp_compose(delta, tp, p)
        return ff.poly_gcd(f, value, p) != (1,)
    if isinstance(ring, FqField):
        tv = ring.element(t).val
        if tv == 0:
            raise ValueError("t must be invertible (nonzero)")
        return ring.eval_laurent(delta, tv) == 0
    raise TypeError(f"unsupported ring {ring!r}")


def _as_fp_poly(t, p: int) -> tuple[int, ...]:
    if isinstance(t, LaurentPoly):
        return ff.fp_from_laurent(t, p)
    if isinstance(t, int):
        return ff.fp_trim([t], p)
    return ff.fp_trim(t, p)


def count_colorings_mod(d: Diagram, m: int, t: int) -> int:
    """Number of Fox colorings over Z/(m) at an invertible integer t,
    via the invariant factors of the integer matrix (never enumeration)."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    if math.gcd(m, t % m) != 1:
        raise ValueError(f"t = {t} is not invertible mod {m}")
    if d.n == 0:
        return m
    res = snf(fox_rows_int(d, t), RingZ())
    factors = res.invariant_factors
    if factors[0] != 0:
        raise AssertionError("Fox matrix should be singular over Z")
    count = m
    for di in factors[1:]:
        count *= math.gcd(m, di)
    return count


def count_colorings_poly_mod(d: Diagram, p: int, f, t) -> int:
    """Number of Fox colorings over F_p[T]/(f) at a polynomial t coprime
    to f: p to the power deg f + sum of deg gcd(f, d_i)."""
    fpoly = ff.fp_trim(f, p)
    if len(fpoly) < 2:
        raise ValueError("modulus must have degree >= 1")
    tp = _as_fp_poly(t, p)
    if ff.poly_gcd(fpoly, tp, p) != (1,):
        raise ValueError("t is not invertible in the quotient")
    if d.n == 0:
        return p ** (len(fpoly) - 1)
    ring = RingFpT(p)
    rows = []
    for frow in fox_matrix(d).entries:
        rows.append([ff.fp_compose(e, tp, p) if not e.is_zero else () for e in frow])
    res = snf(rows, ring)
    factors = res.invariant_factors
    if factors[0] != ():
        raise AssertionError("Fox matrix should be singular over F_p[T]")
    exponent = len(fpoly) - 1
    for di in factors[1:]:
        g = ff.poly_gcd(fpoly, di, p)
        exponent += len(g) - 1
    return p**exponent


# -- Fox <-> Dehn ---------------------------------------------------------------------


def fox_to_dehn(d: Diagram, field: FqField, t, fox, anchor) -> list[int]:
    """Lift a Fox coloring to the Dehn coloring with the unbounded region
    set to anchor; region colors propagate across each strand by
    x = U_left - t * U_right."""
    d._require_valid()
    tv = _field_val(field, t)
    av = _field_val(field, anchor)
    vec = [_field_val(field, x) for x in fox]
    if len(vec) != max(d.arc_count, 1):
        raise ValueError("expected one color per arc")
    if d.n == 0:
        # bare loop: outer on the strand's left; x = U_outer - t U_inner
        inner = field.mul(field.inv(tv), field.sub(av, vec[0]))
        return [inner, av]
    if any(_dot(field, row, vec) for row in fox_rows_at(d, field, tv)):
        raise ValueError("not a Fox coloring: vector is not in the kernel")
    tinv = field.inv(tv)
    regions = d.regions
    arcs = d.arcs
    colors = {d.outer_region: av}
    queue = [d.outer_region]
    by_edge = {}
    for (e, side), r in regions.items():
        by_edge.setdefault(e, {})[side] = r
    while queue:
        r = queue.pop()
        for e, sides in by_edge.items():
            if r not in sides.values():
                continue
            x = vec[arcs[e]]
            lr, rr = sides["left"], sides["right"]
            if lr in colors and rr not in colors:
                colors[rr] = field.mul(tinv, field.sub(colors[lr], x))
                queue.append(rr)
            elif rr in colors and lr not in colors:
                colors[lr] = field.add(x, field.mul(tv, colors[rr]))
                queue.append(lr)
    out = [colors[r] for r in range(d.region_count)]
    if any(_dot(field, row, out) for row in dehn_rows_at(d, field, tv)):
        raise AssertionError("lifted vector is not a Dehn coloring")
    return out


def dehn_to_fox(d: Diagram, field: FqField, t, dehn) -> list[int]:
    """Strand colors x = U_left - t * U_right of a Dehn coloring."""
    d._require_valid()
    tv = _field_val(field, t)
    vec = [_field_val(field, u) for u in dehn]
    if len(vec) != d.region_count:
        raise ValueError("expected one color per region")
    if d.n == 0:
        return [field.sub(vec[1], field.mul(tv, vec[0]))]
    if any(_dot(field, row, vec) for row in dehn_rows_at(d, field, tv)):
        raise ValueError("not a Dehn coloring: vector is not in the kernel")
    out = []
    for arc in range(d.arc_count):
        e = d.arc_edges(arc)[0]
        l, r = d.side_regions(e)
        out.append(field.sub(vec[l], field.mul(tv, vec[r])))
    return out


def _field_val(field: FqField, x) -> int:
    return field.element(x).val


def _dot(field: FqField, row, vec) -> int:
    acc = 0
    for a, b in zip(row, vec):
        if a and b:
            acc = field.add(acc, field.mul(a, b))
    return acc
