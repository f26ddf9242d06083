"""Exact Laurent polynomial arithmetic over the integers.

A Laurent polynomial c_k T^k + ... + c_m T^m is stored as the coefficient
tuple (c_k, ..., c_m) together with the lowest exponent k.  The stored
coefficients never have zero at either end; the zero polynomial is the
empty tuple with min_deg 0.  All arithmetic is exact (Python ints).

Plain integer polynomials are the special case min_deg >= 0; the helpers
that require them (exact division, gcd) say so.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class LaurentPoly:
    coeffs: tuple[int, ...]
    min_deg: int = 0

    @staticmethod
    def make(coeffs, min_deg: int = 0) -> "LaurentPoly":
        """Build a normalized Laurent polynomial from any coefficient sequence."""
        c = list(coeffs)
        lo = 0
        while c and c[-1] == 0:
            c.pop()
        while c and c[lo] == 0:
            lo += 1
        if lo:
            c = c[lo:]
        if not c:
            return LaurentPoly((), 0)
        return LaurentPoly(tuple(c), min_deg + lo)

    @staticmethod
    def const(n: int) -> "LaurentPoly":
        return LaurentPoly.make((n,))

    @staticmethod
    def t_power(s: int) -> "LaurentPoly":
        return LaurentPoly((1,), s)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_deg(self) -> int:
        if self.is_zero:
            return 0
        return self.min_deg + len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        i = k - self.min_deg
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.min_deg, other.min_deg)
        hi = max(self.max_deg, other.max_deg)
        c = [self.coeff(k) + other.coeff(k) for k in range(lo, hi + 1)]
        return LaurentPoly.make(c, lo)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple(-c for c in self.coeffs), self.min_deg)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero or other.is_zero:
            return ZERO
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return LaurentPoly.make(out, self.min_deg + other.min_deg)

    def scale(self, n: int) -> "LaurentPoly":
        if n == 0:
            return ZERO
        return LaurentPoly(tuple(n * c for c in self.coeffs), self.min_deg)

    def shift(self, s: int) -> "LaurentPoly":
        """Multiply by T^s."""
        if self.is_zero:
            return self
        return LaurentPoly(self.coeffs, self.min_deg + s)

    def subst_power(self, b: int) -> "LaurentPoly":
        """Substitute T -> T^b (b >= 1)."""
        if b < 1:
            raise ValueError("power substitution needs b >= 1")
        if self.is_zero or b == 1:
            return self
        out = [0] * ((len(self.coeffs) - 1) * b + 1)
        for i, c in enumerate(self.coeffs):
            out[i * b] = c
        return LaurentPoly.make(out, self.min_deg * b)

    def eval_int(self, t: int) -> int:
        """Exact value at an integer t; 0 and negative exponents need t = +-1."""
        if self.is_zero:
            return 0
        if self.min_deg < 0:
            if t in (1, -1):
                return sum(c * t ** ((self.min_deg + i) % 2) for i, c in enumerate(self.coeffs))
            raise ValueError("negative exponents: evaluation only at t = +-1")
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc * t ** self.min_deg

    # -- division -----------------------------------------------------------

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / other in Z[T, T^-1]; raises if not divisible."""
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return ZERO
        q, r = _divmod_int_poly(list(self.coeffs), list(other.coeffs))
        if q is None or any(r):
            raise ValueError("polynomial division is not exact")
        return LaurentPoly.make(q, self.min_deg - other.min_deg)

    def divides(self, other: "LaurentPoly") -> bool:
        if self.is_zero:
            return other.is_zero
        if other.is_zero:
            return True
        try:
            other.exact_div(self)
            return True
        except ValueError:
            return False

    def unit_ratio(self, other: "LaurentPoly"):
        """If self = +-T^s * other, return (sign, s); otherwise None."""
        if self.is_zero or other.is_zero:
            return (1, 0) if self.is_zero and other.is_zero else None
        if self.coeffs == other.coeffs:
            return (1, self.min_deg - other.min_deg)
        if self.coeffs == tuple(-c for c in other.coeffs):
            return (-1, self.min_deg - other.min_deg)
        return None

    # -- normalizations ------------------------------------------------------

    def alexander_normalized(self) -> "LaurentPoly":
        """Scale by +-T^s so min_deg is 0 and the constant term is positive."""
        if self.is_zero:
            return self
        p = LaurentPoly(self.coeffs, 0)
        if p.coeffs[0] < 0:
            p = -p
        return p

    @property
    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive_part(self) -> "LaurentPoly":
        if self.is_zero:
            return self
        g = self.content
        p = LaurentPoly(tuple(c // g for c in self.coeffs), self.min_deg)
        return p if p.coeffs[-1] > 0 else -p

    # -- io -------------------------------------------------------------------

    def to_json(self) -> dict:
        return {"min_deg": self.min_deg, "coeffs": list(self.coeffs)}

    @staticmethod
    def from_json(obj) -> "LaurentPoly":
        return LaurentPoly.make([int(c) for c in obj["coeffs"]], int(obj["min_deg"]))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            k = self.min_deg + i
            if k == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}T" if k == 1 else f"{mag}T^{k}"
            parts.append(("- " if c < 0 else "+ ") + term)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


ZERO = LaurentPoly((), 0)
ONE = LaurentPoly((1,), 0)
T = LaurentPoly((1,), 1)


def _divmod_int_poly(a: list[int], b: list[int]):
    """Schoolbook divmod of integer coefficient lists (ascending order).

    Returns (quotient, remainder) when every quotient coefficient is an
    exact integer, else (None, a).  Exactness per step suffices for the
    Bareiss divisions and for divisibility tests of exact products.
    """
    if len(a) < len(b):
        return ([], a)
    lead = b[-1]
    rem = a[:]
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        num = rem[k + len(b) - 1]
        if num % lead:
            return (None, a)
        c = num // lead
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                rem[k + j] -= c * bj
    return (q, rem[: len(b) - 1])


def int_poly_divmod(a: LaurentPoly, b: LaurentPoly):
    """Divmod in Z[T] when the leading coefficient divides at each step."""
    if a.min_deg < 0 or b.min_deg < 0:
        raise ValueError("divmod needs plain polynomials (min_deg >= 0)")
    ca = [0] * a.min_deg + list(a.coeffs)
    cb = [0] * b.min_deg + list(b.coeffs)
    q, r = _divmod_int_poly(ca, cb)
    if q is None:
        return None
    return LaurentPoly.make(q), LaurentPoly.make(r)


def int_poly_content_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Gcd in Z[T] up to sign: gcd of contents times primitive-part gcd.

    Uses a primitive pseudo-remainder sequence, so it is exact over Z.
    Laurent inputs are allowed; T-power units are dropped first.
    """
    if a.is_zero and b.is_zero:
        return ZERO
    if a.is_zero or b.is_zero:
        f = (b if a.is_zero else a)
        return LaurentPoly(f.primitive_part().coeffs, 0).scale(f.content)
    ca, cb = a.content, b.content
    f, g = a.primitive_part(), b.primitive_part()
    f = LaurentPoly(f.coeffs, 0)
    g = LaurentPoly(g.coeffs, 0)
    while not g.is_zero:
        r = _pseudo_rem(f, g)
        f, g = g, r.primitive_part() if not r.is_zero else ZERO
    return f.scale(math.gcd(ca, cb))


def _pseudo_rem(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Pseudo-remainder of plain polynomials: rem(lead(b)^k * a, b)."""
    if a.max_deg < b.max_deg:
        return a
    k = a.max_deg - b.max_deg + 1
    scaled = a.scale(b.coeffs[-1] ** k)
    res = int_poly_divmod(scaled, b)
    if res is None:  # lead(b)^k scaling makes every division step exact
        raise AssertionError("pseudo-division failed")
    return res[1]
