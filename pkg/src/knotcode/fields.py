"""Finite fields F_{p^a} and polynomial arithmetic over F_p.

Polynomials over F_p are ascending coefficient tuples of ints in
{0, ..., p-1}; the zero polynomial is the empty tuple.  A field is a
prime p plus a monic irreducible modulus of degree a >= 1 (degree-1
modulus (0, 1) gives the prime field itself).

Field elements are encoded as integers in range(q): the element with
coefficient vector (c_0, ..., c_{a-1}) is c_0 + c_1 p + ... .  Small
add/mul/inv tables are built lazily so that the linear algebra and the
codeword enumeration can run on plain ints.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TABLE_LIMIT = 4096  # build dense q x q tables only below this


def is_prime(n: int) -> bool:
    """Trial division below 10^6, deterministic Miller-Rabin above."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < 10**6:
        d = 41
        while d * d <= n:
            if n % d == 0:
                return False
            d += 2
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# -- F_p[T] on coefficient tuples ---------------------------------------------

def fp_trim(c, p: int) -> tuple[int, ...]:
    c = [x % p for x in c]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def fp_add(a, b, p):
    n = max(len(a), len(b))
    return fp_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], p)


def fp_neg(a, p):
    return tuple((p - x) % p for x in a)


def fp_sub(a, b, p):
    return fp_add(a, fp_neg(b, p), p)


def fp_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return fp_trim(out, p)


def fp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] * inv_lead % p
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] = (a[k + j] - c * bj) % p
    return fp_trim(q, p), fp_trim(a[: len(b) - 1], p)


def fp_mod(a, b, p):
    return fp_divmod(a, b, p)[1]


def fp_monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], p - 2, p)
    return fp_trim([x * inv for x in a], p)


def poly_gcd(a, b, p):
    """Monic gcd in F_p[T]."""
    a, b = fp_trim(a, p), fp_trim(b, p)
    while b:
        a, b = b, fp_mod(a, b, p)
    return fp_monic(a, p)


def fp_gcdext(a, b, p):
    """Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = fp_trim(a, p), fp_trim(b, p)
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = fp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, fp_sub(s0, fp_mul(q, s1, p), p)
        t0, t1 = t1, fp_sub(t0, fp_mul(q, t1, p), p)
    if not r0:
        return (), s0, t0
    inv = pow(r0[-1], p - 2, p)
    scale = (inv,)
    return fp_monic(r0, p), fp_mul(s0, scale, p), fp_mul(t0, scale, p)


def fp_pow_mod(a, e: int, m, p):
    result = (1,)
    a = fp_mod(a, m, p)
    while e:
        if e & 1:
            result = fp_mod(fp_mul(result, a, p), m, p)
        a = fp_mod(fp_mul(a, a, p), m, p)
        e >>= 1
    return result


def fp_is_irreducible(f, p) -> bool:
    """Distinct-degree test: f of degree a is irreducible over F_p iff
    T^{p^a} = T (mod f) and gcd(T^{p^{a/l}} - T, f) = 1 for prime l | a."""
    f = fp_trim(f, p)
    a = len(f) - 1
    if a < 1:
        return False
    if a == 1:
        return True
    t = (0, 1)
    x = fp_pow_mod(t, p**a, f, p)
    if x != fp_mod(t, f, p):
        return False
    for l in _prime_factors(a):
        x = fp_pow_mod(t, p ** (a // l), f, p)
        if poly_gcd(fp_sub(x, t, p), f, p) != (1,):
            return False
    return True


def _prime_factors(n: int):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def fp_from_laurent(poly: LaurentPoly, p: int):
    """Reduce an integer polynomial (min_deg >= 0) mod p."""
    if poly.is_zero:
        return ()
    if poly.min_deg < 0:
        raise ValueError("needs a plain polynomial (min_deg >= 0)")
    return fp_trim([0] * poly.min_deg + list(poly.coeffs), p)


def fp_compose(poly: LaurentPoly, t, p):
    """Evaluate an integer polynomial at the F_p[T] element t (Horner)."""
    acc = ()
    for c in reversed(poly.coeffs):
        acc = fp_add(fp_mul(acc, t, p), fp_trim([c], p), p)
    if poly.min_deg < 0:
        raise ValueError("needs a plain polynomial (min_deg >= 0)")
    for _ in range(poly.min_deg):
        acc = fp_mul(acc, t, p)
    return acc


# -- the field ----------------------------------------------------------------

class FqField:
    """F_{p^a} = F_p[x]/(modulus); elements are ints in range(p^a)."""

    def __init__(self, p: int, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if modulus is None:
            modulus = (0, 1)
        modulus = fp_trim(modulus, p)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        if not fp_is_irreducible(modulus, p):
            raise ValueError("modulus is reducible")
        self.p = p
        self.modulus = modulus
        self.a = len(modulus) - 1
        self.q = p**self.a
        self._mul_table = None
        self._inv_table = None

    def __eq__(self, other):
        return isinstance(other, FqField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        if self.a == 1:
            return f"F_{self.p}"
        return f"F_{self.q}(p={self.p}, modulus={list(self.modulus)})"

    # encoded-int arithmetic

    def encode(self, coeffs) -> int:
        coeffs = fp_trim(coeffs, self.p)
        if len(coeffs) > self.a:
            coeffs = fp_mod(coeffs, self.modulus, self.p)
        val = 0
        for c in reversed(coeffs):
            val = val * self.p + c
        return val

    def decode(self, val: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.a):
            val, r = divmod(val, self.p)
            out.append(r)
        return tuple(out)

    def from_int(self, n: int) -> int:
        """Embed an integer (image of 1+1+...): n mod p as a constant."""
        return n % self.p

    def add(self, x: int, y: int) -> int:
        if self.a == 1:
            return (x + y) % self.p
        p = self.p
        out, mult = 0, 1
        for _ in range(self.a):
            out += (x % p + y % p) % p * mult
            x //= p
            y //= p
            mult *= p
        return out

    def neg(self, x: int) -> int:
        if self.a == 1:
            return -x % self.p
        p = self.p
        out, mult = 0, 1
        for _ in range(self.a):
            out += (-x % p) % p * mult
            x //= p
            mult *= p
        return out

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.a == 1:
            return x * y % self.p
        table = self.mul_table
        if table is not None:
            return table[x * self.q + y]
        return self._mul_slow(x, y)

    def _mul_slow(self, x: int, y: int) -> int:
        prod = fp_mod(fp_mul(self.decode(x), self.decode(y), self.p), self.modulus, self.p)
        return self.encode(prod)

    @property
    def mul_table(self):
        if self._mul_table is None and self.q <= _TABLE_LIMIT:
            q = self.q
            tab = [0] * (q * q)
            for x in range(q):
                for y in range(x, q):
                    v = self._mul_slow(x, y)
                    tab[x * q + y] = v
                    tab[y * q + x] = v
            self._mul_table = tab
        return self._mul_table

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.a == 1:
            return pow(x, self.p - 2, self.p)
        g, s, _ = fp_gcdext(self.decode(x), self.modulus, self.p)
        if g != (1,):
            raise AssertionError("modulus not coprime to element")
        return self.encode(s)

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inv(x), -e
        out, base = self.from_int(1), x
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def order(self, x: int) -> int:
        """Multiplicative order; divides q - 1."""
        if x == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        order = n
        for l in _prime_factors(n):
            while order % l == 0 and self.pow(x, order // l) == self.from_int(1):
                order //= l
        return order

    def eval_laurent(self, poly: LaurentPoly, t: int) -> int:
        """Evaluate an integer Laurent polynomial at the field element t."""
        if poly.is_zero:
            return 0
        if poly.min_deg < 0 and t == 0:
            raise ZeroDivisionError("negative exponent at t = 0")
        acc = 0
        for c in reversed(poly.coeffs):
            acc = self.add(self.mul(acc, t), self.from_int(c))
        tm = self.pow(t, poly.min_deg)
        return self.mul(acc, tm)

    def element(self, value) -> "FqElem":
        """Coerce an int, coefficient sequence, or FqElem into this field."""
        if isinstance(value, FqElem):
            if value.field != self:
                raise ValueError("element from a different field")
            return value
        if isinstance(value, int):
            return FqElem(self, self.from_int(value))
        return FqElem(self, self.encode(tuple(value)))

    def elements(self):
        return [FqElem(self, v) for v in range(self.q)]

    def to_json(self) -> dict:
        return {"p": self.p, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(obj) -> "FqField":
        return FqField(int(obj["p"]), [int(c) for c in obj["modulus"]])


@dataclass(frozen=True)
class FqElem:
    """A field element: a field reference plus its encoded value."""

    field: FqField
    val: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.decode(self.val)

    def __add__(self, other):
        other = self.field.element(other)
        return FqElem(self.field, self.field.add(self.val, other.val))

    def __sub__(self, other):
        other = self.field.element(other)
        return FqElem(self.field, self.field.sub(self.val, other.val))

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.val))

    def __mul__(self, other):
        other = self.field.element(other)
        return FqElem(self.field, self.field.mul(self.val, other.val))

    def __truediv__(self, other):
        other = self.field.element(other)
        return FqElem(self.field, self.field.mul(self.val, self.field.inv(other.val)))

    def __pow__(self, e: int):
        return FqElem(self.field, self.field.pow(self.val, e))

    def inverse(self) -> "FqElem":
        return FqElem(self.field, self.field.inv(self.val))

    @property
    def is_zero(self) -> bool:
        return self.val == 0

    @property
    def is_one(self) -> bool:
        return self.val == self.field.from_int(1)

    def order(self) -> int:
        return self.field.order(self.val)

    def to_json(self) -> list:
        return list(self.coeffs)

    def __repr__(self):
        if self.field.a == 1:
            return f"{self.val} (mod {self.field.p})"
        return f"{list(self.coeffs)} in {self.field!r}"
