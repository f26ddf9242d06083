"""Exact linear algebra: Bareiss determinants over Z[T], Smith normal
form over the Euclidean domains Z and F_p[T], and kernels over F_q.

Matrices are plain lists of lists.  Entries are LaurentPoly for the
determinant routines, ints for Z, ascending coefficient tuples for
F_p[T], and encoded field ints for F_q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import ZERO, ONE, LaurentPoly
from . import fields as ff
from .fields import FqField


# -- determinants over Z[T, T^-1] ----------------------------------------------

def laurent_det(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant of a square LaurentPoly matrix.

    T-powers are cleared row by row, then fraction-free (Bareiss)
    elimination runs over Z[T]; every division is exact by the Sylvester
    identity.
    """
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n == 0:
        return ONE
    shift = 0
    mat = []
    for row in rows:
        degs = [e.min_deg for e in row if not e.is_zero]
        if not degs:
            return ZERO
        s = min(degs)
        shift += s
        mat.append([e.shift(-s) for e in row])
    sign = 1
    prev = ONE
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if not mat[i][k].is_zero), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != k:
            mat[pivot_row], mat[k] = mat[k], mat[pivot_row]
            sign = -sign
        pivot = mat[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * mat[i][j] - mat[i][k] * mat[k][j]
                mat[i][j] = num.exact_div(prev)
            mat[i][k] = ZERO
        prev = pivot
    det = mat[n - 1][n - 1].shift(shift)
    return -det if sign < 0 else det


def minor_dets(rows, order: int) -> list[LaurentPoly]:
    """Determinants of all order x order submatrices (row-major combination
    order); empty when the matrix has no submatrix of that size."""
    from itertools import combinations

    m, n = len(rows), len(rows[0]) if rows else 0
    if order <= 0 or order > m or order > n:
        return []
    out = []
    for ri in combinations(range(m), order):
        picked = [rows[i] for i in ri]
        for ci in combinations(range(n), order):
            out.append(laurent_det([[row[j] for j in ci] for row in picked]))
    return out


# -- Smith normal form ---------------------------------------------------------

class RingZ:
    """Euclidean-domain hooks for Z."""

    name = "Z"
    zero = 0
    one = 1

    def is_zero(self, x):
        return x == 0

    def norm(self, x):
        return abs(x)

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def divmod(self, x, y):
        q, r = divmod(x, y)
        return q, r

    def unit_to_normal(self, x):
        """Unit u with u*x in normal form (positive / monic)."""
        return -1 if x < 0 else 1

    def divides(self, x, y):
        """x | y."""
        return y % x == 0 if x else y == 0


class RingFpT:
    """Euclidean-domain hooks for F_p[T] on coefficient tuples."""

    zero = ()
    one = (1,)

    def __init__(self, p: int):
        if not ff.is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"F_{p}[T]"

    def is_zero(self, x):
        return not x

    def norm(self, x):
        return len(x)

    def add(self, x, y):
        return ff.fp_add(x, y, self.p)

    def neg(self, x):
        return ff.fp_neg(x, self.p)

    def mul(self, x, y):
        return ff.fp_mul(x, y, self.p)

    def divmod(self, x, y):
        return ff.fp_divmod(x, y, self.p)

    def unit_to_normal(self, x):
        return (pow(x[-1], self.p - 2, self.p),) if x else (1,)

    def divides(self, x, y):
        if self.is_zero(x):
            return self.is_zero(y)
        return self.is_zero(ff.fp_mod(y, x, self.p))


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors in ideal-increasing order: (d_1) in (d_2) in ...,
    so zeros come first and d_{i+1} divides d_i.  U and V are the recorded
    row/column transforms with U*A*V = diag(reversed factors padded)."""

    invariant_factors: tuple
    rank: int
    U: tuple
    V: tuple
    ring_name: str

    @property
    def nonzero_factors(self) -> tuple:
        return tuple(d for d in self.invariant_factors if not _is_zero_factor(d))


def snf(rows: list[list], ring) -> SnfResult:
    """Smith normal form by elementary operations over Z or F_p[T].

    Pivoting picks the smallest-norm nonzero entry (row-major tie break),
    reduces its row and column, and restarts whenever a division leaves a
    remainder; afterwards the divisibility chain is enforced pairwise.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [list(r) for r in rows]
    U = _identity(m, ring)
    V = _identity(n, ring)

    r = 0
    size = min(m, n)
    while r < size:
        pivot = _smallest_pivot(a, r, ring)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != r:
            a[pi], a[r] = a[r], a[pi]
            U[pi], U[r] = U[r], U[pi]
        if pj != r:
            _swap_cols(a, pj, r)
            _swap_cols(V, pj, r)
        while True:
            cleared = True
            for i in range(r + 1, m):
                if ring.is_zero(a[i][r]):
                    continue
                q, rem = ring.divmod(a[i][r], a[r][r])
                _row_sub(a, i, r, q, ring)
                _row_sub(U, i, r, q, ring)
                if not ring.is_zero(rem):
                    a[i], a[r] = a[r], a[i]
                    U[i], U[r] = U[r], U[i]
                    cleared = False
            for j in range(r + 1, n):
                if ring.is_zero(a[r][j]):
                    continue
                q, rem = ring.divmod(a[r][j], a[r][r])
                _col_sub(a, j, r, q, ring)
                _col_sub(V, j, r, q, ring)
                if not ring.is_zero(rem):
                    _swap_cols(a, j, r)
                    _swap_cols(V, j, r)
                    cleared = False
            if cleared:
                break
        # pivot must divide the rest of the submatrix
        offender = None
        for i in range(r + 1, m):
            for j in range(r + 1, n):
                if not ring.divides(a[r][r], a[i][j]):
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            _row_add(a, r, offender, ring)
            _row_add(U, r, offender, ring)
            continue
        u = ring.unit_to_normal(a[r][r])
        if u != ring.one:
            a[r] = [ring.mul(u, x) for x in a[r]]
            U[r] = [ring.mul(u, x) for x in U[r]]
        r += 1

    chain = [a[i][i] for i in range(r)]
    factors = tuple([ring.zero] * (size - r)) + tuple(reversed(chain))
    return SnfResult(factors, r, _freeze(U), _freeze(V), ring.name)


def _identity(k, ring):
    return [[ring.one if i == j else ring.zero for j in range(k)] for i in range(k)]


def _freeze(mat):
    return tuple(tuple(row) for row in mat)


def _smallest_pivot(a, r, ring):
    best = None
    for i in range(r, len(a)):
        for j in range(r, len(a[0])):
            if not ring.is_zero(a[i][j]):
                if best is None or ring.norm(a[i][j]) < ring.norm(a[best[0]][best[1]]):
                    best = (i, j)
    return best


def _row_sub(mat, i, r, q, ring):
    if ring.is_zero(q):
        return
    mat[i] = [ring.add(x, ring.neg(ring.mul(q, y))) for x, y in zip(mat[i], mat[r])]


def _row_add(mat, i, r, ring):
    mat[i] = [ring.add(x, y) for x, y in zip(mat[i], mat[r])]


def _col_sub(mat, j, r, q, ring):
    if ring.is_zero(q):
        return
    for row in mat:
        row[j] = ring.add(row[j], ring.neg(ring.mul(q, row[r])))


def _swap_cols(mat, j, r):
    for row in mat:
        row[j], row[r] = row[r], row[j]


def snf_diagonal(res: SnfResult) -> list[list]:
    """The diagonal matrix U*A*V that snf() certifies (divisibility-increasing
    along the diagonal, zero rows last)."""
    m, n = len(res.U), len(res.V)
    zero = 0 if res.ring_name == "Z" else ()
    chain = [d for d in res.invariant_factors if not _is_zero_factor(d)]
    chain.reverse()
    out = [[zero] * n for _ in range(m)]
    for i, d in enumerate(chain):
        out[i][i] = d
    return out


def _is_zero_factor(d):
    return d == 0 or d == ()


# -- linear algebra over F_q ----------------------------------------------------

def rref(field: FqField, rows: list[list[int]]):
    """Reduced row echelon form; returns (rref rows, pivot column list)."""
    mat = [list(r) for r in rows]
    m = len(mat)
    n = len(mat[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, x) for x in mat[r]]
        for i in range(m):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return mat[:r], pivots


def rank(field: FqField, rows: list[list[int]]) -> int:
    return len(rref(field, rows)[0])


def kernel_basis(field: FqField, rows: list[list[int]], ncols: int | None = None) -> list[list[int]]:
    """Row basis of {x : rows . x^T = 0} over F_q.

    ncols must be given for a matrix with no rows (the kernel is then the
    whole space).
    """
    if ncols is None:
        if not rows:
            raise ValueError("ncols needed for an empty matrix")
        ncols = len(rows[0])
    red, pivots = rref(field, rows) if rows else ([], [])
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = field.from_int(1)
        for i, pc in enumerate(pivots):
            vec[pc] = field.neg(red[i][fc])
        basis.append(vec)
    return basis


def mat_mul(ring, A, B):
    """Ring matrix product (used to certify U*A*V against the SNF diagonal)."""
    if not A or not B:
        return []
    n, k, m = len(A), len(B), len(B[0])
    out = [[ring.zero] * m for _ in range(n)]
    for i in range(n):
        for l in range(k):
            x = A[i][l]
            if ring.is_zero(x):
                continue
            for j in range(m):
                out[i][j] = ring.add(out[i][j], ring.mul(x, B[l][j]))
    return out
