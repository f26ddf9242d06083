import pytest
from hypothesis import given, settings, strategies as st

from knotcode.exactlin import (
    RingFpT,
    RingZ,
    kernel_basis,
    laurent_det,
    mat_mul,
    minor_dets,
    rank,
    snf,
    snf_diagonal,
)
from knotcode.fields import FqField
from knotcode.laurent import ONE, T, ZERO, LaurentPoly
from oracles import cofactor_det

TREFOIL_M = [
    [ONE - T, T, -ONE],
    [-ONE, ONE - T, T],
    [T, -ONE, ONE - T],
]


def test_trefoil_minors_and_det():
    minor11 = [row[1:] for row in TREFOIL_M[1:]]
    assert laurent_det(minor11) == ONE - T + T * T
    minor12 = [[row[0], row[2]] for row in TREFOIL_M[1:]]
    assert laurent_det(minor12) == -(ONE - T + T * T)
    assert laurent_det(TREFOIL_M) == ZERO


small_entries = st.builds(
    LaurentPoly.make,
    st.lists(st.integers(min_value=-4, max_value=4), min_size=0, max_size=3),
    st.integers(min_value=-1, max_value=1),
)


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_laurent_det_matches_cofactor_oracle(data):
    n = data.draw(st.integers(min_value=1, max_value=5))
    rows = [[data.draw(small_entries) for _ in range(n)] for _ in range(n)]
    assert laurent_det(rows) == cofactor_det(rows)


def test_minor_dets_count():
    fam = minor_dets(TREFOIL_M, 2)
    assert len(fam) == 9
    delta = ONE - T + T * T
    assert all(m.unit_ratio(delta) is not None for m in fam)


# -- Smith normal form ----------------------------------------------------------


def _check_certificate(rows, res, ring):
    U, V = [list(r) for r in res.U], [list(r) for r in res.V]
    prod = mat_mul(ring, mat_mul(ring, U, [list(r) for r in rows]), V)
    assert prod == snf_diagonal(res)


def test_snf_trefoil_at_minus_one():
    m = [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    res = snf(m, RingZ())
    assert res.invariant_factors == (0, 3, 1)
    assert res.rank == 2
    _check_certificate(m, res, RingZ())


def test_snf_identity_and_diagonal():
    res = snf([[1, 0], [0, 1]], RingZ())
    assert res.invariant_factors == (1, 1)
    assert res.rank == 2
    res = snf([[0, 0, 0], [0, 6, 0], [0, 0, 2]], RingZ())
    assert res.invariant_factors == (0, 6, 2)
    assert res.rank == 2


def test_snf_divisibility_chain_and_units():
    mats = [
        [[2, 4, 4], [-6, 6, 12], [10, 4, 16]],
        [[1, 2], [3, 4]],
        [[6, 0], [0, 10]],
        [[0, 0], [0, 0]],
    ]
    for m in mats:
        res = snf(m, RingZ())
        factors = [d for d in res.invariant_factors if d]
        for a, b in zip(factors, factors[1:]):
            assert a % b == 0  # ideal-increasing: each factor divides the previous
        _check_certificate(m, res, RingZ())
        assert laurent_det([[LaurentPoly.const(x) for x in row] for row in res.U]).coeffs in ((1,), (-1,))
        assert laurent_det([[LaurentPoly.const(x) for x in row] for row in res.V]).coeffs in ((1,), (-1,))


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_snf_random_integer_matrices(data):
    rows = data.draw(st.integers(1, 4))
    cols = data.draw(st.integers(1, 4))
    m = [[data.draw(st.integers(-9, 9)) for _ in range(cols)] for _ in range(rows)]
    res = snf(m, RingZ())
    nz = [d for d in res.invariant_factors if d]
    assert len(nz) == res.rank
    for a, b in zip(nz, nz[1:]):
        assert a % b == 0
    _check_certificate(m, res, RingZ())


def test_snf_over_fpt():
    ring = RingFpT(5)
    # diag(T, T^2) style with mixing
    m = [[(0, 1), (0, 0, 1)], [(), (0, 1)]]
    res = snf(m, ring)
    assert res.rank == 2
    nz = list(res.invariant_factors)
    for a, b in zip(nz, nz[1:]):
        assert ring.divides(b, a) or not b
    _check_certificate(m, res, ring)


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_snf_random_fpt_matrices(data):
    p = data.draw(st.sampled_from([2, 3, 5]))
    ring = RingFpT(p)
    rows = data.draw(st.integers(1, 3))
    cols = data.draw(st.integers(1, 3))
    m = [
        [tuple(data.draw(st.integers(0, p - 1)) for _ in range(data.draw(st.integers(0, 3)))) for _ in range(cols)]
        for _ in range(rows)
    ]
    m = [[_trim(x, p) for x in row] for row in m]
    res = snf(m, ring)
    nz = [d for d in res.invariant_factors if d]
    assert len(nz) == res.rank
    for a, b in zip(nz, nz[1:]):
        assert ring.divides(b, a)
        assert b[-1] == 1  # monic normalization
    _check_certificate(m, res, ring)


def _trim(x, p):
    x = list(x)
    while x and x[-1] % p == 0:
        x.pop()
    return tuple(c % p for c in x)


def test_snf_fpt_trefoil_variable_t():
    # Fox matrix of the trefoil with t left symbolic over F_5[T]
    p = 5
    one_minus = (1, 4)
    t = (0, 1)
    minus = (4,)
    m = [[one_minus, t, minus], [minus, one_minus, t], [t, minus, one_minus]]
    res = snf(m, RingFpT(p))
    assert res.invariant_factors[0] == ()
    assert res.invariant_factors[1] == (1, 4, 1)  # T^2 - T + 1 monic
    assert res.invariant_factors[2] == (1,)


# -- kernels over F_q ---------------------------------------------------------------


def test_kernel_trefoil_fields():
    F3, F4, F5 = FqField(3), FqField(2, [1, 1, 1]), FqField(5)
    m3 = [[2, 2, 2]] * 3
    assert len(kernel_basis(F3, m3)) == 2
    alpha = F4.encode((0, 1))
    one_minus_alpha = F4.sub(1, alpha)
    m4 = [
        [one_minus_alpha, alpha, 1],
        [1, one_minus_alpha, alpha],
        [alpha, 1, one_minus_alpha],
    ]
    assert len(kernel_basis(F4, m4)) == 2
    m5 = [[2, 4, 4], [4, 2, 4], [4, 4, 2]]
    assert len(kernel_basis(F5, m5)) == 1


@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_kernel_random(data):
    field = data.draw(st.sampled_from([FqField(2), FqField(3), FqField(2, [1, 1, 1]), FqField(5)]))
    rows = data.draw(st.integers(1, 4))
    cols = data.draw(st.integers(1, 4))
    m = [[data.draw(st.integers(0, field.q - 1)) for _ in range(cols)] for _ in range(rows)]
    basis = kernel_basis(field, m)
    r = rank(field, m)
    assert len(basis) == cols - r
    for vec in basis:
        for row in m:
            acc = 0
            for a, b in zip(row, vec):
                acc = field.add(acc, field.mul(a, b))
            assert acc == 0


def test_kernel_needs_ncols_for_empty():
    F3 = FqField(3)
    assert len(kernel_basis(F3, [], ncols=4)) == 4
    with pytest.raises(ValueError):
        kernel_basis(F3, [])
