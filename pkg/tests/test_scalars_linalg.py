from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from crossprods.linalg import (
    QuadSpace, det, identity, inverse, matmul, nullspace, rank, rref, transpose,
)
from crossprods.scalars import QQ, FieldError, QuadraticExtension, parse_field

FIELDS = ["Q", "Fp:5", "Fp:7", "Q(i)", "Fp:5(sqrt:2)"]

small = st.integers(-6, 6)


def as_elem(F, a, b=0):
    if isinstance(F, QuadraticExtension):
        return F(a) + F(b) * F.root
    return F(a)


@pytest.mark.parametrize("desc", FIELDS)
@given(a=small, b=small, c=small, d=small, e=small, f=small)
def test_field_axioms(desc, a, b, c, d, e, f):
    F = parse_field(desc)
    x, y, z = as_elem(F, a, b), as_elem(F, c, d), as_elem(F, e, f)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == F.zero
    if x != 0:
        assert x * (F.one / x) == F.one


@pytest.mark.parametrize("desc", FIELDS)
def test_format_parse_round_trip(desc):
    F = parse_field(desc)
    for a in range(-3, 4):
        for b in (0, 1, -2):
            x = as_elem(F, a, b)
            assert F.parse(F.format(x)) == x


def test_field_descriptors():
    assert parse_field("Q") == QQ
    assert parse_field("Fp:5").characteristic == 5
    assert parse_field("Q(i)").sqrt(parse_field("Q(i)")(-1)) is not None
    with pytest.raises(FieldError):
        parse_field("Fp:4")
    with pytest.raises(FieldError):
        parse_field("Fp:2")
    with pytest.raises(FieldError):
        parse_field("R")


def test_sqrt_and_roots_of_unity():
    F5 = parse_field("Fp:5")
    assert F5.sqrt(F5(4)) ** 2 == F5(4)
    assert F5.sqrt(F5(2)) is None
    assert QQ.sqrt(QQ(Fraction(9, 4))) == Fraction(3, 2)
    assert QQ.sqrt(QQ(2)) is None
    assert len(parse_field("Fp:7").roots_of_unity(3)) == 3
    assert QQ.roots_of_unity(4) == [QQ(-1), QQ(1)]
    assert len(parse_field("Q(i)").roots_of_unity(4)) == 4


def test_quadratic_extension_rejects_squares():
    with pytest.raises(FieldError):
        QuadraticExtension(QQ, 4)


matrices = st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=4, max_size=4)


@given(A=matrices, B=matrices)
def test_det_multiplicative(A, B):
    A = [[QQ(x) for x in r] for r in A]
    B = [[QQ(x) for x in r] for r in B]
    assert det(matmul(A, B), QQ) == det(A, QQ) * det(B, QQ)
    assert det(transpose(A), QQ) == det(A, QQ)


@given(A=matrices)
def test_det_agrees_over_fp(A):
    F = parse_field("Fp:7")
    dq = det([[QQ(x) for x in r] for r in A], QQ)
    df = det([[F(x) for x in r] for r in A], F)
    assert df == F(int(dq))


@given(A=matrices)
def test_rank_nullity_and_inverse(A):
    A = [[QQ(x) for x in r] for r in A]
    ns = nullspace(A, QQ)
    assert rank(A, QQ) + len(ns) == 4
    for v in ns:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)
    inv = inverse(A, QQ)
    if det(A, QQ) != 0:
        assert matmul(A, inv) == identity(QQ, 4)
    else:
        assert inv is None


def test_rref_is_deterministic():
    A = [[QQ(x) for x in r] for r in [[2, 4, 6], [1, 2, 3], [0, 1, 1]]]
    R, piv = rref(A, QQ)[:2]
    assert piv == [0, 1]
    assert R[0] == [1, 0, 1] and R[1] == [0, 1, 1]


def test_quadspace_orthogonal_basis():
    sp = QuadSpace(QQ, [[0, 1, 0], [1, 0, 0], [0, 0, 2]])
    P = sp.orthogonal_basis()
    cols = transpose(P)
    for i in range(3):
        for j in range(3):
            if i != j:
                assert sp.bform(cols[i], cols[j]) == 0
        assert sp.bform(cols[i], cols[i]) != 0
    with pytest.raises(ValueError):
        QuadSpace(QQ, [[1, 1], [1, 1]])
