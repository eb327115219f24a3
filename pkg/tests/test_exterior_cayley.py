import itertools

import pytest
from hypothesis import given, strategies as st

from crossprods.cayley import CayleyAlgebra, cd_to_std_matrix, std_to_cd_matrix
from crossprods.exterior import (
    ExteriorError, ExtElement, StarOperator, VolumeElement, ext_form, hodge_star, star_cross, wedge,
)
from crossprods.linalg import QuadSpace, identity, matmul, matvec
from crossprods.scalars import QQ, parse_field

I3 = QuadSpace(QQ, identity(QQ, 3))


def e(i, n=3):
    return [QQ(1) if j == i else QQ(0) for j in range(n)]


def test_wedge_basics():
    e1, e2 = ExtElement.vector(e(0)), ExtElement.vector(e(1))
    assert wedge(e1, e2).coeffs == {(0, 1): 1}
    assert wedge(e1, e1).is_zero()
    assert wedge(e2, e1).coeffs == {(0, 1): -1}
    with pytest.raises(ExteriorError):
        wedge(ExtElement.blade((0, 1)), ExtElement.blade((0, 2)), n=3)


def test_ext_form():
    assert ext_form(I3, ExtElement.blade((0, 1)), ExtElement.vector(e(0))) == 0
    assert ext_form(I3, ExtElement.blade((0, 1)), ExtElement.blade((0, 1))) == 1
    assert ext_form(I3, ExtElement.blade((0, 1)), ExtElement.blade((1, 0))) == -1


def test_hodge_star_examples():
    om = VolumeElement(I3)
    assert hodge_star(I3, om, ExtElement.blade((0, 1))).coeffs == {(2,): 1}
    assert hodge_star(I3, om, ExtElement.scalar(QQ(1))).coeffs == om.element.coeffs
    assert hodge_star(I3, om, ExtElement.blade((1, 0))).coeffs == {(2,): -1}
    assert star_cross(I3, om, [e(0), e(1)]) == e(2)
    assert star_cross(I3, om, [e(1), e(0)]) == [0, 0, -1]


def test_volume_needs_disc_one():
    with pytest.raises(ExteriorError):
        VolumeElement(QuadSpace(QQ, [[1, 0], [0, 2]]))


vec4 = st.lists(st.integers(-3, 3), min_size=4, max_size=4)


@given(u=vec4, v=vec4, w=vec4)
def test_star_cross_defining_relation(u, v, w):
    # b(*(u^v^w), y) = b(u^v^w^y, omega) for all basis y
    sp = QuadSpace(QQ, [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    S = StarOperator(sp)
    u, v, w = ([QQ(x) for x in t] for t in (u, v, w))
    x = S([u, v, w])
    uvw = wedge(wedge(ExtElement.vector(u), ExtElement.vector(v)), ExtElement.vector(w))
    for k in range(4):
        y = e(k, 4)
        lhs = sp.bform(x, y)
        rhs = ext_form(sp, wedge(uvw, ExtElement.vector(y)), S.omega.element)
        assert lhs == rhs


@pytest.mark.parametrize("basis", ["std", "cd"])
def test_cayley_composition_exhaustive(basis):
    alg = CayleyAlgebra(QQ, basis)
    E = [b.coords for b in alg.basis()]
    for x, y in itertools.product(E, repeat=2):
        assert alg.norm_c(alg.mul_c(x, y)) == alg.norm_c(x) * alg.norm_c(y)
    assert all(alg.mul_c(alg.unit, x) == tuple(x) for x in E)


coords = st.lists(st.integers(-3, 3), min_size=8, max_size=8)


@pytest.mark.parametrize("desc", ["Q", "Fp:5"])
@given(x=coords, y=coords)
def test_cayley_composition_random(desc, x, y):
    F = parse_field(desc)
    alg = CayleyAlgebra(F, "std")
    x, y = [F(a) for a in x], [F(a) for a in y]
    assert alg.norm_c(alg.mul_c(x, y)) == alg.norm_c(x) * alg.norm_c(y)
    # x xbar = n(x) 1
    assert alg.mul_c(x, alg.conj_c(x)) == tuple(alg.norm_c(x) * u for u in alg.unit)
    # para-Cayley product is also composition
    assert alg.norm_c(alg.para_c(x, y)) == alg.norm_c(x) * alg.norm_c(y)


def test_cd_std_change_of_basis():
    with pytest.raises(ValueError):
        cd_to_std_matrix(QQ)
    F = parse_field("Q(i)")
    M, N = cd_to_std_matrix(F), std_to_cd_matrix(F)
    assert matmul(M, N) == identity(F, 8)
    cd, std = CayleyAlgebra(F, "cd"), CayleyAlgebra(F, "std")
    for x, y in itertools.product([b.coords for b in cd.basis()], repeat=2):
        assert matvec(M, cd.mul_c(x, y)) == list(std.mul_c(matvec(M, x), matvec(M, y)))


def test_parse_element():
    alg = CayleyAlgebra(QQ, "cd")
    x = alg.parse_element("1 + 2*w3 - 1/2*w7")
    assert x.coords[0] == 1 and x.coords[3] == 2 and x.coords[7] == QQ(-1) / 2
