import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from crossprods.autgrp import (
    AutError, adjoint, automorphism_witness, clifford_phi, complete_related_triple,
    det_root_check, extend_c0_automorphism, in_O, in_O_plus, in_O_tilde, is_automorphism,
    is_unitary, lie_otilde, orbit_census, random_spin_vectors, spin_element_from_vectors,
    witness_with_det,
)
from crossprods.cayley import CayleyAlgebra
from crossprods.crossprod import build_c0, build_triple_3c, builtin
from crossprods.linalg import (
    QuadSpace, det, diag, identity, mat_add, mat_scale, matmul, matvec, zeros,
)
from crossprods.scalars import QQ, QuadraticExtension, parse_field


def test_membership_examples():
    I3 = QuadSpace(QQ, identity(QQ, 3))
    refl = diag(QQ, [1, 1, -1])
    assert in_O(refl, I3) and not in_O_plus(refl, I3)
    assert in_O_tilde(identity(QQ, 3), I3)
    # O~ asks b(phi u, phi v) = det(phi) b(u, v): reflections are out, -Id in even dimension is in
    assert not in_O_tilde(refl, I3)
    I4 = QuadSpace(QQ, identity(QQ, 4))
    assert not in_O_tilde(diag(QQ, [1, 1, 1, -1]), I4)
    assert in_O_tilde(mat_scale(QQ(-1), identity(QQ, 4)), I4)


def test_otilde_matches_star_automorphisms():
    X = builtin("star:3")
    rot = [[QQ(0), QQ(-1), QQ(0)], [QQ(1), QQ(0), QQ(0)], [QQ(0), QQ(0), QQ(1)]]
    assert is_automorphism(rot, X)
    assert not is_automorphism(diag(QQ, [1, 1, -1]), X)


def test_minus_identity():
    minus = mat_scale(QQ(-1), identity(QQ, 8))
    assert is_automorphism(minus, build_triple_3c(QQ, "std"))
    X = build_c0(QQ)
    assert not is_automorphism(mat_scale(QQ(-1), identity(QQ, 7)), X)
    assert automorphism_witness(mat_scale(QQ(-1), identity(QQ, 7)), X) is not None


def test_witness_over_f5():
    F5 = parse_field("Fp:5")
    sp = QuadSpace(F5, identity(F5, 4))
    w = witness_with_det(sp, 4)
    assert w.phi == diag(F5, [2, 2, 2, 3])
    assert det_root_check(w.phi, sp) == F5(4)


def test_witness_adjoins_square_root():
    sp = QuadSpace(QQ, identity(QQ, 4))
    w = witness_with_det(sp, -1)
    E = w.field
    assert isinstance(E, QuadraticExtension)
    i = E.root
    assert w.phi == diag(E, [i, i, i, -i])
    assert det(w.phi, E) == E(-1)
    sp6 = QuadSpace(QQ, identity(QQ, 6))
    w6 = witness_with_det(sp6, -1)
    assert det(w6.phi, w6.field) == w6.field(-1)


def test_witness_precondition():
    with pytest.raises(AutError):
        witness_with_det(QuadSpace(QQ, identity(QQ, 5)), -1)
    with pytest.raises(AutError):
        witness_with_det(QuadSpace(QQ, identity(QQ, 4)), 2)


def test_hermitian_and_unitary():
    X = builtin("onefold:2")
    b = X.space
    rot = [[QQ(3) / 5, QQ(-4) / 5], [QQ(4) / 5, QQ(3) / 5]]
    refl = diag(QQ, [1, -1])
    assert is_unitary(rot, X, b)
    assert in_O(refl, b) and not is_unitary(refl, X, b)


def test_lie_algebra_dimensions():
    assert lie_otilde(QuadSpace(QQ, identity(QQ, 3))).dim == 3
    L = lie_otilde(QuadSpace(parse_field("Fp:3"), identity(parse_field("Fp:3"), 5)))
    assert L.dim == 11 and L.has_identity
    L = lie_otilde(QuadSpace(parse_field("Fp:5"), identity(parse_field("Fp:5"), 7)))
    assert L.dim == 22 and L.has_identity
    assert not lie_otilde(QuadSpace(QQ, identity(QQ, 7))).has_identity


def test_extend_g2_automorphism():
    # w_i -> w_(i+1) permutes the multiplication triples of the CD basis
    psi = zeros(QQ, 7, 7)
    for i in range(7):
        psi[(i + 1) % 7][i] = QQ(1)
    phi = extend_c0_automorphism(psi)
    assert phi[0][0] == 1
    with pytest.raises(AutError):
        extend_c0_automorphism(mat_scale(QQ(-1), identity(QQ, 7)))


@pytest.mark.parametrize("basis", ["std", "cd"])
def test_clifford_relations(basis):
    alg = CayleyAlgebra(QQ, basis)
    E = [e.coords for e in alg.basis()]
    for x, y in itertools.product(E, repeat=2):
        P, Q = clifford_phi(x, alg), clifford_phi(y, alg)
        anti = mat_add(matmul(P, Q), matmul(Q, P))
        assert anti == mat_scale(alg.polar_c(x, y), identity(QQ, 16))
    for x in E:
        P = clifford_phi(x, alg)
        assert adjoint(P, alg) == P


def test_spin_examples():
    alg = CayleyAlgebra(QQ, "cd")
    w1 = alg.basis_element("w1").coords
    s = spin_element_from_vectors([w1, w1], alg)
    minus = mat_scale(QQ(-1), identity(QQ, 8))
    assert s.triple.f0 == identity(QQ, 8)
    assert s.triple.f1 == minus and s.triple.f2 == minus
    with pytest.raises(AutError):
        spin_element_from_vectors([w1], alg)
    with pytest.raises(AutError):
        spin_element_from_vectors([alg.unit, alg.unit], alg)


def test_reflection_has_no_related_triple():
    alg = CayleyAlgebra(QQ, "cd")
    refl = diag(QQ, [1, -1, 1, 1, 1, 1, 1, 1])
    assert complete_related_triple(refl, alg) is None


@settings(max_examples=10)
@given(seed=st.integers(0, 2 ** 32))
def test_random_spin_triples(seed):
    alg = CayleyAlgebra(QQ, "cd")
    vs = random_spin_vectors(alg, random.Random(seed), pairs=1)
    tri = spin_element_from_vectors(vs, alg).triple
    assert tri.relation_holds() and tri.cyclic_identities_hold() and tri.isometries()


def test_spin_triple_acts_on_triples_explicitly():
    # direct evaluation on every basis triple, independent of the contraction
    alg = CayleyAlgebra(QQ, "cd")
    X = build_triple_3c(QQ, "cd")
    vs = [alg.basis_element("w1").coords, alg.basis_element("w2").coords,
          alg.basis_element("w2").coords, alg.basis_element("w3").coords]
    rho = spin_element_from_vectors(vs, alg).triple.f2
    E = [e.coords for e in alg.basis()]
    for x, y, z in itertools.product(E, repeat=3):
        assert matvec(rho, X(x, y, z)) == list(X(matvec(rho, x), matvec(rho, y), matvec(rho, z)))


def test_orbit_census_guards():
    with pytest.raises(AutError):
        orbit_census(QQ, "unit_sphere")
    with pytest.raises(AutError):
        orbit_census(parse_field("Fp:7"), "unit_sphere")
    with pytest.raises(AutError):
        orbit_census(parse_field("Fp:5"), "pair")
    with pytest.raises(AutError):
        orbit_census(parse_field("Fp:3"), "nope")
