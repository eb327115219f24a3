import pytest
from hypothesis import given, strategies as st

from crossprods.abgroup import (
    AbGroup, GroupError, fine_n1_presentation, hom, smith_normal_form,
)


def matmul_int(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


relations = st.integers(1, 4).flatmap(
    lambda m: st.lists(st.lists(st.integers(-6, 6), min_size=m, max_size=m), min_size=0, max_size=4)
    .map(lambda rows: (m, rows)))


@given(data=relations)
def test_snf_transforms(data):
    m, R = data
    if not R:
        return
    D, U, V, Vi = smith_normal_form(R, m)
    assert matmul_int(matmul_int(U, R), V) == D
    assert matmul_int(V, Vi) == [[int(i == j) for j in range(m)] for i in range(m)]
    diag = [D[i][i] for i in range(min(len(R), m))]
    for i in range(len(D)):
        for j in range(m):
            if i != j:
                assert D[i][j] == 0
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


unimodular_ops = st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(-3, 3)), max_size=6)


@given(data=relations, ops=unimodular_ops)
def test_iso_type_invariant_under_row_operations(data, ops):
    m, R = data
    G = AbGroup(m, R)
    rows = [list(r) for r in R]
    for i, j, q in ops:
        if len(rows) > max(i, j) and i != j:
            rows[i] = [a + q * b for a, b in zip(rows[i], rows[j])]
    assert AbGroup(m, rows).iso_type() == G.iso_type()


def test_invariants_and_describe():
    G = AbGroup(2, [[2, 0], [0, 4]])
    assert G.iso_type() == (0, (2, 4))
    assert G.order() == 8 and len(G.elements()) == 8
    assert AbGroup(2, [[6, 0]]).describe() == "Z x Z/6"
    assert AbGroup(2, [[2, 3]]).iso_type() == (1, ())
    assert AbGroup.free(0).describe() == "0"


def test_element_arithmetic():
    G = AbGroup.from_invariants(1, [4])
    a, b = G.gens()
    assert (b ** 4).is_identity()
    assert b.order() == 4
    assert a.order() is None
    assert (a * b) / b == a
    assert (a * b).inv() * a * b == G.identity
    assert G.elem([0, 5]) == b


def test_presentation_json():
    data = {"generators": ["x", "y"], "relations": [["x", "x", "-y"], ["y", "y"]]}
    G = AbGroup.from_presentation(data)
    assert G.iso_type() == (0, (4,))
    assert AbGroup.from_presentation(G.presentation()).iso_type() == G.iso_type()
    with pytest.raises(GroupError):
        AbGroup.from_presentation({"generators": ["x"], "relations": [["z"]]})


def test_hom_respects_relations():
    Z4 = AbGroup.from_invariants(0, [4])
    Z2 = AbGroup.from_invariants(0, [2])
    assert hom(Z4, Z2, [Z2.gen(0)]) is not None
    assert hom(Z2, Z4, [Z4.gen(0)]) is None
    assert hom(Z2, Z4, [Z4.gen(0) ** 2]) is not None


def test_subgroup():
    G = AbGroup.from_invariants(0, [2, 2, 2])
    g = G.gens()
    assert len(G.subgroup(g[:2])) == 4
    assert len(G.subgroup([g[0], g[0]])) == 2


@pytest.mark.parametrize("pq,expected", [
    ((0, 2), (2, ())), ((2, 1), (1, (4,))), ((4, 0), (0, (2, 2, 4))),
    ((1, 1), (1, ())), ((3, 0), (0, (2, 2))), ((0, 3), (3, (2,))), ((5, 0), (0, (2, 2, 2, 6))),
])
def test_fine_universal_groups(pq, expected):
    # e.g. (0, 3): h = y_j z_j and h = h^3, so h has order 2
    assert fine_n1_presentation(*pq).iso_type() == expected
