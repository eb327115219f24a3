import json

import pytest
from hypothesis import given, strategies as st

from crossprods.crossprod import (
    CrossProduct, CrossProductError, admissible_forms, build_c0, build_quaternion_cross,
    build_three_fold, builtin, epsilon_identity, three_fold_type, verify_axioms,
)
from crossprods.linalg import mat_scale
from crossprods.scalars import QQ, parse_field


def test_c0_values():
    X = build_c0(QQ)
    w = [[QQ(1) if j == i else QQ(0) for j in range(7)] for i in range(7)]
    # w1 x w2 = w4 in the CD basis of the trace-zero part
    assert X(w[0], w[1]) == w[3]
    assert X(w[1], w[0]) == [-c for c in w[3]]
    assert X(w[0], w[0]) == [QQ(0)] * 7


@pytest.mark.parametrize("name", ["x1", "xm1", "c0", "quat", "star:3", "star:4", "onefold:4"])
def test_builtins_pass(name):
    assert verify_axioms(builtin(name)).passed


def test_x1_with_negated_form_passes_but_twice_fails():
    X = builtin("x1")
    neg = X.with_gram(mat_scale(QQ(-1), X.gram))
    assert verify_axioms(neg).passed
    assert three_fold_type(X) == 1
    double = X.with_gram(mat_scale(QQ(2), X.gram))
    rep = verify_axioms(double)
    assert not rep.a2 and rep.a2_witness is not None


def test_three_fold_types():
    assert three_fold_type(builtin("x1")) == 1
    assert three_fold_type(builtin("xm1")) == -1
    ok, witness, _ = epsilon_identity(builtin("x1"), None, -1)
    assert not ok and witness is not None


def test_scaled_three_fold():
    # alpha X_1 with alpha^2 = 1 stays a cross product for b_n
    X = build_three_fold(1, -1, QQ)
    assert verify_axioms(X).passed


def test_quaternion_cross_admissible():
    res = admissible_forms(build_quaternion_cross(QQ))
    assert sorted(res.multipliers) == [QQ(-1), QQ(1)]


def test_onefold_admissible_dimension():
    for s in (1, 2, 3):
        res = admissible_forms(builtin(f"onefold:{2 * s}"))
        assert res.solution_dim == s * s


def test_non_alternating_tensor_fails_a1():
    F = QQ
    zero = [F(0)] * 3
    tensor = {}
    for i in range(3):
        for j in range(3):
            tensor[(i, j)] = [F(1) if k == (i + j) % 3 else F(0) for k in range(3)] if i == j else zero
    X = CrossProduct(F, 3, 2, tensor=tensor, gram=[[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    rep = verify_axioms(X)
    assert not rep.a1 and rep.a1_witness


def test_json_round_trip():
    X = builtin("c0", parse_field("Fp:5"))
    data = json.loads(json.dumps(X.to_json()))
    Y = CrossProduct.from_json(data)
    assert Y.basis_table() == X.basis_table()
    assert Y.gram == X.gram


def test_wrong_arity():
    X = builtin("c0")
    with pytest.raises(CrossProductError):
        X([QQ(0)] * 7)
    with pytest.raises(CrossProductError):
        builtin("star:2")
    with pytest.raises(CrossProductError):
        builtin("nope")


vec7 = st.lists(st.integers(-3, 3), min_size=7, max_size=7)


@given(u=vec7, v=vec7)
def test_c0_axioms_random(u, v):
    X = build_c0(QQ)
    sp = X.space
    u, v = [QQ(a) for a in u], [QQ(a) for a in v]
    x = X(u, v)
    assert sp.bform(x, u) == 0 and sp.bform(x, v) == 0
    assert sp.bform(x, x) == sp.gram_det([u, v], [u, v])


vec8 = st.lists(st.integers(-2, 2), min_size=8, max_size=8)


@given(u=vec8, v=vec8, w=vec8)
def test_x1_axioms_random(u, v, w):
    X = builtin("x1")
    sp = X.space
    u, v, w = ([QQ(a) for a in t] for t in (u, v, w))
    x = X(u, v, w)
    assert all(sp.bform(x, t) == 0 for t in (u, v, w))
    assert sp.bform(x, x) == sp.gram_det([u, v, w], [u, v, w])
