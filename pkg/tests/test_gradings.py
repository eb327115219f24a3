import json

import pytest
from hypothesis import given, settings, strategies as st

from crossprods.abgroup import AbGroup, hom
from crossprods.gradings import (
    CARTAN_SUPPORT, DeltaMap, Grading, GradingError, build_gamma_delta, cartan_grading,
    cartan_weyl_matrices, cd_grading, classify_83, component_types, delta_of, fine_n1,
    form_compatibility, gamma_alpha, gamma_GH, is_fine, iso_83, n1_isomorphic, shift,
    trivial_grading, verify_grading, weyl_order, weyl_search_n1,
)
from crossprods.scalars import QQ


def test_builtin_gradings_verify():
    for gr in (cartan_grading(), cd_grading(), trivial_grading()):
        assert verify_grading(gr).passed


def test_cd_components_are_lines():
    gr = cd_grading()
    assert all(d == 1 for d in gr.dims().values())
    # support is H minus K
    G = gr.group
    g = G.gens()
    assert set(gr.support()) == set(G.elements()) - G.subgroup(g[1:])
    assert is_fine(gr)


def test_bad_degree_assignment_is_rejected():
    gr = cartan_grading()
    degs = list(gr.degrees)
    degs[2], degs[3] = degs[3], degs[2]
    rep = verify_grading(gr.with_degrees(gr.group, degs))
    assert not rep.passed and rep.violations


Z2_5 = AbGroup.from_invariants(0, [2] * 5)
elements_2 = st.sampled_from(Z2_5.elements())


@given(h=elements_2, gens=st.lists(elements_2, min_size=3, max_size=3))
def test_shift_is_an_involution(h, gens):
    if len(Z2_5.subgroup(gens)) != 8:
        return
    gr = gamma_GH(Z2_5, gens)
    assert shift(shift(gr, h), h).same_as(gr)
    assert verify_grading(shift(gr, h)).passed


target = AbGroup(2, [[4, 0]])  # Z/4 x Z


@settings(max_examples=15)
@given(images=st.lists(st.tuples(st.integers(0, 3), st.integers(-2, 2)), min_size=3, max_size=3))
def test_coarsening_functoriality(images):
    C = cartan_grading()
    alpha = hom(C.group, target, [target.elem(list(t)) for t in images])
    coarse = C.coarsen(alpha)
    assert verify_grading(coarse).passed
    assert coarse.degrees == [alpha(g) for g in C.degrees]


def test_cartan_classification_and_weyl():
    c = classify_83(cartan_grading())
    assert c.family == 1
    assert len(cartan_weyl_matrices()) == 48
    Z3 = AbGroup.free(3)
    g = Z3.gens()
    # a Weyl-twisted parameter gives an isomorphic grading
    M = cartan_weyl_matrices()[7]
    twisted = [Z3.elem([M[i][j] for i in range(3)]) for j in range(3)]
    assert iso_83(gamma_alpha(Z3, g), gamma_alpha(Z3, twisted))
    assert iso_83(gamma_alpha(Z3, g), gamma_alpha(Z3, [x.inv() for x in g]))


def test_coarse_cartan_classifies_as_family_one():
    G = AbGroup.free(2)
    a = G.gens()
    alpha = [a[0], a[1], a[0] * a[1]]
    gr = gamma_alpha(G, alpha)
    c = classify_83(gr)
    assert c.family == 1
    assert iso_83(gr, gamma_alpha(G, list(c.alpha)))


def test_family_two_and_three_distinguished():
    G = Z2_5
    g = G.gens()
    two = gamma_GH(G, g[:3])
    assert classify_83(two).family == 2
    assert classify_83(cd_grading()).family == 3
    assert not iso_83(two, gamma_GH(G, g[1:4]))
    assert iso_83(two, gamma_GH(G, [g[0] * g[1], g[1], g[2]]))


def test_gamma_gh_rejects_bad_generators():
    g = Z2_5.gens()
    with pytest.raises(GradingError):
        gamma_GH(Z2_5, [g[0], g[0], g[1]])
    Z4 = AbGroup.from_invariants(0, [4, 2, 2])
    with pytest.raises(GradingError):
        gamma_GH(Z4, Z4.gens())


# (n-1)-fold gradings


def _delta_example():
    G = AbGroup(2, [[3, 0]])  # Z/3 x Z
    g1, g2, partner = G.elem([2, 0]), G.elem([0, 1]), G.elem([1, -1])
    return G, DeltaMap(G, {g1: 1, g2: 2, partner: 2}), (g1, g2, partner)


def test_gamma_delta_example():
    G, delta, (g1, g2, partner) = _delta_example()
    assert delta.n == 5 and delta.h == G.elem([1, 0])
    gr = build_gamma_delta(delta)
    assert verify_grading(gr).passed
    types = component_types(gr)
    assert types[g1] == "nondegenerate"
    assert types[g2] == "isotropic" and types[partner] == "isotropic"
    fc = form_compatibility(gr)
    assert fc.pairing_ok and not fc.compatible
    assert n1_isomorphic(delta_of(gr), delta)


def test_component_types_follow_h():
    for pq in [(1, 1), (2, 1), (4, 0), (0, 2), (3, 1)]:
        gr, _ = fine_n1(*pq)
        h = delta_of(gr).h
        for g, kind in component_types(gr).items():
            assert kind == ("nondegenerate" if g * g == h else "isotropic")


def test_delta_check():
    G = AbGroup.free(1)
    with pytest.raises(GradingError):
        build_gamma_delta(DeltaMap(G, {G.elem([1]): 2, G.elem([2]): 1}))


def test_fine_gradings_are_fine():
    for pq in [(1, 1), (3, 0), (0, 2), (2, 1), (4, 0)]:
        gr, U = fine_n1(*pq)
        assert verify_grading(gr).passed and is_fine(gr)
        assert gr.group == U


@pytest.mark.parametrize("pq", [(1, 1), (3, 0), (0, 2), (2, 1)])
def test_weyl_search_n1_matches_formula(pq):
    assert weyl_search_n1(*pq) == weyl_order(f"n1:{pq[0]},{pq[1]}")


def test_weyl_orders():
    assert weyl_order("n1:4,0") == 24
    assert weyl_order("cartan") == 48
    assert weyl_order("cd") == 1344
    with pytest.raises(GradingError):
        weyl_order("nope")


def test_json_round_trip():
    for gr in (cartan_grading(), cd_grading(), fine_n1(2, 1)[0]):
        data = json.loads(json.dumps(gr.to_json()))
        back = Grading.from_json(data)
        assert back.basis == gr.basis
        assert [g.exponents() for g in back.degrees] == [g.exponents() for g in gr.degrees]
        assert verify_grading(back).passed


def test_cartan_support_degrees():
    gr = cartan_grading(QQ)
    assert sorted(g.exponents() for g in gr.degrees) == sorted(list(v) for v in CARTAN_SUPPORT.values())
