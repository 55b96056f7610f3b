import pytest

from preproj.quiver import (
    Arrow,
    DimVector,
    build_quiver,
    cartan_apply,
    cartan_matrix,
    delta_prefix,
    principal_minors_positive,
    ringel_form,
    symmetrized_form,
    window_vertices,
)


def test_family_arrows():
    a = build_quiver("A_plus_inf")
    assert Arrow(0, 1) in a.arrows_at(0)
    assert a.neighbors(0) == [1]
    d = build_quiver("D_inf")
    assert set(d.neighbors(2)) == {0, 1, 3}
    assert 1 not in d.neighbors(0)
    z = build_quiver("A_inf")
    assert set(z.neighbors(-5)) == {-6, -4}


def test_vertex_checks():
    with pytest.raises(ValueError):
        build_quiver("A_plus_inf").check_vertex(-1)
    with pytest.raises(ValueError):
        build_quiver("nope")


def test_explicit_single_vertex():
    q = build_quiver({"family": "explicit", "vertices": [0], "arrows": []})
    assert q.vertices() == [0]
    assert cartan_matrix(q, [0]) == [[2]]


def test_explicit_loop_has_zero_diagonal():
    q = build_quiver({"family": "explicit", "vertices": ["x"], "arrows": [{"tail": "x", "head": "x"}]})
    assert q.has_loop("x")
    assert symmetrized_form(q, {"x": 1}, {"x": 1}) == 0


def test_ringel_form_is_not_symmetric():
    q = build_quiver("A_plus_inf")
    assert ringel_form(q, {0: 1}, {1: 1}) == -1
    assert ringel_form(q, {1: 1}, {0: 1}) == 0
    assert symmetrized_form(q, {0: 1}, {1: 1}) == -1


def test_arrow_labels_and_duals():
    a = Arrow(2, 3)
    s = a.dual()
    assert (s.source, s.target) == (3, 2)
    assert s.dual() == a and s.base == a
    assert (a.label, s.label) == ("a_2_3", "astar_2_3")


def test_cartan_apply_matches_form():
    q = build_quiver("D_inf")
    alpha = {0: 1, 1: 1, 2: 2, 3: 1}
    img = cartan_apply(q, alpha)
    for j in range(6):
        assert img.get(j, 0) == symmetrized_form(q, alpha, {j: 1})


@pytest.mark.parametrize(
    "family,k,want",
    [("A_plus_inf", 4, [1, 2, 3, 4]), ("A_inf", 4, [1, 1, 1, 1]), ("D_inf", 5, [1, 1, 2, 2, 2])],
)
def test_delta(family, k, want):
    assert delta_prefix(build_quiver(family), k) == want


def test_affine_block_is_not_positive_definite():
    # cycle-free but infinite: a finite window is Dynkin, so only affine-type
    # explicit data fails
    q = build_quiver({"family": "explicit", "vertices": [0, 1], "arrows": [{"tail": 0, "head": 1, "name": "p"}, {"tail": 0, "head": 1, "name": "r"}]})
    assert not principal_minors_positive(cartan_matrix(q, [0, 1]))


def test_dimvector_arithmetic():
    a = DimVector({0: 1, 1: 2})
    assert a - DimVector({1: 2}) == DimVector.unit(0)
    assert DimVector.interval(1, 3) == DimVector({1: 1, 2: 1, 3: 1})
    assert (a - a).is_zero()
    assert DimVector.unit(0).leq(a)


def test_window_specs():
    q = build_quiver("A_inf")
    assert window_vertices(q, "-1..1") == [-1, 0, 1]
    assert window_vertices(q, "3,5") == [3, 5]
