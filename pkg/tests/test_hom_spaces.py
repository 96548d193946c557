from __future__ import annotations

import pytest

from skellim.category import FiniteCategory, cyclic_group
from skellim.comma import arrow_object
from skellim.errors import NotAMonomorphism
from skellim.generate import random_poset, random_pushout_square
from skellim.hom_spaces import (
    cotensor_map,
    cotensor_pullback_check,
    cotensor_simplex_map,
    diagonal,
    evaluate,
    find_lift,
    is_isofibration,
    is_kan,
    is_quasi_category,
    is_trivial_fibration,
    leibniz_cotensor,
    walking_iso,
    mapping_space,
)
from skellim.homs import MapSearch
from skellim.simplicial.constructions import (
    boundary,
    boundary_inclusion,
    horn,
    horn_inclusion,
    product,
    std_simplex,
    terminal_map,
)
from skellim.simplicial.nerve import nerve
from skellim.simplicial.sset import SimplicialMap

from conftest import chain, count_monotone, diamond


def _grid(m, q):
    return [(i, j) for i in range(m + 1) for j in range(q + 1)]


@pytest.mark.parametrize("q", [0, 1])
def test_cotensor_simplices_are_monotone_maps(q):
    # n-simplices of N(P)^{N([q])} are monotone maps [n] x [q] -> P
    P = chain(2)
    M = mapping_space(nerve(chain(q)), nerve(P))
    assert M.bound is None
    leq_p = lambda a, b: int(a) <= int(b)
    leq_g = lambda a, b: a[0] <= b[0] and a[1] <= b[1]
    for n in range(4):
        assert len(M.simplices(n)) == count_monotone(_grid(n, q), leq_g, list(P.objects), leq_p)


def test_cotensor_of_diamond_matches_oracle():
    D = diamond()
    M = mapping_space(std_simplex(1), nerve(D))
    leq = lambda a, b: a == b or D.leq(a, b)
    leq_g = lambda a, b: a[0] <= b[0] and a[1] <= b[1]
    for n in range(3):
        assert len(M.simplices(n)) == count_monotone(_grid(n, 1), leq_g, list(D.objects), leq)


def test_monotone_maps_into_boolean_lattice():
    # up-sets of the 2x3 grid number C(5, 2) = 10, so maps into 2^3 number 10^3
    els = [format(m, "03b") for m in range(8)]
    B = FiniteCategory.from_poset(els, lambda a, b: int(a, 2) & ~int(b, 2) == 0)
    sols = MapSearch(product(std_simplex(1), std_simplex(2)), nerve(B)).raw_array()
    assert len(sols) == 1000


def test_cotensor_vertices_are_maps_and_evaluate():
    A = nerve(chain(2))
    X = horn(2, 1)
    M = mapping_space(X, A)
    for v in M.generators(0):
        f = cotensor_simplex_map(M, M.gen_simplex(v))
        f.validate()
    c = diagonal(A, M)
    ev = evaluate(M, "0")
    assert ev.compose(c) == A.identity_map()


def test_cotensor_map_identity_and_composition():
    A = nerve(chain(1))
    D2 = std_simplex(2)
    M2 = mapping_space(D2, A)
    assert cotensor_map(M2, M2, pre=D2.identity_map()) == M2.identity_map()
    H = horn(2, 1)
    inc = horn_inclusion(2, 1)
    MH = mapping_space(H, A)
    B = boundary(1)
    # restrict Delta^2 -> horn -> the edge endpoints, in one step and in two
    j = SimplicialMap(B, H, {"0": H.gen_simplex("0"), "1": H.gen_simplex("2")})
    MB = mapping_space(B, A)
    one = cotensor_map(M2, MB, pre=inc.compose(j))
    two = cotensor_map(MH, MB, pre=j).compose(cotensor_map(M2, MH, pre=inc))
    assert one == two


def test_nerves_of_posets_are_quasi_categories_exactly():
    for C in (chain(3), diamond()):
        cert = is_quasi_category(nerve(C))
        assert cert.verdict == "yes" and cert.exact and cert.exit_code() == 0


def test_inner_horn_is_not_a_quasi_category():
    cert = is_quasi_category(horn(2, 1), 3)
    assert cert.verdict == "no" and cert.exit_code() == 1
    assert cert.replay()
    assert cert.witness["horn"] == [2, 1]
    assert cert.to_json()["version"] == "cert/1"


def test_kan_complexes():
    assert is_kan(nerve(chain(1))).verdict == "no"
    # group nerves are Kan; nerves are 2-coskeletal so bound 3 is already exact
    cert = is_kan(nerve(cyclic_group(2), bound=5), 3)
    assert cert.verdict == "yes" and cert.exact


def test_trivial_fibrations():
    A = nerve(chain(1))
    assert is_trivial_fibration(A.identity_map()).verdict == "yes"
    cert = is_trivial_fibration(terminal_map(std_simplex(1)))
    assert cert.verdict == "no" and cert.replay()
    # Delta^2 has no edge 2 -> 0; the walking isomorphism is contractible
    assert is_trivial_fibration(terminal_map(std_simplex(2))).verdict == "no"
    J = nerve(walking_iso())
    assert is_trivial_fibration(terminal_map(J), 3).verdict == "yes"
    # the default bound reaches past the truncation of J, so no verdict there
    assert is_trivial_fibration(terminal_map(J)).exit_code() == 2


def test_arrow_projection_is_isofibration():
    A = nerve(chain(2))
    K = arrow_object(A)
    assert is_isofibration(K.projection).verdict == "yes"


def test_leibniz_cotensor_of_boundary_against_nerve():
    A = nerve(chain(1))
    m, parts = leibniz_cotensor(boundary_inclusion(1), terminal_map(A))
    assert is_isofibration(m).verdict == "yes"
    assert is_trivial_fibration(m).verdict == "no"
    with pytest.raises(NotAMonomorphism):
        leibniz_cotensor(terminal_map(std_simplex(1)), terminal_map(A))


def test_find_lift_solves_horn_filling_in_nerve():
    A = nerve(chain(2))
    i = horn_inclusion(2, 1)
    H = i.source
    sols = MapSearch(H, A).solutions()
    for sol in sols:
        f = SimplicialMap(H, A, dict(zip(H.all_generators(), sol)))
        lift = find_lift(i, terminal_map(A), f, terminal_map(std_simplex(2)))
        assert lift is not None and lift.compose(i) == f


@pytest.mark.parametrize("seed", range(3))
def test_cotensor_turns_pushouts_into_pullbacks(seed):
    i, g, jY, jZ = random_pushout_square(seed, 3)
    A = nerve(random_poset(seed, 2))
    v = cotensor_pullback_check(A, i, g, jY, jZ)
    assert v.verdict == "yes" and v.exact
