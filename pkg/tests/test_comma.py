from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skellim.category import FiniteCategory
from skellim.comma import (
    arrow_object,
    comma,
    comma_map,
    comma_via_pullback,
    compare_routes,
    cones_over,
    cones_under,
    corepresentable_module,
    is_limit_cone,
    representable_module,
    vertex_point,
)
from skellim.errors import NonCommutingSquare
from skellim.generate import random_poset
from skellim.hom_spaces import is_isofibration
from skellim.limit_engine import DiagramInCat, brute_force_limit
from skellim.simplicial.constructions import boundary, horn
from skellim.simplicial.iso import is_isomorphic
from skellim.simplicial.nerve import nerve, nerve_functor
from skellim.simplicial.sset import SimplicialMap, SimplicialSet

from conftest import chain, diamond


def _down_set(C: FiniteCategory, a: str) -> FiniteCategory:
    els = [x for x in C.objects if C.leq(x, a)]
    return FiniteCategory.from_poset(els, C.leq)


def test_arrow_object_of_a_chain_is_nerve_of_arrow_poset():
    A = nerve(chain(2))
    K = arrow_object(A)
    # vertices are pairs a <= b, so 6 of them; the arrow poset of [2] has height 3
    assert len(K.total.generators(0)) == 6
    arrows = FiniteCategory.from_poset(
        [f"{a}{b}" for a in "012" for b in "012" if a <= b],
        lambda u, v: u[0] <= v[0] and u[1] <= v[1],
    )
    assert is_isomorphic(K.total, nerve(arrows)) is not None


@given(st.integers(0, 2000))
def test_direct_and_pullback_routes_agree(seed):
    A = nerve(random_poset(seed, 3))
    K = arrow_object(A)
    L, A2 = comma_via_pullback(A.identity_map(), A.identity_map())
    assert compare_routes(K, L, A2).is_iso()


def test_commas_between_points():
    A = nerve(chain(1))
    assert comma(vertex_point(A, "0"), vertex_point(A, "1")).total.counts() == (1,)
    assert comma(vertex_point(A, "1"), vertex_point(A, "0")).total.is_empty()


@pytest.mark.parametrize("a", ["b", "x", "t"])
def test_representable_is_nerve_of_slice(a):
    C = diamond()
    R = representable_module(nerve(C), a, certify_bound=3)
    assert is_isomorphic(R.total, nerve(_down_set(C, a))) is not None
    assert all(c.verdict == "yes" for c in R.meta["fibre_certificates"].values())


def test_corepresentable_counts_up_set():
    C = chain(2)
    K = corepresentable_module(nerve(C), "1")
    assert len(K.total.generators(0)) == 2


@given(st.integers(0, 2000))
def test_projection_is_isofibration(seed):
    A = nerve(random_poset(seed, 3))
    K = comma(A.identity_map(), vertex_point(A, A.generators(0)[0]))
    assert is_isofibration(K.projection).verdict == "yes"


def _shift(A, k):
    """Endomorphism ``x -> max(x, k)`` of the nerve of a chain."""
    up = lambda o: str(max(int(o), k))
    return nerve_functor(A, A, up, lambda m: f"{up(m.split('->')[0])}->{up(m.split('->')[1])}")


def test_comma_map_is_functorial():
    A = nerve(chain(2))
    K = arrow_object(A)
    h1, h2 = _shift(A, 1), _shift(A, 2)
    m1 = comma_map(K, K, h1, h1, h1)
    m2 = comma_map(K, K, h2, h2, h2)
    m12 = comma_map(K, K, h2.compose(h1), h2.compose(h1), h2.compose(h1))
    assert m12 == m2.compose(m1)
    ident = A.identity_map()
    assert comma_map(K, K, ident, ident, ident) == K.total.identity_map()
    with pytest.raises(NonCommutingSquare):
        comma_map(K, K, h1, ident, h1)


def test_meet_is_a_limit_cone():
    A = nerve(diamond())
    X = boundary(1)
    d = SimplicialMap(X, A, {"0": ("x", (0,)), "1": ("y", (0,))})
    K = cones_over(A, X, d)
    cert = is_limit_cone(A, X, d, "b", cones=K)
    assert cert.verdict == "yes" and cert.exact
    assert cert.legs == {"0": "b->x", "1": "b->y"}


def test_non_meet_cone_is_rejected_with_witness():
    A = nerve(chain(2))
    X = boundary(1)
    d = SimplicialMap(X, A, {"0": ("1", (0,)), "1": ("2", (0,))})
    assert is_limit_cone(A, X, d, "1").verdict == "yes"
    cert = is_limit_cone(A, X, d, "0")
    assert cert.verdict == "no"
    assert cert.evidence["trivial_fibration"].replay()


def test_cones_under_give_colimits():
    A = nerve(chain(2))
    X = boundary(1)
    d = SimplicialMap(X, A, {"0": ("0", (0,)), "1": ("1", (0,))})
    K = cones_under(A, X, d)
    assert sorted(K.p1.images[v][0] for v in K.total.generators(0)) == ["1", "2"]


@settings(max_examples=10)
@given(st.integers(0, 2000))
def test_limit_cone_agrees_with_brute_force(seed):
    C = random_poset(seed, 3, 0.5)
    A = nerve(C)
    H = horn(2, 2)
    objs = list(C.objects)
    for top in objs:
        below = [o for o in objs if C.leq(o, top)]
        if len(below) < 2:
            continue
        obj = {"0": below[0], "1": below[-1], "2": top}
        d = DiagramInCat(H, C, obj, {"0,2": C.hom(obj["0"], top)[0], "1,2": C.hom(obj["1"], top)[0]})
        oracle = brute_force_limit(C, d)
        dm = d.to_map(A)
        K = cones_over(A, H, dm)
        for apex in objs:
            over = [v for v in K.total.generators(0) if K.p0.images[v][0] == apex]
            if not over:
                continue
            cert = is_limit_cone(A, H, dm, apex, over[0], cones=K)
            is_oracle = oracle is not None and apex == oracle.apex
            assert (cert.verdict == "yes") == is_oracle
        break


def test_empty_diagram_cones_are_terminal_objects():
    A = nerve(chain(2))
    E = SimplicialSet([], {})
    K = cones_over(A, E, SimplicialMap(E, A, {}))
    assert len(K.total.generators(0)) == 3
