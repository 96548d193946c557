from __future__ import annotations

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skellim import io
from skellim.errors import NotAMonomorphism, SchemaError, SimplicialError
from skellim.generate import random_sset
from skellim.simplicial.constructions import (
    boundary,
    boundary_inclusion,
    coproduct,
    horn,
    horn_inclusion,
    opposite,
    product,
    projection,
    pushout,
    skeleton,
    std_simplex,
    terminal_map,
)
from skellim.simplicial.filtration import skeletal_filtration
from skellim.simplicial.iso import is_isomorphic
from skellim.simplicial.nerve import chain_simplex, longest_chain, nerve, simplex_chain
from skellim.simplicial.sset import SimplicialMap, SimplicialSet
from skellim.simplicial.words import surjections

from conftest import chain, diamond, divisors


@pytest.mark.parametrize("n", range(5))
def test_standard_simplex_counts_are_binomial(n):
    X = std_simplex(n)
    assert X.counts() == tuple(comb(n + 1, k + 1) for k in range(n + 1))
    X.validate()


@pytest.mark.parametrize("n", range(1, 5))
def test_boundary_and_horns_drop_the_right_cells(n):
    full = std_simplex(n).counts()
    assert boundary(n).counts() == full[:-1]
    for k in range(n + 1):
        H = horn(n, k)
        expect = list(full[:-1])
        expect[-1] -= 1
        while expect and expect[-1] == 0:
            expect.pop()
        assert H.counts() == tuple(expect)
        assert horn_inclusion(n, k).is_mono()


def test_all_simplices_of_delta_n_are_monotone_maps():
    # n-simplices of Delta^m are monotone maps [n] -> [m]: C(n+m+1, n+1)
    for m in range(4):
        D = std_simplex(m)
        for n in range(4):
            assert len(D.simplices(n)) == comb(n + m + 1, n + 1)


def test_surjection_count():
    for n in range(6):
        for k in range(n + 1):
            assert len(surjections(n, k)) == comb(n, k)


def test_prism_counts_and_shuffles():
    P = product(std_simplex(1), std_simplex(1))
    assert P.counts() == (4, 5, 2)
    # Delta^p x Delta^q has C(p+q, p) top simplices
    for p, q in [(1, 2), (2, 2), (1, 3)]:
        Q = product(std_simplex(p), std_simplex(q))
        assert len(Q.generators(p + q)) == comb(p + q, p)
        Q.validate()


def test_product_is_nerve_of_product_poset():
    P = product(std_simplex(1), std_simplex(2))
    N = nerve(chain(1).product(chain(2)))
    assert is_isomorphic(P, N) is not None


def test_projections_are_simplicial():
    P = product(horn(2, 1), boundary(2))
    for k in range(2):
        projection(P, k).validate()


def test_pushout_requires_mono():
    D = std_simplex(1)
    collapse = terminal_map(D)
    with pytest.raises(NotAMonomorphism):
        pushout(collapse, D.identity_map())


def test_gluing_two_edges_gives_a_horn():
    D0, D1 = std_simplex(0), std_simplex(1)
    i = SimplicialMap(D0, D1, {"0": D1.gen_simplex("1")})
    g = SimplicialMap(D0, D1, {"0": D1.gen_simplex("0")})
    P, jY, jZ = pushout(i, g, rename=lambda s: "y" + s)
    assert P.counts() == (3, 2)
    assert is_isomorphic(P, horn(2, 1)) is not None
    assert jY.compose(i) == jZ.compose(g)


def test_skeleton_and_coproduct():
    S, inc = skeleton(std_simplex(3), 1)
    assert S.counts() == (4, 6)
    assert inc.is_mono()
    U, legs = coproduct([std_simplex(1), boundary(2)], ["a", "b"])
    assert U.counts() == (5, 4)
    assert all(leg.is_mono() for leg in legs)


def test_opposite_is_an_involution():
    X = random_sset(3, 8, 3)
    assert is_isomorphic(opposite(opposite(X)), X) is not None
    assert opposite(std_simplex(2)).counts() == (3, 3, 1)


def test_invalid_faces_are_rejected():
    with pytest.raises(SimplicialError):
        SimplicialSet([["a", "b"], ["e"]], {"e": (("a", (0,)), ("zzz", (0,)))})


def test_nerve_counts_chains():
    C = divisors(12)
    N = nerve(C)
    assert longest_chain(C) == 3
    # non-degenerate n-simplices are strict chains of length n
    els = list(C.objects)
    lt = lambda a, b: a != b and int(b) % int(a) == 0
    strict = [[(e,) for e in els]]
    for _ in range(3):
        strict.append([c + (e,) for c in strict[-1] for e in els if lt(c[-1], e)])
    assert N.counts() == tuple(len(level) for level in strict)
    assert N.counts() == (6, 12, 10, 3)
    for g in N.generators(2):
        start, ch = simplex_chain(N, N.gen_simplex(g))
        assert chain_simplex(N, start, ch) == N.gen_simplex(g)


def test_nerve_of_diamond():
    assert nerve(diamond()).counts() == (4, 5, 2)


def test_skeletal_filtration_of_delta2():
    F = skeletal_filtration(std_simplex(2))
    assert [len(st.cells) for st in F.stages] == [3, 1]
    assert F.verify()


@given(st.integers(0, 10_000), st.integers(1, 12), st.integers(1, 3))
def test_filtration_recomposes(seed, size, max_dim):
    X = random_sset(seed, size, max_dim)
    F = skeletal_filtration(X)
    assert F.verify()
    a, b = io.sset_to_json(F.recompose()), io.sset_to_json(X)
    a.pop("name", None)
    b.pop("name", None)
    assert io.dumps(a) == io.dumps(b)


@given(st.integers(0, 10_000), st.integers(1, 10))
def test_random_ssets_satisfy_simplicial_identities(seed, size):
    X = random_sset(seed, size, 3)
    X.validate()
    assert random_sset(seed, size, 3) == X


@given(st.integers(0, 10_000))
def test_sset_json_round_trip_is_byte_identical(seed):
    X = random_sset(seed, 9, 3)
    text = io.dumps(io.sset_to_json(X))
    assert io.dumps(io.sset_to_json(io.sset_from_json(io.loads(text)))) == text


def test_schema_errors_name_the_path():
    doc = io.sset_to_json(std_simplex(1))
    doc["generators"]["1"][0]["faces"][0]["t"] = "nope"
    with pytest.raises(SchemaError) as err:
        io.sset_from_json(doc)
    assert err.value.path == "$.generators.1[0].faces[0].t"
    with pytest.raises(SchemaError):
        io.sset_from_json({"version": "sset/2"})
    with pytest.raises(SchemaError):
        io.loads("{not json")


def test_boundary_inclusion_is_mono_and_dot_export():
    assert boundary_inclusion(3).is_mono()
    dot = io.to_dot(boundary(2), "b")
    assert dot.count("->") == 3
