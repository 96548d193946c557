from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skellim import io
from skellim.coherent_weights import (
    BOTTOM,
    IndexCategory,
    SsetDiagram,
    check_flexible_presentation,
    comparison_map,
    cone,
    join,
    pseudo_weight,
    realization_hom,
    strict_limit,
    strict_pseudo_cone,
    terminal_weight,
    tower_graph,
    weight_colimit,
    weighted_limit,
)
from skellim.errors import BoundExceeded, HypothesisViolation
from skellim.generate import group_pullback_diagram
from skellim.hom_spaces import mapping_space, walking_iso
from skellim.homs import MapSearch
from skellim.simplicial.constructions import horn, point, product, std_simplex
from skellim.simplicial.iso import is_isomorphic
from skellim.simplicial.nerve import nerve
from skellim.simplicial.sset import SimplicialMap, SimplicialSet

from conftest import chain


def cube(k: int) -> SimplicialSet:
    return point() if k == 0 else product(*[std_simplex(1)] * k)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_coherent_hom_of_simplex_is_a_cube(n):
    H = realization_hom(std_simplex(n), "0", str(n))
    H.validate()
    assert is_isomorphic(H, cube(n - 1)) is not None


def test_coherent_hom_counts():
    assert realization_hom(std_simplex(3), "0", "3").counts() == (4, 5, 2)
    assert realization_hom(std_simplex(4), "0", "4").counts() == (8, 19, 18, 6)


def test_coherent_hom_edge_runs_from_direct_to_composite():
    H = realization_hom(std_simplex(2), "0", "2")
    (e,) = H.generators(1)
    target, source = H.faces(e)
    assert source[0] == "0,2" and target[0] == "0,1|1,2"


def test_coherent_hom_of_inner_vertices():
    H = realization_hom(std_simplex(3), "1", "3")
    assert is_isomorphic(H, std_simplex(1)) is not None
    assert realization_hom(std_simplex(2), "2", "0").is_empty()
    assert realization_hom(std_simplex(2), "1", "1").counts() == (1,)


def test_cyclic_shape_needs_a_bead_bound():
    loop = SimplicialSet([["a", "b"], ["f", "g"]], {"f": (("b", (0,)), ("a", (0,))), "g": (("a", (0,)), ("b", (0,)))})
    with pytest.raises(BoundExceeded):
        realization_hom(loop, "a", "b")
    # f, then f g f with up to three beads
    assert len(realization_hom(loop, "a", "b", max_beads=1).generators(0)) == 1
    assert len(realization_hom(loop, "a", "b", max_beads=3).generators(0)) == 2


@pytest.mark.parametrize("p,q", [(0, 0), (1, 0), (0, 2), (1, 1), (2, 1)])
def test_join_of_simplices(p, q):
    J = join(std_simplex(p), std_simplex(q))
    J.validate()
    assert is_isomorphic(J, std_simplex(p + q + 1)) is not None


def test_cone_on_horn():
    C = cone(horn(2, 2))
    assert C.counts() == (4, 5, 2)


def test_discrete_pseudo_weight_is_terminal():
    X = SimplicialSet([["a", "b", "c"]], {})
    W = pseudo_weight(X)
    T = terminal_weight(W.index)
    assert all(is_isomorphic(W.values[o], T.values[o]) is not None for o in W.index.objects)


def test_pullback_pseudo_weight_middle_value():
    W = pseudo_weight(horn(2, 2))
    assert W.values["0"].counts() == (1,) and W.values["1"].counts() == (1,)
    V = W.values["2"]
    assert V.counts() == (3, 2)
    direct = f"{BOTTOM}*2"
    assert all(V.faces(e)[1][0] == direct for e in V.generators(1))
    # the outer objects include into the composite-path vertices
    assert {W.action["0,2"].images[g][0] for g in W.values["0"].generators(0)} == {f"{BOTTOM}*0|0,2"}


def test_arrow_pseudo_weight():
    W = pseudo_weight(std_simplex(1))
    assert is_isomorphic(W.values["0"], std_simplex(0)) is not None
    assert is_isomorphic(W.values["1"], std_simplex(1)) is not None
    # independent route: the cube formula for Hom(0, 2) in the realization of Delta^2
    assert is_isomorphic(W.values["1"], cube(1)) is not None


def _nonempty_paths_into(X):
    ins = {v: [] for v in X.generators(0)}
    for e in X.generators(1):
        (t, _), (s, _) = X.faces(e)
        ins[t].append(s)
    memo = {}

    def n(x):
        if x not in memo:
            memo[x] = sum(1 + n(s) for s in ins[x])
        return memo[x]

    return {x: n(x) for x in ins}


def _random_dag(seed):
    rng = random.Random(seed)
    k = rng.randint(1, 4)
    verts = [f"v{i}" for i in range(k)]
    edges, faces = [], {}
    for i, j in itertools.combinations(range(k), 2):
        for m in range(rng.choice([0, 0, 1, 2])):
            e = f"e{i}{j}{m}"
            edges.append(e)
            faces[e] = ((verts[j], (0,)), (verts[i], (0,)))
    return SimplicialSet([verts, edges], faces)


@given(st.integers(0, 10_000))
def test_pseudo_weight_vertex_count(seed):
    X = _random_dag(seed)
    W = pseudo_weight(X)
    paths = _nonempty_paths_into(X)
    for x in X.generators(0):
        assert len(W.values[x].generators(0)) == 1 + paths[x]
        W.values[x].validate()


@given(st.integers(0, 10_000))
def test_pseudo_weights_of_graphs_are_flexible(seed):
    W = pseudo_weight(_random_dag(seed))
    assert check_flexible_presentation(W).valid


def test_tower_weight_is_flexible():
    W = pseudo_weight(tower_graph(3))
    assert {o: v.counts() for o, v in W.values.items()} == {"0": (4, 3), "1": (3, 2), "2": (2, 1), "3": (1,)}
    assert check_flexible_presentation(W).valid


def test_broken_presentation_is_located():
    W = pseudo_weight(horn(2, 2))
    W.cells = W.cells[:-1]
    v = check_flexible_presentation(W)
    assert not v.valid and v.location is not None


def test_weight_json_round_trip():
    W = pseudo_weight(horn(2, 2))
    text = io.dumps(io.weight_to_json(W))
    assert io.dumps(io.weight_to_json(io.weight_from_json(io.loads(text)))) == text


def test_terminal_weighted_limit_is_the_strict_limit():
    F = group_pullback_diagram(4)
    T = terminal_weight(F.index)
    assert is_isomorphic(weighted_limit(T, F, dim_bound=3), strict_limit(F)) is not None or (
        is_isomorphic(weighted_limit(T, F, dim_bound=3), _skeleton(strict_limit(F), 3)) is not None
    )


def _skeleton(X, n):
    from skellim.simplicial.constructions import skeleton

    return skeleton(X, n)[0]


def _natural_families(W, F):
    """Brute-force count of natural transformations ``W => F`` (vertices of ``{W, F}``)."""
    objs = list(W.index.objects)
    options = []
    for c in objs:
        S, A = W.values[c], F.values[c]
        options.append([SimplicialMap(S, A, dict(zip(S.all_generators(), sol))) for sol in MapSearch(S, A).solutions()])
    count = 0
    for fam in itertools.product(*options):
        phi = dict(zip(objs, fam))
        if all(F.maps[g].compose(phi[s]) == phi[t].compose(W.action[g]) for g, (s, t) in W.index.generators.items()):
            count += 1
    return count


@pytest.mark.parametrize("seed", [1, 4])
def test_weighted_limit_vertices_are_natural_transformations(seed):
    F = group_pullback_diagram(seed)
    W = pseudo_weight(horn(2, 2))
    Q = weighted_limit(W, F, dim_bound=2)
    assert len(Q.generators(0)) == _natural_families(W, F)


def test_constant_diagram_gives_cotensor_with_colimit():
    A = nerve(chain(1))
    W = pseudo_weight(horn(2, 2))
    idx = W.index
    F = SsetDiagram(idx, {o: A for o in idx.objects}, {g: A.identity_map() for g in idx.generators})
    colim = weight_colimit(W)
    assert colim.counts() == (3, 2)
    assert is_isomorphic(weighted_limit(W, F), mapping_space(colim, A)) is not None


def test_strict_pseudo_cone_and_comparison():
    F = group_pullback_diagram(1)
    W = pseudo_weight(horn(2, 2))
    cone_ = strict_pseudo_cone(F, W, bound=3)
    for c, leg in cone_["legs"].items():
        leg.validate()
    m, L, Q = comparison_map(F, W, dim_bound=3)
    m.validate()
    assert len(L.generators(0)) == 1 and len(Q.generators(0)) == 4


def test_non_isofibration_leg_is_rejected():
    J = nerve(walking_iso(), bound=4)
    P = std_simplex(0)
    p = SimplicialMap(P, J, {"0": J.gen_simplex("a")})
    F = SsetDiagram(IndexCategory.cospan(), {"0": P, "1": P, "2": J}, {"0,2": p, "1,2": p})
    with pytest.raises(HypothesisViolation):
        comparison_map(F, pseudo_weight(horn(2, 2)), dim_bound=2)
