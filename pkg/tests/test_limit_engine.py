from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skellim.category import FiniteCategory, cyclic_group
from skellim.coherent_weights import comparison_map, pseudo_weight
from skellim.errors import ArityExceeded, MissingLimit
from skellim.generate import (
    group_pullback_diagram,
    group_tower_diagram,
    random_cone_presentation,
    random_join_semilattice,
    random_lattice,
    random_monotone_diagram,
    random_pushout_square,
    random_sset,
)
from skellim.limit_engine import (
    DiagramInCat,
    brute_force_colimit,
    brute_force_limit,
    colimit_by_skeletal_induction,
    cone_isomorphism,
    cone_limit_check,
    glue_limits_pushout,
    homotopy_category,
    is_equivalence_of_homotopy_categories,
    limit_by_skeletal_induction,
    limit_over_simplex,
    quasicategory_homotopy_category,
    replay_brute_force,
    tau1,
)
from skellim.simplicial.constructions import horn, std_simplex
from skellim.simplicial.nerve import nerve
from skellim.simplicial.sset import SimplicialSet

from conftest import divisors


def _diagram(X, C, obj):
    mor = {}
    for e in X.generators(1):
        (t, _), (s, _) = X.faces(e)
        mor[e] = C.hom(obj[s], obj[t])[0]
    return DiagramInCat(X, C, obj, mor)


def _discrete(*names):
    return SimplicialSet([list(names)], {})


def test_pullback_in_divisor_lattice_is_gcd():
    C = divisors(12)
    d = _diagram(horn(2, 2), C, {"0": "4", "1": "6", "2": "12"})
    cert = limit_by_skeletal_induction(C, d)
    assert cert.apex == "2"
    assert cone_isomorphism(C, cert, brute_force_limit(C, d)) is not None


def test_product_and_coproduct_in_divisor_lattice():
    C = divisors(12)
    d = _diagram(_discrete("a", "b"), C, {"a": "4", "b": "6"})
    assert limit_by_skeletal_induction(C, d).apex == "2"
    assert colimit_by_skeletal_induction(C, d).apex == "12"
    assert brute_force_colimit(C, d).apex == "12"


def test_empty_diagram_gives_terminal_object():
    C = divisors(12)
    d = DiagramInCat(SimplicialSet([], {}), C, {}, {})
    assert limit_by_skeletal_induction(C, d).apex == "12"


def test_limit_over_simplex_is_the_initial_vertex():
    C = divisors(12)
    d = _diagram(std_simplex(2), C, {"0": "2", "1": "4", "2": "12"})
    cert = limit_over_simplex(C, d)
    assert cert.apex == "2"
    assert cone_isomorphism(C, cert, brute_force_limit(C, d)) is not None


def test_missing_meet_names_the_stage():
    C = FiniteCategory.from_poset(["x", "y", "t"], lambda a, b: a == b or b == "t")
    d = _diagram(_discrete("a", "b"), C, {"a": "x", "b": "y"})
    with pytest.raises(MissingLimit) as info:
        limit_by_skeletal_induction(C, d)
    assert info.value.stage == "X/sk0"
    assert brute_force_limit(C, d) is None


def test_missing_pullback_inside_a_boundary():
    C = FiniteCategory.from_poset(["x", "y", "t"], lambda a, b: a == b or b == "t")
    d = _diagram(horn(2, 2), C, {"0": "x", "1": "y", "2": "t"})
    with pytest.raises(MissingLimit) as info:
        limit_by_skeletal_induction(C, d)
    assert info.value.stage.startswith("X/sk")


def test_kappa_bounds_product_arity():
    C = divisors(12)
    d = _diagram(_discrete("a", "b"), C, {"a": "4", "b": "6"})
    with pytest.raises(ArityExceeded):
        limit_by_skeletal_induction(C, d, kappa=2)
    assert limit_by_skeletal_induction(C, d, kappa=3).apex == "2"


def test_non_poset_category_uses_brute_force_products():
    C = cyclic_group(2)
    d = DiagramInCat(_discrete("a"), C, {"a": "*"}, {})
    assert limit_by_skeletal_induction(C, d).apex == "*"


def test_trace_records_every_stage():
    C = divisors(12)
    d = _diagram(std_simplex(2), C, {"0": "2", "1": "4", "2": "12"})
    trace = limit_by_skeletal_induction(C, d).evidence["trace"]
    assert {t["stage"].split("/")[1] for t in trace} >= {"sk0", "sk1", "sk2"}


@settings(max_examples=15)
@given(st.integers(0, 10_000))
def test_induction_agrees_with_brute_force(seed):
    C = random_lattice(seed, 8)
    X = random_sset(seed + 1, 7, 2)
    d = random_monotone_diagram(seed + 2, X, C)
    a = limit_by_skeletal_induction(C, d)
    b = brute_force_limit(C, d)
    assert cone_isomorphism(C, a, b) is not None
    assert replay_brute_force(C, d, b)


@settings(max_examples=15)
@given(st.integers(0, 10_000))
def test_colimit_is_dual(seed):
    C = random_join_semilattice(seed, 8)
    X = random_sset(seed + 1, 6, 2)
    d = random_monotone_diagram(seed + 2, X, C)
    try:
        a = colimit_by_skeletal_induction(C, d)
    except MissingLimit:
        assert brute_force_colimit(C, d) is None
        return
    b = brute_force_colimit(C, d)
    assert cone_isomorphism(C.opposite(), a, b) is not None


def test_replay_rejects_a_wrong_apex():
    C = divisors(12)
    d = _diagram(horn(2, 2), C, {"0": "4", "1": "6", "2": "12"})
    cert = brute_force_limit(C, d)
    cert.apex, cert.legs = "1", {v: C.hom("1", o)[0] for v, o in d.obj.items()}
    assert not replay_brute_force(C, d, cert)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_limits_glue_along_pushouts(seed):
    i, g, jY, jZ = random_pushout_square(seed, 4)
    C = random_lattice(seed, 8)
    d = random_monotone_diagram(seed, jY.target, C)
    dY, dZ = d.restrict(jY), d.restrict(jZ)
    lY, lZ = limit_by_skeletal_induction(C, dY), limit_by_skeletal_induction(C, dZ)
    lX = limit_by_skeletal_induction(C, dY.restrict(i))
    glued = glue_limits_pushout(C, i, g, jY, jZ, d, lX, lY, lZ)
    assert cone_isomorphism(C, glued, brute_force_limit(C, d)) is not None


def test_fundamental_category_of_a_nerve():
    C = divisors(12)
    H = homotopy_category(nerve(C))
    assert len(H.objects) == len(C.objects) and len(H.morphisms) == len(C.morphisms)
    assert len(homotopy_category(horn(2, 1)).morphisms) == 6
    assert tau1(horn(2, 1)).relations == ()


def test_homotopy_category_of_a_group_nerve():
    H, _ = quasicategory_homotopy_category(nerve(cyclic_group(3), bound=3))
    assert len(H.objects) == 1 and len(H.morphisms) == 3


def test_diagram_map_round_trip():
    C = divisors(12)
    d = _diagram(std_simplex(2), C, {"0": "2", "1": "4", "2": "12"})
    A = nerve(C)
    back = DiagramInCat.from_map(d.to_map(A))
    assert back.obj == d.obj and back.mor == d.mor


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_cone_object_limit(seed):
    A, presentation, d = random_cone_presentation(seed)
    v = cone_limit_check(A, presentation, d)
    assert v.verdict == "yes"


@pytest.mark.parametrize("make", [lambda: (group_pullback_diagram(0), horn(2, 2)), lambda: (group_tower_diagram(0), None)])
def test_group_comparison_is_a_homotopy_equivalence(make):
    F, shape = make()
    from skellim.coherent_weights import tower_graph

    W = pseudo_weight(shape if shape is not None else tower_graph(len(F.values) - 1))
    m, L, Q = comparison_map(F, W, dim_bound=3)
    assert is_equivalence_of_homotopy_categories(m)["verdict"] == "yes"
