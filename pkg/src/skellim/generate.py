"""Seeded random instances: lattices, posets, simplicial sets and diagrams."""
from __future__ import annotations

import random

from .category import FiniteCategory
from .homs import MapSearch
from .limit_engine import DiagramInCat
from .simplicial.constructions import boundary, pushout, std_simplex
from .simplicial.sset import SimplicialMap, SimplicialSet


def _set_family_category(sets, name) -> FiniteCategory:
    fam = sorted({frozenset(s) for s in sets}, key=lambda s: (len(s), sorted(s)))
    names = [f"e{k}" for k in range(len(fam))]
    of = dict(zip(names, fam))
    C = FiniteCategory.from_poset(names, lambda a, b: of[a] <= of[b], name=name)
    C.meta = {"sets": {k: sorted(v) for k, v in of.items()}}
    return C


def random_join_semilattice(seed: int, size: int = 8, *, bottom: bool = False) -> FiniteCategory:
    """A union-closed family of subsets ordered by inclusion (at most ``size`` elements)."""
    rng = random.Random(seed)
    universe = max(2, min(5, size // 2 + 1))
    while True:
        k = rng.randint(2, max(2, min(size, 5)))
        base = [frozenset(x for x in range(universe) if rng.random() < 0.45) for _ in range(k)]
        fam = set(base)
        changed = True
        while changed:
            changed = False
            for a in list(fam):
                for b in list(fam):
                    if a | b not in fam:
                        fam.add(a | b)
                        changed = True
        if bottom:
            fam.add(frozenset())
        if 2 <= len(fam) <= size:
            return _set_family_category(fam, f"jsl{seed}")


def random_lattice(seed: int, size: int = 12) -> FiniteCategory:
    """A finite lattice: a union-closed family that contains the empty set."""
    return random_join_semilattice(seed, size, bottom=True)


def random_poset(seed: int, size: int = 5, density: float = 0.35) -> FiniteCategory:
    """Transitive closure of a random DAG on ``size`` elements."""
    rng = random.Random(seed)
    n = max(1, size)
    below = {j: {i for i in range(j) if rng.random() < density} for j in range(n)}
    for j in range(n):
        for i in sorted(below[j]):
            below[j] |= below[i]
    names = [f"p{k}" for k in range(n)]
    return FiniteCategory.from_poset(names, lambda a, b: a == b or int(a[1:]) in below[int(b[1:])], name=f"poset{seed}")


def random_sset(seed: int, size: int = 8, max_dim: int = 3) -> SimplicialSet:
    """Attach random simplices along random boundary maps until ``size`` generators exist.

    Cells of dimension ``k`` are glued along an arbitrary map of
    ``boundary(k)``, so degenerate faces and loops can occur.
    """
    rng = random.Random(seed)
    nv = rng.randint(1, max(1, min(3, size)))
    X = SimplicialSet([[f"v{k}" for k in range(nv)]], {})
    count = 1
    while len(X.all_generators()) < size:
        k = rng.randint(1, max_dim)
        if k > X.dim + 1:
            k = X.dim + 1
        B = boundary(k)
        sols = MapSearch(B, X, rng=rng).solutions(limit=1)
        if not sols:
            continue
        att = SimplicialMap(B, X, dict(zip(B.all_generators(), sols[0])), check=False)
        D = std_simplex(k)
        inc = SimplicialMap(B, D, {g: D.gen_simplex(g) for g in B.all_generators()}, check=False)
        inc.flags["mono"] = True
        tag = f"c{count}"
        X, _, _ = pushout(inc, att, rename=lambda g, tag=tag: tag)
        count += 1
    X.name = f"rand{seed}"
    return X


def random_monotone_diagram(seed: int, X: SimplicialSet, C: FiniteCategory) -> DiagramInCat:
    """A diagram ``X -> C`` for a poset ``C``: vertex values increasing along every edge.

    Vertices joined by cycles receive equal values; every other vertex gets a
    random upper bound of its predecessors' values (the join when it exists,
    else any common upper bound; the choice is retried when none exists).
    """
    rng = random.Random(seed)
    verts = list(X.generators(0))
    succ = {v: set() for v in verts}
    for e in X.generators(1):
        (t, _), (s, _) = X.faces(e)
        succ[s].add(t)
    comp = _scc(verts, succ)
    order = _topo(comp, succ)
    leq = lambda a, b: bool(C.hom(a, b))
    for _ in range(200):
        val: dict = {}
        ok = True
        for c in order:
            preds = {val[comp[u]] for u in verts if comp[u] in val and any(comp[w] == c for w in succ[u]) and comp[u] != c}
            ups = [o for o in C.objects if all(leq(p, o) for p in preds)]
            if not ups:
                ok = False
                break
            val[c] = rng.choice(ups)
        if ok:
            obj = {v: val[comp[v]] for v in verts}
            mor = {}
            for e in X.generators(1):
                (t, _), (s, _) = X.faces(e)
                mor[e] = C.hom(obj[s], obj[t])[0]
            return DiagramInCat(X, C, obj, mor)
    raise ValueError("no monotone assignment found")


def _scc(verts, succ) -> dict:
    index, low, stack, on, comp = {}, {}, [], set(), {}
    counter = [0]

    def visit(v):
        index[v] = low[v] = counter[0]
        counter[0] += 1
        stack.append(v)
        on.add(v)
        for w in succ[v]:
            if w not in index:
                visit(w)
                low[v] = min(low[v], low[w])
            elif w in on:
                low[v] = min(low[v], index[w])
        if low[v] == index[v]:
            while True:
                w = stack.pop()
                on.discard(w)
                comp[w] = v
                if w == v:
                    break

    for v in verts:
        if v not in index:
            visit(v)
    return comp


def _topo(comp, succ) -> list:
    nodes = sorted(set(comp.values()))
    out = {c: set() for c in nodes}
    for v, ws in succ.items():
        for w in ws:
            if comp[v] != comp[w]:
                out[comp[v]].add(comp[w])
    indeg = {c: 0 for c in nodes}
    for c in nodes:
        for d in out[c]:
            indeg[d] += 1
    ready = [c for c in nodes if indeg[c] == 0]
    order = []
    while ready:
        c = ready.pop(0)
        order.append(c)
        for d in sorted(out[c]):
            indeg[d] -= 1
            if indeg[d] == 0:
                ready.append(d)
    return order


def _closure(Y: SimplicialSet, gens) -> SimplicialSet:
    keep = set()
    todo = list(gens)
    while todo:
        h = todo.pop()
        if h not in keep:
            keep.add(h)
            todo.extend(t for t, _ in Y.faces(h))
    levels = [[h for h in Y.generators(n) if h in keep] for n in range(Y.dim + 1)]
    while levels and not levels[-1]:
        levels.pop()
    return SimplicialSet(levels, {h: Y.faces(h) for h in keep}, name="X")


def random_pushout_square(seed: int, size: int = 4) -> tuple:
    """``(i, g, jY, jZ)``: a pushout of a random mono ``i: X -> Y`` along a random ``g: X -> Z``.

    ``Y`` and ``Z`` are random simplicial sets with about ``size`` generators
    and ``X`` is the subcomplex of ``Y`` generated by a random vertex and, half
    of the time, a random edge.
    """
    rng = random.Random(seed)
    Y = random_sset(rng.randrange(1 << 30), size, 2)
    Z = random_sset(rng.randrange(1 << 30), size, 2).relabel(lambda g: "z" + g)
    pick = [rng.choice(list(Y.generators(0)))]
    if Y.dim >= 1 and rng.random() < 0.5:
        pick.append(rng.choice(list(Y.generators(1))))
    X = _closure(Y, pick)
    i = SimplicialMap(X, Y, {h: Y.gen_simplex(h) for h in X.all_generators()})
    i.flags["mono"] = True
    sol = MapSearch(X, Z, rng=rng).solutions(limit=1)[0]
    g = SimplicialMap(X, Z, dict(zip(X.all_generators(), sol)))
    P, jY, jZ = pushout(i, g)
    return i, g, jY, jZ


def random_cone_presentation(seed: int, size: int = 3, max_height: int = 4) -> tuple:
    """``(A, presentation, d)`` for :func:`skellim.limit_engine.cone_limit_check`.

    ``A`` is the nerve of a random poset with ``size`` elements, ``X`` is a
    coproduct (even seeds) or a pushout (odd seeds) of small random simplicial
    sets, and ``d: X -> A`` is a random monotone diagram that admits a cone.
    Draws are repeated (deterministically) until the chain length of the poset
    times the number of vertices of ``X`` is at most ``max_height``, which
    bounds the dimension of the cotensor ``A^X``.
    """
    from .simplicial.constructions import coproduct
    from .simplicial.nerve import longest_chain, nerve

    rng = random.Random(seed)
    while True:
        C = random_poset(rng.randrange(1 << 30), size, 0.5)
        if seed % 2 == 0:
            Y = random_sset(rng.randrange(1 << 30), rng.randint(1, 3), 1)
            Z = random_sset(rng.randrange(1 << 30), rng.randint(1, 3), 1)
            X, legs = coproduct([Y, Z], ["y", "z"])
            presentation = {"kind": "coproduct", "legs": list(legs)}
        else:
            i, g, jY, jZ = random_pushout_square(rng.randrange(1 << 30), 3)
            X = jY.target
            presentation = {"kind": "pushout", "i": i, "g": g, "jY": jY, "jZ": jZ}
        if max(longest_chain(C), 1) * len(X.generators(0)) > max_height:
            continue
        d = random_monotone_diagram(rng.randrange(1 << 30), X, C)
        values = set(d.obj.values())
        if any(all(C.leq(c, v) for v in values) for c in C.objects):
            A = nerve(C)
            return A, presentation, d.to_map(A)


def _cyclic_nerve(n: int, bound: int):
    from .category import cyclic_group
    from .simplicial.nerve import nerve

    return nerve(cyclic_group(n), bound=bound)


def _reduction(NH, NG, m: int):
    """``N(Z/h) -> N(Z/m)`` induced by reduction mod ``m`` (``m`` divides ``h``)."""
    from .simplicial.nerve import nerve_functor

    return nerve_functor(NH, NG, lambda o: o, lambda g: f"g{int(g[1:]) % m}")


def group_pullback_diagram(seed: int, bound: int = 6):
    """A cospan ``N(Z/h) -> N(Z/2) <- N(Z/k)`` whose first leg is reduction mod 2 (a surjection).

    ``h`` is 2 or 4 and ``k`` is 1 or 2, small enough for the weighted limit
    to stay enumerable; nerves are truncated at ``bound``.
    """
    from .coherent_weights import IndexCategory, SsetDiagram

    rng = random.Random(seed)
    g = 2
    h = g * rng.choice([1, 2])
    k = rng.choice([1, g])
    NG, NH, NK = (_cyclic_nerve(n, bound) for n in (g, h, k))
    maps = {"0,2": _reduction(NH, NG, g), "1,2": _reduction(NK, NG, g)}
    return SsetDiagram(IndexCategory.cospan(), {"0": NH, "1": NK, "2": NG}, maps, {"orders": (h, k, g)})


def group_tower_diagram(seed: int, bound: int = 6):
    """A tower ``N(Z/n_l) -> ... -> N(Z/n_0)`` of reductions, ``n_{j+1}`` a multiple of ``n_j``.

    Orders are at most 4 and the top group is never trivial.
    """
    from .coherent_weights import IndexCategory, SsetDiagram

    rng = random.Random(seed)
    length = rng.choice([1, 2])
    orders = [rng.choice([1, 2])]
    for _ in range(length):
        orders.append(min(4, orders[-1] * rng.choice([1, 2])))
    if orders[-1] == 1:
        orders[-1] = 2
    values = {str(j): _cyclic_nerve(n, bound) for j, n in enumerate(orders)}
    maps = {f"{j + 1},{j}": _reduction(values[str(j + 1)], values[str(j)], orders[j]) for j in range(length)}
    return SsetDiagram(IndexCategory.tower(length), values, maps, {"orders": tuple(orders)})
