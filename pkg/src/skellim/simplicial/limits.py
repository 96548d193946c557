"""Finite limits of simplicial sets as sub-objects of products."""
from __future__ import annotations

from typing import Sequence

from ..errors import SimplicialError
from .constructions import product_nf, projection, simplex_label
from .sset import SimplicialMap, SimplicialSet


def finite_limit(objects: Sequence[SimplicialSet], constraints: Sequence[tuple] = (), *, name: str | None = None) -> SimplicialSet:
    """Limit cut out of ``prod objects`` by equations.

    Each constraint ``(i, f, j, g)`` with ``f: objects[i] -> T`` and
    ``g: objects[j] -> T`` keeps the tuples with ``f(x_i) == g(x_j)``.  Simplices
    are matched levelwise by hash join; a tuple is a generator when its
    components are jointly non-degenerate.  The result has the same ``meta``
    layout as :func:`product`, so projections and ``product_nf`` apply.
    """
    objects = list(objects)
    k = len(objects)
    bounds = [X.bound for X in objects if X.bound is not None]
    bound = min(bounds) if bounds else None
    if any(X.is_empty() for X in objects):
        out = SimplicialSet([], {}, check=False, name=name)
        out.meta.update(factors=tuple(objects), tuple_gen={}, gen_tuple={})
        return out
    top = sum(X.dim for X in objects)
    if bound is not None:
        top = min(top, bound)
    # constraints attached to the later of their two objects
    back: list = [[] for _ in range(k)]
    for i, f, j, g in constraints:
        if f.source != objects[i] or g.source != objects[j]:
            raise SimplicialError("constraint map does not start at its object")
        if f.target != g.target:
            raise SimplicialError("constraint maps have different targets")
        if i == j:
            back[i].append((i, f, g, True))
        elif i < j:
            back[j].append((i, f, g, False))
        else:
            back[i].append((j, g, f, False))
    gens, tuple_gen, gen_tuple = [], {}, {}
    for r in range(top + 1):
        tables = []
        for p, X in enumerate(objects):
            index: dict = {}
            for x in X.simplices(r):
                if any(self_c and f.apply(x) != g.apply(x) for _, f, g, self_c in back[p]):
                    continue
                key = tuple(g.apply(x) for _, f, g, self_c in back[p] if not self_c)
                index.setdefault(key, []).append(x)
            tables.append(index)
        level = []
        for parts in _join(objects, back, tables, r):
            if r > 0 and not all(any(s[1][t] != s[1][t + 1] for s in parts) for t in range(r)):
                continue
            gid = "(" + ";".join(simplex_label(p) for p in parts) + ")"
            tuple_gen[parts] = gid
            gen_tuple[gid] = parts
            level.append(gid)
        gens.append(level)
    L = SimplicialSet(gens, {}, bound=bound, check=False, name=name)
    L.meta.update(factors=tuple(objects), tuple_gen=tuple_gen, gen_tuple=gen_tuple)
    L.meta["nerve"] = all(X.meta.get("nerve") for X in objects)
    faces = {g: () for g in (gens[0] if gens else ())}
    for r in range(1, len(gens)):
        for gid in gens[r]:
            parts = gen_tuple[gid]
            faces[gid] = tuple(
                product_nf(L, tuple(X.face(p, i) for X, p in zip(objects, parts))) for i in range(r + 1)
            )
    L._faces = faces
    return L


def _join(objects, back, tables, r):
    k = len(objects)
    parts: list = [None] * k

    def rec(p):
        if p == k:
            yield tuple(parts)
            return
        key = tuple(f.apply(parts[i]) for i, f, g, self_c in back[p] if not self_c)
        for x in tables[p].get(key, ()):
            parts[p] = x
            yield from rec(p + 1)
        parts[p] = None

    return rec(0)


def pullback(f: SimplicialMap, g: SimplicialMap):
    """``(P, pX, pY)`` for the cospan ``X --f--> Z <--g-- Y``."""
    if f.target != g.target:
        raise SimplicialError("pullback legs need a common codomain")
    P = finite_limit([f.source, g.source], [(0, f, 1, g)])
    return P, projection(P, 0), projection(P, 1)


def equalizer(f: SimplicialMap, g: SimplicialMap):
    """``(E, inclusion)`` for a parallel pair."""
    if f.source != g.source or f.target != g.target:
        raise SimplicialError("equalizer needs a parallel pair")
    E = finite_limit([f.source], [(0, f, 0, g)])
    return E, projection(E, 0)
