"""Isomorphism search between finite simplicial sets."""
from __future__ import annotations

from collections import Counter

from ..homs import MapSearch
from .sset import SimplicialMap, SimplicialSet


def _fingerprints(X: SimplicialSet) -> dict:
    cof = Counter()
    for g in X.all_generators():
        for t, _ in X.faces(g):
            cof[t] += 1
    out = {}
    for g in X.all_generators():
        shape = tuple((X.dim_of(t), w) for t, w in X.faces(g))
        out[g] = (X.dim_of(g), shape, cof[g])
    return out


def is_isomorphic(X: SimplicialSet, Y: SimplicialSet) -> SimplicialMap | None:
    """An isomorphism ``X -> Y`` or ``None``; the first one in generator order wins."""
    if X.counts() != Y.counts():
        return None
    fx, fy = _fingerprints(X), _fingerprints(Y)
    if sorted(fx.values()) != sorted(fy.values()):
        return None
    by_print: dict = {}
    for h in Y.all_generators():
        by_print.setdefault(fy[h], []).append(Y.gen_simplex(h))
    domains = {g: by_print[fx[g]] for g in X.all_generators()}
    order = [g for n in range(X.dim, -1, -1) for g in X.generators(n)]
    sol = MapSearch(X, Y, domains=domains, order=order, injective=True).first()
    if sol is None:
        return None
    f = SimplicialMap(X, Y, dict(zip(X.all_generators(), sol)), check=False)
    f.flags["mono"] = True
    return f
