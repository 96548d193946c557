"""Nerves of finite categories."""
from __future__ import annotations

from ..category import FiniteCategory
from ..config import default_bound
from .sset import SimplicialMap, SimplicialSet


def longest_chain(C: FiniteCategory) -> int | None:
    """Length of the longest identity-free chain, or ``None`` if unbounded."""
    if C.has_nontrivial_cycles():
        return None
    memo: dict = {}

    def depth(a):
        if a not in memo:
            memo[a] = max((1 + depth(C.tgt(m)) for m in C.out_of(a) if not C.is_identity(m)), default=0)
        return memo[a]

    return max((depth(a) for a in C.objects), default=-1)


def chain_id(chain) -> str:
    return "[" + ";".join(chain) + "]"


def nerve(C: FiniteCategory, bound: int | None = None) -> SimplicialSet:
    """Nerve of ``C``; categories with cycles are truncated at ``bound`` (recorded)."""
    top = longest_chain(C)
    rec_bound = None
    if top is None:
        top = default_bound() + 2 if bound is None else bound
        rec_bound = top
    elif bound is not None and bound < top:
        top = bound
        rec_bound = bound
    nonid = {a: [m for m in C.out_of(a) if not C.is_identity(m)] for a in C.objects}
    gens = [list(C.objects)] if C.objects else []
    chains = {}
    frontier = [((m,), C.tgt(m)) for a in C.objects for m in nonid[a]]
    for n in range(1, top + 1):
        if not frontier:
            break
        gens.append([])
        nxt = []
        for ch, end in frontier:
            gid = chain_id(ch)
            gens[n].append(gid)
            chains[gid] = ch
            if n < top:
                nxt.extend((ch + (m,), C.tgt(m)) for m in nonid[end])
        frontier = nxt
    faces = {}
    for gid, ch in chains.items():
        start = C.src(ch[0])
        faces[gid] = tuple(_chain_nf(C, _chain_face(C, start, ch, i)) for i in range(len(ch) + 1))
    X = SimplicialSet(gens, faces, bound=rec_bound, name=C.name and f"N({C.name})", check=False)
    X.meta["category"] = C
    X.meta["nerve"] = True
    X.meta["chains"] = chains
    return X


def _chain_face(C, start, ch, i):
    n = len(ch)
    if i == 0:
        return (C.tgt(ch[0]), ch[1:])
    if i == n:
        return (start, ch[:-1])
    return (start, ch[: i - 1] + (C.comp(ch[i], ch[i - 1]),) + ch[i + 1 :])


def _chain_nf(C, key):
    start, ch = key
    kept = [m for m in ch if not C.is_identity(m)]
    sigma = [0]
    for m in ch:
        sigma.append(sigma[-1] + (0 if C.is_identity(m) else 1))
    gid = chain_id(kept) if kept else start
    return (gid, tuple(sigma))


def chain_simplex(X: SimplicialSet, start: str, chain) -> tuple:
    """Normal form of the simplex of ``nerve(C)`` given by a composable chain."""
    return _chain_nf(X.meta["category"], (start, tuple(chain)))


def simplex_chain(X: SimplicialSet, s) -> tuple:
    """Inverse of :func:`chain_simplex`: ``(start, chain)`` of a nerve simplex."""
    C = X.meta["category"]
    g, sigma = s
    if X.dim_of(g) == 0:
        return (g, tuple(C.identity(g) for _ in range(len(sigma) - 1)))
    ch = X.meta["chains"][g]
    start = C.src(ch[0])
    objs = [start] + [C.tgt(m) for m in ch]
    out = []
    for a, b in zip(sigma, sigma[1:]):
        out.append(C.identity(objs[a]) if a == b else ch[a])
    return (start, tuple(out))


def nerve_functor(X: SimplicialSet, Y: SimplicialSet, obj, mor) -> SimplicialMap:
    """``N(F): N(C) -> N(D)`` for a functor given by object and morphism assignments.

    ``obj`` and ``mor`` are dicts or callables; identities must go to identities.
    """
    fo = obj if callable(obj) else obj.__getitem__
    fm = mor if callable(mor) else mor.__getitem__
    C = X.meta["category"]
    images = {}
    for g in X.all_generators():
        if X.dim_of(g) == 0:
            images[g] = (fo(g), (0,))
            continue
        ch = X.meta["chains"][g]
        images[g] = chain_simplex(Y, fo(C.src(ch[0])), [fm(m) for m in ch])
    return SimplicialMap(X, Y, images, check=False)
