"""Standard simplicial sets and colimit/limit constructions on generators."""
from __future__ import annotations

from itertools import combinations
from typing import Sequence

from ..errors import NotAMonomorphism, SimplicialError
from .sset import SimplicialMap, SimplicialSet
from .words import compose, identity, surj_to_word, surjections


def simplex_label(s) -> str:
    g, sigma = s
    if sigma[-1] == len(sigma) - 1:
        return g
    return "s" + ".".join(map(str, surj_to_word(sigma))) + f"({g})"


def _subset_id(S) -> str:
    return ",".join(map(str, S))


def _subcomplex_of_simplex(n: int, keep) -> SimplicialSet:
    gens, faces, vsets = [], {}, {}
    for k in range(n + 1):
        level = []
        for S in combinations(range(n + 1), k + 1):
            if not keep(S):
                continue
            gid = _subset_id(S)
            level.append(gid)
            vsets[gid] = S
            if k > 0:
                faces[gid] = tuple((_subset_id(S[:i] + S[i + 1 :]), identity(k - 1)) for i in range(k + 1))
        gens.append(level)
    X = SimplicialSet(gens, faces, check=False)
    X.meta["vertex_sets"] = vsets
    return X


def std_simplex(n: int) -> SimplicialSet:
    """The standard ``n``-simplex; generators are named by their vertex sets, e.g. ``'0,2'``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    X = _subcomplex_of_simplex(n, lambda S: True)
    X.name = f"Delta^{n}"
    X.meta["nerve"] = True
    return X


def boundary(n: int) -> SimplicialSet:
    if n < 1:
        raise ValueError("boundary needs n >= 1")
    X = _subcomplex_of_simplex(n, lambda S: len(S) < n + 1)
    X.name = f"dDelta^{n}"
    return X


def horn(n: int, k: int) -> SimplicialSet:
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"horn({n},{k}) out of range")
    missing = tuple(v for v in range(n + 1) if v != k)
    X = _subcomplex_of_simplex(n, lambda S: len(S) < n + 1 and S != missing)
    X.name = f"Lambda^{n},{k}"
    return X


def inclusion(sub: SimplicialSet, sup: SimplicialSet) -> SimplicialMap:
    """Inclusion of a sub-simplicial set sharing generator ids."""
    return SimplicialMap(sub, sup, {g: sup.gen_simplex(g) for g in sub.all_generators()})


def boundary_inclusion(n: int) -> SimplicialMap:
    return inclusion(boundary(n), std_simplex(n))


def horn_inclusion(n: int, k: int) -> SimplicialMap:
    return inclusion(horn(n, k), std_simplex(n))


def simplex_map(X: SimplicialSet, s) -> SimplicialMap:
    """The map ``Delta^n -> X`` classifying the simplex ``s``."""
    n = len(s[1]) - 1
    D = std_simplex(n)
    vs = D.meta["vertex_sets"]
    return SimplicialMap(D, X, {g: X.act(s, vs[g]) for g in D.all_generators()}, check=False)


def vertex_map(X: SimplicialSet, v: str) -> SimplicialMap:
    return SimplicialMap(std_simplex(0), X, {"0": X.gen_simplex(v)}, check=False)


def empty() -> SimplicialSet:
    return SimplicialSet([], {}, name="empty")


def point() -> SimplicialSet:
    return std_simplex(0)


def terminal_map(X: SimplicialSet) -> SimplicialMap:
    P = point()
    return SimplicialMap(X, P, {g: ("0", (0,) * (X.dim_of(g) + 1)) for g in X.all_generators()}, check=False)


def empty_map(X: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(empty(), X, {}, check=False)


# -- products ------------------------------------------------------------------


def _jointly_injective(sigmas) -> bool:
    n = len(sigmas[0]) - 1
    return all(any(s[j] != s[j + 1] for s in sigmas) for j in range(n))


def product_nf(P: SimplicialSet, parts) -> tuple:
    """Normal form in the product ``P`` of a tuple of factor simplices."""
    n = len(parts[0][1]) - 1
    keep = [0]
    rho = [0]
    for j in range(1, n + 1):
        if any(p[1][j] != p[1][j - 1] for p in parts):
            keep.append(j)
            rho.append(rho[-1] + 1)
        else:
            rho.append(rho[-1])
    core = tuple((g, tuple(s[j] for j in keep)) for g, s in parts)
    return (P.meta["tuple_gen"][core], tuple(rho))


def product(*factors: SimplicialSet) -> SimplicialSet:
    """Finite product; generators are the jointly non-degenerate tuples (shuffles)."""
    if not factors:
        return point()
    if any(F.is_empty() for F in factors):
        out = empty()
        out.meta.update(factors=factors, tuple_gen={}, gen_tuple={})
        return out
    bound = None
    for F in factors:
        if F.bound is not None:
            bound = F.bound if bound is None else min(bound, F.bound)
    top = sum(F.dim for F in factors)
    if bound is not None:
        top = min(top, bound)
    gens, tuple_gen, gen_tuple = [], {}, {}
    for r in range(top + 1):
        level = []
        choices = []
        for F in factors:
            opts = []
            for k in range(min(r, F.dim) + 1):
                for g in F.generators(k):
                    for s in surjections(r, k):
                        opts.append((g, s))
            choices.append(opts)
        for parts in _injective_tuples(choices, r):
            gid = "(" + ";".join(simplex_label(p) for p in parts) + ")"
            tuple_gen[parts] = gid
            gen_tuple[gid] = parts
            level.append(gid)
        gens.append(level)
    P = SimplicialSet(gens, {}, bound=bound, check=False)
    P.meta.update(factors=factors, tuple_gen=tuple_gen, gen_tuple=gen_tuple)
    P.meta["nerve"] = all(F.meta.get("nerve") for F in factors)
    faces = {g: () for g in gens[0]} if gens else {}
    for r, level in enumerate(gens):
        if r == 0:
            continue
        for gid in level:
            parts = gen_tuple[gid]
            faces[gid] = tuple(
                product_nf(P, tuple(F.face(p, i) for F, p in zip(factors, parts))) for i in range(r + 1)
            )
    P._faces = faces
    P.name = " x ".join(F.name or "?" for F in factors)
    return P


def _jumps(s) -> int:
    return sum(1 << j for j in range(1, len(s)) if s[j] != s[j - 1])


def _injective_tuples(choices, r: int):
    """Tuples from ``choices`` whose surjections are jointly injective, in lexicographic order.

    The last factor is looked up by the jump positions the others leave open.
    """
    full = sum(1 << j for j in range(1, r + 1))
    *front, last = choices
    by_need: dict = {}
    masks = [_jumps(s) for _, s in last]

    def fitting(need):
        if need not in by_need:
            by_need[need] = [last[q] for q, m in enumerate(masks) if m & need == need]
        return by_need[need]

    for head in _tuples(front):
        have = 0
        for _, s in head:
            have |= _jumps(s)
        for tail in fitting(full & ~have):
            yield head + (tail,)


def _tuples(choices):
    if not choices:
        yield ()
        return
    for head in choices[0]:
        for rest in _tuples(choices[1:]):
            yield (head,) + rest


def projection(P: SimplicialSet, k: int) -> SimplicialMap:
    F = P.meta["factors"][k]
    return SimplicialMap(P, F, {g: parts[k] for g, parts in P.meta["gen_tuple"].items() if g in P}, check=False)


def pairing(maps: Sequence[SimplicialMap], P: SimplicialSet) -> SimplicialMap:
    """The map ``S -> P`` into a product with the given components."""
    S = maps[0].source
    images = {}
    for g in S.all_generators():
        s = S.gen_simplex(g)
        images[g] = product_nf(P, tuple(m.apply(s) for m in maps))
    return SimplicialMap(S, P, images, check=False)


def product_map(maps: Sequence[SimplicialMap], source: SimplicialSet | None = None, target: SimplicialSet | None = None) -> SimplicialMap:
    source = source or product(*[m.source for m in maps])
    target = target or product(*[m.target for m in maps])
    images = {g: product_nf(target, tuple(m.apply(p) for m, p in zip(maps, parts))) for g, parts in source.meta["gen_tuple"].items() if g in source}
    return SimplicialMap(source, target, images, check=False)


# -- colimits --------------------------------------------------------------


def coproduct(parts: Sequence[SimplicialSet], prefixes: Sequence[str] | None = None):
    """Disjoint union with its injections; ids become ``'<prefix>:<id>'``."""
    prefixes = list(prefixes) if prefixes is not None else [str(k) for k in range(len(parts))]
    top = max((X.dim for X in parts), default=-1)
    gens = [[] for _ in range(top + 1)]
    faces = {}
    for X, pre in zip(parts, prefixes):
        ren = lambda g, pre=pre: f"{pre}:{g}"
        for n in range(X.dim + 1):
            gens[n].extend(ren(g) for g in X.generators(n))
        for g in X.all_generators():
            faces[ren(g)] = tuple((ren(t), w) for t, w in X.faces(g))
    bounds = [X.bound for X in parts if X.bound is not None]
    U = SimplicialSet(gens, faces, bound=min(bounds) if bounds else None, check=False)
    legs = [
        SimplicialMap(X, U, {g: U.gen_simplex(f"{pre}:{g}") for g in X.all_generators()}, check=False)
        for X, pre in zip(parts, prefixes)
    ]
    for leg in legs:
        leg.flags["mono"] = True
    return U, legs


def copower(X: SimplicialSet, labels: Sequence[str]):
    return coproduct([X] * len(labels), prefixes=list(labels))


def pushout(i: SimplicialMap, g: SimplicialMap, *, rename=None):
    """Pushout of a monomorphism ``i: X -> Y`` along ``g: X -> Z``.

    Returns ``(P, jY, jZ)``.  ``P`` lists the generators of ``Z`` followed by the
    generators of ``Y`` outside the image of ``i`` (ids kept unless they collide
    with ``Z``, then primed).  ``jZ`` carries a monomorphism certificate.
    """
    if i.source is not g.source and i.source != g.source:
        raise SimplicialError("pushout legs must share their domain")
    if not i.is_mono():
        raise NotAMonomorphism("pushout requires the first leg to be a monomorphism")
    Y, Z = i.target, g.target
    preimage = {t: x for x, (t, _) in i.images.items()}
    new = {}
    taken = set(Z.all_generators())
    for y in Y.all_generators():
        if y in preimage:
            continue
        nid = rename(y) if rename else y
        while nid in taken:
            nid = nid + "'"
        taken.add(nid)
        new[y] = nid

    def image(s):
        t, w = s
        if t in preimage:
            z, tau = g.images[preimage[t]]
            return (z, compose(tau, w))
        return (new[t], w)

    top = max(Y.dim, Z.dim)
    gens = [list(Z.generators(n)) for n in range(top + 1)]
    faces = {z: Z.faces(z) for z in Z.all_generators()}
    for n in range(Y.dim + 1):
        for y in Y.generators(n):
            if y in new:
                gens[n].append(new[y])
                if n > 0:
                    faces[new[y]] = tuple(image(f) for f in Y.faces(y))
    bounds = [b for b in (Y.bound, Z.bound) if b is not None]
    P = SimplicialSet(gens, faces, bound=min(bounds) if bounds else None, check=False)
    jZ = SimplicialMap(Z, P, {z: P.gen_simplex(z) for z in Z.all_generators()}, check=False)
    jZ.flags["mono"] = True
    jY = SimplicialMap(Y, P, {y: image(Y.gen_simplex(y)) for y in Y.all_generators()}, check=False)
    return P, jY, jZ


def seq_composite(chain: Sequence[SimplicialMap]):
    """Colimit of a finite chain of monomorphisms: the last object with composite legs."""
    if not chain:
        raise ValueError("empty chain")
    for k, f in enumerate(chain):
        if not f.is_mono():
            raise NotAMonomorphism(f"link {k} of the chain is not a monomorphism")
        if k and chain[k - 1].target != f.source:
            raise SimplicialError(f"links {k - 1} and {k} do not compose")
    top = chain[-1].target
    legs = [top.identity_map()]
    for f in reversed(chain):
        legs.insert(0, legs[0].compose(f))
    return top, legs


# -- skeleta ---------------------------------------------------------------


def skeleton(X: SimplicialSet, n: int):
    """``(sk_n X, inclusion)``."""
    gens = [list(X.generators(k)) for k in range(min(n, X.dim) + 1)] if n >= 0 else []
    faces = {g: X.faces(g) for level in gens for g in level}
    bound = X.bound if X.bound is not None and X.bound < n else None
    S = SimplicialSet(gens, faces, bound=bound, check=False)
    S.name = f"sk_{n}({X.name})" if X.name else None
    inc = SimplicialMap(S, X, {g: X.gen_simplex(g) for g in S.all_generators()}, check=False)
    inc.flags["mono"] = True
    return S, inc


def nondegenerate(X: SimplicialSet, n: int) -> list:
    return X.nondegenerate(n)


def opposite(X: SimplicialSet) -> SimplicialSet:
    """The opposite simplicial set (vertex order reversed)."""
    rev = lambda w: tuple(w[-1] - v for v in reversed(w))
    faces = {g: tuple((t, rev(w)) for t, w in reversed(fs)) for g, fs in X._faces.items()}
    Y = SimplicialSet([list(level) for level in X._gens], faces, bound=X.bound, check=False)
    Y.name = f"{X.name}^op" if X.name else None
    return Y


def opposite_simplex(s):
    g, w = s
    return (g, tuple(w[-1] - v for v in reversed(w)))
