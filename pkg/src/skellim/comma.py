"""Arrow objects, comma objects, cones and representable modules.

A comma ``f|g`` for ``f: B -> A`` and ``g: C -> A`` has as ``n``-simplices the
triples ``(c, b, alpha)`` with ``alpha: Delta^n x Delta^1 -> A`` restricting to
``f(b)`` at ``0`` and ``g(c)`` at ``1``.  It is built two ways: by direct
enumeration of such triples, and as the pullback of ``A^{Delta^1} -> A x A``
along ``g x f``.  The two are compared by an explicit isomorphism.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .certificates import LimitCertificate
from .config import default_bound
from .errors import NonCommutingSquare, SimplicialError, SkellimError
from .hom_spaces import (
    _Cylinders,
    constant_vertex,
    diagonal,
    evaluate,
    is_isofibration,
    is_kan,
    is_trivial_fibration,
    mapping_space,
    nerve_height,
)
from .homs import MapSearch
from .simplicial.constructions import (
    opposite,
    pairing,
    point,
    product,
    product_nf,
    std_simplex,
)
from .simplicial.limits import finite_limit, pullback
from .simplicial.nerve import chain_simplex, simplex_chain
from .simplicial.sset import SimplicialMap, SimplicialSet


@dataclass
class CommaObject:
    """``f|g`` with its legs.  ``p0`` goes to the domain of ``f``, ``p1`` to that of ``g``."""

    total: SimplicialSet
    f: SimplicialMap
    g: SimplicialMap
    p0: SimplicialMap
    p1: SimplicialMap
    meta: dict = field(default_factory=dict)

    @property
    def projection(self) -> SimplicialMap:
        """``(p1, p0): f|g -> C x B``."""
        if "projection" not in self.meta:
            CB = product(self.g.source, self.f.source)
            self.meta["projection"] = pairing([self.p1, self.p0], CB)
        return self.meta["projection"]

    @property
    def arrow(self) -> SimplicialSet:
        if "arrow" not in self.meta:
            self.meta["arrow"] = mapping_space(std_simplex(1), self.f.target, dim_bound=self.meta.get("dim_bound"))
        return self.meta["arrow"]

    @property
    def canonical(self) -> SimplicialMap:
        """The canonical map ``f|g -> A^{Delta^1}``."""
        if "canonical" not in self.meta:
            A2 = self.arrow
            images = {}
            for gid in self.total.all_generators():
                n, c, b, alpha = self.total.meta["gen_key"][gid]
                images[gid] = A2.key_nf((n, alpha))
            self.meta["canonical"] = SimplicialMap(self.total, A2, images, check=False)
        return self.meta["canonical"]

    def certify_projection(self, bound: int | None = None):
        return is_isofibration(self.projection, bound)


def _slice_fixes(P: SimplicialSet):
    """Generators of ``Delta^n x Delta^1`` inside ``Delta^n x {0}`` and ``Delta^n x {1}``."""
    out = {"0": [], "1": []}
    for q, (u, v) in P.meta["gen_tuple"].items():
        if v[0] in ("0", "1"):
            out[v[0]].append((q, tuple(int(t) for t in u[0].split(","))))
    return out


def comma(f: SimplicialMap, g: SimplicialMap, *, dim_bound: int | None = None) -> CommaObject:
    """``f|g`` by direct enumeration of boundary-constrained squares."""
    if f.target != g.target:
        raise SimplicialError("comma needs a shared codomain")
    A, B, C = f.target, f.source, g.source
    exact = all(Z.meta.get("nerve") and Z.bound is None for Z in (A, B, C))
    top = None if exact else (default_bound() if dim_bound is None else dim_bound)
    for Z, shift in ((A, 1), (B, 0), (C, 0)):
        if Z.bound is not None:
            cap = Z.bound - shift
            top = cap if top is None else min(top, cap)
    cyl = _Cylinders(std_simplex(1), A)
    def face(key, i):
        n, c, b, alpha = key
        return (n - 1, C.face(c, i), B.face(b, i), cyl.face_key((n, alpha), i)[1])

    def degen(key, j):
        n, c, b, alpha = key
        return (n + 1, C.degen(c, j), B.degen(b, j), cyl.degen_key((n, alpha), j)[1])

    levels: list = []
    n = 0
    while top is None or n <= top:
        P = cyl.P(n)
        fixes = _slice_fixes(P)
        slots = [q for q, _ in fixes["0"] + fixes["1"]]
        search = MapSearch(P, A, slots=slots) if not B.is_empty() and not C.is_empty() else None
        level = []
        for c in C.simplices(n):
            gc = g.apply(c)
            pinned_c = {q: A.act(gc, vs) for q, vs in fixes["1"]}
            for b in B.simplices(n):
                fb = f.apply(b)
                pinned = dict(pinned_c)
                pinned.update({q: A.act(fb, vs) for q, vs in fixes["0"]})
                for sol in search.refix(pinned).raw():
                    level.append((n, c, b, sol))
        levels.append(level)
        if top is None and n == 1:
            top = nerve_height(levels, face, lambda k: _is_degenerate(cyl, B, C, k))
        elif top is None and not level:
            break
        n += 1

    T = SimplicialSet.from_levels(levels, face, degen, key_dim=lambda k: k[0], bound=None if exact else len(levels) - 1)
    T.meta.update(comma_cyl=cyl, nerve=exact or all(Z.meta.get("nerve") for Z in (A, B, C)))
    p0 = SimplicialMap(T, B, {gid: T.meta["gen_key"][gid][2] for gid in T.all_generators()}, check=False)
    p1 = SimplicialMap(T, C, {gid: T.meta["gen_key"][gid][1] for gid in T.all_generators()}, check=False)
    return CommaObject(T, f, g, p0, p1, meta={"dim_bound": dim_bound, "cyl": cyl})


def _is_degenerate(cyl, B, C, key) -> bool:
    n, c, b, alpha = key
    for j in range(n):
        if C.degen(C.face(c, j), j) == c and B.degen(B.face(b, j), j) == b:
            if cyl.degen_key(cyl.face_key((n, alpha), j), j) == (n, alpha):
                return True
    return False


def comma_via_pullback(f: SimplicialMap, g: SimplicialMap, *, dim_bound: int | None = None):
    """``f|g`` as the pullback of ``(ev1, ev0): A^{Delta^1} -> A x A`` along ``g x f``.

    Returns ``(L, A2)``; ``L`` has factors ``(A2, C, B)``.
    """
    if f.target != g.target:
        raise SimplicialError("comma needs a shared codomain")
    A2 = mapping_space(std_simplex(1), f.target, dim_bound=dim_bound)
    L = finite_limit([A2, g.source, f.source], [(0, evaluate(A2, "1"), 1, g), (0, evaluate(A2, "0"), 2, f)])
    return L, A2


def compare_routes(K: CommaObject, L: SimplicialSet, A2: SimplicialSet) -> SimplicialMap:
    """The comparison from the enumerated comma to the pullback one; raises unless it is an isomorphism."""
    images = {}
    for gid in K.total.all_generators():
        n, c, b, alpha = K.total.meta["gen_key"][gid]
        images[gid] = product_nf(L, (A2.key_nf((n, alpha)), c, b))
    m = SimplicialMap(K.total, L, images)
    if not m.is_iso():
        raise SkellimError("the two comma constructions disagree")
    return m


def arrow_object(A: SimplicialSet, *, dim_bound: int | None = None) -> CommaObject:
    """``A^{Delta^1}`` with ``(p1, p0)``, realised as ``comma(id, id)``."""
    return comma(A.identity_map(), A.identity_map(), dim_bound=dim_bound)


def comma_map(source: CommaObject, target: CommaObject, c: SimplicialMap, a: SimplicialMap, b: SimplicialMap) -> SimplicialMap:
    """The map ``f|g -> f'|g'`` induced by a strictly commuting transformation ``(c, a, b)``."""
    f, g, f2, g2 = source.f, source.g, target.f, target.g
    if a.compose(f) != f2.compose(b) or a.compose(g) != g2.compose(c):
        raise NonCommutingSquare("transformation squares do not commute")
    cyl_s, cyl_t = source.meta["cyl"], target.meta["cyl"]
    T, T2 = source.total, target.total
    images = {}
    for gid in T.all_generators():
        n, cs, bs, alpha = T.meta["gen_key"][gid]
        amap = a.compose(cyl_s.to_map((n, alpha)))
        _, alpha2 = cyl_t.from_map(n, amap)
        images[gid] = T2.key_nf((n, c.apply(cs), b.apply(bs), alpha2))
    m = SimplicialMap(T, T2, images, check=False)
    if a.is_mono() and b.is_mono() and c.is_mono():
        m.flags["mono"] = m.is_mono()
    return m


# -- cones and representables ------------------------------------------------------


def cones_over(A: SimplicialSet, X: SimplicialSet, d: SimplicialMap, *, dim_bound: int | None = None) -> CommaObject:
    """``Delta|d``: cones over ``d: X -> A``, built as ``comma(Delta: A -> A^X, d: 1 -> A^X)``."""
    AX = mapping_space(X, A, dim_bound=dim_bound)
    pt = point()
    dv = SimplicialMap(pt, AX, {"0": constant_vertex(AX, d)}, check=False)
    K = comma(diagonal(A, AX), dv, dim_bound=dim_bound)
    K.meta.update(cotensor=AX, diagram=d, apex_side="over")
    return K


def cones_under(A: SimplicialSet, X: SimplicialSet, d: SimplicialMap, *, dim_bound: int | None = None) -> CommaObject:
    """``d|Delta``: cones under ``d``."""
    AX = mapping_space(X, A, dim_bound=dim_bound)
    pt = point()
    dv = SimplicialMap(pt, AX, {"0": constant_vertex(AX, d)}, check=False)
    K = comma(dv, diagonal(A, AX), dim_bound=dim_bound)
    K.meta.update(cotensor=AX, diagram=d, apex_side="under")
    return K


def vertex_point(A: SimplicialSet, a: str) -> SimplicialMap:
    if a not in A or A.dim_of(a) != 0:
        raise SimplicialError(f"{a!r} is not a vertex")
    return SimplicialMap(point(), A, {"0": A.gen_simplex(a)}, check=False)


def representable_module(A: SimplicialSet, a: str, *, certify_bound: int | None = None, dim_bound: int | None = None) -> CommaObject:
    """``A|a`` with ``p0: A|a -> A``; with ``certify_bound`` every fibre is tested for Kan filling."""
    K = comma(A.identity_map(), vertex_point(A, a), dim_bound=dim_bound)
    if certify_bound is not None:
        certs = {}
        for x in A.generators(0):
            F, _, _ = pullback(K.p0, vertex_point(A, x))
            certs[x] = is_kan(F, certify_bound)
        K.meta["fibre_certificates"] = certs
    return K


def corepresentable_module(A: SimplicialSet, a: str, **kw) -> CommaObject:
    """``a|A`` computed as ``A^op|a`` in the opposite simplicial set."""
    Aop = opposite(A)
    Aop.meta["nerve"] = A.meta.get("nerve", False)
    return representable_module(Aop, a, **kw)


# -- limit cones ---------------------------------------------------------------------


def _mor(A: SimplicialSet, e) -> str:
    """Morphism of ``C`` named by a 1-simplex of ``A = N(C)``."""
    start, chain = simplex_chain(A, e)
    return chain[0]


def _nerve_map(Y: SimplicialSet, A: SimplicialSet, obj, mor) -> SimplicialMap:
    """The map ``Y -> N(C)`` of a functor given on vertices and non-degenerate edges of ``Y``."""
    C = A.meta["category"]
    images = {}
    for y in Y.all_generators():
        s = Y.gen_simplex(y)
        n = Y.dim_of(y)
        vs = Y.vertices(s)
        chain = []
        for j in range(n):
            e = Y.act(s, (j, j + 1))
            chain.append(C.identity(obj(vs[j])) if Y.is_degenerate(e) else mor(e[0]))
        images[y] = chain_simplex(A, obj(vs[0]), chain)
    return SimplicialMap(Y, A, images, check=False)


def limit_comparison(K_rep: CommaObject, K_cone: CommaObject, cone_vertex) -> SimplicialMap:
    """``A|l -> Delta|d`` over ``A`` for a nerve ``A``, by post-composition with a cone vertex.

    Built from functor formulas: an ``n``-simplex ``(sigma, alpha)`` of ``A|l``
    goes to the square whose component at ``(i, x)`` is ``lambda_x o alpha_i``.
    """
    A = K_rep.f.target
    C = A.meta["category"]
    AX = K_cone.meta["cotensor"]
    X = AX.meta["cotensor"][0]
    d = K_cone.meta["diagram"]
    cyl_rep, cyl_cone = K_rep.meta["cyl"], K_cone.meta["cyl"]
    cyl_AX = AX.meta["cyl"]
    lam = {x: _leg(K_cone, cone_vertex, x) for x in X.generators(0)}

    def d_obj(x):
        return d.apply((x, (0,)))[0]

    def d_mor(e):
        im = d.apply(e)
        return None if A.is_degenerate(im) else _mor(A, im)

    images = {}
    T, T2 = K_rep.total, K_cone.total
    for gid in T.all_generators():
        n, c, sigma, alpha = T.meta["gen_key"][gid]
        amap = cyl_rep.to_map((n, alpha))
        Pn = cyl_rep.P(n)
        sig_objs = [A.act(sigma, (i,))[0] for i in range(n + 1)]

        def smor(i, k):
            if i == k:
                return C.identity(sig_objs[i])
            e = A.act(sigma, (i, k))
            return C.identity(sig_objs[i]) if A.is_degenerate(e) else _mor(A, e)

        def alpha_i(i):
            q = next(q for q, (u, v) in Pn.meta["gen_tuple"].items() if u == (str(i), (0, 0)) and v[0] == "0,1")
            e = amap.images[q]
            return C.identity(sig_objs[i]) if A.is_degenerate(e) else _mor(A, e)

        alphas = [alpha_i(i) for i in range(n + 1)]

        def big_obj(i, eps, x):
            return sig_objs[i] if eps == 0 else d_obj(x)

        def big_mor(src, tgt, ex):
            (i, e0, x), (k, e1, x2) = src, tgt
            if e0 == e1 == 0:
                return smor(i, k)
            if e0 == e1 == 1:
                m = d_mor(ex)
                return C.identity(d_obj(x)) if m is None else m
            return C.comp(lam[x2], C.comp(alphas[k], smor(i, k)))

        # beta: Delta^n x Delta^1 -> A^X, one A^X simplex per generator of Pn
        beta = []
        for q in Pn.all_generators():
            u, v = Pn.meta["gen_tuple"][q]
            k = len(u[1]) - 1
            U = [int(t) for t in u[0].split(",")]
            U = [U[j] for j in u[1]]
            V = [0 if v[0] == "0" else (1 if v[0] == "1" else v[1][j]) for j in range(k + 1)]
            Q = cyl_AX.P(k)

            def obj(vid, U=U, V=V):
                t, xs = Q.meta["gen_tuple"][vid]
                j = int(t[0])
                return big_obj(U[j], V[j], xs[0])

            def mor(eid, U=U, V=V):
                t, xs = Q.meta["gen_tuple"][eid]
                tv = [int(z) for z in t[0].split(",")]
                tv = [tv[z] for z in t[1]]
                xv = X.vertices(xs)
                return big_mor((U[tv[0]], V[tv[0]], xv[0]), (U[tv[1]], V[tv[1]], xv[1]), xs)

            fmap = _nerve_map(Q, A, obj, mor)
            beta_s = AX.key_nf(cyl_AX.from_map(k, fmap))
            beta.append(beta_s)
        idx = cyl_cone.table(n + 1).index
        key = (n, ("0", (0,) * (n + 1)), sigma, tuple(idx[s] for s in beta))
        images[gid] = T2.key_nf(key)
    return SimplicialMap(T, T2, images, check=False)


def is_limit_cone(A: SimplicialSet, X: SimplicialSet, d: SimplicialMap, apex: str, cone_vertex=None, bound: int | None = None,
                  *, cones: CommaObject | None = None) -> LimitCertificate:
    """Certify that a cone with summit ``apex`` is a limit of ``d: X -> A``.

    The comparison ``A|apex -> Delta|d`` is built (nerves only) and tested for
    the trivial-fibration lifting property; the verdict is exact for nerves.
    ``cone_vertex`` is a vertex of ``Delta|d`` over ``apex``; if omitted the
    unique one is used (an error is raised when it is not unique).
    """
    if not A.meta.get("nerve") or "category" not in A.meta:
        raise SkellimError("limit comparison is implemented for nerves of categories")
    K = cones if cones is not None else cones_over(A, X, d)
    if cone_vertex is None:
        over = [v for v in K.total.generators(0) if K.p0.images[v][0] == apex]
        if len(over) != 1:
            raise SkellimError(f"{len(over)} cones with summit {apex!r}; pass cone_vertex")
        cone_vertex = over[0]
    if K.p0.images[cone_vertex][0] != apex:
        raise SkellimError("cone vertex does not sit over the apex")
    R = representable_module(A, apex)
    cmp = limit_comparison(R, K, cone_vertex)
    cmp.validate()
    if K.p0.compose(cmp) != R.p0:
        raise SkellimError("comparison does not lie over A")
    cert = is_trivial_fibration(cmp, bound)
    legs = {}
    for x in X.generators(0):
        legs[x] = _leg(K, cone_vertex, x)
    return LimitCertificate(apex, legs, "comma", {"trivial_fibration": cert}, verdict=cert.verdict, exact=cert.exact)


def _leg(K: CommaObject, cone_vertex: str, x: str) -> str:
    """The component at ``x`` of a cone given as a vertex of ``Delta|d``."""
    AX = K.meta["cotensor"]
    A = K.f.source
    _, _, l_simplex, beta0 = K.total.meta["gen_key"][cone_vertex]
    beta_map = K.meta["cyl"].to_map((0, beta0))
    P0 = K.meta["cyl"].P(0)
    edge = next(q for q, (u, v) in P0.meta["gen_tuple"].items() if v[0] == "0,1")
    s = beta_map.images[edge]
    C = A.meta["category"]
    if s[1] != (0, 1):
        return C.identity(l_simplex[0])
    lam_map = AX.meta["cyl"].to_map(AX.meta["gen_key"][s[0]])
    Q = AX.meta["cyl"].P(1)
    q = next(q for q, (u, v) in Q.meta["gen_tuple"].items() if u[0] == "0,1" and v == (x, (0, 0)))
    e = lam_map.images[q]
    return C.identity(l_simplex[0]) if A.is_degenerate(e) else _mor(A, e)
