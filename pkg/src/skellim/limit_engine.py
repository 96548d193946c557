"""Limits of simplicial-set-shaped diagrams in finite categories.

The induction builds the limit of ``d: X -> C`` skeleton by skeleton: the
vertices contribute a product, and each dimension ``n`` is a pullback of
``lim(coprod Delta^n) -> lim(coprod boundary) <- lim(sk_{n-1} X)``.  A
brute-force terminal-cone search serves as the independent oracle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .category import FiniteCategory
from .certificates import LimitCertificate
from .comma import comma_map, cones_over
from .errors import ArityExceeded, BoundExceeded, MissingLimit, SimplicialError, SkellimError
from .hom_spaces import cotensor_map
from .simplicial.constructions import boundary, opposite, product_nf, std_simplex
from .simplicial.iso import is_isomorphic
from .simplicial.limits import finite_limit
from .simplicial.nerve import chain_simplex, simplex_chain
from .simplicial.sset import SimplicialMap, SimplicialSet


# -- fundamental category ----------------------------------------------------------


@dataclass
class FundamentalCategoryPresentation:
    """Generators and relations for the fundamental category of ``X``.

    Paths are tuples of edge generators in composition order (first arrow
    first); the empty path is an identity.  ``identity_edges`` lists the
    degenerate 1-simplices (by their vertex) for reference.
    """

    objects: tuple
    generators: dict
    relations: tuple
    identity_edges: dict = field(default_factory=dict)

    def __post_init__(self):
        for a, b in self.relations:
            for g in a + b:
                if g not in self.generators:
                    raise SkellimError(f"relation mentions unknown generator {g!r}")

    def path_ends(self, path, start=None):
        if not path:
            return (start, start)
        for f, g in zip(path, path[1:]):
            if self.generators[f][1] != self.generators[g][0]:
                raise SkellimError(f"path {path!r} is not composable")
        return (self.generators[path[0]][0], self.generators[path[-1]][1])

    def materialize(self, max_len: int | None = None, name: str | None = None) -> FiniteCategory:
        """The presented category, when its paths are finite (or cut at ``max_len``).

        Morphisms are congruence classes of paths, named by their least
        representative (shortest, then lexicographic).
        """
        if max_len is None:
            if _graph_has_cycle(self.objects, self.generators):
                raise BoundExceeded("the generating graph has a cycle; pass max_len")
            max_len = len(self.generators)
        out = {o: [] for o in self.objects}
        for g, (s, t) in self.generators.items():
            out[s].append((g, t))
        paths: dict = {}
        for o in self.objects:
            stack = [((), o)]
            while stack:
                p, v = stack.pop()
                paths[(o, p)] = (o, v)
                if len(p) < max_len:
                    stack.extend((p + (g,), t) for g, t in out[v])
        parent = {k: k for k in paths}

        def find(k):
            while parent[k] != k:
                parent[k] = parent[parent[k]]
                k = parent[k]
            return k

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                lo, hi = sorted((ra, rb), key=_path_order)
                parent[hi] = lo

        rel = [(a, b) for a, b in self.relations] + [(b, a) for a, b in self.relations]
        changed = True
        while changed:
            changed = False
            for (o, p) in list(paths):
                for a, b in rel:
                    k = len(a)
                    for i in range(len(p) - k + 1):
                        if p[i : i + k] == a:
                            q = p[:i] + b + p[i + k :]
                            if (o, q) in paths and find((o, p)) != find((o, q)):
                                union((o, p), (o, q))
                                changed = True
        classes: dict = {}
        for k in paths:
            classes.setdefault(find(k), []).append(k)
        names = {r: _path_name(*r) for r in classes}
        morphisms = {names[r]: paths[r] for r in classes}
        identities = {o: names[find((o, ()))] for o in self.objects}
        table = {}
        for r1 in classes:
            for r2 in classes:
                (o1, p1), (o2, p2) = r1, r2
                if paths[r1][1] != o2:
                    continue
                key = (o1, p1 + p2)
                if key not in paths:
                    raise BoundExceeded("composite longer than max_len")
                table[(names[r2], names[r1])] = names[find(key)]
        return FiniteCategory(self.objects, morphisms, identities, table, name=name)


def _path_order(k):
    o, p = k
    return (len(p), p)


def _path_name(o, p) -> str:
    return f"id_{o}" if not p else ".".join(p)


def _graph_has_cycle(objects, generators) -> bool:
    out: dict = {}
    for s, t in generators.values():
        out.setdefault(s, []).append(t)
    state: dict = {}

    def visit(v):
        state[v] = 1
        for w in out.get(v, ()):
            if state.get(w) == 1 or (w not in state and visit(w)):
                return True
        state[v] = 2
        return False

    return any(v not in state and visit(v) for v in objects)


def tau1(X: SimplicialSet) -> FundamentalCategoryPresentation:
    """Vertices, non-degenerate edges, and one relation per non-degenerate 2-simplex."""
    gens = {}
    for e in X.generators(1):
        (t, _), (s, _) = X.faces(e)
        gens[e] = (s, t)
    rels = []

    def as_path(f):
        return () if X.is_degenerate(f) else (f[0],)

    for g in X.generators(2):
        f0, f1, f2 = X.faces(g)
        rels.append((as_path(f2) + as_path(f0), as_path(f1)))
    ids = {v: v for v in X.generators(0)}
    return FundamentalCategoryPresentation(tuple(X.generators(0)), gens, tuple(rels), ids)


def homotopy_category(X: SimplicialSet, **kw) -> FiniteCategory:
    """The fundamental category of ``X`` (finite paths required; see :meth:`materialize`)."""
    return tau1(X).materialize(**kw)


def quasicategory_homotopy_category(X: SimplicialSet) -> tuple:
    """Homotopy category of a quasi-category from its 2-simplices.

    Morphisms are edges up to homotopy; a 2-simplex with faces ``(g, h, f)``
    records ``g o f = h``.  Returns ``(category, edge_class)`` where
    ``edge_class`` maps every 1-simplex to its morphism name.  Raises
    when the composition read off the 2-simplices is not well defined, which
    happens only if ``X`` is not a quasi-category.
    """
    edges = X.simplices(1)
    label = {e: f"{e[0]}{'' if e[1] == (0, 1) else '~id'}" for e in edges}
    parent = {e: e for e in edges}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    tris = X.simplices(2)
    for t in tris:
        f0, f1, f2 = (X.face(t, i) for i in range(3))
        if X.is_degenerate(f0):
            a, b = find(f2), find(f1)
        elif X.is_degenerate(f2):
            a, b = find(f0), find(f1)
        else:
            continue
        if a != b:
            lo, hi = sorted((a, b), key=lambda e: (not X.is_degenerate(e), label[e]))
            parent[hi] = lo
    reps = sorted({find(e) for e in edges}, key=lambda e: label[e])
    name = {r: (f"id_{X.vertices(r)[0]}" if X.is_degenerate(r) else label[r]) for r in reps}
    cls = {e: name[find(e)] for e in edges}
    morphisms = {name[r]: (X.vertices(r)[0], X.vertices(r)[1]) for r in reps}
    identities = {v: cls[X.degen(X.gen_simplex(v), 0)] for v in X.generators(0)}
    table: dict = {}
    for t in tris:
        f0, f1, f2 = (cls[X.face(t, i)] for i in range(3))
        old = table.setdefault((f0, f2), f1)
        if old != f1:
            raise SkellimError("composition is not well defined; not a quasi-category")
    for g, (s1, t1) in morphisms.items():
        for f, (s0, t0) in morphisms.items():
            if t0 == s1 and (g, f) not in table:
                raise SkellimError("missing composite; not a quasi-category")
    return FiniteCategory(tuple(X.generators(0)), morphisms, identities, table, check=False), cls


def is_equivalence_of_homotopy_categories(f: SimplicialMap) -> dict:
    """Whether ``f`` induces an equivalence of homotopy categories (source, target quasi-categories)."""
    HA, ca = quasicategory_homotopy_category(f.source)
    HB, cb = quasicategory_homotopy_category(f.target)
    A = f.source
    fmor = {}
    for e in A.simplices(1):
        fmor.setdefault(ca[e], set()).add(cb[f.apply(e)])
    if any(len(v) != 1 for v in fmor.values()):
        return {"verdict": "no", "reason": "not well defined on homotopy classes"}
    fmor = {k: next(iter(v)) for k, v in fmor.items()}
    fobj = {a: f.images[a][0] for a in A.generators(0)}
    for a in HA.objects:
        for b in HA.objects:
            src = sorted(fmor[m] for m in HA.hom(a, b))
            if len(set(src)) != len(src) or sorted(HB.hom(fobj[a], fobj[b])) != src:
                return {"verdict": "no", "reason": f"not fully faithful at ({a}, {b})"}
    image = set(fobj.values())
    for y in HB.objects:
        if not any(_invertible(HB, m) for x in image for m in HB.hom(x, y)):
            return {"verdict": "no", "reason": f"object {y} not essentially in the image"}
    return {"verdict": "yes", "objects": [len(HA.objects), len(HB.objects)], "morphisms": [len(HA.morphisms), len(HB.morphisms)]}


def _invertible(C: FiniteCategory, m: str) -> bool:
    s, t = C.morphisms[m]
    return any(C.comp(g, m) == C.identity(s) and C.comp(m, g) == C.identity(t) for g in C.hom(t, s))


# -- diagrams and cones ------------------------------------------------------------------


@dataclass
class DiagramInCat:
    """``d: X -> C`` given on vertices and non-degenerate edges of ``X``."""

    X: SimplicialSet
    C: FiniteCategory
    obj: dict
    mor: dict

    def __post_init__(self):
        for v in self.X.generators(0):
            if self.obj.get(v) not in self.C.objects:
                raise SkellimError(f"vertex {v!r} has no object")
        for e in self.X.generators(1):
            (t, _), (s, _) = self.X.faces(e)
            m = self.mor.get(e)
            if m is None or self.C.morphisms.get(m) != (self.obj[s], self.obj[t]):
                raise SkellimError(f"edge {e!r} is not sent to a morphism {self.obj[s]} -> {self.obj[t]}")
        for g in self.X.generators(2):
            f0, f1, f2 = self.X.faces(g)
            if self.C.comp(self.edge(f0), self.edge(f2)) != self.edge(f1):
                raise SkellimError(f"2-simplex {g!r} does not commute")

    @property
    def shape(self) -> FundamentalCategoryPresentation:
        return tau1(self.X)

    def edge(self, s) -> str:
        """Morphism assigned to any 1-simplex of ``X``."""
        if self.X.is_degenerate(s):
            return self.C.identity(self.obj[s[0]])
        return self.mor[s[0]]

    def restrict(self, f: SimplicialMap) -> "DiagramInCat":
        """``d o f`` for ``f: Y -> X``."""
        Y = f.source
        obj = {v: self.obj[f.images[v][0]] for v in Y.generators(0)}
        mor = {e: self.edge(f.images[e]) for e in Y.generators(1)}
        return DiagramInCat(Y, self.C, obj, mor)

    def opposite(self) -> "DiagramInCat":
        return DiagramInCat(opposite(self.X), self.C.opposite(), dict(self.obj), dict(self.mor))

    def to_map(self, A: SimplicialSet) -> SimplicialMap:
        """The simplicial map ``X -> N(C)`` (``A = nerve(C)``)."""
        X = self.X
        images = {}
        for g in X.all_generators():
            s = X.gen_simplex(g)
            vs = X.vertices(s)
            chain = [self.edge(X.act(s, (j, j + 1))) for j in range(X.dim_of(g))]
            images[g] = chain_simplex(A, self.obj[vs[0]], chain)
        return SimplicialMap(X, A, images, check=False)

    @classmethod
    def from_map(cls, d: SimplicialMap) -> "DiagramInCat":
        """Read ``d: X -> N(C)`` as a diagram."""
        A = d.target
        C = A.meta["category"]
        X = d.source
        obj = {v: d.images[v][0] for v in X.generators(0)}
        mor = {}
        for e in X.generators(1):
            start, chain = simplex_chain(A, d.apply(X.gen_simplex(e)))
            mor[e] = chain[0]
        return cls(X, C, obj, mor)


@dataclass
class Cone:
    apex: str
    legs: dict

    def commutes(self, d: DiagramInCat) -> bool:
        C = d.C
        for v, m in self.legs.items():
            if C.morphisms[m] != (self.apex, d.obj[v]):
                return False
        for e in d.X.generators(1):
            (t, _), (s, _) = d.X.faces(e)
            if C.comp(d.mor[e], self.legs[s]) != self.legs[t]:
                return False
        return True

    def restrict(self, f: SimplicialMap) -> "Cone":
        return Cone(self.apex, {v: self.legs[f.images[v][0]] for v in f.source.generators(0)})

    def precompose(self, C: FiniteCategory, u: str) -> "Cone":
        return Cone(C.src(u), {v: C.comp(m, u) for v, m in self.legs.items()})


def all_cones(d: DiagramInCat, apex: str | None = None) -> list:
    """Every cone over ``d`` (with the given apex, or all apexes in object order)."""
    C, X = d.C, d.X
    verts = list(X.generators(0))
    edges_at: dict = {}
    for e in X.generators(1):
        (t, _), (s, _) = X.faces(e)
        k = max(verts.index(s), verts.index(t))
        edges_at.setdefault(k, []).append((e, s, t))
    out = []
    for a in ([apex] if apex is not None else C.objects):
        legs: dict = {}

        def place(k):
            if k == len(verts):
                out.append(Cone(a, dict(legs)))
                return
            v = verts[k]
            for m in C.hom(a, d.obj[v]):
                legs[v] = m
                if all(C.comp(d.mor[e], legs[s]) == legs[t] for e, s, t in edges_at.get(k, ())):
                    place(k + 1)
            legs.pop(v, None)

        place(0)
    return out


def factorizations(C: FiniteCategory, cone: Cone, target: Cone) -> list:
    """Morphisms ``u: cone.apex -> target.apex`` with ``target.legs[v] o u == cone.legs[v]``."""
    return [u for u in C.hom(cone.apex, target.apex) if all(C.comp(target.legs[v], u) == m for v, m in cone.legs.items())]


def brute_force_limit(C: FiniteCategory, d: DiagramInCat) -> LimitCertificate | None:
    """Exhaustive terminal-cone search; the least terminal apex in object order wins."""
    cones = all_cones(d)
    for lam in cones:
        table = {}
        for k, mu in enumerate(cones):
            us = factorizations(C, mu, lam)
            if len(us) != 1:
                break
            table[k] = us[0]
        else:
            ev = {"factorizations": [[mu.apex, dict(mu.legs), table[k]] for k, mu in enumerate(cones)]}
            return LimitCertificate(lam.apex, dict(lam.legs), "brute-force", ev)
    return None


def replay_brute_force(C: FiniteCategory, d: DiagramInCat, cert: LimitCertificate) -> bool:
    lam = Cone(cert.apex, cert.legs)
    if not lam.commutes(d):
        return False
    cones = all_cones(d)
    if len(cones) != len(cert.evidence["factorizations"]):
        return False
    return all(len(factorizations(C, mu, lam)) == 1 for mu in cones)


def brute_force_colimit(C: FiniteCategory, d: DiagramInCat) -> LimitCertificate | None:
    cert = brute_force_limit(C.opposite(), d.opposite())
    if cert is not None:
        cert.mode = "brute-force"
        cert.evidence["dual"] = True
    return cert


# -- the category-side operations used by the induction -------------------------------


class _Ops:
    """Products, pullbacks and factorizations in ``C`` with poset fast paths."""

    def __init__(self, C: FiniteCategory, kappa: int | None):
        self.C = C
        self.kappa = kappa
        self.poset = C.is_poset()
        self.trace: list = []

    def _arrow(self, a, b):
        hs = self.C.hom(a, b)
        return hs[0] if hs else None

    def _meet(self, objs, stage):
        C = self.C
        lower = [c for c in C.objects if all(self._arrow(c, o) for o in objs)]
        best = [c for c in lower if all(self._arrow(x, c) for x in lower)]
        if not best:
            raise MissingLimit(f"no meet of {list(objs)!r}", stage)
        return best[0]

    def product(self, objs: Sequence[str], stage: str) -> Cone:
        """Product cone over the discrete family ``objs`` (legs keyed by position)."""
        if self.kappa is not None and len(objs) >= self.kappa:
            raise ArityExceeded(f"product of arity {len(objs)} is not below kappa={self.kappa}", stage)
        if self.poset:
            a = self._meet(objs, stage)
            cone = Cone(a, {str(k): self._arrow(a, o) for k, o in enumerate(objs)})
        else:
            X = SimplicialSet([[str(k) for k in range(len(objs))]], {}, check=False)
            d = DiagramInCat(X, self.C, {str(k): o for k, o in enumerate(objs)}, {})
            cert = brute_force_limit(self.C, d)
            if cert is None:
                raise MissingLimit(f"no product of {list(objs)!r}", stage)
            cone = Cone(cert.apex, cert.legs)
        self.trace.append({"stage": stage, "kind": "product", "arity": len(objs), "factors": list(objs), "apex": cone.apex})
        return cone

    def pullback(self, f: str, g: str, stage: str) -> Cone:
        """Pullback of ``f: a -> c <- b: g`` with legs ``'0'`` (to a) and ``'1'`` (to b)."""
        C = self.C
        if C.tgt(f) != C.tgt(g):
            raise SkellimError("pullback of non-cospan")
        if self.poset:
            a = self._meet([C.src(f), C.src(g)], stage)
            cone = Cone(a, {"0": self._arrow(a, C.src(f)), "1": self._arrow(a, C.src(g))})
        else:
            X = SimplicialSet([["0", "1", "2"], ["f", "g"]], {"f": (("2", (0,)), ("0", (0,))), "g": (("2", (0,)), ("1", (0,)))}, check=False)
            d = DiagramInCat(X, C, {"0": C.src(f), "1": C.src(g), "2": C.tgt(f)}, {"f": f, "g": g})
            cert = brute_force_limit(C, d)
            if cert is None:
                raise MissingLimit(f"no pullback of {f!r}, {g!r}", stage)
            cone = Cone(cert.apex, {"0": cert.legs["0"], "1": cert.legs["1"]})
        self.trace.append({"stage": stage, "kind": "pullback", "cospan": [f, g], "apex": cone.apex})
        return cone

    def factor(self, cone: Cone, limit: Cone, stage: str) -> str:
        us = factorizations(self.C, cone, limit)
        if len(us) != 1:
            raise MissingLimit(f"cone does not factor uniquely ({len(us)} factorizations)", stage)
        return us[0]


# -- the induction ---------------------------------------------------------------------------


def limit_over_simplex(C: FiniteCategory, d: DiagramInCat) -> LimitCertificate:
    """Limit over a standard simplex: evaluate at vertex ``0`` with the chain composites as legs."""
    X = d.X
    if X.dim < 0 or len(X.generators(X.dim)) != 1 or len(X.generators(0)) != X.dim + 1:
        raise SimplicialError("shape is not a standard simplex")
    top = X.gen_simplex(X.generators(X.dim)[0])
    vs = X.vertices(top)
    legs = {vs[0]: C.identity(d.obj[vs[0]])}
    for k in range(1, len(vs)):
        legs[vs[k]] = d.edge(X.act(top, (0, k)))
    return LimitCertificate(d.obj[vs[0]], legs, "simplex", {"initial_vertex": vs[0]})


def _simplex_shape(X: SimplicialSet, g: str) -> tuple:
    """``Delta^n -> X`` for the generator ``g`` and its restriction to the boundary."""
    n = X.dim_of(g)
    D = std_simplex(n)
    top = X.gen_simplex(g)
    char = SimplicialMap(D, X, {h: X.act(top, tuple(int(v) for v in h.split(","))) for h in D.all_generators()}, check=False)
    B = boundary(n)
    bmap = SimplicialMap(B, X, {h: char.images[h] for h in B.all_generators()}, check=False)
    return D, char, B, bmap


def limit_by_skeletal_induction(C: FiniteCategory, X: SimplicialSet | DiagramInCat, d: DiagramInCat | None = None,
                                kappa: int | None = None) -> LimitCertificate:
    """Limit of ``d`` built from products and pullbacks, one skeleton at a time."""
    if d is None:
        d = X
    ops = _Ops(C, kappa)
    cone = _induct(ops, d, "X")
    return LimitCertificate(cone.apex, dict(cone.legs), "induction", {"trace": ops.trace, "kappa": kappa})


def _induct(ops: _Ops, d: DiagramInCat, where: str) -> Cone:
    C, X = ops.C, d.X
    verts = list(X.generators(0))
    base = ops.product([d.obj[v] for v in verts], f"{where}/sk0")
    cone = Cone(base.apex, {v: base.legs[str(k)] for k, v in enumerate(verts)})
    for n in range(1, X.dim + 1):
        cells = list(X.generators(n))
        if not cells:
            continue
        stage = f"{where}/sk{n}"
        # limits over each simplex and each boundary, and the restriction maps between them
        simplex_cones, boundary_cones, to_boundary, from_skeleton = [], [], [], []
        for k, g in enumerate(cells):
            D, char, B, bmap = _simplex_shape(X, g)
            dD = d.restrict(char)
            lD = limit_over_simplex(C, dD)
            lD_cone = Cone(lD.apex, lD.legs)
            dB = d.restrict(bmap)
            lB = _induct(ops, dB, f"{stage}/bd[{g}]")
            boundary_cones.append(lB)
            simplex_cones.append(lD_cone)
            inc = SimplicialMap(B, D, {h: D.gen_simplex(h) for h in B.all_generators()}, check=False)
            to_boundary.append(ops.factor(lD_cone.restrict(inc), lB, stage))
            from_skeleton.append(ops.factor(cone.restrict(bmap), lB, stage))
        pD = ops.product([c.apex for c in simplex_cones], f"{stage}/cells")
        pB = ops.product([c.apex for c in boundary_cones], f"{stage}/boundaries")
        # the two maps into the product of boundary limits
        top_map = ops.factor(Cone(pD.apex, {str(k): C.comp(to_boundary[k], pD.legs[str(k)]) for k in range(len(cells))}), pB, stage)
        side_map = ops.factor(Cone(cone.apex, {str(k): from_skeleton[k] for k in range(len(cells))}), pB, stage)
        pb = ops.pullback(top_map, side_map, stage)
        # every vertex lies in the (n-1)-skeleton, so legs come through the second projection
        cone = Cone(pb.apex, {v: C.comp(m, pb.legs["1"]) for v, m in cone.legs.items()})
    return cone


def cone_isomorphism(C: FiniteCategory, a: LimitCertificate, b: LimitCertificate) -> str | None:
    """The unique cone-compatible isomorphism ``a.apex -> b.apex``, if both are limits of one diagram."""
    la, lb = Cone(a.apex, a.legs), Cone(b.apex, b.legs)
    fs, gs = factorizations(C, la, lb), factorizations(C, lb, la)
    if len(fs) != 1 or len(gs) != 1:
        return None
    f, g = fs[0], gs[0]
    if C.comp(g, f) != C.identity(a.apex) or C.comp(f, g) != C.identity(b.apex):
        return None
    return f


def glue_limits_pushout(C: FiniteCategory, i: SimplicialMap, g: SimplicialMap, jY: SimplicialMap, jZ: SimplicialMap,
                        d: DiagramInCat, lX: LimitCertificate, lY: LimitCertificate, lZ: LimitCertificate) -> LimitCertificate:
    """Limit over ``P = Y +_X Z`` from limits over ``X``, ``Y`` and ``Z``.

    ``i: X -> Y``, ``g: X -> Z`` present the pushout with legs ``jY``, ``jZ``
    into ``P = d.X``.  The induced cospan ``lY -> lX <- lZ`` is pulled back.
    """
    ops = _Ops(C, None)
    cX, cY, cZ = (Cone(c.apex, c.legs) for c in (lX, lY, lZ))
    u = ops.factor(cY.restrict(i), cX, "pushout")
    v = ops.factor(cZ.restrict(g), cX, "pushout")
    pb = ops.pullback(u, v, "pushout")
    legs = {}
    inv_Y = {jY.images[y][0]: y for y in jY.source.generators(0)}
    inv_Z = {jZ.images[z][0]: z for z in jZ.source.generators(0)}
    for p in d.X.generators(0):
        if p in inv_Y:
            legs[p] = C.comp(cY.legs[inv_Y[p]], pb.legs["0"])
        else:
            legs[p] = C.comp(cZ.legs[inv_Z[p]], pb.legs["1"])
    cone = Cone(pb.apex, legs)
    if not cone.commutes(d):
        raise SkellimError("glued cone does not commute")
    return LimitCertificate(pb.apex, legs, "pushout", {"trace": ops.trace, "cospan": [u, v]})


def colimit_by_skeletal_induction(C: FiniteCategory, X: SimplicialSet | DiagramInCat, d: DiagramInCat | None = None,
                                  kappa: int | None = None) -> LimitCertificate:
    """Colimit of ``d`` as the limit of the opposite diagram in the opposite category."""
    if d is None:
        d = X
    cert = limit_by_skeletal_induction(C.opposite(), d.opposite(), kappa=kappa)
    cert.evidence["dual"] = True
    return cert


# -- cone objects: the simplicial side -------------------------------------------------------


@dataclass
class ConeLimitVerdict:
    iso: SimplicialMap | None
    direct: SimplicialSet
    assembled: SimplicialSet
    kind: str

    @property
    def verdict(self) -> str:
        return "yes" if self.iso is not None else "no"


def _restriction(A: SimplicialSet, K_big, K_small, f: SimplicialMap) -> SimplicialMap:
    """``Delta|d -> Delta|(d o f)`` induced by restriction ``A^Y -> A^W`` along ``f: W -> Y``."""
    AY, AW = K_big.meta["cotensor"], K_small.meta["cotensor"]
    r = cotensor_map(AY, AW, pre=f)
    pt = K_big.g.source
    return comma_map(K_big, K_small, pt.identity_map(), r, A.identity_map())


def cone_limit_check(A: SimplicialSet, presentation: dict, d: SimplicialMap, *, dim_bound: int | None = None) -> ConeLimitVerdict:
    """Compare ``Delta|d`` with the strict limit of the restricted cone objects.

    ``presentation`` is one of

    * ``{"kind": "coproduct", "legs": [jY, jZ, ...]}`` (legs cover ``X``),
    * ``{"kind": "pushout", "i": i, "g": g, "jY": jY, "jZ": jZ}``,
    * ``{"kind": "composite", "chain": [X0 -> X1, ...]}`` (last target is ``X``),
    * ``{"kind": "trivial"}``.
    """
    X = d.source
    direct = cones_over(A, X, d, dim_bound=dim_bound)
    kind = presentation["kind"]
    if kind == "trivial":
        L = direct.total
        return ConeLimitVerdict(L.identity_map(), direct.total, L, kind)
    if kind == "coproduct":
        parts = [cones_over(A, j.source, d.compose(j), dim_bound=dim_bound) for j in presentation["legs"]]
        objs = [A] + [K.total for K in parts]
        cons = [(k + 1, K.p0, 0, A.identity_map()) for k, K in enumerate(parts)]
        L = finite_limit(objs, cons)
        legs = [_restriction(A, direct, K, j) for K, j in zip(parts, presentation["legs"])]
    elif kind == "pushout":
        i, g, jY, jZ = (presentation[k] for k in ("i", "g", "jY", "jZ"))
        KY = cones_over(A, jY.source, d.compose(jY), dim_bound=dim_bound)
        KZ = cones_over(A, jZ.source, d.compose(jZ), dim_bound=dim_bound)
        KX = cones_over(A, i.source, d.compose(jY).compose(i), dim_bound=dim_bound)
        rY = _restriction(A, KY, KX, i)
        rZ = _restriction(A, KZ, KX, g)
        L = finite_limit([KY.total, KX.total, KZ.total], [(0, rY, 1, KX.total.identity_map()), (2, rZ, 1, KX.total.identity_map())])
        legs = [_restriction(A, direct, KY, jY), _restriction(A, direct, KX, jY.compose(i)), _restriction(A, direct, KZ, jZ)]
    elif kind == "composite":
        chain = presentation["chain"]
        stages = [chain[0].source] + [f.target for f in chain]
        incs = []
        acc = X.identity_map()
        for f in reversed(chain):
            incs.append(acc)
            acc = acc.compose(f)
        incs.append(acc)
        incs.reverse()
        Ks = [cones_over(A, S, d.compose(j), dim_bound=dim_bound) for S, j in zip(stages, incs)]
        cons = [(k + 1, _restriction(A, Ks[k + 1], Ks[k], f), k, Ks[k].total.identity_map()) for k, f in enumerate(chain)]
        L = finite_limit([K.total for K in Ks], cons)
        legs = [_restriction(A, direct, K, j) for K, j in zip(Ks, incs)]
    else:
        raise SkellimError(f"unknown presentation kind {kind!r}")
    # the comparison Delta|d -> L, then an isomorphism check
    T = direct.total
    if kind == "coproduct":
        comps = [direct.p0] + legs
    else:
        comps = legs
    images = {}
    for gid in T.all_generators():
        s = T.gen_simplex(gid)
        images[gid] = product_nf(L, tuple(m.apply(s) for m in comps))
    cmp = SimplicialMap(T, L, images, check=False)
    if cmp.is_iso():
        return ConeLimitVerdict(cmp, T, L, kind)
    # fall back to an abstract isomorphism search
    return ConeLimitVerdict(is_isomorphic(T, L), T, L, kind + "/abstract")
