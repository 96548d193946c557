"""Joins, homotopy coherent realization homs, the pseudo-limit weight and ends.

Hom spaces of the coherent realization are computed from flagged necklaces:
an ``n``-simplex of ``Hom(x, y)`` is a chain of non-degenerate simplices of
``X`` glued end to start (the beads), together with a flag of vertex sets
``J = T^0 <= T^1 <= ... <= T^n = V`` starting at the joints and ending at all
vertices.  A flag is stored as the level at which each non-joint vertex enters.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import BoundExceeded, HypothesisViolation, SchemaError, SimplicialError, SkellimError
from .hom_spaces import cotensor_map, diagonal, is_isofibration, mapping_space
from .simplicial.constructions import boundary, copower, point, product_nf, projection, pushout, skeleton, std_simplex
from .simplicial.limits import finite_limit
from .simplicial.sset import SimplicialMap, SimplicialSet
from .simplicial.words import identity

BOTTOM = "⊥"


# -- joins -----------------------------------------------------------------------


def join(X: SimplicialSet, Y: SimplicialSet, *, left=None, right=None) -> SimplicialSet:
    """``X * Y``; pair generators are named ``'x*y'``.

    ``left``/``right`` rename the generators of each side; by default names
    are kept when they do not collide and prefixed ``'0:'``/``'1:'`` otherwise.
    """
    if left is None and right is None:
        clash = set(X.all_generators()) & set(Y.all_generators())
        left = (lambda g: "0:" + g) if clash else (lambda g: g)
        right = (lambda g: "1:" + g) if clash else (lambda g: g)
    left = left or (lambda g: g)
    right = right or (lambda g: g)
    top = max(X.dim, Y.dim, X.dim + Y.dim + 1 if not (X.is_empty() or Y.is_empty()) else -1)
    gens = [[] for _ in range(top + 1)]
    faces = {}
    for g in X.all_generators():
        gens[X.dim_of(g)].append(left(g))
        faces[left(g)] = tuple((left(t), w) for t, w in X.faces(g))
    for g in Y.all_generators():
        gens[Y.dim_of(g)].append(right(g))
        faces[right(g)] = tuple((right(t), w) for t, w in Y.faces(g))
    pair = lambda a, b: f"{left(a)}*{right(b)}"

    def nf(xs, ys):
        # xs, ys: simplices of X and Y (either may be None = empty side)
        if xs is None:
            return (right(ys[0]), ys[1])
        if ys is None:
            return (left(xs[0]), xs[1])
        (a, s), (b, t) = xs, ys
        m = s[-1] + 1
        return (pair(a, b), s + tuple(m + v for v in t))

    for i in range(X.dim + 1):
        for a in X.generators(i):
            for j in range(Y.dim + 1):
                for b in Y.generators(j):
                    gid = pair(a, b)
                    gens[i + j + 1].append(gid)
                    fs = []
                    xa, yb = X.gen_simplex(a), Y.gen_simplex(b)
                    for k in range(i + 1):
                        fs.append(nf(X.face(xa, k) if i > 0 else None, yb))
                    for k in range(j + 1):
                        fs.append(nf(xa, Y.face(yb, k) if j > 0 else None))
                    faces[gid] = tuple(fs)
    J = SimplicialSet(gens, faces, check=False)
    J.name = f"{X.name}*{Y.name}" if X.name and Y.name else None
    return J


def cone(X: SimplicialSet) -> SimplicialSet:
    """``Delta^0 * X`` with cone point ``'⊥'``."""
    return join(SimplicialSet([[BOTTOM]], {}, check=False), X, left=lambda g: BOTTOM, right=lambda g: g)


# -- necklaces --------------------------------------------------------------------


class _Necklaces:
    """Totally non-degenerate necklaces in ``X`` and the face calculus of flags."""

    def __init__(self, X: SimplicialSet, max_beads: int | None = None):
        self.X = X
        self.max_beads = max_beads
        self.out: dict = {}
        for g in X.all_generators():
            if X.dim_of(g) == 0:
                continue
            vs = X.vertices(X.gen_simplex(g))
            self.out.setdefault(vs[0], []).append((g, vs[-1]))
        if max_beads is None and self._has_cycle():
            raise BoundExceeded("X has a directed cycle; pass max_beads to truncate necklaces")

    def _has_cycle(self) -> bool:
        state: dict = {}

        def visit(v):
            state[v] = 1
            for _, w in self.out.get(v, ()):
                if state.get(w) == 1 or (w not in state and visit(w)):
                    return True
            state[v] = 2
            return False

        return any(v not in state and visit(v) for v in self.X.generators(0))

    def between(self, x: str, y: str) -> list:
        found = []

        def walk(v, beads):
            if v == y and beads:
                found.append(tuple(beads))
            if self.max_beads is not None and len(beads) >= self.max_beads:
                return
            for g, w in self.out.get(v, ()):
                beads.append(g)
                walk(w, beads)
                beads.pop()

        walk(x, [])
        return found

    def layout(self, beads) -> tuple:
        """Global position ranges of the beads and the joint positions."""
        spans, p = [], 0
        for g in beads:
            k = self.X.dim_of(g)
            spans.append((p, p + k))
            p += k
        joints = {s for s, _ in spans} | {p}
        return spans, joints, p

    def free_positions(self, beads) -> list:
        spans, joints, end = self.layout(beads)
        return [q for q in range(end + 1) if q not in joints]

    # entries: dict position -> level (0 for joints)
    def _normalize(self, parts, entries):
        """``parts``: list of (simplex of X, global positions); returns a key body."""
        beads = []
        new_entries = []
        for (g, sigma), positions in parts:
            m = sigma[-1]
            if m == 0:
                # the bead collapses to a point; merge its endpoints into the previous joint
                lvl = min(entries[q] for q in positions)
                if new_entries:
                    new_entries[-1] = min(new_entries[-1], lvl)
                else:
                    new_entries.append(lvl)
                continue
            merged = [None] * (m + 1)
            for t, q in enumerate(positions):
                e = entries[q]
                v = sigma[t]
                merged[v] = e if merged[v] is None else min(merged[v], e)
            merged[0] = merged[-1] = 0
            if new_entries:
                new_entries[-1] = 0
                new_entries.extend(merged[1:])
            else:
                new_entries.extend(merged)
            beads.append(g)
        if not beads:
            raise SimplicialError("necklace collapsed to a point")
        spans, joints, end = self.layout(beads)
        free = tuple(new_entries[q] for q in range(end + 1) if q not in joints)
        return tuple(beads), free

    def _entries(self, beads, free):
        spans, joints, end = self.layout(beads)
        entries, it = {}, iter(free)
        for q in range(end + 1):
            entries[q] = 0 if q in joints else next(it)
        return spans, entries

    def face(self, key, i):
        n, beads, free = key
        X = self.X
        spans, entries = self._entries(beads, free)
        if 0 < i < n:
            return (n - 1, beads, tuple(e if e < i else max(i, e - 1) for e in free))
        if i == n:
            parts = []
            for g, (s, t) in zip(beads, spans):
                keep = [q for q in range(s, t + 1) if entries[q] <= n - 1]
                parts.append((X.act(X.gen_simplex(g), tuple(q - s for q in keep)), keep))
            b, f = self._normalize(parts, entries)
            return (n - 1, b, f)
        # i == 0: the level-1 vertices become joints
        shifted = {q: (0 if e <= 1 else e - 1) for q, e in entries.items()}
        parts = []
        for g, (s, t) in zip(beads, spans):
            cuts = [q for q in range(s, t + 1) if shifted[q] == 0]
            for a, b in zip(cuts, cuts[1:]):
                seg = list(range(a, b + 1))
                parts.append((X.act(X.gen_simplex(g), tuple(q - s for q in seg)), seg))
        b, f = self._normalize(parts, shifted)
        return (n - 1, b, f)

    @staticmethod
    def degen(key, j):
        n, beads, free = key
        return (n + 1, beads, tuple(e if e <= j else e + 1 for e in free))


def _flags(count: int, n: int):
    if count == 0:
        yield ()
        return
    if n == 0:
        return
    for head in range(1, n + 1):
        for rest in _flags(count - 1, n):
            yield (head,) + rest


def _hom_gen_id(n, idx, key):
    _, beads, free = key
    name = "|".join(beads)
    return name + ("@" + "".join(map(str, free)) if free else "")


def realization_hom(X: SimplicialSet, x: str, y: str, *, max_beads: int | None = None) -> SimplicialSet:
    """``Hom(x, y)`` in the homotopy coherent realization of ``X``."""
    for v in (x, y):
        if v not in X or X.dim_of(v) != 0:
            raise SimplicialError(f"{v!r} is not a vertex")
    N = _Necklaces(X, max_beads)
    if x == y:
        # acyclic case: only the identity
        H = SimplicialSet([["id"]], {}, check=False)
        H.meta.update(key_nf={(0, (), ()): ("id", (0,))}, gen_key={"id": (0, (), ())}, levels=0)
        H.meta["key_ops"] = (N.face, N.degen, lambda k: k[0])
        H.meta.update(necklaces=N, hom=(x, y))
        return H
    necklaces = N.between(x, y)
    top = max((len(N.free_positions(b)) for b in necklaces), default=0)
    levels = []
    for n in range(top + 1):
        level = []
        for beads in necklaces:
            for flag in _flags(len(N.free_positions(beads)), n):
                level.append((n, beads, flag))
        levels.append(level)
    H = SimplicialSet.from_levels(levels, N.face, N.degen, gen_id=_hom_gen_id, key_dim=lambda k: k[0])
    H.meta.update(necklaces=N, hom=(x, y))
    return H


# -- index categories, weights, diagrams ---------------------------------------------


@dataclass
class IndexCategory:
    """A finitely presented category: a graph plus relations between parallel paths.

    Paths are tuples of generator names read in composition order (first arrow
    first).  The empty path at an object is its identity.
    """

    objects: tuple
    generators: dict
    relations: tuple = ()

    def __post_init__(self):
        self.objects = tuple(self.objects)
        self.generators = dict(self.generators)
        self.relations = tuple((tuple(a), tuple(b)) for a, b in self.relations)
        for g, (s, t) in self.generators.items():
            if s not in self.objects or t not in self.objects:
                raise SkellimError(f"generator {g!r} has unknown endpoints")
        for a, b in self.relations:
            if self.path_ends(a) != self.path_ends(b) and a and b:
                raise SkellimError(f"relation {a!r} = {b!r} is not between parallel paths")

    @property
    def free(self) -> bool:
        return not self.relations

    def path_ends(self, path):
        if not path:
            return None
        for f, g in zip(path, path[1:]):
            if self.generators[f][1] != self.generators[g][0]:
                raise SkellimError(f"path {path!r} is not composable")
        return (self.generators[path[0]][0], self.generators[path[-1]][1])

    def paths(self, a: str, b: str, max_len: int | None = None) -> list:
        """All generator paths ``a -> b`` (the empty path when ``a == b``)."""
        out = []
        bound = max_len if max_len is not None else len(self.generators) + 1

        def walk(v, path):
            if v == b:
                out.append(tuple(path))
            if len(path) >= bound:
                return
            for g, (s, t) in self.generators.items():
                if s == v:
                    path.append(g)
                    walk(t, path)
                    path.pop()

        walk(a, [])
        return out

    @classmethod
    def from_graph(cls, X: SimplicialSet) -> "IndexCategory":
        """Free category on the non-degenerate edges of a 1-skeletal ``X``."""
        gens = {}
        for e in X.generators(1):
            (t, _), (s, _) = X.faces(e)
            gens[e] = (s, t)
        rels = []
        for g in X.generators(2):
            f0, f1, f2 = X.faces(g)
            path = lambda s: () if len(set(s[1])) == 1 else (s[0],)
            rels.append((path(f2) + path(f0), path(f1)))
        return cls(tuple(X.generators(0)), gens, tuple(rels))

    @classmethod
    def discrete(cls, objects: Sequence[str]) -> "IndexCategory":
        return cls(tuple(objects), {})

    @classmethod
    def cospan(cls) -> "IndexCategory":
        """``0 -> 2 <- 1``, the shape of the horn ``(2, 2)``."""
        return cls(("0", "1", "2"), {"0,2": ("0", "2"), "1,2": ("1", "2")})

    @classmethod
    def tower(cls, length: int) -> "IndexCategory":
        """``length -> ... -> 1 -> 0`` (a finite truncation of an inverse sequence)."""
        objs = tuple(str(k) for k in range(length + 1))
        gens = {f"{k + 1},{k}": (str(k + 1), str(k)) for k in range(length)}
        return cls(objs, gens)


def tower_graph(length: int) -> SimplicialSet:
    """The 1-skeletal simplicial set ``length -> ... -> 0``."""
    verts = [str(k) for k in range(length + 1)]
    edges = [f"{k + 1},{k}" for k in range(length)]
    faces = {f"{k + 1},{k}": ((str(k), (0,)), (str(k + 1), (0,))) for k in range(length)}
    return SimplicialSet([verts, edges], faces)


@dataclass
class Cell:
    """A projective cell ``boundary(n) x Hom(obj, -) -> Delta^n x Hom(obj, -)``.

    ``attaching`` maps the generators of ``boundary(n)`` to simplices of
    ``values[obj]``; ``top`` names the generator of ``values[obj]`` that the new
    ``n``-cell becomes.
    """

    obj: str
    n: int
    attaching: dict
    top: str


@dataclass
class Weight:
    """Functor ``index -> sSet``; ``action[g]`` is ``values[src] -> values[tgt]`` (covariant)."""

    index: IndexCategory
    values: dict
    action: dict
    cells: list | None = None
    meta: dict = field(default_factory=dict)
    orientation: str = "covariant"

    def __post_init__(self):
        for o in self.index.objects:
            if o not in self.values:
                raise SkellimError(f"weight has no value at {o!r}")
        for g, (s, t) in self.index.generators.items():
            m = self.action.get(g)
            if m is None or m.source != self.values[s] or m.target != self.values[t]:
                raise SkellimError(f"action of {g!r} has the wrong endpoints")
        for a, b in self.index.relations:
            if self.path_map(a).images != self.path_map(b).images:
                raise SkellimError(f"action violates the relation {a!r} = {b!r}")

    def path_map(self, path, start: str | None = None) -> SimplicialMap:
        if not path:
            return self.values[start].identity_map() if start else None
        m = self.action[path[0]]
        for g in path[1:]:
            m = self.action[g].compose(m)
        return m

    def apply_path(self, path, s):
        for g in path:
            s = self.action[g].apply(s)
        return s


def terminal_weight(index: IndexCategory) -> Weight:
    pt = point()
    return Weight(index, {o: pt for o in index.objects}, {g: pt.identity_map() for g in index.generators})


def pseudo_weight(X: SimplicialSet) -> Weight:
    """``W_X(x) = Hom(⊥, x)`` in the coherent realization of ``Delta^0 * X``.

    For 1-skeletal ``X`` the index is the free category on its edges and a
    canonical cell presentation (0-cells per vertex, 1-cells per edge) is
    attached.  Otherwise the index carries the 2-simplex relations and the
    weight is flagged as not presented by cells.
    """
    CX = cone(X)
    index = IndexCategory.from_graph(X)
    values = {x: realization_hom(CX, BOTTOM, x) for x in X.generators(0)}
    action = {}
    for e, (s, t) in index.generators.items():
        Ws, Wt = values[s], values[t]
        images = {}
        for g in Ws.all_generators():
            n, beads, free = Ws.meta["gen_key"][g]
            images[g] = Wt.key_nf((n, beads + (e,), free))
        action[e] = SimplicialMap(Ws, Wt, images, check=False)
    W = Weight(index, values, action, meta={"shape": X, "one_skeletal": X.dim <= 1})
    if X.dim <= 1:
        W.cells = canonical_cells(W, X)
    else:
        W.meta["flag"] = "index presented with relations; no cell presentation"
    return W


def canonical_cells(W: Weight, X: SimplicialSet) -> list:
    """The projective cells of a pseudo weight on a 1-skeletal ``X``."""
    cells = []
    for v in X.generators(0):
        top = f"{BOTTOM}*{v}"
        cells.append(Cell(v, 0, {}, top))
    for e in X.generators(1):
        (t, _), (s, _) = X.faces(e)
        Wt = W.values[t]
        direct = Wt.gen_simplex(f"{BOTTOM}*{t}")
        via = Wt.gen_simplex(f"{BOTTOM}*{s}|{e}")
        cells.append(Cell(t, 1, {"0": direct, "1": via}, f"{BOTTOM}*{e}@1"))
    return cells


@dataclass
class PresentationVerdict:
    valid: bool
    location: str | None = None
    reason: str | None = None


def check_flexible_presentation(W: Weight) -> PresentationVerdict:
    """Replay the cell attachments of ``W`` and compare with its values and action.

    Each attachment is an objectwise pushout of ``boundary(n) x Hom(a, b)``
    into ``Delta^n x Hom(a, b)`` along the transported attaching map.
    """
    if W.cells is None:
        raise SchemaError("weight carries no cell presentation", "$.cells")
    idx = W.index
    built = {b: SimplicialSet([], {}, check=False) for b in idx.objects}
    for k, cell in enumerate(W.cells):
        loc = f"cell {k} ({cell.obj}, n={cell.n})"
        if cell.obj not in W.values:
            return PresentationVerdict(False, loc, "unknown object")
        for b in idx.objects:
            paths = idx.paths(cell.obj, b)
            if not paths:
                continue
            labels = [".".join(p) if p else "id" for p in paths]
            D = std_simplex(cell.n)
            Dn, _ = copower(D, labels)
            if cell.n == 0:
                Bd, _ = copower(SimplicialSet([], {}, check=False), labels)
            else:
                Bd, _ = copower(boundary(cell.n), labels)
            inc = SimplicialMap(Bd, Dn, {g: Dn.gen_simplex(g) for g in Bd.all_generators()}, check=False)
            inc.flags["mono"] = True
            att = {}
            for g in Bd.all_generators():
                lab, sub = g.split(":", 1)
                p = paths[labels.index(lab)]
                s = W.apply_path(p, cell.attaching.get(sub)) if sub in cell.attaching else None
                if s is None or s[0] not in built[b]:
                    return PresentationVerdict(False, loc, f"attaching map leaves the attached part at {b!r}")
                att[g] = s
            attach = SimplicialMap(Bd, built[b], att, check=False)
            tops = {}
            for lab, p in zip(labels, paths):
                s = W.apply_path(p, W.values[cell.obj].gen_simplex(cell.top))
                if s[1] != identity(cell.n):
                    return PresentationVerdict(False, loc, f"cell becomes degenerate along {lab!r}")
                tops[f"{lab}:{','.join(map(str, range(cell.n + 1)))}"] = s[0]
            P, _, _ = pushout(inc, attach, rename=lambda gid: tops[gid])
            if len(set(tops.values())) != len(tops) or any(t.endswith("'") for t in P.all_generators()):
                return PresentationVerdict(False, loc, f"cells collide at {b!r}")
            built[b] = P
    for b in idx.objects:
        got, want = built[b], W.values[b]
        for n in range(max(got.dim, want.dim) + 1):
            if sorted(got.generators(n)) != sorted(want.generators(n)):
                return PresentationVerdict(False, f"object {b!r}", f"generators differ in dimension {n}")
        for g in want.all_generators():
            if got.faces(g) != want.faces(g):
                return PresentationVerdict(False, f"object {b!r}", f"faces of {g!r} differ")
    for e, (s, t) in idx.generators.items():
        for k, cell in enumerate(W.cells):
            for p in idx.paths(cell.obj, s):
                src = W.apply_path(p, W.values[cell.obj].gen_simplex(cell.top))
                dst = W.apply_path(p + (e,), W.values[cell.obj].gen_simplex(cell.top))
                if W.action[e].apply(src) != dst:
                    return PresentationVerdict(False, f"generator {e!r}", "action does not move cells to cells")
    return PresentationVerdict(True)


@dataclass
class SsetDiagram:
    """A diagram of simplicial sets: ``maps[g]: values[src] -> values[tgt]``."""

    index: IndexCategory
    values: dict
    maps: dict
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        for g, (s, t) in self.index.generators.items():
            m = self.maps[g]
            if m.source != self.values[s] or m.target != self.values[t]:
                raise SkellimError(f"diagram map {g!r} has the wrong endpoints")


def strict_limit(F: SsetDiagram) -> SimplicialSet:
    """``lim F`` as a sub-object of the product of the values."""
    objs = list(F.index.objects)
    pos = {o: k for k, o in enumerate(objs)}
    cons = [(pos[s], F.maps[g], pos[t], F.values[t].identity_map()) for g, (s, t) in F.index.generators.items()]
    L = finite_limit([F.values[o] for o in objs], cons)
    L.meta["objects"] = objs
    return L


def weighted_limit(W: Weight, F: SsetDiagram, *, dim_bound: int | None = None) -> SimplicialSet:
    """``{W, F}``: the end of ``F(c)^{W(c)}``, equalized along generator arrows.

    Equalizing along generators suffices for any presented index: a family
    natural for generators is natural for their composites.
    """
    if W.index.objects != F.index.objects or W.index.generators != F.index.generators:
        raise SkellimError("weight and diagram are indexed differently")
    if W.orientation != "covariant":
        raise SkellimError("only covariant weights are supported")
    objs = list(W.index.objects)
    pos = {o: k for k, o in enumerate(objs)}
    powers = {c: mapping_space(W.values[c], F.values[c], dim_bound=dim_bound) for c in objs}
    cons = []
    for g, (s, t) in W.index.generators.items():
        mixed = mapping_space(W.values[s], F.values[t], dim_bound=dim_bound)
        post = cotensor_map(powers[s], mixed, post=F.maps[g])
        pre = cotensor_map(powers[t], mixed, pre=W.action[g])
        cons.append((pos[s], post, pos[t], pre))
    L = finite_limit([powers[c] for c in objs], cons)
    L.meta.update(objects=objs, powers=powers)
    return L


def strict_pseudo_cone(F: SsetDiagram, W: Weight, *, bound: int | None = None) -> dict:
    """Restrict the strict limit cone along ``W -> 1``; checks the isofibration hypotheses.

    Returns the W-cone as a dict of legs ``lim F -> F(c)^{W(c)}``.
    """
    _check_hypotheses(F, bound)
    L = strict_limit(F)
    legs = {}
    powers = {c: mapping_space(W.values[c], F.values[c], dim_bound=bound) for c in F.index.objects}
    top = min((P.bound for P in powers.values() if P.bound is not None), default=None)
    L = _truncate(L, top)
    for k, c in enumerate(F.index.objects):
        power = powers[c]
        legs[c] = diagonal(F.values[c], power).compose(projection(L, k))
    return {"limit": L, "legs": legs}


def _truncate(L: SimplicialSet, top: int | None) -> SimplicialSet:
    """The ``top``-skeleton of ``L`` marked as known up to ``top`` (no-op for ``None``)."""
    if top is None or L.dim <= top and (L.bound is None or L.bound <= top):
        return L
    S, _ = skeleton(L, top)
    S.bound = top if L.bound is None else min(L.bound, top)
    S.meta.update(L.meta)
    return S


def _check_hypotheses(F: SsetDiagram, bound):
    idx = F.index
    if not idx.free:
        raise HypothesisViolation("index must be free on a graph")
    kinds = _shape_kind(idx)
    if kinds is None:
        raise HypothesisViolation("index must be discrete, a cospan, or a finite tower")
    legs = list(idx.generators) if kinds == "tower" else (list(idx.generators)[:1] if kinds == "cospan" else [])
    for g in legs:
        cert = is_isofibration(F.maps[g], bound)
        if cert.verdict == "no":
            raise HypothesisViolation(f"leg {g!r} is not an isofibration")


def _shape_kind(idx: IndexCategory):
    if not idx.generators:
        return "discrete"
    tgts = {t for _, t in idx.generators.values()}
    srcs = [s for s, _ in idx.generators.values()]
    if len(idx.generators) == 2 and len(tgts) == 1 and len(set(srcs)) == 2:
        return "cospan"
    outdeg = {}
    for s, t in idx.generators.values():
        outdeg[s] = outdeg.get(s, 0) + 1
    if all(v == 1 for v in outdeg.values()) and len(idx.generators) == len(idx.objects) - 1:
        return "tower"
    return None


def comparison_map(F: SsetDiagram, W: Weight, *, dim_bound: int | None = None, check: bool = True):
    """The map ``lim F -> {W, F}`` induced by the restricted strict cone.

    Returns ``(map, limit, weighted_limit)``.
    """
    if check:
        _check_hypotheses(F, dim_bound)
    L = strict_limit(F)
    Q = weighted_limit(W, F, dim_bound=dim_bound)
    powers = Q.meta["powers"]
    top = min((P.bound for P in powers.values() if P.bound is not None), default=None)
    L = _truncate(L, top)
    if top is not None and (Q.bound is None or Q.bound > top):
        Q.bound = top
    powers = Q.meta["powers"]
    comps = []
    for k, c in enumerate(F.index.objects):
        comps.append(diagonal(F.values[c], powers[c]).compose(projection(L, k)))
    images = {}
    for g in L.all_generators():
        s = L.gen_simplex(g)
        images[g] = product_nf(Q, tuple(m.apply(s) for m in comps))
    return SimplicialMap(L, Q, images, check=False), L, Q


def weight_colimit(W: Weight) -> SimplicialSet:
    """``colim W`` for a free index: glue the values along the action maps."""
    objs = list(W.index.objects)
    from .simplicial.constructions import coproduct

    U, legs = coproduct([W.values[o] for o in objs], prefixes=objs)
    # identify x in W(s) with action(x) in W(t): union-find on generators (values are discrete
    # or 1-dimensional in practice; faces are transported along representatives)
    parent = {g: g for g in U.all_generators()}

    def find(g):
        while parent[g] != g:
            parent[g] = parent[parent[g]]
            g = parent[g]
        return g

    for e, (s, t) in W.index.generators.items():
        for g in W.values[s].all_generators():
            img = W.action[e].images[g]
            if img[1] != identity(W.values[s].dim_of(g)):
                raise SkellimError("colimit with collapsing action is not supported")
            a, b = find(f"{s}:{g}"), find(f"{t}:{img[0]}")
            if a != b:
                parent[max(a, b)] = min(a, b)
    gens = [[g for g in U.generators(n) if find(g) == g] for n in range(U.dim + 1)]
    faces = {g: tuple((find(x), w) for x, w in U.faces(g)) for level in gens for g in level}
    return SimplicialSet(gens, faces)
