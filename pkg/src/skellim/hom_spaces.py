"""Cotensors ``A^X``, Leibniz cotensors and bounded lifting certificates."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .category import FiniteCategory
from .config import default_bound
from .errors import BoundExceeded, NonCommutingSquare, NotAMonomorphism, SimplicialError, SkellimError
from .homs import MapSearch
from .simplicial.constructions import (
    boundary,
    boundary_inclusion,
    empty_map,
    horn,
    horn_inclusion,
    pairing,
    product,
    product_map,
    product_nf,
    projection,
    simplex_map,
    std_simplex,
    terminal_map,
)
from .simplicial.limits import pullback
from .simplicial.nerve import nerve
from .simplicial.sset import SimplicialMap, SimplicialSet
from .simplicial.words import codegeneracy, coface, compose, identity, surj_to_word


# -- cotensors ----------------------------------------------------------------


def delta_map(phi, m: int, n: int) -> SimplicialMap:
    """``Delta^m -> Delta^n`` induced by a monotone ``phi: [m] -> [n]``."""
    Dm, Dn = std_simplex(m), std_simplex(n)
    top = Dn.gen_simplex(Dn.generators(n)[0])
    vs = Dm.meta["vertex_sets"]
    return SimplicialMap(Dm, Dn, {g: Dn.act(top, tuple(phi[v] for v in vs[g])) for g in Dm.all_generators()}, check=False)


class _Cylinders:
    """Products ``Delta^n x X``, the operators between them, and integer tables of ``A``.

    Simplices of ``A^X`` are keyed by ``(n, images)`` where ``images`` lists
    table indices (into ``A.tables``) along the generators of ``Delta^n x X``.
    Table indices of a simplex do not depend on the table height, so one
    index space serves every level.
    """

    def __init__(self, X: SimplicialSet, A: SimplicialSet):
        self.X, self.A = X, A
        self._P: dict = {}
        self._ops: dict = {}
        self._degen: list = []
        self._height = -1

    def P(self, n: int) -> SimplicialSet:
        if n not in self._P:
            self._P[n] = product(std_simplex(n), self.X)
        return self._P[n]

    def table(self, height: int):
        if height > self._height:
            T = self.A.tables(height)
            self._degen = T.degen.tolist()
            self._height = height
            self._T = T
        return self._T

    def degen(self, height: int) -> list:
        self.table(height)
        return self._degen

    def op(self, phi, m: int, n: int) -> list:
        """For ``phi: [m] -> [n]``: per generator of ``P(m)``, (source position, degeneracy codes)."""
        key = (tuple(phi), m, n)
        if key not in self._ops:
            f = product_map([delta_map(phi, m, n), self.X.identity_map()], self.P(m), self.P(n))
            pos = {g: r for r, g in enumerate(self.P(n).all_generators())}
            self._ops[key] = [
                (pos[f.images[g][0]], tuple(reversed(surj_to_word(f.images[g][1])))) for g in self.P(m).all_generators()
            ]
        return self._ops[key]

    def op_arrays(self, phi, m: int, n: int):
        """:meth:`op` as ``(sources, codes)`` arrays; ``codes`` is padded with ``-1``."""
        key = ("arr", tuple(phi), m, n)
        if key not in self._ops:
            op = self.op(phi, m, n)
            width = max((len(c) for _, c in op), default=0)
            src = np.asarray([r for r, _ in op], dtype=np.int64)
            codes = np.full((len(op), width), -1, dtype=np.int64)
            for q, (_, c) in enumerate(op):
                codes[q, : len(c)] = c
            self._ops[key] = (src, codes)
        return self._ops[key]

    def pull_many(self, S: np.ndarray, phi, m: int, n: int, height: int) -> np.ndarray:
        """Apply ``phi`` to every row of ``S`` (keys of level ``n``) at once."""
        src, codes = self.op_arrays(phi, m, n)
        D = self.table(height).degen
        out = S[:, src] if len(src) else np.zeros((len(S), 0), dtype=np.int64)
        for k in range(codes.shape[1]):
            cols = np.nonzero(codes[:, k] >= 0)[0]
            if len(cols):
                out[:, cols] = D[out[:, cols], codes[cols, k]]
        return out

    def pull(self, images, op, height: int) -> tuple:
        degen = self.degen(height)
        out = []
        for r, codes in op:
            x = images[r]
            for c in codes:
                x = degen[x][c]
            out.append(x)
        return tuple(out)

    def face_key(self, key, i):
        n, images = key
        return (n - 1, self.pull(images, self.op(coface(n, i), n - 1, n), n + self.X.dim + 1))

    def degen_key(self, key, j):
        n, images = key
        return (n + 1, self.pull(images, self.op(codegeneracy(n, j), n + 1, n), n + self.X.dim + 2))

    def is_degenerate(self, key) -> bool:
        return any(self.degen_key(self.face_key(key, j), j) == key for j in range(key[0]))

    def to_map(self, key) -> SimplicialMap:
        n, images = key
        P = self.P(n)
        simp = self.table(n + self.X.dim).simplices
        return SimplicialMap(P, self.A, {g: simp[x] for g, x in zip(P.all_generators(), images)}, check=False)

    def from_map(self, n: int, f: SimplicialMap):
        idx = self.table(n + self.X.dim).index
        return (n, tuple(idx[f.images[g]] for g in self.P(n).all_generators()))


def mapping_space(X: SimplicialSet, A: SimplicialSet, *, dim_bound: int | None = None) -> SimplicialSet:
    """The cotensor ``A^X``: ``n``-simplices are maps ``Delta^n x X -> A``.

    For a nerve ``A`` without truncation the result is exact (it is again a
    nerve, so the first dimension without non-degenerate simplices ends it).
    Otherwise levels are computed up to ``dim_bound`` and that bound is
    recorded on the value.
    """
    dim_bound = default_bound() if dim_bound is None else dim_bound
    cyl = _Cylinders(X, A)
    exact = (A.meta.get("nerve", False) and A.bound is None) or X.is_empty()
    top = None if exact else dim_bound
    if A.bound is not None and not X.is_empty():
        # degeneracies of the top level reach one dimension further
        limit = A.bound - X.dim - 1
        if limit < 0:
            raise BoundExceeded(f"A is known only up to dimension {A.bound}; A^X needs {X.dim + 1}")
        top = limit if top is None else min(top, limit)
    levels: list = []
    arrays: list = []
    n = 0
    while top is None or n <= top:
        S = MapSearch(cyl.P(n), A).raw_array()
        arrays.append(S)
        levels.append([(n, tuple(r)) for r in S.tolist()] if n <= 1 else None)
        if top is None and n == 1:
            top = nerve_height(levels, cyl.face_key, cyl.is_degenerate)
        elif top is None and not levels[0]:
            break
        n += 1
    M = _assemble(cyl, arrays, bound=None if exact else len(arrays) - 1)
    M.meta.update(cotensor=(X, A), cyl=cyl, nerve=bool(A.meta.get("nerve")))
    return M


def _assemble(cyl: _Cylinders, arrays: list, *, bound) -> SimplicialSet:
    """Levelwise assembly of ``A^X`` from solution arrays (vectorised ``from_levels``)."""
    nf: dict = {}
    gen_key: dict = {}
    gens: list = []
    faces: dict = {}
    d = cyl.X.dim
    for n, S in enumerate(arrays):
        rows = [tuple(r) for r in S.tolist()]
        level: list = []
        if n == 0:
            for r in rows:
                gid = f"0:{len(level)}"
                nf[(0, r)] = (gid, (0,))
                gen_key[gid] = (0, r)
                level.append(gid)
            gens.append(level)
            continue
        face_rows = [cyl.pull_many(S, coface(n, i), n - 1, n, n + d + 1) for i in range(n + 1)]
        which = np.full(len(S), -1, dtype=np.int64)
        for j in range(n):
            back = cyl.pull_many(face_rows[j], codegeneracy(n - 1, j), n, n - 1, n + d + 1)
            hit = (which < 0) & np.all(back == S, axis=1)
            which[hit] = j
        nondeg = np.nonzero(which < 0)[0]
        nd_faces = [F[nondeg].tolist() for F in face_rows]
        for j in range(n):
            sel = np.nonzero(which == j)[0]
            if not len(sel):
                continue
            tau_j = codegeneracy(n - 1, j)
            for k, fr in zip(sel.tolist(), face_rows[j][sel].tolist()):
                g, tau = nf[(n - 1, tuple(fr))]
                nf[(n, rows[k])] = (g, compose(tau, tau_j))
        for t, k in enumerate(nondeg.tolist()):
            gid = f"{n}:{len(level)}"
            faces[gid] = tuple(nf[(n - 1, tuple(nd_faces[i][t]))] for i in range(n + 1))
            nf[(n, rows[k])] = (gid, identity(n))
            gen_key[gid] = (n, rows[k])
            level.append(gid)
        gens.append(level)
    M = SimplicialSet(gens, faces, bound=bound, check=False)
    M.meta["key_nf"] = nf
    M.meta["gen_key"] = gen_key
    M.meta["levels"] = len(arrays) - 1
    M.meta["key_ops"] = (cyl.face_key, cyl.degen_key, _first)
    return M


def nerve_height(levels, face, is_degenerate) -> int:
    """Dimension of a nerve of a finite acyclic category from its vertices and edges.

    Non-degenerate simplices of such a nerve are chains of non-identity
    arrows, so the dimension is the longest path in the graph of
    non-degenerate edges.
    """
    succ: dict = {}
    for e in levels[1]:
        if not is_degenerate(e):
            succ.setdefault(face(e, 1), []).append(face(e, 0))
    memo: dict = {}
    active: set = set()

    def depth(v):
        if v in memo:
            return memo[v]
        if v in active:
            raise SimplicialError("edge graph has a cycle; the nerve is not finite")
        active.add(v)
        memo[v] = max((1 + depth(w) for w in succ.get(v, ())), default=0)
        active.discard(v)
        return memo[v]

    return max((depth(v) for v in levels[0]), default=0)


def cotensor_simplex_map(M: SimplicialSet, s) -> SimplicialMap:
    """The map ``Delta^n x X -> A`` represented by a simplex of ``M = A^X``."""
    return M.meta["cyl"].to_map(cotensor_key(M, s))


def cotensor_key(M: SimplicialSet, s):
    g, sigma = s
    key = M.meta["gen_key"][g]
    cyl = M.meta["cyl"]
    for j in reversed(surj_to_word(sigma)):
        key = cyl.degen_key(key, j)
    return key


def cotensor_map(M: SimplicialSet, N: SimplicialSet, *, pre: SimplicialMap | None = None, post: SimplicialMap | None = None) -> SimplicialMap:
    """``post^pre : A^Y -> B^X`` between cotensors (either side may be omitted)."""
    cyl_Y, cyl_X = M.meta["cyl"], N.meta["cyl"]
    Y, X = cyl_Y.X, cyl_X.X
    by_level: dict = {}
    for g in M.all_generators():
        n, imgs = M.meta["gen_key"][g]
        by_level.setdefault(n, []).append((g, imgs))
    images = {}
    for n, items in by_level.items():
        S = np.asarray([imgs for _, imgs in items], dtype=np.int64).reshape(len(items), -1)
        height = n + max(X.dim, Y.dim) + 1
        T = cyl_Y.table(height)
        if pre is not None:
            f = product_map([std_simplex(n).identity_map(), pre], cyl_X.P(n), cyl_Y.P(n))
            pos = {g: r for r, g in enumerate(cyl_Y.P(n).all_generators())}
            gens = cyl_X.P(n).all_generators()
            src = np.asarray([pos[f.images[q][0]] for q in gens], dtype=np.int64)
            codes = [tuple(reversed(surj_to_word(f.images[q][1]))) for q in gens]
            S = S[:, src] if len(src) else np.zeros((len(S), 0), dtype=np.int64)
            D = T.degen
            width = max((len(c) for c in codes), default=0)
            for k in range(width):
                cols = np.asarray([q for q, c in enumerate(codes) if len(c) > k], dtype=np.int64)
                vals = np.asarray([codes[q][k] for q in cols], dtype=np.int64)
                S[:, cols] = D[S[:, cols], vals]
        if post is not None:
            B_T = cyl_X.table(height)
            used, inv = np.unique(S, return_inverse=True)
            simp = T.simplices
            lut = np.asarray([B_T.index[post.apply(simp[x])] for x in used.tolist()], dtype=np.int64)
            S = lut[inv].reshape(S.shape)
        for (g, _), row in zip(items, S.tolist()):
            images[g] = N.key_nf((n, tuple(row)))
    return SimplicialMap(M, N, images, check=False)


def cotensor_nf(M: SimplicialSet, key):
    """Normal form of a keyed simplex, also above the computed levels of an exact cotensor."""
    return M.key_nf(key)


@dataclass
class PullbackSquareVerdict:
    """``A^P -> A^Y x_{A^X} A^Z`` for a pushout ``P`` of ``Y <- X -> Z``."""

    comparison: SimplicialMap
    corner: SimplicialSet
    exact: bool

    @property
    def verdict(self) -> str:
        return "yes" if self.comparison.is_iso() else "no"


def cotensor_pullback_check(A: SimplicialSet, i: SimplicialMap, g: SimplicialMap, jY: SimplicialMap, jZ: SimplicialMap,
                            *, dim_bound: int | None = None) -> PullbackSquareVerdict:
    """Check that ``A^(-)`` turns the pushout square ``(i, g, jY, jZ)`` into a pullback.

    ``i: X -> Y``, ``g: X -> Z`` and ``jY: Y -> P``, ``jZ: Z -> P``.  The
    comparison is the canonical map into the strict pullback; the verdict is
    "yes" when it is an isomorphism on the nose.
    """
    P, Y, Z, X = jY.target, i.target, g.target, i.source
    AP, AY, AZ, AX = (mapping_space(S, A, dim_bound=dim_bound) for S in (P, Y, Z, X))
    rY, rZ = cotensor_map(AY, AX, pre=i), cotensor_map(AZ, AX, pre=g)
    Q, _, _ = pullback(rY, rZ)
    m = pairing([cotensor_map(AP, AY, pre=jY), cotensor_map(AP, AZ, pre=jZ)], Q)
    exact = all(M.bound is None for M in (AP, AY, AZ, AX))
    return PullbackSquareVerdict(m, Q, exact)


# -- lifting -------------------------------------------------------------------


def _fibers(p: SimplicialMap, n: int) -> dict:
    cache = p.flags.setdefault("_fibers", {})
    if n not in cache:
        idx: dict = {}
        for e in p.source.simplices(n):
            idx.setdefault(p.apply(e), []).append(e)
        cache[n] = idx
    return cache[n]


def find_lift(i: SimplicialMap, p: SimplicialMap, top: SimplicialMap, bottom: SimplicialMap) -> SimplicialMap | None:
    """A diagonal ``V -> E`` in the square ``p o top = bottom o i`` (``i`` mono)."""
    if not i.is_mono():
        raise NotAMonomorphism("the left map of a lifting square must be a monomorphism")
    for u in i.source.all_generators():
        s = i.source.gen_simplex(u)
        if p.apply(top.apply(s)) != bottom.apply(i.apply(s)):
            raise NonCommutingSquare(f"square does not commute on {u!r}")
    V, E = i.target, p.source
    fixed = {i.images[u][0]: top.apply(i.source.gen_simplex(u)) for u in i.source.all_generators()}
    domains = {}
    for v in V.all_generators():
        if v in fixed:
            continue
        domains[v] = _fibers(p, V.dim_of(v)).get(bottom.apply(V.gen_simplex(v)), [])
        if not domains[v]:
            return None
    sol = MapSearch(V, E, fixed=fixed, domains=domains).first()
    if sol is None:
        return None
    return SimplicialMap(V, E, dict(zip(V.all_generators(), sol)), check=False)


@dataclass
class LiftingCertificate:
    """Outcome of a bounded lifting test.

    ``square`` holds ``(i, p, top, bottom)`` for a "no" verdict and is replayed
    on construction; ``records`` maps each tested dimension to the number of
    squares exhausted there.
    """

    kind: str
    verdict: str
    bound: int
    exact: bool = False
    witness: dict | None = None
    square: tuple | None = None
    records: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in ("yes", "no", "inconclusive"):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == "no":
            if self.square is None or find_lift(*self.square) is not None:
                raise SkellimError("recorded witness does not replay")
        if self.verdict == "yes" and set(self.records) != set(self.tested_dims()):
            raise SkellimError("yes verdict without exhaustion records for every dimension")

    def tested_dims(self) -> list:
        lo = 2 if self.kind in ("qcat", "isofib") else (1 if self.kind == "kan" else 0)
        return list(range(lo, self.bound + 1))

    def replay(self) -> bool:
        """True when the witness square still has no filler."""
        return self.square is not None and find_lift(*self.square) is None

    @property
    def label(self) -> str:
        if self.verdict != "yes":
            return self.verdict
        return "exact" if self.exact else "bounded"

    def exit_code(self) -> int:
        return {"yes": 0, "no": 1, "inconclusive": 2}[self.verdict]

    def to_json(self) -> dict:
        from .io import simplex_to_json

        doc = {
            "version": "cert/1",
            "kind": self.kind,
            "verdict": self.verdict,
            "bound": self.bound,
            "exactness": "exact" if self.exact else "bounded",
            "records": {str(k): v for k, v in sorted(self.records.items())},
        }
        if self.witness is not None:
            w = dict(self.witness)
            if self.square is not None:
                i, p, top, bottom = self.square
                w["top"] = {g: simplex_to_json(top.images[g]) for g in top.source.all_generators()}
                w["bottom"] = {g: simplex_to_json(bottom.images[g]) for g in bottom.source.all_generators()}
            doc["witness"] = w
        return doc


def default_lifting_bound(*sets: SimplicialSet) -> int:
    return max([3] + [X.dim + 1 for X in sets])


def _first(key):
    return key[0]


def evaluate(M: SimplicialSet, x: str) -> SimplicialMap:
    """Evaluation ``A^X -> A`` at a vertex ``x`` of ``X``."""
    X, A = M.meta["cotensor"]
    cyl = M.meta["cyl"]
    images = {}
    for g in M.all_generators():
        n, key = M.meta["gen_key"][g]
        P = cyl.P(n)
        Dn = P.meta["factors"][0]
        q, sigma = product_nf(P, (Dn.gen_simplex(Dn.generators(n)[0]), (x, (0,) * (n + 1))))
        pos = P.all_generators().index(q)
        s = cyl.table(n + X.dim).simplices[key[pos]]
        images[g] = A.apply_surj(s, sigma)
    return SimplicialMap(M, A, images, check=False)


def diagonal(A: SimplicialSet, M: SimplicialSet) -> SimplicialMap:
    """The constant-diagram map ``A -> A^X`` (on ``sk_b A`` when ``M`` is known up to ``b``)."""
    X, _ = M.meta["cotensor"]
    cyl = M.meta["cyl"]
    images = {}
    for a in A.all_generators():
        n = A.dim_of(a)
        if M.bound is not None and n > M.bound:
            continue
        P = cyl.P(n)
        pr = projection(P, 0)
        sa = simplex_map(A, A.gen_simplex(a))
        f = sa.compose(pr)
        images[a] = M.key_nf(cyl.from_map(n, f))
    return SimplicialMap(A, M, images, check=False)


def constant_vertex(M: SimplicialSet, d: SimplicialMap):
    """The vertex of ``A^X`` named by a diagram ``d: X -> A``."""
    cyl = M.meta["cyl"]
    P = cyl.P(0)
    f = d.compose(projection(P, 1))
    return M.key_nf(cyl.from_map(0, f))


def _is_nerve(X: SimplicialSet) -> bool:
    return bool(X.meta.get("nerve"))


def _cap(bound: int, *sets: SimplicialSet):
    """Largest testable dimension and whether the request was cut short."""
    cap = bound
    for X in sets:
        if X.bound is not None:
            cap = min(cap, X.bound)
    return cap, cap < bound


def _horn_test(X: SimplicialSet, bound: int, inner: bool, kind: str) -> LiftingCertificate:
    cap, cut = _cap(bound, X)
    records = {}
    for n in range(2 if inner else 1, cap + 1):
        ks = range(1, n) if inner else range(n + 1)
        count = 0
        for k in ks:
            H = horn(n, k)
            D = std_simplex(n)
            face_ids = [",".join(str(v) for v in range(n + 1) if v != i) for i in range(n + 1)]
            index = set()
            for x in X.simplices(n):
                index.add(tuple(X.face(x, i) for i in range(n + 1) if i != k))
            search = MapSearch(H, X)
            gens = H.all_generators()
            for sol in search.solutions():
                count += 1
                img = dict(zip(gens, sol))
                key = tuple(img[face_ids[i]] for i in range(n + 1) if i != k)
                if key not in index:
                    top = SimplicialMap(H, X, img, check=False)
                    square = (horn_inclusion(n, k), terminal_map(X), top, terminal_map(D))
                    wit = {"dimension": n, "horn": [n, k]}
                    return LiftingCertificate(kind, "no", bound, witness=wit, square=square)
        records[n] = count
    if cut:
        return LiftingCertificate(kind, "inconclusive", bound, records=records)
    return LiftingCertificate(kind, "yes", bound, exact=_is_nerve(X) and bound >= 3, records=records)


def is_quasi_category(X: SimplicialSet, bound: int | None = None) -> LiftingCertificate:
    """Exhaustive inner-horn filling for ``2 <= n <= bound``."""
    return _horn_test(X, default_lifting_bound(X) if bound is None else bound, True, "qcat")


def is_kan(X: SimplicialSet, bound: int | None = None) -> LiftingCertificate:
    """Exhaustive filling of every horn for ``1 <= n <= bound``."""
    return _horn_test(X, default_lifting_bound(X) if bound is None else bound, False, "kan")


def is_trivial_fibration(p: SimplicialMap, bound: int | None = None) -> LiftingCertificate:
    """Lifting against every ``boundary(n) -> Delta^n`` for ``n <= bound``."""
    E, B = p.source, p.target
    bound = default_lifting_bound(E, B) if bound is None else bound
    cap, cut = _cap(bound, E, B)
    records = {}
    for n in range(cap + 1):
        have = set()
        for e in E.simplices(n):
            faces = tuple(E.face(e, i) for i in range(n + 1)) if n else ()
            have.add((faces, p.apply(e)))
        by_faces: dict = {}
        for b in B.simplices(n):
            faces = tuple(B.face(b, i) for i in range(n + 1)) if n else ()
            by_faces.setdefault(faces, []).append(b)
        count = 0
        if n == 0:
            tops = [((), None)]
        else:
            bd = boundary(n)
            face_ids = [",".join(str(v) for v in range(n + 1) if v != i) for i in range(n + 1)]
            gens = bd.all_generators()
            tops = []
            for sol in MapSearch(bd, E).solutions():
                img = dict(zip(gens, sol))
                tops.append((tuple(img[face_ids[i]] for i in range(n + 1)), img))
        for faces, img in tops:
            pf = tuple(p.apply(f) for f in faces)
            for b in by_faces.get(pf, ()):
                count += 1
                if (faces, b) not in have:
                    return _trivfib_witness(p, n, img, b, bound)
        records[n] = count
    if cut:
        return LiftingCertificate("trivfib", "inconclusive", bound, records=records)
    exact = _is_nerve(E) and _is_nerve(B) and bound >= 3
    return LiftingCertificate("trivfib", "yes", bound, exact=exact, records=records)


def _trivfib_witness(p, n, img, b, bound):
    E, B = p.source, p.target
    if n == 0:
        i = empty_map(std_simplex(0))
        top = empty_map(E)
    else:
        i = boundary_inclusion(n)
        top = SimplicialMap(i.source, E, img, check=False)
    bottom = simplex_map(B, b)
    wit = {"dimension": n, "simplex": list(b[1]), "generator": b[0]}
    return LiftingCertificate("trivfib", "no", bound, witness=wit, square=(i, p, top, bottom))


def walking_iso() -> FiniteCategory:
    return FiniteCategory(
        ["a", "b"],
        {"1a": ("a", "a"), "1b": ("b", "b"), "f": ("a", "b"), "g": ("b", "a")},
        {"a": "1a", "b": "1b"},
        {
            ("1a", "1a"): "1a", ("1b", "1b"): "1b", ("f", "1a"): "f", ("1b", "f"): "f",
            ("g", "1b"): "g", ("1a", "g"): "g", ("g", "f"): "1a", ("f", "g"): "1b",
        },
        name="Iso",
    )


def is_isofibration(p: SimplicialMap, bound: int | None = None) -> LiftingCertificate:
    """Inner-horn lifting plus lifting of ``Delta^0 -> N(Iso)`` truncated at ``bound``."""
    E, B = p.source, p.target
    bound = default_lifting_bound(E, B) if bound is None else bound
    cap, cut = _cap(bound, E, B)
    records = {}
    for n in range(2, cap + 1):
        count = 0
        for k in range(1, n):
            face_ids = [",".join(str(v) for v in range(n + 1) if v != i) for i in range(n + 1)]
            have = {(tuple(E.face(e, i) for i in range(n + 1) if i != k), p.apply(e)) for e in E.simplices(n)}
            by_faces: dict = {}
            for b in B.simplices(n):
                by_faces.setdefault(tuple(B.face(b, i) for i in range(n + 1) if i != k), []).append(b)
            H = horn(n, k)
            gens = H.all_generators()
            for sol in MapSearch(H, E).solutions():
                img = dict(zip(gens, sol))
                faces = tuple(img[face_ids[i]] for i in range(n + 1) if i != k)
                for b in by_faces.get(tuple(p.apply(f) for f in faces), ()):
                    count += 1
                    if (faces, b) not in have:
                        square = (horn_inclusion(n, k), p, SimplicialMap(H, E, img, check=False), simplex_map(B, b))
                        wit = {"dimension": n, "horn": [n, k], "generator": b[0], "simplex": list(b[1])}
                        return LiftingCertificate("isofib", "no", bound, witness=wit, square=square)
        records[n] = count
    # isomorphism lifting
    J = nerve(walking_iso(), bound=cap)
    a = J.gen_simplex("a")
    pt = std_simplex(0)
    ia = SimplicialMap(pt, J, {"0": a}, check=False)
    iso_count = 0
    for e in E.simplices(0):
        top = SimplicialMap(pt, E, {"0": e}, check=False)
        for sol in MapSearch(J, B, fixed={"a": p.apply(e)}).solutions():
            bottom = SimplicialMap(J, B, dict(zip(J.all_generators(), sol)), check=False)
            iso_count += 1
            if find_lift(ia, p, top, bottom) is None:
                wit = {"dimension": 1, "iso_lift": True, "vertex": e[0]}
                return LiftingCertificate("isofib", "no", bound, witness=wit, square=(ia, p, top, bottom))
    records.setdefault(2, 0)
    records[2] += iso_count
    for n in range(2, bound + 1):
        records.setdefault(n, 0)
    if cut:
        return LiftingCertificate("isofib", "inconclusive", bound, records=records)
    exact = _is_nerve(E) and _is_nerve(B) and bound >= 3
    return LiftingCertificate("isofib", "yes", bound, exact=exact, records=records)


# -- Leibniz cotensor -------------------------------------------------------------


def leibniz_cotensor(i: SimplicialMap, p: SimplicialMap, *, dim_bound: int | None = None):
    """``E^V -> E^U x_{B^U} B^V`` for a mono ``i: U -> V`` and ``p: E -> B``.

    Returns ``(map, parts)`` where ``parts`` holds the four cotensors.
    """
    if not i.is_mono():
        raise NotAMonomorphism("Leibniz cotensor needs a monomorphism on the left")
    U, V = i.source, i.target
    E, B = p.source, p.target
    EV = mapping_space(V, E, dim_bound=dim_bound)
    EU = mapping_space(U, E, dim_bound=dim_bound)
    BV = mapping_space(V, B, dim_bound=dim_bound)
    BU = mapping_space(U, B, dim_bound=dim_bound)
    a = cotensor_map(EU, BU, post=p)
    b = cotensor_map(BV, BU, pre=i)
    Q, _, _ = pullback(a, b)
    m = pairing([cotensor_map(EV, EU, pre=i), cotensor_map(EV, BV, post=p)], Q)
    return m, {"EV": EV, "EU": EU, "BV": BV, "BU": BU, "pullback": Q}
