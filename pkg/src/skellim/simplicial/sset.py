"""Finite simplicial sets presented by non-degenerate generators."""
from __future__ import annotations

from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from ..errors import BoundExceeded, SimplicialError
from .words import codegeneracy, coface, compose, identity, surjections

Simplex = tuple  # (generator id, surjection)


class SimplicialSet:
    """Immutable finite simplicial set.

    ``generators[n]`` lists the non-degenerate ``n``-simplices in a fixed order;
    ``faces[g]`` gives the ``n+1`` faces of an ``n``-dimensional generator as
    simplices in normal form.  ``bound`` is ``None`` for an honest finite
    simplicial set and an integer when the value is a truncation known to be
    complete only up to that dimension.
    """

    __slots__ = ("_gens", "_faces", "_dim_of", "bound", "name", "_cache", "meta")

    def __init__(
        self,
        generators: Sequence[Sequence[str]],
        faces: dict,
        *,
        bound: int | None = None,
        name: str | None = None,
        check: bool = True,
        meta: dict | None = None,
    ):
        gens = [tuple(level) for level in generators]
        while gens and not gens[-1]:
            gens.pop()
        self._gens = tuple(gens)
        self._dim_of = {}
        for n, level in enumerate(self._gens):
            for g in level:
                if g in self._dim_of:
                    raise SimplicialError(f"duplicate generator id {g!r}")
                self._dim_of[g] = n
        self._faces = {g: tuple((f[0], tuple(f[1])) for f in faces.get(g, ())) for g in self._dim_of}
        self.bound = bound
        self.name = name
        self.meta = dict(meta or {})
        self._cache = {}
        if check:
            self.validate()

    # -- basic structure -------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self._gens) - 1

    def generators(self, n: int) -> tuple:
        return self._gens[n] if 0 <= n < len(self._gens) else ()

    def all_generators(self) -> list:
        return [g for level in self._gens for g in level]

    def dim_of(self, g: str) -> int:
        return self._dim_of[g]

    def __contains__(self, g) -> bool:
        return g in self._dim_of

    def faces(self, g: str) -> tuple:
        return self._faces[g]

    def counts(self) -> tuple:
        return tuple(len(level) for level in self._gens)

    def nondegenerate(self, n: int) -> list:
        return list(self.generators(n))

    def is_empty(self) -> bool:
        return not self._gens

    def gen_simplex(self, g: str) -> Simplex:
        return (g, identity(self._dim_of[g]))

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        tr = f", bound={self.bound}" if self.bound is not None else ""
        return f"<SimplicialSet{label} counts={self.counts()}{tr}>"

    def __eq__(self, other):
        if not isinstance(other, SimplicialSet):
            return NotImplemented
        return self._gens == other._gens and self._faces == other._faces

    def __hash__(self):
        return hash(self._gens)

    # -- simplicial operators -------------------------------------------
    def act(self, s: Simplex, mu) -> Simplex:
        """Apply the simplicial operator of a monotone map ``mu: [m] -> [n]``."""
        g, sigma = s
        nu = tuple(sigma[i] for i in mu)
        faces = self._faces
        while True:
            k = self._dim_of[g]
            present = set(nu)
            if len(present) == k + 1:
                return (g, nu)
            j = max(v for v in range(k + 1) if v not in present)
            h, w = faces[g][j]
            nu = tuple(w[v if v < j else v - 1] for v in nu)
            g = h

    def face(self, s: Simplex, i: int) -> Simplex:
        n = len(s[1]) - 1
        if n > 0 and s[1][-1] == n:
            return self._faces[s[0]][i]
        return self.act(s, coface(n, i))

    def degen(self, s: Simplex, j: int) -> Simplex:
        n = len(s[1]) - 1
        return (s[0], compose(s[1], codegeneracy(n, j)))

    def apply_surj(self, s: Simplex, surj) -> Simplex:
        return (s[0], compose(s[1], surj))

    def vertices(self, s: Simplex) -> tuple:
        return tuple(self.act(s, (i,))[0] for i in range(len(s[1])))

    def simplex_dim(self, s: Simplex) -> int:
        return len(s[1]) - 1

    def is_degenerate(self, s: Simplex) -> bool:
        return len(set(s[1])) != len(s[1])

    def simplices(self, n: int) -> list:
        """All ``n``-simplices (degenerate included) in canonical order."""
        key = ("simplices", n)
        if key not in self._cache:
            self._check_bound(n)
            out = []
            for k in range(min(n, self.dim) + 1):
                surs = surjections(n, k)
                for g in self._gens[k]:
                    out.extend((g, s) for s in surs)
            self._cache[key] = out
        return self._cache[key]

    def _check_bound(self, n: int):
        if self.bound is not None and n > self.bound:
            raise BoundExceeded(f"{self!r} is only known up to dimension {self.bound}; requested {n}")

    # -- validation ------------------------------------------------------
    def validate(self):
        for n, level in enumerate(self._gens):
            for g in level:
                fs = self._faces[g]
                if n == 0:
                    if fs:
                        raise SimplicialError(f"vertex {g!r} carries faces")
                    continue
                if len(fs) != n + 1:
                    raise SimplicialError(f"generator {g!r} of dimension {n} needs {n + 1} faces")
                for i, (t, w) in enumerate(fs):
                    if t not in self._dim_of:
                        raise SimplicialError(f"face {i} of {g!r} references unknown {t!r}")
                    k = self._dim_of[t]
                    if k >= n or len(w) != n or w[-1] != k or any(b - a not in (0, 1) for a, b in zip(w, w[1:])) or w[0] != 0:
                        raise SimplicialError(f"face {i} of {g!r} does not realise dimension {n - 1}")
        for n in range(2, len(self._gens)):
            for g in self._gens[n]:
                fs = self._faces[g]
                for j in range(n + 1):
                    for i in range(j):
                        a = self.act(fs[j], coface(n - 1, i))
                        b = self.act(fs[i], coface(n - 1, j - 1))
                        if a != b:
                            raise SimplicialError(
                                f"simplicial identity d_{i} d_{j} = d_{j - 1} d_{i} fails on {g!r}"
                            )

    # -- integer tables --------------------------------------------------
    def tables(self, top: int) -> "Tables":
        key = ("tables", top)
        if key not in self._cache:
            self._cache[key] = Tables(self, top)
        return self._cache[key]

    # -- derived objects --------------------------------------------------
    def relabel(self, mapping: Callable[[str], str] | dict, name: str | None = None) -> "SimplicialSet":
        f = mapping.__getitem__ if isinstance(mapping, dict) else mapping
        gens = [[f(g) for g in level] for level in self._gens]
        faces = {f(g): tuple((f(t), w) for t, w in fs) for g, fs in self._faces.items()}
        return SimplicialSet(gens, faces, bound=self.bound, name=name or self.name, check=False)

    def identity_map(self) -> "SimplicialMap":
        return SimplicialMap(self, self, {g: self.gen_simplex(g) for g in self._dim_of}, check=False)

    # -- builder for sets given levelwise --------------------------------
    @classmethod
    def from_levels(
        cls,
        levels: Sequence[Iterable[Hashable]],
        face: Callable,
        degen: Callable,
        *,
        gen_id: Callable | None = None,
        key_dim: Callable | None = None,
        bound: int | None = None,
        name: str | None = None,
        check: bool = False,
    ) -> "SimplicialSet":
        """Build from an explicit enumeration of all simplices up to ``len(levels)-1``.

        ``face(key, i)`` and ``degen(key, j)`` must return keys of the adjacent
        levels.  The built set remembers ``key_nf`` (key -> normal form) and
        ``gen_key`` (generator -> key) in ``meta``.  With ``key_dim`` the
        normal form of degenerate keys above the enumerated levels can still be
        computed (see :meth:`key_nf`).
        """
        nf: dict = {}
        gen_key: dict = {}
        gens: list = []
        faces: dict = {}
        for n, keys in enumerate(levels):
            level = []
            for key in keys:
                if n > 0:
                    found = None
                    for j in range(n):
                        y = face(key, j)
                        if degen(y, j) == key:
                            found = (y, j)
                            break
                    if found is not None:
                        y, j = found
                        g, tau = nf[y]
                        nf[key] = (g, compose(tau, codegeneracy(n - 1, j)))
                        continue
                gid = gen_id(n, len(level), key) if gen_id else f"{n}:{len(level)}"
                if n > 0:
                    faces[gid] = tuple(nf[face(key, i)] for i in range(n + 1))
                nf[key] = (gid, identity(n))
                gen_key[gid] = key
                level.append(gid)
            gens.append(level)
        out = cls(gens, faces, bound=bound, name=name, check=check)
        # keep trailing empty levels out of dim but remember the computed height
        out.meta["key_nf"] = nf
        out.meta["gen_key"] = gen_key
        out.meta["levels"] = len(levels) - 1
        out.meta["key_ops"] = (face, degen, key_dim)
        return out

    def key_nf(self, key) -> Simplex:
        table = self.meta["key_nf"]
        if key in table:
            return table[key]
        face, degen, key_dim = self.meta["key_ops"]
        if key_dim is None:
            raise KeyError(key)
        n = key_dim(key)
        if n <= self.meta["levels"]:
            raise SimplicialError(f"key {key!r} is not a simplex")
        self._check_bound(n)
        for j in range(n):
            y = face(key, j)
            if degen(y, j) == key:
                g, tau = self.key_nf(y)
                return (g, compose(tau, codegeneracy(n - 1, j)))
        raise BoundExceeded(f"non-degenerate simplex in dimension {n} beyond the computed levels")

    def key_of(self, s: Simplex):
        """Inverse of ``key_nf`` for sets built with :meth:`from_levels`."""
        inv = self._cache.get("key_inv")
        if inv is None:
            inv = {v: k for k, v in self.meta["key_nf"].items()}
            self._cache["key_inv"] = inv
        return inv[s]


class Tables:
    """All simplices up to ``top`` with integer face/degeneracy tables."""

    def __init__(self, X: SimplicialSet, top: int):
        X._check_bound(top)
        self.top = top
        self.simplices: list = []
        self.offset = [0]
        for n in range(top + 1):
            self.simplices.extend(X.simplices(n))
            self.offset.append(len(self.simplices))
        self.index = {s: i for i, s in enumerate(self.simplices)}
        total = len(self.simplices)
        width = top + 2
        self.face = np.full((total, width), -1, dtype=np.int64)
        self.degen = np.full((total, width), -1, dtype=np.int64)
        self._cof = None
        idx = self.index
        for n in range(top + 1):
            for p in range(self.offset[n], self.offset[n + 1]):
                s = self.simplices[p]
                if n > 0:
                    for i in range(n + 1):
                        self.face[p, i] = idx[X.face(s, i)]
                if n < top:
                    for j in range(n + 1):
                        self.degen[p, j] = idx[X.degen(s, j)]

    @property
    def cofaces(self) -> tuple:
        """CSR index ``(ptr, vals)``: row ``i`` lists the simplices ``y`` with ``d_i y = x``."""
        if self._cof is None:
            total, width = self.face.shape
            ptr = np.zeros((width, total + 1), dtype=np.int64)
            vals = np.full((width, max(total, 1)), -1, dtype=np.int64)
            for i in range(width):
                col = self.face[:, i]
                ys = np.nonzero(col >= 0)[0]
                xs = col[ys]
                order = np.argsort(xs, kind="stable")
                vals[i, : len(ys)] = ys[order]
                ptr[i, 1:] = np.cumsum(np.bincount(xs, minlength=total))
            self._cof = (ptr, vals)
        return self._cof

    def range(self, n: int) -> tuple:
        return self.offset[n], self.offset[n + 1]


class SimplicialMap:
    """Assignment of generator images commuting with faces."""

    __slots__ = ("source", "target", "images", "flags")

    def __init__(self, source: SimplicialSet, target: SimplicialSet, images: dict, *, check: bool = True):
        self.source = source
        self.target = target
        self.images = {g: (t, tuple(w)) for g, (t, w) in images.items()}
        self.flags: dict = {}
        if check:
            self.validate()

    def validate(self):
        S, T = self.source, self.target
        for g in S.all_generators():
            if g not in self.images:
                raise SimplicialError(f"no image for generator {g!r}")
            t, w = self.images[g]
            n = S.dim_of(g)
            if t not in T or len(w) != n + 1 or w[-1] != T.dim_of(t):
                raise SimplicialError(f"image of {g!r} has the wrong dimension")
        for g in S.all_generators():
            n = S.dim_of(g)
            for i, f in enumerate(S.faces(g)):
                if self.apply(f) != T.face(self.images[g], i):
                    raise SimplicialError(f"map does not commute with d_{i} on {g!r}")

    def apply(self, s: Simplex) -> Simplex:
        t, tau = self.images[s[0]]
        return (t, compose(tau, s[1]))

    def __call__(self, s: Simplex) -> Simplex:
        return self.apply(s)

    def compose(self, first: "SimplicialMap") -> "SimplicialMap":
        """``self o first``."""
        return SimplicialMap(first.source, self.target, {g: self.apply(s) for g, s in first.images.items()}, check=False)

    def is_mono(self) -> bool:
        if "mono" not in self.flags:
            seen = set()
            ok = True
            for t, w in self.images.values():
                if len(set(w)) != len(w) or t in seen:
                    ok = False
                    break
                seen.add(t)
            self.flags["mono"] = ok
        return self.flags["mono"]

    def is_iso(self) -> bool:
        return self.is_mono() and len(self.images) == len(self.target.all_generators())

    def inverse(self) -> "SimplicialMap":
        if not self.is_iso():
            raise SimplicialError("map is not an isomorphism")
        inv = {t: (g, w) for g, (t, w) in self.images.items()}
        return SimplicialMap(self.target, self.source, inv, check=False)

    def __eq__(self, other):
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.images == other.images

    def __hash__(self):
        return hash(tuple(sorted(self.images.items())))

    def __repr__(self):
        return f"<SimplicialMap {self.source!r} -> {self.target!r}>"
