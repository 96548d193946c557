"""Enumeration of simplicial maps by table-driven backtracking."""
from __future__ import annotations

import random
from typing import Iterable

import numpy as np

from . import kernel
from .simplicial.sset import SimplicialSet
from .simplicial.words import surj_to_word


def search_order(S: SimplicialSet, first: Iterable[str] = ()) -> list:
    """Variable order for map search: pinned generators, then a face-connected sweep.

    Each generator is followed by its faces, and the next maximal simplex is
    taken among those sharing an already placed face, so candidates come from
    the coface index instead of a whole level.
    """
    placed: dict = {}
    cofaces: dict = {}
    for g in S.all_generators():
        for u, _ in S.faces(g):
            cofaces.setdefault(u, []).append(g)

    def close(g, out):
        stack = [g]
        while stack:
            h = stack.pop()
            if h in placed:
                continue
            placed[h] = None
            out.append(h)
            stack.extend(u for u, _ in reversed(S.faces(h)) if u not in placed)
            for u, _ in S.faces(h):
                for c in cofaces.get(u, ()):
                    if c not in placed:
                        frontier.append(c)

    frontier: list = []
    out: list = []
    for g in first:
        close(g, out)
    by_dim = sorted(S.all_generators(), key=lambda g: -S.dim_of(g))
    rest = iter(by_dim)
    while len(out) < len(by_dim):
        while frontier:
            # prefer the highest-dimensional waiting coface
            frontier.sort(key=lambda g: S.dim_of(g))
            g = frontier.pop()
            if g not in placed:
                close(_maximal_above(g, cofaces, placed), out)
                break
        else:
            for g in rest:
                if g not in placed:
                    close(g, out)
                    break
    return out


def _maximal_above(g, cofaces, placed):
    while True:
        up = [c for c in cofaces.get(g, ()) if c not in placed]
        if not up:
            return g
        g = up[0]


class MapSearch:
    """Search for maps ``S -> A`` with optional fixed images and domain filters.

    ``fixed`` pins generator images; ``domains`` restricts candidates for a
    generator to an explicit list of target simplices; ``gens_only`` restricts
    every generator to non-degenerate targets (used by isomorphism search).
    ``slots`` names generators whose images are pinned later by :meth:`refix`,
    so one compiled search serves many boundary conditions.
    """

    def __init__(
        self,
        S: SimplicialSet,
        A: SimplicialSet,
        *,
        fixed: dict | None = None,
        domains: dict | None = None,
        order: Iterable[str] | None = None,
        injective: bool = False,
        gens_only: bool = False,
        rng: random.Random | None = None,
        slots: Iterable[str] = (),
    ):
        self.S, self.A = S, A
        self.gens = S.all_generators()
        fixed = fixed or {}
        domains = domains or {}
        slots = list(slots)
        if order is None:
            order = search_order(S, first=[g for g in self.gens if g in fixed or g in slots or g in domains])
        self.order = list(order)
        if sorted(self.order) != sorted(self.gens):
            raise ValueError("search order must list every generator exactly once")
        top = max(S.dim, 0)
        self.T = T = A.tables(top)
        nv = len(self.order)
        pos = {g: p for p, g in enumerate(self.order)}
        lo = np.zeros(nv, dtype=np.int64)
        hi = np.zeros(nv, dtype=np.int64)
        mask_row = np.full(nv, -1, dtype=np.int64)
        dom_ptr = [0]
        dom_vals: list = []
        explicit_rows: list = []
        for p, g in enumerate(self.order):
            n = S.dim_of(g)
            a, b = T.range(n)
            lo[p], hi[p] = a, b
            cand = None
            if g in slots:
                cand = [a]
            elif g in fixed:
                cand = [T.index[fixed[g]]]
            elif g in domains:
                cand = [T.index[s] for s in domains[g] if len(s[1]) == n + 1]
            elif gens_only:
                cand = [T.index[A.gen_simplex(h)] for h in A.generators(n)]
            elif rng is not None:
                cand = list(range(a, b))
            if cand is not None:
                if rng is not None:
                    rng.shuffle(cand)
                mask_row[p] = len(explicit_rows)
                explicit_rows.append(cand)
                dom_vals.extend(cand)
            dom_ptr.append(len(dom_vals))
        total = len(T.simplices)
        mask = np.zeros((max(len(explicit_rows), 1), total), dtype=np.uint8)
        for r, cand in enumerate(explicit_rows):
            mask[r, cand] = 1
        # constraints: d_i(img g) == s_w(img u) for every face (u, w) of g
        per_var: list = [[] for _ in range(nv)]
        ops: list = []
        det = np.full(nv, -1, dtype=np.int64)

        def seq(codes):
            start = len(ops)
            ops.extend(codes)
            return start, len(ops)

        for g in self.order:
            n = S.dim_of(g)
            if n == 0:
                continue
            pg = pos[g]
            for i, (u, w) in enumerate(S.faces(g)):
                pu = pos[u]
                degops = [-(j + 1) for j in reversed(surj_to_word(w))]
                if pu < pg:
                    per_var[pg].append((pu, [i], degops))
                else:
                    per_var[pu].append((pg, degops, [i]))
        cons_ptr = [0]
        cons_other, opv_s, opv_e, opu_s, opu_e = [], [], [], [], []
        via = np.full(nv, -1, dtype=np.int64)
        for p in range(nv):
            for other, ov, ou in per_var[p]:
                k = len(cons_other)
                cons_other.append(other)
                s0, e0 = seq(ov)
                s1, e1 = seq(ou)
                opv_s.append(s0)
                opv_e.append(e0)
                opu_s.append(s1)
                opu_e.append(e1)
                if not ov and det[p] < 0:
                    det[p] = k
                if len(ov) == 1 and ov[0] >= 0 and via[p] < 0:
                    via[p] = k
            cons_ptr.append(len(cons_other))
        arr = lambda x: np.asarray(x if len(x) else [0], dtype=np.int64)
        self._args = (
            T.face, T.degen, nv, lo, hi, np.asarray(dom_ptr, dtype=np.int64), arr(dom_vals), mask, mask_row, det,
            np.asarray(cons_ptr, dtype=np.int64), arr(cons_other), arr(opv_s), arr(opv_e), arr(opu_s), arr(opu_e),
            arr(ops), *T.cofaces, via, bool(injective),
        )
        self._perm = [pos[g] for g in self.gens]
        self._slot_rows = {g: (int(mask_row[pos[g]]), dom_ptr[pos[g]]) for g in slots}
        self._current = {g: a for g, a in ((g, lo[pos[g]]) for g in slots)}

    def refix(self, fixed: dict) -> "MapSearch":
        """Pin the slot generators to new images (simplices of matching dimension)."""
        mask, dom_vals = self._args[7], self._args[6]
        for g, s in fixed.items():
            row, ptr = self._slot_rows[g]
            x = self.T.index[s]
            mask[row, self._current[g]] = 0
            mask[row, x] = 1
            dom_vals[ptr] = x
            self._current[g] = x
        return self

    def raw(self, limit: int | None = None) -> list:
        """Solutions as tuples of table indices in generator order."""
        sols = kernel.search(*self._args, -1 if limit is None else int(limit))
        return list(map(tuple, sols[:, self._perm].tolist()))

    def raw_array(self, limit: int | None = None) -> np.ndarray:
        """Solutions as an ``(count, generators)`` array of table indices."""
        sols = kernel.search(*self._args, -1 if limit is None else int(limit))
        return np.ascontiguousarray(sols[:, self._perm])

    def solutions(self, limit: int | None = None) -> list:
        """Solutions as tuples of target simplices in ``S.all_generators()`` order."""
        simp = self.T.simplices
        return [tuple(simp[i] for i in sol) for sol in self.raw(limit)]

    def first(self):
        sols = self.solutions(limit=1)
        return sols[0] if sols else None

    def as_images(self, sol) -> dict:
        return dict(zip(self.gens, sol))
