"""Finite 1-categories given by composition tables."""
from __future__ import annotations

from itertools import product as iproduct
from typing import Callable, Iterable, Sequence

from .errors import SkellimError


class CategoryError(SkellimError):
    pass


class FiniteCategory:
    """A finite category: objects, typed morphisms, identities and a full composition table.

    ``compose[(g, f)]`` is ``g o f`` (``f`` first).  Associativity and unit laws are
    checked exhaustively on construction unless ``check=False``.
    """

    def __init__(
        self,
        objects: Sequence[str],
        morphisms: dict,
        identities: dict,
        compose: dict,
        *,
        name: str | None = None,
        check: bool = True,
    ):
        self.objects = tuple(objects)
        self.morphisms = {m: (s, t) for m, (s, t) in morphisms.items()}
        self.identities = dict(identities)
        self.table = dict(compose)
        self.name = name
        self._hom = {(a, b): [] for a in self.objects for b in self.objects}
        for m, (s, t) in self.morphisms.items():
            self._hom[(s, t)].append(m)
        self._hom = {k: tuple(v) for k, v in self._hom.items()}
        self._obj_index = {o: i for i, o in enumerate(self.objects)}
        self._ids = set(self.identities.values())
        if check:
            self.validate()

    # -- accessors ------------------------------------------------------
    def src(self, m: str) -> str:
        return self.morphisms[m][0]

    def tgt(self, m: str) -> str:
        return self.morphisms[m][1]

    def hom(self, a: str, b: str) -> tuple:
        return self._hom[(a, b)]

    def identity(self, a: str) -> str:
        return self.identities[a]

    def is_identity(self, m: str) -> bool:
        return m in self._ids

    def comp(self, g: str, f: str) -> str:
        """``g o f``."""
        try:
            return self.table[(g, f)]
        except KeyError:
            raise CategoryError(f"{g!r} o {f!r} is not composable") from None

    def comp_chain(self, chain: Iterable[str], start: str) -> str:
        out = self.identity(start)
        for f in chain:
            out = self.comp(f, out)
        return out

    def obj_index(self, a: str) -> int:
        return self._obj_index[a]

    def __len__(self):
        return len(self.objects)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<FiniteCategory{label} |ob|={len(self.objects)} |mor|={len(self.morphisms)}>"

    def __eq__(self, other):
        if not isinstance(other, FiniteCategory):
            return NotImplemented
        return (self.objects, self.morphisms, self.identities, self.table) == (
            other.objects,
            other.morphisms,
            other.identities,
            other.table,
        )

    def __hash__(self):
        return hash((self.objects, len(self.morphisms)))

    # -- checks ---------------------------------------------------------
    def validate(self):
        for a in self.objects:
            i = self.identities.get(a)
            if i is None or self.morphisms.get(i) != (a, a):
                raise CategoryError(f"object {a!r} lacks an identity")
        for m, (s, t) in self.morphisms.items():
            if s not in self._obj_index or t not in self._obj_index:
                raise CategoryError(f"morphism {m!r} has unknown endpoints")
            if self.table.get((m, self.identities[s])) != m or self.table.get((self.identities[t], m)) != m:
                raise CategoryError(f"unit law fails for {m!r}")
        for f, (a, b) in self.morphisms.items():
            for g in self.morphisms:
                if self.morphisms[g][0] != b:
                    continue
                h = self.table.get((g, f))
                if h is None or self.morphisms.get(h) != (a, self.morphisms[g][1]):
                    raise CategoryError(f"composite {g!r} o {f!r} missing or mistyped")
        for f, (a, b) in self.morphisms.items():
            for g in self._out(b):
                gf = self.table[(g, f)]
                for h in self._out(self.morphisms[g][1]):
                    if self.table[(h, gf)] != self.table[(self.table[(h, g)], f)]:
                        raise CategoryError(f"associativity fails on {h!r}, {g!r}, {f!r}")

    def _out(self, a: str):
        return [m for b in self.objects for m in self._hom[(a, b)]]

    def out_of(self, a: str) -> list:
        return self._out(a)

    def is_poset(self) -> bool:
        if any(len(v) > 1 for v in self._hom.values()):
            return False
        return all(not (self._hom[(a, b)] and self._hom[(b, a)]) for a in self.objects for b in self.objects if a != b)

    def leq(self, a: str, b: str) -> bool:
        return bool(self._hom[(a, b)])

    def has_nontrivial_cycles(self) -> bool:
        """True when some chain of non-identity morphisms returns to its start."""
        adj = {a: {self.tgt(m) for m in self._out(a) if not self.is_identity(m)} for a in self.objects}
        state = {}

        def visit(a):
            state[a] = 1
            for b in adj[a]:
                if state.get(b) == 1 or (b not in state and visit(b)):
                    return True
            state[a] = 2
            return False

        return any(a not in state and visit(a) for a in self.objects) or any(
            not self.is_identity(m) for a in self.objects for m in self._hom[(a, a)]
        )

    # -- constructions ----------------------------------------------------
    def opposite(self) -> "FiniteCategory":
        mors = {m: (t, s) for m, (s, t) in self.morphisms.items()}
        table = {(f, g): h for (g, f), h in self.table.items()}
        name = f"{self.name}^op" if self.name else None
        return FiniteCategory(self.objects, mors, self.identities, table, name=name, check=False)

    def product(self, other: "FiniteCategory") -> "FiniteCategory":
        objs = [f"({a},{b})" for a, b in iproduct(self.objects, other.objects)]
        mors, ids, table = {}, {}, {}
        name = lambda f, g: f"({f},{g})"
        for f, (a, b) in self.morphisms.items():
            for g, (c, d) in other.morphisms.items():
                mors[name(f, g)] = (f"({a},{c})", f"({b},{d})")
        for a in self.objects:
            for c in other.objects:
                ids[f"({a},{c})"] = name(self.identities[a], other.identities[c])
        for (f2, f1), f in self.table.items():
            for (g2, g1), g in other.table.items():
                table[(name(f2, g2), name(f1, g1))] = name(f, g)
        return FiniteCategory(objs, mors, ids, table, check=False)

    @classmethod
    def from_poset(cls, elements: Sequence[str], leq: Callable[[str, str], bool], *, name=None, check=True):
        """Category of a finite poset; morphisms are named ``'a->b'``."""
        elements = [str(e) for e in elements]
        mors, ids, table = {}, {}, {}
        order = [(a, b) for a in elements for b in elements if a == b or leq(a, b)]
        rel = set(order)
        for a, b in order:
            mors[f"{a}->{b}"] = (a, b)
        for a in elements:
            ids[a] = f"{a}->{a}"
        for a, b in order:
            for c in elements:
                if (b, c) in rel:
                    if (a, c) not in rel:
                        raise CategoryError("order relation is not transitive")
                    table[(f"{b}->{c}", f"{a}->{b}")] = f"{a}->{c}"
        return cls(elements, mors, ids, table, name=name, check=check)

    @classmethod
    def from_group(cls, elements: Sequence[str], mult: Callable[[str, str], str], unit: str, *, obj="*", name=None):
        """One-object category of a finite group (or monoid) with ``mult(g, f) = g*f``."""
        elements = [str(e) for e in elements]
        mors = {g: (obj, obj) for g in elements}
        table = {(g, f): mult(g, f) for g in elements for f in elements}
        return cls([obj], mors, {obj: unit}, table, name=name)


def cyclic_group(n: int) -> FiniteCategory:
    els = [f"g{k}" for k in range(n)]
    return FiniteCategory.from_group(els, lambda a, b: f"g{(int(a[1:]) + int(b[1:])) % n}", "g0", name=f"Z/{n}")
