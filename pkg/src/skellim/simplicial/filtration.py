"""Skeletal filtration: X as a tower of cell attachments along boundaries."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import SimplicialError
from .constructions import boundary, copower, pushout, skeleton, std_simplex
from .sset import SimplicialMap, SimplicialSet


@dataclass
class Stage:
    n: int
    cells: list
    attaching: SimplicialMap  # coproduct of boundaries -> previous stage
    boundary_inclusion: SimplicialMap  # coproduct of boundaries -> coproduct of simplices
    result: SimplicialSet
    cell_leg: SimplicialMap  # coproduct of simplices -> result
    inclusion: SimplicialMap  # previous stage -> result


@dataclass
class FiltrationPresentation:
    base: SimplicialSet
    stages: list = field(default_factory=list)
    colimit_iso: SimplicialMap | None = None
    target: SimplicialSet | None = None

    def tower(self) -> list:
        return [st.inclusion for st in self.stages]

    def recompose(self) -> SimplicialSet:
        """Replay every stage pushout from the base and return the final colimit."""
        current = self.base
        for st in self.stages:
            if st.attaching.target != current:
                raise SimplicialError(f"stage {st.n} attaches to the wrong subcomplex")
            P, _, _ = pushout(st.boundary_inclusion, st.attaching, rename=_cell_name)
            if P != st.result:
                raise SimplicialError(f"stage {st.n} does not reproduce its recorded pushout")
            current = P
        return current

    def verify(self) -> bool:
        X = self.recompose()
        if X != self.target:
            return False
        iso = self.colimit_iso
        through = iso.compose(_chain_from(self, 0))
        base_ok = all(through.images[g] == self.target.gen_simplex(g) for g in self.base.all_generators())
        ident = all(iso.images[g] == self.target.gen_simplex(g) for g in self.target.all_generators())
        return base_ok and ident and iso.is_iso()


def _chain_from(F: FiltrationPresentation, k: int) -> SimplicialMap:
    start = F.base if k == 0 else F.stages[k - 1].result
    m = start.identity_map()
    for st in F.stages[k:]:
        m = st.inclusion.compose(m)
    return m


def _cell_name(gid: str) -> str:
    # top cell of the component labelled sigma is named sigma
    return gid.split(":", 1)[0]


def skeletal_filtration(X: SimplicialSet) -> FiltrationPresentation:
    base, _ = skeleton(X, 0)
    F = FiltrationPresentation(base=base, target=X)
    prev = base
    for n in range(1, X.dim + 1):
        cells = list(X.generators(n))
        if not cells:
            # nothing attached; the stage is the identity
            continue
        bd = boundary(n)
        D = std_simplex(n)
        B, _ = copower(bd, cells)
        C, _ = copower(D, cells)
        bi = SimplicialMap(B, C, {g: C.gen_simplex(g) for g in B.all_generators()}, check=False)
        bi.flags["mono"] = True
        vs = D.meta["vertex_sets"]
        images = {}
        for g in B.all_generators():
            sigma, sub = g.split(":", 1)
            images[g] = X.act(X.gen_simplex(sigma), vs[sub])
        att = SimplicialMap(B, prev, images, check=False)
        P, jC, jprev = pushout(bi, att, rename=_cell_name)
        F.stages.append(Stage(n, cells, att, bi, P, jC, jprev))
        prev = P
    F.colimit_iso = SimplicialMap(prev, X, {g: X.gen_simplex(g) for g in prev.all_generators()}, check=False)
    return F
