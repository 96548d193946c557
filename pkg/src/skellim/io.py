"""Versioned JSON schemas and DOT export.

Every document carries a ``"version"`` key; unknown versions are rejected.
Serialization is deterministic (insertion order, fixed indentation) so a
load/dump round trip reproduces the input bytes.
"""
from __future__ import annotations

import json

from .category import CategoryError, FiniteCategory
from .errors import SchemaError, SimplicialError
from .simplicial.sset import SimplicialMap, SimplicialSet
from .simplicial.words import surj_to_word, word_to_surj


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None


def expect_version(doc, version: str, path: str = "$"):
    if not isinstance(doc, dict):
        raise SchemaError("expected an object", path)
    got = doc.get("version")
    if got != version:
        raise SchemaError(f"expected version {version!r}, got {got!r}", path + ".version")


def _require(doc, key, kind, path):
    if key not in doc:
        raise SchemaError(f"missing key {key!r}", path)
    val = doc[key]
    if not isinstance(val, kind):
        raise SchemaError(f"{key!r} has the wrong type", f"{path}.{key}")
    return val


# -- simplices ---------------------------------------------------------------


def simplex_to_json(s) -> dict:
    return {"t": s[0], "w": list(surj_to_word(s[1]))}


def simplex_from_json(doc, dims: dict, path: str):
    if not isinstance(doc, dict):
        raise SchemaError("simplex must be an object", path)
    t = _require(doc, "t", str, path)
    w = _require(doc, "w", list, path)
    if t not in dims:
        raise SchemaError(f"unknown generator {t!r}", path + ".t")
    try:
        return (t, word_to_surj(tuple(w), dims[t]))
    except (ValueError, TypeError) as exc:
        raise SchemaError(str(exc), path + ".w") from None


# -- simplicial sets ---------------------------------------------------------


def sset_to_json(X: SimplicialSet) -> dict:
    doc = {"version": "sset/1", "dim": X.dim, "generators": {}}
    for n in range(X.dim + 1):
        doc["generators"][str(n)] = [
            {"id": g, "faces": [simplex_to_json(f) for f in X.faces(g)]} for g in X.generators(n)
        ]
    if X.bound is not None:
        doc["bound"] = X.bound
    if X.name:
        doc["name"] = X.name
    return doc


def sset_from_json(doc, path: str = "$") -> SimplicialSet:
    expect_version(doc, "sset/1", path)
    dim = _require(doc, "dim", int, path)
    levels = _require(doc, "generators", dict, path)
    gens: list = []
    dims: dict = {}
    raw: dict = {}
    for n in range(dim + 1):
        p = f"{path}.generators.{n}"
        entries = levels.get(str(n), [])
        if not isinstance(entries, list):
            raise SchemaError("level must be a list", p)
        level = []
        for k, e in enumerate(entries):
            pe = f"{p}[{k}]"
            if not isinstance(e, dict):
                raise SchemaError("generator must be an object", pe)
            gid = _require(e, "id", str, pe)
            if gid in dims:
                raise SchemaError(f"duplicate generator id {gid!r}", pe + ".id")
            dims[gid] = n
            raw[gid] = (_require(e, "faces", list, pe), pe)
            level.append(gid)
        gens.append(level)
    extra = set(levels) - {str(n) for n in range(dim + 1)}
    if extra:
        raise SchemaError(f"levels {sorted(extra)} exceed dim {dim}", path + ".generators")
    faces = {}
    for gid, (fs, pe) in raw.items():
        faces[gid] = tuple(simplex_from_json(f, dims, f"{pe}.faces[{i}]") for i, f in enumerate(fs))
    bound = doc.get("bound")
    if bound is not None and not isinstance(bound, int):
        raise SchemaError("bound must be an integer", path + ".bound")
    try:
        return SimplicialSet(gens, faces, bound=bound, name=doc.get("name"))
    except SimplicialError as exc:
        raise SchemaError(str(exc), path) from None


def map_to_json(f: SimplicialMap) -> dict:
    return {
        "version": "map/1",
        "source": sset_to_json(f.source),
        "target": sset_to_json(f.target),
        "images": {g: simplex_to_json(f.images[g]) for g in f.source.all_generators()},
    }


def map_from_json(doc, path: str = "$") -> SimplicialMap:
    expect_version(doc, "map/1", path)
    S = sset_from_json(_require(doc, "source", dict, path), path + ".source")
    T = sset_from_json(_require(doc, "target", dict, path), path + ".target")
    imgs = _require(doc, "images", dict, path)
    dims = {g: T.dim_of(g) for g in T.all_generators()}
    images = {g: simplex_from_json(v, dims, f"{path}.images.{g}") for g, v in imgs.items()}
    try:
        return SimplicialMap(S, T, images)
    except SimplicialError as exc:
        raise SchemaError(str(exc), path + ".images") from None


# -- categories --------------------------------------------------------------


def cat_to_json(C: FiniteCategory) -> dict:
    doc = {
        "version": "cat/1",
        "objects": list(C.objects),
        "morphisms": [{"name": m, "src": s, "tgt": t} for m, (s, t) in C.morphisms.items()],
        "identities": dict(C.identities),
        "compose": [[g, f, h] for (g, f), h in C.table.items()],
    }
    if C.name:
        doc["name"] = C.name
    return doc


def cat_from_json(doc, path: str = "$") -> FiniteCategory:
    expect_version(doc, "cat/1", path)
    objects = _require(doc, "objects", list, path)
    mors = {}
    for k, m in enumerate(_require(doc, "morphisms", list, path)):
        pm = f"{path}.morphisms[{k}]"
        if not isinstance(m, dict):
            raise SchemaError("morphism must be an object", pm)
        mors[_require(m, "name", str, pm)] = (_require(m, "src", str, pm), _require(m, "tgt", str, pm))
    ids = _require(doc, "identities", dict, path)
    table = {}
    for k, row in enumerate(_require(doc, "compose", list, path)):
        if not (isinstance(row, list) and len(row) == 3):
            raise SchemaError("compose entries are [g, f, g o f]", f"{path}.compose[{k}]")
        table[(row[0], row[1])] = row[2]
    try:
        return FiniteCategory(objects, mors, ids, table, name=doc.get("name"))
    except CategoryError as exc:
        raise SchemaError(str(exc), path) from None


# -- DOT ---------------------------------------------------------------------


def to_dot(X: SimplicialSet, name: str = "X") -> str:
    """1-skeleton as a digraph; higher cells are listed in comments."""
    q = lambda s: json.dumps(s, ensure_ascii=False)
    lines = [f"digraph {q(name)} {{"]
    for v in X.generators(0):
        lines.append(f"  {q(v)};")
    for e in X.generators(1):
        (tgt, _), (src, _) = X.faces(e)
        lines.append(f"  {q(src)} -> {q(tgt)} [label={q(e)}];")
    for n in range(2, X.dim + 1):
        for g in X.generators(n):
            lines.append(f"  // {n}-cell {g}")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- diagrams ----------------------------------------------------------------


def _images_to_json(f: SimplicialMap) -> dict:
    return {g: simplex_to_json(f.images[g]) for g in f.source.all_generators()}


def _images_from_json(doc, S: SimplicialSet, T: SimplicialSet, path: str) -> SimplicialMap:
    if not isinstance(doc, dict):
        raise SchemaError("images must be an object", path)
    dims = {g: T.dim_of(g) for g in T.all_generators()}
    images = {g: simplex_from_json(v, dims, f"{path}.{g}") for g, v in doc.items()}
    try:
        return SimplicialMap(S, T, images)
    except (SimplicialError, KeyError) as exc:
        raise SchemaError(f"not a simplicial map: {exc}", path) from None


def diag_to_json(d) -> dict:
    """``diag/1`` for a diagram in a finite category (shape and category embedded)."""
    return {
        "version": "diag/1",
        "kind": "category",
        "shape": sset_to_json(d.X),
        "category": cat_to_json(d.C),
        "objects": dict(d.obj),
        "morphisms": dict(d.mor),
    }


def diag_from_json(doc, *, shape: SimplicialSet | None = None, category: FiniteCategory | None = None, path: str = "$"):
    """Read ``diag/1``; ``shape``/``category`` supply what the document does not embed."""
    from .limit_engine import DiagramInCat

    expect_version(doc, "diag/1", path)
    if doc.get("kind", "category") != "category":
        raise SchemaError("expected a diagram in a category", path + ".kind")
    X = sset_from_json(doc["shape"], path + ".shape") if "shape" in doc else shape
    C = cat_from_json(doc["category"], path + ".category") if "category" in doc else category
    if X is None or C is None:
        raise SchemaError("diagram needs a shape and a category", path)
    obj = _require(doc, "objects", dict, path)
    mor = _require(doc, "morphisms", dict, path)
    try:
        return DiagramInCat(X, C, dict(obj), dict(mor))
    except Exception as exc:  # noqa: BLE001 - reported with its location
        raise SchemaError(str(exc), path) from None


def _index_to_json(idx) -> dict:
    return {
        "objects": list(idx.objects),
        "generators": {g: [s, t] for g, (s, t) in idx.generators.items()},
        "relations": [[list(a), list(b)] for a, b in idx.relations],
    }


def _index_from_json(doc, path):
    from .coherent_weights import IndexCategory

    if not isinstance(doc, dict):
        raise SchemaError("index must be an object", path)
    objs = _require(doc, "objects", list, path)
    gens = _require(doc, "generators", dict, path)
    rels = doc.get("relations", [])
    try:
        return IndexCategory(tuple(objs), {g: tuple(v) for g, v in gens.items()}, tuple((tuple(a), tuple(b)) for a, b in rels))
    except Exception as exc:  # noqa: BLE001
        raise SchemaError(str(exc), path) from None


def sdiag_to_json(F) -> dict:
    """``diag/1`` of kind ``sset``: a diagram of simplicial sets over an index."""
    return {
        "version": "diag/1",
        "kind": "sset",
        "index": _index_to_json(F.index),
        "values": {o: sset_to_json(F.values[o]) for o in F.index.objects},
        "maps": {g: _images_to_json(F.maps[g]) for g in F.index.generators},
    }


def sdiag_from_json(doc, path: str = "$"):
    from .coherent_weights import SsetDiagram

    expect_version(doc, "diag/1", path)
    if doc.get("kind") != "sset":
        raise SchemaError("expected a diagram of simplicial sets", path + ".kind")
    idx = _index_from_json(_require(doc, "index", dict, path), path + ".index")
    vals = _require(doc, "values", dict, path)
    values = {o: sset_from_json(vals[o], f"{path}.values.{o}") for o in idx.objects if o in vals}
    if len(values) != len(idx.objects):
        raise SchemaError("a value is missing", path + ".values")
    maps_doc = _require(doc, "maps", dict, path)
    maps = {}
    for g, (s, t) in idx.generators.items():
        if g not in maps_doc:
            raise SchemaError(f"map {g!r} is missing", path + ".maps")
        maps[g] = _images_from_json(maps_doc[g], values[s], values[t], f"{path}.maps.{g}")
    try:
        return SsetDiagram(idx, values, maps)
    except Exception as exc:  # noqa: BLE001
        raise SchemaError(str(exc), path) from None


# -- weights -----------------------------------------------------------------


def weight_to_json(W) -> dict:
    doc = {
        "version": "weight/1",
        "orientation": W.orientation,
        "index": _index_to_json(W.index),
        "values": {o: sset_to_json(W.values[o]) for o in W.index.objects},
        "action": {g: _images_to_json(W.action[g]) for g in W.index.generators},
    }
    if W.cells is not None:
        doc["cells"] = [
            {"object": c.obj, "n": c.n, "attaching": {g: simplex_to_json(s) for g, s in c.attaching.items()}, "top": c.top}
            for c in W.cells
        ]
    if "flag" in W.meta:
        doc["flag"] = W.meta["flag"]
    return doc


def weight_from_json(doc, path: str = "$"):
    from .coherent_weights import Cell, Weight

    expect_version(doc, "weight/1", path)
    idx = _index_from_json(_require(doc, "index", dict, path), path + ".index")
    vals = _require(doc, "values", dict, path)
    values = {o: sset_from_json(vals[o], f"{path}.values.{o}") for o in idx.objects if o in vals}
    if len(values) != len(idx.objects):
        raise SchemaError("a value is missing", path + ".values")
    act = _require(doc, "action", dict, path)
    action = {}
    for g, (s, t) in idx.generators.items():
        if g not in act:
            raise SchemaError(f"action of {g!r} is missing", path + ".action")
        action[g] = _images_from_json(act[g], values[s], values[t], f"{path}.action.{g}")
    cells = None
    if "cells" in doc:
        cells = []
        for k, c in enumerate(doc["cells"]):
            pc = f"{path}.cells[{k}]"
            o = _require(c, "object", str, pc)
            if o not in values:
                raise SchemaError(f"unknown object {o!r}", pc + ".object")
            dims = {g: values[o].dim_of(g) for g in values[o].all_generators()}
            att = {g: simplex_from_json(v, dims, f"{pc}.attaching.{g}") for g, v in _require(c, "attaching", dict, pc).items()}
            cells.append(Cell(o, _require(c, "n", int, pc), att, _require(c, "top", str, pc)))
    try:
        W = Weight(idx, values, action, cells, orientation=doc.get("orientation", "covariant"))
    except Exception as exc:  # noqa: BLE001
        raise SchemaError(str(exc), path) from None
    if "flag" in doc:
        W.meta["flag"] = doc["flag"]
    return W
