"""Command-line front end.

Exit codes: 0 yes / success, 1 no (a witness is printed), 2 inconclusive at
the bound, 3 usage, schema or computation errors.
"""
from __future__ import annotations

import argparse
import os
import re
import sys

from . import io
from .category import FiniteCategory
from .config import RunConfig
from .errors import SkellimError

EXIT_ERROR = 3


class _Parser(argparse.ArgumentParser):
    # argparse would use 2, which the check contract reserves for "inconclusive"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


# -- input / output ----------------------------------------------------------


_BUILTIN = re.compile(r"^(std|boundary|horn|point|empty)(?::(\d+))?(?::(\d+))?$")


def _read_doc(path: str):
    if path == "-":
        return io.loads(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return io.loads(fh.read())


def _builtin(spec: str):
    from .simplicial import constructions as K

    m = _BUILTIN.match(spec)
    if not m:
        return None
    kind, a, b = m.group(1), m.group(2), m.group(3)
    if kind == "point":
        return K.point()
    if kind == "empty":
        return K.empty()
    if a is None:
        raise SkellimError(f"{kind} needs a dimension, e.g. {kind}:2")
    if kind == "std":
        return K.std_simplex(int(a))
    if kind == "boundary":
        return K.boundary(int(a))
    if b is None:
        raise SkellimError("horn needs a dimension and an index, e.g. horn:2:1")
    return K.horn(int(a), int(b))


def load_sset(arg: str):
    """A ``sset/1`` file, ``-`` for stdin, or a builtin such as ``std:2`` or ``horn:2:1``."""
    if arg != "-" and not os.path.exists(arg):
        X = _builtin(arg)
        if X is not None:
            return X
    return io.sset_from_json(_read_doc(arg))


def load_map(arg: str):
    return io.map_from_json(_read_doc(arg))


def load_cat(arg: str) -> FiniteCategory:
    return io.cat_from_json(_read_doc(arg))


def _emit(args, text: str):
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, doc):
    _emit(args, io.dumps(doc))


def _config(args) -> RunConfig:
    return RunConfig.from_env(
        dim_bound=getattr(args, "bound", None),
        lifting_bound=getattr(args, "bound", None),
        kappa=getattr(args, "kappa", None),
        seed=getattr(args, "seed", None),
        output_format=getattr(args, "format", None),
    )


# -- sset --------------------------------------------------------------------


def cmd_sset(args) -> int:
    from .simplicial import constructions as K
    from .simplicial.filtration import skeletal_filtration
    from .simplicial.nerve import nerve

    op = args.op
    if op == "std":
        X = K.std_simplex(args.n)
    elif op == "boundary":
        X = K.boundary(args.n)
    elif op == "horn":
        X = K.horn(args.n, args.k)
    elif op == "nerve":
        X = nerve(load_cat(args.cat), bound=args.bound)
    elif op == "product":
        X = K.product(*[load_sset(a) for a in args.inputs])
    elif op == "pushout":
        X, _, _ = K.pushout(load_map(args.i), load_map(args.g))
    elif op == "skeleton":
        X, _ = K.skeleton(load_sset(args.input), args.n)
    elif op == "filtration":
        return _filtration(args, skeletal_filtration(load_sset(args.input)))
    elif op == "info":
        X = load_sset(args.input)
        counts = X.counts()
        if args.format == "json":
            doc = {"counts": list(counts), "dim": X.dim, "bound": X.bound}
            _emit_json(args, doc)
        else:
            line = "counts (" + ",".join(str(c) for c in counts) + f") dim {X.dim}"
            if X.bound is not None:
                line += f" bound {X.bound}"
            _emit(args, line + "\n")
        return 0
    elif op == "export":
        X = load_sset(args.input)
        if args.format == "dot":
            _emit(args, io.to_dot(X, X.name or "X"))
            return 0
    else:  # pragma: no cover - argparse restricts choices
        raise SkellimError(f"unknown sset operation {op!r}")
    _emit_json(args, io.sset_to_json(X))
    return 0


def _filtration(args, F) -> int:
    ok = F.verify()
    if args.format == "json":
        doc = {
            "stages": [{"n": st.n, "cells": list(st.cells)} for st in F.stages],
            "recomposes": ok,
        }
        _emit_json(args, doc)
    else:
        lines = [f"stage {st.n}: |L_{st.n}| = {len(st.cells)}" for st in F.stages]
        lines.append(f"{len(F.stages)} stages, recomposes: {'yes' if ok else 'no'}")
        _emit(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


# -- check -------------------------------------------------------------------


def cmd_check(args) -> int:
    from . import hom_spaces as H

    bound = _config(args).lifting_bound if args.bound is None else args.bound
    if args.kind == "qcat":
        cert = H.is_quasi_category(load_sset(args.input), bound)
    elif args.kind == "kan":
        cert = H.is_kan(load_sset(args.input), bound)
    elif args.kind == "isofib":
        cert = H.is_isofibration(load_map(args.input), bound)
    else:
        cert = H.is_trivial_fibration(load_map(args.input), bound)
    _emit_json(args, cert.to_json())
    return cert.exit_code()


# -- comma / cones -----------------------------------------------------------


def cmd_comma(args) -> int:
    from .comma import comma

    K = comma(load_map(args.f), load_map(args.g), dim_bound=args.bound)
    if args.certify:
        cert = K.certify_projection(args.bound)
        _emit_json(args, cert.to_json())
        return cert.exit_code()
    _emit_json(args, io.sset_to_json(K.total))
    return 0


def _load_diagram(args):
    doc = _read_doc(args.diagram)
    shape = load_sset(args.shape) if getattr(args, "shape", None) else None
    cat = load_cat(args.cat) if getattr(args, "cat", None) else None
    return io.diag_from_json(doc, shape=shape, category=cat)


def cmd_cones(args) -> int:
    from .comma import cones_over
    from .simplicial.nerve import nerve

    d = _load_diagram(args)
    A = nerve(d.C)
    K = cones_over(A, d.X, d.to_map(A), dim_bound=args.bound)
    _emit_json(args, io.sset_to_json(K.total))
    return 0


# -- limit -------------------------------------------------------------------


def cmd_limit(args) -> int:
    from . import limit_engine as E

    d = _load_diagram(args)
    C = d.C
    if args.op == "check":
        return _limit_check(args, d)
    colim = args.op == "colimit"
    induct = E.colimit_by_skeletal_induction if colim else E.limit_by_skeletal_induction
    brute = E.brute_force_colimit if colim else E.brute_force_limit
    certs = {}
    if args.engine in ("induction", "both"):
        certs["induction"] = induct(C, d, kappa=args.kappa)
    if args.engine in ("brute", "both"):
        b = brute(C, d)
        if b is None:
            raise SkellimError(f"no {'colimit' if colim else 'limit'} exists (exhaustive search)")
        certs["brute"] = b
    if args.engine != "both":
        _emit_json(args, next(iter(certs.values())).to_json())
        return 0
    a, b = certs["induction"], certs["brute"]
    # both colimit routes report cones in the opposite category
    iso = E.cone_isomorphism(C.opposite() if colim else C, a, b)
    doc = {
        "version": "limcert/1",
        "mode": "both",
        "verdict": "yes" if iso is not None else "no",
        "exactness": "exact",
        "apex": a.apex,
        "legs": dict(a.legs),
        "evidence": {"induction": a.to_json(), "brute": b.to_json(), "comparison": iso},
    }
    _emit_json(args, doc)
    return 0 if iso is not None else 1


def _limit_check(args, d) -> int:
    from .comma import _leg, cones_over, is_limit_cone
    from .simplicial.nerve import nerve

    if not args.cone:
        raise SkellimError("limit check needs --cone")
    cone = _read_doc(args.cone)
    io.expect_version(cone, "limcert/1")
    apex, legs = cone["apex"], cone["legs"]
    A = nerve(d.C)
    dm = d.to_map(A)
    K = cones_over(A, d.X, dm, dim_bound=args.bound)
    match = [
        v
        for v in K.total.generators(0)
        if K.p0.images[v][0] == apex and all(_leg(K, v, x) == legs.get(x) for x in d.X.generators(0))
    ]
    if not match:
        raise SkellimError("the given legs do not form a cone over the diagram")
    cert = is_limit_cone(A, d.X, dm, apex, match[0], args.bound, cones=K)
    _emit_json(args, cert.to_json())
    return cert.evidence["trivial_fibration"].exit_code()


# -- weights -----------------------------------------------------------------


def cmd_weight(args) -> int:
    from .coherent_weights import pseudo_weight

    W = pseudo_weight(load_sset(args.shape))
    if args.format == "text":
        lines = []
        for o in W.index.objects:
            c = W.values[o].counts()
            lines.append(f"{o}: counts (" + ",".join(str(k) for k in c) + ")")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit_json(args, io.weight_to_json(W))
    return 0


def cmd_wlim(args) -> int:
    from .coherent_weights import weighted_limit

    W = io.weight_from_json(_read_doc(args.weight))
    F = io.sdiag_from_json(_read_doc(args.diagram))
    _emit_json(args, io.sset_to_json(weighted_limit(W, F, dim_bound=args.bound)))
    return 0


# -- gen ---------------------------------------------------------------------


def cmd_gen(args) -> int:
    from . import generate as G

    seed = _config(args).seed
    if args.kind == "lattice":
        _emit_json(args, io.cat_to_json(G.random_lattice(seed, args.size)))
    elif args.kind == "poset":
        _emit_json(args, io.cat_to_json(G.random_poset(seed, args.size)))
    elif args.kind == "sset":
        _emit_json(args, io.sset_to_json(G.random_sset(seed, args.size, args.max_dim)))
    else:
        C = G.random_lattice(seed, args.size)
        X = G.random_sset(seed, args.size, args.max_dim)
        _emit_json(args, io.diag_to_json(G.random_monotone_diagram(seed, X, C)))
    return 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="skellim", description="Finite simplicial sets, weighted limits and skeletal induction.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, fmt=("json",)):
        sp.add_argument("--out", help="write to a file instead of stdout")
        sp.add_argument("--format", choices=fmt, default=fmt[0])

    s = sub.add_parser("sset", help="build, inspect and export simplicial sets")
    ss = s.add_subparsers(dest="op", required=True, parser_class=_Parser)
    for name in ("std", "boundary"):
        sp = ss.add_parser(name)
        sp.add_argument("n", type=int)
        common(sp)
    sp = ss.add_parser("horn")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    common(sp)
    sp = ss.add_parser("nerve")
    sp.add_argument("--cat", required=True)
    sp.add_argument("--bound", type=int)
    common(sp)
    sp = ss.add_parser("product")
    sp.add_argument("inputs", nargs="+")
    common(sp)
    sp = ss.add_parser("pushout", help="pushout of a monomorphism i along g")
    sp.add_argument("--i", required=True)
    sp.add_argument("--g", required=True)
    common(sp)
    sp = ss.add_parser("skeleton")
    sp.add_argument("input")
    sp.add_argument("--n", type=int, required=True)
    common(sp)
    sp = ss.add_parser("filtration")
    sp.add_argument("input")
    common(sp, ("text", "json"))
    sp = ss.add_parser("info")
    sp.add_argument("input")
    common(sp, ("text", "json"))
    sp = ss.add_parser("export")
    sp.add_argument("input")
    common(sp, ("json", "dot"))
    s.set_defaults(func=cmd_sset)

    c = sub.add_parser("check", help="bounded lifting certificates")
    c.add_argument("kind", choices=("qcat", "kan", "isofib", "trivfib"))
    c.add_argument("input", help="sset/1 (qcat, kan) or map/1 (isofib, trivfib)")
    c.add_argument("--bound", type=int)
    common(c)
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("comma", help="comma object f|g")
    c.add_argument("--f", required=True)
    c.add_argument("--g", required=True)
    c.add_argument("--bound", type=int)
    c.add_argument("--certify", action="store_true", help="certify the projection is an isofibration")
    common(c)
    c.set_defaults(func=cmd_comma)

    c = sub.add_parser("cones", help="the object of cones over a diagram")
    c.add_argument("--diagram", required=True)
    c.add_argument("--shape")
    c.add_argument("--cat")
    c.add_argument("--bound", type=int)
    common(c)
    c.set_defaults(func=cmd_cones)

    c = sub.add_parser("limit", help="limits and colimits in finite categories")
    c.add_argument("op", choices=("compute", "colimit", "check"))
    c.add_argument("--diagram", required=True)
    c.add_argument("--shape")
    c.add_argument("--cat")
    c.add_argument("--engine", choices=("induction", "brute", "both"), default="induction")
    c.add_argument("--kappa", type=int)
    c.add_argument("--cone", help="limcert/1 with the cone to certify (check)")
    c.add_argument("--bound", type=int)
    common(c)
    c.set_defaults(func=cmd_limit)

    c = sub.add_parser("weight", help="weights")
    c.add_argument("kind", choices=("pseudo",))
    c.add_argument("--shape", required=True)
    common(c, ("json", "text"))
    c.set_defaults(func=cmd_weight)

    c = sub.add_parser("wlim", help="weighted limit {W,F}")
    c.add_argument("--weight", required=True)
    c.add_argument("--diagram", required=True)
    c.add_argument("--bound", type=int)
    common(c)
    c.set_defaults(func=cmd_wlim)

    c = sub.add_parser("gen", help="seeded random instances")
    c.add_argument("kind", choices=("lattice", "poset", "sset", "diagram"))
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--size", type=int, default=8)
    c.add_argument("--max-dim", type=int, default=2)
    common(c)
    c.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SkellimError, OSError, ValueError) as exc:
        sys.stderr.write(f"skellim: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
