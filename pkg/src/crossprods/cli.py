"""Command-line front end.

Every command prints a report (text, or JSON with --json).  Exit status is
0 when all checks pass, 1 when a check fails and 2 on bad input."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Optional

from . import autgrp, crossprod, gradings
from .abgroup import GroupError
from .cayley import CayleyAlgebra, CayleyError
from .crossprod import DEFAULT_SEED, CrossProduct, CrossProductError
from .exterior import ExteriorError
from .linalg import LinalgError, QuadSpace, format_matrix, identity
from .scalars import Field, FieldError, parse_field

INPUT_ERRORS = (FieldError, CrossProductError, GroupError, LinalgError, ExteriorError,
                CayleyError, gradings.GradingError, autgrp.AutError, OSError)


class InputError(Exception):
    pass


# ----------------------------------------------------------------------------
# reports


class Report:
    def __init__(self, command: str, field: Optional[Field] = None):
        self.data: dict = {"command": command}
        if field is not None:
            self.data["field"] = field.descriptor
        self.checks: dict = {}
        self.timings: dict = {}

    def check(self, name: str, ok: bool):
        self.checks[name] = bool(ok)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def render(self, as_json: bool, timings: bool) -> str:
        out = dict(self.data)
        out["checks"] = self.checks
        out["passed"] = self.passed
        if timings:
            out["timings"] = {k: round(v, 3) for k, v in self.timings.items()}
        if as_json:
            return json.dumps(out, indent=2, sort_keys=True)
        lines: list = []
        _text(out, lines, 0)
        return "\n".join(lines)


def _atom(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if v is None:
        return "-"
    if isinstance(v, list):
        return "[" + ", ".join(_atom(x) for x in v) + "]"
    return str(v)


def _is_matrix(v) -> bool:
    return isinstance(v, list) and bool(v) and all(isinstance(r, list) for r in v) \
        and all(not isinstance(x, list) for r in v for x in r)


def _text(obj, lines: list, depth: int):
    pad = "  " * depth
    for key, val in obj.items():
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            _text(val, lines, depth + 1)
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for item in val:
                first, *rest = list(item.items())
                sub: list = []
                _text(dict([first]), sub, 0)
                lines.append(f"{pad}  - {sub[0]}")
                _text(dict(rest), lines, depth + 2)
        elif _is_matrix(val):
            lines.append(f"{pad}{key}:")
            lines += [f"{pad}  {' '.join(_atom(x) for x in row)}" for row in val]
        elif isinstance(val, list) and val and all(_is_matrix(m) for m in val):
            lines.append(f"{pad}{key}:")
            for m in val:
                lines.append(f"{pad}  -")
                lines += [f"{pad}    {' '.join(_atom(x) for x in row)}" for row in m]
        elif key == "passed":
            lines.append(f"{pad}{key}: {'PASS' if val else 'FAIL'}")
        else:
            lines.append(f"{pad}{key}: {_atom(val)}")


class _Timer:
    def __init__(self, report: Report, name: str):
        self.report, self.name = report, name

    def __enter__(self):
        self.t = time.perf_counter()

    def __exit__(self, *exc):
        self.report.timings[self.name] = time.perf_counter() - self.t


# ----------------------------------------------------------------------------
# input helpers


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: JSON parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _field(args) -> Field:
    return parse_field(args.field)


def _structure(args) -> CrossProduct:
    F = _field(args)
    if args.input:
        data = _load_json(args.input)
        if not isinstance(data, dict):
            raise InputError("expected a JSON object")
        return CrossProduct.from_json(data, F if args.field_given else None)
    if not args.builtin:
        raise InputError("give --builtin or --input")
    return crossprod.builtin(args.builtin, F)


def _grading(args, which: Optional[str] = None, path: Optional[str] = None) -> gradings.Grading:
    if path:
        data = _load_json(path)
        if not isinstance(data, dict):
            raise InputError("expected a JSON object")
        return gradings.Grading.from_json(data)
    if not which:
        raise InputError("give --builtin or --input")
    return gradings.builtin_grading(which, _field(args))


# ----------------------------------------------------------------------------
# commands


def cmd_verify(args) -> Report:
    X = _structure(args)
    F = X.field
    rep = Report(f"verify {args.builtin or args.input}", F)
    rep.data["structure"] = {"name": X.name or "input", "dim": X.dim, "arity": X.arity, "kind": X.kind}
    if X.gram is None:
        raise InputError("the structure has no attached bilinear form")
    with _Timer(rep, "axioms"):
        ax = crossprod.verify_axioms(X, seed=args.seed)
    rep.data["axioms"] = ax.to_dict()
    rep.check("axiom1", ax.a1)
    rep.check("axiom2", ax.a2)
    with _Timer(rep, "admissible_forms"):
        adm = crossprod.admissible_forms(X, seed=args.seed)
    rep.data["admissible_forms"] = adm.to_dict(F)
    if adm.multipliers is not None:
        rep.check("attached_form_admissible", F.one in adm.multipliers)
    if X.arity == 3 and X.dim == 8 and ax.passed:
        with _Timer(rep, "eps_identity"):
            kind = crossprod.three_fold_type(X)
        rep.data["type"] = {1: "I", -1: "II", None: "none"}[kind]
    return rep


def cmd_grading(args) -> Report:
    F = _field(args)
    sub = args.gcmd
    if sub == "classify":
        gr = _grading(args, _first(args.builtin), _first(args.input))
        rep = Report(f"grading classify {_first(args.builtin) or _first(args.input)}", F)
        c = gradings.classify_83(gr)
        rep.data["classification"] = c.to_dict()
        rep.check("classified", True)
        return rep
    if sub == "verify":
        gr = _grading(args, _first(args.builtin), _first(args.input))
        rep = Report(f"grading verify {_first(args.builtin) or _first(args.input)}", gr.field)
        vr = gradings.verify_grading(gr)
        rep.data["closure"] = vr.to_dict()
        rep.data["fine"] = gradings.is_fine(gr)
        rep.data["support_size"] = len(gr.support())
        rep.check("closure", vr.passed)
        if gr.structure.kind == "star" or gr.structure.arity == gr.structure.dim - 1:
            fc = gradings.form_compatibility(gr)
            rep.data["delta"] = gradings.delta_of(gr).to_dict()
            rep.data["form"] = {"h_trivial": fc.compatible, "pairing_ok": fc.pairing_ok}
            rep.check("pairing", fc.pairing_ok)
        return rep
    if sub == "isofine":
        specs = [("builtin", b) for b in (args.builtin or [])] + [("input", p) for p in (args.input or [])]
        if len(specs) != 2:
            raise InputError("isofine needs exactly two gradings (--builtin/--input)")
        grs = [_grading(args, v, None) if k == "builtin" else _grading(args, None, v) for k, v in specs]
        rep = Report("grading isofine " + " ".join(v for _, v in specs), F)
        a, b = grs
        if a.structure.arity == 3 and a.structure.dim == 8:
            rep.data["isomorphic"] = gradings.iso_83(a, b)
        else:
            rep.data["isomorphic"] = a.group == b.group and gradings.n1_isomorphic(
                gradings.delta_of(a), gradings.delta_of(b))
        rep.check("inputs_valid", all(gradings.verify_grading(g).passed for g in grs))
        return rep
    if sub == "weyl":
        rep = Report(f"grading weyl {args.id}")
        order = gradings.weyl_order(args.id)
        rep.data["order"] = order
        if args.oracle:
            with _Timer(rep, "search"):
                if args.id == "cd":
                    res = gradings.weyl_search_cd(args.threads)
                    found = res.permutations
                    rep.data["signed_maps"] = res.signed_maps
                elif args.id == "cartan":
                    found = len(gradings.cartan_weyl_matrices())
                elif args.id.startswith("n1:"):
                    p, q = (int(t) for t in args.id[3:].split(","))
                    found = gradings.weyl_search_n1(p, q, parse_field(args.oracle_field))
                else:
                    raise InputError(f"no search oracle for {args.id}")
            rep.data["oracle"] = found
            rep.check("oracle_matches_formula", found == order)
        return rep
    if sub == "finelist":
        n = args.n
        rep = Report(f"grading finelist --n {n}", F)
        rows = []
        for q in range(n // 2 + 1):
            p = n - 2 * q
            gr, U = gradings.fine_n1(p, q, n, F)
            ok = gradings.verify_grading(gr).passed and gradings.is_fine(gr)
            rows.append({"p": p, "q": q, "universal_group": U.describe(),
                         "weyl_order": gradings.weyl_order(f"n1:{p},{q}"), "verified": ok})
            rep.check(f"p={p},q={q}", ok)
        rep.data["fine_gradings"] = rows
        return rep
    raise InputError(f"unknown grading command {sub}")


def _first(v):
    return v[0] if v else None


def cmd_spin(args) -> Report:
    F = _field(args)
    sub = args.scmd
    if sub == "triple":
        alg = CayleyAlgebra(F, args.basis)
        if args.random:
            xs = autgrp.random_spin_vectors(alg, random.Random(args.seed), args.random)
            label = f"random({args.random}, seed={args.seed})"
        else:
            names = [t for t in (args.vectors or "").split(",") if t]
            xs = [list(alg.parse_element(t).coords) for t in names]
            label = ",".join(names) or "()"
        rep = Report(f"spin triple {label}", F)
        with _Timer(rep, "spin"):
            sp = autgrp.spin_element_from_vectors(xs, alg)
        tri = sp.triple
        rep.data["triple"] = {"f0": format_matrix(F, tri.f0), "f1": format_matrix(F, tri.f1),
                              "f2": format_matrix(F, tri.f2)}
        I, mI = identity(F, 8), [[-x for x in r] for r in identity(F, 8)]
        rep.data["summary"] = [_name_matrix(f, I, mI) for f in (tri.f0, tri.f1, tri.f2)]
        rep.check("related_triple", tri.relation_holds())
        rep.check("cyclic_identities", tri.cyclic_identities_hold())
        rep.check("isometries", tri.isometries())
        rep.check("preserves_3c", autgrp.is_automorphism(tri.f2, crossprod.build_triple_3c(F, args.basis)))
        return rep
    if sub == "orbits":
        rep = Report(f"spin orbits --target {args.target}", F)
        with _Timer(rep, "bfs"):
            oc = autgrp.orbit_census(F, args.target)
        rep.data["census"] = oc.to_dict()
        rep.check("orbit_equals_target", oc.equal)
        return rep
    if sub == "lie":
        rep = Report(f"spin lie --n {args.n}", F)
        L = autgrp.lie_otilde(QuadSpace(F, identity(F, args.n)))
        rep.data["dim"] = L.dim
        rep.data["contains_identity"] = L.has_identity
        p = F.characteristic
        expected = args.n * (args.n - 1) // 2 + (1 if p and (args.n - 2) % p == 0 else 0)
        rep.check("dimension", L.dim == expected)
        return rep
    if sub == "witness":
        rep = Report(f"spin witness --n {args.n} --r {args.r}", F)
        w = autgrp.witness_with_det(QuadSpace(F, identity(F, args.n)), F.parse(args.r))
        E = w.field
        rep.data["extension"] = E.descriptor
        rep.data["phi"] = format_matrix(E, w.phi)
        rep.data["det"] = E.format(w.det)
        rep.check("det_equals_r", w.det == E(F.parse(args.r)))
        return rep
    raise InputError(f"unknown spin command {sub}")


def _name_matrix(f, I, mI) -> str:
    return "Id" if f == I else "-Id" if f == mI else "other"


# ----------------------------------------------------------------------------
# parser


def _seed(text: str) -> int:
    return int(text, 0)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=None, help="Q, Fp:p, Q(i), Fp:p(sqrt:d) (default Q)")
    common.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings")
    common.add_argument("--threads", type=int, default=1)

    ap = argparse.ArgumentParser(prog="crossprods", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("verify", parents=[common], help="axioms and admissible forms")
    v.add_argument("--builtin", help=", ".join(crossprod.BUILTINS))
    v.add_argument("--input", help="CrossProduct JSON file")

    g = sub.add_parser("grading", help="gradings")
    gs = g.add_subparsers(dest="gcmd", required=True)
    for name in ("classify", "verify", "isofine"):
        p = gs.add_parser(name, parents=[common])
        p.add_argument("--builtin", action="append", help=", ".join(gradings.BUILTIN_GRADINGS))
        p.add_argument("--input", action="append", help="Grading JSON file")
    w = gs.add_parser("weyl", parents=[common])
    w.add_argument("--id", required=True, help="n1:p,q | cartan | cd | g2-cartan | g2-z2^3 | onefold:s")
    w.add_argument("--oracle", action="store_true", help="cross-check by exhaustive search")
    w.add_argument("--oracle-field", default="Fp:5", help="field for the n1 search")
    f = gs.add_parser("finelist", parents=[common])
    f.add_argument("--n", type=int, required=True)

    s = sub.add_parser("spin", help="spin group and triality")
    ss = s.add_subparsers(dest="scmd", required=True)
    t = ss.add_parser("triple", parents=[common])
    t.add_argument("--vectors", help="comma-separated elements, e.g. w1,w1")
    t.add_argument("--random", type=int, default=0, help="use K seeded random groups of 4 vectors")
    t.add_argument("--basis", choices=("cd", "std"), default="cd")
    o = ss.add_parser("orbits", parents=[common])
    o.add_argument("--target", choices=autgrp.ORBIT_TARGETS, required=True)
    li = ss.add_parser("lie", parents=[common])
    li.add_argument("--n", type=int, required=True)
    wi = ss.add_parser("witness", parents=[common])
    wi.add_argument("--n", type=int, required=True)
    wi.add_argument("--r", required=True)
    return ap


def main(argv: Optional[list] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    args.field_given = args.field is not None
    if args.field is None:
        args.field = "Q"
    handlers = {"verify": cmd_verify, "grading": cmd_grading, "spin": cmd_spin}
    try:
        rep = handlers[args.cmd](args)
    except (InputError, *INPUT_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(rep.render(args.json, args.timings))
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
