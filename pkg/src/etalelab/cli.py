"""Command-line surface: validation, algebra checks, convolution and
symmetry reports, Hopf action verdicts, the étale scan, and the catalog.

Exit codes: 0 = all checks pass, 1 = a verdict failed, 2 = usage or
schema error.  `--out` writes a deterministic JSON report (sorted keys);
matrix-shaped reports also get a CSV and a heatmap PNG next to it.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import catalog as _catalog
from .algebras import is_etale, load_algebra
from .convolution import (ConvolutionAlgebra, character, conv_product,
                          fourier, fourier_inv, hypergroup_constants,
                          minimal_idempotents)
from .diagrams import Mor, tensor_obj
from .errors import EtaleLabError, SchemaError
from .fusion import load_category, validate_category
from .hopf import load_action, load_hopf, no_go_report
from .scan import etale_scan
from .scalars import Scalar
from .symmetry import automorphism_group, symmetry_report

VERSION = "0.1.0"


class UsageError(Exception):
    pass


# -- input resolution -------------------------------------------------------


def _read_doc(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise UsageError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON: {exc}") from exc


def _digest(spec: str) -> str:
    if spec.startswith("catalog:"):
        return spec
    with open(spec, "rb") as fh:
        return "sha256:" + hashlib.sha256(fh.read()).hexdigest()


def _resolve_category(spec: str):
    if spec.startswith("catalog:"):
        return _catalog.get_category(spec[len("catalog:"):])
    return load_category(_read_doc(spec))


def _resolve_algebra(spec: str, category_spec: str | None):
    if spec.startswith("catalog:"):
        name = spec[len("catalog:"):]
        return _catalog.get_algebra(name)
    if category_spec is None:
        raise UsageError("--category is required for algebra documents")
    cat = _resolve_category(category_spec)
    return load_algebra(cat, _read_doc(spec))


def _scalar_json(v):
    if isinstance(v, Scalar):
        return v.to_json()
    if isinstance(v, complex):
        return [v.real, v.imag]
    return v


# -- report plumbing ----------------------------------------------------------


def _base_report(args, inputs: dict) -> dict:
    return {
        "tool": "etalelab",
        "version": VERSION,
        "command": args.command,
        "inputs": {k: _digest(v) for k, v in inputs.items() if v},
        "mode": getattr(args, "mode", "exact"),
        "tolerance": getattr(args, "tolerance", 1e-9),
        "seed": getattr(args, "seed", 1234),
    }


def _emit(report: dict, args, matrix=None, matrix_title: str = "",
          row_labels=None, col_labels=None) -> None:
    out = getattr(args, "out", None)
    if out:
        if matrix is not None:
            import os

            from .plots import render_matrix
            paths = render_matrix(matrix, matrix_title, out,
                                  row_labels, col_labels)
            # report stores basenames so identical runs stay byte-identical
            report["artifacts"] = [os.path.basename(p) for p in paths]
        with open(out, "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    print(json.dumps(report, indent=2, sort_keys=True))


# -- subcommands ---------------------------------------------------------------


def _cmd_validate(args) -> int:
    cat = _resolve_category(args.category)
    validate_category(cat, mode=args.mode, tol=args.tolerance)
    report = _base_report(args, {"category": args.category})
    report.update({"category": cat.name, "n_simples": cat.n_simples,
                   "conductor": cat.conductor, "valid": True})
    _emit(report, args)
    return 0


def _cmd_check_algebra(args) -> int:
    a = _resolve_algebra(args.algebra, args.category)
    result = is_etale(a)
    report = _base_report(args, {"category": args.category,
                                 "algebra": args.algebra})
    report.update(result)
    _emit(report, args)
    return 0 if result["etale"] else 1


def _cmd_convolution_table(args) -> int:
    a = _resolve_algebra(args.algebra, args.category)
    Q = ConvolutionAlgebra(a)
    report = _base_report(args, {"category": args.category,
                                 "algebra": args.algebra})
    report.update({"algebra": a.name, "dimQ": Q.dim,
                   "star_table": Q.table_json(),
                   "commutative": Q.is_commutative(), "exact": True})
    labels = [str(l) for l in Q.labels]
    matrix = [[sum(abs(v.embed()) for v in Q.star_table[i][j])
               for j in range(Q.dim)] for i in range(Q.dim)]
    for i, row in enumerate(Q.star_table):
        print(labels[i] + " | " + " ; ".join(
            ",".join(str(v) for v in cell) for cell in row))
    _emit(report, args, matrix, f"star product mass, {a.name}",
          labels, labels)
    return 0


def _cmd_hypergroup(args) -> int:
    a = _resolve_algebra(args.algebra, args.category)
    Q = ConvolutionAlgebra(a)
    h = minimal_idempotents(Q, seed=args.seed)
    constants, residual = hypergroup_constants(h)
    report = _base_report(args, {"category": args.category,
                                 "algebra": args.algebra})
    residuals = dict(h.residuals)
    residuals["constants"] = residual
    report.update({
        "algebra": a.name,
        "dimQ": Q.dim,
        "star_table": Q.table_json(),
        "idempotents": [
            [_scalar_json(v) for v in e] if e is not None
            else [_scalar_json(z) for z in num]
            for e, num in zip(h.exact, h.numeric)],
        "constants": [[[_scalar_json(v) for v in cell] for cell in row]
                      for row in constants],
        "residuals": residuals,
        "exact": h.all_exact,
    })
    matrix = [[z.real for z in num] for num in h.numeric]
    for i, num in enumerate(h.numeric):
        print(f"p{i} | " + ",".join(f"{z.real:+.6f}{z.imag:+.6f}j"
                                    for z in num))
    _emit(report, args, matrix, f"minimal idempotents, {a.name}",
          [f"p{i}" for i in range(h.size)], [str(l) for l in Q.labels])
    failed = any(r > args.tolerance for r in residuals.values())
    return 1 if failed else 0


def _cmd_automorphisms(args) -> int:
    a = _resolve_algebra(args.algebra, args.category)
    Q = ConvolutionAlgebra(a)
    h = minimal_idempotents(Q, seed=args.seed)
    g = automorphism_group(a, h)
    report = _base_report(args, {"category": args.category,
                                 "algebra": args.algebra})
    report.update({"algebra": a.name, "order": g.size, "table": g.table,
                   "group": g.name})
    for row in g.table:
        print(" ".join(str(v) for v in row))
    _emit(report, args, [[float(v) for v in row] for row in g.table],
          f"Aut({a.name}) table")
    return 0


def _cmd_characters(args) -> int:
    a = _resolve_algebra(args.algebra, args.category)
    Q = ConvolutionAlgebra(a)
    h = minimal_idempotents(Q, seed=args.seed)
    g = automorphism_group(a, h)
    table = [[character(a, m, x) for x in Q.basis] for m in g.elements]
    report = _base_report(args, {"category": args.category,
                                 "algebra": args.algebra})
    report.update({"algebra": a.name, "aut_order": g.size,
                   "group": g.name,
                   "characters": [[_scalar_json(v) for v in row]
                                  for row in table]})
    for i, row in enumerate(table):
        print(f"g{i} | " + ",".join(str(v) for v in row))
    _emit(report, args, [[v.embed().real for v in row] for row in table],
          f"characters of Aut({a.name})",
          [f"g{i}" for i in range(g.size)], [str(l) for l in Q.labels])
    return 0


def _cmd_fourier_check(args) -> int:
    a = _resolve_algebra(args.algebra, args.category)
    Q = ConvolutionAlgebra(a)
    transforms = [fourier(a, x) for x in Q.basis]
    multiplicative = all(
        fourier(a, conv_product(a, x, y)) == transforms[i] @ transforms[j]
        for i, x in enumerate(Q.basis) for j, y in enumerate(Q.basis))
    unit_ok = fourier(a, Q.unit).mor == Mor.identity(
        tensor_obj(a.obj, a.obj))
    round_a = all(fourier_inv(a, transforms[i]) == x
                  for i, x in enumerate(Q.basis))
    round_b = all(fourier(a, fourier_inv(a, f)) == f for f in transforms)
    report = _base_report(args, {"category": args.category,
                                 "algebra": args.algebra})
    report.update({"algebra": a.name, "dimQ": Q.dim,
                   "multiplicative": multiplicative, "unit": unit_ok,
                   "roundtrip_inverse_of_forward": round_a,
                   "roundtrip_forward_of_inverse": round_b,
                   "exact": True})
    _emit(report, args)
    ok = multiplicative and unit_ok and round_a and round_b
    return 0 if ok else 1


def _cmd_symmetry_report(args) -> int:
    a = _resolve_algebra(args.algebra, args.category)
    result = symmetry_report(a, seed=args.seed)
    report = _base_report(args, {"category": args.category,
                                 "algebra": args.algebra})
    report.update(result)
    matrix = [[float(v) for v in row] for row in result["aut_table"]]
    _emit(report, args, matrix, f"Aut({a.name}) table")
    return 0 if result["etale"] else 1


def _cmd_check_action(args) -> int:
    if args.action and args.action.startswith("catalog:"):
        act = _catalog.get_action(args.action[len("catalog:"):])
        inputs = {"action": args.action}
    else:
        if not (args.hopf and args.algebra and args.action):
            raise UsageError(
                "check-action needs --action catalog:NAME, or --hopf, "
                "--algebra and --action documents")
        hopf = (_catalog.get_hopf(args.hopf[len("catalog:"):])
                if args.hopf.startswith("catalog:")
                else load_hopf(_read_doc(args.hopf)))
        algebra = _resolve_algebra(args.algebra, args.category)
        act = load_action(hopf, algebra, _read_doc(args.action))
        inputs = {"hopf": args.hopf, "algebra": args.algebra,
                  "action": args.action}
    result = no_go_report(act, seed=args.seed)
    report = _base_report(args, inputs)
    report.update(result)
    _emit(report, args)
    return 0 if result.get("hopf_valid") and result.get("action_valid") else 1


def _cmd_etale_scan(args) -> int:
    cat = _resolve_category(args.category)
    result = etale_scan(cat, args.max_qdim, seed=args.seed,
                        tol=args.tolerance)
    report = _base_report(args, {"category": args.category})
    report.update(result)
    for cand in result["candidates"]:
        print(cand["label"] + " | " + "+".join(cand["members"]))
    _emit(report, args)
    return 0


def _cmd_catalog(args) -> int:
    if args.catalog_command == "list":
        report = _base_report(args, {})
        entries = [{"name": e.name, "kind": e.kind,
                    "provenance": e.provenance}
                   for e in _catalog.catalog_build()]
        report["entries"] = entries
        for e in entries:
            print(f"{e['kind']:<10} {e['name']}")
        _emit(report, args)
        return 0
    if args.catalog_command == "export":
        doc = _catalog.export_doc(args.name)
        text = json.dumps(doc, indent=2, sort_keys=True)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text + "\n")
        print(text)
        return 0
    if args.catalog_command == "selftest":
        report = _base_report(args, {})
        report["results"] = _catalog.selftest()
        report["passed"] = True
        _emit(report, args)
        return 0
    raise UsageError("catalog needs one of: list, export, selftest")


# -- parser ---------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=1e-9)
    common.add_argument("--mode", choices=["exact", "numeric"],
                        default="exact")
    common.add_argument("--out", default=None)
    common.add_argument("--seed", type=int, default=1234)

    parser = argparse.ArgumentParser(
        prog="etalelab",
        description="Separable and étale algebras in braided fusion "
                    "categories: exact verification and reports.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common])
    p.add_argument("category")
    p.set_defaults(func=_cmd_validate)

    for name, func in (("check-algebra", _cmd_check_algebra),
                       ("convolution-table", _cmd_convolution_table),
                       ("hypergroup", _cmd_hypergroup),
                       ("automorphisms", _cmd_automorphisms),
                       ("characters", _cmd_characters),
                       ("fourier-check", _cmd_fourier_check),
                       ("symmetry-report", _cmd_symmetry_report)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--category", default=None)
        p.add_argument("--algebra", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("check-action", parents=[common])
    p.add_argument("--category", default=None)
    p.add_argument("--hopf", default=None)
    p.add_argument("--algebra", default=None)
    p.add_argument("--action", required=True)
    p.set_defaults(func=_cmd_check_action)

    p = sub.add_parser("etale-scan", parents=[common])
    p.add_argument("--category", required=True)
    p.add_argument("--max-qdim", type=float, required=True)
    p.set_defaults(func=_cmd_etale_scan)

    p = sub.add_parser("catalog", parents=[common])
    p.add_argument("catalog_command", choices=["list", "export", "selftest"])
    p.add_argument("name", nargs="?", default=None)
    p.set_defaults(func=_cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EtaleLabError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
