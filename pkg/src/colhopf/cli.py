"""Command-line front end.

    colhopf list-algebras
    colhopf rmatrix --algebra ID [--colouring CID] --param eta=0.3 --colour lambda=0.5 mu=-1+0.2i
    colhopf verify --algebra all --samples 20 --seed 42 --tol 1e-9 --report report.json

Exit codes: 0 success, 1 a mandatory check failed, 2 usage or construction error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

import numpy as np

from colhopf import __version__
from colhopf.catalog import (
    ALGEBRA_IDS,
    CONVENTIONS,
    PAPER_FIXED,
    CatalogError,
    build_algebra,
    coloured_R_matrix,
    get,
)
from colhopf.catalog.base import PARAM_NAMES
from colhopf.colour import ColourError, ColourGroup, ColourPoint
from colhopf.verify import DEFAULT_TOL, CheckReport, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def parse_complex(text: str) -> complex:
    """Parse ``a+bi`` style input (``i`` or ``j`` as imaginary unit) or a bare real."""
    s = text.strip().replace(" ", "").replace("i", "j")
    try:
        return complex(s)
    except ValueError:
        raise UsageError(f"not a number: {text!r}") from None


def _pairs(items: Sequence[str] | None, what: str) -> dict:
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name or not value:
            raise UsageError(f"{what} must look like name=value, got {item!r}")
        out[name.strip()] = value.strip()
    return out


def _component(group: ColourGroup, index: int, text: str):
    sign_slot = group.kind == "s2" or (group.kind == "semidirect" and index == 1)
    z = parse_complex(text)
    if sign_slot:
        if z not in (1, -1):
            raise UsageError(f"{group.name} sign component must be +1 or -1, got {text!r}")
        return int(z.real)
    if group.real:
        if z.imag != 0:
            raise UsageError(f"{group.name} colours are real, got {text!r}")
        return z.real
    return z


def parse_colour(group: ColourGroup, name: str, raw: dict) -> ColourPoint:
    """Colour ``name`` from ``name=v`` / ``name=v1,v2`` or ``name1=v1 name2=v2``; identity if absent."""
    arity = len(group.identity().values)
    if name in raw:
        parts = raw[name].split(",")
    elif any(f"{name}{k}" in raw for k in range(1, arity + 1)):
        ident = group.identity().values
        parts = [raw.get(f"{name}{k}", str(ident[k - 1])) for k in range(1, arity + 1)]
    else:
        return group.identity()
    if len(parts) != arity:
        raise UsageError(f"{group.name} colours have {arity} component(s), got {raw.get(name)!r}")
    try:
        return group.point(*(_component(group, k, p) for k, p in enumerate(parts)))
    except ColourError as exc:
        raise UsageError(str(exc)) from None


def _num(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def rmatrix_document(algebra: str, colouring: str | None, params: dict, colours: dict,
                     convention: str = PAPER_FIXED) -> dict:
    d = get(algebra)
    col = d.colourings[0] if colouring is None else d.colouring(colouring)
    unknown = set(params) - set(PARAM_NAMES)
    if unknown:
        raise UsageError(f"unknown parameter(s) {sorted(unknown)}; {algebra} takes {list(d.param_names)}")
    extra = set(params) - set(d.param_names)
    if extra:
        raise UsageError(f"{algebra} does not take parameter(s) {sorted(extra)}; it takes {list(d.param_names)}")
    values = {k: parse_complex(v) for k, v in params.items()}
    spec = build_algebra(algebra, values)
    lam = parse_colour(col.group, "lambda", colours)
    mu = parse_colour(col.group, "mu", colours)
    known = {"lambda", "mu"} | {f"{n}{k}" for n in ("lambda", "mu") for k in (1, 2)}
    if set(colours) - known:
        raise UsageError(f"unknown colour name(s) {sorted(set(colours) - known)}; use lambda and mu")
    m = coloured_R_matrix(spec, col, lam, mu, convention)
    if not np.all(np.isfinite(m)):
        raise UsageError("R-matrix has non-finite entries at these parameters")
    return {
        "algebra": algebra,
        "colouring": col.id,
        "params": {k: _num(v) for k, v in spec.params.present().items()},
        "colours": {"lambda": [_num(v) for v in lam.values], "mu": [_num(v) for v in mu.values]},
        "convention": convention,
        "normalization": _num(spec.normalization),
        "dimension": int(m.shape[0]),
        "entries": [_num(v) for v in m.reshape(-1)],
        "version": __version__,
    }


def document_csv(doc: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["row", "col", "re", "im"])
    n = doc["dimension"]
    for k, (re, im) in enumerate(doc["entries"]):
        w.writerow([k // n, k % n, repr(re), repr(im)])
    return buf.getvalue()


def write_report(report: CheckReport, path: str) -> None:
    """JSON report, summary first. Floats use the shortest exact round-trip form."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report.to_dict(), fh, separators=(",", ":"))
        fh.write("\n")


def read_report(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands ------------------------------------------------------------------


def cmd_list(args) -> int:
    rows = []
    for a in ALGEBRA_IDS:
        d = get(a)
        spec = build_algebra(a)
        rows.append({
            "id": a,
            "title": d.title,
            "generators": len(d.generators),
            "dimension": spec.dim,
            "parameters": list(d.param_names),
            "colourings": [f"{c.id}:{c.group.name}" for c in d.colourings],
            "closed_form": d.closed_form is not None,
        })
    if args.format == "json":
        _emit(json.dumps(rows, indent=2) + "\n", None)
        return EXIT_OK
    for r in rows:
        print(f"{r['id']:<12} gens={r['generators']:<2} dim={r['dimension']} "
              f"params={','.join(r['parameters'])} colourings={' '.join(r['colourings'])}")
    return EXIT_OK


def cmd_rmatrix(args) -> int:
    doc = rmatrix_document(args.algebra, args.colouring, _pairs(args.param, "--param"),
                           _pairs(args.colour, "--colour"), args.convention)
    text = json.dumps(doc) + "\n" if args.format == "json" else document_csv(doc)
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.samples < 0:
        raise UsageError("--samples must be nonnegative")
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    report = run_suite(args.algebra, args.colouring, args.samples, args.seed, args.tol, args.convention)
    if args.report:
        write_report(report, args.report)
    summary = report.summary()
    for name, s in summary["checks"].items():
        kind = "info" if s["mandatory_count"] == 0 else "mandatory"
        print(f"{name:<24} {kind:<9} entries={s['count']:<6} failed={s['failed']:<5} "
              f"mandatory_failed={s['mandatory_failed']:<5} max_residual={s['max_residual']:.3e}")
    for err in report.errors:
        print(f"error: {err}", file=sys.stderr)
    print("PASS" if report.passed else "FAIL")
    if report.errors:
        return EXIT_USAGE
    return EXIT_OK if report.passed else EXIT_FAILED


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="colhopf", description="Coloured Hopf algebras and coloured R-matrices.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ls = sub.add_parser("list-algebras", help="list catalog entries")
    ls.add_argument("--format", choices=("text", "json"), default="text")
    ls.set_defaults(func=cmd_list)

    rm = sub.add_parser("rmatrix", help="emit a coloured R-matrix")
    rm.add_argument("--algebra", required=True)
    rm.add_argument("--colouring", default=None, help="colouring id (default: the first one)")
    rm.add_argument("--param", nargs="+", action="extend", metavar="NAME=VALUE")
    rm.add_argument("--colour", nargs="+", action="extend", metavar="NAME=VALUE",
                    help="lambda=..., mu=...; pair colours as lambda=v1,v2")
    rm.add_argument("--convention", choices=CONVENTIONS, default=PAPER_FIXED)
    rm.add_argument("--format", choices=("json", "csv"), default="json")
    rm.add_argument("--out")
    rm.set_defaults(func=cmd_rmatrix)

    vf = sub.add_parser("verify", help="run the verification suite")
    vf.add_argument("--algebra", default="all")
    vf.add_argument("--colouring", default="all")
    vf.add_argument("--samples", type=int, default=20)
    vf.add_argument("--seed", type=int, default=42)
    vf.add_argument("--tol", type=float, default=DEFAULT_TOL)
    vf.add_argument("--convention", choices=CONVENTIONS, default=PAPER_FIXED)
    vf.add_argument("--report")
    vf.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"colhopf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CatalogError, ColourError, ArithmeticError, OSError) as exc:
        print(f"colhopf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
