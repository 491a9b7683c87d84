"""Command line front end.

Every command prints one JSON document on standard output.  Rationals are
always exact ``"num/den"`` strings.  Errors go to standard error as
``{"error": {"kind": ..., "message": ..., "exit_code": ...}}``.

Exit codes: 0 success, 1 verdict FAIL, 2 usage error, 3 domain error,
4 unreadable input file.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bordism, dsl, genera, varieties
from .algebra import AlgebraElement, component
from .errors import HigherToddError, NotInvariant, UsageError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_INPUT = 4


class InputFileError(HigherToddError):
    kind = "InputFileError"


class _ArgumentError(UsageError):
    kind = "ArgumentError"


def rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise InputFileError(f"not an exact rational: {text!r}")


def element_doc(e: AlgebraElement) -> dict:
    return {name: rational(c) for name, c in e.terms()}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgumentError(message)


def _variety(args):
    return dsl.elaborate(dsl.parse(args.expr))


def _inputs(args, *names) -> dict:
    out = {}
    for name in names:
        out[name] = getattr(args, name)
    return out


def cmd_todd(args):
    V = _variety(args)
    cls = genera.todd_class(V, args.trunc)
    return {"inputs": _inputs(args, "expr", "trunc"),
            "value": rational(genera.pair_top(cls)),
            "todd_class": element_doc(cls)}


def cmd_genus(args):
    V = _variety(args)
    return {"inputs": _inputs(args, "expr", "spec", "trunc"),
            "value": rational(genera.genus_number(V, args.spec, args.trunc))}


def cmd_chern(args):
    V = _variety(args)
    classes = {f"c{i}": element_doc(genera.chern_class(V, i)) for i in range(1, V.dim_c + 1)}
    return {"inputs": _inputs(args, "expr"),
            "dim_c": V.dim_c,
            "total": element_doc(V.total_chern),
            "classes": classes}


def cmd_pontrjagin(args):
    V = _variety(args)
    total = genera.pontrjagin_total(V)
    classes = {f"p{k}": element_doc(component(total, 4 * k)) for k in range(1, V.dim_c // 2 + 1)}
    return {"inputs": _inputs(args, "expr"),
            "dim_c": V.dim_c,
            "total": element_doc(total),
            "classes": classes}


def cmd_euler(args):
    V = _variety(args)
    return {"inputs": _inputs(args, "expr"),
            "value": rational(genera.euler_number(V)),
            "basis_euler_characteristic": rational(V.euler_characteristic())}


def cmd_signature(args):
    V = _variety(args)
    return {"inputs": _inputs(args, "expr", "trunc"),
            "value": rational(genera.genus_number(V, "l", args.trunc))}


def cmd_higher_todd(args):
    V = _variety(args)
    return {"inputs": _inputs(args, "expr", "x", "trunc"),
            "value": rational(genera.higher_genus(V, "todd", args.x, args.trunc))}


def cmd_char_number(args):
    V = _variety(args)
    return {"inputs": _inputs(args, "expr", "poly"),
            "value": rational(genera.char_number(V, args.poly))}


def cmd_verify(args):
    node = dsl.parse(args.expr)
    if not isinstance(node, dsl.Blowup):
        raise _ArgumentError("verify-invariance needs an expression of the form blowup(...)")
    pair = dsl.elaborate_pair(node)
    spec = args.spec
    if args.trunc is not None:
        spec = genera.standard_genus(args.spec, args.trunc)
    report = varieties.verify_blowup_invariance(pair, spec)
    return {"inputs": _inputs(args, "expr", "spec", "trunc"),
            "base": dsl.to_source(node.inner),
            "genus": report.genus,
            "verdict": report.verdict,
            "rows": [{"label": r.label, "blown_label": r.blown_label,
                      "base": rational(r.base_value), "blown": rational(r.blown_value),
                      "equal": r.equal} for r in report.rows]}


def _check_k(k):
    if k < 0:
        raise _ArgumentError("--k must be non-negative")


def cmd_bordism_basis(args):
    _check_k(args.k)
    basis = bordism.unitary_basis(args.k)
    return {"inputs": _inputs(args, "k"),
            "dimension": len(basis),
            "basis": [list(p) for p in basis],
            "todd": [rational(bordism.todd_functional(p)) for p in basis]}


def cmd_bordism_quotient(args):
    _check_k(args.k)
    rep = bordism.quotient_report(args.k)
    span = bordism.birational_ideal_span(args.k)
    return {"inputs": _inputs(args, "k"),
            "dimension": rep["dimension"],
            "ideal_dimension": rep["ideal_dimension"],
            "codimension": rep["codimension"],
            "todd_vanishes_on_ideal": rep["todd_vanishes_on_ideal"],
            "todd_on_quotient_generator": rational(rep["todd_on_quotient_generator"]),
            "basis": [list(p) for p in span.basis],
            "ideal_basis": [[rational(c) for c in v] for v in span.vectors]}


def _load_values(path, pi_model, k, kind):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputFileError(f"cannot read {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise InputFileError(f"{path} is not valid JSON: {exc}")
    entries = data.get("values") if isinstance(data, dict) else data
    if not isinstance(entries, list):
        raise InputFileError("values file must hold a list under \"values\"")
    allowed = set(bordism.generators(k, pi_model, kind))
    values = {}
    for entry in entries:
        try:
            label = entry.get("homology", "1")
            part = bordism.canonical_partition(entry.get("partition", []))
            value = parse_rational(entry["value"])
        except (AttributeError, KeyError, TypeError, ValueError) as exc:
            raise InputFileError(f"malformed values entry {entry!r}: {exc}")
        gen = bordism.BordismGenerator(label, part)
        if gen not in allowed:
            raise InputFileError(f"{gen} is not a generator in degree {k} for {pi_model}")
        values[gen] = value
    return bordism.GenusFunctional(values)


def cmd_decompose(args):
    _check_k(args.k)
    try:
        pi_model = bordism.TorusModel.parse(args.pi)
    except ValueError as exc:
        raise _ArgumentError(str(exc))
    xi = _load_values(args.values, pi_model, args.k, args.kind)
    x = bordism.decompose_functional(xi, args.k, pi_model, args.kind)
    return {"inputs": {"pi": args.pi, "k": args.k, "kind": args.kind, "values": args.values},
            "class": element_doc(x),
            "generators": [{"homology": g.homology_label, "partition": list(g.fiber),
                            "value": rational(xi.value(g))}
                           for g in bordism.generators(args.k, pi_model, args.kind)]}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", default=False,
                     help="compact JSON (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", default=False,
                     help="indented JSON")
    common.add_argument("--trunc", type=int, default=None, metavar="N",
                        help="override the series truncation order")

    parser = _Parser(prog="highertodd", description="Characteristic classes and higher Todd genera.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, help_text, expr=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if expr:
            p.add_argument("expr", help='variety, e.g. "blowup(E x P(1))"')
        p.set_defaults(func=func)
        return p

    add("todd", cmd_todd, "Todd genus and total Todd class")
    p = add("genus", cmd_genus, "genus number for a standard series")
    p.add_argument("--spec", choices=sorted(genera.STANDARD_GENERA), default="todd")
    add("chern", cmd_chern, "Chern classes")
    add("pontrjagin", cmd_pontrjagin, "Pontrjagin classes")
    add("euler", cmd_euler, "Euler characteristic")
    add("signature", cmd_signature, "signature (L-genus)")
    p = add("higher-todd", cmd_higher_todd, "higher Todd genus for a pi-class")
    p.add_argument("--x", required=True, help='pi-class label, e.g. "x1*x2"')
    p = add("char-number", cmd_char_number, "characteristic number of a polynomial")
    p.add_argument("--expr", dest="poly", required=True, help='e.g. "c1*x1*x2"')
    p = add("verify-invariance", cmd_verify, "compare higher genera of a blow-up and its base")
    p.add_argument("--spec", choices=sorted(genera.STANDARD_GENERA), default="todd")
    p = add("bordism-basis", cmd_bordism_basis, "partition basis of Omega^U_2k", expr=False)
    p.add_argument("--k", type=int, required=True)
    p = add("bordism-quotient", cmd_bordism_quotient, "birational ideal and its quotient", expr=False)
    p.add_argument("--k", type=int, required=True)
    p = add("decompose", cmd_decompose, "write a functional as a higher genus", expr=False)
    p.add_argument("--pi", required=True, help="Z^<2g>")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--values", required=True, help="JSON file of functional values")
    p.add_argument("--kind", choices=[bordism.UNITARY, bordism.ORIENTED], default=bordism.UNITARY)
    return parser


def _dump(doc, pretty: bool) -> str:
    if pretty:
        return json.dumps(doc, indent=2, ensure_ascii=False)
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)


def _exit_code(exc) -> int:
    if isinstance(exc, InputFileError):
        return EXIT_INPUT
    if isinstance(exc, UsageError):
        return EXIT_USAGE
    return EXIT_DOMAIN


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    argv = sys.argv[1:] if argv is None else list(argv)
    pretty = "--pretty" in argv
    try:
        args = build_parser().parse_args(argv)
        pretty = args.pretty
        if args.trunc is not None and args.trunc < 0:
            raise _ArgumentError("--trunc must be non-negative")
        body = args.func(args)
    except HigherToddError as exc:
        code = _exit_code(exc)
        err = {"kind": exc.kind, "message": str(exc), "exit_code": code}
        if hasattr(exc, "line"):
            err["line"], err["column"] = exc.line, exc.column
        if isinstance(exc, NotInvariant) and exc.witness is not None:
            err["witness"] = [{"homology": g.homology_label, "partition": list(g.fiber),
                               "coefficient": rational(c)}
                              for g, c in sorted(exc.witness.coeffs.items())]
        print(_dump({"error": err}, pretty), file=stderr)
        return code
    doc = {"command": args.command, **body}
    print(_dump(doc, pretty), file=stdout)
    if doc.get("verdict") == "FAIL":
        return EXIT_FAIL
    return EXIT_OK


def main():
    sys.exit(run())
