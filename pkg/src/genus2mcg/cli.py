"""Command-line interface.

Exit codes: 0 verified, 1 verified false, 2 input error, 3 resource limit.
Reports are ``key: value`` lines, or JSON with ``--json``.
"""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .checks import builtin_certificate, run_suite
from .curves import CurveError, CurveLibrary, builtin_library
from .derivation import load_builtin_script, parse_script, verify_script
from .dsl import ParseError, format_certificate, parse_catalog, parse_certificate, parse_factorization, parse_word
from .equivalence import MoveCertificate, SearchLimitExceeded, search_equivalence, verify_certificate
from .factorization import Factorization, MoveError, builtin_factorizations, classify, evaluate
from .mcg import describe, evaluate_word, is_identity_mod2, set_convention
from .pi1 import Handedness

OK, FALSE, INPUT_ERROR, LIMIT = 0, 1, 2, 3

BUILTIN_CERTIFICATES = {("bk", "hamada"): "bk-hamada", ("xiao", "hamada"): "xiao-hamada", ("bk", "xiao"): "bk-xiao"}


class InputError(Exception):
    pass


class Report:
    """Ordered key/value report; repeated keys become lists in JSON."""

    def __init__(self):
        self.items: list[tuple[str, object]] = []

    def add(self, key: str, value) -> None:
        self.items.append((key, value))

    def text(self) -> str:
        lines = []
        for key, value in self.items:
            if isinstance(value, dict):
                value = " ".join(f"{k}={v}" for k, v in value.items())
            lines.append(f"{key}: {value}")
        return "".join(line + "\n" for line in lines)

    def json(self) -> str:
        out: dict[str, object] = {}
        for key, value in self.items:
            if key in out:
                prev = out[key]
                out[key] = (prev if isinstance(prev, list) else [prev]) + [value]
            else:
                out[key] = value
        return json.dumps(out, indent=2) + "\n"


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _library(args) -> CurveLibrary:
    lib = builtin_library()
    if args.curves:
        lib = parse_catalog(_read(args.curves), lib)
    return lib


def _factorization(source: str, lib: CurveLibrary) -> Factorization:
    builtins = builtin_factorizations(lib)
    if source in builtins and not Path(source).exists():
        return builtins[source]
    return parse_factorization(_read(source), lib, Path(source).stem)


def _mapping_report(report: Report, m) -> None:
    for key, value in describe(m).items():
        report.add(key, value)


def cmd_verify(args, report: Report) -> int:
    lib = _library(args)
    w = parse_word(args.expr, lib, compact=args.compact)
    m = evaluate_word(w)
    report.add("expression", args.expr)
    report.add("length", len(w.letters))
    _mapping_report(report, m)
    ok = is_identity_mod2(m)
    report.add("result", "identity" if ok else "not identity")
    return OK if ok else FALSE


def cmd_classify(args, report: Report) -> int:
    lib = _library(args)
    f = _factorization(args.factorization, lib)
    kind = classify(f)
    report.add("factorization", f.name or args.factorization)
    for i, e in enumerate(f.entries, 1):
        report.add(f"entry {i}", {"label": e.label, "class": "separating" if e.separating else "nonseparating"})
    report.add("type", str(kind))
    product = evaluate(f)
    report.add("product", "identity" if is_identity_mod2(product) else describe(product)["verdict"])
    return OK


def _load_certificate(source: str, lib: CurveLibrary) -> MoveCertificate:
    if not Path(source).exists() and resources.files("genus2mcg.data").joinpath(f"{source}.cert").is_file():
        return builtin_certificate(source)
    return MoveCertificate(tuple(parse_certificate(_read(source), lib)))


def cmd_equiv(args, report: Report) -> int:
    lib = _library(args)
    src, dst = _factorization(args.src, lib), _factorization(args.dst, lib)
    report.add("source", src.name or args.src)
    report.add("target", dst.name or args.dst)
    ts, td = classify(src), classify(dst)
    if len(src) != len(dst) or ts != td:
        report.add("result", f"not equivalent (types {ts} and {td})")
        return FALSE
    if evaluate(src) != evaluate(dst):
        report.add("result", "not equivalent (products differ)")
        return FALSE
    if args.search:
        try:
            found = search_equivalence(src, dst, args.depth, args.conj_budget, args.state_cap)
        except SearchLimitExceeded as exc:
            report.add("result", f"state cap reached ({exc})")
            return LIMIT
        report.add("states", found.states)
        report.add("depth", found.depth_reached)
        if not found.found:
            report.add("result", f"no certificate within depth {args.depth}")
            return FALSE
        cert = found.certificate
        shipped = BUILTIN_CERTIFICATES.get((args.src, args.dst))
        if shipped:
            same = tuple(builtin_certificate(shipped)) == tuple(cert)
            report.add("shipped certificate", "same" if same else f"differs ({shipped})")
    elif args.certificate:
        cert = _load_certificate(args.certificate, lib)
        try:
            ok = verify_certificate(src, dst, cert)
        except MoveError as exc:
            raise InputError(str(exc)) from None
        if not ok:
            report.add("result", "certificate does not map source to target")
            return FALSE
    else:
        raise InputError("equiv needs --certificate or --search")
    report.add("moves", len(cert))
    for i, move in enumerate(cert, 1):
        report.add(f"move {i}", str(move))
    report.add("result", "equivalent")
    if args.emit:
        Path(args.emit).write_text(format_certificate(cert))
    return OK


def cmd_derive(args, report: Report) -> int:
    lib = _library(args)
    if Path(args.script).exists() or args.script != "section5.deriv":
        text = _read(args.script)
    else:
        text = load_builtin_script(args.script)
    result = verify_script(parse_script(text, lib), workers=args.workers)
    for r in result.results:
        entry = {"line": r.claim.lineno, "status": "pass" if r.passed else "FAIL"}
        entry.update(r.diagnostics)
        report.add(r.claim.label, entry)
    report.add("lines", len(result.results))
    bad = result.first_failure
    if bad:
        report.add("first failure", f"{bad.claim.label} (line {bad.claim.lineno})")
    report.add("result", "pass" if result.passed else "fail")
    return OK if result.passed else FALSE


def cmd_curves(args, report: Report) -> int:
    lib = _library(args)
    for curve in lib:
        entry = {"class": curve.classification, "definition": lib.describe(curve.name)}
        if curve.derived:
            entry["derived"] = "yes"
        report.add(curve.name, entry)
    return OK


def cmd_conventions(args, report: Report) -> int:
    valid = []
    for h in Handedness:
        checks = run_suite(h)
        failed = [c.name for c in checks if not c.passed]
        report.add(h.value, "valid" if not failed else "fails " + " ".join(failed))
        if not failed:
            valid.append(h.value)
    report.add("validated", " ".join(valid) or "none")
    return OK if valid else FALSE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="genus2mcg", description="Exact computations in the genus-2 mapping class group.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--convention", choices=[h.value for h in Handedness], default=Handedness.STANDARD.value,
                   help="half-twist handedness for the Birman-Hilden lift")
    p.add_argument("--curves", metavar="CATALOG", help="extra curve catalog file")
    p.add_argument("--json", action="store_true", help="emit JSON instead of key: value lines")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="decide whether a twist word is the identity")
    v.add_argument("expr")
    v.add_argument("--compact", action="store_true", help="read bare digits as chain twists")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="type (n,s) of a factorization")
    c.add_argument("factorization", help="builtin name (bk, hamada, xiao) or file")
    c.set_defaults(func=cmd_classify)

    e = sub.add_parser("equiv", help="check or search for a Hurwitz/conjugation certificate")
    e.add_argument("src")
    e.add_argument("dst")
    how = e.add_mutually_exclusive_group()
    how.add_argument("--certificate", metavar="FILE", help="certificate file or builtin name")
    how.add_argument("--search", action="store_true")
    e.add_argument("--depth", type=int, default=8)
    e.add_argument("--conj-budget", type=int, default=0, metavar="L")
    e.add_argument("--state-cap", type=int, default=None)
    e.add_argument("--emit", metavar="FILE", help="write the certificate here")
    e.set_defaults(func=cmd_equiv)

    d = sub.add_parser("derive", help="verify a derivation script line by line")
    d.add_argument("script", nargs="?", default="section5.deriv")
    d.add_argument("--workers", type=int, default=1)
    d.set_defaults(func=cmd_derive)

    sub.add_parser("curves", help="list the curve library").set_defaults(func=cmd_curves)
    sub.add_parser("conventions", help="run the reproduction suite under both conventions").set_defaults(
        func=cmd_conventions)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    set_convention(Handedness(args.convention))
    report = Report()
    try:
        code = args.func(args, report)
    except (ParseError, InputError, CurveError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except SearchLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return LIMIT
    sys.stdout.write(report.json() if args.json else report.text())
    return code
