"""The reproduction suite: relations, types, certificates and the derivation.

``run_suite`` evaluates everything under one half-twist convention so that
the two conventions can be compared.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from importlib import resources

from .curves import builtin_library
from .derivation import load_builtin_script, parse_script, verify_script
from .dsl import parse_certificate
from .equivalence import MoveCertificate, verify_certificate
from .factorization import builtin_factorizations, classify, is_relation
from .mcg import using_convention
from .pi1 import Handedness

EXPECTED_SEPARATING = {
    "bk": {"e", "d", "C"},
    "hamada": {"alpha", "sigma", "gamma"},
    "xiao": {"Q3", "Q2", "Q1"},
}


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


def builtin_certificate(name: str) -> MoveCertificate:
    text = resources.files("genus2mcg.data").joinpath(f"{name}.cert").read_text()
    return MoveCertificate(tuple(parse_certificate(text)))


def run_suite(handedness: Handedness = Handedness.STANDARD) -> list[Check]:
    checks: list[Check] = []
    with using_convention(handedness):
        lib = builtin_library()
        facts = builtin_factorizations(lib)
        for name, f in facts.items():
            t = time.perf_counter()
            ok = is_relation(f)
            checks.append(Check(f"relation:{name}", ok, "identity in Mod_2" if ok else "not a relation",
                                time.perf_counter() - t))
        for name, f in facts.items():
            kind = classify(f)
            seps = {e.label for e in f.entries if e.separating}
            ok = (kind.n, kind.s) == (4, 3) and seps == EXPECTED_SEPARATING[name]
            checks.append(Check(f"type:{name}", ok, f"{kind} separating={sorted(seps)}"))
        for cert, src, dst in (("bk-hamada", "bk", "hamada"), ("xiao-hamada", "xiao", "hamada"),
                               ("bk-xiao", "bk", "xiao")):
            t = time.perf_counter()
            ok = verify_certificate(facts[src], facts[dst], builtin_certificate(cert))
            checks.append(Check(f"certificate:{cert}", ok, "", time.perf_counter() - t))
        composed = builtin_certificate("bk-hamada").then(builtin_certificate("xiao-hamada").inverse(7))
        checks.append(Check("certificate:composed", verify_certificate(facts["bk"], facts["xiao"], composed)))
        t = time.perf_counter()
        report = verify_script(parse_script(load_builtin_script(), lib))
        bad = report.first_failure
        checks.append(Check("derivation:section5", report.passed,
                            f"{len(report.results)} claims" + (f", first failure {bad.claim.label}" if bad else ""),
                            time.perf_counter() - t))
    return checks


def validated_conventions() -> dict[Handedness, bool]:
    return {h: all(c.passed for c in run_suite(h)) for h in Handedness}
