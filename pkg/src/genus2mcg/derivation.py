"""Line-by-line semantic checking of derivation scripts.

A script is a list of claims about twist words.  Each claim is decided by
evaluating both sides in Mod_2; consecutive lines are not required to be
related by any particular rewrite.

Script syntax (``#`` starts a comment)::

    compact [on|off]              digits 1..5 mean t1..t5
    word NAME = EXPR              abbreviation, referenced as @NAME
    curve NAME = DEFINITION       as in curve catalogs
    [label:] EXPR = I             EXPR is the identity
    [label:] EXPR = prev          EXPR equals the previous claim's left side
    [label:] EXPR = EXPR          both sides are equal
    [label:] commutes EXPR with i, j, ...
"""
from __future__ import annotations

import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from .curves import CurveLibrary, builtin_library
from .dsl import ParseError, Scope, format_word
from .mcg import MappingClass, describe, evaluate_word, is_identity_mod2
from .words import Word, concat, invert


@dataclass(frozen=True)
class Claim:
    lineno: int
    label: str
    text: str
    kind: str  # "identity" | "previous" | "equal" | "commutes"
    lhs: Word
    rhs: Word = Word.identity()
    generators: tuple[int, ...] = ()


@dataclass
class DerivationScript:
    abbreviations: dict[str, Word] = field(default_factory=dict)
    library: CurveLibrary = field(default_factory=builtin_library)
    claims: list[Claim] = field(default_factory=list)


@dataclass(frozen=True)
class LineResult:
    claim: Claim
    passed: bool
    diagnostics: dict[str, str]


@dataclass
class Report:
    results: list[LineResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def first_failure(self) -> Optional[LineResult]:
        return next((r for r in self.results if not r.passed), None)


_LABEL = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(.*)$")
_COMMUTES = re.compile(r"^commutes\s+(.*?)\s+with\s+([0-9,\s]+)$")


def parse_script(text: str, library: Optional[CurveLibrary] = None) -> DerivationScript:
    scope = Scope((library if library is not None else builtin_library()).copy())
    claims: list[Claim] = []
    previous: Optional[Word] = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line or scope.directive(line, lineno):
            continue
        label = f"line {lineno}"
        m = _LABEL.match(line)
        if m:
            label, line = m.group(1), m.group(2)
        try:
            cm = _COMMUTES.match(line)
            if cm:
                gens = tuple(int(g) for g in re.split(r"[,\s]+", cm.group(2).strip()) if g)
                if not gens or any(not 1 <= g <= 5 for g in gens):
                    raise ParseError("commutes needs chain indices 1..5")
                claims.append(Claim(lineno, label, line, "commutes", scope.parse(cm.group(1)), generators=gens))
                continue
            lhs_text, eq, rhs_text = line.rpartition("=")
            if not eq:
                raise ParseError("expected a claim 'EXPR = I', 'EXPR = prev' or 'EXPR = EXPR'")
            lhs = scope.parse(lhs_text)
            rhs_text = rhs_text.strip()
            if rhs_text == "prev":
                if previous is None:
                    raise ParseError("'prev' on the first claim")
                claim = Claim(lineno, label, line, "previous", lhs, previous)
            elif rhs_text == "I":
                claim = Claim(lineno, label, line, "identity", lhs)
            else:
                claim = Claim(lineno, label, line, "equal", lhs, scope.parse(rhs_text))
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
        except KeyError as exc:
            raise ParseError(f"unresolved name {exc}", lineno) from None
        claims.append(claim)
        previous = lhs
    return DerivationScript(dict(scope.words), scope.library, claims)


def check_commutes(u: Word, i: int) -> bool:
    """True iff u commutes with the chain twist t_i in Mod_2."""
    t = Word.gen(i)
    return is_identity_mod2(evaluate_word(concat(concat(concat(u, t), invert(u)), invert(t))))


def _check(claim: Claim) -> LineResult:
    if claim.kind == "commutes":
        failed = [i for i in claim.generators if not check_commutes(claim.lhs, i)]
        diag = {"commutes_with": " ".join(str(i) for i in claim.generators if i not in failed)}
        if failed:
            diag["fails_for"] = " ".join(map(str, failed))
        return LineResult(claim, not failed, diag)
    m: MappingClass = evaluate_word(concat(claim.lhs, invert(claim.rhs)))
    ok = is_identity_mod2(m)
    diag = {} if ok else describe(m)
    return LineResult(claim, ok, diag)


def verify_script(script: DerivationScript, workers: int = 1) -> Report:
    """Check every claim; results are in line order whatever ``workers`` is."""
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(_check, script.claims))
    else:
        results = [_check(c) for c in script.claims]
    return Report(results)


def load_builtin_script(name: str = "section5.deriv") -> str:
    return resources.files("genus2mcg.data").joinpath(name).read_text()


__all__ = [
    "Claim", "DerivationScript", "LineResult", "Report", "check_commutes",
    "format_word", "load_builtin_script", "parse_script", "verify_script",
]
