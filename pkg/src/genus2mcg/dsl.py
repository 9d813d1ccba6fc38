"""Text syntax for twist words, curve catalogs, factorizations and certificates.

Word expressions::

    expr := term*
    term := atom ["'"] ["^" integer]
    atom := "t"digit | "@"name | "(" expr ")" | "I"

``'`` inverts, ``@name`` is the twist about a named curve (or a named word
abbreviation), ``I`` is the identity.  In compact mode a bare digit 1..5 is
the chain twist t1..t5, so ``(12)^6`` means ``(t1 t2)^6``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

from .curves import ChainBoundary, CurveLibrary, Image, NamedCurve
from .factorization import (
    CyclicShift,
    Entry,
    Factorization,
    GlobalConjugate,
    HurwitzLeft,
    HurwitzRight,
    Move,
)
from .words import TWISTS, Word, free_reduce, invert_letters


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


_TOKEN = re.compile(
    r"\s*(?:(?P<twist>t[0-9]+)|(?P<name>@[A-Za-z_][A-Za-z0-9_]*)|(?P<digit>[0-9])"
    r"|(?P<lp>\()|(?P<rp>\))|(?P<inv>')|(?P<pow>\^\s*-?[0-9]+)|(?P<id>I\b))"
)

Resolver = Callable[[str], Word]


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r} at column {pos + 1}")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, resolve: Optional[Resolver], compact: bool):
        self.tokens = _tokenize(text)
        self.i = 0
        self.resolve = resolve
        self.compact = compact

    def peek(self) -> Optional[str]:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def expr(self) -> tuple[int, ...]:
        out: list[int] = []
        while self.peek() not in (None, "rp"):
            out.extend(self.term())
        return free_reduce(out)

    def term(self) -> tuple[int, ...]:
        kind, value, col = self.tokens[self.i]
        self.i += 1
        if kind == "twist":
            n = int(value[1:])
            if not 1 <= n <= TWISTS.size:
                raise ParseError(f"no chain twist {value} (have t1..t{TWISTS.size})")
            base: tuple[int, ...] = (n,)
        elif kind == "digit":
            if not self.compact:
                raise ParseError(f"bare digit {value!r} at column {col + 1}; enable compact mode or write t{value}")
            n = int(value)
            if not 1 <= n <= TWISTS.size:
                raise ParseError(f"no chain twist {value} in compact mode")
            base = (n,)
        elif kind == "name":
            if self.resolve is None:
                raise ParseError(f"named twist {value} but no curve library")
            try:
                base = self.resolve(value[1:]).letters
            except KeyError as exc:
                raise ParseError(f"unresolved name {value}") from exc
        elif kind == "id":
            base = ()
        elif kind == "lp":
            base = self.expr()
            if self.peek() != "rp":
                raise ParseError(f"unclosed parenthesis at column {col + 1}")
            self.i += 1
        else:
            raise ParseError(f"unexpected {value!r} at column {col + 1}")
        while self.peek() in ("inv", "pow"):
            k, v, _ = self.tokens[self.i]
            self.i += 1
            if k == "inv":
                base = invert_letters(base)
            else:
                n = int(v[1:].strip())
                base = free_reduce((base if n >= 0 else invert_letters(base)) * abs(n))
        return base


def parse_word(text: str, resolve: Optional[Resolver | Mapping[str, Word] | CurveLibrary] = None,
               compact: bool = False) -> Word:
    """Parse a word expression into a reduced chain-twist word."""
    p = _Parser(text, _as_resolver(resolve), compact)
    letters = p.expr()
    if p.peek() is not None:
        raise ParseError(f"unmatched ')' at column {p.tokens[p.i][2] + 1}")
    return Word(letters)


def _as_resolver(resolve) -> Optional[Resolver]:
    if resolve is None or callable(resolve) and not isinstance(resolve, CurveLibrary):
        return resolve
    if isinstance(resolve, CurveLibrary):
        return resolve.twist_word
    return lambda name: resolve[name]


def format_word(w: Word) -> str:
    """Print a word so that parse_word reads it back identically."""
    if not w.letters:
        return "I"
    parts = []
    letters = w.letters
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        a, run = letters[i], j - i
        sym = f"t{abs(a)}"
        if run == 1:
            parts.append(sym if a > 0 else sym + "'")
        else:
            parts.append(f"{sym}^{run if a > 0 else -run}")
        i = j
    return " ".join(parts)


# --- shared line handling ---------------------------------------------------

def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


_CLASS = re.compile(r"\s+(separating|nonseparating)\s*$")


@dataclass
class Scope:
    """Names visible to expressions: curves of a library plus word abbreviations."""

    library: CurveLibrary
    words: dict[str, Word] = field(default_factory=dict)
    compact: bool = False

    def resolve(self, name: str) -> Word:
        if name in self.words:
            return self.words[name]
        return self.library.twist_word(name)

    def parse(self, text: str) -> Word:
        return parse_word(text, self.resolve, self.compact)

    def directive(self, line: str, lineno: int) -> bool:
        """Handle compact/word/curve lines; return False if not a directive."""
        head = line.split(None, 1)[0]
        rest = line[len(head):].strip()
        try:
            if head == "compact":
                self.compact = rest in ("", "on")
                if rest not in ("", "on", "off"):
                    raise ParseError("compact takes 'on' or 'off'")
            elif head == "word":
                name, _, expr = rest.partition("=")
                name = name.strip()
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                    raise ParseError(f"bad abbreviation name {name!r}")
                if name in self.words or name in self.library:
                    raise ParseError(f"name {name!r} already defined")
                self.words[name] = self.parse(expr)
            elif head == "curve":
                self.library.add(parse_curve(rest, self))
            else:
                return False
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
        except (KeyError, ValueError) as exc:
            raise ParseError(str(exc).strip('"'), lineno) from None
        return True


def parse_curve(text: str, scope: Scope) -> NamedCurve:
    """``name = chain EXPR | apply EXPR to NAME | NAME  [separating|nonseparating]``."""
    declared = None
    m = _CLASS.search(text)
    if m:
        declared = m.group(1) == "separating"
        text = text[:m.start()]
    name, eq, body = text.partition("=")
    name, body = name.strip(), body.strip()
    if not eq or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
        raise ParseError(f"expected 'name = definition', got {text!r}")
    if body.startswith("chain "):
        definition = ChainBoundary(scope.parse(body[6:]))
    elif body.startswith("apply "):
        expr, sep, base = body[6:].rpartition(" to ")
        if not sep:
            raise ParseError("expected 'apply EXPR to CURVE'")
        definition = Image(scope.parse(expr), base.strip())
    elif re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", body):
        definition = Image(Word.identity(), body)
    else:
        raise ParseError(f"cannot read curve definition {body!r}")
    if isinstance(definition, Image) and definition.base not in scope.library:
        raise ParseError(f"unknown base curve {definition.base!r}")
    probe = NamedCurve(name, definition, False)
    lib = scope.library.copy()
    lib.add(probe, check=False)
    screened = lib.screen_separating(name)
    if declared is not None and declared != screened:
        raise ParseError(
            f"curve {name} declared {'separating' if declared else 'nonseparating'} "
            f"but acts {'trivially' if screened else 'nontrivially'} on homology"
        )
    return NamedCurve(name, definition, screened, "catalog")


def parse_catalog(text: str, library: CurveLibrary) -> CurveLibrary:
    """Add ``name = definition [class]`` lines (and directives) to a copy of library."""
    scope = Scope(library.copy())
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        if line.split(None, 1)[0] in ("compact", "word", "curve"):
            scope.directive(line, lineno)
            continue
        try:
            scope.library.add(parse_curve(line, scope))
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
        except (KeyError, ValueError) as exc:
            raise ParseError(str(exc).strip('"'), lineno) from None
    return scope.library


_LABEL = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(.*)$")


def parse_factorization(text: str, library: CurveLibrary, name: str = "") -> Factorization:
    """One twist expression per line, optionally prefixed by ``label:``."""
    scope = Scope(library.copy())
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line or scope.directive(line, lineno):
            continue
        m = _LABEL.match(line)
        label, expr = (m.group(1), m.group(2)) if m else (line, line)
        try:
            w = scope.parse(expr)
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
        entries.append(Entry(label, w))
    return Factorization(tuple(entries), name)


def format_factorization(f: Factorization) -> str:
    return "".join(f"{format_word(e.word)}\n" for e in f.entries)


def parse_certificate(text: str, library: Optional[CurveLibrary] = None) -> list[Move]:
    moves: list[Move] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if head in ("hurwitzL", "hurwitzR", "shift"):
                if not re.fullmatch(r"-?[0-9]+", rest):
                    raise ParseError(f"{head} needs an integer argument")
                n = int(rest)
                moves.append({"hurwitzL": HurwitzLeft, "hurwitzR": HurwitzRight, "shift": CyclicShift}[head](n))
            elif head == "conj":
                moves.append(GlobalConjugate(parse_word(rest, library)))
            else:
                raise ParseError(f"unknown move {head!r}")
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    return moves


def format_certificate(moves) -> str:
    return "".join(f"{m}\n" for m in moves)
