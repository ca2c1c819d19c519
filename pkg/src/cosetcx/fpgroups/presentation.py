"""Presentations and words.

Text format::

    gens: a, b ; rels: a^2, (a*b)^3

Sections may also sit on separate lines.  Words use ``*`` for concatenation,
``^`` for integer powers (negative allowed) and parentheses; ``1`` is the empty
word.  Internally generator ``i`` is the letter ``i + 1`` and its inverse ``-(i + 1)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from ..errors import ParseError

Word = tuple[int, ...]

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"-?\d+")


def free_reduce(word: Sequence[int]) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(word: Sequence[int]) -> Word:
    w = list(free_reduce(word))
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def inverse(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def word_power(word: Sequence[int], k: int) -> Word:
    base = tuple(word) if k >= 0 else inverse(word)
    return free_reduce(base * abs(k))


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self) -> None:
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be distinct")
        for r in self.relators:
            if free_reduce(r) != tuple(r):
                raise ValueError("relators must be freely reduced")
            if any(x == 0 or abs(x) > len(self.generators) for x in r):
                raise ValueError("relator uses an unknown generator")

    @property
    def n_gens(self) -> int:
        return len(self.generators)

    def format_word(self, word: Sequence[int]) -> str:
        if not word:
            return "1"
        parts: list[str] = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            name = self.generators[abs(word[i]) - 1]
            k = (j - i) * (1 if word[i] > 0 else -1)
            parts.append(name if k == 1 else f"{name}^{k}")
            i = j
        return "*".join(parts)

    def to_text(self) -> str:
        return f"gens: {', '.join(self.generators)} ; rels: {', '.join(self.format_word(r) for r in self.relators)}"

    def with_relators(self, extra: Sequence[Word]) -> Presentation:
        rels = list(self.relators)
        for r in extra:
            r = free_reduce(r)
            if r and r not in rels:
                rels.append(r)
        return Presentation(self.generators, tuple(rels))


class _WordParser:
    def __init__(self, text: str, names: dict[str, int], offset: int = 0) -> None:
        self.text = text
        self.names = names
        self.pos = 0
        self.offset = offset

    def error(self, msg: str) -> ParseError:
        return ParseError(msg, self.text, self.offset + self.pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def parse(self) -> Word:
        self.skip()
        w = self.word()
        self.skip()
        if self.pos != len(self.text):
            raise self.error("unexpected character")
        return w

    def word(self) -> Word:
        out = list(self.factor())
        while True:
            self.skip()
            if self.pos < len(self.text) and self.text[self.pos] == "*":
                self.pos += 1
                out.extend(self.factor())
            else:
                return free_reduce(out)

    def factor(self) -> Word:
        self.skip()
        base = self.atom()
        self.skip()
        if self.pos < len(self.text) and self.text[self.pos] == "^":
            self.pos += 1
            self.skip()
            m = _INT.match(self.text, self.pos)
            if not m:
                raise self.error("expected an integer exponent")
            self.pos = m.end()
            return word_power(base, int(m.group()))
        return base

    def atom(self) -> Word:
        if self.pos >= len(self.text):
            raise self.error("unexpected end of word")
        ch = self.text[self.pos]
        if ch == "(":
            self.pos += 1
            inner = self.word()
            self.skip()
            if self.pos >= len(self.text) or self.text[self.pos] != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return inner
        if ch == "1" and not self.text[self.pos + 1:self.pos + 2].isdigit():
            self.pos += 1
            return ()
        m = _NAME.match(self.text, self.pos)
        if not m:
            raise self.error("expected a generator name")
        name = m.group()
        if name not in self.names:
            raise self.error(f"unknown generator {name!r}")
        self.pos = m.end()
        return (self.names[name] + 1,)


def _split_list(body: str) -> list[tuple[str, int]]:
    """Split on commas outside parentheses, keeping each item's start offset."""
    items, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            items.append((body[start:i], start))
            start = i + 1
    items.append((body[start:], start))
    return [(t, off) for t, off in items if t.strip()]


def parse_word(text: str, generators: Sequence[str]) -> Word:
    names = {g: i for i, g in enumerate(generators)}
    return _WordParser(text, names).parse()


def parse_words(text: str, generators: Sequence[str]) -> tuple[Word, ...]:
    """Comma-separated words; the empty string gives no words (the trivial subgroup)."""
    names = {g: i for i, g in enumerate(generators)}
    return tuple(_WordParser(t, names, off).parse() for t, off in _split_list(text))


def parse_presentation(text: str) -> Presentation:
    src = text
    sections: dict[str, tuple[str, int]] = {}
    pos = 0
    for chunk in re.split(r"[;\n]", text):
        start = pos
        pos += len(chunk) + 1
        if not chunk.strip():
            continue
        key, sep, body = chunk.partition(":")
        key = key.strip().lower()
        if not sep or key not in ("gens", "rels"):
            raise ParseError("expected 'gens:' or 'rels:' section", src, start)
        if key in sections:
            raise ParseError(f"duplicate {key!r} section", src, start)
        sections[key] = (body, start + len(chunk) - len(body))
    if "gens" not in sections:
        raise ParseError("missing 'gens:' section", src, 0)
    gbody, goff = sections["gens"]
    gens = []
    for name, off in _split_list(gbody):
        name = name.strip()
        if not _NAME.fullmatch(name):
            raise ParseError(f"bad generator name {name!r}", src, goff + off)
        gens.append(name)
    if len(set(gens)) != len(gens):
        raise ParseError("generator names must be distinct", src, goff)
    names = {g: i for i, g in enumerate(gens)}
    rels: list[Word] = []
    if "rels" in sections:
        rbody, roff = sections["rels"]
        for item, off in _split_list(rbody):
            try:
                w = _WordParser(item, names).parse()
            except ParseError as exc:
                raise ParseError(str(exc).split(" at position")[0], src,
                                 roff + off + (exc.position or 0)) from None
            if w and w not in rels:
                rels.append(w)
    return Presentation(tuple(gens), tuple(rels))


def load_presentation(source: str) -> Presentation:
    """Accept inline presentation text or a path to a UTF-8 file holding it."""
    path = Path(source)
    if "gens" not in source and path.exists():
        return parse_presentation(path.read_text(encoding="utf-8"))
    return parse_presentation(source)
