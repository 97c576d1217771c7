# SPDX-License-Identifier: MIT
# Copyright (c) 2025-2026 alfkit contributors

"""
The monodromy word language.

    word     := "id" | letter+          (letters separated by whitespace)
    letter   := curve exponent?
    curve    := ("a" | "b" | "c" | "s") digits
    exponent := "^" "-"? digits

"a1^-2" expands to two negative twists along a1. Letters apply left to right.
Errors carry the (start, end) character span of the offending token. Words
longer than MAX_WORD_LETTERS letters after expansion are rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

from config import MAX_WORD_LETTERS
from surface_model import AlfInputError, CurveSystem, Letter, TwistWord

_TOKEN_RE = re.compile(r"\S+")
_LETTER_RE = re.compile(r"([A-Za-z]+)([0-9]+)(?:\^(-?[0-9]+))?")
_FAMILIES = ("a", "b", "c", "s")

Span = Tuple[int, int]


class WordSyntaxError(AlfInputError):
    def __init__(self, message: str, span: Optional[Span] = None):
        self.span = span
        self.reason = message
        if span is not None:
            message = f"{message} at {span[0]}..{span[1]}"
        super().__init__(message)


@dataclass(frozen=True)
class ParsedLetter:
    name: str
    chirality: int
    span: Span


@dataclass(frozen=True)
class ParsedWord:
    text: str
    letters: Tuple[ParsedLetter, ...]

    def to_twist_word(self) -> TwistWord:
        return TwistWord(tuple(Letter(p.name, p.chirality) for p in self.letters))


def parse_word(text: str) -> ParsedWord:
    """Parse the word language into letters with their source spans."""
    if text is None or not text.strip():
        raise WordSyntaxError("empty word (use 'id' for the identity)", (0, len(text or "")))

    tokens = list(_TOKEN_RE.finditer(text))
    if len(tokens) == 1 and tokens[0].group() == "id":
        return ParsedWord(text, ())

    letters: List[ParsedLetter] = []
    for token in tokens:
        span = token.span()
        raw = token.group()
        if raw == "id":
            raise WordSyntaxError("'id' must stand alone", span)
        match = _LETTER_RE.fullmatch(raw)
        if not match:
            raise WordSyntaxError(f"malformed token {raw!r}", span)
        family, digits, exponent = match.groups()
        if family not in _FAMILIES or digits.startswith("0"):
            raise WordSyntaxError(f"unknown curve label {family + digits!r}", span)
        if family == "b" and digits not in ("1", "2"):
            raise WordSyntaxError(f"unknown curve label {family + digits!r} (only b1 and b2 exist)", span)
        try:
            power = 1 if exponent is None else int(exponent)
        except ValueError:
            raise WordSyntaxError(f"exponent too large in {raw[:24]!r}", span) from None
        if power == 0:
            raise WordSyntaxError(f"exponent 0 in {raw!r}", span)
        if len(letters) + abs(power) > MAX_WORD_LETTERS:
            raise WordSyntaxError(f"word exceeds {MAX_WORD_LETTERS} letters", span)
        chirality = 1 if power > 0 else -1
        letters.extend(ParsedLetter(family + digits, chirality, span) for _ in range(abs(power)))
    return ParsedWord(text, tuple(letters))


def resolve_word(parsed: ParsedWord, system: CurveSystem) -> TwistWord:
    """Check every letter against the fiber's curves, reporting spans."""
    for letter in parsed.letters:
        try:
            system.curve(letter.name)
        except AlfInputError as exc:
            raise WordSyntaxError(str(exc), letter.span) from None
    return parsed.to_twist_word()


def format_word(word: TwistWord) -> str:
    """Inverse of parse_word: runs of one letter collapse into an exponent."""
    if not len(word):
        return "id"
    tokens = []
    letters = list(word)
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        curve, chirality = letters[i]
        power = chirality * (j - i)
        tokens.append(curve if power == 1 else f"{curve}^{power}")
        i = j
    return " ".join(tokens)
