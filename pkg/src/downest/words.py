"""Word representation, relabeling and the removal primitives.

A word is a tuple of positive ints.  Parsing normalizes arbitrary symbols
to dense ids in first-occurrence order and keeps the original symbols
around for display.
"""

from __future__ import annotations

import re
from collections import Counter, namedtuple
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

EMPTY_SYMBOL = "ε"

Word = tuple  # tuple[int, ...]


class Span(namedtuple("Span", ["start", "length"])):
    """Contiguous occurrence inside a word: 0-based start and number of positions."""

    __slots__ = ()

    @property
    def stop(self):
        return self.start + self.length


_TOKEN = re.compile(r"^[A-Za-z0-9_]+$")


class WordError(ValueError):
    """Malformed word text or an operation applied to an invalid word."""

    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


@dataclass(frozen=True)
class ParsedWord:
    letters: tuple
    symbols: tuple  # symbols[i - 1] is the display symbol of letter id i

    @property
    def size(self):
        return len(set(self.letters))

    @property
    def length(self):
        return len(self.letters)

    def display(self, letters=None):
        return format_word(self.letters if letters is None else letters, self.symbols)


def _tokens(text, fmt):
    text = text.strip()
    if text in ("", EMPTY_SYMBOL):
        return []
    if fmt == "compact":
        toks = [c for c in text if not c.isspace()]
    elif fmt == "tokens":
        # commas are accepted as separators; ",," yields an empty token
        toks = re.split(r"\s*,\s*|\s+", text)
    else:
        raise WordError(f"unknown word format {fmt!r}")
    for t in toks:
        if t == "":
            raise WordError("empty token", token=t)
        if not _TOKEN.match(t):
            raise WordError(f"invalid token {t!r}", token=t)
    return toks


def detect_format(text):
    """Pick "compact" for a single run of at most 36 distinct alphanumerics."""
    stripped = text.strip()
    if stripped and stripped.isalnum() and len(set(stripped)) <= 36:
        return "compact"
    return "tokens"


def parse_word(text: str, fmt: str = "compact", validate: bool = False) -> ParsedWord:
    """Parse word text, relabeling symbols to 1, 2, ... by first occurrence.

    >>> parse_word("12 7 12 7", "tokens").letters
    (1, 2, 1, 2)
    """
    toks = _tokens(text, fmt)
    ids = {}
    letters = []
    for t in toks:
        if t not in ids:
            ids[t] = len(ids) + 1
        letters.append(ids[t])
    if validate:
        counts = Counter(toks)
        for t in toks:
            if counts[t] != 2:
                raise WordError(
                    f"symbol {t!r} occurs {counts[t]} time(s); "
                    "a double occurrence word needs exactly two",
                    token=t,
                )
    return ParsedWord(tuple(letters), tuple(ids))


def format_word(w: Sequence[int], symbols: Sequence[str] | None = None, sep=None) -> str:
    """Render a word; compact when every symbol is one character."""
    if not w:
        return EMPTY_SYMBOL
    if symbols is None:
        syms = [str(a) for a in w]
    else:
        syms = [symbols[a - 1] for a in w]
    if sep is None:
        sep = "" if all(len(s) == 1 for s in syms) else " "
    return sep.join(syms)


def validate_dow(w: Iterable[int]) -> bool:
    return all(c == 2 for c in Counter(w).values())


def ascending_relabel(w: Sequence[int]) -> tuple:
    ids = {}
    return tuple(ids.setdefault(a, len(ids) + 1) for a in w)


def reverse(w: Sequence[int]) -> tuple:
    return tuple(reversed(w))


def reverse_equivalent(w1, w2) -> bool:
    """True if the words agree, up to relabeling, read forwards or backwards."""
    a = ascending_relabel(w1)
    return a == ascending_relabel(w2) or a == ascending_relabel(reverse(w2))


def canonical_form(w: Sequence[int]) -> tuple:
    """Smallest ascending relabeling among w and its reverse."""
    fwd = ascending_relabel(w)
    bwd = ascending_relabel(w[::-1])
    return fwd if fwd <= bwd else bwd


def _check_span(w, span):
    start, length = span
    if start < 0 or length < 0 or start + length > len(w):
        raise WordError(f"span {tuple(span)} out of range for word of length {len(w)}")
    seg = w[start:start + length]
    if not validate_dow(seg):
        raise WordError(f"segment {format_word(seg)} is not a double occurrence word")


def subword_removal(w: Sequence[int], span) -> tuple:
    span = Span(*span)
    _check_span(w, span)
    return tuple(w[:span.start]) + tuple(w[span.stop:])


def set_removal(w: Sequence[int], spans) -> tuple:
    """Remove a set of pairwise disjoint double occurrence segments at once."""
    spans = sorted(Span(*s) for s in spans)
    for s in spans:
        _check_span(w, s)
    for a, b in zip(spans, spans[1:]):
        if a.length and b.length and b.start < a.stop:
            raise WordError(f"spans {tuple(a)} and {tuple(b)} overlap")
    out = []
    prev = 0
    for s in spans:
        out.extend(w[prev:s.start])
        prev = max(prev, s.stop)
    out.extend(w[prev:])
    return tuple(out)


def letter_removal(w: Sequence[int], a: int) -> tuple:
    if a not in w:
        raise WordError(f"letter {a} does not occur in the word", token=str(a))
    return tuple(b for b in w if b != a)


def is_ascending(w: Sequence[int]) -> bool:
    return tuple(w) == ascending_relabel(w)


def _restrict(w, keep):
    return tuple(a for a in w if a in keep)


def _embeds(pattern, w):
    # backtracking: pattern positions onto increasing w positions, injective letter map
    n, m = len(pattern), len(w)
    fwd, used = {}, set()

    def go(i, j):
        if i == n:
            return True
        p = pattern[i]
        for k in range(j, m - (n - i) + 1):
            a = w[k]
            if p in fwd:
                if fwd[p] != a:
                    continue
                if go(i + 1, k + 1):
                    return True
            elif a not in used:
                fwd[p] = a
                used.add(a)
                if go(i + 1, k + 1):
                    return True
                del fwd[p]
                used.discard(a)
        return False

    return go(0, 0)


def is_inherent(pattern: Sequence[int], w: Sequence[int]) -> bool:
    """Does some subsequence of w relabel (ascending) to pattern?

    When both words are double occurrence words a matching subsequence
    must take both copies of each of its letters, so it suffices to try
    restrictions of w to letter subsets of the right size.
    """
    pattern = tuple(pattern)
    if not is_ascending(pattern):
        raise WordError(f"pattern {format_word(pattern)} is not in ascending order")
    if not pattern:
        return True
    if len(pattern) > len(w):
        return False
    if validate_dow(pattern) and validate_dow(w):
        k = len(set(pattern))
        letters = sorted(set(w))
        return any(
            ascending_relabel(_restrict(w, set(sub))) == pattern
            for sub in combinations(letters, k)
        )
    return _embeds(pattern, tuple(w))
