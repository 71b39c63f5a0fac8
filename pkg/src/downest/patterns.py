"""Repeat and return words, maximal subwords and the two reduction operations."""

from __future__ import annotations

import logging
from collections import namedtuple
from dataclasses import dataclass, field

from .words import Span, WordError, format_word, letter_removal, set_removal

log = logging.getLogger(__name__)

REPEAT, RETURN, BOTH = "repeat", "return", "both"

MaximalSubword = namedtuple("MaximalSubword", ["span", "kind"])


class InapplicableError(WordError):
    """Reduction operation 1 was requested on a word with no maximal subword."""


def _distinct(seq):
    return len(set(seq)) == len(seq)


def is_repeat_word(w) -> bool:
    """a1...an a1...an with distinct letters; the empty word does not count."""
    n, r = divmod(len(w), 2)
    if n == 0 or r:
        return False
    return tuple(w[:n]) == tuple(w[n:]) and _distinct(w[:n])


def is_return_word(w) -> bool:
    """a1...an an...a1 with distinct letters; the empty word does not count."""
    n, r = divmod(len(w), 2)
    if n == 0 or r:
        return False
    return tuple(w[:n]) == tuple(reversed(w[n:])) and _distinct(w[:n])


def _kind(seg):
    rep, ret = is_repeat_word(seg), is_return_word(seg)
    if rep and ret:
        return BOTH
    return REPEAT if rep else RETURN if ret else None


def partners(w):
    """partner[i] is the other position holding w[i]."""
    first = {}
    p = [0] * len(w)
    for i, a in enumerate(w):
        j = first.pop(a, None)
        if j is None:
            first[a] = i
        else:
            p[i], p[j] = j, i
    return p


def _candidates(w):
    # (start, stop) of every return word extended maximally about its center
    # and of every repeat word; all other R-segments sit inside one of these
    p = partners(w)
    L = len(w)
    out = set()
    for c in range(L - 1):
        if p[c] == c + 1:
            lo, hi = c, c + 1
            while lo > 0 and hi + 1 < L and p[lo - 1] == hi + 1:
                lo -= 1
                hi += 1
            out.add((lo, hi + 1))
    i = 0
    while i < L:
        d = p[i] - i
        j = i + 1
        while j < L and p[j] - j == d:
            j += 1
        if d > 0 and j - i == d:
            out.add((i, i + 2 * d))
        i = j
    return out


def _maximal_spans(w):
    cands = sorted(_candidates(w), key=lambda s: (s[0], -s[1]))
    spans = []
    for lo, hi in cands:
        # sorted by start then longest first: containment only by the last kept span
        if spans and spans[-1][1] >= hi:
            continue
        spans.append((lo, hi))
    return spans


def maximal_subwords(w) -> list:
    """Maximal repeat/return segments of a double occurrence word, left to right."""
    w = tuple(w)
    out = []
    for lo, hi in _maximal_spans(w):
        out.append(MaximalSubword(Span(lo, hi - lo), _kind(w[lo:hi])))
    for a, b in zip(out, out[1:]):
        assert a.span.stop <= b.span.start, "maximal subwords must be disjoint"
    return out


def maximal_subwords_naive(w) -> list:
    """Reference scan over all O(n^2) segments; slow, used to cross-check."""
    w = tuple(w)
    L = len(w)
    segs = [(i, j) for i in range(L) for j in range(i + 2, L + 1, 2) if _kind(w[i:j])]
    out = []
    for i, j in segs:
        if not any(a <= i and j <= b and (a, b) != (i, j) for a, b in segs):
            out.append(MaximalSubword(Span(i, j - i), _kind(w[i:j])))
    return sorted(out)


def op1_or_none(w):
    """Fast path for operation 1: the reduced tuple, or None when inapplicable."""
    spans = _maximal_spans(w)
    if not spans:
        return None
    out = []
    prev = 0
    for lo, hi in spans:
        out.extend(w[prev:lo])
        prev = hi
    out.extend(w[prev:])
    return tuple(out)


def reduce_op1(w):
    """Delete every maximal subword at once; returns (word, removed)."""
    w = tuple(w)
    removed = maximal_subwords(w)
    if not removed:
        raise InapplicableError("operation 1 inapplicable: no maximal subword")
    return set_removal(w, [m.span for m in removed]), removed


def reduce_op2(w, a):
    return letter_removal(tuple(w), a)


Step = namedtuple("Step", ["op", "detail", "word"])


@dataclass
class ReductionTrace:
    """A start word and the steps taken from it.

    op1 steps carry the removed spans as detail, op2 steps the letter.
    """

    initial: tuple
    steps: list = field(default_factory=list)

    @property
    def words(self):
        return [self.initial] + [s.word for s in self.steps]

    def __len__(self):
        return len(self.steps)

    @classmethod
    def from_words(cls, words):
        """Infer the operation behind each consecutive pair of words.

        Pairs that follow from no operation are kept with op None so that
        validate_trace rejects them.
        """
        words = [tuple(u) for u in words]
        steps = []
        for prev, nxt in zip(words, words[1:]):
            steps.append(_infer_step(prev, nxt))
        return cls(words[0], steps)

    def to_json(self, symbols=None):
        def fmt(u):
            return [symbols[a - 1] for a in u] if symbols else list(u)

        rows = []
        for s in self.steps:
            if s.op == "op1":
                detail = [[sp.start, sp.length] for sp in s.detail]
            elif s.op == "op2" and symbols:
                detail = symbols[s.detail - 1]
            else:
                detail = s.detail
            rows.append({"op": s.op, "detail": detail, "word": fmt(s.word)})
        return rows

    @classmethod
    def from_json(cls, initial, rows):
        steps = []
        for r in rows:
            detail = r["detail"]
            if r["op"] == "op1":
                detail = tuple(Span(*sp) for sp in detail)
            steps.append(Step(r["op"], detail, tuple(r["word"])))
        return cls(tuple(initial), steps)

    def describe(self, symbols=None):
        parts = [format_word(self.initial, symbols)]
        for s in self.steps:
            if s.op == "op2":
                tag = f"op2({format_word((s.detail,), symbols)})"
            else:
                tag = str(s.op)
            parts.append(f"--{tag}--> {format_word(s.word, symbols)}")
        return " ".join(parts)


def _infer_step(prev, nxt):
    spans = _maximal_spans(prev)
    if spans and op1_or_none(prev) == nxt:
        return Step("op1", tuple(Span(lo, hi - lo) for lo, hi in spans), nxt)
    for a in sorted(set(prev)):
        if tuple(b for b in prev if b != a) == nxt:
            return Step("op2", a, nxt)
    return Step(None, None, nxt)


def trace_problem(t: ReductionTrace):
    """First reason the trace is not a reduction, or None."""
    cur = tuple(t.initial)
    for k, s in enumerate(t.steps, 1):
        if s.op == "op1":
            spans = _maximal_spans(cur)
            if not spans:
                return f"step {k}: operation 1 inapplicable to {format_word(cur)}"
            expected = tuple(Span(lo, hi - lo) for lo, hi in spans)
            if s.detail is not None and tuple(Span(*sp) for sp in s.detail) != expected:
                return f"step {k}: removed spans differ from the maximal subwords"
            want = op1_or_none(cur)
        elif s.op == "op2":
            if s.detail not in cur:
                return f"step {k}: letter {s.detail} absent from {format_word(cur)}"
            want = tuple(b for b in cur if b != s.detail)
        else:
            return f"step {k}: {format_word(s.word)} does not follow from {format_word(cur)}"
        if tuple(s.word) != want:
            return f"step {k}: expected {format_word(want)}, got {format_word(s.word)}"
        cur = want
    if cur:
        return f"trace ends at {format_word(cur)}, not the empty word"
    return None


def validate_trace(t: ReductionTrace) -> bool:
    problem = trace_problem(t)
    if problem:
        log.debug("invalid reduction: %s", problem)
    return problem is None
