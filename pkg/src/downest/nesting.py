"""Exact nesting index by memoized depth-first branch and bound.

The search works on canonical forms: reversal and relabeling do not change
the nesting index, so one cache entry serves every equivalent word.  Each
entry is either exact (value plus the child that attains it) or a lower
bound left behind by a search that was cut off at some limit.
"""

from __future__ import annotations

import math
import os
import threading
from dataclasses import dataclass

from .patterns import ReductionTrace, Span, Step, _maximal_spans, op1_or_none
from .words import (
    WordError,
    ascending_relabel,
    canonical_form,
    format_word,
    is_inherent,
    validate_dow,
)

C12_WORDS = ((1, 2, 3, 2, 1, 3), (1, 2, 3, 1, 3, 2), (1, 2, 1, 3, 2, 3))

CACHE_HEADER = "downest-ni-cache v1"
INF = math.inf


@dataclass
class NestingResult:
    index: int
    witness: ReductionTrace

    def to_json(self, symbols=None):
        return {"index": self.index, "witness": self.witness.to_json(symbols)}


def _children(key, keyfn=canonical_form):
    """(op, detail, child key) in search order: op1 first, then op2 by child."""
    out = []
    seen = set()
    r = op1_or_none(key)
    if r is not None:
        c = keyfn(r)
        out.append(("op1", None, c))
        seen.add(c)
    op2 = {}
    for a in range(1, len(key) // 2 + 1):
        c = keyfn(tuple(b for b in key if b != a))
        if c not in seen and c not in op2:
            op2[c] = a
    for c in sorted(op2):
        out.append(("op2", op2[c], c))
    return out


class NestingSolver:
    """Nesting-index search with a private cache.

    Not safe for concurrent writers; share one behind a lock or give each
    worker its own.  With symmetric=False the cache is keyed by the
    ascending form alone, so a word and its reverse are solved separately.
    """

    def __init__(self, symmetric=True):
        self.key = canonical_form if symmetric else ascending_relabel
        self.exact = {(): (0, None)}
        self.lower = {}

    def __len__(self):
        return len(self.exact)

    def value(self, w) -> int:
        return self._search(self.key(tuple(w)), INF)

    def _search(self, key, limit):
        # exact NI(key) when it is below limit, otherwise some bound >= limit
        hit = self.exact.get(key)
        if hit is not None:
            return hit[0]
        lb = self.lower.get(key, 1)
        if lb >= limit:
            return lb
        children = _children(key, self.key)
        if children[0][2] == ():
            self.exact[key] = (1, children[0][:2] + ((),))
            return 1
        lb = max(lb, 2)
        if lb >= limit:
            self.lower[key] = lb
            return lb
        best, arg = INF, None
        for child in children:
            sub = min(best, limit) - 1
            v = self._search(child[2], sub)
            if v < sub:
                best, arg = v + 1, child
                if best <= lb:
                    break
        if best < limit:
            self.exact[key] = (best, arg)
            return best
        self.lower[key] = limit
        return limit

    def solve(self, w) -> NestingResult:
        w = tuple(w)
        if not validate_dow(w):
            raise WordError(f"{format_word(w)} is not a double occurrence word")
        index = self.value(w)
        return NestingResult(index, self._witness(w))

    def _witness(self, w):
        # walk the cached optimal children, replaying each step on the real word
        trace = ReductionTrace(w, [])
        cur = w
        while cur:
            _, (op, detail, target) = self.exact[self.key(cur)]
            if op == "op1":
                spans = tuple(Span(lo, hi - lo) for lo, hi in _maximal_spans(cur))
                nxt = op1_or_none(cur)
                trace.steps.append(Step("op1", spans, nxt))
            else:
                for a in sorted(set(cur)):
                    nxt = tuple(b for b in cur if b != a)
                    if self.key(nxt) == target:
                        break
                trace.steps.append(Step("op2", a, nxt))
            assert self.key(nxt) == target
            cur = nxt
        return trace

    def load(self, path):
        with open(path) as fh:
            if fh.readline().strip() != CACHE_HEADER:
                raise ValueError(f"{path}: not a {CACHE_HEADER} file")
            for line in fh:
                word, ni = line.split()
                key = tuple(int(t) for t in word.split("."))
                # a stored value is a lower bound the search then meets at once
                if key not in self.exact:
                    self.lower[key] = max(self.lower.get(key, 1), int(ni))

    def save(self, path):
        tmp = f"{path}.tmp"
        with open(tmp, "w") as fh:
            fh.write(CACHE_HEADER + "\n")
            for key, (ni, _) in sorted(self.exact.items()):
                if key:
                    fh.write(".".join(map(str, key)) + f" {ni}\n")
        os.replace(tmp, path)


_shared = NestingSolver()
_shared_lock = threading.Lock()


def nesting_index(w, solver: NestingSolver | None = None) -> NestingResult:
    """Exact nesting index of w with one optimal reduction as witness."""
    if solver is not None:
        return solver.solve(w)
    with _shared_lock:
        return _shared.solve(w)


def op1_rounds(w):
    """Rounds of operation 1 alone needed to reach the empty word, or None."""
    cur = tuple(w)
    rounds = 0
    while cur:
        cur = op1_or_none(cur)
        if cur is None:
            return None
        rounds += 1
    return rounds


def is_one_reducible(w) -> bool:
    return op1_rounds(w) is not None


def is_one_reducible_via_pattern(w) -> bool:
    return not any(is_inherent(p, w) for p in C12_WORDS)


def verify_letter_removal_bound(w, solver: NestingSolver | None = None) -> bool:
    """NI(w) <= NI(w - a) + 1 for every letter a of w."""
    w = tuple(w)
    solver = solver or NestingSolver()
    ni = solver.value(w)
    return all(ni <= solver.value(tuple(b for b in w if b != a)) + 1 for a in set(w))
