import itertools
from functools import lru_cache

import pytest

from downest.nesting import NestingSolver
from downest.patterns import maximal_subwords_naive


def w(text):
    """Compact digits to a word tuple; "" is the empty word."""
    return tuple(int(c) for c in text)


@lru_cache(maxsize=None)
def brute_ni(word):
    """Nesting index by plain recursion over raw words: no canonical forms,
    no bounds, maximal subwords from the naive segment scan."""
    if not word:
        return 0
    best = len(word)
    spans = [m.span for m in maximal_subwords_naive(word)]
    if spans:
        drop = {i for s in spans for i in range(s.start, s.start + s.length)}
        best = min(best, 1 + brute_ni(tuple(a for i, a in enumerate(word) if i not in drop)))
    for a in set(word):
        best = min(best, 1 + brute_ni(tuple(b for b in word if b != a)))
    return best


def brute_ascending(n):
    """Ascending double occurrence words of size n via multiset permutations."""
    out = set()
    for p in set(itertools.permutations([a for a in range(1, n + 1) for _ in range(2)])):
        seen = 0
        ok = True
        for a in p:
            if a > seen + 1:
                ok = False
                break
            seen = max(seen, a)
        if ok:
            out.add(p)
    return out


@pytest.fixture(scope="session")
def solver():
    return NestingSolver()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
