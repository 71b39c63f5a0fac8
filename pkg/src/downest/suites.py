"""Exhaustive and sampled checks of the structural results on nesting.

Each suite returns a SuiteResult; a non-empty failures list is a
counterexample report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .diagrams import (
    circle_graph,
    contains_c12,
    contains_cnm,
    generate,
    graphs_isomorphic,
    is_cluster_graph,
)
from .enumeration import enumerate_ascending
from .nesting import (
    NestingSolver,
    is_one_reducible,
    is_one_reducible_via_pattern,
    op1_rounds,
)
from .words import ascending_relabel, format_word, reverse

MAX_EXHAUSTIVE = 6
DEFAULT_SEED = 20140213


@dataclass
class SuiteResult:
    name: str
    claim: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def lines(self):
        status = "PASS" if self.ok else "FAIL"
        out = [f"[{status}] {self.name}: {self.claim} ({self.checked} checks)"]
        out += [f"  note: {n}" for n in self.notes]
        out += [f"  counterexample: {f}" for f in self.failures[:20]]
        if len(self.failures) > 20:
            out.append(f"  ... {len(self.failures) - 20} more")
        return out


def _words_up_to(max_size, min_size=1):
    if max_size > MAX_EXHAUSTIVE:
        raise ValueError(f"exhaustive suites stop at size {MAX_EXHAUSTIVE}")
    for n in range(min_size, max_size + 1):
        yield from enumerate_ascending(n)


def random_dow(size, rng):
    letters = list(range(1, size + 1)) * 2
    rng.shuffle(letters)
    return ascending_relabel(letters)


def theorem_c12(max_size=MAX_EXHAUSTIVE):
    res = SuiteResult(
        "theorem-c12",
        "1-reducible <=> no C1x2 sub-chord diagram <=> none of 123213, 123132, "
        "121323 inherent <=> circle graph is a cluster graph",
    )
    for w in _words_up_to(max_size):
        a = is_one_reducible(w)
        b = contains_c12(w) is None
        c = is_one_reducible_via_pattern(w)
        d = is_cluster_graph(circle_graph(w))
        res.checked += 1
        if not a == b == c == d:
            res.failures.append(f"{format_word(w)}: op1-only={a} no-C1x2={b} no-pattern={c} cluster={d}")
    return res


def lemma_bound(max_size=5, solver=None):
    solver = solver or NestingSolver()
    res = SuiteResult("lemma-bound", "NI(w) <= NI(w - a) + 1 for every letter a")
    for w in _words_up_to(max_size):
        ni = solver.value(w)
        for a in sorted(set(w)):
            sub = tuple(b for b in w if b != a)
            res.checked += 1
            if ni > solver.value(sub) + 1:
                res.failures.append(f"{format_word(w)} - {a}: NI {ni} > {solver.value(sub)} + 1")
    return res


def reverse_invariance(max_size=5, samples=1000, sizes=(6, 7, 8), seed=DEFAULT_SEED):
    """NI(w) = NI(reverse w), with a cache that does not identify the two."""
    solver = NestingSolver(symmetric=False)
    res = SuiteResult("reverse-invariance", "NI(w) = NI(w reversed)")

    def check(w):
        res.checked += 1
        a, b = solver.value(w), solver.value(reverse(w))
        if a != b:
            res.failures.append(f"{format_word(w)}: {a} vs reversed {b}")

    for w in _words_up_to(max_size):
        check(w)
    rng = random.Random(seed)
    for _ in range(samples):
        check(random_dow(rng.choice(sizes), rng))
    res.notes.append(f"exhaustive to size {max_size}, {samples} random words of sizes {list(sizes)}, seed {seed}")
    return res


def cnm_bound(max_size=MAX_EXHAUSTIVE, solver=None):
    solver = solver or NestingSolver()
    res = SuiteResult("cnm", "a Cnxm sub-chord diagram (2 <= n <= m) forces NI >= n + 1")
    found = 0
    for w in _words_up_to(max_size, min_size=4):
        size = len(w) // 2
        ni = None
        for n in range(2, size // 2 + 1):
            for m in range(n, size - n + 1):
                hit = contains_cnm(w, n, m)
                res.checked += 1
                if hit is None:
                    continue
                found += 1
                ni = solver.value(w) if ni is None else ni
                if ni < n + 1:
                    res.failures.append(f"{format_word(w)}: C{n}x{m} at {hit} but NI {ni}")
    for n, m, want, exact in ((2, 2, 3, True), (2, 3, 3, False), (3, 3, 4, True)):
        ni = solver.value(generate("grid", n, m))
        res.checked += 1
        if (ni != want) if exact else (ni < want):
            res.failures.append(f"grid({n},{m}): NI {ni}, expected {'' if exact else '>= '}{want}")
        else:
            res.notes.append(f"NI(grid({n},{m})) = {ni}")
    res.notes.append(f"{found} (word, n, m) occurrences found up to size {max_size}")
    return res


def families(n=4, solver=None):
    solver = solver or NestingSolver()
    res = SuiteResult("families", "NI(w1(k)) = k, NI(w2(k)) = 1, equal circle graphs")
    for k in range(1, n + 1):
        w1, w2 = generate("w1", k), generate("w2", k)
        a, b = solver.value(w1), solver.value(w2)
        iso = graphs_isomorphic(circle_graph(w1), circle_graph(w2))
        res.checked += 1
        if (a, b, iso) != (k, 1, True):
            res.failures.append(f"k={k}: NI(w1)={a} NI(w2)={b} isomorphic={iso}")
        else:
            res.notes.append(f"k={k}: NI(w1)={a}, NI(w2)={b}, circle graphs isomorphic")
    return res


def op1_rounds_agreement(max_size=MAX_EXHAUSTIVE, solver=None):
    """Compare NI with the number of op1-only rounds on 1-reducible words.

    Purely a measurement: the result never fails.
    """
    solver = solver or NestingSolver()
    res = SuiteResult("op1-rounds", "NI versus rounds of operation 1 on 1-reducible words")
    by_size = {}
    for w in _words_up_to(max_size):
        rounds = op1_rounds(w)
        if rounds is None:
            continue
        res.checked += 1
        agree, total = by_size.get(len(w) // 2, (0, 0))
        by_size[len(w) // 2] = (agree + (solver.value(w) == rounds), total + 1)
    for size, (agree, total) in sorted(by_size.items()):
        res.notes.append(f"size {size}: NI = op1 rounds for {agree} of {total} 1-reducible words")
    return res


SUITES = {
    "theorem-c12": theorem_c12,
    "lemma-bound": lemma_bound,
    "cnm": cnm_bound,
    "families": families,
    "reverse-invariance": reverse_invariance,
    "op1-rounds": op1_rounds_agreement,
}
