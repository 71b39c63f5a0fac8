"""Ascending-order word enumeration, nesting-index tallies and the
minimal-size experiment.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from .nesting import NestingSolver

DEFAULT_MAX_SIZE = 7
LONG_MAX_SIZE = 8

# Table 1 of the reference counts, sizes 1-9 (size -> {nesting index: count})
TABLE1 = {
    1: {1: 1},
    2: {1: 3},
    3: {1: 7, 2: 8},
    4: {1: 17, 2: 78, 3: 10},
    5: {1: 41, 2: 424, 3: 479, 4: 1},
    6: {1: 99, 2: 1915, 3: 6248, 4: 2133},
    7: {1: 239, 2: 7914, 3: 50247, 4: 69879, 5: 6856},
    8: {1: 577, 2: 31370, 3: 328810, 4: 1004642, 5: 648065, 6: 13561},
    9: {1: 1393, 2: 122530, 3: 1927900, 4: 10125920, 5: 17081040, 6: 5187788,
        7: 12854},
}


def double_factorial_odd(n):
    """(2n-1)!!, the number of ascending double occurrence words of size n."""
    return math.prod(range(1, 2 * n, 2))


def _extend(prefix, n, opened, open_letters):
    # open_letters: letters seen once so far, kept in a list for determinism
    if len(prefix) == 2 * n:
        yield tuple(prefix)
        return
    if opened < n:
        prefix.append(opened + 1)
        open_letters.append(opened + 1)
        yield from _extend(prefix, n, opened + 1, open_letters)
        open_letters.pop()
        prefix.pop()
    for i, a in enumerate(list(open_letters)):
        prefix.append(a)
        del open_letters[i]
        yield from _extend(prefix, n, opened, open_letters)
        open_letters.insert(i, a)
        prefix.pop()


def enumerate_ascending(n: int, prefix=()):
    """Yield every ascending double occurrence word of size n once.

    A non-empty prefix restricts the stream to words starting with it; the
    prefix itself must be a valid start (ascending, no letter thrice).
    """
    prefix = list(prefix)
    seen = Counter(prefix)
    opened = max(prefix, default=0)
    open_letters = [a for a in dict.fromkeys(prefix) if seen[a] == 1]
    if len(prefix) > 2 * n:
        return
    yield from _extend(prefix, n, opened, open_letters)


def prefixes(n: int, depth: int):
    """All valid generation prefixes of the given length (disjoint subtrees)."""
    depth = min(depth, 2 * n)
    out = []

    def go(prefix, opened, open_letters):
        if len(prefix) == depth:
            out.append(tuple(prefix))
            return
        if opened < n:
            go(prefix + [opened + 1], opened + 1, open_letters + [opened + 1])
        for i, a in enumerate(open_letters):
            go(prefix + [a], opened, open_letters[:i] + open_letters[i + 1:])

    go([], 0, [])
    return out


_worker_solver = None


def _tally_chunk(args):
    # one cache per process, reused across the chunks that process receives
    global _worker_solver
    if _worker_solver is None:
        _worker_solver = NestingSolver()
    n, prefix = args
    solver = _worker_solver
    counts = Counter()
    for w in enumerate_ascending(n, prefix):
        counts[solver.value(w)] += 1
    return counts


def tally_nesting(n: int, workers: int | None = 1, split_depth: int | None = None) -> dict:
    """Count ascending words of size n by nesting index.

    With several workers the generation tree is cut at a fixed prefix
    depth and each worker tallies whole subtrees with its own cache.
    """
    if n < 1:
        raise ValueError("size must be at least 1")
    workers = workers or os.cpu_count() or 1
    if workers == 1 or n <= 4:
        solver = NestingSolver()
        counts = Counter(solver.value(w) for w in enumerate_ascending(n))
    else:
        depth = split_depth or min(2 * n, 5)
        jobs = [(n, p) for p in prefixes(n, depth)]
        counts = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for c in pool.map(_tally_chunk, jobs, chunksize=1):
                counts.update(c)
    return dict(sorted(counts.items()))


def tally_csv(rows: dict) -> str:
    """rows: size -> {ni: count}; CSV sorted by (size, ni)."""
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["size", "ni", "count"])
    for size in sorted(rows):
        for ni in sorted(rows[size]):
            out.writerow([size, ni, rows[size][ni]])
    return buf.getvalue()


def tally_json(size: int, row: dict) -> str:
    return json.dumps({"size": size, "tallies": {str(k): v for k, v in sorted(row.items())}})


def squares_below(n):
    """Number of non-zero perfect squares strictly less than n."""
    return math.isqrt(n - 1) if n > 1 else 0


def min_size_for_ni(max_n: int, max_size: int = DEFAULT_MAX_SIZE, workers: int | None = 1,
                    tallies: dict | None = None) -> list:
    """Smallest size with a word of each nesting index 1..max_n.

    Sizes are tallied in increasing order up to max_size; an index not
    reached by then reports size None.  Each row carries n, s, n-s and n+s
    where s counts the non-zero squares below n.
    """
    if max_size > LONG_MAX_SIZE:
        raise ValueError(f"tallies beyond size {LONG_MAX_SIZE} are not supported here")
    tallies = dict(tallies or {})
    found = {}
    for size in range(1, max_size + 1):
        if all(k in found for k in range(1, max_n + 1)):
            break
        if size not in tallies:
            tallies[size] = tally_nesting(size, workers)
        for ni, count in tallies[size].items():
            if count and ni <= max_n:
                found.setdefault(ni, size)
    rows = []
    for k in range(1, max_n + 1):
        s = squares_below(k)
        rows.append({"ni": k, "min_size": found.get(k), "n": k, "s": s,
                     "n_minus_s": k - s, "n_plus_s": k + s})
    return rows
