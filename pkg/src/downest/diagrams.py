"""Chord diagrams, circle graphs, forbidden crossing patterns and the
word families used to probe them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .words import WordError, validate_dow

MAX_ISO_VERTICES = 24
MAX_CNM_CHORDS = 12


@dataclass(frozen=True)
class ChordDiagram:
    chords: dict  # letter -> (i, j) with i < j, 0-based circle positions

    @property
    def points(self):
        return 2 * len(self.chords)

    def to_json(self, symbols=None):
        def name(a):
            return symbols[a - 1] if symbols else str(a)

        return {
            "points": self.points,
            "chords": [{"letter": name(a), "ends": list(self.chords[a])} for a in sorted(self.chords)],
        }

    def to_dot(self, symbols=None):
        label = {}
        for a, (i, j) in self.chords.items():
            label[i] = label[j] = symbols[a - 1] if symbols else str(a)
        lines = ["graph chords {", "  layout=circo;"]
        for p in range(self.points):
            lines.append(f'  p{p} [label="{label[p]}"];')
        for p in range(self.points):
            lines.append(f"  p{p} -- p{(p + 1) % self.points} [style=dotted];")
        for a in sorted(self.chords):
            i, j = self.chords[a]
            lines.append(f"  p{i} -- p{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CircleGraph:
    vertices: tuple
    edges: frozenset  # of (a, b) with a < b

    def neighbors(self):
        adj = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def has_edge(self, a, b):
        return (min(a, b), max(a, b)) in self.edges

    def to_json(self, symbols=None):
        def name(a):
            return symbols[a - 1] if symbols else str(a)

        return {
            "vertices": [name(v) for v in self.vertices],
            "edges": [[name(a), name(b)] for a, b in sorted(self.edges)],
        }

    def to_dot(self, symbols=None):
        def name(a):
            return json.dumps(symbols[a - 1] if symbols else str(a))

        lines = ["graph circle {"]
        for v in self.vertices:
            lines.append(f"  {name(v)};")
        for a, b in sorted(self.edges):
            lines.append(f"  {name(a)} -- {name(b)};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _require_dow(w):
    if not validate_dow(w):
        raise WordError("not a double occurrence word")


def chord_diagram(w) -> ChordDiagram:
    _require_dow(w)
    first, chords = {}, {}
    for i, a in enumerate(w):
        if a in first:
            chords[a] = (first[a], i)
        else:
            first[a] = i
    return ChordDiagram(dict(sorted(chords.items())))


def chords_cross(c1, c2) -> bool:
    """Exactly one end of c2 lies strictly inside c1."""
    a, b = sorted(c1)
    return (a < c2[0] < b) != (a < c2[1] < b)


def circle_graph(w) -> CircleGraph:
    chords = chord_diagram(w).chords
    letters = sorted(chords)
    edges = frozenset(
        (a, b) for a, b in combinations(letters, 2) if chords_cross(chords[a], chords[b])
    )
    return CircleGraph(tuple(letters), edges)


def _induced_p3(g):
    adj = g.neighbors()
    for y in g.vertices:
        for x, z in combinations(sorted(adj[y]), 2):
            if z not in adj[x]:
                return x, y, z
    return None


def contains_c12(w):
    """Letters (x, y, z) where y crosses x and z but x, z do not cross, or None."""
    return _induced_p3(circle_graph(w))


def is_cluster_graph(g: CircleGraph) -> bool:
    return _induced_p3(g) is None


def contains_cnm(w, n: int, m: int):
    """Find letter sets C (n chords) and D (m chords) with every c crossing
    every d and no crossings inside C or inside D.

    Returns (C, D) as sorted tuples, or None.
    """
    g = circle_graph(w)
    if not 2 <= n <= m:
        raise ValueError("need 2 <= n <= m")
    if n + m > len(g.vertices):
        raise ValueError(f"n + m = {n + m} exceeds the word size {len(g.vertices)}")
    if n + m > MAX_CNM_CHORDS:
        raise ValueError(f"n + m is limited to {MAX_CNM_CHORDS}")
    adj = g.neighbors()
    verts = [v for v in g.vertices if len(adj[v]) >= n]

    def independent(pool, k, chosen):
        # k more pairwise non-crossing chords from pool
        if k == 0:
            return chosen
        for i, v in enumerate(pool):
            if len(pool) - i < k:
                break
            rest = [u for u in pool[i + 1:] if u not in adj[v]]
            found = independent(rest, k - 1, chosen + (v,))
            if found is not None:
                return found
        return None

    def pick_c(pool, common, chosen):
        if len(chosen) == n:
            d = independent(sorted(common), m, ())
            return (chosen, d) if d is not None else None
        for i, v in enumerate(pool):
            if len(pool) - i < n - len(chosen):
                break
            nxt = common & adj[v] if chosen else set(adj[v])
            if len(nxt) < m:
                continue
            rest = [u for u in pool[i + 1:] if u not in adj[v]]
            found = pick_c(rest, nxt, chosen + (v,))
            if found is not None:
                return found
        return None

    return pick_c(verts, set(), ())


def generate(kind: str, n: int, m: int | None = None) -> tuple:
    """Words of the families repeat, return, grid, w1 and w2."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if kind == "repeat":
        half = tuple(range(1, n + 1))
        return half + half
    if kind == "return":
        half = tuple(range(1, n + 1))
        return half + half[::-1]
    if kind == "grid":
        if m is None or m < n:
            raise ValueError("grid needs m >= n")
        cs = tuple(range(1, n + 1))
        ds = tuple(range(n + 1, n + m + 1))
        return cs + ds + cs[::-1] + ds[::-1]
    if kind == "w1":
        # crossing pairs (2k-1, 2k), each pair nested inside the previous one
        tail = []
        for k in range(n, 0, -1):
            tail += [2 * k - 1, 2 * k]
        return tuple(range(1, 2 * n + 1)) + tuple(tail)
    if kind == "w2":
        out = []
        for k in range(1, n + 1):
            out += [2 * k - 1, 2 * k, 2 * k - 1, 2 * k]
        return tuple(out)
    raise ValueError(f"unknown family {kind!r}")


def graphs_isomorphic(g1: CircleGraph, g2: CircleGraph) -> bool:
    if max(len(g1.vertices), len(g2.vertices)) > MAX_ISO_VERTICES:
        raise ValueError(f"isomorphism check limited to {MAX_ISO_VERTICES} vertices")
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    a1, a2 = g1.neighbors(), g2.neighbors()
    if sorted(map(len, a1.values())) != sorted(map(len, a2.values())):
        return False
    order = sorted(g1.vertices, key=lambda v: -len(a1[v]))
    mapping, used = {}, set()

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        for u in g2.vertices:
            if u in used or len(a2[u]) != len(a1[v]):
                continue
            if all((mapping[x] in a2[u]) == (x in a1[v]) for x in order[:i]):
                mapping[v] = u
                used.add(u)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(u)
        return False

    return extend(0)
