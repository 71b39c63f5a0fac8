import json
import random
from itertools import combinations

import pytest

from conftest import brute_ni, w
from downest.diagrams import (
    CircleGraph,
    chord_diagram,
    chords_cross,
    circle_graph,
    contains_c12,
    contains_cnm,
    generate,
    graphs_isomorphic,
    is_cluster_graph,
)
from downest.enumeration import enumerate_ascending
from downest.nesting import NestingSolver, is_one_reducible
from downest.words import reverse, validate_dow


def test_chord_diagram_examples():
    assert chord_diagram(w("12344321")).chords == {1: (0, 7), 2: (1, 6), 3: (2, 5), 4: (3, 4)}
    assert chord_diagram(w("12341234")).chords == {1: (0, 4), 2: (1, 5), 3: (2, 6), 4: (3, 7)}
    assert chord_diagram(()).chords == {}


def test_chords_cross():
    assert chords_cross((0, 2), (1, 3))
    assert not chords_cross((0, 3), (1, 2))
    assert not chords_cross((0, 1), (2, 3))


def test_circle_graph_examples():
    assert circle_graph(w("1212")).edges == {(1, 2)}
    g = circle_graph(w("12344321"))
    assert g.vertices == (1, 2, 3, 4) and not g.edges
    assert circle_graph(w("12341234")).edges == set(combinations(range(1, 5), 2))


@pytest.mark.parametrize("n", range(1, 9))
def test_return_edgeless_repeat_complete(n):
    assert not circle_graph(generate("return", n)).edges
    assert len(circle_graph(generate("repeat", n)).edges) == n * (n - 1) // 2


def test_dow_subword_chords_do_not_cross_the_rest():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(2, 8)
        word = [a for a in range(1, n + 1) for _ in range(2)]
        rng.shuffle(word)
        g = circle_graph(word)
        for i in range(len(word)):
            for j in range(i + 2, len(word) + 1, 2):
                seg = word[i:j]
                if validate_dow(seg):
                    inside, outside = set(seg), set(word) - set(seg)
                    assert not any(g.has_edge(a, b) for a in inside for b in outside)


def test_circle_graph_reverse_identity():
    for word in enumerate_ascending(5):
        assert circle_graph(word) == circle_graph(reverse(word))


def test_contains_c12():
    x, y, z = contains_c12(w("121323"))
    g = circle_graph(w("121323"))
    assert g.has_edge(x, y) and g.has_edge(y, z) and not g.has_edge(x, z)
    assert {x, y, z} == {1, 2, 3}
    assert contains_c12(w("12341234")) is None


def test_contains_c12_agrees_with_one_reducible():
    for n in range(1, 7):
        for word in enumerate_ascending(n):
            assert (contains_c12(word) is None) == is_one_reducible(word)


def test_is_cluster_graph():
    assert is_cluster_graph(circle_graph(w("12123434")))
    assert circle_graph(w("12123434")).edges == {(1, 2), (3, 4)}
    assert not is_cluster_graph(circle_graph(w("121323")))
    assert is_cluster_graph(CircleGraph((), frozenset()))


def test_grid_word_crossings():
    word = generate("grid", 2, 2)
    assert word == w("12342143")
    ch = chord_diagram(word).chords
    for c in (1, 2):
        for d in (3, 4):
            assert chords_cross(ch[c], ch[d])
    assert not chords_cross(ch[1], ch[2]) and not chords_cross(ch[3], ch[4])


def test_contains_cnm():
    assert contains_cnm(w("12342143"), 2, 2) == ((1, 2), (3, 4))
    assert contains_cnm(w("12341234"), 2, 2) is None
    with pytest.raises(ValueError):
        contains_cnm(w("12342143"), 1, 2)
    with pytest.raises(ValueError):
        contains_cnm(w("12342143"), 2, 3)


def _cnm_brute(word, n, m):
    g = circle_graph(word)
    letters = g.vertices
    for cs in combinations(letters, n):
        if any(g.has_edge(a, b) for a, b in combinations(cs, 2)):
            continue
        rest = [d for d in letters if d not in cs]
        for ds in combinations(rest, m):
            if any(g.has_edge(a, b) for a, b in combinations(ds, 2)):
                continue
            if all(g.has_edge(c, d) for c in cs for d in ds):
                return True
    return False


def test_contains_cnm_matches_brute_force():
    rng = random.Random(9)
    for _ in range(150):
        size = rng.randint(4, 8)
        word = [a for a in range(1, size + 1) for _ in range(2)]
        rng.shuffle(word)
        for n, m in ((2, 2), (2, 3), (3, 3)):
            if n + m <= size:
                assert (contains_cnm(word, n, m) is not None) == _cnm_brute(word, n, m)


def test_cnm_forces_nesting_index():
    solver = NestingSolver()
    for size in range(4, 7):
        for word in enumerate_ascending(size):
            for n, m in ((2, 2), (2, 3), (2, 4), (3, 3)):
                if n + m <= size and contains_cnm(word, n, m):
                    assert solver.value(word) >= n + 1


def test_generate_families():
    assert generate("repeat", 3) == w("123123")
    assert generate("return", 4) == w("12344321")
    assert generate("w2", 2) == w("12123434")
    assert generate("w1", 3) == w("123456563412")
    assert brute_ni(generate("w1", 3)) == 3
    assert brute_ni(generate("w2", 2)) == 1
    with pytest.raises(ValueError):
        generate("grid", 3, 2)
    with pytest.raises(ValueError):
        generate("repeat", 0)


def test_grid_nesting_index():
    assert brute_ni(generate("grid", 2, 2)) == 3
    assert brute_ni(generate("grid", 2, 3)) >= 3
    assert NestingSolver().value(generate("grid", 3, 3)) == 4


def test_graphs_isomorphic():
    assert graphs_isomorphic(circle_graph(generate("w1", 2)), circle_graph(generate("w2", 2)))
    k4 = circle_graph(w("12341234"))
    empty4 = circle_graph(w("12344321"))
    assert not graphs_isomorphic(k4, empty4)
    assert graphs_isomorphic(k4, k4)
    # same degree sequence, different graphs: path P4 + isolated vs star-free variant
    c4 = CircleGraph((1, 2, 3, 4), frozenset({(1, 2), (2, 3), (3, 4), (1, 4)}))
    two_k2 = CircleGraph((1, 2, 3, 4), frozenset({(1, 2), (3, 4)}))
    assert not graphs_isomorphic(c4, two_k2)
    big = CircleGraph(tuple(range(1, 26)), frozenset())
    with pytest.raises(ValueError):
        graphs_isomorphic(big, big)


def test_exports():
    g = circle_graph(w("1212"))
    dot = g.to_dot()
    assert dot.count("--") == 1 and dot.startswith("graph circle {")
    assert g.to_json() == {"vertices": ["1", "2"], "edges": [["1", "2"]]}
    cd = chord_diagram(w("1212"))
    assert cd.to_json() == {"points": 4, "chords": [{"letter": "1", "ends": [0, 2]},
                                                   {"letter": "2", "ends": [1, 3]}]}
    json.dumps(cd.to_json())
    assert "p0 -- p2;" in cd.to_dot()
