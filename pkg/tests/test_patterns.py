from __future__ import annotations

import random

import pytest

from gallai_forge.constructions import pentagon_k5, two_clique_example
from gallai_forge.graphs import ColoredCompleteGraph, decode, encode, new_uniform
from gallai_forge.patterns import (
    ORACLE_MAX_HOST,
    ORACLE_MAX_PATTERN,
    PATTERN_KINDS,
    Pattern,
    WitnessEmbedding,
    brute_force_find,
    contains_pattern,
    find_mono_cycle,
    find_mono_path_plus,
    find_mono_star_plus,
    find_rainbow_triangle,
    verify_witness,
)


def _random_coloring(n, k, rng):
    tri = [rng.randint(1, k) for _ in range(n * (n - 1) // 2)]
    return ColoredCompleteGraph(n, k, tri)


# --- pattern shapes -------------------------------------------------------


def test_canonical_edges():
    assert Pattern.star_plus(4).edges() == ((0, 1), (0, 2), (0, 3), (1, 2))
    assert Pattern.path_plus(5).edges() == ((0, 1), (1, 2), (2, 3), (3, 4), (0, 2))
    assert Pattern.cycle(4).edges() == ((0, 1), (1, 2), (2, 3), (3, 0))
    assert Pattern.path(3).edges() == ((0, 1), (1, 2))
    assert Pattern.star(4).edges() == ((0, 1), (0, 2), (0, 3))
    assert Pattern.clique(3).edges() == ((0, 1), (0, 2), (1, 2))


def test_size_three_kinds_are_all_the_triangle():
    want = {frozenset(e) for e in Pattern.clique(3).edges()}
    for p in (Pattern.star_plus(3), Pattern.path_plus(3), Pattern.cycle(3)):
        assert {frozenset(e) for e in p.edges()} == want


def test_pattern_validation():
    with pytest.raises(ValueError):
        Pattern("triangle", 3)  # unknown kind
    with pytest.raises(ValueError):
        Pattern.star_plus(2)
    with pytest.raises(ValueError):
        Pattern.cycle(2)
    with pytest.raises(ValueError):
        Pattern.path(0)


def test_witness_json_shape():
    w = WitnessEmbedding(Pattern.star_plus(4), 2, (5, 1, 3, 0))
    assert w.to_json_dict() == {
        "pattern": "star-plus",
        "t_or_m": 4,
        "color": 2,
        "vertices": [5, 1, 3, 0],
    }
    rb = WitnessEmbedding(Pattern.clique(3), None, (0, 1, 2))
    assert rb.to_json_dict()["color"] == "rainbow"


def test_verify_witness():
    g = new_uniform(5, 1, 2)
    assert verify_witness(g, WitnessEmbedding(Pattern.star_plus(4), 1, (0, 1, 2, 3)))
    assert not verify_witness(g, WitnessEmbedding(Pattern.star_plus(4), 2, (0, 1, 2, 3)))
    assert not verify_witness(g, WitnessEmbedding(Pattern.star_plus(4), 1, (0, 1, 1, 3)))
    assert not verify_witness(g, WitnessEmbedding(Pattern.star_plus(4), 1, (0, 1, 2, 9)))
    assert not verify_witness(g, WitnessEmbedding(Pattern.star_plus(4), 3, (0, 1, 2, 3)))
    # rainbow witnesses must be triangles with three distinct colors
    rb = ColoredCompleteGraph(3, 3, [1, 2, 3])
    assert verify_witness(rb, WitnessEmbedding(Pattern.clique(3), None, (0, 1, 2)))
    assert not verify_witness(g, WitnessEmbedding(Pattern.clique(3), None, (0, 1, 2)))
    assert not verify_witness(rb, WitnessEmbedding(Pattern.clique(4), None, (0, 1, 2)))


# --- rainbow triangles ----------------------------------------------------


def test_rainbow_none_when_under_three_colors():
    g = _random_coloring(8, 2, random.Random(3))
    assert find_rainbow_triangle(g) is None
    wide = ColoredCompleteGraph(4, 9, [1, 2, 1, 2, 1, 2])  # declares 9, uses 2
    assert find_rainbow_triangle(wide) is None


def test_rainbow_planted_and_first_in_order():
    # only the triangle {1, 2, 3} is rainbow
    g = ColoredCompleteGraph(4, 3, [1, 1, 2, 1, 3, 1])
    w = find_rainbow_triangle(g)
    assert w is not None and w.vertices == (1, 2, 3)
    assert verify_witness(g, w)
    # two rainbow triangles: the lexicographically first one wins
    h = ColoredCompleteGraph(4, 3, [1, 2, 3, 3, 2, 1])
    first = find_rainbow_triangle(h)
    assert first is not None and first.vertices == (0, 1, 2)


def test_pentagon_blowups_stay_rainbow_free():
    rng = random.Random(5)
    for _ in range(30):
        g = _random_coloring(7, 3, rng)
        fast = find_rainbow_triangle(g)
        slow = None
        for a in range(g.n):
            for b in range(a + 1, g.n):
                for c in range(b + 1, g.n):
                    cols = {g.color_of(a, b), g.color_of(a, c), g.color_of(b, c)}
                    if len(cols) == 3 and slow is None:
                        slow = (a, b, c)
        assert (fast is None) == (slow is None)
        if fast is not None:
            assert fast.vertices == slow


# --- monochromatic detectors ----------------------------------------------


def test_star_plus_in_uniform():
    g = new_uniform(6, 2, 3)
    w = find_mono_star_plus(g, 4)
    assert w is not None and w.color == 2
    assert verify_witness(g, w)
    assert find_mono_star_plus(g, 4, 1) is None
    assert find_mono_star_plus(g, 7) is None  # needs degree 6 on 6 vertices


def test_star_plus_rejects_small_t():
    g = new_uniform(4, 1, 1)
    with pytest.raises(ValueError):
        find_mono_star_plus(g, 2)


def test_two_clique_avoids_order_four_targets():
    g = two_clique_example(4, 1, 2)
    for c in (1, 2):
        assert find_mono_star_plus(g, 4, c) is None
        assert find_mono_path_plus(g, 4, c) is None
    # order-3 targets (triangles) exist inside the cliques
    assert find_mono_star_plus(g, 3, 1) is not None
    assert find_mono_star_plus(g, 3, 2) is None


def test_two_clique_order_five():
    g = two_clique_example(5, 1, 2)
    assert find_mono_star_plus(g, 5) is None
    assert find_mono_path_plus(g, 5) is None


def test_path_plus_in_uniform():
    g = new_uniform(5, 1, 1)
    w = find_mono_path_plus(g, 5)
    assert w is not None and verify_witness(g, w)
    with pytest.raises(ValueError):
        find_mono_path_plus(g, 2)


def test_path_plus_needs_a_triangle():
    # color 1 is the 5-cycle: has paths of any length but no triangle
    g = pentagon_k5(1, 2)
    assert find_mono_path_plus(g, 3, 1) is None
    assert find_mono_path_plus(g, 4, 1) is None


def test_cycles_of_the_pentagon():
    g = pentagon_k5(1, 2)
    for c in (1, 2):
        w = find_mono_cycle(g, 5, c)
        assert w is not None and verify_witness(g, w)
        assert find_mono_cycle(g, 4, c) is None
        assert find_mono_cycle(g, 3, c) is None
    assert find_mono_cycle(g, 6) is None  # longer than the host
    with pytest.raises(ValueError):
        find_mono_cycle(g, 2)


def test_contains_pattern_dispatch():
    g = new_uniform(6, 1, 2)
    for kind, size in [
        ("star-plus", 4),
        ("path-plus", 4),
        ("cycle", 6),
        ("path", 6),
        ("star", 6),
        ("clique", 6),
    ]:
        w = contains_pattern(g, Pattern(kind, size))
        assert w is not None and w.color == 1
        assert verify_witness(g, w)
        assert contains_pattern(g, Pattern(kind, size), 2) is None


def test_contains_pattern_rejects_bad_color():
    g = new_uniform(4, 1, 2)
    with pytest.raises(ValueError):
        contains_pattern(g, Pattern.star(3), 3)


def test_single_vertex_patterns_hold_vacuously():
    g = new_uniform(2, 1, 1)
    for kind in ("path", "star", "clique"):
        w = contains_pattern(g, Pattern(kind, 1))
        assert w is not None and len(w.vertices) == 1
        assert verify_witness(g, w)


def test_detectors_are_deterministic():
    g = _random_coloring(8, 3, random.Random(123))
    h = decode(encode(g))
    for kind in PATTERN_KINDS:
        p = Pattern(kind, 4)
        a = contains_pattern(g, p)
        b = contains_pattern(h, p)
        assert (a is None) == (b is None)
        if a is not None:
            assert a == b


# --- definitional oracle ---------------------------------------------------


def test_oracle_guards():
    big = new_uniform(ORACLE_MAX_HOST + 1, 1, 1)
    with pytest.raises(ValueError):
        brute_force_find(big, Pattern.clique(3))
    small = new_uniform(4, 1, 1)
    with pytest.raises(ValueError):
        brute_force_find(small, Pattern.path(ORACLE_MAX_PATTERN + 1))


def test_oracle_handles_oversized_patterns():
    g = new_uniform(3, 1, 1)
    assert brute_force_find(g, Pattern.clique(4)) is None


def test_detectors_match_oracle_seeded_sweep():
    rng = random.Random(902)
    sizes = {
        "star-plus": (3, 4, 5),
        "path-plus": (3, 4, 5),
        "cycle": (3, 4, 5),
        "path": (2, 3, 5),
        "star": (2, 4, 5),
        "clique": (2, 3, 4),
    }
    for _ in range(150):
        n = rng.randint(3, 7)
        k = rng.randint(1, 3)
        g = _random_coloring(n, k, rng)
        for kind, ts in sizes.items():
            for t in ts:
                p = Pattern(kind, t)
                fast = contains_pattern(g, p)
                slow = brute_force_find(g, p)
                assert (fast is None) == (slow is None), (kind, t, encode(g))
                if fast is not None:
                    assert verify_witness(g, fast)
                if slow is not None:
                    assert verify_witness(g, slow)
                color = rng.randint(1, k)
                fast_c = contains_pattern(g, p, color)
                slow_c = brute_force_find(g, p, color)
                assert (fast_c is None) == (slow_c is None), (kind, t, color, encode(g))
