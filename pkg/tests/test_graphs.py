from __future__ import annotations

import random

import numpy as np
import pytest

from gallai_forge.graphs import (
    ColoredCompleteGraph,
    GcgFormatError,
    PartialColoring,
    decode,
    encode,
    iter_bits,
    new_uniform,
    tri_index,
    tri_unindex,
)


def test_tri_index_roundtrip():
    i = 0
    for u in range(1, 40):
        for v in range(u):
            assert tri_index(u, v) == i
            assert tri_index(v, u) == i  # order-insensitive
            assert tri_unindex(i) == (u, v)
            i += 1


def test_iter_bits():
    assert list(iter_bits(0)) == []
    assert list(iter_bits(0b101101)) == [0, 2, 3, 5]
    assert list(iter_bits(1 << 200)) == [200]


def test_basic_construction_and_color_of():
    g = ColoredCompleteGraph(4, 3, [1, 2, 3, 1, 2, 3])
    assert g.n == 4 and g.k == 3
    assert g.color_of(1, 0) == 1
    assert g.color_of(0, 1) == 1
    assert g.color_of(3, 2) == 3
    assert tuple(g.edge_colors()) == (1, 2, 3, 1, 2, 3)


def test_construction_validation():
    with pytest.raises(ValueError):
        ColoredCompleteGraph(0, 1, [])
    with pytest.raises(ValueError):
        ColoredCompleteGraph(3, 0, [1, 1, 1])
    with pytest.raises(ValueError):
        ColoredCompleteGraph(3, 1, [1, 1])  # wrong length
    with pytest.raises(ValueError) as exc:
        ColoredCompleteGraph(3, 2, [1, 3, 1])  # color out of range
    assert "3" in str(exc.value)
    with pytest.raises(ValueError):
        ColoredCompleteGraph(3, 2, [1, 0, 1])


def test_color_of_rejects_bad_pairs():
    g = new_uniform(5, 1, 2)
    with pytest.raises(ValueError):
        g.color_of(2, 2)
    with pytest.raises(ValueError):
        g.color_of(0, 5)


def test_as_square_symmetry():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(1, 12)
        k = rng.randint(1, 4)
        tri = [rng.randint(1, k) for _ in range(n * (n - 1) // 2)]
        g = ColoredCompleteGraph(n, k, tri)
        sq = g.as_square()
        assert sq.shape == (n, n)
        assert (sq == sq.T).all()
        assert (np.diag(sq) == 0).all()
        for u in range(n):
            for v in range(u):
                assert sq[u, v] == g.color_of(u, v)


def test_from_square_roundtrip():
    g = ColoredCompleteGraph(5, 3, [1, 2, 3, 1, 2, 3, 1, 2, 3, 1])
    h = ColoredCompleteGraph.from_square(5, 3, g.as_square())
    assert g == h


def test_color_masks_and_degrees():
    g = ColoredCompleteGraph(4, 2, [1, 1, 2, 2, 1, 2])
    m1 = g.color_masks(1)
    # vertex 0 sees color 1 on edges to 1 and 2
    assert m1[0] == 0b110
    assert g.neighbors_in_color(0, 1) == 0b110
    assert g.degree_in_color(0, 1) == 2
    assert g.degree_in_color(0, 2) == 1
    for c in (1, 2):
        masks = g.color_masks(c)
        for u in range(4):
            assert not (masks[u] >> u) & 1  # no self loop
            for v in range(4):
                if u != v:
                    assert ((masks[u] >> v) & 1) == (g.color_of(u, v) == c)


def test_encode_decode_roundtrip_random():
    rng = random.Random(77)
    for _ in range(50):
        n = rng.randint(1, 20)
        k = rng.randint(1, 6)
        tri = [rng.randint(1, k) for _ in range(n * (n - 1) // 2)]
        g = ColoredCompleteGraph(n, k, tri)
        assert decode(encode(g)) == g


def test_encode_exact_bytes():
    g = ColoredCompleteGraph(3, 2, [1, 2, 1])
    assert encode(g) == "gcg 1\n3 2\n1\n2 1\n"


def test_decode_tolerates_comments_and_blanks():
    text = "# leading comment\ngcg 1\n\n3 2   # dims\n1\n\n2 1  # last row\n# trailing\n"
    g = decode(text)
    assert g.n == 3 and g.k == 2
    assert tuple(g.edge_colors()) == (1, 2, 1)


def test_decode_single_vertex():
    g = decode("gcg 1\n1 1\n")
    assert g.n == 1 and g.k == 1


@pytest.mark.parametrize(
    "text,line,needle",
    [
        ("", 1, "header"),
        ("gcg 2\n3 1\n1\n1 1\n", 1, "header"),
        ("gcg 1\n", 2, "dimensions"),
        ("gcg 1\n3\n1\n1 1\n", 2, "<n> <k>"),
        ("gcg 1\nx 1\n", 2, "integer"),
        ("gcg 1\n0 1\n", 2, "vertex count"),
        ("gcg 1\n2 0\n1\n", 2, "color count"),
        ("gcg 1\n3 1\n1\n", 4, "row"),
        ("gcg 1\n3 1\n1 1\n1 1\n", 3, "row 1"),
        ("gcg 1\n3 1\n1\n1 2\n", 4, "range"),
        ("gcg 1\n2 1\n1\nextra\n", 4, "unexpected data"),
    ],
)
def test_decode_errors_carry_position(text, line, needle):
    with pytest.raises(GcgFormatError) as exc:
        decode(text)
    assert exc.value.line == line
    assert needle in str(exc.value)
    assert f"line {line}" in str(exc.value)


def test_decode_error_column_points_at_token():
    with pytest.raises(GcgFormatError) as exc:
        decode("gcg 1\n3 2\n1\n1 9\n")
    assert exc.value.line == 4
    assert exc.value.column == 3


def test_new_uniform():
    g = new_uniform(6, 2, 3)
    assert g.n == 6 and g.k == 3
    assert set(g.edge_colors()) == {2}
    with pytest.raises(ValueError):
        new_uniform(3, 4, 3)


def test_partial_coloring_assign_unassign():
    pc = PartialColoring(5, 2)
    assert pc.color_of(0, 1) is None
    assert not pc.is_complete()
    pc.assign(0, 1, 1)
    pc.assign(2, 1, 2)
    assert pc.color_of(1, 0) == 1
    assert pc.deg[2][1] == 1
    assert pc.masks[1][1] == 0b1
    pc.unassign(2, 1)
    assert pc.color_of(2, 1) is None
    assert pc.deg[2][1] == 0
    assert pc.masks[2][1] == 0
    with pytest.raises(ValueError):
        pc.assign(0, 1, 2)  # already assigned
    with pytest.raises(ValueError):
        pc.unassign(3, 4)  # not assigned


def test_partial_coloring_complete_and_filled():
    pc = PartialColoring(3, 2)
    pc.assign(1, 0, 1)
    g = pc.filled(2)
    assert g.color_of(1, 0) == 1
    assert g.color_of(2, 0) == 2
    pc.assign(2, 0, 1)
    pc.assign(2, 1, 2)
    assert pc.is_complete()
    full = pc.to_complete()
    assert tuple(full.edge_colors()) == (1, 1, 2)


def test_partial_filled_can_widen_palette():
    pc = PartialColoring(3, 2)
    g = pc.filled(5)
    assert g.k == 5
    assert set(g.edge_colors()) == {5}
