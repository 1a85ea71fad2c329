"""Edge-colored complete graphs: storage, text format, partial colorings.

Vertices are 0-based, colors are 1-based.  A complete graph on n vertices
stores its edge colors in a flat lower-triangular array indexed by
(max(u, v), min(u, v)), so row i of the text format is exactly the slice
[i(i-1)/2, i(i+1)/2) of that array.
"""

from __future__ import annotations

import math
from typing import Iterator

import numpy as np

GCG_MAGIC = "gcg 1"

# uint16 storage bounds the declared color count; well above the 64 we promise.
MAX_COLOR = 65535


def tri_index(u: int, v: int) -> int:
    """Flat index of edge {u, v}; order of endpoints does not matter."""
    if u < v:
        u, v = v, u
    return u * (u - 1) // 2 + v


def tri_unindex(i: int) -> tuple[int, int]:
    """Inverse of tri_index: (larger endpoint, smaller endpoint)."""
    u = (1 + math.isqrt(1 + 8 * i)) // 2
    if u * (u - 1) // 2 > i:
        u -= 1
    return u, i - u * (u - 1) // 2


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class GcgFormatError(ValueError):
    """Malformed GCG text; carries the 1-based line and column of the fault."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class ColoredCompleteGraph:
    """Immutable complete graph on ``n`` vertices with ``k``-colored edges.

    ``k`` is declared, not inferred: a coloring may use fewer colors than it
    declares.  Instances never change after construction, so per-color
    adjacency bitmasks and the square color matrix are cached on first use
    and are safe to share across concurrent readers.
    """

    __slots__ = ("n", "k", "_tri", "_masks", "_square")

    def __init__(self, n: int, k: int, colors) -> None:
        if n < 1:
            raise ValueError(f"vertex count must be at least 1, got {n}")
        if not 1 <= k <= MAX_COLOR:
            raise ValueError(f"color count must be in 1..{MAX_COLOR}, got {k}")
        tri = np.ascontiguousarray(colors, dtype=np.uint16)
        want = n * (n - 1) // 2
        if tri.shape != (want,):
            raise ValueError(f"expected {want} edge colors for n={n}, got shape {tri.shape}")
        if want:
            bad = (tri < 1) | (tri > k)
            if bad.any():
                i = int(np.argmax(bad))
                u, v = tri_unindex(i)
                raise ValueError(f"edge {{{u}, {v}}} has color {int(tri[i])}, valid range is 1..{k}")
        tri.setflags(write=False)
        self.n = n
        self.k = k
        self._tri = tri
        self._masks: dict[int, list[int]] = {}
        self._square = None

    @classmethod
    def from_square(cls, n: int, k: int, square) -> "ColoredCompleteGraph":
        """Build from an n-by-n symmetric color matrix; the diagonal is ignored."""
        sq = np.asarray(square)
        if sq.shape != (n, n):
            raise ValueError(f"expected a {n}x{n} matrix, got shape {sq.shape}")
        rows, cols = np.tril_indices(n, -1)
        return cls(n, k, sq[rows, cols])

    def color_of(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError(f"no edge from vertex {u} to itself")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge {{{u}, {v}}} out of range for n={self.n}")
        return int(self._tri[tri_index(u, v)])

    def as_square(self) -> np.ndarray:
        """Symmetric n-by-n color matrix with a zero diagonal (read-only)."""
        if self._square is None:
            sq = np.zeros((self.n, self.n), dtype=np.uint16)
            rows, cols = np.tril_indices(self.n, -1)
            sq[rows, cols] = self._tri
            sq[cols, rows] = self._tri
            sq.setflags(write=False)
            self._square = sq
        return self._square

    def color_masks(self, c: int) -> list[int]:
        """Per-vertex neighbor bitmasks for color ``c`` (cached)."""
        if not 1 <= c <= self.k:
            raise ValueError(f"color {c} out of range 1..{self.k}")
        masks = self._masks.get(c)
        if masks is None:
            hits = self.as_square() == c
            packed = np.packbits(hits, axis=1, bitorder="little")
            masks = [int.from_bytes(packed[i].tobytes(), "little") for i in range(self.n)]
            self._masks[c] = masks
        return masks

    def neighbors_in_color(self, v: int, c: int) -> int:
        """Bitmask of the vertices joined to ``v`` by an edge of color ``c``.

        Bit u is set iff color_of(u, v) == c.  Use iter_bits() to walk the
        members in ascending order; ``mask >> u & 1`` tests membership.
        """
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return self.color_masks(c)[v]

    def degree_in_color(self, v: int, c: int) -> int:
        return self.neighbors_in_color(v, c).bit_count()

    def edge_colors(self) -> np.ndarray:
        """The flat lower-triangular color array (read-only view)."""
        return self._tri

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredCompleteGraph):
            return NotImplemented
        return self.n == other.n and self.k == other.k and bool(np.array_equal(self._tri, other._tri))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"ColoredCompleteGraph(n={self.n}, k={self.k})"


def new_uniform(n: int, c: int, k: int) -> ColoredCompleteGraph:
    """Complete graph with every edge colored ``c``; declares ``k`` colors."""
    if not 1 <= c <= k:
        raise ValueError(f"color {c} out of declared range 1..{k}")
    tri = np.full(n * (n - 1) // 2, c, dtype=np.uint16)
    return ColoredCompleteGraph(n, k, tri)


def encode(graph: ColoredCompleteGraph) -> str:
    """Serialize to GCG text.  The output is canonical: decode(encode(g)) == g
    and equal graphs encode to identical bytes."""
    lines = [GCG_MAGIC, f"{graph.n} {graph.k}"]
    tri = graph._tri
    for i in range(1, graph.n):
        row = tri[i * (i - 1) // 2 : i * (i + 1) // 2]
        lines.append(" ".join(str(int(c)) for c in row))
    return "\n".join(lines) + "\n"


def _tokenize(line: str) -> list[tuple[str, int]]:
    # (token, 1-based column); a '#' starts a comment running to end of line
    out = []
    i = 0
    size = len(line)
    while i < size:
        ch = line[i]
        if ch == "#":
            break
        if ch.isspace():
            i += 1
            continue
        j = i
        while j < size and not line[j].isspace() and line[j] != "#":
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def decode(text: str) -> ColoredCompleteGraph:
    """Parse GCG text; raises GcgFormatError with line/column on any fault."""
    significant = []  # (line_no, tokens)
    for line_no, line in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(line)
        if tokens:
            significant.append((line_no, tokens))
    last_line = len(text.splitlines()) + 1

    def need(index: int, what: str):
        if index >= len(significant):
            raise GcgFormatError(last_line, 1, f"unexpected end of input, expected {what}")
        return significant[index]

    line_no, tokens = need(0, "header")
    if [t for t, _ in tokens] != GCG_MAGIC.split():
        raise GcgFormatError(line_no, tokens[0][1], f"bad header, expected '{GCG_MAGIC}'")

    line_no, tokens = need(1, "graph dimensions")
    if len(tokens) != 2:
        raise GcgFormatError(line_no, tokens[0][1], "expected '<n> <k>'")
    dims = []
    for tok, col in tokens:
        if not tok.isdigit():
            raise GcgFormatError(line_no, col, f"expected an integer, got {tok!r}")
        dims.append(int(tok))
    n, k = dims
    if n < 1:
        raise GcgFormatError(line_no, tokens[0][1], f"vertex count must be at least 1, got {n}")
    if k < 1:
        raise GcgFormatError(line_no, tokens[1][1], f"color count must be at least 1, got {k}")

    tri = np.empty(n * (n - 1) // 2, dtype=np.uint16)
    at = 0
    for i in range(1, n):
        line_no, tokens = need(1 + i, f"row {i}")
        if len(tokens) != i:
            raise GcgFormatError(line_no, tokens[0][1], f"row {i} has {len(tokens)} colors, expected {i}")
        for tok, col in tokens:
            if not tok.isdigit():
                raise GcgFormatError(line_no, col, f"expected an integer color, got {tok!r}")
            value = int(tok)
            if not 1 <= value <= k:
                raise GcgFormatError(line_no, col, f"color {value} out of range 1..{k}")
            tri[at] = value
            at += 1
    if len(significant) > n + 1:
        line_no, tokens = significant[n + 1]
        raise GcgFormatError(line_no, tokens[0][1], f"unexpected data after row {n - 1}")
    return ColoredCompleteGraph(n, k, tri)


class PartialColoring:
    """Mutable edge coloring of K_n built one edge at a time.

    Unassigned pairs have no color (color_of returns None).  Per-color
    neighbor bitmasks and degree counters are kept in step with every
    assign/unassign so completion tests against the newest edge stay cheap.
    Single-owner: not safe to share while being mutated.
    """

    __slots__ = ("n", "k", "colors", "masks", "deg", "assigned")

    def __init__(self, n: int, k: int):
        if n < 1 or k < 1:
            raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
        self.n = n
        self.k = k
        self.colors = [0] * (n * (n - 1) // 2)  # 0 is the internal "absent" marker
        self.masks = [[0] * n for _ in range(k + 1)]
        self.deg = [[0] * n for _ in range(k + 1)]
        self.assigned = 0

    def color_of(self, u: int, v: int) -> int | None:
        c = self.colors[tri_index(u, v)]
        return c if c else None

    def assign(self, u: int, v: int, c: int) -> None:
        if not 1 <= c <= self.k:
            raise ValueError(f"color {c} out of range 1..{self.k}")
        i = tri_index(u, v)
        if self.colors[i]:
            raise ValueError(f"edge {{{u}, {v}}} is already colored")
        self.colors[i] = c
        self.masks[c][u] |= 1 << v
        self.masks[c][v] |= 1 << u
        self.deg[c][u] += 1
        self.deg[c][v] += 1
        self.assigned += 1

    def unassign(self, u: int, v: int) -> None:
        i = tri_index(u, v)
        c = self.colors[i]
        if not c:
            raise ValueError(f"edge {{{u}, {v}}} is not colored")
        self.colors[i] = 0
        self.masks[c][u] &= ~(1 << v)
        self.masks[c][v] &= ~(1 << u)
        self.deg[c][u] -= 1
        self.deg[c][v] -= 1
        self.assigned -= 1

    def is_complete(self) -> bool:
        return self.assigned == len(self.colors)

    def to_complete(self) -> ColoredCompleteGraph:
        if not self.is_complete():
            raise ValueError(f"{len(self.colors) - self.assigned} edges are still uncolored")
        return ColoredCompleteGraph(self.n, self.k, self.colors)

    def filled(self, filler: int) -> ColoredCompleteGraph:
        """Complete graph with every unassigned edge set to ``filler``."""
        k = max(self.k, filler)
        return ColoredCompleteGraph(self.n, k, [c if c else filler for c in self.colors])
