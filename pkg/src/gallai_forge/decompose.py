"""Gallai partitions: extraction, validation, quotient graphs.

Every complete graph on at least two vertices whose coloring has no rainbow
triangle splits into at least two parts such that at most two colors appear
between parts and each pair of parts is joined monochromatically.  The
extractor below searches candidate between-color sets S of size one or two:
vertices connected by edges colored outside S must share a part, and parts
joined by more than one color must merge.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .graphs import ColoredCompleteGraph
from .patterns import WitnessEmbedding, find_rainbow_triangle


class RainbowTrianglePresent(Exception):
    """The input coloring is not rainbow-triangle-free; carries the witness."""

    def __init__(self, witness: WitnessEmbedding):
        self.witness = witness
        super().__init__(f"rainbow triangle on vertices {list(witness.vertices)}")


class InternalExhaustion(RuntimeError):
    """No candidate color set produced a valid partition; indicates a bug,
    since rainbow-free inputs always admit one."""


@dataclass(frozen=True)
class GallaiPartition:
    """Parts in ascending order of their smallest vertex, the color joining
    each pair of parts, and the set of colors used between parts."""

    parts: tuple[tuple[int, ...], ...]
    quotient_color: dict
    between_colors: frozenset

    def to_json_dict(self) -> dict:
        return {
            "parts": [list(p) for p in self.parts],
            "quotient": [
                {"i": i, "j": j, "color": int(c)} for (i, j), c in sorted(self.quotient_color.items())
            ],
            "between_colors": sorted(int(c) for c in self.between_colors),
        }


class _DisjointSet:
    """Union-find with union by size and path compression."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]


def _components_outside(square: np.ndarray, color_set: tuple[int, ...]) -> tuple[np.ndarray, int]:
    adj = ~np.isin(square, color_set)
    np.fill_diagonal(adj, False)
    count, labels = connected_components(csr_matrix(adj), directed=False)
    return labels, int(count)


def _merge_bichromatic(square: np.ndarray, labels: np.ndarray, count: int) -> tuple[np.ndarray, int]:
    """Merge parts until every pair is joined by a single color.

    Merging is forced and monotone (a bichromatic pair stays bichromatic when
    either side grows), so the fixpoint does not depend on merge order; all
    offending pairs of one round are merged together.
    """
    n = square.shape[0]
    iu, iv = np.triu_indices(n, 1)
    edge_colors = square[iu, iv].astype(np.int64)
    while count > 1:
        li = labels[iu]
        lj = labels[iv]
        cross = li != lj
        lo = np.minimum(li, lj)[cross]
        hi = np.maximum(li, lj)[cross]
        pair_id = lo * count + hi
        colors = edge_colors[cross]
        cmin = np.full(count * count, np.iinfo(np.int64).max, dtype=np.int64)
        cmax = np.zeros(count * count, dtype=np.int64)
        np.minimum.at(cmin, pair_id, colors)
        np.maximum.at(cmax, pair_id, colors)
        offending = np.nonzero(cmin < cmax)[0]
        if offending.size == 0:
            break
        dsu = _DisjointSet(count)
        for pid in offending:
            dsu.union(int(pid) // count, int(pid) % count)
        roots = np.array([dsu.find(r) for r in range(count)])
        uniq, renum = np.unique(roots, return_inverse=True)
        labels = renum[labels]
        count = len(uniq)
    return labels, count


def _package(graph: ColoredCompleteGraph, labels: np.ndarray, count: int) -> GallaiPartition:
    members = [np.nonzero(labels == r)[0] for r in range(count)]
    members.sort(key=lambda ix: int(ix[0]))
    parts = tuple(tuple(int(v) for v in ix) for ix in members)
    square = graph.as_square()
    quotient = {}
    for i, j in combinations(range(count), 2):
        quotient[(i, j)] = int(square[parts[i][0], parts[j][0]])
    return GallaiPartition(parts, quotient, frozenset(quotient.values()))


def gallai_partition(graph: ColoredCompleteGraph) -> GallaiPartition:
    """Extract a partition certificate for a rainbow-triangle-free coloring.

    Candidate between-color sets are tried singletons first, then pairs, each
    group in ascending lexicographic order; the first candidate yielding at
    least two parts wins.  Raises RainbowTrianglePresent (with the triangle)
    on inputs outside the precondition and InternalExhaustion if no candidate
    works, which a correct implementation never hits.
    """
    if graph.n < 2:
        raise ValueError(f"need n >= 2, got {graph.n}")
    rainbow = find_rainbow_triangle(graph)
    if rainbow is not None:
        raise RainbowTrianglePresent(rainbow)
    square = graph.as_square()
    singles = [(c,) for c in range(1, graph.k + 1)]
    pairs = [tuple(s) for s in combinations(range(1, graph.k + 1), 2)]
    for color_set in singles + pairs:
        labels, count = _components_outside(square, color_set)
        if count < 2:
            continue
        labels, count = _merge_bichromatic(square, labels, count)
        if count < 2:
            continue
        partition = _package(graph, labels, count)
        ok, why = validate_partition(graph, partition)
        if not ok:
            raise InternalExhaustion(f"extracted partition fails validation: {why}")
        return partition
    raise InternalExhaustion("no candidate color set produced two or more parts")


def validate_partition(graph: ColoredCompleteGraph, partition: GallaiPartition) -> tuple[bool, str | None]:
    """Re-check every partition invariant; returns (ok, first violation)."""
    parts = partition.parts
    m = len(parts)
    if m < 2:
        return False, f"{m} part(s), need at least 2"
    seen: set[int] = set()
    for index, part in enumerate(parts):
        if len(part) == 0:
            return False, f"part {index} is empty"
        for v in part:
            if not 0 <= v < graph.n:
                return False, f"part {index} contains out-of-range vertex {v}"
            if v in seen:
                return False, f"vertex {v} appears in more than one part"
            seen.add(v)
    if len(seen) != graph.n:
        missing = min(set(range(graph.n)) - seen)
        return False, f"vertex {missing} is not covered"
    want_keys = set(combinations(range(m), 2))
    if set(partition.quotient_color) != want_keys:
        return False, "quotient does not cover exactly the part pairs"
    square = graph.as_square()
    for (i, j), color in partition.quotient_color.items():
        block = square[np.ix_(parts[i], parts[j])]
        if not (block == color).all():
            u = parts[i][int(np.nonzero(block != color)[0][0])]
            v = parts[j][int(np.nonzero(block != color)[1][0])]
            return False, (
                f"edge {{{u}, {v}}} between parts {i} and {j} has color "
                f"{graph.color_of(u, v)}, quotient says {color}"
            )
    between = frozenset(partition.quotient_color.values())
    if between != partition.between_colors:
        return False, "between_colors does not match the quotient colors"
    if len(between) > 2:
        return False, f"{len(between)} colors between parts, at most 2 allowed"
    return True, None


def reduced_graph(graph: ColoredCompleteGraph, partition: GallaiPartition) -> ColoredCompleteGraph:
    """Complete graph on the parts, each pair colored by its joining color.
    Declares the same color count as the input."""
    ok, why = validate_partition(graph, partition)
    if not ok:
        raise ValueError(f"not a valid partition of the graph: {why}")
    m = len(partition.parts)
    sq = np.zeros((m, m), dtype=np.uint16)
    for (i, j), color in partition.quotient_color.items():
        sq[i, j] = sq[j, i] = color
    return ColoredCompleteGraph.from_square(m, graph.k, sq)
