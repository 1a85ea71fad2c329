"""Detection of rainbow triangles and small monochromatic subgraphs.

Two detection routes exist on purpose.  The find_* / contains_pattern
functions are the fast path, built on per-color neighbor bitmasks.
brute_force_find enumerates vertex subsets and role assignments straight
from the definitions and is kept independent so the two can be checked
against each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .graphs import ColoredCompleteGraph, iter_bits

PATTERN_KINDS = ("star-plus", "path-plus", "cycle", "path", "star", "clique")

# Smallest sensible vertex count per kind; the triangle-augmented kinds need
# their triangle to exist.
_MIN_SIZE = {"star-plus": 3, "path-plus": 3, "cycle": 3, "path": 1, "star": 1, "clique": 1}


@dataclass(frozen=True)
class Pattern:
    """A target subgraph shape together with its vertex count.

    Canonical role order of the vertices:
      star-plus: center, the two adjacent leaves, remaining leaves
      path-plus: path order; the extra edge joins positions 0 and 2
      cycle:     cyclic order
      path:      path order
      star:      center, then leaves
      clique:    any order
    """

    kind: str
    size: int

    def __post_init__(self):
        if self.kind not in PATTERN_KINDS:
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if self.size < _MIN_SIZE[self.kind]:
            raise ValueError(f"{self.kind} needs at least {_MIN_SIZE[self.kind]} vertices, got {self.size}")

    @classmethod
    def star_plus(cls, t: int) -> "Pattern":
        return cls("star-plus", t)

    @classmethod
    def path_plus(cls, t: int) -> "Pattern":
        return cls("path-plus", t)

    @classmethod
    def cycle(cls, m: int) -> "Pattern":
        return cls("cycle", m)

    @classmethod
    def path(cls, t: int) -> "Pattern":
        return cls("path", t)

    @classmethod
    def star(cls, t: int) -> "Pattern":
        return cls("star", t)

    @classmethod
    def clique(cls, s: int) -> "Pattern":
        return cls("clique", s)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges over the canonical role positions 0..size-1."""
        t = self.size
        if self.kind == "star-plus":
            return tuple((0, i) for i in range(1, t)) + ((1, 2),)
        if self.kind == "path-plus":
            return tuple((i, i + 1) for i in range(t - 1)) + ((0, 2),)
        if self.kind == "cycle":
            return tuple((i, i + 1) for i in range(t - 1)) + ((t - 1, 0),)
        if self.kind == "path":
            return tuple((i, i + 1) for i in range(t - 1))
        if self.kind == "star":
            return tuple((0, i) for i in range(1, t))
        return tuple(itertools.combinations(range(t), 2))


@dataclass(frozen=True)
class WitnessEmbedding:
    """Concrete vertices realizing a pattern; color None marks a rainbow hit."""

    pattern: Pattern
    color: int | None
    vertices: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "pattern": self.pattern.kind,
            "t_or_m": self.pattern.size,
            "color": "rainbow" if self.color is None else self.color,
            "vertices": list(self.vertices),
        }


def verify_witness(graph: ColoredCompleteGraph, witness: WitnessEmbedding) -> bool:
    """Re-check a witness edge by edge against the graph."""
    vs = witness.vertices
    if len(vs) != witness.pattern.size or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < graph.n for v in vs):
        return False
    if witness.color is None:
        if witness.pattern != Pattern.clique(3):
            return False
        a, b, c = vs
        return len({graph.color_of(a, b), graph.color_of(a, c), graph.color_of(b, c)}) == 3
    if not 1 <= witness.color <= graph.k:
        return False
    return all(graph.color_of(vs[i], vs[j]) == witness.color for i, j in witness.pattern.edges())


def _color_range(graph: ColoredCompleteGraph, c: int | None) -> range | tuple[int, ...]:
    if c is None:
        return range(1, graph.k + 1)
    if not 1 <= c <= graph.k:
        raise ValueError(f"color {c} out of range 1..{graph.k}")
    return (c,)


def find_rainbow_triangle(graph: ColoredCompleteGraph) -> WitnessEmbedding | None:
    """First triangle with three pairwise distinct edge colors, scanning
    ordered triples u < v < w lexicographically."""
    n = graph.n
    if n < 3 or graph.k < 3:
        return None
    m = graph.as_square()
    for u in range(n - 2):
        a = m[u, u + 1 :]
        sub = m[u + 1 :, u + 1 :]
        bad = (a[:, None] != a[None, :]) & (sub != a[:, None]) & (sub != a[None, :])
        iv, iw = np.nonzero(np.triu(bad, 1))
        if iv.size:
            return WitnessEmbedding(
                Pattern.clique(3), None, (u, int(iv[0]) + u + 1, int(iw[0]) + u + 1)
            )
    return None


def find_mono_star_plus(graph: ColoredCompleteGraph, t: int, c: int | None = None) -> WitnessEmbedding | None:
    """Star on t vertices plus one edge between two of its leaves, all in one
    color: a center with >= t-1 same-colored neighbors, two of them adjacent
    in that color.  First witness in (color, center, leaf) ascending order."""
    if t < 3:
        raise ValueError(f"need t >= 3, got {t}")
    need = t - 1
    for cc in _color_range(graph, c):
        masks = graph.color_masks(cc)
        for v in range(graph.n):
            mv = masks[v]
            if mv.bit_count() < need:
                continue
            for u in iter_bits(mv):
                common = masks[u] & mv
                if common:
                    w = (common & -common).bit_length() - 1
                    leaves = [u, w]
                    for x in iter_bits(mv):
                        if len(leaves) == need:
                            break
                        if x != u and x != w:
                            leaves.append(x)
                    return WitnessEmbedding(Pattern.star_plus(t), cc, (v, *leaves))
    return None


def _extend_path(masks: list[int], v: int, steps: int, used: int) -> tuple[int, ...] | None:
    if steps == 0:
        return ()
    cand = masks[v] & ~used
    for w in iter_bits(cand):
        rest = _extend_path(masks, w, steps - 1, used | (1 << w))
        if rest is not None:
            return (w, *rest)
    return None


def find_mono_path_plus(graph: ColoredCompleteGraph, t: int, c: int | None = None) -> WitnessEmbedding | None:
    """Path on t vertices plus an edge joining one end to the vertex two
    steps in, all in one color.  Enumerates monochromatic triangles in
    ascending order, then grows the tail by depth-first search."""
    if t < 3:
        raise ValueError(f"need t >= 3, got {t}")
    tail = t - 3
    for cc in _color_range(graph, c):
        masks = graph.color_masks(cc)
        for x in range(graph.n):
            mx = masks[x]
            for y in iter_bits(mx):
                if y <= x:
                    continue
                common = mx & masks[y]
                for z in iter_bits(common):
                    if z <= y:
                        continue
                    for v3 in (x, y, z):
                        v1, v2 = sorted({x, y, z} - {v3})
                        rest = _extend_path(masks, v3, tail, (1 << x) | (1 << y) | (1 << z))
                        if rest is not None:
                            return WitnessEmbedding(Pattern.path_plus(t), cc, (v1, v2, v3, *rest))
    return None


def _cycle_dfs(masks: list[int], start: int, cur: int, steps: int, used: int) -> tuple[int, ...] | None:
    if steps == 0:
        return () if (masks[cur] >> start) & 1 else None
    # later cycle vertices must exceed the start, which is the cycle minimum
    cand = masks[cur] & ~used & ~((1 << (start + 1)) - 1)
    for w in iter_bits(cand):
        rest = _cycle_dfs(masks, start, w, steps - 1, used | (1 << w))
        if rest is not None:
            return (w, *rest)
    return None


def find_mono_cycle(graph: ColoredCompleteGraph, m: int, c: int | None = None) -> WitnessEmbedding | None:
    """Cycle on exactly m vertices in one color, found by backtracking from
    each start vertex in ascending order."""
    if m < 3:
        raise ValueError(f"need m >= 3, got {m}")
    if m > graph.n:
        return None
    for cc in _color_range(graph, c):
        masks = graph.color_masks(cc)
        for s in range(graph.n - m + 1):
            rest = _cycle_dfs(masks, s, s, m - 1, 1 << s)
            if rest is not None:
                return WitnessEmbedding(Pattern.cycle(m), cc, (s, *rest))
    return None


def _first_vertex_witness(graph: ColoredCompleteGraph, p: Pattern, c: int | None) -> WitnessEmbedding:
    # a single vertex carries no edges, so any color claim holds vacuously
    return WitnessEmbedding(p, c if c is not None else 1, (0,))


def _clique_dfs(masks: list[int], cand: int, need: int) -> tuple[int, ...] | None:
    if need == 0:
        return ()
    for w in iter_bits(cand):
        rest = _clique_dfs(masks, cand & masks[w] & ~((1 << (w + 1)) - 1), need - 1)
        if rest is not None:
            return (w, *rest)
    return None


def _find_clique(graph: ColoredCompleteGraph, s: int, c: int | None) -> WitnessEmbedding | None:
    if s == 1:
        return _first_vertex_witness(graph, Pattern.clique(1), c)
    if s > graph.n:
        return None
    full = (1 << graph.n) - 1
    for cc in _color_range(graph, c):
        found = _clique_dfs(graph.color_masks(cc), full, s)
        if found is not None:
            return WitnessEmbedding(Pattern.clique(s), cc, found)
    return None


def _find_star(graph: ColoredCompleteGraph, t: int, c: int | None) -> WitnessEmbedding | None:
    if t == 1:
        return _first_vertex_witness(graph, Pattern.star(1), c)
    need = t - 1
    for cc in _color_range(graph, c):
        masks = graph.color_masks(cc)
        for v in range(graph.n):
            if masks[v].bit_count() >= need:
                leaves = list(itertools.islice(iter_bits(masks[v]), need))
                return WitnessEmbedding(Pattern.star(t), cc, (v, *leaves))
    return None


def _find_path(graph: ColoredCompleteGraph, t: int, c: int | None) -> WitnessEmbedding | None:
    if t == 1:
        return _first_vertex_witness(graph, Pattern.path(1), c)
    if t > graph.n:
        return None
    for cc in _color_range(graph, c):
        masks = graph.color_masks(cc)
        for v in range(graph.n):
            rest = _extend_path(masks, v, t - 1, 1 << v)
            if rest is not None:
                return WitnessEmbedding(Pattern.path(t), cc, (v, *rest))
    return None


def contains_pattern(graph: ColoredCompleteGraph, p: Pattern, c: int | None = None) -> WitnessEmbedding | None:
    """Dispatch to the fast detector for the pattern's kind.  With c=None all
    colors 1..k are tried in ascending order."""
    if p.kind == "star-plus":
        return find_mono_star_plus(graph, p.size, c)
    if p.kind == "path-plus":
        return find_mono_path_plus(graph, p.size, c)
    if p.kind == "cycle":
        return find_mono_cycle(graph, p.size, c)
    if p.kind == "clique":
        return _find_clique(graph, p.size, c)
    if p.kind == "star":
        return _find_star(graph, p.size, c)
    return _find_path(graph, p.size, c)


# ---------------------------------------------------------------------------
# Definitional oracle.  Uses color_of only; shares nothing with the fast path.

ORACLE_MAX_PATTERN = 10
ORACLE_MAX_HOST = 12


def _roles_clique(colorof, subset, cc):
    return subset if all(colorof(a, b) == cc for a, b in itertools.combinations(subset, 2)) else None


def _roles_star(colorof, subset, cc):
    for center in subset:
        others = tuple(x for x in subset if x != center)
        if all(colorof(center, x) == cc for x in others):
            return (center, *others)
    return None


def _roles_star_plus(colorof, subset, cc):
    for center in subset:
        others = tuple(x for x in subset if x != center)
        if not all(colorof(center, x) == cc for x in others):
            continue
        for a, b in itertools.combinations(others, 2):
            if colorof(a, b) == cc:
                rest = tuple(x for x in others if x != a and x != b)
                return (center, a, b, *rest)
    return None


def _roles_path(colorof, subset, cc):
    if len(subset) == 1:
        return subset
    for perm in itertools.permutations(subset):
        if perm[0] > perm[-1]:  # a path reads the same backwards
            continue
        if all(colorof(perm[i], perm[i + 1]) == cc for i in range(len(perm) - 1)):
            return perm
    return None


def _roles_path_plus(colorof, subset, cc):
    for perm in itertools.permutations(subset):
        if perm[0] > perm[1]:  # the two triangle ends off the tail are interchangeable
            continue
        if colorof(perm[0], perm[2]) == cc and all(
            colorof(perm[i], perm[i + 1]) == cc for i in range(len(perm) - 1)
        ):
            return perm
    return None


def _roles_cycle(colorof, subset, cc):
    first = subset[0]  # the cycle can be rotated to start at its minimum
    for perm in itertools.permutations(subset[1:]):
        if perm[0] > perm[-1]:  # and reflected
            continue
        cyc = (first, *perm)
        if colorof(cyc[-1], first) == cc and all(
            colorof(cyc[i], cyc[i + 1]) == cc for i in range(len(cyc) - 1)
        ):
            return cyc
    return None


_ROLE_FINDERS = {
    "clique": _roles_clique,
    "star": _roles_star,
    "star-plus": _roles_star_plus,
    "path": _roles_path,
    "path-plus": _roles_path_plus,
    "cycle": _roles_cycle,
}


def brute_force_find(graph: ColoredCompleteGraph, p: Pattern, c: int | None = None) -> WitnessEmbedding | None:
    """Exhaustive reference detector: every vertex subset of size |p|, every
    role assignment.  Guarded to small instances; intended for cross-checks."""
    if p.size > ORACLE_MAX_PATTERN:
        raise ValueError(f"oracle guard: pattern order {p.size} exceeds {ORACLE_MAX_PATTERN}")
    if graph.n > ORACLE_MAX_HOST:
        raise ValueError(f"oracle guard: host order {graph.n} exceeds {ORACLE_MAX_HOST}")
    if p.size > graph.n:
        return None
    if p.size == 1:
        return _first_vertex_witness(graph, p, c)
    colorof = graph.color_of
    roles = _ROLE_FINDERS[p.kind]
    for cc in _color_range(graph, c):
        for subset in itertools.combinations(range(graph.n), p.size):
            found = roles(colorof, subset, cc)
            if found is not None:
                return WitnessEmbedding(p, cc, tuple(found))
    return None
