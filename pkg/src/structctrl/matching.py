"""Bipartite matching machinery for generic-rank questions.

The state bipartite graph duplicates the states: left vertex i is state
i viewed as a column (an origin), right vertex j is state j viewed as a
row (a destination), and edges mirror the state digraph.  A matching
saturating every right vertex certifies generic full rank of the square
pattern; the right vertices left unmatched are the rows no column can
claim.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .structmat import StructMatrix


class PerfectMatchingRequired(ValueError):
    """An operation needed a perfectly matchable state pattern and got none."""


@dataclass(frozen=True)
class BipartiteGraph:
    left_count: int
    right_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.left_count < 0 or self.right_count < 0:
            raise ValueError("vertex counts must be nonnegative")
        object.__setattr__(self, "edges", frozenset(self.edges))
        for l, r in self.edges:
            if not (0 <= l < self.left_count and 0 <= r < self.right_count):
                raise ValueError(f"edge ({l}, {r}) out of range")


@dataclass(frozen=True)
class Matching:
    """A matching plus the right vertices it leaves unsaturated."""

    pairs: frozenset[tuple[int, int]]
    right_unmatched: frozenset[int]

    def __post_init__(self) -> None:
        lefts = [l for l, _ in self.pairs]
        rights = [r for _, r in self.pairs]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            raise ValueError("pairs share a vertex")
        if self.right_unmatched & set(rights):
            raise ValueError("right_unmatched overlaps matched rights")

    def __len__(self) -> int:
        return len(self.pairs)


def state_bipartite(a: StructMatrix) -> BipartiteGraph:
    if a.rows != a.cols:
        raise ValueError("state bipartite graph needs a square pattern")
    return BipartiteGraph(a.rows, a.rows, frozenset((c, r) for r, c in a.stars))


def maximum_matching(g: BipartiteGraph) -> Matching:
    """Hopcroft-Karp, O(sqrt(L + R) * E).

    Deterministic: adjacency is scanned in sorted order, so equal inputs
    give equal matchings, not merely equal sizes.
    """
    adjacency: list[list[int]] = [[] for _ in range(g.left_count)]
    for l, r in sorted(g.edges):
        adjacency[l].append(r)
    match_left = [-1] * g.left_count
    match_right = [-1] * g.right_count
    unreached = g.left_count + g.right_count + 1
    dist = [0] * g.left_count

    def layer() -> bool:
        queue: deque[int] = deque()
        for l in range(g.left_count):
            if match_left[l] == -1:
                dist[l] = 0
                queue.append(l)
            else:
                dist[l] = unreached
        free_right_seen = False
        while queue:
            l = queue.popleft()
            for r in adjacency[l]:
                m = match_right[r]
                if m == -1:
                    free_right_seen = True
                elif dist[m] == unreached:
                    dist[m] = dist[l] + 1
                    queue.append(m)
        return free_right_seen

    def augment(start: int) -> bool:
        # Alternating DFS along the layering, kept iterative so deep
        # augmenting paths cannot hit the recursion limit.
        stack = [(start, iter(adjacency[start]))]
        trail: list[int] = []
        while stack:
            l, neighbors = stack[-1]
            for r in neighbors:
                m = match_right[r]
                if m == -1:
                    trail.append(r)
                    for (lv, _), rv in zip(stack, trail):
                        match_left[lv] = rv
                        match_right[rv] = lv
                    return True
                if dist[m] == dist[l] + 1:
                    trail.append(r)
                    stack.append((m, iter(adjacency[m])))
                    break
            else:
                dist[l] = unreached
                stack.pop()
                if trail:
                    trail.pop()
        return False

    while layer():
        for l in range(g.left_count):
            if match_left[l] == -1:
                augment(l)

    pairs = frozenset((l, r) for l, r in enumerate(match_left) if r != -1)
    free = frozenset(r for r, m in enumerate(match_right) if m == -1)
    return Matching(pairs, free)


def has_perfect_matching(a: StructMatrix) -> bool:
    """True when the state bipartite graph saturates every right vertex."""
    return len(maximum_matching(state_bipartite(a))) == a.rows
