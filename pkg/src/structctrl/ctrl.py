"""Structural controllability tests.

A pattern pair is structurally controllable when almost every numeric
realization is controllable.  The structural test decomposes into two
pattern conditions, jointly equivalent to almost-sure controllability:

* accessibility: every state is reachable from a selected input in the
  system digraph;
* generic rank: the bipartite graph of the compound pattern [A  B(J)]
  (columns on the left, state rows on the right) admits a matching that
  saturates every row.

``numeric_probe`` cross-checks the structural verdict on random numeric
realizations.  A full-rank probe certifies structural controllability;
a deficient probe on a structurally controllable pair can only be a
numeric false negative, never a counterexample.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .graph import condense, input_coverage, state_digraph
from .matching import (
    BipartiteGraph,
    PerfectMatchingRequired,
    has_perfect_matching,
    maximum_matching,
)
from .structmat import ProblemInstance

_MASK64 = (1 << 64) - 1


def _selected_columns(inst: ProblemInstance, j_set) -> tuple[int, ...]:
    columns = sorted(set(j_set))
    for j in columns:
        if not 0 <= j < inst.p:
            raise IndexError(f"input index {j} out of range for {inst.p} inputs")
    return tuple(columns)


def is_structurally_controllable(inst: ProblemInstance, j_set) -> bool:
    """Accessibility plus generic-rank test for the selected inputs."""
    columns = _selected_columns(inst, j_set)
    if not columns:
        return False
    selected = set(columns)

    out: list[list[int]] = [[] for _ in range(inst.n)]
    for r, c in inst.a.stars:
        out[c].append(r)
    reached = {r for r, j in inst.b.stars if j in selected}
    queue = deque(reached)
    while queue:
        v = queue.popleft()
        for w in out[v]:
            if w not in reached:
                reached.add(w)
                queue.append(w)
    if len(reached) != inst.n:
        return False

    offset = {j: inst.n + t for t, j in enumerate(columns)}
    edges = {(c, r) for r, c in inst.a.stars}
    edges.update((offset[j], r) for r, j in inst.b.stars if j in offset)
    compound = BipartiteGraph(inst.n + len(columns), inst.n, frozenset(edges))
    return len(maximum_matching(compound)) == inst.n


def is_structurally_controllable_pm(inst: ProblemInstance, j_set) -> bool:
    """Covering-form test, valid only for perfectly matchable state patterns.

    With a perfect matching in hand the rank condition is automatic and
    controllability collapses to one question: does some selected input
    actuate each non-top-linked SCC?  Raises PerfectMatchingRequired
    rather than silently falling back to the general test.
    """
    if not has_perfect_matching(inst.a):
        raise PerfectMatchingRequired("state pattern admits no perfect matching")
    cond = condense(state_digraph(inst.a))
    return input_coverage(cond, inst, j_set) == cond.non_top_linked


def numeric_probe(
    inst: ProblemInstance,
    j_set,
    trials: int = 3,
    seed: int = 0,
    tol: float = 1e-8,
) -> bool:
    """Monte Carlo controllability check on random realizations.

    Each trial fills the stars with independent uniform [-1, 1] draws
    and tests the rank of [B, AB, ..., A^(n-1) B]; singular values below
    tol times the largest count as zero.  True as soon as one trial
    reaches full rank.  Trial t uses a generator derived from
    (seed, t), so reruns and partial runs agree.
    """
    if trials < 1:
        raise ValueError("at least one trial required")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    columns = _selected_columns(inst, j_set)
    if not columns:
        return False
    n, width = inst.n, len(columns)
    a_positions = sorted(inst.a.stars)
    offset = {j: t for t, j in enumerate(columns)}
    b_positions = sorted((r, offset[j]) for r, j in inst.b.stars if j in offset)

    for trial in range(trials):
        rng = np.random.default_rng((seed & _MASK64, trial))
        a = np.zeros((n, n))
        for r, c in a_positions:
            a[r, c] = rng.uniform(-1.0, 1.0)
        b = np.zeros((n, width))
        for r, c in b_positions:
            b[r, c] = rng.uniform(-1.0, 1.0)
        krylov = np.empty((n, n * width))
        block = b
        for power in range(n):
            krylov[:, power * width : (power + 1) * width] = block
            block = a @ block
        singular = np.linalg.svd(krylov, compute_uv=False)
        if singular.size and singular[0] > 0.0:
            if int(np.count_nonzero(singular > tol * singular[0])) == n:
                return True
    return False
