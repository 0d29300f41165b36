"""Minimum input selection.

Choosing a minimum cardinality subset of input columns that keeps a
pattern pair structurally controllable is, for perfectly matchable
state patterns, the same problem as set covering over the
non-top-linked SCCs of the state digraph: input j covers SCC i exactly
when j actuates a state inside i.  ``mincis_reduce`` builds that
covering instance (set index j is input column j, so solutions lift
back unchanged), ``solve_mincis`` routes it through a covering solver,
and ``brute_force_mincis`` enumerates subsets directly as a slow,
assumption-free referee.

``dedicated_input_selection`` solves the one-input-per-state special
case in polynomial time: take a maximum matching of the state bipartite
graph, steered so that unmatched rows land in as many distinct
non-top-linked SCCs as possible, then actuate every unmatched row plus
one representative of each non-top-linked SCC that got none.  Unmatched
rows are forced by the rank condition and representatives by
accessibility; steering one unmatched row into a fresh SCC can never
save more than the one representative it replaces, so the count is
optimal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .ctrl import is_structurally_controllable
from .graph import Condensation, condense, state_digraph
from .matching import PerfectMatchingRequired, has_perfect_matching
from .setcover import SetCoverInstance, exact_min_cover, greedy_cover
from .structmat import ProblemInstance, StructMatrix, identity_pattern


class InfeasibleInstance(ValueError):
    """No input subset can make the pair structurally controllable."""


class BruteForceCapExceeded(ValueError):
    """Enumeration refused: too many input columns."""


@dataclass(frozen=True)
class SelectionResult:
    """A selection outcome. Infeasibility is a result here, not an error."""

    chosen: tuple[int, ...]
    feasible: bool
    certificate: str
    objective: int | None

    def __post_init__(self) -> None:
        object.__setattr__(self, "chosen", tuple(sorted(self.chosen)))
        if self.certificate not in ("exact", "greedy", "brute-force"):
            raise ValueError(f"unknown certificate {self.certificate!r}")
        if self.feasible:
            if self.objective != len(self.chosen):
                raise ValueError("objective must equal the selection size")
        elif self.chosen or self.objective is not None:
            raise ValueError("infeasible results carry no selection")

    def report(self, index_base: int = 1) -> str:
        """Human-readable one-liner; indices shift by index_base."""
        if not self.feasible:
            return "INFEASIBLE"
        parts = [f"FEASIBLE {len(self.chosen)}:"]
        parts.extend(str(j + index_base) for j in self.chosen)
        parts.append(f"[{self.certificate}]")
        return " ".join(parts)


def _source_ordinals(cond: Condensation) -> dict[int, int]:
    """Number the non-top-linked SCCs 0..k-1 by smallest member state."""
    members = cond.members()
    ordered = sorted(cond.non_top_linked, key=lambda s: members[s][0])
    return {s: t for t, s in enumerate(ordered)}

def mincis_reduce(inst: ProblemInstance) -> SetCoverInstance:
    """Build the covering instance whose solutions are minimum selections.

    Requires a perfectly matchable state pattern; universe element t is
    the t-th non-top-linked SCC (ordered by smallest member state), and
    set j collects the SCCs that input column j actuates.
    """
    if not has_perfect_matching(inst.a):
        raise PerfectMatchingRequired(
            "reduction precondition failed: state pattern admits no perfect matching"
        )
    cond = condense(state_digraph(inst.a))
    ordinal = _source_ordinals(cond)
    sets: list[set[int]] = [set() for _ in range(inst.p)]
    touched: set[int] = set()
    for r, j in inst.b.stars:
        s = cond.scc_id[r]
        if s in ordinal:
            sets[j].add(ordinal[s])
            touched.add(ordinal[s])
    if len(touched) != len(ordinal):
        missing = sorted(set(ordinal.values()) - touched)
        raise InfeasibleInstance(
            f"infeasible instance: non-top-linked SCCs {missing} actuated by no input"
        )
    return SetCoverInstance(len(ordinal), tuple(frozenset(s) for s in sets))


def solve_mincis(inst: ProblemInstance, mode: str = "exact") -> SelectionResult:
    """Minimum (or greedy) input selection through the covering reduction.

    Infeasible instances come back as an infeasible result; a state
    pattern without a perfect matching raises, because the reduction
    itself is unsound there (use brute_force_mincis instead).
    """
    if mode not in ("exact", "greedy"):
        raise ValueError(f"unknown mode {mode!r}")
    try:
        cover = mincis_reduce(inst)
    except InfeasibleInstance:
        return SelectionResult((), False, mode, None)
    chosen = exact_min_cover(cover) if mode == "exact" else greedy_cover(cover)
    result = SelectionResult(chosen, True, mode, len(chosen))
    if not is_structurally_controllable(inst, result.chosen):
        raise AssertionError("selection failed its own controllability check")
    return result


def brute_force_mincis(inst: ProblemInstance, cap: int = 20) -> SelectionResult:
    """Exhaustive referee: smallest subset by size, then lexicographic.

    Works on any instance, no matching precondition, at exponential
    cost; refuses instances with more than ``cap`` input columns.
    """
    if inst.p > cap:
        raise BruteForceCapExceeded(
            f"{inst.p} input columns exceed the enumeration cap of {cap}"
        )
    everything = tuple(range(inst.p))
    if not is_structurally_controllable(inst, everything):
        # Monotone: if the full set fails, every subset fails.
        return SelectionResult((), False, "brute-force", None)
    for size in range(inst.p + 1):
        for subset in itertools.combinations(everything, size):
            if is_structurally_controllable(inst, subset):
                return SelectionResult(subset, True, "brute-force", size)
    raise AssertionError("full set passed but enumeration found nothing")


def _biased_unmatched_rows(a: StructMatrix, cond: Condensation) -> frozenset[int]:
    """Rows unmatched by a maximum matching chosen to spread them across
    distinct non-top-linked SCCs.

    Cast as one rectangular assignment: real left vertices (columns of
    the pattern) keep their star edges at a weight that dominates any
    number of tie-break edges, and each non-top-linked SCC contributes a
    phantom left vertex connected to its members at weight one.  The
    optimum then maximizes the true matching size first and the number
    of distinct SCCs holding an unmatched row second, in O(n^3).
    """
    n = a.rows
    members = cond.members()
    sources = sorted(cond.non_top_linked)
    heavy = n + 1
    weight = np.zeros((n + len(sources), n), dtype=np.int64)
    for r, c in a.stars:
        weight[c, r] = heavy
    for t, s in enumerate(sources):
        for v in members[s]:
            weight[n + t, v] = 1
    left, right = linear_sum_assignment(weight, maximize=True)
    matched_rows = {
        int(r) for l, r in zip(left, right) if l < n and weight[l, r] == heavy
    }
    return frozenset(range(n)) - matched_rows


def dedicated_input_selection(a: StructMatrix) -> SelectionResult:
    """Minimum set of states to actuate with their own dedicated inputs.

    Always feasible: actuating every state trivially suffices.  Runs in
    O(n^3); the result is exact.
    """
    if a.rows != a.cols:
        raise ValueError("dedicated selection needs a square pattern")
    cond = condense(state_digraph(a))
    unmatched = _biased_unmatched_rows(a, cond)
    chosen = set(unmatched)
    hit = {cond.scc_id[v] for v in unmatched}
    members = cond.members()
    for s in sorted(cond.non_top_linked):
        if s not in hit:
            chosen.add(members[s][0])
    return SelectionResult(tuple(chosen), True, "exact", len(chosen))


def _require_self_loops(w: StructMatrix) -> None:
    if w.rows != w.cols:
        raise ValueError("agent coupling pattern must be square")
    for i in range(w.rows):
        if (i, i) not in w.stars:
            raise ValueError(f"agent {i} has no self-loop; leader selection needs one per agent")


def leader_selection_unconstrained(w: StructMatrix) -> SelectionResult:
    """Fewest leaders when any agent may lead.

    The coupling pattern must carry a self-loop on every agent (each
    agent weighs its own state), which also guarantees the perfect
    matching the covering machinery relies on.
    """
    _require_self_loops(w)
    return dedicated_input_selection(w)


def leader_selection_constrained(w: StructMatrix, b: StructMatrix) -> SelectionResult:
    """Fewest leaders when column j of ``b`` lists the agents leader j may steer."""
    _require_self_loops(w)
    return solve_mincis(ProblemInstance(w, b), mode="exact")
