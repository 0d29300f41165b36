"""Two small multi-agent networks used by the tests, scripts and docs.

Every agent couples to its own state (full diagonal), so both patterns
are perfectly matchable and the covering reduction applies.
"""

from __future__ import annotations

from .structmat import ProblemInstance, StructMatrix, identity_pattern


def two_community_network() -> ProblemInstance:
    """Nine agents, two source communities, four input channels.

    Agents 1+2 and 3+4 (1-based) form mutually coupled pairs that no
    other agent feeds, so they are the only non-top-linked SCCs; the
    remaining agents hang below them in chains.  Channel 1 reaches
    agents 1 and 2, channel 2 reaches 2 and 3, channel 3 reaches 3 and
    4, channel 4 reaches 7 and 8.  Channel 2 alone is the unique
    minimum selection, the only single channel touching both source
    communities.
    """
    n = 9
    loops = {(i, i) for i in range(n)}
    # star (r, c) is the edge agent c -> agent r
    coupling = {
        (1, 0), (0, 1),   # community one: agents 1 <-> 2
        (3, 2), (2, 3),   # community two: agents 3 <-> 4
        (4, 1),           # 2 -> 5
        (5, 3),           # 4 -> 6
        (6, 4),           # 5 -> 7
        (7, 5),           # 6 -> 8
        (8, 6),           # 7 -> 9
    }
    a = StructMatrix(n, n, frozenset(loops | coupling))
    channels = {
        (0, 0), (1, 0),
        (1, 1), (2, 1),
        (2, 2), (3, 2),
        (6, 3), (7, 3),
    }
    b = StructMatrix(n, 4, frozenset(channels))
    return ProblemInstance(a, b, label="two communities, four channels")


def four_source_network() -> ProblemInstance:
    """Thirteen agents with dedicated inputs; agents 10..13 are sources.

    Self-loops everywhere; agents 10..13 (1-based) feed the nine
    downstream agents and receive nothing, so each is a singleton
    non-top-linked SCC.  Any dedicated selection therefore needs
    exactly those four agents, one per source.
    """
    n = 13
    loops = {(i, i) for i in range(n)}
    coupling = {
        (0, 9),            # 10 -> 1
        (2, 10),           # 11 -> 3
        (4, 11),           # 12 -> 5
        (6, 12),           # 13 -> 7
        (1, 0), (3, 2), (5, 4), (7, 6), (8, 7),
    }
    a = StructMatrix(n, n, frozenset(loops | coupling))
    return ProblemInstance(a, identity_pattern(n), label="four sources, dedicated inputs")
