"""Rainbow-neighbourhood predicates and the rainbow neighbourhood number.

A vertex v *yields* a rainbow neighbourhood under a colouring when its
closed neighbourhood N[v] contains at least one vertex of every colour
class.  The rainbow neighbourhood number r is the count of yielding
vertices; it depends on which chromatic colouring is used, so three modes
are exposed:

convention   the deterministic greedy-maximal colouring on chi colours
exists-max   the maximum of r over all surjective proper chi-colourings
exists-min   the minimum over the same set
"""

from __future__ import annotations

from dataclasses import dataclass

from .colouring import (
    Colouring,
    chromatic_number,
    convention_colouring,
    enumerate_proper_colourings,
    is_proper,
)
from .graphs import Graph

MODES = ("convention", "exists-max", "exists-min")


@dataclass(frozen=True)
class RainbowReport:
    """Yielding-vertex census for one colouring of one graph."""

    yielding: frozenset[int]
    colouring_used: Colouring

    @property
    def r(self) -> int:
        return len(self.yielding)


def yields_rainbow(g: Graph, colouring: Colouring, v: int) -> bool:
    """True iff the colour set of N[v] equals {1..ell}.

    The colouring must be proper on ``g``.
    """
    if not is_proper(g, colouring):
        raise ValueError("colouring is not proper on this graph")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    return _yields(g, colouring, v)


def _yields(g: Graph, colouring: Colouring, v: int) -> bool:
    seen = {colouring.assignment[v]}
    seen.update(colouring.assignment[u] for u in g.adjacency[v])
    return len(seen) == colouring.ell


def yielding_vertices(g: Graph, colouring: Colouring) -> frozenset[int]:
    """All vertices that yield rainbow neighbourhoods under ``colouring``
    (assumed proper)."""
    return frozenset(v for v in range(g.n) if _yields(g, colouring, v))


def rainbow_neighbourhood_number(g: Graph, mode: str = "convention") -> RainbowReport:
    """Count vertices yielding rainbow neighbourhoods under a chromatic
    colouring of ``g``, selected per ``mode`` (see module docstring).

    Exhaustive modes enumerate every surjective proper chi-colouring and
    are meant for desk-scale graphs.  In convention mode a
    :class:`~jrainbow.colouring.ConventionInfeasibleError` propagates when
    the greedy-maximal discipline cannot realise chi classes.
    """
    if g.n == 0:
        raise ValueError("rainbow neighbourhood number of the empty graph is undefined")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    chi, _ = chromatic_number(g)
    if mode == "convention":
        colouring = convention_colouring(g, chi)
        return RainbowReport(yielding=yielding_vertices(g, colouring), colouring_used=colouring)
    best: RainbowReport | None = None
    want_max = mode == "exists-max"
    for colouring in enumerate_proper_colourings(g, chi):
        report = RainbowReport(
            yielding=yielding_vertices(g, colouring), colouring_used=colouring
        )
        if best is None or (report.r > best.r if want_max else report.r < best.r):
            best = report
        # short-circuit at the extremes
        if want_max and best.r == g.n:
            break
        if not want_max and best.r == 0:
            break
    assert best is not None  # chi-colourings always exist
    return best
