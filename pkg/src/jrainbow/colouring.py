"""Proper colourings, exact chromatic number and the greedy-maximal
convention colouring.

Colour indices are 1-based (c_1..c_ell).  Every :class:`Colouring` is
surjective onto {1..ell}: a colouring that skips a colour cannot be
represented, which keeps the "minimum parameter" discipline an invariant
of the type rather than a property to re-check everywhere.

The exhaustive search behind :func:`enumerate_proper_colourings` also
powers the J-number solvers (see :mod:`jrainbow.jcolouring`): the same
backtracking engine optionally enforces full colour coverage on the
closed neighbourhoods of a chosen vertex set, pruning as soon as a
neighbourhood is completely assigned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .graphs import Graph, complement


class ConventionInfeasibleError(ValueError):
    """The greedy-maximal discipline cannot realise the demanded number of
    colour classes on this graph."""


@dataclass(frozen=True)
class Colouring:
    """Total colour assignment vertex -> {1..ell}, surjective onto it."""

    ell: int
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.ell < 1 and self.assignment:
            raise ValueError(f"need at least one colour, got ell={self.ell}")
        used = set(self.assignment)
        if self.assignment and used != set(range(1, self.ell + 1)):
            raise ValueError(
                f"assignment must use every colour in 1..{self.ell}, used {sorted(used)}"
            )

    @classmethod
    def from_assignment(cls, assignment: Sequence[int]) -> "Colouring":
        return cls(ell=max(assignment), assignment=tuple(assignment))

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def theta(self) -> tuple[int, ...]:
        """Per-colour vertex counts theta(c_1)..theta(c_ell)."""
        counts = [0] * self.ell
        for c in self.assignment:
            counts[c - 1] += 1
        return tuple(counts)

    def colour_of(self, v: int) -> int:
        return self.assignment[v]

    def colour_classes(self) -> tuple[tuple[int, ...], ...]:
        classes: list[list[int]] = [[] for _ in range(self.ell)]
        for v, c in enumerate(self.assignment):
            classes[c - 1].append(v)
        return tuple(tuple(cls) for cls in classes)

    def to_json_dict(self) -> dict:
        return {"ell": self.ell, "assignment": list(self.assignment)}


def is_proper(g: Graph, colouring: Colouring) -> bool:
    """True iff every edge is bichromatic.  The assignment must cover all
    vertices of ``g`` exactly."""
    if colouring.n != g.n:
        raise ValueError(
            f"colouring covers {colouring.n} vertices, graph has {g.n}"
        )
    a = colouring.assignment
    return all(a[u] != a[v] for u, v in g.edges)


def inverse_colouring(colouring: Colouring) -> Colouring:
    """Relabel colours by c_j -> c_{ell-(j-1)}.  An involution."""
    ell = colouring.ell
    return Colouring(
        ell=ell,
        assignment=tuple(ell - (c - 1) for c in colouring.assignment),
    )


# ---------------------------------------------------------------------------
# Exhaustive colouring search
# ---------------------------------------------------------------------------

def _search_colourings(
    g: Graph,
    k: int,
    *,
    covered: Iterable[int] = (),
    canonical: bool = False,
    surjective: bool = True,
) -> Iterator[tuple[int, ...]]:
    """Yield proper k-colour assignment vectors of ``g`` in lexicographic
    order.

    covered: vertices whose closed neighbourhood must contain all k
        colours; each is checked as soon as its neighbourhood is fully
        assigned, which prunes hard.
    canonical: emit one representative per colour permutation (colours
        appear in first-use order).
    surjective: demand that all k colours are used.
    """
    n = g.n
    if k < 1:
        return
    if n == 0:
        return
    full = (1 << k) - 1
    # finish_at[i]: covered vertices whose closed neighbourhood becomes
    # fully assigned when vertex i receives its colour
    finish_at: list[list[int]] = [[] for _ in range(n)]
    for w in set(covered):
        last = max(g.adjacency[w] + (w,))
        finish_at[last].append(w)
    adjacency = g.adjacency
    assign = [0] * n

    def closed_mask(w: int) -> int:
        mask = 1 << (assign[w] - 1)
        for u in adjacency[w]:
            mask |= 1 << (assign[u] - 1)
        return mask

    def rec(i: int, used_mask: int, used_count: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(assign)
            return
        forbidden = 0
        for u in adjacency[i]:
            if u < i:
                forbidden |= 1 << (assign[u] - 1)
        limit = min(k, used_count + 1) if canonical else k
        remaining = n - i - 1
        for c in range(1, limit + 1):
            bit = 1 << (c - 1)
            if forbidden & bit:
                continue
            new_count = used_count if used_mask & bit else used_count + 1
            if surjective and k - new_count > remaining:
                continue
            assign[i] = c
            if all(closed_mask(w) == full for w in finish_at[i]):
                yield from rec(i + 1, used_mask | bit, new_count)
        assign[i] = 0

    yield from rec(0, 0, 0)


def enumerate_proper_colourings(g: Graph, k: int) -> Iterator[Colouring]:
    """Every surjective proper k-colouring of ``g`` exactly once, in
    lexicographic order of assignment vectors.  Empty stream when none
    exist.  Intended for desk-scale graphs."""
    if k < 1:
        raise ValueError(f"colour count must be positive, got {k}")
    for assign in _search_colourings(g, k):
        yield Colouring(ell=k, assignment=assign)


# ---------------------------------------------------------------------------
# Chromatic number
# ---------------------------------------------------------------------------

def greedy_colouring(g: Graph) -> Colouring:
    """Greedy upper-bound colouring: vertices by descending degree, each
    takes the smallest colour free among its coloured neighbours."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    assign = [0] * g.n
    for v in order:
        taken = {assign[u] for u in g.adjacency[v] if assign[u]}
        c = 1
        while c in taken:
            c += 1
        assign[v] = c
    return Colouring(ell=max(assign), assignment=tuple(assign))


def clique_number(g: Graph) -> int:
    """Exact clique number via a maximum independent set of the complement."""
    if g.n == 0:
        return 0
    return len(maximum_independent_set(complement(g)))


def chromatic_number(g: Graph) -> tuple[int, Colouring]:
    """Exact chromatic number with a witness colouring on exactly chi
    colours.

    Backtracking between a clique lower bound and a greedy upper bound;
    exactness is mandatory, speed is not.
    """
    if g.n == 0:
        raise ValueError("chromatic number of the empty graph is undefined")
    greedy = greedy_colouring(g)
    lower = clique_number(g)
    for k in range(lower, greedy.ell):
        for assign in _search_colourings(g, k, canonical=True):
            return k, Colouring(ell=k, assignment=assign)
    return greedy.ell, greedy


# ---------------------------------------------------------------------------
# Maximum independent sets and the convention colouring
# ---------------------------------------------------------------------------

def maximum_independent_set(
    g: Graph, candidates: Iterable[int] | None = None
) -> frozenset[int]:
    """Lexicographically smallest maximum independent set of the subgraph
    induced on ``candidates`` (default: all vertices).

    Include-first branch and bound over ascending vertex ids: the first
    maximum-size set met in that order is the lexicographically smallest,
    and subtrees that cannot strictly beat the incumbent are pruned.
    """
    verts = sorted(set(candidates)) if candidates is not None else list(range(g.n))
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    allowed = set(verts)
    adj = {v: set(g.adjacency[v]) & allowed for v in verts}
    best: list[int] = []

    def rec(chosen: list[int], avail: list[int]) -> None:
        nonlocal best
        if len(chosen) + len(avail) <= len(best):
            return
        if not avail:
            best = list(chosen)
            return
        v = avail[0]
        rest = avail[1:]
        rec(chosen + [v], [u for u in rest if u not in adj[v]])
        rec(chosen, rest)

    rec([], verts)
    return frozenset(best)


def convention_colouring(g: Graph, ell: int) -> Colouring:
    """Greedy-maximal colouring in exactly ``ell`` classes.

    Class 1 is a maximum independent set of ``g``; class j is a maximum
    independent set of the residual graph left by classes 1..j-1; the
    final class is the remainder, which must itself be independent.  Ties
    between equal-size maximum independent sets break to the
    lexicographically smallest vertex set, so the result is deterministic.

    Raises :class:`ConventionInfeasibleError` when the discipline cannot
    produce exactly ``ell`` non-empty proper classes.
    """
    if g.n == 0:
        raise ValueError("cannot colour the empty graph")
    if ell < 1:
        raise ValueError(f"need at least one colour class, got {ell}")
    remaining = set(range(g.n))
    assign = [0] * g.n
    for j in range(1, ell):
        if not remaining:
            raise ConventionInfeasibleError(
                f"convention infeasible at ell={ell}: no vertices left for class {j}"
            )
        cls = maximum_independent_set(g, remaining)
        for v in cls:
            assign[v] = j
        remaining -= cls
    if not remaining:
        raise ConventionInfeasibleError(
            f"convention infeasible at ell={ell}: no vertices left for class {ell}"
        )
    rem = sorted(remaining)
    for i, u in enumerate(rem):
        for v in rem[i + 1:]:
            if g.has_edge(u, v):
                raise ConventionInfeasibleError(
                    f"convention infeasible at ell={ell}: remainder contains edge ({u}, {v})"
                )
    for v in remaining:
        assign[v] = ell
    return Colouring(ell=ell, assignment=tuple(assign))


ColouringPredicate = Callable[[Graph, Colouring], bool]
