"""J and J* numbers of connected graphs and their componentwise
generalisations for arbitrary graphs.

A J-colouring is a surjective proper colouring under which every vertex
yields a rainbow neighbourhood; J(G) is the largest colour count any such
colouring achieves.  J* relaxes the requirement to internal vertices only
(degree >= 2), so pendant and isolated vertices are unconstrained.  For a
disconnected graph the componentwise numbers request the colouring per
component and take the maximum, and exist exactly when every component
admits one.

Since a yielding vertex v needs all ell colours inside N[v], any
J-colouring satisfies ell <= delta(G)+1, and a J*-colouring satisfies
ell <= min over internal vertices of (deg+1).  The solvers search colour
counts downward from those caps and return the first success, which is
the maximum by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from .colouring import (
    Colouring,
    ColouringPredicate,
    _search_colourings,
    enumerate_proper_colourings,
    is_proper,
)
from .graphs import ComponentDecomposition, Graph, decompose, degree_profile, is_connected
from .neighbourhoods import _yields


class NotJColourable(ValueError):
    """Raised by predicates that are only defined for graphs admitting a
    componentwise J-colouring."""


@dataclass(frozen=True)
class JResult:
    """Outcome of a J- or J*-number solve: either the graph admits no such
    colouring, or the maximum colour count plus a witness."""

    admits: bool
    value: int | None = None
    witness: Colouring | None = None

    def __post_init__(self) -> None:
        if self.admits != (self.value is not None) or self.admits != (
            self.witness is not None
        ):
            raise ValueError("admits, value and witness must be present together")

    def to_json_dict(self) -> dict:
        return {
            "admits": self.admits,
            "value": self.value,
            "witness": self.witness.to_json_dict() if self.witness else None,
        }


@dataclass(frozen=True)
class ComponentaResult:
    """Componentwise solve: per-component results plus the maximum."""

    decomposition: ComponentDecomposition
    per_component: tuple[JResult, ...]

    @property
    def admits(self) -> bool:
        return all(r.admits for r in self.per_component)

    @property
    def value(self) -> int | None:
        if not self.admits:
            return None
        return max(r.value for r in self.per_component)  # type: ignore[type-var]

    @property
    def equal_across_components(self) -> bool:
        if not self.admits:
            return False
        values = {r.value for r in self.per_component}
        return len(values) == 1

    def to_json_dict(self) -> dict:
        return {
            "admits": self.admits,
            "value": self.value,
            "equal_across_components": self.equal_across_components,
            "per_component": [r.to_json_dict() for r in self.per_component],
        }


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def _require_connected(g: Graph, op: str) -> None:
    if g.n == 0:
        raise ValueError(f"{op}: graph has no vertices")
    if not is_connected(g):
        raise ValueError(f"{op}: graph is disconnected; use the componentwise operation")


def is_j_colouring(g: Graph, colouring: Colouring) -> bool:
    """True iff ``colouring`` is proper on connected ``g`` and every vertex
    yields a rainbow neighbourhood."""
    _require_connected(g, "is_j_colouring")
    if not is_proper(g, colouring):
        return False
    return all(_yields(g, colouring, v) for v in range(g.n))


def is_j_star_colouring(g: Graph, colouring: Colouring) -> bool:
    """True iff ``colouring`` is proper on connected ``g`` and every
    internal vertex (degree >= 2) yields a rainbow neighbourhood.  Graphs
    without internal vertices accept any proper surjective colouring."""
    _require_connected(g, "is_j_star_colouring")
    if not is_proper(g, colouring):
        return False
    internal = degree_profile(g).internal
    return all(_yields(g, colouring, v) for v in internal)


# ---------------------------------------------------------------------------
# Solvers
# ---------------------------------------------------------------------------

def _solve_max(g: Graph, covered: frozenset[int], cap: int) -> JResult:
    """Largest k in 1..cap admitting a surjective proper k-colouring whose
    ``covered`` vertices all yield; first witness in canonical order."""
    for k in range(min(cap, g.n), 0, -1):
        for assign in _search_colourings(g, k, covered=covered, canonical=True):
            return JResult(admits=True, value=k, witness=Colouring(ell=k, assignment=assign))
    return JResult(admits=False)


@lru_cache(maxsize=None)
def j_number(g: Graph) -> JResult:
    """Maximum colour count over J-colourings of connected ``g``, or
    admits=False when no colour count works."""
    _require_connected(g, "j_number")
    cap = g.min_degree() + 1
    return _solve_max(g, covered=frozenset(range(g.n)), cap=cap)


@lru_cache(maxsize=None)
def j_star_number(g: Graph) -> JResult:
    """Maximum colour count over J*-colourings of connected ``g``."""
    _require_connected(g, "j_star_number")
    internal = degree_profile(g).internal
    if internal:
        cap = min(g.degree(v) for v in internal) + 1
    else:
        cap = g.n  # K_1 and K_2: any proper surjective colouring qualifies
    return _solve_max(g, covered=internal, cap=cap)


def enumerate_j_colourings(g: Graph, k: int) -> Iterator[Colouring]:
    """All surjective proper k-colourings of connected ``g`` in which every
    vertex yields, one representative per colour permutation."""
    _require_connected(g, "enumerate_j_colourings")
    for assign in _search_colourings(
        g, k, covered=frozenset(range(g.n)), canonical=True
    ):
        yield Colouring(ell=k, assignment=assign)


def _componentwise(g: Graph, solver: Callable[[Graph], JResult]) -> ComponentaResult:
    if g.n == 0:
        raise ValueError("componentwise numbers of the empty graph are undefined")
    dec = decompose(g)
    return ComponentaResult(
        decomposition=dec,
        per_component=tuple(solver(comp) for comp in dec.components),
    )


def jc_number(g: Graph) -> ComponentaResult:
    """Componentwise J number: admits iff every component admits a
    J-colouring; value is the maximum per-component J."""
    return _componentwise(g, j_number)


def jstarc_number(g: Graph) -> ComponentaResult:
    """Componentwise J* number, symmetric to :func:`jc_number`."""
    return _componentwise(g, j_star_number)


# ---------------------------------------------------------------------------
# Minimise / maximise transforms
# ---------------------------------------------------------------------------

def _class_partitions(ell: int, groups: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Partitions of colours 1..ell into exactly ``groups`` non-empty
    blocks, in restricted-growth order; blocks ordered by smallest member."""

    def rec(i: int, blocks: list[list[int]]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i > ell:
            if len(blocks) == groups:
                yield tuple(tuple(b) for b in blocks)
            return
        # cannot finish if even opening a new block per remaining colour is too few
        if len(blocks) + (ell - i + 1) < groups:
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        if len(blocks) < groups:
            blocks.append([i])
            yield from rec(i + 1, blocks)
            blocks.pop()

    yield from rec(1, [])


def _merge_classes(
    colouring: Colouring, partition: tuple[tuple[int, ...], ...]
) -> Colouring:
    relabel: dict[int, int] = {}
    for new_c, block in enumerate(sorted(partition, key=lambda b: b[0]), start=1):
        for old_c in block:
            relabel[old_c] = new_c
    return Colouring(
        ell=len(partition),
        assignment=tuple(relabel[c] for c in colouring.assignment),
    )


def minimise_colouring(
    g: Graph, colouring: Colouring, prop: ColouringPredicate
) -> Colouring:
    """Proper colouring with the fewest colours satisfying ``prop``, at
    most the input's colour count.

    At each target count, class-merge quotients of the input are tried
    first (any merge sequence amounts to a partition of the colour classes
    with independent block unions, so the search runs over those
    partitions); if no quotient works, all surjective proper colourings at
    that count are searched.  Exhaustive; desk scale only.
    """
    if not prop(g, colouring):
        raise ValueError("input colouring does not satisfy the property")
    for groups in range(1, colouring.ell + 1):
        for partition in _class_partitions(colouring.ell, groups):
            merged = _merge_classes(colouring, partition)
            if is_proper(g, merged) and prop(g, merged):
                return merged
        if groups < colouring.ell:
            for candidate in enumerate_proper_colourings(g, groups):
                if prop(g, candidate):
                    return candidate
    return colouring  # unreachable: the identity partition reproduces the input


def maximise_colouring(
    g: Graph, colouring: Colouring, prop: ColouringPredicate
) -> Colouring:
    """Proper colouring with the most colours satisfying ``prop``, found by
    re-searching all surjective proper k-colourings for k above the input's
    colour count.  Returns the input when nothing larger satisfies
    ``prop``."""
    if not prop(g, colouring):
        raise ValueError("input colouring does not satisfy the property")
    for k in range(g.n, colouring.ell, -1):
        for candidate in enumerate_proper_colourings(g, k):
            if prop(g, candidate):
                return candidate
    return colouring


# ---------------------------------------------------------------------------
# Independent brute-force route (oracle duals for the solvers)
# ---------------------------------------------------------------------------

def brute_force_j_number(g: Graph, star: bool = False) -> JResult:
    """J (or J*) number by scanning every surjective proper k-colouring
    from the degree cap downward and testing the predicate whole.

    Deliberately shares no pruning with the solvers; used to cross-check
    them on small graphs.
    """
    _require_connected(g, "brute_force_j_number")
    predicate = is_j_star_colouring if star else is_j_colouring
    profile = degree_profile(g)
    if star:
        cap = min((g.degree(v) for v in profile.internal), default=g.n - 1) + 1
        cap = min(cap, g.n)
    else:
        cap = profile.delta + 1
    for k in range(cap, 0, -1):
        for colouring in enumerate_proper_colourings(g, k):
            if predicate(g, colouring):
                return JResult(admits=True, value=k, witness=colouring)
    return JResult(admits=False)
