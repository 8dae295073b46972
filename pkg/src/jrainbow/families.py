"""Graph family generators, closed-form J-number oracles, and exhaustive
enumeration of small non-isomorphic graphs and trees.

The oracles answer without running a solver, from facts that pin each
family down:

  null graphs      J = J* = 1 (one colour class, no edges to violate)
  complete K_n     J = J* = n (closed neighbourhoods are everything)
  cycles C_n       admit iff n = 0 mod 2 or mod 3; J = 3 when 3 | n else 2,
                   capped by delta+1 = 3 and realised by periodic patterns
  wheels W_n       (hub + rim C_{n-1}) J = 4 when 3 | rim, J = 3 when rim
                   even and not divisible by 3, otherwise no J-colouring
  complete multipartite with parts n_1..n_l: J = l (colour by part)
  forests          non-trivial tree components have J = 2 (bipartition),
                   trivial ones 1; J* is 3 for any tree of order >= 3,
                   with stars reaching Delta+1

Every oracle answer carries a formula-built witness so tests can validate
it through the colouring predicates without consulting the solvers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .colouring import Colouring
from .graphs import Graph, build_graph, is_connected
from .jcolouring import JResult


@dataclass(frozen=True)
class FamilySpec:
    """A named family instance.

    kind: one of null, path, cycle, complete, wheel, complete_multipartite,
    forest_union, disjoint_union.  ``params`` holds the orders (or part
    sizes; for forest_union the path-component orders); ``parts`` holds the
    sub-specs of a disjoint_union.
    """

    kind: str
    params: tuple[int, ...] = ()
    parts: tuple["FamilySpec", ...] = field(default=())

    def describe(self) -> str:
        if self.kind == "disjoint_union":
            return " + ".join(p.describe() for p in self.parts)
        return f"{self.kind}({', '.join(map(str, self.params))})"


KINDS = (
    "null",
    "path",
    "cycle",
    "complete",
    "wheel",
    "complete_multipartite",
    "forest_union",
    "disjoint_union",
)


def _validate(spec: FamilySpec) -> None:
    kind, params = spec.kind, spec.params
    if kind not in KINDS:
        raise ValueError(f"unknown family kind {kind!r}")
    if kind == "disjoint_union":
        if not spec.parts:
            raise ValueError("disjoint_union needs at least one part")
        for part in spec.parts:
            if part.kind == "disjoint_union":
                _validate(part)
            else:
                _validate(part)
        return
    if spec.parts:
        raise ValueError(f"{kind} takes no sub-specs")
    if not params:
        raise ValueError(f"{kind} needs at least one parameter")
    if kind in ("null", "path", "complete") and (len(params) != 1 or params[0] < 1):
        raise ValueError(f"{kind} takes one order >= 1, got {params}")
    if kind == "cycle" and (len(params) != 1 or params[0] < 3):
        raise ValueError(f"cycle takes one order >= 3, got {params}")
    if kind == "wheel" and (len(params) != 1 or params[0] < 4):
        raise ValueError(f"wheel takes one total order >= 4, got {params}")
    if kind == "complete_multipartite" and any(p < 1 for p in params):
        raise ValueError(f"part sizes must be >= 1, got {params}")
    if kind == "forest_union" and any(p < 1 for p in params):
        raise ValueError(f"component orders must be >= 1, got {params}")


# ---------------------------------------------------------------------------
# Generators (canonical labelled constructions)
# ---------------------------------------------------------------------------

def generate(spec: FamilySpec) -> Graph:
    """Canonical labelled construction of the family instance.

    Cycles use rim order 0..n-1; wheels put the hub at vertex 0 with the
    rim 1..n-1 in cycle order; multipartite parts occupy contiguous id
    blocks; unions concatenate components with id offsets.
    """
    _validate(spec)
    kind, params = spec.kind, spec.params
    if kind == "null":
        return build_graph(params[0], [])
    if kind == "path":
        n = params[0]
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        n = params[0]
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        n = params[0]
        return build_graph(n, itertools.combinations(range(n), 2))
    if kind == "wheel":
        n = params[0]
        rim = n - 1
        edges = [(0, i) for i in range(1, n)]
        edges += [(i, i % rim + 1) for i in range(1, n)]
        return build_graph(n, edges)
    if kind == "complete_multipartite":
        blocks: list[list[int]] = []
        start = 0
        for size in params:
            blocks.append(list(range(start, start + size)))
            start += size
        edges = [
            (u, v)
            for a, b in itertools.combinations(range(len(blocks)), 2)
            for u in blocks[a]
            for v in blocks[b]
        ]
        return build_graph(start, edges)
    if kind == "forest_union":
        return generate(
            FamilySpec(
                "disjoint_union",
                parts=tuple(FamilySpec("path", (k,)) for k in params),
            )
        )
    # disjoint_union
    offset = 0
    n_total = 0
    edges = []
    for part in spec.parts:
        sub = generate(part)
        edges.extend((u + offset, v + offset) for u, v in sub.edges)
        offset += sub.n
        n_total += sub.n
    return build_graph(n_total, edges)


# ---------------------------------------------------------------------------
# Closed-form oracles
# ---------------------------------------------------------------------------

def _connected_pieces(spec: FamilySpec) -> list[FamilySpec]:
    """Split a spec into connected pieces (vertex order preserved)."""
    kind, params = spec.kind, spec.params
    if kind == "null":
        return [FamilySpec("complete", (1,))] * params[0]
    if kind == "complete_multipartite" and len(params) == 1:
        return [FamilySpec("complete", (1,))] * params[0]
    if kind == "forest_union":
        return [piece for k in params for piece in _connected_pieces(FamilySpec("path", (k,)))]
    if kind == "disjoint_union":
        return [piece for part in spec.parts for piece in _connected_pieces(part)]
    return [spec]


def _piece_order(piece: FamilySpec) -> int:
    if piece.kind == "complete_multipartite":
        return sum(piece.params)
    return piece.params[0]


def _piece_j(piece: FamilySpec) -> tuple[int | None, tuple[int, ...] | None]:
    """(J value, witness assignment) for a connected piece, or (None, None)."""
    kind, params = piece.kind, piece.params
    if kind == "complete":
        n = params[0]
        return n, tuple(range(1, n + 1))
    if kind == "path":
        n = params[0]
        if n == 1:
            return 1, (1,)
        return 2, tuple(i % 2 + 1 for i in range(n))
    if kind == "cycle":
        n = params[0]
        if n % 3 == 0:
            return 3, tuple(i % 3 + 1 for i in range(n))
        if n % 2 == 0:
            return 2, tuple(i % 2 + 1 for i in range(n))
        return None, None
    if kind == "wheel":
        rim = params[0] - 1
        if rim % 3 == 0:
            return 4, (4,) + tuple(i % 3 + 1 for i in range(rim))
        if rim % 2 == 0:
            return 3, (3,) + tuple(i % 2 + 1 for i in range(rim))
        return None, None
    if kind == "complete_multipartite":
        ell = len(params)
        assign: list[int] = []
        for colour, size in enumerate(params, start=1):
            assign.extend([colour] * size)
        return ell, tuple(assign)
    raise ValueError(f"no closed-form J oracle for {kind}")


def _piece_j_star(piece: FamilySpec) -> tuple[int | None, tuple[int, ...] | None]:
    """(J* value, witness) for a connected piece, or (None, None).

    Pendant-free pieces have J* = J; paths settle at 3 from order 3 on and
    stars reach Delta+1.
    """
    kind, params = piece.kind, piece.params
    if kind == "path":
        n = params[0]
        if n <= 2:
            return n, tuple(range(1, n + 1))
        return 3, tuple(i % 3 + 1 for i in range(n))
    if kind == "complete_multipartite":
        sizes = sorted(params)
        if len(params) == 2 and sizes[0] == 1 and sizes[1] >= 2:
            # star: only the centre is internal
            m = sizes[1]
            centre_first = params[0] == 1
            if centre_first:
                return m + 1, (1,) + tuple(range(2, m + 2))
            return m + 1, tuple(range(2, m + 2)) + (1,)
        return _piece_j(piece)
    # complete, cycle, wheel have no pendant vertices: J* = J
    return _piece_j(piece)


def _assemble(pieces: list[FamilySpec], values_witnesses) -> JResult:
    """Combine per-piece (value, witness) into a componentwise JResult with
    a whole-graph witness colouring (each piece keeps colours 1..J_i)."""
    if any(v is None for v, _ in values_witnesses):
        return JResult(admits=False)
    value = max(v for v, _ in values_witnesses)
    assignment: list[int] = []
    for _, w in values_witnesses:
        assignment.extend(w)
    return JResult(
        admits=True,
        value=value,
        witness=Colouring(ell=value, assignment=tuple(assignment)),
    )


def oracle_j(spec: FamilySpec) -> JResult:
    """Closed-form componentwise J number of the family instance, with a
    formula-built witness; admits=False when some component admits no
    J-colouring."""
    _validate(spec)
    pieces = _connected_pieces(spec)
    return _assemble(pieces, [_piece_j(p) for p in pieces])


def oracle_j_star(spec: FamilySpec) -> JResult:
    """Closed-form componentwise J* number, symmetric to :func:`oracle_j`."""
    _validate(spec)
    pieces = _connected_pieces(spec)
    return _assemble(pieces, [_piece_j_star(p) for p in pieces])


def oracle_jc(spec: FamilySpec) -> JResult:
    """Alias of :func:`oracle_j`: for connected instances the componentwise
    number equals J, and the oracle is componentwise already."""
    return oracle_j(spec)


# ---------------------------------------------------------------------------
# Canonical forms and exhaustive enumeration of small graphs
# ---------------------------------------------------------------------------

def _wl_classes(g: Graph) -> list[int]:
    """Stable 1-dimensional Weisfeiler-Leman colour classes, encoded as
    canonical integers (isomorphism-invariant)."""
    colours = [g.degree(v) for v in range(g.n)]
    for _ in range(g.n):
        raw = [
            (colours[v], tuple(sorted(colours[u] for u in g.adjacency[v])))
            for v in range(g.n)
        ]
        mapping = {sig: i for i, sig in enumerate(sorted(set(raw)))}
        new = [mapping[raw[v]] for v in range(g.n)]
        if new == colours:
            break
        colours = new
    return colours


def _edge_mask(n: int, edges, perm) -> int:
    mask = 0
    for u, v in edges:
        a, b = perm[u], perm[v]
        if a > b:
            a, b = b, a
        mask |= 1 << (a * n + b)
    return mask


def canonical_form(g: Graph) -> tuple[int, int]:
    """Canonical (n, edge-bitmask) pair: the minimum relabelled edge mask
    over all vertex orderings that respect the WL colour classes.

    Restricting to class-respecting orderings is exact because any
    isomorphism preserves WL classes, and it keeps the brute-force
    permutation search tractable to n = 8.
    """
    n = g.n
    if n == 0:
        return (0, 0)
    classes = _wl_classes(g)
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(classes):
        groups.setdefault(c, []).append(v)
    ordered_groups = [groups[c] for c in sorted(groups)]
    best: int | None = None
    perm = [0] * n
    for arrangement in itertools.product(
        *(itertools.permutations(grp) for grp in ordered_groups)
    ):
        pos = 0
        for grp in arrangement:
            for v in grp:
                perm[v] = pos
                pos += 1
        mask = _edge_mask(n, g.edges, perm)
        if best is None or mask < best:
            best = mask
    assert best is not None
    return (n, best)


def _graph_from_form(form: tuple[int, int]) -> Graph:
    n, mask = form
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if mask >> (u * n + v) & 1
    ]
    return build_graph(n, edges)


def _all_graphs(n: int) -> list[Graph]:
    """All non-isomorphic graphs on n vertices via vertex augmentation:
    attach a new vertex to every subset of each (n-1)-vertex graph and
    deduplicate by canonical form."""
    if n == 1:
        return [build_graph(1, [])]
    forms: set[tuple[int, int]] = set()
    for h in _all_graphs_cached(n - 1):
        for subset_mask in range(1 << (n - 1)):
            edges = list(h.edges)
            edges.extend(
                (v, n - 1) for v in range(n - 1) if subset_mask >> v & 1
            )
            forms.add(canonical_form(build_graph(n, edges)))
    return [_graph_from_form(f) for f in sorted(forms, key=lambda f: (bin(f[1]).count("1"), f[1]))]


_GRAPH_CACHE: dict[int, list[Graph]] = {}


def _all_graphs_cached(n: int) -> list[Graph]:
    if n not in _GRAPH_CACHE:
        _GRAPH_CACHE[n] = _all_graphs(n)
    return _GRAPH_CACHE[n]


def enumerate_graphs(n: int, connected_only: bool = False) -> list[Graph]:
    """All non-isomorphic graphs on n vertices (1 <= n <= 8), one canonical
    representative each, ordered by (edge count, canonical form)."""
    if not 1 <= n <= 8:
        raise ValueError(f"enumeration supported for 1 <= n <= 8, got {n}")
    graphs = _all_graphs_cached(n)
    if connected_only:
        return [g for g in graphs if is_connected(g)]
    return list(graphs)


_TREE_CACHE: dict[int, list[Graph]] = {}


def enumerate_trees(n: int) -> list[Graph]:
    """All non-isomorphic trees on n vertices (n >= 1), by leaf
    augmentation with canonical-form deduplication."""
    if n < 1:
        raise ValueError(f"tree order must be >= 1, got {n}")
    if n in _TREE_CACHE:
        return _TREE_CACHE[n]
    if n == 1:
        trees = [build_graph(1, [])]
    else:
        forms: set[tuple[int, int]] = set()
        for t in enumerate_trees(n - 1):
            for v in range(n - 1):
                forms.add(canonical_form(build_graph(n, list(t.edges) + [(v, n - 1)])))
        trees = [_graph_from_form(f) for f in sorted(forms, key=lambda f: f[1])]
    _TREE_CACHE[n] = trees
    return trees
