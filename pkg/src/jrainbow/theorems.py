"""Empirical checker for ten claims about J-colourings over enumerated
graph corpora.

Each claim is treated as a hypothesis, never as an axiom: the checker
evaluates it graph by graph with the exact solvers and reports HOLDS or a
list of concrete, independently re-verifiable counterexamples.  The
claims, in the checker's own labels:

  T1   a connected graph admitting a J-colouring has chi <= J
  T2   a graph admits a componentwise J-colouring iff every component has
       rainbow neighbourhood number r = n_i (modes: convention, exists-max)
  T3   a graph admits a componentwise J-colouring iff every component has
       some surjective proper chi_i-colouring under which all vertices yield
  T4   every acyclic graph of order >= 2 has jc < jstarc (strict)
  T5   when defined, jstarc <= max component Delta + 1
  T6   jstarc > jc forces a pendant vertex in some component whose J equals jc
  T7   a component with J >= 3 that is J-rainbow connected has delta >= 2
  T8   in a componentwise-J rainbow connected graph every pair admits a
       path of length >= J_i - 1
  T9   a graph admitting a componentwise J-colouring is rainbow connected
       iff some component has J <= 2, or no component containing a cycle of
       length divisible by 3 has a pendant vertex (modes: the two parses
       parse-a = mixed quantifiers as written, parse-b = per-component)
  T10  admitting a componentwise J-colouring, chi-rainbow connectivity and
       componentwise-J rainbow connectivity are all equivalent (modes:
       chi-side convention / exists)

Graphs on which a convention colouring is infeasible are skipped (and
counted) in convention modes.  Verdicts are deterministic and independent
of the worker count.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .colouring import (
    Colouring,
    ConventionInfeasibleError,
    _search_colourings,
    chromatic_number,
)
from .connectivity import (
    is_chi_rainbow_connected,
    is_jc_rainbow_connected,
    min_rainbow_path_lengths,
)
from .graphs import Graph, decompose, degree_profile, has_cycle_length_multiple
from .jcolouring import j_number, jc_number, jstarc_number
from .neighbourhoods import rainbow_neighbourhood_number, yielding_vertices

WITNESS_CAP = 5

THEOREM_IDS = ("T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10")

THEOREM_MODES: dict[str, tuple[str | None, ...]] = {
    "T1": (None,),
    "T2": ("convention", "exists-max"),
    "T3": (None,),
    "T4": (None,),
    "T5": (None,),
    "T6": (None,),
    "T7": (None,),
    "T8": (None,),
    "T9": ("parse-a", "parse-b"),
    "T10": ("convention", "exists"),
}


@dataclass(frozen=True)
class Witness:
    """A counterexample graph plus the measured facts that refute the claim."""

    n: int
    edges: tuple[tuple[int, int], ...]
    explanation: str
    details: tuple[tuple[str, object], ...]

    def graph(self) -> Graph:
        from .graphs import build_graph

        return build_graph(self.n, self.edges)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.edges],
            "explanation": self.explanation,
            "details": {k: v for k, v in self.details},
        }


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    mode: str | None
    corpus: str
    tested: int
    skipped: int
    status: str  # "HOLDS" or "COUNTEREXAMPLE"
    counterexample_count: int
    witnesses: tuple[Witness, ...]

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "mode": self.mode,
            "corpus": self.corpus,
            "tested": self.tested,
            "skipped": self.skipped,
            "status": self.status,
            "counterexample_count": self.counterexample_count,
            "witnesses": [w.to_json_dict() for w in self.witnesses],
        }


# ---------------------------------------------------------------------------
# Per-graph evaluators: return None (pass), "skip", or (explanation, details)
# ---------------------------------------------------------------------------

_SKIP = "skip"


def _check_t1(g: Graph, mode: str | None) -> object:
    dec = decompose(g)
    for ci, comp in enumerate(dec.components):
        res = j_number(comp)
        if not res.admits:
            continue
        chi, _ = chromatic_number(comp)
        if not chi <= res.value:
            return (
                f"component {ci} admits a J-colouring with J={res.value} < chi={chi}",
                {"component": ci, "chi": chi, "j": res.value},
            )
    return None


def _full_yield_chi_colouring_exists(comp: Graph) -> bool:
    chi, _ = chromatic_number(comp)
    for assign in _search_colourings(comp, chi, canonical=True):
        colouring = Colouring(ell=chi, assignment=assign)
        if len(yielding_vertices(comp, colouring)) == comp.n:
            return True
    return False


def _check_t2(g: Graph, mode: str | None) -> object:
    admits = jc_number(g).admits
    per_component = []
    dec = decompose(g)
    for comp in dec.components:
        try:
            report = rainbow_neighbourhood_number(comp, mode)
        except ConventionInfeasibleError:
            return _SKIP
        per_component.append((report.r, comp.n))
    rhs = all(r == n for r, n in per_component)
    if admits != rhs:
        return (
            f"admits={admits} but r_chi=n on all components is {rhs} (mode {mode})",
            {"admits": admits, "r_per_component": per_component},
        )
    return None


def _check_t3(g: Graph, mode: str | None) -> object:
    admits = jc_number(g).admits
    dec = decompose(g)
    rhs = all(_full_yield_chi_colouring_exists(comp) for comp in dec.components)
    if admits != rhs:
        return (
            f"admits={admits} but existence of an all-yield chi-colouring per component is {rhs}",
            {"admits": admits, "all_yield_chi_exists": rhs},
        )
    return None


def _is_acyclic(g: Graph) -> bool:
    return g.m == g.n - len(decompose(g))


def _check_t4(g: Graph, mode: str | None) -> object:
    if g.n < 2 or not _is_acyclic(g):
        return None
    jc = jc_number(g)
    jstarc = jstarc_number(g)
    if not (jc.admits and jstarc.admits):
        return (
            "acyclic graph of order >= 2 without both componentwise numbers defined",
            {"jc_admits": jc.admits, "jstarc_admits": jstarc.admits},
        )
    if not jc.value < jstarc.value:
        return (
            f"acyclic graph of order {g.n} with jc={jc.value} and jstarc={jstarc.value}: "
            "strict inequality fails",
            {"jc": jc.value, "jstarc": jstarc.value},
        )
    return None


def _check_t5(g: Graph, mode: str | None) -> object:
    jstarc = jstarc_number(g)
    if not jstarc.admits:
        return None
    bound = degree_profile(g).Delta + 1
    if not jstarc.value <= bound:
        return (
            f"jstarc={jstarc.value} exceeds max component Delta + 1 = {bound}",
            {"jstarc": jstarc.value, "max_delta_plus_1": bound},
        )
    return None


def _check_t6(g: Graph, mode: str | None) -> object:
    jc = jc_number(g)
    jstarc = jstarc_number(g)
    if not (jc.admits and jstarc.admits):
        return None
    if jstarc.value <= jc.value:
        return None
    dec = jc.decomposition
    argmax = [
        ci
        for ci, res in enumerate(jc.per_component)
        if res.value == jc.value
    ]
    if any(degree_profile(dec.components[ci]).pendants for ci in argmax):
        return None
    return (
        f"jstarc={jstarc.value} > jc={jc.value} yet no argmax component has a pendant vertex",
        {"jc": jc.value, "jstarc": jstarc.value, "argmax_components": argmax},
    )


def _check_t7(g: Graph, mode: str | None) -> object:
    dec = decompose(g)
    for ci, comp in enumerate(dec.components):
        res = j_number(comp)
        if not res.admits or res.value < 3:
            continue
        conn = is_jc_rainbow_connected(comp, "exists")
        if not conn.connected:
            continue
        if comp.min_degree() < 2:
            return (
                f"component {ci} has J={res.value} >= 3 and is J-rainbow connected "
                f"but delta={comp.min_degree()} < 2",
                {"component": ci, "j": res.value, "delta": comp.min_degree()},
            )
    return None


def _check_t8(g: Graph, mode: str | None) -> object:
    jc = jc_number(g)
    if not jc.admits:
        return None
    conn = is_jc_rainbow_connected(g, "exists")
    if not conn.connected:
        return None
    dec = jc.decomposition
    for ci, comp in enumerate(dec.components):
        if comp.n < 2:
            continue
        colouring = conn.colourings[ci]
        assert colouring is not None
        lengths = min_rainbow_path_lengths(comp, colouring)
        j_i = jc.per_component[ci].value
        assert j_i is not None
        for pair, length in lengths.items():
            if length is None or length < j_i - 1:
                return (
                    f"component {ci} pair {pair}: shortest rainbow path length "
                    f"{length} < J-1 = {j_i - 1}",
                    {"component": ci, "pair": list(pair), "length": length, "j": j_i},
                )
    return None


def _check_t9(g: Graph, mode: str | None) -> object:
    jc = jc_number(g)
    if not jc.admits:
        return None
    lhs = is_jc_rainbow_connected(g, "exists").connected
    dec = jc.decomposition
    facts = []
    for ci, comp in enumerate(dec.components):
        j_i = jc.per_component[ci].value
        has3 = has_cycle_length_multiple(comp, 3)
        pendant = bool(degree_profile(comp).pendants)
        facts.append((j_i, has3, pendant))
    cycle_clause_all = all((not has3) or (not pendant) for _, has3, pendant in facts)
    if mode == "parse-a":
        rhs = any(j_i <= 2 for j_i, _, _ in facts) or cycle_clause_all
    else:  # parse-b: per-component disjunction
        rhs = all(
            j_i <= 2 or (not has3) or (not pendant) for j_i, has3, pendant in facts
        )
    if lhs != rhs:
        return (
            f"rainbow connected={lhs} but the {mode} condition evaluates to {rhs}",
            {
                "rainbow_connected": lhs,
                "condition": rhs,
                "component_facts": [
                    {"j": j_i, "has_cycle_mult3": has3, "has_pendant": pendant}
                    for j_i, has3, pendant in facts
                ],
            },
        )
    return None


def _check_t10(g: Graph, mode: str | None) -> object:
    admits = jc_number(g).admits
    try:
        chi_conn = is_chi_rainbow_connected(g, mode).connected
    except ConventionInfeasibleError:
        return _SKIP
    if admits != chi_conn:
        return (
            f"admits componentwise J-colouring = {admits} but chi-rainbow connected "
            f"({mode}) = {chi_conn}",
            {"admits": admits, "chi_rainbow_connected": chi_conn, "chi_mode": mode},
        )
    if admits:
        jc_conn = is_jc_rainbow_connected(g, "exists").connected
        if jc_conn != chi_conn:
            return (
                f"chi-rainbow connected ({mode}) = {chi_conn} but componentwise-J "
                f"rainbow connected = {jc_conn}",
                {
                    "admits": admits,
                    "chi_rainbow_connected": chi_conn,
                    "jc_rainbow_connected": jc_conn,
                    "chi_mode": mode,
                },
            )
    return None


_CHECKERS: dict[str, Callable[[Graph, str | None], object]] = {
    "T1": _check_t1,
    "T2": _check_t2,
    "T3": _check_t3,
    "T4": _check_t4,
    "T5": _check_t5,
    "T6": _check_t6,
    "T7": _check_t7,
    "T8": _check_t8,
    "T9": _check_t9,
    "T10": _check_t10,
}


# ---------------------------------------------------------------------------
# Corpus runner
# ---------------------------------------------------------------------------

def check(
    theorem_id: str,
    graphs: Sequence[Graph],
    corpus: str = "",
    mode: str | None = None,
    workers: int = 1,
) -> TheoremVerdict:
    """Evaluate one claim over a graph corpus.

    The corpus is processed in order; with ``workers`` > 1 the per-graph
    evaluations run in a thread pool but results are merged in corpus
    order, so the verdict is identical for any worker count.
    """
    if theorem_id not in _CHECKERS:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    modes = THEOREM_MODES[theorem_id]
    if mode is None and len(modes) > 1:
        raise ValueError(f"{theorem_id} needs a mode from {modes}")
    if mode is not None and mode not in modes:
        raise ValueError(f"{theorem_id} mode must be one of {modes}, got {mode!r}")
    checker = _CHECKERS[theorem_id]
    graphs = list(graphs)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda g: checker(g, mode), graphs))
    else:
        outcomes = [checker(g, mode) for g in graphs]
    tested = 0
    skipped = 0
    fails: list[tuple[Graph, str, dict]] = []
    for g, outcome in zip(graphs, outcomes):
        if outcome == _SKIP:
            skipped += 1
            continue
        tested += 1
        if outcome is not None:
            explanation, details = outcome  # type: ignore[misc]
            fails.append((g, explanation, details))
    fails.sort(key=lambda item: (item[0].n, item[0].m, item[0].edges))
    witnesses = tuple(
        Witness(
            n=g.n,
            edges=g.edges,
            explanation=explanation,
            details=tuple(sorted(details.items())),
        )
        for g, explanation, details in fails[:WITNESS_CAP]
    )
    return TheoremVerdict(
        theorem=theorem_id,
        mode=mode,
        corpus=corpus,
        tested=tested,
        skipped=skipped,
        status="COUNTEREXAMPLE" if fails else "HOLDS",
        counterexample_count=len(fails),
        witnesses=witnesses,
    )


def check_all(
    graphs: Sequence[Graph],
    corpus: str = "",
    theorems: Iterable[str] | None = None,
    workers: int = 1,
) -> list[TheoremVerdict]:
    """Run the selected claims (default: all) in every mode, ordered by
    theorem id then mode."""
    selected = tuple(theorems) if theorems is not None else THEOREM_IDS
    for tid in selected:
        if tid not in _CHECKERS:
            raise ValueError(f"unknown theorem id {tid!r}")
    graphs = list(graphs)
    verdicts = []
    for tid in sorted(selected, key=lambda t: int(t[1:])):
        for mode in THEOREM_MODES[tid]:
            verdicts.append(check(tid, graphs, corpus=corpus, mode=mode, workers=workers))
    return verdicts


# ---------------------------------------------------------------------------
# Reporting
# ---------------------------------------------------------------------------

def report(verdicts: Sequence[TheoremVerdict], fmt: str = "text") -> str:
    """Render verdicts as a versioned JSON document or as a text table
    derived from that same document."""
    doc = {
        "schema": "theorem-report/1",
        "verdicts": [
            v.to_json_dict()
            for v in sorted(verdicts, key=lambda v: (int(v.theorem[1:]), v.mode or ""))
        ],
    }
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if fmt != "text":
        raise ValueError(f"format must be 'text' or 'json', got {fmt!r}")
    lines = []
    header = f"{'theorem':<9}{'mode':<13}{'status':<16}{'tested':>7}{'skipped':>9}  corpus"
    lines.append(header)
    lines.append("-" * len(header))
    for v in doc["verdicts"]:
        lines.append(
            f"{v['theorem']:<9}{(v['mode'] or '-'):<13}{v['status']:<16}"
            f"{v['tested']:>7}{v['skipped']:>9}  {v['corpus']}"
        )
        for w in v["witnesses"]:
            lines.append(f"    counterexample n={w['n']} edges={w['edges']}")
            lines.append(f"      {w['explanation']}")
    return "\n".join(lines) + "\n"
