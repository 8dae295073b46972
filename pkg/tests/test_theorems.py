import json

import pytest

from jrainbow import (
    THEOREM_IDS,
    build_graph,
    check,
    check_all,
    enumerate_graphs,
    enumerate_trees,
    jc_number,
    jstarc_number,
    report,
)
from jrainbow.theorems import THEOREM_MODES

from conftest import family


@pytest.fixture(scope="module")
def corpus_to_5():
    return [g for n in range(1, 6) for g in enumerate_graphs(n)]


def test_definition_true_claims_hold(corpus_to_5):
    for tid in ("T1", "T5", "T7", "T8"):
        verdict = check(tid, corpus_to_5, corpus="graphs n<=5")
        assert verdict.status == "HOLDS", verdict
        assert verdict.tested == len(corpus_to_5)


def test_t4_checker_finds_the_order_two_gap():
    # the strict inequality genuinely fails on trees without internal
    # vertices: J(K_2) = J*(K_2) = 2, so the checker must say so
    trees = [t for n in range(2, 7) for t in enumerate_trees(n)]
    verdict = check("T4", trees, corpus="trees 2<=n<=6")
    assert verdict.status == "COUNTEREXAMPLE"
    witness = verdict.witnesses[0]
    assert witness.n == 2 and witness.edges == ((0, 1),)
    # the witness re-verifies through the solvers
    g = witness.graph()
    assert jc_number(g).value == jstarc_number(g).value == 2


def test_t4_holds_on_trees_with_internal_vertices():
    trees = [t for n in range(3, 9) for t in enumerate_trees(n)]
    verdict = check("T4", trees, corpus="trees 3<=n<=8")
    assert verdict.status == "HOLDS"
    assert verdict.tested == len(trees)


def test_t2_needs_a_mode(corpus_to_5):
    with pytest.raises(ValueError, match="mode"):
        check("T2", corpus_to_5)


def test_t2_convention_skips_infeasible():
    double_star = build_graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    verdict = check("T2", [double_star], mode="convention")
    assert verdict.skipped == 1 and verdict.tested == 0
    verdict = check("T2", [double_star], mode="exists-max")
    assert verdict.skipped == 0 and verdict.tested == 1


def test_t10_c5_probe_is_a_counterexample():
    c5 = family("cycle", 5)
    for mode in THEOREM_MODES["T10"]:
        verdict = check("T10", [c5], corpus="C_5 probe", mode=mode)
        assert verdict.status == "COUNTEREXAMPLE"
        details = dict(verdict.witnesses[0].details)
        assert details["admits"] is False
        assert details["chi_rainbow_connected"] is True


def test_witnesses_reverify(corpus_to_5):
    # every emitted witness must reproduce its recorded refutation
    from jrainbow import is_chi_rainbow_connected

    for verdict in check_all(corpus_to_5, corpus="graphs n<=5"):
        for witness in verdict.witnesses:
            g = witness.graph()
            details = dict(witness.details)
            if verdict.theorem == "T4":
                assert jc_number(g).value == details["jc"]
                assert jstarc_number(g).value == details["jstarc"]
                assert not details["jc"] < details["jstarc"]
            elif verdict.theorem == "T10":
                assert jc_number(g).admits == details["admits"]
                chi_conn = is_chi_rainbow_connected(g, details["chi_mode"]).connected
                assert chi_conn == details["chi_rainbow_connected"]
            else:
                pytest.fail(
                    f"unexpected counterexample for {verdict.theorem}: {witness}"
                )


def test_determinism_across_runs_and_workers(corpus_to_5):
    ref = report(check_all(corpus_to_5, corpus="x"), "json")
    again = report(check_all(corpus_to_5, corpus="x"), "json")
    threaded = report(check_all(corpus_to_5, corpus="x", workers=3), "json")
    assert ref == again == threaded


def test_verdicts_are_corpus_monotone(corpus_to_5):
    # HOLDS on a corpus implies HOLDS on any sub-corpus
    small = [g for g in corpus_to_5 if g.n <= 4]
    for tid in ("T1", "T5", "T7", "T8"):
        big = check(tid, corpus_to_5)
        if big.status == "HOLDS":
            assert check(tid, small).status == "HOLDS"


def test_witnesses_sorted_minimal_first():
    trees = [t for n in range(2, 7) for t in enumerate_trees(n)]
    corpus = trees + [build_graph(2, [])]
    verdict = check("T4", corpus)
    keys = [(w.n, len(w.edges)) for w in verdict.witnesses]
    assert keys == sorted(keys)
    assert keys[0] == (2, 0)  # the edgeless pair is the minimal witness


def test_unknown_theorem_rejected(corpus_to_5):
    with pytest.raises(ValueError):
        check("T11", corpus_to_5)
    with pytest.raises(ValueError):
        check_all(corpus_to_5, theorems=["T0"])


# ---------------------------------------------------------------------------
# Reporting
# ---------------------------------------------------------------------------

def test_report_empty_is_valid_json():
    doc = json.loads(report([], "json"))
    assert doc == {"schema": "theorem-report/1", "verdicts": []}


def test_report_single_row():
    verdict = check("T1", [family("complete", 3)], corpus="K_3")
    text = report([verdict], "text")
    assert "T1" in text and "HOLDS" in text and "K_3" in text


def test_report_renders_counterexamples():
    verdict = check("T4", [build_graph(2, [])], corpus="N_2")
    text = report([verdict], "text")
    assert "counterexample n=2" in text
    doc = json.loads(report([verdict], "json"))
    assert doc["verdicts"][0]["status"] == "COUNTEREXAMPLE"
    assert doc["verdicts"][0]["witnesses"][0]["edges"] == []


def test_report_orders_by_theorem_and_mode(corpus_to_5):
    verdicts = check_all([family("complete", 3)], corpus="K_3")
    doc = json.loads(report(verdicts, "json"))
    ids = [(v["theorem"], v["mode"]) for v in doc["verdicts"]]
    assert ids == sorted(ids, key=lambda t: (int(t[0][1:]), t[1] or ""))
    assert len(ids) == sum(len(THEOREM_MODES[t]) for t in THEOREM_IDS)
