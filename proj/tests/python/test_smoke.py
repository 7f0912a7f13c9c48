import json

import pytest

import sepcol


def test_graph_round_trip():
    text = "vertices 3\nedge 0 1\nedge 1 2\nedge 1 2\n"
    g = sepcol.parse_graph(text)
    assert g.num_vertices == 3
    assert g.num_edges == 3
    assert g.to_text() == text
    assert g.edges == [(0, 1), (1, 2), (1, 2)]
    assert sepcol.parse_graph(g.to_text()) == g
    assert len(g.hash()) == 16


def test_malformed_graph_raises():
    with pytest.raises(ValueError):
        sepcol.parse_graph("vertices 2\nedge 0 2\n")


@pytest.mark.parametrize(
    "n, ch, conflict, ad, sep",
    [(1, 1, 1, 1, 1), (2, 2, 2, 2, 2), (3, 3, 2, 2, 2), (4, 4, 3, 3, 2)],
)
def test_complete_graph_values(n, ch, conflict, ad, sep):
    g, _ = sepcol.build(f"complete:{n}")
    got = sepcol.ledger(g, ["ch", "chi_conflict", "ch_ad", "ch_sep"], exhaustion_only=True)
    for kind, value in [("ch", ch), ("chi_conflict", conflict), ("ch_ad", ad), ("ch_sep", sep)]:
        b = got["bounds"][kind]
        assert b["lower"]["value"] == b["upper"]["value"] == value


def test_ledger_has_all_kinds_with_provenance():
    g = sepcol.Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    led = sepcol.ledger(g)
    assert led["graph_hash"] == g.hash()
    assert set(led["bounds"]) == set(sepcol.KINDS)
    for b in led["bounds"].values():
        assert b["lower"]["provenance"]["type"] in {"witness", "exhaustion", "theorem", "chain"}
        assert b["lower"]["value"] <= b["upper"]["value"]


def test_budget_interval():
    g, _ = sepcol.build("complete:5")
    lo, hi = sepcol.invariant(
        g, "chi_conflict", exhaustion_only=True, budget=sepcol.Budget(instances=3)
    )
    assert lo < hi


def test_verify_confirms_published_witness():
    g, meta = sepcol.build("kkn-bad:2")
    assert meta["instance"]["kind"] == "sep-list"
    result = sepcol.verify(g, meta["instance"])
    assert result["status"] == "unsat"


def test_verify_refutes_and_rejects_hash_mismatch():
    g, meta = sepcol.build("fig1-glued")
    ones = dict(meta["instance"])
    ones["data"] = [[1, 1]] * g.num_edges
    result = sepcol.verify(g, ones)
    assert result["status"] == "sat"
    assert len(result["assignment"]) == g.num_vertices

    other, _ = sepcol.build("complete:3")
    with pytest.raises(sepcol.InputError):
        sepcol.verify(other, json.dumps(meta["instance"]))


def test_registry_and_experiments():
    assert "fig2-glued" in sepcol.construction_names()
    assert "ledger-fuzz" in sepcol.experiment_names()
    r = sepcol.experiment("wheel6")
    assert r.passed
    assert r.report["version"] == sepcol.__version__
    again = sepcol.experiment("wheel6")
    assert json.dumps(again.report) == json.dumps(r.report)


def test_unknown_experiment():
    with pytest.raises(ValueError):
        sepcol.experiment("nope")
