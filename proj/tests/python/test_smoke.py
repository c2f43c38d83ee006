from fractions import Fraction

import pytest

einz = pytest.importorskip("einz")


def test_distribution_is_normalized_and_exact():
    dist = einz.outcome_distribution(decks=1, policy="stand17")
    assert sum(dist.values()) == 1
    assert dist[("einz", 0, 2)] == Fraction(44, 2652)
    bust = sum(p for (kind, _, _), p in dist.items() if kind == "bust")
    assert bust == Fraction(2664503992, 9657572925)


def test_table_json():
    t3 = einz.table(3)
    assert t3["table"] == 3
    for column in range(len(t3["columns"])):
        total = sum(row["cells"][column] for row in t3["rows"])
        assert total == pytest.approx(1.0, abs=0.002)
    assert einz.table(1, format="csv").startswith("cards / score,17")


def test_match_and_dealer():
    r = einz.match(["stand17", "stand18"])
    total = sum(Fraction(w["exact"]) for w in r["win"]) + Fraction(r["tie"]["exact"])
    assert total == 1
    v1 = einz.dealer("stand17", "stand17", "v1")
    assert v1["win"][0]["exact"] == v1["win"][1]["exact"]


def test_change14_hybrid_arithmetic():
    r = einz.change14([10, 4], arithmetic="fixed-denominator")
    assert Fraction(r["continue"]["exact"]) == Fraction(1558, 2500)
    with pytest.raises(einz.StateError):
        einz.change14([10, 5])


def test_evaluate_situation():
    r = einz.evaluate({
        "decks": 8,
        "mode": "open",
        "hand": [10, 6],
        "opponents": [{"cards_taken": 2, "has_stood": False, "policy": "stand17"}],
    })
    assert r["recommendation"] == "hit"
    with pytest.raises(einz.StateError):
        einz.evaluate({"decks": 1, "hand": [11, 11]})
    with pytest.raises(einz.InputError):
        einz.evaluate("{not json")


def test_simulation_is_reproducible():
    config = {"rounds": 2000, "seed": 42, "policies": ["stand17", "stand17"]}
    assert einz.simulate(config) == einz.simulate(config)
