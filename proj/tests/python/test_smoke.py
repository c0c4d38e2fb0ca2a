from fractions import Fraction
from itertools import combinations

import pytest

import tindep


def path(n):
    return tindep.Graph(n, [(i, i + 1) for i in range(n - 1)])


def brute_mwis(g, w):
    best = Fraction(0)
    for k in range(g.n + 1):
        for s in combinations(range(g.n), k):
            if all(not g.adjacent(a, b) for a, b in combinations(s, 2)):
                best = max(best, sum((w[v] for v in s), Fraction(0)))
    return best


def test_graph_basics():
    g = tindep.Graph.parse("c path\np 4 3\ne 0 1\ne 1 2\ne 2 3\n")
    assert g == path(4)
    assert (g.n, g.m) == (4, 3)
    assert g.neighbors(1) == [0, 2]
    with pytest.raises(tindep.InputError):
        tindep.Graph(2, [(0, 0)])


def test_detect_theta_in_c6_plus_chord_path():
    # Ends 0 and 3 joined by three induced paths of length 3.
    g = tindep.Graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 7), (7, 3)])
    w = tindep.detect(g, "theta")
    assert w is not None and w["type"] == "theta"
    assert tindep.detect(path(6), "theta") is None
    assert tindep.detect(tindep.Graph(4, [(0, 1), (0, 2), (0, 3)]), "k1t", t=3)["center"] == 0
    assert tindep.in_class(path(5), 3)["member"]


def test_generated_wheel_separation():
    inst = tindep.generate("wheel", hole=12, hub_degree=3, seed=7)
    g = tindep.Graph(inst["n"], [tuple(e) for e in inst["edges"]])
    report = tindep.separate(g, "wheel", inst["witness"])
    assert report["violations"] == []


def test_decompose_and_mwis():
    g = path(9)
    out = tindep.decompose(g)
    td = out["decomposition"]
    assert tindep.validate_decomposition(g, td) is None
    assert tindep.tia_of(g, td) == out["tia"] <= 5 * out["s"]
    assert tindep.exact_tia(path(6)) == 1
    weights = [1, 2, 3, 1, Fraction(5, 2), 0, 4, 1, 1]
    got = tindep.mwis(g, weights, td)
    assert Fraction(got["value"]) == brute_mwis(g, [Fraction(w) for w in weights])
    assert Fraction(tindep.mwis(g, weights)["value"]) == Fraction(got["value"])


def test_campaign_is_deterministic():
    a = tindep.run_campaign("mwis", trials=10, seed=3, threads=1)
    b = tindep.run_campaign("mwis", trials=10, seed=3, threads=2)
    assert a == b
    assert "mwis" in tindep.campaign_names()
    with pytest.raises(tindep.InputError):
        tindep.generate("wheel", colour=3)
