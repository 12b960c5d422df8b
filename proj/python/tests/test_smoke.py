import json
import os
from fractions import Fraction

import pytest

import daha


def test_root_datum_a1():
    d = daha.root_datum("A1")
    assert d["h_dual"] == 2
    assert d["cartan_matrix"] == [[2]]


def test_weyl_ball_sizes():
    # affine A2 has 3k elements of length k >= 1
    assert len(daha.weyl_ball("A2", 6)) == 1 + 3 * sum(range(1, 7))
    assert daha.weyl_ball("A1", 0)[0]["word"] == []


def test_generators_are_compliant_and_bare_reflection_is_not():
    for i in range(3):
        assert daha.check_membership(daha.tau("A2", i))["compliant"]
    with open(os.path.join(daha.fixture_dir(), "bare_reflection.json")) as fh:
        fixture = json.load(fh)
    report = daha.check_membership(fixture["element"], fixture["config"])
    assert not report["compliant"]
    assert {v["kind"] for v in report["violations"]} == {"missing-vanishing"}


def test_products_stay_compliant():
    x = daha.multiply(daha.tau_word("A2", [1, 2]), daha.tau("A2", 0))
    assert daha.check_membership(x)["compliant"]
    assert daha.check_membership(daha.add(x, daha.tau("A2", 1)))["compliant"]


def test_rho_shift_sends_tau_to_hecke_side():
    image = daha.rho_shift(daha.tau("A1", 1))
    assert image["mode"] == "star"
    assert daha.hecke_check(image)["compliant"]


def test_relations_hold():
    assert all(ok for _, ok in daha.verify_relations("A2", "bernstein"))
    assert all(ok for _, ok in daha.verify_relations("A2", "hecke"))


def test_rank1_oracle_matches_closed_form():
    oracle, closed = daha.rank1_oracle(q=3, depth=4, s=2)
    assert oracle == closed
    # 1 + (1 - 1/q) sum_{k<=N} (q^{1-s})^k
    assert closed == 1 + (1 - Fraction(1, 3)) * sum(Fraction(1, 3) ** k for k in range(1, 5))


def test_mellin_and_cone_round_trips():
    fn = {
        "schema": "daha.torsor-function/1",
        "torsor": {"base": ["a", "b"], "lattice_dim": 2, "base_points": [[0, 0], [1, -1]]},
        "values": [[0, [1, 2], [0, 1]], [1, [-1, 0], ["2/3"]]],
    }
    assert daha.mellin_inverse(daha.mellin_transform(fn)) == fn
    f = {"dim": 3, "num": [[[0, 0, 0], [1]], [[0, 1, 1], [3]]], "den": [[[0, 0, 1], [0, 1, 0], 2]]}
    series = daha.cone_expand(f, "A2", [1, 2], order=6)
    assert daha.cone_sum(series) == f


def test_errors_are_typed():
    with pytest.raises(daha.ConfigurationError):
        daha.root_datum("E9")
    with pytest.raises(daha.CapacityError):
        daha.rank1_oracle(q=10, depth=40)
    with pytest.raises(daha.ParseError):
        daha.multiply("{not json", "{}")


def test_suite_is_deterministic():
    a = daha.run_suite(seed=5, criteria=[6, 8])
    assert a["passed"] and a["seed"] == 5
    assert [c["criterion"] for c in a["checks"]] == [6, 8]
    assert daha.run_suite(seed=5, criteria=[6, 8]) == a
