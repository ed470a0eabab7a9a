import pytest

import strata


def test_mv_and_resultant():
    assert strata.multiplicity_vector("1,0,-2,0,1") == [2, 2]
    assert strata.multiplicity_vector("1,0,1") == []
    assert strata.resultant("1,-1", "1,1") == "2"
    assert strata.resultant("1,0,1", "1,-2,1") == "4"


def test_errors_are_value_errors():
    with pytest.raises(strata.StrataError):
        strata.multiplicity_vector("2,1")
    with pytest.raises(ValueError):
        strata.validate_mv([1, 2], 4)


def test_poset():
    assert strata.stratum_count(4) == 11
    assert len(strata.enumerate_mvs(4)) == 11
    assert len(strata.poset(4)["nodes"]) == 11
    assert strata.in_closure([4], [2, 2], 4)
    assert not strata.in_closure([2, 2], [4], 4)
    assert strata.poset_dot(3).startswith("digraph")


def test_coefficients():
    assert strata.vieta_coeffs([(-1.0, 1), (1.0, 2)]) == pytest.approx([-1, -1, 1])
    assert strata.power_sums([], [(0.0, 1.0)], 4) == pytest.approx([0, -2, 0, 2])


def test_geometry_round_trip():
    p = strata.sample([2, 1], 3, seed=4)
    assert p["mv"] == [2, 1]
    (u, _), (v, _) = [(r["y"], r["mult"]) for r in p["real_roots"]]
    # b3 over (b1, b2) on [2,1]: db3/db1 = -3uv
    assert strata.graph_partial(p, 3, 1) == pytest.approx(-3 * u * v, rel=1e-9)
    frame = strata.tangent_frame(p)
    assert frame["margin"] > 1e-8
    report = strata.check_point(p)
    assert report["pass"]


def test_lemma_and_swallowtail():
    rep = strata.verify_lemma("leftright", [2, 2], 4, seed=1)
    assert rep["verdict"] == "PASS"
    bad = strata.verify_lemma("leftright", [2, 2], 4, seed=1, root_order="increasing")
    assert bad["verdict"] == "FAIL"
    mesh = strata.swallowtail(5)
    assert all(pt["res_zero"] for pt in mesh["points"])
