import pytest

import unfold


def test_golden_pattern():
    rec = unfold.analyze("(1,2,5,7,10,3,6,8,9,4,11)")
    assert rec["orp"] == {"l": 3, "q": 11}
    assert rec["up"] == {"p": 5, "q": 11}
    assert rec["u_f"] == {"exact": "1/3"}
    assert rec["modality"] == 3
    assert rec["index_set"] == [0, 4, 6, 8, 10]


def test_pairs_and_classification():
    P = unfold.Pattern("(1,3,4,2)")
    assert unfold.unfolding_pair(P) == (1, 4)
    assert unfold.is_divergent(P)
    assert not unfold.is_sheer(P)
    assert unfold.modality(P) == 2
    three = unfold.Pattern("(1,2,3)")
    assert unfold.unfolding_pair_via_heave(three) == (1, 3)
    assert unfold.unfolding_pair(three) == (1, 3)
    assert unfold.over_rotation_pair(three) == (1, 3)


def test_interval_and_realization():
    iv = unfold.unfolding_interval(unfold.Pattern("(1,2,3)"))
    assert iv["lower"] == {"exact": True, "value": "1/3", "lo": "1/3", "hi": "1/3"}
    assert iv["upper_is_half"]
    r = unfold.realize_minimal(unfold.Pattern("(1,2)"), 4)
    assert r["found"] and r["period"] == 1
    assert r["points"] == ["1/2"]
    assert r["pair"] == (1, 2)
    r = unfold.realize_minimal(unfold.Pattern("(1,3,4,2)"))
    assert r["degenerate"] and not r["found"]


def test_spectrum_and_divergent_witness():
    rows = unfold.forced_spectrum(unfold.Pattern("(1,2,3)"), 4)
    assert {row["period"] for row in rows} == {1, 2, 3, 4}
    w = unfold.divergent_realization(unfold.Pattern("(1,3,4,2)"), 1, 6)
    assert w["pair"] == (1, 6)
    assert len(w["points"]) == 6


def test_sharkovsky_and_svg():
    assert unfold.sharkovsky_ge(3, 5)
    assert unfold.sharkovsky_ge(0, 4)  # 2^inf forces the powers of two
    assert not unfold.sharkovsky_ge(4, 0)
    svg = unfold.render_svg(unfold.Pattern("(1,2,3)"), "Fl")
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")


def test_invalid_input():
    with pytest.raises(ValueError):
        unfold.analyze("(1,1,2)")
    with pytest.raises(ValueError):
        unfold.Pattern("(1,1,2)")
    with pytest.raises(ValueError):
        unfold.verify_suite("nosuch")


def test_verify_suite():
    r = unfold.verify_suite("routes", max_period=5)
    assert r["passed"]
    assert r["cases"] == 33
