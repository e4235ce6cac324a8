import pytest

import twistedhf as thf


def test_twist_knot_report():
    rep = thf.twist_knot(2)
    assert rep["family"] == "twist-knot"
    assert rep["module"]["summands"] == [
        {"type": "free_field", "ring": "Lambda", "rank": 2, "grading": "-3/2"}
    ]
    steps = [s["step"] for s in rep["derivation_log"]]
    assert steps[0] == "build_thin_complex"
    assert steps[-1] == "novikov_base_change"


def test_mirror_grading():
    rep = thf.twist_knot(-2)
    (s,) = rep["module"]["summands"]
    assert s["rank"] == 2
    assert s["grading"] == "3/2"
    assert rep["derivation_log"][-1]["paper_anchor"] == "mirror-duality"


def test_run_family_toml_matches_helper():
    rep = thf.run_family('family = "whitehead"\nn = 3\nd = 1\n')
    assert rep == thf.whitehead(3)
    assert rep["module"]["summands"][0]["rank"] == 3


def test_two_bridge_summands():
    rep = thf.two_bridge(2, 1, 1)
    assert rep["module"]["summands"] == [
        {"type": "free_field", "ring": "Lambda", "rank": 2},
        {"type": "tower"},
    ]


def test_borromean_rank_multiplies():
    rep = thf.borromean(2, -3)
    assert rep["module"]["summands"][0]["rank"] == 6


def test_out_of_scope_raises():
    with pytest.raises(ValueError, match="family-out-of-scope"):
        thf.whitehead(0)
    with pytest.raises(ValueError, match="zero-twist"):
        thf.twist_knot(1, d="0")


def test_snf_with_signature():
    doc = {
        "ring": "Z",
        "rows": 2,
        "cols": 2,
        "entries": [
            {"row": 0, "col": 0, "coeff": "-1"},
            {"row": 0, "col": 1, "coeff": "1"},
            {"row": 1, "col": 0, "coeff": "1"},
        ],
    }
    out = thf.snf(doc)
    assert out["rank"] == 2
    assert out["diagonal"] == ["1", "1"]
    assert out["signature"] == 0


def test_complex_homology_u_torsion():
    doc = {
        "ring": "F2(t)[U]",
        "generators": [{"name": "x", "grading": 0}, {"name": "y", "grading": 1}],
        "entries": [{"row": 1, "col": 0, "coeff": "U"}],
    }
    out = thf.complex_homology(doc)
    assert out["ring"] == "F2(t)[U]"
    assert out["homology"]["summands"] == [
        {"type": "u_torsion", "k": 1, "rank": 1, "grading": "1"}
    ]


def test_non_relatedness():
    assert thf.non_relatedness(2, 3)["obstructed"] is True
    assert thf.non_relatedness(2, -2)["obstructed"] is False
