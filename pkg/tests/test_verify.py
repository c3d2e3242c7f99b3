import pytest

from treepack.graph import InputError
from treepack.verify import (
    CONFIRMED,
    EXPLORATORY,
    IN_HYPOTHESIS,
    VIOLATED,
    WITHIN_BOUNDS,
    shape_embeds,
    try_exact_f,
    verify_characterization,
    verify_theorems,
)


def by_claim(checks, claim_id, **params):
    out = []
    for c in checks:
        if c.claim_id == claim_id and all(c.params.get(k) == v
                                          for k, v in params.items()):
            out.append(c)
    return out


def test_try_exact_f():
    rec = try_exact_f(7, 3, 0)
    assert rec.f_value == 6
    rec = try_exact_f(10, 3, 7)
    assert rec.f_value == 45
    assert try_exact_f(11, 3, 4) is None  # out of desk-scale reach


def test_near_n_claims_at_seven():
    checks = verify_theorems([7], theorems=("T1.2",))
    c = by_claim(checks, "T1.2-2", l=1)[0]
    assert c.computed == "21" and c.verdict == CONFIRMED
    assert c.band == EXPLORATORY  # stated threshold starts higher
    c = by_claim(checks, "T1.2-1")[0]
    assert c.verdict == CONFIRMED and c.computed == "6"


def test_k3_claims_at_ten():
    checks = verify_theorems([10], theorems=("T1.3",))
    c8 = by_claim(checks, "T1.3-8")[0]
    assert c8.verdict == CONFIRMED and c8.computed == "43"
    assert c8.band == IN_HYPOTHESIS
    c9 = by_claim(checks, "T1.3-9")[0]
    assert c9.verdict == CONFIRMED and c9.computed == "45"
    # the published n-5 value contradicts its own family characterization;
    # the checker reports the computed truth
    c7 = by_claim(checks, "T1.3-7")[0]
    assert c7.band == IN_HYPOTHESIS
    assert c7.claimed == "42" and c7.computed == "37"
    assert c7.verdict == VIOLATED
    c1 = by_claim(checks, "T1.3-1")[0]
    assert c1.verdict == CONFIRMED and c1.computed == "9"
    c2 = by_claim(checks, "T1.3-2")[0]
    assert c2.verdict == CONFIRMED and c2.computed == "15"
    c3 = by_claim(checks, "T1.3-3")[0]
    assert c3.verdict == WITHIN_BOUNDS  # n = 2p case, bracket [20, 21]


def test_general_k_bound_claims():
    checks = verify_theorems([9], k_values=[3], theorems=("T1.1",))
    for c in by_claim(checks, "T1.1-5"):
        assert c.verdict == WITHIN_BOUNDS, c.to_line()
    for c in by_claim(checks, "T1.1-6"):
        assert c.verdict in (WITHIN_BOUNDS, CONFIRMED), c.to_line()
    c4 = by_claim(checks, "T1.1-4")[0]
    assert c4.verdict == CONFIRMED and c4.computed == "14"
    c3 = by_claim(checks, "T1.1-3")[0]
    assert c3.verdict == CONFIRMED and c3.computed == "8"


def test_whole_set_characterization():
    c = verify_characterization("L3.1", 5)
    assert c.verdict == CONFIRMED and "1024" in c.computed
    with pytest.raises(InputError):
        verify_characterization("L3.1", 7)


def test_all_but_one_characterization():
    c = verify_characterization("L3.2", 6)
    assert c.verdict == CONFIRMED


def test_all_but_two_characterization_reports_matching_gap():
    # the value-1 class actually contains every nonempty complement
    # matching, so the stated size cap is honestly reported as violated
    c = verify_characterization("L3.3", 7)
    assert c.verdict == VIOLATED
    assert "3K2: tau=1 want 0" in c.computed
    assert "size >= 3" in c.note


def test_complete_characterization():
    c = verify_characterization("L2.5", 6)
    assert c.verdict == CONFIRMED


def test_near_complete_characterization_reports_boundary_k():
    c = verify_characterization("L2.6", 7)
    assert c.verdict == VIOLATED
    assert "k=5" in c.computed  # the k = n-2 boundary
    assert "k <= n-3" in c.note  # and only there


def test_all_but_three_both_readings():
    c = verify_characterization("P3.1", 9)
    assert c.verdict == CONFIRMED
    assert "literal reading" in c.note and "fails" in c.note


def test_unknown_characterization():
    with pytest.raises(InputError):
        verify_characterization("L9.9", 8)


def test_shape_embeds():
    fam_c3_matching = [("C", 3), ("P", 2), ("P", 2), ("P", 2)]
    assert shape_embeds([("C", 3)], fam_c3_matching)
    assert shape_embeds([("P", 2), ("P", 2)], [("P", 5)])
    assert shape_embeds([("P", 3)], [("C", 4)])
    assert not shape_embeds([("C", 4)], fam_c3_matching)
    assert not shape_embeds([("C", 3)], [("C", 4)])
    assert not shape_embeds([("P", 2)] * 3, [("P", 5)])
    assert shape_embeds([("P", 2)] * 2 + [("C", 3)], fam_c3_matching)


def test_family_characterization_double_inclusion():
    c = verify_characterization("L3.6", 10)
    assert c.verdict == CONFIRMED, c.to_line()


def test_check_line_formats():
    checks = verify_theorems([7], theorems=("T1.2",))
    line = checks[0].to_line()
    assert "claimed=" in line and "verdict=" in line
    import json

    payload = json.loads(checks[0].to_json_line())
    assert payload["claim"].startswith("T1.2")
