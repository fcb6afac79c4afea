import json
import math

from spinor_forge.report import Check, VerificationReport


def test_upper_and_lower_bounds():
    assert Check("a", "x", 1e-13, 1e-12).passed
    assert not Check("a", "x", 1e-11, 1e-12).passed
    assert Check("b", "x", 0.5, 0.1, bound="lower").passed
    assert not Check("b", "x", 0.05, 0.1, bound="lower").passed


def test_nan_never_passes():
    assert not Check("a", "x", math.nan, 1.0).passed
    assert not Check("a", "x", math.nan, 1.0, bound="lower").passed


def test_report_summary_and_json():
    rep = VerificationReport("demo")
    rep.add("ok", "x = x", 0.0, 1e-12)
    rep.add("bad", "y = z", 1.0, 1e-12)
    rep.note("hello")
    assert not rep.passed and rep.n_passed == 1 and rep.n_failed == 1
    assert rep.get("bad").residual == 1.0
    d = rep.to_dict()
    assert d["summary"] == {"total": 2, "passed": 1, "failed": 1}
    assert json.loads(json.dumps(d)) == d
