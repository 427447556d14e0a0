import math

import pytest

import hepm


def test_closed_forms():
    assert hepm.focal_distance(0.6) == pytest.approx(math.atanh(0.36 / 1.64), abs=1e-15)
    assert hepm.area_diff_D_minus_E(0.6) == pytest.approx(1.5 * (1 - math.log(2)), abs=1e-12)
    assert hepm.circumference_diff_via_polar(0.6) == pytest.approx(hepm.G(0.6), abs=1e-12)
    root, bound, _ = hepm.alpha_root()
    assert abs(root - 0.801986) < 5e-6
    assert bound < 1e-9


def test_oracle_agrees():
    q = hepm.quad_area("B", 0.6, 0.5)
    assert q["converged"]
    assert q["value"] == pytest.approx(hepm.area_band_segment(0.6, 0.5), rel=1e-8)
    L = hepm.quad_len_parabola_boundary(0.6, 0.5)
    assert L["value"] == pytest.approx(hepm.len_parabola_segment_boundary(0.6, 0.5), rel=1e-8)


def test_errors():
    with pytest.raises(hepm.DomainError):
        hepm.G(1.5)
    with pytest.raises(hepm.ConfigError):
        hepm.table([0.5], [])
    with pytest.raises(ValueError):
        hepm.quad_area("nope", 0.5, 0.5)


def test_outputs():
    csv = hepm.table([0.2, 0.4], ["G"])
    assert csv.splitlines()[0] == "C,G"
    assert hepm.figure() == hepm.figure()
    assert "<svg" in hepm.figure("dual")


def test_verify():
    records = hepm.verify(filter="projective")
    assert [r["id"] for r in records] == ["AC01", "INV-projective-conics"]
    assert all(r["pass"] for r in records)
