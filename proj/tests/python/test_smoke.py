# SPDX-License-Identifier: Apache-2.0
import math

import pytest

import qcordic


def test_encode_decode_roundtrip():
    n = 10
    raw = qcordic.encode(0.5, n)
    assert qcordic.decode(raw, n) == 0.5
    assert qcordic.ulp(n) == 2.0 ** -(n - 2)
    # round-nearest with wrap rejection at the domain edge
    with pytest.raises(Exception):
        qcordic.encode(2.5, n)


def test_arcsin_fixed_accuracy():
    r = qcordic.arcsin_fixed(0.5, 16)
    assert abs(r["theta"] - math.asin(0.5)) <= 2.0 ** -11
    assert r["abs_err"] == abs(r["theta"] - r["ref"])
    assert 0 < r["additions"] < 14 * 16


def test_arcsin_domain_error():
    with pytest.raises(Exception):
        qcordic.arcsin_fixed(3.0, 8)


def test_direction_bits_reconstruct_angle():
    n = 12
    bits = qcordic.direction_bits(0.5, n)
    assert len(bits) == n - 1
    angle = sum(
        (-1 if b else 1) * 2.0 * math.atan(2.0**-i)
        for i, b in enumerate(bits, start=1)
    )
    assert abs(angle - math.asin(0.5)) <= 2.0 ** -(n - 5)


def test_negate_modes_agree():
    a = qcordic.arcsin_fixed(-0.25, 12, negate="not")
    b = qcordic.arcsin_fixed(-0.25, 12, negate="neg")
    assert a["theta_raw"] == b["theta_raw"]


def test_amplitude_encode_probability():
    n = 12
    for h in (0.0, 0.25, 0.5, 1.0):
        a0, a1 = qcordic.amplitude_encode(h, n)
        assert abs(a1 * a1 - h) <= 2.0 ** -(n - 6)
        assert abs(a0 * a0 + a1 * a1 - 1.0) <= 1e-12


def test_trace_budget_and_footprint():
    r = qcordic.trace_report(16)
    assert r["within_budget"]
    assert r["additions"] < r["budget_14n"]
    assert r["bits_total"] == r["bits_expected"] == 5 * 16 - 1


def test_xcheck_fidelity():
    assert qcordic.xcheck_fidelity(4) >= 1.0 - 1e-12
