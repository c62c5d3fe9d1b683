"""Certificates: construction, replay, tampering, family verdicts."""

import json

import pytest

from irred.jets import EquationFamily
from irred.linops import parse_operator, sym_power_operator
from irred.poly import Poly, RatFun
from irred.verdict import (Certificate, CertificateError, INCONCLUSIVE,
                           IRREDUCIBLE, criterion_airy_family,
                           lnve_group_dimension, reduced_form_obstruction,
                           replay)


def test_family_shortcut_pole():
    cert = criterion_airy_family(EquationFamily(2, "1/x"))
    assert cert.verdict == IRREDUCIBLE
    recs = cert.find("pole_shortcut")
    assert recs and recs[0]["applies"]


def test_family_full_route():
    cert = criterion_airy_family(EquationFamily(3, "2"))
    assert cert.verdict == IRREDUCIBLE
    assert cert.find("degree_argument")
    assert cert.find("scalar_rational")
    assert cert.find("rational_system")


def test_family_zero_p_inconclusive():
    cert = criterion_airy_family(EquationFamily(3, "y"))
    assert cert.verdict == INCONCLUSIVE


def test_family_solvable_obstruction_inconclusive():
    # plant a rational solution: p = L4(t) = 128 t^2, so P(x,0) = 64 x^2 / 3
    L4 = sym_power_operator(parse_operator("D^2 - t"), 4)
    t = RatFun.gen("t")
    p = L4.apply(t)
    assert p == 128 * t ** 2
    cert = criterion_airy_family(EquationFamily(3, "64*x^2/3"))
    assert cert.verdict == INCONCLUSIVE
    assert cert.find("matrix")  # the reduction gauge is recorded


def test_lnve_group_dimension():
    t = RatFun.gen("t")
    assert lnve_group_dimension(3, RatFun.const(12, "t")) == \
        (8, "sl2 x Sym^(n+1)")
    assert lnve_group_dimension(2, RatFun.zero("t")) == (3, "sl2")
    assert lnve_group_dimension(4, t)[0] == 9


def test_reduced_form_obstruction_gauge():
    from irred.linops import gauge_transform
    t = RatFun.gen("t")
    L4 = sym_power_operator(parse_operator("D^2 - t"), 4)
    p = L4.apply(t)
    Psi, b, space = reduced_form_obstruction(3, p)
    assert space.particular is not None
    assert space.reduction is not None
    # the gauge really removes the coupling entry
    from irred.jets import build_lnve_airy_family
    A = build_lnve_airy_family(3, p)
    B = gauge_transform(space.reduction, A)
    assert not B[5][0]


def test_certificate_roundtrip_and_replay():
    cert = criterion_airy_family(EquationFamily(2, "1/x"))
    text = cert.to_json()
    n = replay(text)
    assert n == len(cert.evidence)


def test_certificate_key_order_stable():
    cert = criterion_airy_family(EquationFamily(2, "1/x"))
    d1 = json.loads(cert.to_json())
    d2 = json.loads(Certificate.from_json(cert.to_json()).to_json())
    assert d1 == d2
    assert list(d1.keys()) == ["input", "evidence", "verdict"]


def test_certificate_tamper_detected():
    cert = criterion_airy_family(EquationFamily(2, "1/x"))
    d = cert.to_dict()
    d = json.loads(json.dumps(d))
    for rec in d["evidence"]:
        if rec["kind"] == "pole_shortcut":
            rec["applies"] = not rec["applies"]
    with pytest.raises(CertificateError):
        replay(d)


def test_certificate_recheck_detects_wrong_claim():
    # consistent hash but a false claim: replay re-runs the check
    cert = criterion_airy_family(EquationFamily(3, "2"))
    d = json.loads(cert.to_json())
    for rec in d["evidence"]:
        if rec["kind"] == "scalar_rational":
            rec.pop("hash")
            rec["solvable"] = True
            from irred.verdict import _record_hash
            rec["hash"] = _record_hash(rec)
    with pytest.raises(CertificateError):
        replay(d)
