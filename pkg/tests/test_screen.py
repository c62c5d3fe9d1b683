"""Exponential solutions, log detection, SL2 certification."""

from fractions import Fraction

import pytest

from irred.linops import parse_operator
from irred.screen import (TAG_REDUCIBLE, TAG_SL2, TAG_UNDETERMINED,
                          UnsupportedOperator, certify_sl2,
                          exponential_solutions_restricted, has_log_at)


def l2(mu):
    return parse_operator("D^2 - 4 - %s/x" % (4 * Fraction(mu)), "x")


def test_airy_certified_sl2():
    v = certify_sl2(parse_operator("D^2 - t"))
    assert v.tag == TAG_SL2


def test_d2_is_reducible():
    v = certify_sl2(parse_operator("D^2"))
    assert v.tag == TAG_REDUCIBLE
    assert v.witness is not None


def test_nonzero_trace_undetermined():
    v = certify_sl2(parse_operator("D^2 + D - 1"))
    assert v.tag == TAG_UNDETERMINED


def test_exponential_witness_integer_parameter():
    wits = exponential_solutions_restricted(l2(1))
    assert wits
    for w in wits:
        assert abs(w.lam) == 2


def test_no_exponential_witness_half_integer():
    assert exponential_solutions_restricted(l2(Fraction(1, 2))) == []


def test_witness_degree_law():
    # effective polynomial degree (local exponent at 0 plus factor degree)
    # equals |mu| for integer mu
    for mu in (1, -1, 2, 3):
        wits = exponential_solutions_restricted(l2(mu))
        assert wits
        for w in wits:
            deg = w.poly.degree() + sum(w.rho.values())
            assert deg == abs(mu)


def test_l2_certified_at_non_integer():
    v = certify_sl2(l2(Fraction(1, 2)))
    assert v.tag == TAG_SL2


def test_has_log_forced():
    # solutions 1 and log(t)
    assert has_log_at(parse_operator("t*D^2 + D"), 0)


def test_no_log_euler():
    # solutions t and 1/t
    assert not has_log_at(parse_operator("t^2*D^2 + t*D - 1"), 0)


def test_has_log_rejects_irregular():
    with pytest.raises(ValueError):
        has_log_at(parse_operator("t^4*D^2 + 1"), 0)


def test_unsupported_singularities_are_refused():
    # irrational finite singular points
    v = certify_sl2(parse_operator("D^2 - 1/(t^2 - 2)"))
    assert v.tag == TAG_UNDETERMINED
    assert "unsupported" in (v.reason or "")
