"""Jet prolongation, restriction, linearization, and the two showcases."""

from fractions import Fraction

import pytest

from irred.jets import (EquationFamily, VectorFieldSpec,
                        build_lnve_airy_family, build_p3_chain, jet_name,
                        linearize, lnve_airy_family_pipeline, normal_restrict,
                        parse_component, prolong, rename_ratfun,
                        restrict_along_curve, vf_decompose)
from irred.grammar import parse_ratfun
from irred.mpoly import MPoly
from irred.poly import Poly, RatFun


def p2_field():
    return VectorFieldSpec(("x", "y", "z"), ["1", "z", "x*y + 2*y^3"],
                           indep="x")


def test_prolong_linear_field():
    # x' = x without an independent coordinate: every jet copies itself
    X = VectorFieldSpec(("x",), ["x"])
    J = prolong(X, 2)
    for l in range(3):
        v = jet_name("x", l)
        assert str(J.rhs[v]) == v


def test_prolong_triangular():
    J = prolong(p2_field(), 3)
    for v in J.vars:
        w = J.jet_order[v]
        rhs = J.rhs[v]
        got = rhs.total_degree([J.jet_order[u] for u in J.vars])
        if got is not None:
            assert got == w


def test_restrict_requires_invariance():
    J = prolong(p2_field(), 1)
    one = RatFun.const(1, "x")
    with pytest.raises(ValueError):
        restrict_along_curve(J, {"y": one, "z": one})


def test_ve1_is_airy_companion():
    J = normal_restrict(restrict_along_curve(prolong(p2_field(), 1),
                                             {"y": "0", "z": "0"}))
    L = linearize(J)
    assert L.labels == ["y^(1)", "z^(1)"]
    A = L.matrix
    x = RatFun.gen("x")
    assert not A[0][0] and A[0][1] == RatFun.const(1, "x")
    assert A[1][0] == x and not A[1][1]


def test_family_matrix_displayed():
    A = build_lnve_airy_family(3, 12)
    t = RatFun.gen("t")
    got = [[str(x) for x in row] for row in A]
    assert got == [
        ["0", "1", "0", "0", "0", "0"],
        ["3*t", "0", "2", "0", "0", "0"],
        ["0", "2*t", "0", "3", "0", "0"],
        ["0", "0", "t", "0", "0", "0"],
        ["0", "0", "0", "0", "0", "1"],
        ["12", "0", "0", "0", "t", "0"],
    ]


@pytest.mark.parametrize("n,P", [(2, "1"), (3, "2"), (4, "x")])
def test_family_matrix_equals_pipeline(n, P):
    fam = EquationFamily(n, P)
    direct = build_lnve_airy_family(n, fam.p())
    L = lnve_airy_family_pipeline(n, P)
    assert len(L.matrix) == n + 3
    for ra, rb in zip(direct, L.matrix):
        for a, b in zip(ra, rb):
            assert a == RatFun(rename_ratfun(b, "t").num,
                               rename_ratfun(b, "t").den)


def test_family_p_value():
    fam = EquationFamily(3, "2")
    assert fam.p() == RatFun.const(12, "t")
    fam2 = EquationFamily(2, "1/x + y")
    t = RatFun.gen("t")
    assert fam2.p() == 2 / t


def test_family_rejects_pole_along_y0():
    with pytest.raises(ValueError):
        EquationFamily(2, "1/y")


def _bivar(expr):
    return parse_component(expr, ("x", "y"), "t")


def test_vf_decompose_euler_multiple():
    G, K = vf_decompose(_bivar("x^2"), _bivar("x*y"))
    assert G == _bivar("x")
    assert K.is_zero()


def test_vf_decompose_hamiltonian_recovered():
    n = 3
    K0 = _bivar("x^%d" % (n + 1))
    A = K0.diff("y")
    B = -K0.diff("x")
    # zero A needs the same degree as B: use total field instead
    G, K = vf_decompose(_bivar("0*x^%d" % n) + A, B)
    assert G.is_zero()
    assert K == K0


def test_vf_decompose_rejects_mixed_degrees():
    with pytest.raises(ValueError):
        vf_decompose(_bivar("x^2"), _bivar("y"))


def test_p3_chain_first_level():
    ch = build_p3_chain(None)
    A1 = [[str(x) for x in row] for row in ch.A1]
    assert A1 == [["(-2*x - 2*mu)/(x)", "4/(x)"],
                  ["(-mu*x - mu^2)/(x)", "(2*x + 2*mu)/(x)"]]
    expect = [["0", "1/mu + 1/x"], ["4*mu", "0"]]
    for ra, rb in zip(ch.At1, expect):
        for a, b in zip(ra, rb):
            assert a == parse_ratfun(b, "x", ("mu",))
    Q1 = [[str(x) for x in row] for row in ch.Q1]
    assert Q1 == [["-2*mu", "1"], ["-mu^2", "0"]]


def test_p3_chain_rejects_mu_zero():
    with pytest.raises(ValueError):
        build_p3_chain(0)


def test_p3_chain_specialized():
    ch = build_p3_chain(Fraction(1, 2))
    At1 = [[str(x) for x in row] for row in ch.At1]
    assert At1 == [["0", "(2*x + 1)/(x)"], ["2", "0"]]
