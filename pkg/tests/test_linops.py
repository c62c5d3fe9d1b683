"""Differential operators, companion systems, cyclic vectors, sym powers."""

from fractions import Fraction

import pytest

from irred.grammar import parse_ratfun
from irred.linops import (DiffOp, adjoint_operator, companion,
                          cyclic_vector_scalarize, gauge_transform,
                          parse_operator, sym_power_matrix,
                          sym_power_operator)
from irred.poly import Poly, RatFun


def test_operator_parse_print_roundtrip():
    for s in ["D^2 - t", "D^5 - 20*t*D^3 - 30*D^2 + 64*t^2*D + 64*t",
              "(1/t)*D + t^2"]:
        L = parse_operator(s)
        assert parse_operator(str(L)) == L


def test_operator_parse_parenthesized_constant():
    # a fully parenthesized order-0 coefficient stays order 0
    L = parse_operator("D^2 + ((-4*x - 4*mu)/(x))", "x", ("mu",))
    assert L.order() == 2
    assert str(L.coeff(0)) == str(parse_ratfun("(-4*x - 4*mu)/x", "x", ("mu",)))


def test_operator_product_leibniz():
    t = RatFun.gen("t")
    D = DiffOp.identity_d("t")
    # D * t = t*D + 1
    L = D * DiffOp([t])
    assert L == DiffOp([RatFun.const(1, "t"), t])


def test_apply_operator():
    L = parse_operator("D^2 - t")
    t = RatFun.gen("t")
    f = t ** 3
    assert L.apply(f) == 6 * t - t ** 4


def test_companion_matrix():
    L = parse_operator("D^2 - t")
    A = companion(L)
    t = RatFun.gen("t")
    assert A[0][1] == RatFun.const(1, "t")
    assert A[1][0] == t
    assert not A[0][0] and not A[1][1]


def test_sym_power_operator_airy():
    L = parse_operator("D^2 - t")
    L4 = sym_power_operator(L, 4)
    assert L4 == parse_operator("D^5 - 20*t*D^3 - 30*D^2 + 64*t^2*D + 64*t")


def test_sym_power_operator_annihilates_products():
    # sym^2(D^2 - t) kills squares of solutions; verify on truncated series
    # via the matrix route instead: sym of companion matches operator
    L = parse_operator("D^2 - t")
    A = companion(L)
    S = sym_power_matrix(A, 2)
    res = cyclic_vector_scalarize(S, retries=10)
    L2 = sym_power_operator(L, 2)
    # both annihilate the same 3-dimensional space: equal up to left factor;
    # here orders agree so they are proportional, hence equal once monic
    assert res.op.monic() == L2.monic()


def test_cyclic_vector_zero_matrix():
    zero = RatFun.zero("t")
    A = [[zero, zero], [zero, zero]]
    res = cyclic_vector_scalarize(A, retries=20)
    assert res.op.order() == 2


def test_cyclic_vector_back_substitution():
    # companion of D^2 - t: scalarize and map solutions back
    L = parse_operator("D^2 - t")
    A = companion(L)
    one = RatFun.const(1, "t")
    zero = RatFun.zero("t")
    res = cyclic_vector_scalarize(A, v=[one, zero])
    assert res.op.monic() == L.monic()


def test_gauge_transform_shape():
    t = RatFun.gen("t")
    one = RatFun.const(1, "t")
    zero = RatFun.zero("t")
    A = [[zero, one], [t, zero]]
    P = [[one, t], [zero, one]]
    B = gauge_transform(P, A)
    assert len(B) == 2 and len(B[0]) == 2


def test_adjoint_involution_simple():
    L = parse_operator("D^3 + t*D + 1")
    assert adjoint_operator(adjoint_operator(L)) == L


def test_diffop_specialize():
    L = parse_operator("D^2 - 4 - 4*mu/x", "x", ("mu",))
    Lm = L.specialize({"mu": Fraction(1, 2)})
    assert Lm == parse_operator("D^2 - 4 - 2/x", "x")
