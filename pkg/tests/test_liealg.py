"""Constant-matrix Lie algebra machinery and the block generators."""

from fractions import Fraction

import pytest

from irred.liealg import (adjoint_action_matrix, associated_lie_algebra,
                          block_e_matrices, block_f_matrices, block_xyh,
                          classify_lnve_lie_algebra, lie_closure,
                          sl2_triplet_check)
from irred.linear import mat_bracket, mat_transpose
from irred.linops import sym_power_matrix
from irred.poly import Poly, RatFun


def _scaled(M, c):
    return [[c * x for x in row] for row in M]


def _add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def test_block_xyh_is_sl2():
    for n in (2, 3, 4):
        X, Y, H = block_xyh(n)
        assert sl2_triplet_check(X, Y, H)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_block_e_bracket_table(n):
    X, Y, H = block_xyh(n)
    E = block_e_matrices(n)
    zero = _scaled(E[0], 0)
    for i in range(n + 2):
        up = E[i + 1] if i + 1 <= n + 1 else zero
        down = E[i - 1] if i - 1 >= 0 else zero
        assert mat_bracket(X, E[i]) == _scaled(up, i + 1)
        assert mat_bracket(Y, E[i]) == _scaled(down, n + 2 - i)
        assert mat_bracket(H, E[i]) == _scaled(E[i], 2 * i - n - 1)
        for j in range(n + 2):
            assert mat_bracket(E[i], E[j]) == zero


def test_lie_closure_pnve3_generators():
    # X perturbed by the lowest-weight ideal element still generates
    # everything: bracketing down kills E_0, so [X+E_0, Y] = H exactly
    X, Y, H = block_xyh(3)
    E = block_e_matrices(3)
    M1 = _add(X, E[0])
    assert mat_bracket(M1, Y) == H
    alg = lie_closure([M1, Y])
    assert alg.dimension == 8


def test_lie_closure_sl2():
    X, Y, H = block_xyh(2)
    alg = lie_closure([X, Y])
    assert alg.dimension == 3
    assert classify_lnve_lie_algebra(alg, 2) == "sl2"


def test_classify_full():
    X, Y, H = block_xyh(3)
    gens = [X, Y] + block_e_matrices(3)
    alg = lie_closure(gens)
    assert alg.dimension == 8
    assert classify_lnve_lie_algebra(alg, 3) == "sl2 x Sym^(n+1)"


def test_associated_lie_algebra_airy():
    t = RatFun.gen("t")
    one = RatFun.const(1, "t")
    zero = RatFun.zero("t")
    A = [[zero, one], [t, zero]]
    coeffs, mats = associated_lie_algebra(A)
    assert len(mats) == 2
    alg = lie_closure(mats)
    assert alg.dimension == 3


def test_adjoint_action_on_f_basis():
    # [X + tY, .] on the F basis is the negated transpose of sym^(n+1)(A1)
    for n in (2, 3):
        X, Y, _ = block_xyh(n)
        t = RatFun.gen("t")
        one = RatFun.const(1, "t")
        diag = [[x * one + t * (y * one) for x, y in zip(rx, ry)]
                for rx, ry in zip(X, Y)]
        Psi = adjoint_action_matrix(diag, block_f_matrices(n))
        zero = RatFun.zero("t")
        A1 = [[zero, one], [t, zero]]
        S = sym_power_matrix(A1, n + 1)
        expect = [[-x for x in row] for row in mat_transpose(S)]
        assert Psi == expect
