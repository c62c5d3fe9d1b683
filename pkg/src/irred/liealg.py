"""Lie algebra computations on constant matrices.

Constant means: entries in the coefficient field (FieldElem), no
dependence on the main variable.  The Lie algebra associated to a
system matrix A(x) is generated by the constant matrices of its minimal
decomposition A = sum a_i(x) M_i.
"""

from __future__ import annotations

import warnings
from fractions import Fraction

from .field import FieldElem
from .linear import (in_span, mat_bracket, mat_shape, rref, solve)
from .poly import Poly, RatFun


def const_matrix(M):
    """Coerce a RatFun (or mixed) matrix to FieldElem entries."""
    out = []
    for row in M:
        r = []
        for x in row:
            if isinstance(x, RatFun):
                if not x.is_constant():
                    raise ValueError("matrix entry %s is not constant" % x)
                x = x.constant_value()
            elif isinstance(x, (int, Fraction)):
                x = FieldElem.from_fraction(x, ())
            r.append(x)
        out.append(r)
    return out


def bracket(M, N):
    if mat_shape(M) != mat_shape(N):
        raise ValueError("bracket of mismatched sizes")
    return mat_bracket(M, N)


def _flat(M):
    return [x for row in M for x in row]


def _one_of(M):
    x = M[0][0]
    return x - x + 1


class LieAlgebraBasis:
    """Bracket-closed span of constant matrices with structure constants."""

    def __init__(self, basis, structure):
        self.basis = basis
        self.structure = structure  # (i,j) -> coefficient list

    @property
    def dimension(self):
        return len(self.basis)

    def coordinates(self, M):
        """Coordinates of M in the basis, or None."""
        one = _one_of(self.basis[0]) if self.basis else None
        if not self.basis:
            return None
        cols = [_flat(B) for B in self.basis]
        m = [[cols[j][c] for j in range(len(cols))]
             for c in range(len(cols[0]))]
        return solve(m, _flat(M), one)

    def contains(self, M):
        return self.coordinates(M) is not None

    def __repr__(self):
        return "LieAlgebraBasis(dim=%d)" % self.dimension


def lie_closure(gens) -> LieAlgebraBasis:
    """Smallest bracket-closed linear span containing the generators."""
    gens = [list(map(list, G)) for G in gens]
    if not gens:
        raise ValueError("need at least one generator")
    one = _one_of(gens[0])
    basis = []
    vecs = []

    def insert(M):
        v = _flat(M)
        if not any(v):
            return False
        if in_span(vecs, v, one):
            return False
        vecs.append(v)
        basis.append(M)
        return True

    for G in gens:
        insert(G)
    i = 0
    while i < len(basis):
        j = 0
        while j <= i:
            insert(mat_bracket(basis[i], basis[j]))
            j += 1
        i += 1

    alg = LieAlgebraBasis(basis, {})
    for i in range(len(basis)):
        for j in range(len(basis)):
            c = alg.coordinates(mat_bracket(basis[i], basis[j]))
            if c is None:
                raise RuntimeError("closure not closed (internal error)")
            alg.structure[(i, j)] = c
    return alg


def associated_lie_algebra(A):
    """Minimal decomposition A = sum a_i(x) M_i of a rational matrix.

    Returns (coeffs, mats): a_i as RatFun and M_i as constant matrices,
    with s minimal and the a_i forming a reduced-echelon basis of the
    span of the entries of A.
    """
    n = len(A)
    m = len(A[0])
    var = A[0][0].var
    params = A[0][0].params
    # common denominator
    den = Poly.const(1, var, params)
    for row in A:
        for x in row:
            g = den.gcd(x.den)
            den = den * (x.den // g)
    nums = [[(x * RatFun(den)).as_poly() for x in row] for row in A]
    deg = 0
    for row in nums:
        for p in row:
            if not p.is_zero():
                deg = max(deg, p.degree())
    # entry coefficient vectors over the monomial basis 1, x, ..., x^deg
    vecs = []
    for row in nums:
        for p in row:
            vecs.append([p.coeff(k) for k in range(deg + 1)])
    R, pivots = rref(vecs)
    s = len(pivots)
    coeffs = []
    for i in range(s):
        num = Poly([R[i][k] for k in range(deg + 1)], var, params)
        coeffs.append(RatFun(num, den))
    zero = FieldElem.from_fraction(0, params)
    mats = [[[zero] * m for _ in range(n)] for _ in range(s)]
    for r in range(n):
        for c in range(m):
            v = vecs[r * m + c]
            for i, p in enumerate(pivots):
                mats[i][r][c] = v[p]
    # sanity: decomposition reproduces A
    for r in range(n):
        for c in range(m):
            acc = RatFun.zero(var, params)
            for i in range(s):
                acc = acc + coeffs[i] * mats[i][r][c]
            if not (acc == A[r][c]):
                raise RuntimeError("decomposition failed to reproduce matrix")
    return coeffs, mats


def sl2_triplet_check(X, Y, H) -> bool:
    """[X,Y]=H, [H,X]=2X, [H,Y]=-2Y."""
    if not any(_flat(X)) and not any(_flat(Y)) and not any(_flat(H)):
        warnings.warn("abelian")
        return True

    def scaled(M, c):
        return [[c * x for x in row] for row in M]

    return (mat_bracket(X, Y) == [list(r) for r in H]
            and mat_bracket(H, X) == scaled(X, 2)
            and mat_bracket(H, Y) == scaled(Y, -2))


def adjoint_action_matrix(diag, offbasis):
    """Matrix Psi of [diag, .] on span(offbasis): [diag, F_j] = sum Psi_ij F_i.

    diag may have rational-function entries; the basis is constant.
    """
    k = len(offbasis)
    cols = [_flat(B) for B in offbasis]
    sample = diag[0][0]
    one = sample - sample + 1
    m = [[cols[j][c] * one for j in range(k)] for c in range(len(cols[0]))]
    Psi = [[None] * k for _ in range(k)]
    for j, F in enumerate(offbasis):
        br = mat_bracket(diag, [[x * one for x in row] for row in F])
        sol = solve(m, _flat(br), one)
        if sol is None:
            raise ValueError("not an invariant subspace")
        for i in range(k):
            Psi[i][j] = sol[i]
    return Psi


def classify_lnve_lie_algebra(basis: LieAlgebraBasis, n: int) -> str:
    d = basis.dimension
    if d == 3:
        return "sl2"
    if d == n + 3:
        return "sl2 x Sym^(n-1)"
    if d == n + 5:
        return "sl2 x Sym^(n+1)"
    if d == 2 * n + 5:
        return "sl2 x (Sym^(n-1) + Sym^(n+1))"
    raise ValueError("unexpected structure (dimension %d)" % d)


# ---------------------------------------------------------------------------
# standard generators of the block system Lie algebra (size (n+3) x (n+3))

def _sym_nilpotent(n, upper, params=()):
    """sym^n of [[0,1],[0,0]] (upper) or [[0,0],[1,0]] (lower)."""
    zero = FieldElem.from_fraction(0, params)
    S = [[zero] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        if upper and k + 1 <= n:
            S[k][k + 1] = FieldElem.from_fraction(k + 1, params)
        if not upper and k - 1 >= 0:
            S[k][k - 1] = FieldElem.from_fraction(n - k + 1, params)
    return S


def block_xyh(n, params=()):
    """The sl2 triplet X, Y, H acting on Sym^n + standard blocks."""
    zero = FieldElem.from_fraction(0, params)
    m = n + 3

    def embed(top, bot):
        M = [[zero] * m for _ in range(m)]
        for i in range(n + 1):
            for j in range(n + 1):
                M[i][j] = top[i][j]
        for i in range(2):
            for j in range(2):
                M[n + 1 + i][n + 1 + j] = bot[i][j]
        return M

    one = FieldElem.from_fraction(1, params)
    up = [[zero, one], [zero, zero]]
    lo = [[zero, zero], [one, zero]]
    X = embed(_sym_nilpotent(n, True, params), up)
    Y = embed(_sym_nilpotent(n, False, params), lo)
    H = mat_bracket(X, Y)
    return X, Y, H


def block_e_matrices(n, params=()):
    """Off-diagonal ideal basis E_0..E_{n+1}: bottom-left 2 x (n+1) blocks.

    Normalized so that [X,E_i]=(i+1)E_{i+1}, [Y,E_i]=(n+2-i)E_{i-1},
    [H,E_i]=(2i-n-1)E_i with the block_xyh triplet: the nonzero entries
    are +-1 with alternating signs.
    """
    zero = FieldElem.from_fraction(0, params)
    m = n + 3
    out = []
    for i in range(n + 2):
        M = [[zero] * m for _ in range(m)]
        if i >= 1:
            M[n + 1][i - 1] = FieldElem.from_fraction((-1) ** (i + 1), params)
        if i <= n:
            M[n + 2][i] = FieldElem.from_fraction((-1) ** i, params)
        out.append(M)
    return out


def block_f_matrices(n, params=()):
    """Alternating-sign variant F_i = (-1)^i E_i of the ideal basis.

    On this basis the adjoint action of the block system matrix
    X + t Y is sym^(n+1)(A_1) with every entry negated and transposed
    (the dual of the symmetric power system).
    """
    out = []
    for i, E in enumerate(block_e_matrices(n, params)):
        s = (-1) ** i
        out.append([[s * x for x in row] for row in E])
    return out
