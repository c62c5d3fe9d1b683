"""Matrices of rational functions and scalar differential operators.

Matrices are plain nested lists of RatFun (see linear.py for the generic
elimination routines).  DiffOp is Sum c_i D^i with D = d/dvar acting on
the left; composition uses the Leibniz rule D o c = c D + c'.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .field import FieldElem
from .grammar import ParseError, _Parser, tokenize
from .linear import (inverse, mat_mul, mat_shape, mat_sub, rank, solve)
from .poly import Poly, RatFun, ratfun


def _zero_one_of(entry: RatFun):
    z = RatFun.zero(entry.var, entry.params)
    return z, RatFun.const(1, entry.var, entry.params)


def mat_derivative(a):
    return [[x.derivative() for x in row] for row in a]


def gauge_transform(P, A):
    """P[A] = P A P^{-1} - P' P^{-1}; the system matrix after Y = P Z."""
    zero, one = _zero_one_of(P[0][0])
    try:
        Pinv = inverse(P, one)
    except ValueError:
        raise ValueError("not a gauge transformation")
    return mat_sub(mat_mul(mat_mul(P, A), Pinv),
                   mat_mul(mat_derivative(P), Pinv))


def sym_power_matrix(A, m: int):
    """Induced system matrix on the basis u_k = C(m,k) y^(m-k) z^k.

    If (y,z)' = A (y,z) then the vector of u_k solves U' = M U.
    """
    if mat_shape(A) != (2, 2):
        raise ValueError("sym_power_matrix expects a 2x2 matrix")
    zero, one = _zero_one_of(A[0][0])
    if m == 0:
        return [[zero]]
    (a, b), (c, d) = A
    M = [[zero for _ in range(m + 1)] for _ in range(m + 1)]
    for k in range(m + 1):
        M[k][k] = (m - k) * a + k * d
        if k + 1 <= m:
            M[k][k + 1] = (k + 1) * b
        if k - 1 >= 0:
            M[k][k - 1] = (m - k + 1) * c
    return M


def sym_power_rep(Q, m: int):
    """Induced change of basis on u_k = C(m,k) y^(m-k) z^k for (y,z) = Q(u,v).

    This is the multiplicative symmetric power (group representation), as
    opposed to sym_power_matrix which is the derivation action.
    """
    if mat_shape(Q) != (2, 2):
        raise ValueError("sym_power_rep expects a 2x2 matrix")
    (a, b), (c, d) = Q
    zero = a - a
    one = zero + 1
    S = [[zero] * (m + 1) for _ in range(m + 1)]
    for k in range(m + 1):
        # expand C(m,k) (a u + b v)^(m-k) (c u + d v)^k in powers of u
        p1 = [zero] * (m - k + 1)
        for i in range(m - k + 1):
            p1[i] = math.comb(m - k, i) * a ** i * b ** (m - k - i)
        p2 = [zero] * (k + 1)
        for l in range(k + 1):
            p2[l] = math.comb(k, l) * c ** l * d ** (k - l)
        conv = [zero] * (m + 1)
        for i, x in enumerate(p1):
            for l, y in enumerate(p2):
                conv[i + l] = conv[i + l] + x * y
        for j in range(m + 1):
            S[k][j] = math.comb(m, k) * conv[m - j] * Fraction(1, math.comb(m, j))
    return S


class DiffOp:
    """Scalar linear differential operator Sum c_i D^i, c_i rational."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, var=None, params=None):
        cs = []
        for c in coeffs:
            if not isinstance(c, RatFun):
                c = ratfun(c, var or "t", params or ())
            cs.append(c)
        if not cs:
            raise ValueError("operator needs at least one coefficient")
        while len(cs) > 1 and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def var(self):
        return self.coeffs[0].var

    @property
    def params(self):
        return self.coeffs[0].params

    def order(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return len(self.coeffs) == 1 and not self.coeffs[0]

    def coeff(self, k) -> RatFun:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return RatFun.zero(self.var, self.params)

    @classmethod
    def identity_d(cls, var="t", params=()):
        return cls([RatFun.zero(var, params), RatFun.const(1, var, params)])

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return DiffOp([self.coeff(i) + o.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return DiffOp([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def _lift(self, other):
        if isinstance(other, DiffOp):
            return other
        if isinstance(other, (int, Fraction, FieldElem, Poly, RatFun)):
            return DiffOp([ratfun(other, self.var, self.params)])
        return NotImplemented

    def __mul__(self, other):
        """Operator composition; scalars act as order-zero operators."""
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        zero = RatFun.zero(self.var, self.params)
        out = [zero] * (self.order() + o.order() + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if not b:
                    continue
                # D^i o b = sum_k C(i,k) b^(k) D^(i-k)
                bk = b
                for k in range(i + 1):
                    out[i - k + j] = out[i - k + j] + a * math.comb(i, k) * bk
                    if k < i:
                        bk = bk.derivative()
        return DiffOp(out)

    def __rmul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self

    def __pow__(self, k: int):
        out = DiffOp([RatFun.const(1, self.var, self.params)])
        for _ in range(k):
            out = out * self
        return out

    def monic(self):
        lc = self.coeffs[-1]
        if not lc:
            raise ValueError("cannot monicize the zero operator")
        return DiffOp([c / lc for c in self.coeffs])

    def adjoint(self):
        """Formal adjoint Sum (-D)^i o c_i."""
        D = DiffOp.identity_d(self.var, self.params)
        out = DiffOp([RatFun.zero(self.var, self.params)])
        for i, c in enumerate(self.coeffs):
            out = out + ((-D) ** i) * c
        return out

    def apply(self, f) -> RatFun:
        f = ratfun(f, self.var, self.params)
        acc = RatFun.zero(self.var, self.params)
        for c in self.coeffs:
            acc = acc + c * f
            f = f.derivative()
        return acc

    def specialize(self, assignment: dict) -> "DiffOp":
        return DiffOp([c.specialize(assignment) for c in self.coeffs])

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "DiffOp(%s)" % self.__str__()

    def __str__(self):
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            cs = str(c)
            if k == 0:
                parts.append("(%s)" % cs if " " in cs else cs)
                continue
            dk = "D" if k == 1 else "D^%d" % k
            if cs == "1":
                parts.append(dk)
            elif cs == "-1":
                parts.append("-" + dk)
            else:
                wrap = (" " in cs) or ("/" in cs)
                parts.append("%s*%s" % ("(%s)" % cs if wrap else cs, dk))
        if not parts:
            return "0"
        s = parts[0]
        for t in parts[1:]:
            s += " - " + t[1:] if t.startswith("-") else " + " + t
        return s


class _OpParser(_Parser):
    """Grammar parser whose values live in the operator ring."""

    def atom(self):
        kind, val = self.toks[self.pos]
        if kind == "name" and val == "D":
            self.pos += 1
            return DiffOp.identity_d(self.var, self.params)
        v = super().atom()
        if isinstance(v, DiffOp):
            # parenthesized subexpression, already operator-valued
            return v
        return DiffOp([v], self.var, self.params)

    def term(self):
        v = self.factor()
        while self.peek() in "*/":
            op = self.next()[0]
            w = self.factor()
            if op == "*":
                v = v * w
            else:
                if w.order() != 0:
                    raise ParseError("cannot divide by a differential operator")
                v = v * DiffOp([RatFun.const(1, w.var, w.params) / w.coeffs[0]])
        return v


def parse_operator(text: str, var="t", params=()) -> DiffOp:
    return _OpParser(tokenize(text), var, params).parse()


def companion(L: DiffOp):
    """Companion matrix of the monicized operator: Y=(y,y',...) gives Y'=AY."""
    n = L.order()
    if n < 1:
        raise ValueError("companion matrix needs order >= 1")
    Lm = L.monic()
    zero = RatFun.zero(L.var, L.params)
    one = RatFun.const(1, L.var, L.params)
    A = [[zero] * n for _ in range(n)]
    for i in range(n - 1):
        A[i][i + 1] = one
    for j in range(n):
        A[n - 1][j] = -Lm.coeff(j)
    return A


class ScalarizeResult(tuple):
    """(operator, rhs) pair that also exposes the back-substitution map."""

    def __new__(cls, op, rhs, back):
        self = super().__new__(cls, (op, rhs))
        self.back_substitute = back
        return self

    @property
    def op(self):
        return self[0]

    @property
    def rhs(self):
        return self[1]


def cyclic_vector_scalarize(A, b=None, v=None, retries=0, seed=0):
    """Turn the system F' = A F + b into one scalar equation M(f) = h.

    f = v.F for the covector v; solvability in rational functions is
    preserved both ways.  The returned object unpacks as (M, h) and has a
    back_substitute(f) method recovering the full vector F.

    Raises ValueError("cyclic vector failed") if v (and, when retries > 0,
    a handful of random small-integer covectors) never spans.
    """
    n, n2 = mat_shape(A)
    if n != n2:
        raise ValueError("system matrix must be square")
    zero, one = _zero_one_of(A[0][0])
    if b is None:
        b = [zero] * n
    b = [ratfun(x, zero.var, zero.params) for x in b]
    if v is None:
        v = [one if i == 0 else zero for i in range(n)]
    v = [ratfun(x, zero.var, zero.params) for x in v]

    rng = random.Random(seed)
    attempts = [list(v)]
    for r in range(retries):
        # low-degree polynomial covectors; a generic one is cyclic for
        # any system, which plain constants are not (e.g. A = 0)
        deg = 0 if r < retries // 2 else n - 1
        cand = []
        for _ in range(n):
            p = Poly([Fraction(rng.randint(-3, 3)) for _ in range(deg + 1)],
                     zero.var, zero.params)
            cand.append(RatFun(p))
        attempts.append(cand)

    last_err = None
    for cand in attempts:
        res = _scalarize_once(A, b, cand, zero, one, n)
        if res is not None:
            return res
        last_err = ValueError("cyclic vector failed")
    raise last_err


def _scalarize_once(A, b, v, zero, one, n):
    rows = [list(v)]
    ws = [zero]
    for _ in range(n):
        vi = rows[-1]
        dvi = [x.derivative() for x in vi]
        vA = [sum((vi[k] * A[k][j] for k in range(n)), zero) for j in range(n)]
        rows.append([dvi[j] + vA[j] for j in range(n)])
        ws.append(ws[-1].derivative()
                  + sum((vi[k] * b[k] for k in range(n)), zero))
    V = rows[:n]
    if rank([list(r) for r in V]) < n:
        return None
    # solve sum_i c_i v_i = -v_n for c_0..c_{n-1}
    m = [[rows[i][j] for i in range(n)] for j in range(n)]
    rhs = [-rows[n][j] for j in range(n)]
    c = solve(m, rhs, one)
    if c is None:
        return None
    op = DiffOp(c + [one])
    h = ws[n] + sum((c[i] * ws[i] for i in range(n)), zero)

    Vinv = inverse(V, one)

    def back(f):
        f = ratfun(f, zero.var, zero.params)
        derivs = []
        g = f
        for i in range(n):
            derivs.append(g - ws[i])
            g = g.derivative()
        return [sum((Vinv[i][j] * derivs[j] for j in range(n)), zero)
                for i in range(n)]

    return ScalarizeResult(op, h, back)


def sym_power_operator(L: DiffOp, m: int) -> DiffOp:
    """Monic operator annihilating all products of m solutions of L."""
    if L.order() != 2:
        raise ValueError("symmetric power of operators implemented for order 2")
    M = sym_power_matrix(companion(L), m)
    op, _ = cyclic_vector_scalarize(M)
    return op.monic()


def adjoint_operator(L: DiffOp) -> DiffOp:
    return L.adjoint()


def apply_operator(L: DiffOp, f) -> RatFun:
    return L.apply(f)
