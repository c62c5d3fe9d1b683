"""Exact rational solutions of L(y) = g over Q.

Abramov-style: local exponent bounds at the finite singularities give a
universal denominator, the exponent data at infinity gives a numerator
degree bound, and an undetermined-coefficients linear solve finishes.
Everything is exact; every returned solution is re-checked by
substitution before it leaves the module.

Only coefficients over Q are supported.  Parameterized operators must be
specialized first (integer-root extraction is only decidable over Q).
"""

from __future__ import annotations

from fractions import Fraction

from .field import FieldElem
from .linear import mat_shape, nullspace, solve
from .linops import DiffOp, cyclic_vector_scalarize
from .poly import Poly, RatFun, ratfun


class IndicialData:
    """Local exponent data of an operator at one singular point.

    point is a Fraction (finite rational singularity), a monic Poly of
    degree > 1 (cluster of conjugate singularities, kept unsplit), or
    the string "inf".  poly is the exponent polynomial in the variable
    "e"; for a degree > 1 point it is the Q-polynomial whose integer
    roots are exactly the integer exponents at the cluster.
    """

    def __init__(self, point, poly, integer_roots):
        if poly.is_zero():
            raise ValueError("indicial polynomial is zero")
        self.point = point
        self.poly = poly
        self.integer_roots = sorted(integer_roots)

    def __repr__(self):
        return "IndicialData(point=%r, poly=%s, integer_roots=%s)" % (
            self.point, self.poly, self.integer_roots)


class SolutionSpace:
    """Affine space of rational solutions, with the bounds that prove it.

    particular is None when no rational solution exists; basis spans the
    rational solutions of the homogeneous equation.  denominator and
    degree are the universal bounds used, kept for certification.
    """

    def __init__(self, particular, basis, denominator=None, degree=None,
                 system_shape=None):
        self.particular = particular
        self.basis = list(basis)
        self.denominator = denominator
        self.degree = degree
        self.system_shape = system_shape

    @property
    def is_empty(self):
        return self.particular is None

    def __repr__(self):
        return "SolutionSpace(particular=%s, dim=%d)" % (
            self.particular, len(self.basis))


def _falling(i, var="e"):
    """e (e-1) ... (e-i+1) as a Poly in e."""
    p = Poly.const(1, var)
    e = Poly.gen(var)
    for k in range(i):
        p = p * (e - Fraction(k))
    return p


def _clear_denominators(L: DiffOp, g=None):
    """Polynomial coefficients q_i and cleared right side.

    Returns (qs, rhs_poly) with qs[i] the coefficient of the i-th
    derivative and rhs_poly a Poly, after multiplying the equation by
    the least common denominator.
    """
    var, params = L.var, L.params
    den = Poly.const(1, var, params)
    items = [L.coeff(i) for i in range(L.order() + 1)]
    if g is not None:
        items.append(g)
    for c in items:
        d = den.gcd(c.den)
        den = den * (c.den // d)
    qs = [(L.coeff(i) * RatFun(den)).as_poly() for i in range(L.order() + 1)]
    rhs = None if g is None else (g * RatFun(den)).as_poly()
    return qs, rhs


def _poly_valuation(p: Poly, f: Poly):
    """Multiplicity of the factor f in p (p nonzero)."""
    v = 0
    while True:
        q, r = p.divmod(f)
        if not r.is_zero():
            return v, p
        p = q
        v += 1


def coprime_basis(polys):
    """Pairwise-coprime monic squarefree factor base of the inputs.

    Standard gcd splitting.  Every input is a rational constant times a
    product of powers of base elements, so valuations of the inputs are
    well defined factor by factor.
    """
    work = []
    for p in polys:
        if not p.is_zero() and p.degree() > 0:
            for f, _ in p.monic().squarefree_decomposition():
                work.append(f)
    base = []
    while work:
        q = work.pop()
        if q.degree() == 0:
            continue
        for i, b in enumerate(base):
            d = b.gcd(q)
            if d.degree() == 0:
                continue
            base.pop(i)
            for piece in (d, b // d, q // d):
                if piece.degree() > 0:
                    work.append(piece)
            break
        else:
            if q not in base:
                base.append(q)
    return sorted(base, key=lambda f: (f.degree(), str(f)))


def _poly_xgcd(a: Poly, b: Poly):
    """(g, s, t) with s a + t b = g, g monic."""
    var, params = a.var, a.params
    r0, r1 = a, b
    s0 = Poly.const(1, var, params)
    s1 = Poly.zero(var, params)
    t0 = Poly.zero(var, params)
    t1 = Poly.const(1, var, params)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.leading()
    inv = 1 / lc
    scale = Poly.const(inv.as_fraction() if inv.is_rational() else inv,
                       var, params)
    return r0.monic(), s0 * scale, t0 * scale


def _inverse_mod(p: Poly, f: Poly) -> Poly:
    g, s, _ = _poly_xgcd(p % f, f)
    if g.degree() != 0:
        raise ValueError("element not invertible modulo the factor")
    return s % f


def _indicial_finite(qs, f: Poly) -> IndicialData:
    """Exponent polynomial at the roots of the squarefree factor f."""
    data = []
    for i, q in enumerate(qs):
        if q.is_zero():
            continue
        v, cof = _poly_valuation(q, f)
        data.append((i, v, cof))
    m = min(v - i for i, v, _ in data)
    if f.degree() == 1:
        a = -f.coeff(0) / f.coeff(1)
        ind = Poly.zero("e")
        for i, v, cof in data:
            if v - i == m:
                c = cof.evaluate(a)
                ind = ind + _falling(i) * Poly.const(c.as_fraction(), "e")
        roots, _ = ind.rational_roots()
        ints = [int(r) for r in roots if r.denominator == 1]
        return IndicialData(a.as_fraction(), ind, ints)
    # cluster of conjugate points: work modulo f
    fp = f.derivative()
    terms = {}  # x-exponent -> Poly in e
    for i, v, cof in data:
        if v - i != m:
            continue
        t = (cof * (fp ** v)) % f
        fall = _falling(i)
        for j in range(t.degree() + 1):
            cj = t.coeff(j)
            if not cj:
                continue
            add = fall * Poly.const(cj.as_fraction(), "e")
            terms[j] = terms.get(j, Poly.zero("e")) + add
    # integer exponents at any root of f are common integer roots of the
    # x-coefficient polynomials; their gcd carries them all
    g = Poly.zero("e")
    for p in terms.values():
        g = g.gcd(p) if not g.is_zero() else p
    if g.degree() == 0:
        return IndicialData(f, g, [])
    roots, _ = g.rational_roots()
    ints = [int(r) for r in roots if r.denominator == 1]
    return IndicialData(f, g, ints)


def _indicial_infinity(qs) -> IndicialData:
    sigma = max(q.degree() - i for i, q in enumerate(qs) if not q.is_zero())
    ind = Poly.zero("e")
    for i, q in enumerate(qs):
        if q.is_zero() or q.degree() - i != sigma:
            continue
        ind = ind + _falling(i) * Poly.const(q.leading().as_fraction(), "e")
    roots, _ = ind.rational_roots()
    ints = [int(r) for r in roots if r.denominator == 1]
    return IndicialData("inf", ind, ints)


def singular_factors(L: DiffOp):
    """Coprime squarefree factor base of the leading coefficient."""
    qs, _ = _clear_denominators(L)
    lead = qs[-1]
    if lead.is_zero() or lead.degree() == 0:
        return []
    base = coprime_basis([q for q in qs if not q.is_zero()])
    return [f for f in base if _poly_valuation(lead, f)[0] > 0]


def indicial_polynomial(L: DiffOp, point) -> IndicialData:
    """Exponent data of L at a finite point, a factor, or infinity."""
    if L.params:
        raise ValueError("indicial data needs Q coefficients")
    qs, _ = _clear_denominators(L)
    if isinstance(point, str) and point in ("inf", "oo", "infinity"):
        return _indicial_infinity(qs)
    if isinstance(point, Poly):
        return _indicial_finite(qs, point.monic())
    a = Fraction(point)
    f = Poly([-a, 1], L.var)
    return _indicial_finite(qs, f)


def _rat_valuation(g: RatFun, f: Poly):
    """Valuation of g at the factor f (negative at a pole)."""
    if not g:
        return None
    vn = _poly_valuation(g.num, f)[0] if not g.num.is_zero() else None
    vd = _poly_valuation(g.den, f)[0]
    return (vn if vn is not None else 0) - vd


def denominator_bound(L: DiffOp, g=None) -> Poly:
    """Monic D with y D polynomial for every rational solution y of L(y)=g."""
    if L.params:
        raise ValueError("denominator bound needs Q coefficients")
    var = L.var
    qs, _ = _clear_denominators(L)
    lead = qs[-1]
    n = L.order()
    D = Poly.const(1, var)
    sing = []
    if lead.degree() > 0:
        sing = coprime_basis([q for q in qs if not q.is_zero()])
        sing = [f for f in sing if _poly_valuation(lead, f)[0] > 0]
    # right side of the cleared equation sum q_i y^(i) = den * g
    den = (RatFun(qs[-1]) / L.coeff(L.order())).as_poly()
    gtil = None if g is None or not g else g * RatFun(den)
    for f in sing:
        data = []
        for i, q in enumerate(qs):
            if q.is_zero():
                continue
            v, _ = _poly_valuation(q, f)
            data.append((i, v))
        m = min(v - i for i, v in data)
        ind = _indicial_finite(qs, f)
        cand = [0]
        if ind.integer_roots:
            cand.append(-min(ind.integer_roots))
        if gtil is not None:
            cand.append(m - _rat_valuation(gtil, f))
        N = max(cand)
        if N > 0:
            D = D * f ** N
    if g is not None and g:
        # poles of g away from the singular locus: at an ordinary point a
        # solution pole of order d maps to one of order exactly d + n
        gden = g.den.monic()
        for f in coprime_basis([gden]):
            if any(f == s for s in sing):
                continue
            k = _poly_valuation(gden, f)[0] - n
            if k > 0:
                D = D * f ** k
    return D.monic()


def degree_bound(L: DiffOp, g=None) -> int:
    """Degree bound for polynomial solutions of L(y)=g; -1 if none possible."""
    if L.params:
        raise ValueError("degree bound needs Q coefficients")
    qs, rhs = _clear_denominators(L, g if g is not None else None)
    sigma = max(q.degree() - i for i, q in enumerate(qs) if not q.is_zero())
    ind = _indicial_infinity(qs)
    cand = [r for r in ind.integer_roots if r >= 0]
    if rhs is not None and not rhs.is_zero():
        d = rhs.degree() - sigma
        if d >= 0:
            cand.append(d)
    return max(cand) if cand else -1


def _polynomial_solutions(L: DiffOp, rhs, bound):
    """Solve for polynomial y of degree <= bound; returns (part, basis, shape).

    rhs is a RatFun that must be polynomial for solutions to exist.
    """
    var = L.var
    zero = RatFun.zero(var)
    one = RatFun.const(1, var)
    if bound < 0:
        return (zero if not rhs else None), [], (0, 0)
    images = []
    for k in range(bound + 1):
        xk = RatFun(Poly([Fraction(0)] * k + [Fraction(1)], var))
        images.append(L.apply(xk))
    # common denominator of images and rhs
    den = Poly.const(1, var)
    for im in images + ([rhs] if rhs else []):
        d = den.gcd(im.den)
        den = den * (im.den // d)
    cols = [(im * RatFun(den)).as_poly() for im in images]
    rp = ((rhs if rhs else zero) * RatFun(den)).as_poly()
    deg = max([c.degree() for c in cols if not c.is_zero()] +
              [rp.degree() if not rp.is_zero() else 0, 0])
    m = [[FieldElem.from_fraction(0)] * (bound + 1) for _ in range(deg + 1)]
    for j, c in enumerate(cols):
        for r in range(deg + 1):
            m[r][j] = c.coeff(r)
    b = [rp.coeff(r) for r in range(deg + 1)]
    fone = FieldElem.from_fraction(1)
    part = None
    sol = solve(m, b, fone)
    if sol is not None:
        part = RatFun(Poly([c.as_fraction() for c in sol], var))
    basis = []
    for v in nullspace(m, fone):
        p = Poly([c.as_fraction() for c in v], var)
        if not p.is_zero():
            basis.append(RatFun(p))
    return part, basis, (len(m), bound + 1)


def rational_solutions(L: DiffOp, g=None) -> SolutionSpace:
    """Complete affine space of rational solutions of L(y) = g.

    Absence of a solution is reported in the result, never raised.  All
    claimed solutions are re-checked by exact substitution.
    """
    if L.params:
        raise ValueError("rational solving needs Q coefficients")
    var = L.var
    if g is not None:
        g = ratfun(g, var)
        if not g:
            g = None
    D = denominator_bound(L, g)
    # substitute y = z / D and clear: polynomial-solution problem for z
    M = L * DiffOp([RatFun(Poly.const(1, var), D)], var)
    bound = degree_bound(M, g)
    hbound = degree_bound(M, None)
    part, basis, shape = _polynomial_solutions(
        M, g if g is not None else RatFun.zero(var), max(bound, hbound))
    Dr = RatFun(Poly.const(1, var), D)
    if part is not None:
        part = part * Dr
    basis = [y * Dr for y in basis]
    # soundness: exact re-substitution
    target = g if g is not None else RatFun.zero(var)
    if part is not None and not (L.apply(part) == target):
        raise RuntimeError("rational solver produced a wrong solution")
    for y in basis:
        if L.apply(y):
            raise RuntimeError("rational solver produced a wrong solution")
    basis.sort(key=lambda y: (y.den.degree(), y.num.degree(), str(y)))
    if g is None and part is None:
        part = RatFun.zero(var)
    return SolutionSpace(part, basis, denominator=D, degree=max(bound, hbound),
                         system_shape=shape)


def system_rational_solutions(A, b=None) -> SolutionSpace:
    """Rational solutions F of F' = A F + b via a cyclic vector.

    Solutions are back-substituted to vectors and verified exactly
    against the system.
    """
    n, n2 = mat_shape(A)
    if n != n2:
        raise ValueError("system matrix must be square")
    sample = A[0][0]
    var = sample.var
    if sample.params:
        raise ValueError("rational solving needs Q coefficients")
    res = cyclic_vector_scalarize(A, b, retries=20)
    space = rational_solutions(res.op, res.rhs)
    bvec = b if b is not None else [RatFun.zero(var)] * n

    def check(F, rhs_on):
        for i in range(n):
            lhs = F[i].derivative()
            rhs = sum((A[i][j] * F[j] for j in range(n)), RatFun.zero(var))
            if rhs_on:
                rhs = rhs + ratfun(bvec[i], var)
            if not (lhs == rhs):
                return False
        return True

    part = None
    if space.particular is not None:
        part = res.back_substitute(space.particular)
        if not check(part, True):
            raise RuntimeError("back substitution produced a wrong solution")
    # back substitution is affine; peel off its constant part for the
    # homogeneous solutions
    F0 = res.back_substitute(RatFun.zero(var))
    basis = []
    for y in space.basis:
        raw = res.back_substitute(y)
        F = [a - c for a, c in zip(raw, F0)]
        if not check(F, False):
            raise RuntimeError("back substitution produced a wrong solution")
        basis.append(F)
    return SolutionSpace(part, basis, denominator=space.denominator,
                         degree=space.degree, system_shape=space.system_shape)
