"""Exact coefficient field: rational functions in named parameters over Q.

Elements are reduced fractions of multivariate polynomials in the declared
parameters, with Fraction coefficients.  The zero-parameter case degenerates
to plain rationals.  Canonical form: gcd-reduced, denominator leading
coefficient (degree-lexicographic order) equal to 1.
"""

from __future__ import annotations

import math
from fractions import Fraction

# ---------------------------------------------------------------------------
# multivariate polynomials as {exponent-tuple: Fraction} dicts

def _fgcd(a: Fraction, b: Fraction) -> Fraction:
    if a == 0:
        return abs(b)
    if b == 0:
        return abs(a)
    return Fraction(math.gcd(a.numerator, b.numerator),
                    math.lcm(a.denominator, b.denominator))


def _deglex_key(exps):
    return (sum(exps), exps)


def mp_is_zero(f):
    return not f


def mp_const(c: Fraction, nvars: int):
    c = Fraction(c)
    if c == 0:
        return {}
    return {(0,) * nvars: c}


def mp_add(f, g):
    out = dict(f)
    for e, c in g.items():
        s = out.get(e, Fraction(0)) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def mp_neg(f):
    return {e: -c for e, c in f.items()}


def mp_mul(f, g):
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            s = out.get(e, Fraction(0)) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def mp_scale(f, c: Fraction):
    if c == 0:
        return {}
    return {e: k * c for e, k in f.items()}


def mp_leading(f):
    e = max(f, key=_deglex_key)
    return e, f[e]


def mp_div_exact(f, g):
    """Exact multivariate division; caller guarantees divisibility."""
    if mp_is_zero(f):
        return {}
    eg, cg = mp_leading(g)
    out = {}
    rem = dict(f)
    while rem:
        ef, cf = mp_leading(rem)
        q = tuple(a - b for a, b in zip(ef, eg))
        if any(x < 0 for x in q):
            raise ArithmeticError("inexact polynomial division")
        c = cf / cg
        out[q] = c
        rem = mp_add(rem, mp_neg(mp_mul({q: c}, g)))
    return out


def _mp_to_univar(f, nvars):
    """View f in the first variable: list of coefficient polys in the rest."""
    by_deg = {}
    for e, c in f.items():
        d = e[0]
        by_deg.setdefault(d, {})[e[1:]] = c
    top = max(by_deg) if by_deg else -1
    return [by_deg.get(d, {}) for d in range(top + 1)]


def _mp_from_univar(coeffs, nvars):
    out = {}
    for d, p in enumerate(coeffs):
        for e, c in p.items():
            out[(d,) + e] = c
    return out


def _uv_deg(coeffs):
    d = len(coeffs) - 1
    while d >= 0 and mp_is_zero(coeffs[d]):
        d -= 1
    return d


def _uv_trim(coeffs):
    d = _uv_deg(coeffs)
    return coeffs[:d + 1]


def _uv_mul(a, b, nv):
    out = [{} for _ in range(len(a) + len(b) - 1)] if a and b else []
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] = mp_add(out[i + j], mp_mul(ca, cb))
    return _uv_trim(out)


def _uv_sub(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        ca = a[i] if i < len(a) else {}
        cb = b[i] if i < len(b) else {}
        out.append(mp_add(ca, mp_neg(cb)))
    return _uv_trim(out)


def _uv_pseudo_rem(a, b, nv):
    """Pseudo-remainder of univariate polys with multivariate coefficients."""
    a = list(a)
    db, lb = _uv_deg(b), b[_uv_deg(b)]
    while _uv_deg(a) >= db and a:
        da = _uv_deg(a)
        la = a[da]
        a = [mp_mul(c, lb) for c in a]
        shift = [{} for _ in range(da - db)] + [mp_mul(c, la) for c in b]
        a = _uv_sub(a, shift)
        a = _uv_trim(a)
        if not a:
            break
    return a


def _gcd_one_var(f, g):
    """Monic Euclid for one-variable polys; pseudo-remainders blow up here."""

    def to_list(h):
        d = max(e[0] for e in h)
        out = [Fraction(0)] * (d + 1)
        for e, c in h.items():
            out[e[0]] = c
        return out

    a, b = to_list(f), to_list(g)
    while b:
        lb = b[-1]
        if lb != 1:
            b = [c / lb for c in b]
        while len(a) >= len(b):
            la = a[-1]
            sh = len(a) - len(b)
            a = [c - la * b[i - sh] if i >= sh else c
                 for i, c in enumerate(a[:-1])]
            while a and not a[-1]:
                a.pop()
            if not a:
                break
        a, b = b, a
    return {(d,): c for d, c in enumerate(a) if c}


def mp_gcd(f, g, nvars: int):
    """Multivariate gcd over Q via primitive pseudo-remainder sequences."""
    if mp_is_zero(f):
        return dict(g) if g else {}
    if mp_is_zero(g):
        return dict(f)
    if nvars == 0:
        return {(): Fraction(1)}
    if nvars == 1:
        return _gcd_one_var(f, g)
    fu = _mp_to_univar(f, nvars)
    gu = _mp_to_univar(g, nvars)
    if _uv_deg(fu) == 0 and _uv_deg(gu) == 0:
        inner = mp_gcd(fu[0], gu[0], nvars - 1)
        return _mp_from_univar([inner], nvars)

    def content(u):
        c = {}
        for p in u:
            c = mp_gcd(c, p, nvars - 1)
        return c

    cf, cg = content(fu), content(gu)
    fu = [mp_div_exact(p, cf) if p else {} for p in fu]
    gu = [mp_div_exact(p, cg) if p else {} for p in gu]
    cd = mp_gcd(cf, cg, nvars - 1)
    a, b = fu, gu
    if _uv_deg(a) < _uv_deg(b):
        a, b = b, a
    while True:
        r = _uv_pseudo_rem(a, b, nvars)
        if not r:
            break
        cr = content(r)
        r = [mp_div_exact(p, cr) if p else {} for p in r]
        a, b = b, r
        if _uv_deg(b) == 0:
            b = [mp_const(Fraction(1), nvars - 1)]
            break
    gu = [mp_mul(p, cd) for p in b]
    res = _mp_from_univar(gu, nvars)
    # normalize sign/scale of leading term for determinism
    _, lc = mp_leading(res)
    return mp_scale(res, 1 / lc)


def mp_eval(f, values):
    """Substitute Fractions for all variables."""
    total = Fraction(0)
    for e, c in f.items():
        term = c
        for v, k in zip(values, e):
            term *= v ** k
        total += term
    return total


# ---------------------------------------------------------------------------

class FieldElem:
    """Element of Q(params): a reduced fraction of parameter polynomials."""

    __slots__ = ("params", "num", "den")

    def __init__(self, params, num, den=None, _normalized=False):
        self.params = tuple(params)
        if den is None:
            den = mp_const(Fraction(1), len(self.params))
        if mp_is_zero(den):
            raise ZeroDivisionError("zero denominator in coefficient field")
        if not _normalized:
            num, den = self._reduce(num, den, len(self.params))
        self.num = num
        self.den = den

    @staticmethod
    def _reduce(num, den, nv):
        if mp_is_zero(num):
            return {}, mp_const(Fraction(1), nv)
        g = mp_gcd(num, den, nv)
        if not (len(g) == 1 and sum(next(iter(g))) == 0 and g[next(iter(g))] == 1):
            num = mp_div_exact(num, g)
            den = mp_div_exact(den, g)
        _, lc = mp_leading(den)
        if lc != 1:
            num = mp_scale(num, 1 / lc)
            den = mp_scale(den, 1 / lc)
        return num, den

    # constructors ---------------------------------------------------------
    @classmethod
    def from_fraction(cls, c, params=()):
        params = tuple(params)
        return cls(params, mp_const(Fraction(c), len(params)))

    @classmethod
    def parameter(cls, name, params):
        params = tuple(params)
        i = params.index(name)
        e = tuple(1 if j == i else 0 for j in range(len(params)))
        return cls(params, {e: Fraction(1)})

    def _lift(self, other):
        if isinstance(other, FieldElem):
            if other.params != self.params:
                raise ValueError("parameter context mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElem.from_fraction(other, self.params)
        return NotImplemented

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        num = mp_add(mp_mul(self.num, o.den), mp_mul(o.num, self.den))
        return FieldElem(self.params, num, mp_mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.params, mp_neg(self.num), self.den, _normalized=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.params, mp_mul(self.num, o.num),
                         mp_mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero field element")
        return FieldElem(self.params, mp_mul(self.num, o.den),
                         mp_mul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._lift(other)
        return o / self

    def __pow__(self, k: int):
        out = FieldElem.from_fraction(1, self.params)
        base = self
        if k < 0:
            base = FieldElem.from_fraction(1, self.params) / self
            k = -k
        for _ in range(k):
            out = out * base
        return out

    def __bool__(self):
        return not mp_is_zero(self.num)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.params,
                     frozenset(self.num.items()),
                     frozenset(self.den.items())))

    # queries --------------------------------------------------------------
    def is_rational(self) -> bool:
        nv = len(self.params)
        den_one = self.den == mp_const(Fraction(1), nv)
        num_const = mp_is_zero(self.num) or (
            len(self.num) == 1 and sum(next(iter(self.num))) == 0)
        return den_one and num_const

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not a plain rational: %s" % self)
        if mp_is_zero(self.num):
            return Fraction(0)
        return next(iter(self.num.values()))

    def specialize(self, assignment: dict):
        """Substitute rationals for all parameters; returns a Q element."""
        values = []
        for p in self.params:
            if p not in assignment:
                raise ValueError("missing assignment for parameter %r" % p)
            values.append(Fraction(assignment[p]))
        d = mp_eval(self.den, values)
        if d == 0:
            raise ZeroDivisionError(
                "denominator %s vanishes under %s" % (_mp_str(self.den, self.params), assignment))
        n = mp_eval(self.num, values)
        return FieldElem.from_fraction(n / d, ())

    def __repr__(self):
        return "FieldElem(%s)" % self.__str__()

    def __str__(self):
        nv = len(self.params)
        if self.den == mp_const(Fraction(1), nv):
            return _mp_str(self.num, self.params)
        return "(%s)/(%s)" % (_mp_str(self.num, self.params),
                              _mp_str(self.den, self.params))


def _mp_str(f, params):
    if mp_is_zero(f):
        return "0"
    parts = []
    for e in sorted(f, key=_deglex_key, reverse=True):
        c = f[e]
        factors = []
        for name, k in zip(params, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append("%s^%d" % (name, k))
        if not factors:
            term = _frac_str(c)
        else:
            mono = "*".join(factors)
            if c == 1:
                term = mono
            elif c == -1:
                term = "-" + mono
            else:
                term = "%s*%s" % (_frac_str(c), mono)
        parts.append(term)
    s = parts[0]
    for t in parts[1:]:
        s += " - " + t[1:] if t.startswith("-") else " + " + t
    return s


def _frac_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def QQ(c=0) -> FieldElem:
    """Shortcut for plain rational constants (no parameters)."""
    return FieldElem.from_fraction(Fraction(c), ())
