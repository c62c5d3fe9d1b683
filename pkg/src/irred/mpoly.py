"""Sparse multivariate polynomials over an arbitrary coefficient ring.

Used for jet-space right-hand sides: variables are jet coordinates,
coefficients are rational functions of the independent variable.  The
coefficient type only needs +, -, *, and truthiness for zero tests.
"""

from __future__ import annotations


class MPoly:
    """Polynomial in named variables, terms as {exponent tuple: coeff}."""

    __slots__ = ("vars", "terms", "czero")

    def __init__(self, varnames, terms, czero):
        self.vars = tuple(varnames)
        self.terms = {e: c for e, c in terms.items() if c}
        self.czero = czero

    # constructors ---------------------------------------------------------
    @classmethod
    def const(cls, c, varnames, czero):
        varnames = tuple(varnames)
        return cls(varnames, {(0,) * len(varnames): c}, czero)

    @classmethod
    def zero(cls, varnames, czero):
        return cls(varnames, {}, czero)

    @classmethod
    def gen(cls, name, varnames, cone, czero):
        varnames = tuple(varnames)
        i = varnames.index(name)
        e = tuple(1 if j == i else 0 for j in range(len(varnames)))
        return cls(varnames, {e: cone}, czero)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError("variable context mismatch")

    def __add__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, self.czero) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(self.vars, out, self.czero)

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()},
                     self.czero)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, self.czero) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MPoly(self.vars, out, self.czero)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        if not c:
            return MPoly.zero(self.vars, self.czero)
        return MPoly(self.vars, {e: c * k for e, k in self.terms.items()},
                     self.czero)

    def __pow__(self, k: int):
        out = MPoly.const(_one_like(self.czero), self.vars, self.czero)
        for _ in range(k):
            out = out * self
        return out

    def diff(self, name):
        """Partial derivative with respect to one variable."""
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
            s = out.get(e2, self.czero) + e[i] * c
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
        return MPoly(self.vars, out, self.czero)

    def map_coeffs(self, f):
        return MPoly(self.vars, {e: f(c) for e, c in self.terms.items()},
                     self.czero)

    def extend(self, varnames):
        """Reinterpret over a larger variable list (superset, any order)."""
        varnames = tuple(varnames)
        idx = [varnames.index(v) for v in self.vars]
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * len(varnames)
            for i, k in zip(idx, e):
                e2[i] = k
            out[tuple(e2)] = c
        return MPoly(varnames, out, self.czero)

    def subs(self, assignment):
        """Substitute MPoly values (same variable list) for named variables.

        Variables missing from assignment stay themselves.
        """
        gens = {}
        one = _one_like(self.czero)
        for v in self.vars:
            gens[v] = assignment.get(
                v, MPoly.gen(v, self.vars, one, self.czero))
        acc = MPoly.zero(self.vars, self.czero)
        for e, c in self.terms.items():
            term = MPoly.const(c, self.vars, self.czero)
            for v, k in zip(self.vars, e):
                for _ in range(k):
                    term = term * gens[v]
            acc = acc + term
        return acc

    def coeff_of(self, exps):
        return self.terms.get(tuple(exps), self.czero)

    def total_degree(self, weights=None):
        """Max weighted degree; None for zero."""
        if not self.terms:
            return None
        if weights is None:
            weights = [1] * len(self.vars)
        return max(sum(w * k for w, k in zip(weights, e)) for e in self.terms)

    def involves(self, name):
        i = self.vars.index(name)
        return any(e[i] for e in self.terms)

    def as_coeff(self):
        """The constant term, if the polynomial is constant."""
        for e in self.terms:
            if any(e):
                raise ValueError("not a constant polynomial")
        if not self.terms:
            return self.czero
        return next(iter(self.terms.values()))

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __repr__(self):
        return "MPoly(%s)" % self.__str__()

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda ex: (-sum(ex), tuple(-k for k in ex))):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else "%s^%d" % (v, k)
                for v, k in zip(self.vars, e) if k)
            cs = str(c)
            if not mono:
                parts.append("(%s)" % cs if " " in cs else cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                wrap = (" " in cs) or ("/" in cs)
                parts.append("%s*%s" % ("(%s)" % cs if wrap else cs, mono))
        s = parts[0]
        for t in parts[1:]:
            s += " - " + t[1:] if t.startswith("-") else " + " + t
        return s


def _one_like(czero):
    return czero + 1
