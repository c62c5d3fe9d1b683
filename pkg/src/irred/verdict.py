"""Irreducibility verdicts and machine-checkable certificates.

A Certificate is a plain JSON document {input, evidence[], verdict}.
Every evidence record carries the data needed to re-run its check from
the certificate alone (matrices verbatim, coefficient strings in the
textual grammar) plus a content hash, so certificates are diffable and
replayable bit for bit.

Verdict vocabulary: IRREDUCIBLE is only emitted when both required
pieces of evidence are present (an SL2-certified first variational
equation and a Lie dimension above 5).  A solvable obstruction gives
INCONCLUSIVE, never "reducible": the criterion is one-directional.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .field import FieldElem
from .grammar import parse_ratfun
from .jets import EquationFamily, build_lnve_airy_family, build_p3_chain
from .liealg import (adjoint_action_matrix, associated_lie_algebra,
                     block_e_matrices, block_f_matrices, block_xyh,
                     classify_lnve_lie_algebra, lie_closure)
from .linear import mat_bracket, mat_identity, mat_shape, solve
from .linops import (DiffOp, cyclic_vector_scalarize, parse_operator,
                     sym_power_operator)
from .poly import Poly, RatFun, ratfun
from .ratsolve import (_clear_denominators, _indicial_infinity,
                       degree_bound, rational_solutions,
                       system_rational_solutions)
from .screen import TAG_SL2, certify_sl2, exponential_solutions_restricted

IRREDUCIBLE = "IRREDUCIBLE"
INCONCLUSIVE = "INCONCLUSIVE"
OBSTRUCTION_SOLVABLE = \
    "OBSTRUCTION-SOLVABLE (reduction exists; theorem hypotheses fail)"


class CertificateError(RuntimeError):
    """A certificate failed to replay."""


def _mat_str(M):
    return [[str(x) for x in row] for row in M]


def _parse_entry(s, var, params):
    return parse_ratfun(s, var, tuple(params))


def _parse_mat(rows, var, params):
    return [[_parse_entry(s, var, params) for s in row] for row in rows]


def _parse_const_mat(rows, var, params):
    out = []
    for row in rows:
        r = []
        for s in row:
            f = _parse_entry(s, var, params)
            if not f.is_constant():
                raise CertificateError("expected constant entry %r" % s)
            r.append(f.constant_value())
        out.append(r)
    return out


def _record_hash(record):
    body = {k: v for k, v in record.items() if k != "hash"}
    blob = json.dumps(body, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


class Certificate:
    """Input description, evidence chain, final verdict."""

    def __init__(self, input_desc):
        self.input = dict(input_desc)
        self.evidence = []
        self.verdict = None

    def add(self, kind, **fields):
        record = {"kind": kind}
        record.update(fields)
        record["hash"] = _record_hash(record)
        self.evidence.append(record)
        return record

    def find(self, kind):
        return [r for r in self.evidence if r["kind"] == kind]

    def to_dict(self):
        return {"input": self.input, "evidence": self.evidence,
                "verdict": self.verdict}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())
            fh.write("\n")

    @classmethod
    def from_dict(cls, d):
        cert = cls(d["input"])
        cert.evidence = [dict(r) for r in d["evidence"]]
        cert.verdict = d["verdict"]
        return cert

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def replay(self):
        """Re-run every embedded check; raises CertificateError on any
        mismatch, returns the number of records verified."""
        for i, rec in enumerate(self.evidence):
            if _record_hash(rec) != rec.get("hash"):
                raise CertificateError("record %d: hash mismatch" % i)
            try:
                _replay_record(rec)
            except CertificateError:
                raise
            except Exception as e:
                raise CertificateError("record %d (%s): %s"
                                       % (i, rec["kind"], e))
        return len(self.evidence)


def _replay_record(rec):
    kind = rec["kind"]
    var = rec.get("var", "t")
    params = tuple(rec.get("params", ()))
    if kind in ("matrix", "operator", "note", "vector"):
        return  # data witness; hash already checked
    if kind == "screen":
        L = parse_operator(rec["operator"], var, params)
        v = certify_sl2(L)
        if v.tag != rec["tag"]:
            raise CertificateError("screen tag changed: %s vs %s"
                                   % (v.tag, rec["tag"]))
        return
    if kind == "lie_dimension":
        gens = [_parse_const_mat(g, var, params) for g in rec["generators"]]
        alg = lie_closure(gens)
        if alg.dimension != rec["dimension"]:
            raise CertificateError("lie dimension changed: %d vs %d"
                                   % (alg.dimension, rec["dimension"]))
        return
    if kind == "trace_zero":
        M = _parse_mat(rec["matrix"], var, params)
        tr = sum((M[i][i] for i in range(len(M))), RatFun.zero(var, params))
        if tr:
            raise CertificateError("trace is not zero")
        return
    if kind == "decomposition":
        M = _parse_mat(rec["matrix"], var, params)
        Ci = _parse_mat(rec["cinf"], var, params)
        C0 = _parse_mat(rec["c0"], var, params)
        x = RatFun.gen(var, params)
        for i in range(len(M)):
            for j in range(len(M[0])):
                if not (M[i][j] == Ci[i][j] + C0[i][j] / x):
                    raise CertificateError("decomposition fails at (%d,%d)"
                                           % (i, j))
        return
    if kind == "bracket_identity":
        A = _parse_mat(rec["a"], var, params)
        B = _parse_mat(rec["b"], var, params)
        E = _parse_mat(rec["expect"], var, params)
        c = _parse_entry(rec.get("coeff", "1"), var, params)
        got = [[c * x for x in row] for row in mat_bracket(A, B)]
        if got != E:
            raise CertificateError("bracket identity %r fails"
                                   % rec.get("relation"))
        return
    if kind == "lincomb_identity":
        E = _parse_mat(rec["expect"], var, params)
        n, m = mat_shape(E)
        acc = [[RatFun.zero(var, params)] * m for _ in range(n)]
        for cstr, rows in rec["terms"]:
            c = _parse_entry(cstr, var, params)
            M = _parse_mat(rows, var, params)
            acc = [[a + c * x for a, x in zip(ra, rm)]
                   for ra, rm in zip(acc, M)]
        if acc != E:
            raise CertificateError("linear combination identity %r fails"
                                   % rec.get("relation"))
        return
    if kind == "operator_identity":
        a = parse_operator(rec["a"], var, params)
        b = parse_operator(rec["b"], var, params)
        if not (a == b):
            raise CertificateError("operator identity fails")
        return
    if kind == "rational_system":
        A = _parse_mat(rec["matrix"], var, params)
        b = [_parse_entry(s, var, params) for s in rec["rhs"]]
        space = system_rational_solutions(A, b)
        if (space.particular is not None) != rec["solvable"]:
            raise CertificateError("system solvability changed")
        if len(space.basis) != rec["homogeneous_dimension"]:
            raise CertificateError("homogeneous dimension changed")
        return
    if kind == "scalar_rational":
        L = parse_operator(rec["operator"], var, params)
        g = _parse_entry(rec["rhs"], var, params)
        space = rational_solutions(L, g)
        if (space.particular is not None) != rec["solvable"]:
            raise CertificateError("scalar solvability changed")
        return
    if kind == "pole_shortcut":
        p = _parse_entry(rec["p"], var, params)
        n = rec["n"]
        orders = sorted(_finite_pole_orders(p))
        if orders != sorted(rec["orders"]):
            raise CertificateError("pole orders changed")
        applies = any(1 <= k <= n + 2 for k in orders)
        if applies != rec["applies"]:
            raise CertificateError("shortcut applicability changed")
        return
    if kind == "degree_argument":
        L = parse_operator(rec["operator"], var, params)
        g = _parse_entry(rec["rhs"], var, params)
        qs, _ = _clear_denominators(L)
        sigma = max(q.degree() - i for i, q in enumerate(qs)
                    if not q.is_zero())
        if sigma != rec["sigma"]:
            raise CertificateError("image degree shift changed")
        ind = _indicial_infinity(qs)
        if str(ind.poly) != rec["indicial_infinity"]:
            raise CertificateError("indicial data at infinity changed")
        if degree_bound(L, g) != rec["degree_bound"]:
            raise CertificateError("degree bound changed")
        return
    raise CertificateError("unknown evidence kind %r" % kind)


def replay(cert) -> int:
    """Replay a Certificate, a dict, or a JSON string."""
    if isinstance(cert, str):
        cert = Certificate.from_json(cert)
    elif isinstance(cert, dict):
        cert = Certificate.from_dict(cert)
    return cert.replay()


def _finite_pole_orders(p: RatFun):
    factors, _ = p.pole_orders()
    return [k for _, k in factors.items()]


# ---------------------------------------------------------------------------
# the reduced-form obstruction for the Airy family

def _family_psi(n, var="t"):
    """Adjoint action of the block system matrix on the recursion basis."""
    X, Y, _ = block_xyh(n)
    t = RatFun(Poly.gen(var))
    one = RatFun.const(1, var)
    diag = [[x * one + t * (y * one) for x, y in zip(rx, ry)]
            for rx, ry in zip(X, Y)]
    return adjoint_action_matrix(diag, block_f_matrices(n))


def reduction_matrix(n, F, var="t"):
    """Gauge P = Id + sum F_i E_i removing the off-diagonal block."""
    one = RatFun.const(1, var)
    m = n + 3
    P = mat_identity(m, one)
    for fi, B in zip(F, block_e_matrices(n)):
        for i in range(m):
            for j in range(m):
                P[i][j] = P[i][j] + fi * (B[i][j] * one)
    return P


def reduced_form_obstruction(n, p):
    """(Psi, b, SolutionSpace) for the off-diagonal reduction of (NVE_n).

    Empty means the Lie algebra is the full sl2 x Sym^(n+1) of dimension
    n+5; solvable means sl2, and the solution space carries the
    reduction gauge as .reduction.
    """
    if n < 2:
        raise ValueError("family needs n >= 2")
    p = ratfun(p, "t")
    Psi = _family_psi(n)
    zero = RatFun.zero("t")
    b = [p] + [zero] * (n + 1)
    space = system_rational_solutions(Psi, b)
    space.reduction = None
    if space.particular is not None:
        space.reduction = reduction_matrix(n, space.particular)
    return Psi, b, space


def lnve_group_dimension(n, p):
    """(dimension, classification) of the Lie algebra of (LNVE_n)."""
    _, _, space = reduced_form_obstruction(n, p)
    if space.particular is not None:
        return 3, "sl2"
    return n + 5, "sl2 x Sym^(n+1)"


# ---------------------------------------------------------------------------
# the Airy family criterion

def _airy_ve1():
    return parse_operator("D^2 - t")


def criterion_airy_family(family) -> Certificate:
    """Irreducibility certificate for y'' = x y + y^n P(x, y)."""
    if not isinstance(family, EquationFamily):
        raise ValueError("expected an EquationFamily")
    n = family.n
    p = family.p()
    cert = Certificate({
        "equation": "y'' = x*y + y^%d * P(x, y)" % n,
        "n": n, "P": str(family.P), "p": str(p), "variable": "t",
    })

    # hypothesis 1: the first variational equation has group SL(2, C)
    ve1 = _airy_ve1()
    sv = certify_sl2(ve1)
    cert.add("screen", operator=str(ve1), var="t", tag=sv.tag,
             reason=sv.reason)
    if sv.tag != TAG_SL2:
        cert.verdict = INCONCLUSIVE
        return cert

    if not p:
        cert.add("note", text="p = 0: the normal variational equation "
                 "decouples and carries no obstruction")
        cert.verdict = INCONCLUSIVE
        return cert

    # fast path: a pole of order 1..n+2 already blocks rational solvability
    orders = _finite_pole_orders(p)
    applies = any(1 <= k <= n + 2 for k in orders)
    cert.add("pole_shortcut", p=str(p), var="t", n=n,
             orders=sorted(orders), applies=applies)
    if applies:
        cert.add("note", text="pole of order between 1 and %d at a finite "
                 "point: the scalar obstruction equation has no rational "
                 "solution, so the Lie algebra has dimension %d > 5"
                 % (n + 2, n + 5))
        cert.verdict = IRREDUCIBLE
        return cert

    # full path: scalar route through the symmetric power operator
    L = sym_power_operator(ve1, n + 1)
    cert.add("operator", name="sym^%d of the first variational operator"
             % (n + 1), var="t", text=str(L))
    qs, _ = _clear_denominators(L)
    sigma = max(q.degree() - i for i, q in enumerate(qs) if not q.is_zero())
    ind = _indicial_infinity(qs)
    cert.add("degree_argument", operator=str(L), rhs=str(p), var="t",
             sigma=sigma, indicial_infinity=str(ind.poly),
             integer_roots=list(ind.integer_roots),
             degree_bound=degree_bound(L, p))
    space = rational_solutions(L, p)
    cert.add("scalar_rational", operator=str(L), rhs=str(p), var="t",
             solvable=space.particular is not None,
             denominator=str(space.denominator), degree=space.degree,
             homogeneous_dimension=len(space.basis),
             particular=None if space.particular is None
             else str(space.particular))

    # system route must agree (cyclic-vector equivalence)
    Psi, b, sys_space = reduced_form_obstruction(n, p)
    cert.add("rational_system", matrix=_mat_str(Psi), rhs=[str(x) for x in b],
             var="t", solvable=sys_space.particular is not None,
             homogeneous_dimension=len(sys_space.basis))
    if (space.particular is None) != (sys_space.particular is None):
        raise RuntimeError("scalar and system obstruction routes disagree")

    if space.particular is None:
        cert.add("note", text="no rational solution: Lie algebra dimension "
                 "%d > 5" % (n + 5))
        cert.verdict = IRREDUCIBLE
    else:
        cert.add("matrix", name="reduction gauge", var="t",
                 rows=_mat_str(sys_space.reduction))
        cert.add("note", text="obstruction solvable: Lie algebra sl2 of "
                 "dimension 3, criterion silent")
        cert.verdict = INCONCLUSIVE
    return cert


def check_p2() -> Certificate:
    """Both published routes for y'' = x y + 2 y^3; they must agree."""
    fam = EquationFamily(3, 2)
    p = fam.p()
    cert = Certificate({"equation": "y'' = x*y + 2*y^3", "name": "P2",
                        "variable": "t"})

    # route 1: third variational system, Lie closure, obstruction system
    A = build_lnve_airy_family(3, p)
    cert.add("matrix", name="third normal variational system", var="t",
             rows=_mat_str(A))
    coeffs, mats = associated_lie_algebra(A)
    alg = lie_closure(mats)
    cls = classify_lnve_lie_algebra(alg, 3)
    cert.add("lie_dimension", var="t",
             generators=[_mat_str(M) for M in mats],
             coefficients=[str(c) for c in coeffs],
             dimension=alg.dimension, classification=cls)
    Psi, b, space = reduced_form_obstruction(3, p)
    cert.add("rational_system", matrix=_mat_str(Psi),
             rhs=[str(x) for x in b], var="t",
             solvable=space.particular is not None,
             homogeneous_dimension=len(space.basis))
    route1 = (alg.dimension > 5 and space.particular is None)

    # route 2: the scalar criterion
    sub = criterion_airy_family(fam)
    for rec in sub.evidence:
        rec = dict(rec)
        rec.pop("hash", None)
        cert.add(rec.pop("kind"), **rec)
    route2 = sub.verdict == IRREDUCIBLE

    if route1 != route2:
        raise RuntimeError("the two routes disagree")
    cert.add("note", text="both routes agree: Lie dimension %d > 5 and the "
             "scalar obstruction has no rational solution"
             % alg.dimension)
    cert.verdict = IRREDUCIBLE if route1 else sub.verdict
    return cert


# ---------------------------------------------------------------------------
# the Painleve III chain

def _p3_n_basis(params=("mu",)):
    """Constant 9x9 matrices N_1..N_5 spanning the bottom-left block."""
    zero = FieldElem.from_fraction(0, params)
    blocks = [
        [[0, 0, 0, 0], [1, 0, 0, 0]],
        [[1, 0, 0, 0], [0, -1, 0, 0]],
        [[0, 1, 0, 0], [0, 0, -1, 0]],
        [[0, 0, 1, 0], [0, 0, 0, -1]],
        [[0, 0, 0, 1], [0, 0, 0, 0]],
    ]
    out = []
    for blk in blocks:
        M = [[zero] * 9 for _ in range(9)]
        for i in range(2):
            for j in range(4):
                M[7 + i][j] = FieldElem.from_fraction(blk[i][j], params)
        out.append(M)
    return out


def _p3_g_display(params=("mu",)):
    """Right side of the scalar obstruction equation for the P3 chain."""
    return parse_ratfun(
        "8192*mu^4/x + 5120*(4*mu + 1)*mu^4/x^2"
        " + 512*(24*mu^2 + 16*mu - 7)*mu^4/x^3"
        " - 256*(31*mu + 3)*mu^4/x^4 + 768*mu^4/x^5", "x", params)


def _split_cinf_c0(M, var, params):
    from .jets import _cinf_c0
    return _cinf_c0(M)


def _const_to_rat(M, var, params):
    one = RatFun.const(1, var, params)
    return [[x * one for x in row] for row in M]


def p3_psi_and_b(chain=None):
    """(Psi, Psi1, Psi2, b) of the order-3 off-diagonal reduction.

    Psi is the adjoint action of the block part of the third gauged
    variational matrix on N_1..N_5; b collects the off-block
    coefficients.  Entries are rational in x over the parameter mu
    (or specialized, when the chain is).
    """
    if chain is None:
        chain = build_p3_chain(None)
    At3 = chain.At3
    sample = At3[0][0]
    var, params = sample.var, sample.params
    zero = RatFun.zero(var, params)
    diag = [list(r) for r in At3]
    for i in (7, 8):
        for j in range(4):
            diag[i][j] = zero
    off = [[At3[i][j] - diag[i][j] for j in range(9)] for i in range(9)]
    Ns = _p3_n_basis(params)
    one = RatFun.const(1, var, params)
    cols = [[x * one for row in N for x in row] for N in Ns]
    m = [[cols[j][c] for j in range(5)] for c in range(81)]
    b = solve(m, [x for row in off for x in row], one)
    if b is None:
        raise RuntimeError("off-diagonal block outside the N span")
    Psi = adjoint_action_matrix(diag, Ns)
    Cinf, C0 = _split_cinf_c0(Psi, var, params)
    mu = FieldElem.parameter("mu", params) if params else None
    Psi1 = C0
    if mu is not None:
        Psi2 = [[(ci - c0 / mu) / (4 * mu) for ci, c0 in zip(ri, r0)]
                for ri, r0 in zip(Cinf, C0)]
    else:
        Psi2 = None
    return Psi, Psi1, Psi2, b


def check_p3(mus=(Fraction(1, 2),)) -> Certificate:
    """Certificate for the Painleve III case, parameters (2mu-1,-2mu+1,1,-1).

    The structural identities run once over Q(mu); the rational-solution
    obstruction runs at each requested rational non-integer mu.
    """
    mus = [Fraction(m) for m in mus]
    for m in mus:
        if m == 0:
            raise ValueError("Q1 singular")
        if m.denominator == 1:
            wits = exponential_solutions_restricted(_l2_operator(m))
            raise ValueError(
                "exponential solution exists at integer mu=%s: %r"
                % (m, wits[0] if wits else None))

    params = ("mu",)
    var = "x"
    cert = Certificate({
        "equation": "Painleve III, parameters (2*mu-1, -2*mu+1, 1, -1)",
        "name": "P3", "variable": "x",
        "mu_values": [str(m) for m in mus],
    })

    ch = build_p3_chain(None)
    for name in ("A1", "Q1", "At1", "At2", "At3"):
        cert.add("matrix", name=name, var=var, params=list(params),
                 rows=_mat_str(getattr(ch, name)))
    cert.add("trace_zero", matrix=_mat_str(ch.At1), var=var,
             params=list(params))

    # scalar form of the first gauged system is the order-2 operator
    # (the second coordinate is the cyclic one giving the clean form)
    zero1 = RatFun.zero(var, params)
    one1 = RatFun.const(1, var, params)
    op1 = cyclic_vector_scalarize(ch.At1, v=[zero1, one1]).op
    l2 = parse_operator("D^2 - 4 - 4*mu/x", var, params)
    cert.add("operator_identity", a=str(op1), b=str(l2), var=var,
             params=list(params))
    if not (op1 == l2):
        raise RuntimeError("first variational scalar form mismatch")

    # each gauged matrix splits as C_inf + C_0 / x
    consts = {}
    for name in ("At1", "At2", "At3"):
        Ci, C0 = _split_cinf_c0(getattr(ch, name), var, params)
        consts[name] = (Ci, C0)
        cert.add("decomposition", matrix=_mat_str(getattr(ch, name)),
                 cinf=_mat_str(_const_to_rat(Ci, var, params)),
                 c0=_mat_str(_const_to_rat(C0, var, params)),
                 var=var, params=list(params))

    mu = FieldElem.parameter("mu", params)
    one = RatFun.const(1, var, params)

    # order 2: M1 = C0, M2 = Cinf - (1/mu) C0, M3 = (1/(8 mu)) [M1, M2]
    Ci, C0 = consts["At2"]
    M1 = _const_to_rat(C0, var, params)
    M2 = [[(ci - c0 / mu) * one for ci, c0 in zip(ri, r0)]
          for ri, r0 in zip(Ci, C0)]
    M3 = [[x / (8 * mu) for x in row] for row in mat_bracket(M1, M2)]
    negM1 = [[-x for x in row] for row in M1]
    cert.add("bracket_identity", relation="[M1, M3] = -M1",
             a=_mat_str(M1), b=_mat_str(M3), expect=_mat_str(negM1),
             var=var, params=list(params))
    cert.add("bracket_identity", relation="[M2, M3] = M2",
             a=_mat_str(M2), b=_mat_str(M3), expect=_mat_str(M2),
             var=var, params=list(params))
    if mat_bracket(M1, M3) != negM1 or mat_bracket(M2, M3) != M2:
        raise RuntimeError("order-2 bracket table fails")

    # order 3: the Lie algebra generated by the constants has dimension 8
    Ci, C0 = consts["At3"]
    alg = lie_closure([Ci, C0])
    cert.add("lie_dimension", var=var, params=list(params),
             generators=[_mat_str(Ci), _mat_str(C0)],
             dimension=alg.dimension, classification=None)
    if alg.dimension != 8:
        raise RuntimeError("order-3 Lie dimension is %d" % alg.dimension)

    # off-diagonal reduction data
    Psi, Psi1, Psi2, b = p3_psi_and_b(ch)
    P1 = _const_to_rat(Psi1, var, params)
    P2 = _const_to_rat(Psi2, var, params)
    cert.add("matrix", name="Psi1", var=var, params=list(params),
             rows=_mat_str(P1))
    cert.add("matrix", name="Psi2", var=var, params=list(params),
             rows=_mat_str(P2))
    cert.add("vector", name="b", var=var, params=list(params),
             entries=[str(x) for x in b])
    x = RatFun.gen(var, params)
    cert.add("lincomb_identity",
             relation="Psi = (1/mu + 1/x) Psi1 + 4 mu Psi2",
             terms=[[str((1 / mu) * one + 1 / x), _mat_str(P1)],
                    [str((4 * mu) * one), _mat_str(P2)]],
             expect=_mat_str(Psi), var=var, params=list(params))
    comb = [[((1 / mu) * one + 1 / x) * p1 + (4 * mu) * one * p2
             for p1, p2 in zip(r1, r2)] for r1, r2 in zip(P1, P2)]
    if comb != Psi:
        raise RuntimeError("Psi decomposition identity fails")
    Psi3 = mat_bracket(P1, P2)
    cert.add("bracket_identity", relation="Psi3 = [Psi1, Psi2]",
             a=_mat_str(P1), b=_mat_str(P2), expect=_mat_str(Psi3),
             var=var, params=list(params))

    # pointwise obstruction at each requested mu
    all_ok = True
    for m in mus:
        sub = {"mu": m}
        l2m = l2.specialize(sub)
        sv = certify_sl2(l2m)
        cert.add("screen", operator=str(l2m), var=var, tag=sv.tag,
                 reason=sv.reason, mu=str(m))
        if sv.tag != TAG_SL2:
            all_ok = False
            continue
        Psim = [[f.specialize(sub) for f in row] for row in Psi]
        bm = [f.specialize(sub) for f in b]
        space = system_rational_solutions(Psim, bm)
        cert.add("rational_system", matrix=_mat_str(Psim),
                 rhs=[str(f) for f in bm], var=var, mu=str(m),
                 solvable=space.particular is not None,
                 homogeneous_dimension=len(space.basis))
        # sign-adjusted variant (alternating conjugation); must agree
        J = [1, -1, 1, -1, 1]
        bj = [f if s > 0 else -f for f, s in zip(bm, J)]
        space_j = system_rational_solutions(Psim, bj)
        if (space.particular is None) != (space_j.particular is None):
            raise RuntimeError("sign-conjugated obstruction disagrees")
        # scalar route: sym^4 of the order-2 operator against the display
        L4m = sym_power_operator(l2m, 4)
        gm = _p3_g_display().specialize(sub)
        sc = rational_solutions(L4m, gm)
        cert.add("scalar_rational", operator=str(L4m), rhs=str(gm), var=var,
                 mu=str(m), solvable=sc.particular is not None,
                 denominator=str(sc.denominator), degree=sc.degree,
                 homogeneous_dimension=len(sc.basis),
                 particular=None if sc.particular is None
                 else str(sc.particular))
        if (space.particular is None) != (sc.particular is None):
            raise RuntimeError("system and scalar routes disagree at mu=%s"
                               % m)
        if space.particular is not None:
            all_ok = False

    cert.verdict = IRREDUCIBLE if all_ok else INCONCLUSIVE
    return cert


def _l2_operator(m):
    return parse_operator("D^2 - 4 - %s/x" % (4 * Fraction(m)), "x")
