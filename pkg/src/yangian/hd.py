"""Operator realization of the coordinate Weyl/Clifford algebra.

The space is spanned by monomials in m*n variables x_{ai} (symmetric for
theta=+1, exterior for theta=-1), with derivations d_{ai}.  On top of the
raw coordinates sit conjugate pairs (p, q) split at a block index, the
quadratic elements E^_{ai,bj} = q_{ai} p_{bj}, the gl_m action zeta_n, and
the generating-series homomorphism T_ij(u) -> delta_ij + sum_ab X_ab(u) (x)
E^_{ai,bj} with X(u) the inverse-matrix series of u + theta E^t.

Every identity is checked by applying both sides to basis monomials.
Application is exact (vectors are sparse dictionaries, never truncated);
for theta=+1 the assertion set is the "safe window" of monomials whose
degree leaves room for the raising atoms of the identity inside the
realization's degree budget, and for theta=-1 it is the whole space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

import numpy as np

Atom = tuple[str, int, int]  # ("x" | "d", block a, coordinate i)

_MAX_FAILURES = 5


def _accumulate(acc: dict, key, val) -> None:
    cur = acc.get(key, 0) + val
    if cur == 0:
        acc.pop(key, None)
    else:
        acc[key] = cur


class OperatorRealization:
    """Monomial space with exact atom actions and the derived operators."""

    def __init__(self, theta: int, m: int, n: int, p: int = 0,
                 max_degree: int = 6):
        if theta not in (1, -1):
            raise ValueError("theta must be +1 or -1")
        if m < 1 or n < 1:
            raise ValueError("m and n must be positive")
        if not 0 <= p <= m:
            raise ValueError("block split p must lie in 0..m")
        if theta == -1 and m * n > 16:
            raise ValueError("exterior space limited to 16 variables")
        if theta == 1 and max_degree < 2:
            raise ValueError("degree budget must be at least 2")
        self.theta = theta
        self.m = m
        self.n = n
        self.p = p
        self.nvars = m * n
        self.max_degree = m * n if theta == -1 else max_degree

    def var(self, a: int, i: int) -> int:
        return a * self.n + i

    # -- atom actions -----------------------------------------------------

    def apply_atom(self, kind: str, v: int, exps: tuple):
        """(coefficient, new exponents) or None if the monomial dies."""
        if self.theta == 1:
            if kind == "x":
                return 1, exps[:v] + (exps[v] + 1,) + exps[v + 1:]
            e = exps[v]
            if e == 0:
                return None
            return e, exps[:v] + (e - 1,) + exps[v + 1:]
        sign = -1 if (sum(exps[:v]) & 1) else 1
        if kind == "x":
            if exps[v]:
                return None
            return sign, exps[:v] + (1,) + exps[v + 1:]
        if not exps[v]:
            return None
        return sign, exps[:v] + (0,) + exps[v + 1:]

    def apply_word(self, word: tuple, exps: tuple):
        """Apply atoms rightmost-first; (coefficient, exponents) or None."""
        coeff = 1
        for kind, a, i in reversed(word):
            res = self.apply_atom(kind, self.var(a, i), exps)
            if res is None:
                return None
            c, exps = res
            coeff *= c
        return coeff, exps

    # -- conjugate coordinates and quadratic elements ----------------------

    def p_atom(self, a: int, i: int):
        if a < self.p:
            return -self.theta, ("x", a, i)
        return 1, ("d", a, i)

    def q_atom(self, a: int, i: int):
        if a < self.p:
            return 1, ("d", a, i)
        return 1, ("x", a, i)

    def e_hat(self, a: int, i: int, b: int, j: int):
        """(coefficient, word) realizing E^_{ai,bj} = q_{ai} p_{bj}."""
        cq, aq = self.q_atom(a, i)
        cp, ap = self.p_atom(b, j)
        return cq * cp, (aq, ap)

    def zeta_terms(self, a: int, b: int) -> list:
        """Operator terms of the gl_m action: theta delta_ab n/2 + sum_k E^."""
        terms = []
        if a == b:
            terms.append((Fraction(self.theta * self.n, 2), None, ()))
        for k in range(self.n):
            c, word = self.e_hat(a, k, b, k)
            terms.append((c, None, word))
        return terms

    # -- bases --------------------------------------------------------------

    def basis_exps(self, cap: int | None = None) -> list[tuple]:
        """All exponent tuples of degree <= cap (defaults to the budget)."""
        cap = self.max_degree if cap is None else cap
        if self.theta == -1:
            return [e for e in iproduct((0, 1), repeat=self.nvars)
                    if sum(e) <= cap]
        out = []

        def rec(prefix, remaining, budget):
            if remaining == 0:
                out.append(tuple(prefix))
                return
            for e in range(budget + 1):
                rec(prefix + [e], remaining - 1, budget - e)

        rec([], self.nvars, cap)
        return out

    def window_keys(self, raise_count: int, rep_dim: int = 1) -> list:
        """(rep index, exponents) pairs forming the assertion set.

        raise_count is the worst number of degree-raising atoms in the
        identity; for theta=+1 the window keeps that much headroom below
        the degree budget so the identity is asserted where a truncated
        realization would agree with the exact one.
        """
        if self.theta == -1:
            exps = self.basis_exps()
        else:
            exps = self.basis_exps(max(self.max_degree - raise_count, 0))
        return [(w, e) for e in exps for w in range(rep_dim)]


def realize(theta: int, m: int, n: int, p: int = 0,
            max_degree: int = 6) -> OperatorRealization:
    """Construct a realization and verify its canonical relations."""
    r = OperatorRealization(theta, m, n, p, max_degree)
    report = check_canonical_relations(r)
    if not report.ok:
        raise ValueError(f"canonical relations failed: {report.failures[:1]}")
    return r


# ---------------------------------------------------------------------------
# operator-term algebra: a linear operator is a list of
# (coefficient, rep columns | None, atom word) terms acting on sparse
# vectors keyed by (rep index, exponent tuple).


def _matrix_cols(mat: np.ndarray) -> dict:
    """Sparse column map {col: ((row, value), ...)} of a dense matrix."""
    cols = {}
    nrows, ncols = mat.shape
    for c in range(ncols):
        pairs = tuple((r, mat[r, c]) for r in range(nrows) if mat[r, c] != 0)
        if pairs:
            cols[c] = pairs
    return cols


def _compose_cols(c1, c2):
    if c1 is None:
        return c2
    if c2 is None:
        return c1
    out = {}
    for w, pairs in c2.items():
        acc = {}
        for w2, v in pairs:
            for w3, v2 in c1.get(w2, ()):
                acc[w3] = acc.get(w3, 0) + v2 * v
        nz = tuple((ww, vv) for ww, vv in acc.items() if vv != 0)
        if nz:
            out[w] = nz
    return out


def op_scale(terms: list, c) -> list:
    if c == 0:
        return []
    return [(c * c0, cols, word) for c0, cols, word in terms]


def op_mul(t1: list, t2: list) -> list:
    out = []
    for c1, r1, w1 in t1:
        for c2, r2, w2 in t2:
            out.append((c1 * c2, _compose_cols(r1, r2), w1 + w2))
    return out


def op_commutator(t1: list, t2: list) -> list:
    return op_mul(t1, t2) + op_scale(op_mul(t2, t1), -1)


def apply_operator(real: OperatorRealization, terms: list, vec: dict) -> dict:
    out: dict = {}
    for coeff, cols, word in terms:
        for (w, exps), c0 in vec.items():
            res = real.apply_word(word, exps)
            if res is None:
                continue
            cw, e2 = res
            base = coeff * cw * c0
            if base == 0:
                continue
            if cols is None:
                _accumulate(out, (w, e2), base)
            else:
                for w2, val in cols.get(w, ()):
                    _accumulate(out, (w2, e2), base * val)
    return out


def _raise_count(terms: list) -> int:
    worst = 0
    for _, _, word in terms:
        worst = max(worst, sum(1 for kind, _, _ in word if kind == "x"))
    return worst


@dataclass
class IdentityReport:
    name: str
    ok: bool
    checked: int
    window_cap: int | None  # degree cap of the assertion set; None = whole space
    failures: list


class _Checker:
    """Accumulates identity checks over a shared assertion window."""

    def __init__(self, real: OperatorRealization, name: str,
                 raise_budget: int, rep_dim: int = 1):
        self.real = real
        self.name = name
        self.keys = real.window_keys(raise_budget, rep_dim)
        self.cap = (None if real.theta == -1
                    else max(real.max_degree - raise_budget, 0))
        self.checked = 0
        self.failures: list = []

    def expect_zero(self, terms: list, witness: dict) -> None:
        self.checked += 1
        if len(self.failures) >= _MAX_FAILURES:
            return
        for key in self.keys:
            image = apply_operator(self.real, terms, {key: 1})
            if image:
                bad = dict(witness)
                bad["vector"] = key
                bad["image"] = next(iter(image.items()))
                self.failures.append(bad)
                return

    def report(self) -> IdentityReport:
        return IdentityReport(self.name, not self.failures, self.checked,
                              self.cap, self.failures)


# ---------------------------------------------------------------------------
# relation suites


def check_canonical_relations(real: OperatorRealization) -> IdentityReport:
    """d x - theta x d = delta, with the same forms for the p/q pairs.

    The p/q rows are exactly the images of the raw rows under the
    automorphism x -> q, d -> p, so this suite also certifies that the
    automorphism preserves the relations.
    """
    th = real.theta
    chk = _Checker(real, "canonical-relations", raise_budget=2)
    pairs = [(a, i) for a in range(real.m) for i in range(real.n)]

    def single(kind_coeff_atom):
        c, atom = kind_coeff_atom
        return [(c, None, (atom,))]

    for a, i in pairs:
        for b, j in pairs:
            delta = 1 if (a == b and i == j) else 0
            x1 = single((1, ("x", a, i)))
            x2 = single((1, ("x", b, j)))
            d1 = single((1, ("d", a, i)))
            d2 = single((1, ("d", b, j)))
            p1 = single(real.p_atom(a, i))
            q2 = single(real.q_atom(b, j))
            q1 = single(real.q_atom(a, i))
            p2 = single(real.p_atom(b, j))
            witness = {"a": a, "i": i, "b": b, "j": j}
            cases = [
                ("xx", op_mul(x1, x2) + op_scale(op_mul(x2, x1), -th)),
                ("dd", op_mul(d1, d2) + op_scale(op_mul(d2, d1), -th)),
                ("dx", op_mul(d1, x2) + op_scale(op_mul(x2, d1), -th)
                 + [(-delta, None, ())]),
                ("qq", op_mul(q1, q2) + op_scale(op_mul(q2, q1), -th)),
                ("pp", op_mul(p1, p2) + op_scale(op_mul(p2, p1), -th)),
                ("pq", op_mul(p1, q2) + op_scale(op_mul(q2, p1), -th)
                 + [(-delta, None, ())]),
            ]
            for tag, expr in cases:
                chk.expect_zero(expr, {"relation": tag, **witness})
    return chk.report()


def _e_hat_op(real: OperatorRealization, a, i, b, j) -> list:
    c, word = real.e_hat(a, i, b, j)
    return [(c, None, word)]


def check_e_relations(real: OperatorRealization) -> IdentityReport:
    """The three displayed exchange relations of the E^ elements."""
    th = real.theta
    chk = _Checker(real, "quadratic-relations", raise_budget=4)
    idx = [(a, i) for a in range(real.m) for i in range(real.n)]
    for a, i in idx:
        for b, j in idx:
            e1 = _e_hat_op(real, a, i, b, j)
            for c, k in idx:
                dbc_jk = 1 if (b == c and j == k) else 0
                dab_ij = 1 if (a == b and i == j) else 0
                for d, l in idx:
                    dad_il = 1 if (a == d and i == l) else 0
                    e2 = _e_hat_op(real, c, k, d, l)
                    cross1 = _e_hat_op(real, c, k, b, j)
                    cross2 = _e_hat_op(real, a, i, d, l)
                    mixed = op_mul(cross1, cross2)
                    witness = {"ai": (a, i), "bj": (b, j),
                               "ck": (c, k), "dl": (d, l)}
                    rel1 = (op_commutator(e1, e2)
                            + op_scale(cross2, -dbc_jk)
                            + op_scale(cross1, dad_il))
                    rel2 = (op_mul(e1, e2) + op_scale(mixed, -th)
                            + op_scale(cross2, -dbc_jk)
                            + op_scale(e2, th * dab_ij))
                    rel3 = (op_mul(e2, e1) + op_scale(mixed, -th)
                            + op_scale(cross1, -dad_il)
                            + op_scale(e2, th * dab_ij))
                    chk.expect_zero(rel1, {"relation": "commutator", **witness})
                    chk.expect_zero(rel2, {"relation": "straighten-left", **witness})
                    chk.expect_zero(rel3, {"relation": "straighten-right", **witness})
    return chk.report()


def check_zeta(real: OperatorRealization) -> IdentityReport:
    """zeta_n is a gl_m homomorphism: [z(E_ab), z(E_cd)] matches gl_m."""
    chk = _Checker(real, "zeta-homomorphism", raise_budget=4)
    m = real.m
    zeta = {(a, b): real.zeta_terms(a, b)
            for a in range(m) for b in range(m)}
    for a in range(m):
        for b in range(m):
            for c in range(m):
                for d in range(m):
                    expr = op_commutator(zeta[a, b], zeta[c, d])
                    if b == c:
                        expr = expr + op_scale(zeta[a, d], -1)
                    if d == a:
                        expr = expr + zeta[c, b]
                    chk.expect_zero(expr, {"abcd": (a, b, c, d)})
    return chk.report()


# ---------------------------------------------------------------------------
# the inverse-matrix series and its identities in a gl_m representation


def defining_rep(m: int) -> dict:
    rep = {}
    for a in range(m):
        for b in range(m):
            mat = np.zeros((m, m), dtype=object)
            mat[a, b] = 1
            rep[a, b] = mat
    return rep


def tensor_square_rep(m: int) -> dict:
    eye = np.eye(m, dtype=object)
    base = defining_rep(m)
    return {key: np.kron(mat, eye) + np.kron(eye, mat)
            for key, mat in base.items()}


@dataclass
class XSeries:
    """Coefficients of the inverse-matrix series in a representation.

    coeffs[k][a, b] is the representing matrix of the u^{-k-1} coefficient
    of entry (a, b); coeffs[0] is the identity coefficient and
    coeffs[1][a, b] = -theta rep(E_ba).
    """

    theta: int
    m: int
    order: int
    rep: dict
    rep_dim: int
    coeffs: list

    def cols(self, k: int, a: int, b: int):
        return _matrix_cols(self.coeffs[k][a, b])


def x_series(theta: int, m: int, order: int, rep: dict | None = None) -> XSeries:
    """Expand (u + theta E^t)^{-1} order by order in a representation."""
    rep = defining_rep(m) if rep is None else rep
    dim = rep[0, 0].shape[0]
    eye = np.eye(dim, dtype=object)
    zero = np.zeros((dim, dim), dtype=object)
    coeffs = []
    first = {}
    for a in range(m):
        for b in range(m):
            first[a, b] = eye.copy() if a == b else zero.copy()
    coeffs.append(first)
    for _ in range(order + 1):
        prev = coeffs[-1]
        nxt = {}
        for a in range(m):
            for b in range(m):
                acc = zero.copy()
                for c in range(m):
                    acc = acc + rep[c, a] @ prev[c, b]
                nxt[a, b] = -theta * acc
        coeffs.append(nxt)
    return XSeries(theta, m, order, rep, dim, coeffs)


def check_x_identities(series: XSeries) -> IdentityReport:
    """Exchange identity (u-v) X(u)X(v) = X(v) - X(u) and the induced
    generator relation, coefficient-by-coefficient through the order."""
    th, m, K = series.theta, series.m, series.order
    coeffs = series.coeffs
    dim = series.rep_dim
    zero = np.zeros((dim, dim), dtype=object)

    def x(k, a, b):
        return zero if k < 0 else coeffs[k][a, b]

    def prod(k, l, a, b):
        if k < 0 or l < 0:
            return zero
        acc = zero
        for c in range(m):
            acc = acc + coeffs[k][a, c] @ coeffs[l][c, b]
        return acc

    checked = 0
    failures = []
    for r in range(K + 1):
        for s in range(K + 1 - r):
            if r == 0 and s == 0:
                continue
            for a in range(m):
                for b in range(m):
                    lhs = prod(r, s - 1, a, b) - prod(r - 1, s, a, b)
                    rhs = zero
                    if r == 0:
                        rhs = rhs + x(s - 1, a, b)
                    if s == 0:
                        rhs = rhs - x(r - 1, a, b)
                    checked += 1
                    if not (lhs == rhs).all():
                        failures.append({"identity": "exchange",
                                         "rs": (r, s), "ab": (a, b)})
                    if len(failures) >= _MAX_FAILURES:
                        return IdentityReport("series-identities", False,
                                              checked, None, failures)
            for a in range(m):
                for b in range(m):
                    for c in range(m):
                        for d in range(m):
                            lhs = ((x(r, a, b) @ x(s - 1, c, d)
                                    - x(s - 1, c, d) @ x(r, a, b))
                                   - (x(r - 1, a, b) @ x(s, c, d)
                                      - x(s, c, d) @ x(r - 1, a, b)))
                            rhs = th * (x(r - 1, c, b) @ x(s - 1, a, d)
                                        - x(s - 1, c, b) @ x(r - 1, a, d))
                            checked += 1
                            if not (lhs == rhs).all():
                                failures.append({"identity": "generator",
                                                 "rs": (r, s),
                                                 "abcd": (a, b, c, d)})
                            if len(failures) >= _MAX_FAILURES:
                                return IdentityReport("series-identities",
                                                      False, checked, None,
                                                      failures)
    return IdentityReport("series-identities", not failures, checked, None,
                          failures)


# ---------------------------------------------------------------------------
# the generating-series homomorphism


def alpha_coefficient(real: OperatorRealization, series: XSeries,
                      r: int, i: int, j: int) -> list:
    """Image of the u^{-r} generator coefficient as operator terms."""
    if r == 0:
        return [(1, None, ())] if i == j else []
    terms = []
    for a in range(real.m):
        for b in range(real.m):
            cols = series.cols(r - 1, a, b)
            if not cols:
                continue
            ce, word = real.e_hat(a, i, b, j)
            terms.append((ce, cols, word))
    return terms


@dataclass
class AlphaReport:
    ok: bool
    yangian: IdentityReport
    commutant: IdentityReport


def check_alpha(real: OperatorRealization, order: int,
                rep: dict | None = None,
                series: XSeries | None = None) -> AlphaReport:
    """Verify the generating-series homomorphism through the given order.

    Checks the exchange relation between generator coefficients at every
    u^{-r} v^{-s} with r + s <= order, and that all coefficients commute
    with the combined gl_m action (representation part plus zeta part).
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    if series is None:
        series = x_series(real.theta, real.m, order, rep)
    n = real.n
    tcache = {}

    def t(r, i, j):
        key = (r, i, j)
        if key not in tcache:
            tcache[key] = alpha_coefficient(real, series, r, i, j)
        return tcache[key]

    yang = _Checker(real, "generator-exchange", raise_budget=4,
                    rep_dim=series.rep_dim)
    for r in range(order + 1):
        for s in range(order + 1 - r):
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        for l in range(n):
                            expr = (op_commutator(t(r + 1, i, j), t(s, k, l))
                                    + op_scale(
                                        op_commutator(t(r, i, j),
                                                      t(s + 1, k, l)), -1)
                                    + op_scale(op_mul(t(r, k, j), t(s, i, l)), -1)
                                    + op_mul(t(s, k, j), t(r, i, l)))
                            yang.expect_zero(
                                expr, {"rs": (r, s), "ijkl": (i, j, k, l)})

    comm = _Checker(real, "gl-commutant", raise_budget=4,
                    rep_dim=series.rep_dim)
    for c in range(real.m):
        for d in range(real.m):
            glemb = [(1, _matrix_cols(series.rep[c, d]), ())]
            glemb = glemb + real.zeta_terms(c, d)
            for r in range(1, order + 1):
                for i in range(n):
                    for j in range(n):
                        expr = op_commutator(glemb, t(r, i, j))
                        comm.expect_zero(
                            expr, {"cd": (c, d), "r": r, "ij": (i, j)})

    yang_report = yang.report()
    comm_report = comm.report()
    return AlphaReport(yang_report.ok and comm_report.ok,
                       yang_report, comm_report)
