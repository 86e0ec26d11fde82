"""Exact rational arithmetic: polynomials, rational functions, dense matrices.

All scalars are `fractions.Fraction`; nothing in this module ever rounds.
Elimination is fraction-free (Bareiss one-step) on integer-scaled rows, so
intermediate entries stay integers; results are converted back to Fraction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Rational = Fraction


def rat(x) -> Fraction:
    """Coerce ints, strings like '3/4' and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Dense univariate polynomial over Fraction, low-degree-first coefficients.

    Immutable; trailing zero coefficients are stripped, the zero polynomial
    has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def const(c) -> "Poly":
        return Poly([rat(c)])

    @staticmethod
    def x(power: int = 1) -> "Poly":
        return Poly([0] * power + [1])

    @staticmethod
    def from_roots(roots: Iterable) -> "Poly":
        p = Poly([1])
        for r in roots:
            p = p * Poly([-rat(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (Fraction(1),)

    def lead(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = Poly([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, u) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * u + c
        return acc

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        d, lead = other.degree, other.lead()
        while len(rem) - 1 >= d and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            f = rem[-1] / lead
            quo[k] = f
            for i in range(len(other.coeffs)):
                rem[k + i] -= f * other.coeffs[i]
            rem.pop()
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.lead())

    def shift(self, c) -> "Poly":
        """Return p(u + c)."""
        c = rat(c)
        out = Poly()
        base = Poly([c, 1])
        for k in reversed(range(len(self.coeffs))):
            out = out * base + Poly.const(self.coeffs[k])
        return out

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def format_poly(p: Poly, var: str = "u") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in reversed(range(len(p.coeffs))):
        c = p.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            term = str(c)
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            term = f"{mag}{var}" + (f"^{k}" if k > 1 else "")
            if c < 0:
                term = "-" + term
        if parts and not term.startswith("-"):
            parts.append("+")
        elif term.startswith("-"):
            parts.append("-")
            term = term[1:]
        parts.append(term)
    return " ".join(parts)


def poly_rational_roots(p: Poly) -> tuple[list[Fraction], Poly]:
    """All rational roots of p with multiplicity, plus the rootless cofactor.

    Roots are returned sorted ascending.  Exact: candidates come from the
    rational root theorem on the integer-cleared polynomial and each is
    verified by evaluation before deflating.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has every root")
    roots: list[Fraction] = []
    # strip roots at 0 first
    k = 0
    while k <= p.degree and p.coeffs[k] == 0:
        k += 1
    roots.extend([Fraction(0)] * k)
    q = Poly(p.coeffs[k:])
    while q.degree >= 1:
        scale = math.lcm(*(c.denominator for c in q.coeffs))
        ints = [int(c * scale) for c in q.coeffs]
        a0, lead = abs(ints[0]), abs(ints[-1])
        found = None
        for num in sorted(_divisors(a0)):
            for den in sorted(_divisors(lead)):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if q(cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        while q(found) == 0 and q.degree >= 1:
            roots.append(found)
            q = q // Poly([-found, 1])
    return sorted(roots), q


def _divisors(n: int) -> list[int]:
    if n == 0:
        return []
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


# ---------------------------------------------------------------------------
# rational functions


class RatFunc:
    """Quotient of two Polys, kept in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=Poly([1])):
        if isinstance(num, (int, Fraction)):
            num = Poly.const(num)
        if isinstance(den, (int, Fraction)):
            den = Poly.const(den)
        n, d = ratfunc_normalize(num, den)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def of_poly(p: Poly) -> "RatFunc":
        return RatFunc(p, Poly([1]))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFunc(other if isinstance(other, Poly) else Poly.const(other))
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        return self + (-_as_ratfunc(other))

    def __rsub__(self, other) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return _as_ratfunc(other) / self

    def __call__(self, u) -> Fraction:
        d = self.den(u)
        if d == 0:
            raise ZeroDivisionError(f"pole at u={u}")
        return self.num(u) / d

    def limit_at_infinity(self) -> Fraction | None:
        """Value at u -> oo, or None if unbounded."""
        if self.num.degree > self.den.degree:
            return None
        if self.num.degree < self.den.degree:
            return Fraction(0)
        return self.num.lead() / self.den.lead()

    def __repr__(self) -> str:
        if self.den.is_one():
            return f"RatFunc({format_poly(self.num)})"
        return f"RatFunc(({format_poly(self.num)}) / ({format_poly(self.den)}))"


def _as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc(x)
    return RatFunc(Poly.const(rat(x)))


def ratfunc_normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Lowest terms with monic denominator; zero is 0/1."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return Poly(), Poly([1])
    g = poly_gcd(num, den)
    if g.degree > 0:
        num, den = num // g, den // g
    lead = den.lead()
    return num * (1 / lead), den * (1 / lead)


# ---------------------------------------------------------------------------
# dense matrices


class RatMatrix:
    """Dense exact matrix over Fraction.

    Stored as a numpy object array; treated as a value (public operations
    never mutate in place).
    """

    __slots__ = ("data",)

    def __init__(self, rows):
        if isinstance(rows, np.ndarray):
            arr = rows.astype(object)
            if arr.ndim != 2:
                raise ValueError("need a 2-d array")
            data = np.empty(arr.shape, dtype=object)
            for i in range(arr.shape[0]):
                for j in range(arr.shape[1]):
                    data[i, j] = rat(arr[i, j])
        else:
            rows = [list(r) for r in rows]
            if not rows:
                raise ValueError("matrix needs at least one row")
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            data = np.empty((len(rows), width), dtype=object)
            for i, r in enumerate(rows):
                for j, x in enumerate(r):
                    data[i, j] = rat(x)
        object.__setattr__(self, "data", data)

    def __setattr__(self, *a):
        raise AttributeError("RatMatrix is immutable; build a new one")

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        return RatMatrix([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(r: int, c: int) -> "RatMatrix":
        return RatMatrix([[Fraction(0)] * c for _ in range(r)])

    @staticmethod
    def from_flat(r: int, c: int, entries: Sequence) -> "RatMatrix":
        entries = list(entries)
        if len(entries) != r * c:
            raise ValueError("wrong number of entries")
        return RatMatrix([entries[i * c:(i + 1) * c] for i in range(r)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def nrows(self) -> int:
        return self.data.shape[0]

    @property
    def ncols(self) -> int:
        return self.data.shape[1]

    def __getitem__(self, ij) -> Fraction:
        return self.data[ij]

    def row(self, i: int) -> list[Fraction]:
        return list(self.data[i])

    def col(self, j: int) -> list[Fraction]:
        return list(self.data[:, j])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and bool((self.data == other.data).all())

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.data.flat)

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix(self.data + other.data)

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix(self.data - other.data)

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(-self.data)

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} x {other.shape}")
            return RatMatrix(self.data @ other.data)
        return RatMatrix(self.data * rat(other))

    def __rmul__(self, other):
        return self * other

    def scale(self, c) -> "RatMatrix":
        return self * rat(c)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.data.T)

    def kron(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix(np.kron(self.data, other.data))

    def apply(self, vec: Sequence) -> list[Fraction]:
        v = np.array([rat(x) for x in vec], dtype=object)
        return list(self.data @ v)

    def map(self, f) -> "RatMatrix":
        out = np.empty(self.shape, dtype=object)
        for i in range(self.nrows):
            for j in range(self.ncols):
                out[i, j] = f(self.data[i, j])
        return RatMatrix(out)

    def rref(self) -> tuple["RatMatrix", list[int]]:
        """Reduced row echelon form over Fraction and its pivot columns."""
        m = self.data.copy()
        rows, cols = m.shape
        pivots = []
        r = 0
        for c in range(cols):
            pr = next((i for i in range(r, rows) if m[i, c] != 0), None)
            if pr is None:
                continue
            if pr != r:
                m[[r, pr]] = m[[pr, r]]
            m[r] = m[r] / m[r, c]
            for i in range(rows):
                if i != r and m[i, c] != 0:
                    m[i] = m[i] - m[i, c] * m[r]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return RatMatrix(m), pivots

    def rank(self) -> int:
        return len(_echelon_int(_integerize(self.data))[1])

    def nullspace(self) -> list[list[Fraction]]:
        return nullspace(self)

    def solve(self, rhs: Sequence) -> list[Fraction] | None:
        """One exact solution of A x = rhs, or None if inconsistent."""
        b = [rat(x) for x in rhs]
        if len(b) != self.nrows:
            raise ValueError("rhs length mismatch")
        aug = np.empty((self.nrows, self.ncols + 1), dtype=object)
        aug[:, :self.ncols] = self.data
        for i, x in enumerate(b):
            aug[i, self.ncols] = x
        red, pivots = RatMatrix(aug).rref()
        if self.ncols in pivots:
            return None
        x = [Fraction(0)] * self.ncols
        for r, c in enumerate(pivots):
            x[c] = red[r, self.ncols]
        return x

    def inverse(self) -> "RatMatrix":
        if self.nrows != self.ncols:
            raise ValueError("not square")
        n = self.nrows
        aug = np.empty((n, 2 * n), dtype=object)
        aug[:, :n] = self.data
        aug[:, n:] = RatMatrix.identity(n).data
        red, pivots = RatMatrix(aug).rref()
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        return RatMatrix(red.data[:, n:])

    def __repr__(self) -> str:
        return f"RatMatrix({self.nrows}x{self.ncols})"


def nullspace(mat: RatMatrix | np.ndarray) -> list[list[Fraction]]:
    """Canonical basis of the right nullspace.

    Forward pass is fraction-free (Bareiss) on integer-scaled rows; the basis
    has an identity block on the free columns (one vector per free column, in
    column order), which makes the output deterministic.
    """
    data = mat.data if isinstance(mat, RatMatrix) else mat
    m = _integerize(data)
    ech, piv_cols = _echelon_int(m)
    cols = data.shape[1]
    free = [c for c in range(cols) if c not in piv_cols]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r in reversed(range(len(piv_cols))):
            pc = piv_cols[r]
            s = Fraction(0)
            for c in range(pc + 1, cols):
                if v[c] != 0 and ech[r, c] != 0:
                    s += Fraction(int(ech[r, c])) * v[c]
            v[pc] = -s / Fraction(int(ech[r, pc]))
        basis.append(v)
    return basis


def _integerize(data: np.ndarray) -> np.ndarray:
    """Scale each row to a primitive integer vector (exact)."""
    rows, cols = data.shape
    out = np.zeros((rows, cols), dtype=object)
    for i in range(rows):
        scale = 1
        for x in data[i]:
            d = x.denominator if isinstance(x, Fraction) else 1
            scale = scale * (d // math.gcd(scale, d))
        ints = [int(x * scale) for x in data[i]]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out[i] = ints
    return out


def _echelon_int(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Fraction-free (one-step Bareiss) row echelon form of an integer matrix.

    Returns the echelon rows (integers) and the pivot column list.  Division
    by the previous pivot is exact by the Bareiss minor identity.
    """
    m = m.copy()
    rows, cols = m.shape
    piv_cols: list[int] = []
    prev = 1
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if m[i, c] != 0), None)
        if pr is None:
            continue
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        pivot = m[r, c]
        if r + 1 < rows:
            block = m[r + 1:, c:]
            m[r + 1:, c:] = (block * pivot - np.outer(m[r + 1:, c], m[r, c:])) // prev
        prev = pivot
        piv_cols.append(c)
        r += 1
        if r == rows:
            break
    return m[:r], piv_cols


# ---------------------------------------------------------------------------
# matrix polynomials


class MatPoly:
    """Polynomial with RatMatrix coefficients, low-degree first.

    The zero polynomial keeps its shape but has no stored coefficients.
    """

    __slots__ = ("shape", "coeffs")

    def __init__(self, shape: tuple[int, int], coeffs: Iterable = ()):
        cs = list(coeffs)
        for c in cs:
            if c.shape != shape:
                raise ValueError("coefficient shape mismatch")
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("MatPoly is immutable")

    @staticmethod
    def constant(mat: RatMatrix) -> "MatPoly":
        return MatPoly(mat.shape, [mat])

    @staticmethod
    def scalar(p: Poly, dim: int) -> "MatPoly":
        eye = RatMatrix.identity(dim)
        return MatPoly((dim, dim), [eye * c for c in p.coeffs])

    @staticmethod
    def zero(shape: tuple[int, int]) -> "MatPoly":
        return MatPoly(shape, [])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> RatMatrix:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return RatMatrix.zeros(*self.shape)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatPoly):
            return NotImplemented
        return self.shape == other.shape and self.coeffs == other.coeffs

    def __add__(self, other: "MatPoly") -> "MatPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return MatPoly(self.shape, [self.coeff(k) + other.coeff(k) for k in range(n)])

    def __sub__(self, other: "MatPoly") -> "MatPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return MatPoly(self.shape, [self.coeff(k) - other.coeff(k) for k in range(n)])

    def __neg__(self) -> "MatPoly":
        return MatPoly(self.shape, [-c for c in self.coeffs])

    def __mul__(self, other) -> "MatPoly":
        if isinstance(other, MatPoly):
            if self.is_zero() or other.is_zero():
                return MatPoly((self.shape[0], other.shape[1]))
            out = [RatMatrix.zeros(self.shape[0], other.shape[1])
                   for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return MatPoly((self.shape[0], other.shape[1]), out)
        if isinstance(other, Poly):
            return MatPoly(self.shape,
                           [sum((self.coeff(i) * other[k - i] for i in range(k + 1)),
                                start=RatMatrix.zeros(*self.shape))
                            for k in range(len(self.coeffs) + len(other.coeffs))])
        return MatPoly(self.shape, [c * rat(other) for c in self.coeffs])

    def kron(self, other: "MatPoly") -> "MatPoly":
        shape = (self.shape[0] * other.shape[0], self.shape[1] * other.shape[1])
        if self.is_zero() or other.is_zero():
            return MatPoly(shape)
        out = [RatMatrix.zeros(*shape)
               for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a.kron(b)
        return MatPoly(shape, out)

    def __call__(self, u) -> RatMatrix:
        acc = RatMatrix.zeros(*self.shape)
        for c in reversed(self.coeffs):
            acc = acc * rat(u) + c
        return acc

    def shift(self, c) -> "MatPoly":
        """Return P(u + c)."""
        c = rat(c)
        out = MatPoly.zero(self.shape)
        for k in reversed(range(len(self.coeffs))):
            if out.is_zero():
                out = MatPoly.constant(self.coeffs[k])
                continue
            # out * (u + c) + coeff_k, Horner style
            shifted = [RatMatrix.zeros(*self.shape)
                       for _ in range(len(out.coeffs) + 1)]
            for i, m in enumerate(out.coeffs):
                shifted[i] = shifted[i] + m * c
                shifted[i + 1] = shifted[i + 1] + m
            out = MatPoly(self.shape, shifted) + MatPoly.constant(self.coeffs[k])
        return out

    def apply(self, vec: Sequence) -> list[list[Fraction]]:
        """Coefficient vectors of P(u) v, one list per power of u."""
        return [c.apply(vec) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"MatPoly({self.shape[0]}x{self.shape[1]}, deg {self.degree})"


# ---------------------------------------------------------------------------
# integer matrix kernels (exact; int64 fast path under a proven bound)

_INT64_LIMIT = 2 ** 62


def int_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product of integer object-dtype matrices.

    Uses numpy int64 matmul when k * max|a| * max|b| provably fits, else
    falls back to big-int object matmul.
    """
    if a.size == 0 or b.size == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=object)
    ma = max(abs(int(x)) for x in a.flat)
    mb = max(abs(int(x)) for x in b.flat)
    k = a.shape[1]
    if ma and mb and k * ma * mb < _INT64_LIMIT:
        prod = a.astype(np.int64) @ b.astype(np.int64)
        return prod.astype(object)
    return a @ b


def kron_object(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(a, b)
