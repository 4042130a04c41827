"""Exact rational arithmetic: dense matrices, Laurent polynomials, series.

Everything here is over the rationals in characteristic zero.  All values
are immutable after construction and safe to share between threads.  Row
reduction uses leftmost-pivot, first-nonzero-row selection so that every
basis chosen downstream is reproducible.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _mpq

QQ = _mpq


def qq(value, den=None):
    """Coerce ints, 'p/q' strings, or rationals to an exact rational."""
    if den is not None:
        return _mpq(value, den)
    if isinstance(value, str):
        value = value.strip()
        if "/" in value:
            p, q = value.split("/")
            return _mpq(int(p), int(q))
        return _mpq(int(value))
    return _mpq(value)


def qq_str(value) -> str:
    """Canonical decimal-rational string, 'p' or 'p/q' with q > 0."""
    v = qq(value)
    if v.denominator == 1:
        return str(v.numerator)
    return "%d/%d" % (v.numerator, v.denominator)


def _as_scalar(x):
    return x if isinstance(x, QQ) else _mpq(x)


class Matrix:
    """Dense rational matrix; entries stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        # entries are coerced exactly; plain ints would hit float division
        entries = [[_as_scalar(x) for x in row] for row in entries]
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("entry grid does not match %dx%d" % (rows, cols))
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if rows:
            cols = len(rows[0])
        elif cols is None:
            raise ValueError("empty row list needs an explicit column count")
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns, rows: int | None = None) -> "Matrix":
        columns = [list(c) for c in columns]
        if columns:
            rows = len(columns[0])
        elif rows is None:
            raise ValueError("empty column list needs an explicit row count")
        return cls(rows, len(columns), [[c[i] for c in columns] for i in range(rows)])

    def column(self, j: int) -> list:
        return [row[j] for row in self.entries]

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [self.column(j) for j in range(self.cols)])

    def apply(self, vec: list) -> list:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ValueError("vector length %d, expected %d" % (len(vec), self.cols))
        out = [qq(0)] * self.rows
        for j, vj in enumerate(vec):
            if vj:
                for i in range(self.rows):
                    e = self.entries[i][j]
                    if e:
                        out[i] += e * vj
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = [self.apply(other.column(j)) for j in range(other.cols)]
        return Matrix.from_columns(cols, rows=self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols,
                      [[a + b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols,
                      [[a - b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.entries, other.entries)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(a == b for ra, rb in zip(self.entries, other.entries)
                   for a, b in zip(ra, rb))

    def __hash__(self):
        return hash((self.rows, self.cols,
                     tuple(tuple(row) for row in self.entries)))

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    def __repr__(self) -> str:
        return "Matrix(%d, %d, %r)" % (self.rows, self.cols,
                                       [[qq_str(x) for x in row] for row in self.entries])


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns.

    Deterministic: pivots are chosen leftmost column first, first nonzero
    row from the top.  Idempotent on its own output.
    """
    a = [list(row) for row in m.entries]
    nr, nc = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        pr = next((i for i in range(r, nr) if a[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            a[r], a[pr] = a[pr], a[r]
        inv = a[r][c]
        if inv != 1:
            a[r] = [x / inv for x in a[r]]
        arow = a[r]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c]
                ai = a[i]
                for j in range(c, nc):
                    if arow[j]:
                        ai[j] -= f * arow[j]
        pivots.append(c)
        r += 1
    return Matrix(nr, nc, a), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> Matrix:
    """Columns spanning the null space of m; column count = cols - rank."""
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    cols = []
    for f in free:
        v = [qq(0)] * m.cols
        v[f] = qq(1)
        for r_idx, pc in enumerate(pivots):
            v[pc] = -red.entries[r_idx][f]
        cols.append(v)
    return Matrix.from_columns(cols, rows=m.cols)


def det(m: Matrix):
    """Exact determinant by Gaussian elimination with row swaps."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    a = [[qq(x) for x in row] for row in m.entries]
    sign = 1
    d = qq(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if a[i][c]), None)
        if pr is None:
            return qq(0)
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            sign = -sign
        piv = a[c][c]
        d *= piv
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / piv
                for j in range(c + 1, n):
                    a[i][j] -= f * a[c][j]
                a[i][c] = qq(0)
    return d * sign


def inverse(m: Matrix) -> Matrix:
    """Exact inverse; raises ValueError on a singular matrix."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = Matrix(n, 2 * n, [list(row) + [1 if i == j else 0 for j in range(n)]
                            for i, row in enumerate(m.entries)])
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return Matrix(n, n, [row[n:] for row in red.entries])


class SpanBuilder:
    """Incremental row-space container for rank and membership queries."""

    def __init__(self, dim: int):
        self.dim = dim
        self._rows: list[list] = []
        self._pivots: list[int] = []

    def _reduce(self, vec: list) -> list:
        v = [qq(x) for x in vec]
        for row, p in zip(self._rows, self._pivots):
            f = v[p]
            if f:
                for j in range(p, self.dim):
                    if row[j]:
                        v[j] -= f * row[j]
        return v

    def add(self, vec: list) -> bool:
        """Add a vector; returns True if it enlarged the span."""
        v = self._reduce(vec)
        p = next((j for j, x in enumerate(v) if x), None)
        if p is None:
            return False
        piv = v[p]
        if piv != 1:
            v = [x / piv for x in v]
        self._rows.append(v)
        self._pivots.append(p)
        return True

    def contains(self, vec: list) -> bool:
        return all(not x for x in self._reduce(vec))

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def basis(self) -> list:
        """Independent spanning vectors for the accumulated span."""
        return [list(r) for r in self._rows]


class LaurentPoly:
    """Laurent polynomial with integer coefficients, sparse on exponents."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        clean = {}
        for e, c in dict(coeffs).items():
            c = int(c)
            if c:
                clean[int(e)] = c
        self.coeffs = clean

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def t(cls, k: int = 1) -> "LaurentPoly":
        return cls({k: 1})

    @classmethod
    def from_list(cls, coeffs, start: int = 0) -> "LaurentPoly":
        return cls({start + i: c for i, c in enumerate(coeffs)})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __getitem__(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    @property
    def min_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no lowest term")
        return min(self.coeffs)

    @property
    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no highest term")
        return max(self.coeffs)

    def value_at_one(self) -> int:
        return sum(self.coeffs.values())

    def div_one_minus_t(self) -> "LaurentPoly | None":
        """Exact quotient by (1 - t), or None if (1 - t) does not divide."""
        if not self.coeffs:
            return LaurentPoly({})
        if self.value_at_one() != 0:
            return None
        lo, hi = self.min_exp, self.max_exp
        out = {}
        acc = 0
        for e in range(lo, hi):
            acc += self.coeffs.get(e, 0)
            if acc:
                out[e] = acc
        return LaurentPoly(out)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                terms.append("%d" % c)
            elif e == 1:
                terms.append("%d*t" % c)
            else:
                terms.append("%d*t^%d" % (c, e))
        return " + ".join(terms).replace("+ -", "- ")


ONE_MINUS_T = LaurentPoly({0: 1, 1: -1})


class RationalSeries:
    """Ratio of Laurent polynomials, viewed as a formal Laurent series."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: LaurentPoly, denominator: LaurentPoly):
        if not denominator:
            raise ValueError("zero denominator")
        self.numerator = numerator
        self.denominator = denominator

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __hash__(self):
        raise TypeError("unhashable (non-canonical representation)")

    def __repr__(self) -> str:
        return "(%r) / (%r)" % (self.numerator, self.denominator)


def expand(series: RationalSeries, n: int) -> list:
    """Coefficients c_0..c_n of the formal expansion, as exact rationals."""
    f, h = series.numerator, series.denominator
    v = h.min_exp
    h0 = qq(h[v])
    coeffs: dict[int, QQ] = {}
    if not f:
        return [qq(0)] * (n + 1)
    lo = f.min_exp - v
    hspan = h.max_exp - v
    for k in range(lo, n + 1):
        s = qq(f[k + v])
        for j in range(1, hspan + 1):
            cj = h[v + j]
            if cj and (k - j) in coeffs:
                s -= cj * coeffs[k - j]
        coeffs[k] = s / h0
    return [coeffs.get(k, qq(0)) for k in range(n + 1)]


def pole_data(series: RationalSeries) -> tuple[int, QQ]:
    """Order of the pole at t = 1 and the leading value there.

    The order is max(0, ...): a series regular at t = 1 reports order 0.
    For order 1 the leading value is the eventual constant coefficient of
    the expansion.
    """
    f, h = series.numerator, series.denominator
    if not f:
        return 0, qq(0)
    a = 0
    while True:
        q = f.div_one_minus_t()
        if q is None:
            break
        f = q
        a += 1
    b = 0
    while True:
        q = h.div_one_minus_t()
        if q is None:
            break
        h = q
        b += 1
    order = max(b - a, 0)
    leading = qq(f.value_at_one()) / qq(h.value_at_one())
    return order, leading


# -- dense univariate polynomials over the rationals (index = degree) --

def poly_trim(p: list) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def poly_degree(p: list) -> int:
    p = poly_trim(p)
    return len(p) - 1 if p else -1


def poly_eval(p: list, x):
    acc = qq(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_mul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [qq(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return out


def poly_sub(p: list, q: list) -> list:
    n = max(len(p), len(q))
    return poly_trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0)
                      for i in range(n)])


def poly_deriv(p: list) -> list:
    return poly_trim([i * c for i, c in enumerate(p)][1:])


def poly_monic(p: list) -> list:
    p = poly_trim(p)
    if not p:
        return p
    lead = p[-1]
    return [qq(c) / lead for c in p]


def poly_gcd(p: list, q: list) -> list:
    """Monic greatest common divisor over the rationals."""
    a, b = poly_trim(p), poly_trim(q)
    while b:
        a, b = b, _poly_rem(a, b)
    return poly_monic(a)


def _poly_rem(a: list, b: list) -> list:
    a = [qq(c) for c in poly_trim(a)]
    b = poly_trim(b)
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and a:
        f = a[-1] / lead
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a = poly_trim(a)
    return a


def poly_squarefree_degree(p: list) -> int:
    """Number of distinct roots over the algebraic closure."""
    p = poly_trim(p)
    if len(p) <= 1:
        return 0
    g = poly_gcd(p, poly_deriv(p))
    return poly_degree(p) - poly_degree(g)


def poly_interpolate(xs: list, ys: list) -> list:
    """Unique polynomial of degree < len(xs) through the given points.

    Newton's divided differences, exact; the xs must be distinct.
    """
    n = len(xs)
    if n != len(ys):
        raise ValueError("mismatched point lists")
    xs = [qq(x) for x in xs]
    dd = [qq(y) for y in ys]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    out: list = []
    basis = [qq(1)]
    for k in range(n):
        if dd[k]:
            if len(basis) > len(out):
                out.extend([qq(0)] * (len(basis) - len(out)))
            for i, b in enumerate(basis):
                out[i] += dd[k] * b
        basis = poly_mul(basis, [-xs[k], qq(1)])
    return poly_trim(out)
