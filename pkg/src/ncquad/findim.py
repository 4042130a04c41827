"""Finite-dimensional associative algebras and their structure analysis.

Radical computation uses the trace-form criterion, valid over fields of
characteristic zero: x lies in the radical exactly when trace(L_{x y})
vanishes for every y.  Every radical returned here is cross-verified to
be a nilpotent two-sided ideal with semisimple quotient, so a failure
of that suite indicates an arithmetic bug rather than a mathematical
edge case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import Matrix, SpanBuilder, det, inverse, kernel_basis, qq


class FinDimAlgebra:
    """Structure constants of a finite-dimensional unital algebra.

    ``structure[i][j]`` holds the coordinates of basis_i * basis_j.  The
    constructor verifies that the identity is a two-sided unit and that
    associativity holds on every basis triple, exactly.
    """

    __slots__ = ("labels", "structure", "unit")

    def __init__(self, labels, structure, unit):
        self.labels = tuple(str(x) for x in labels)
        n = len(self.labels)
        self.structure = [[[qq(c) for c in structure[i][j]] for j in range(n)]
                          for i in range(n)]
        self.unit = [qq(c) for c in unit]
        if len(self.unit) != n or any(len(self.structure[i][j]) != n
                                      for i in range(n) for j in range(n)):
            raise ValueError("structure constant shape mismatch")
        self._validate()

    @property
    def dim(self) -> int:
        return len(self.labels)

    def basis_vector(self, i: int) -> list:
        return [qq(1) if k == i else qq(0) for k in range(self.dim)]

    def multiply(self, x: list, y: list) -> list:
        n = self.dim
        out = [qq(0)] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.structure[i]
            for j, yj in enumerate(y):
                if yj:
                    c = xi * yj
                    for k, s in enumerate(row[j]):
                        if s:
                            out[k] += c * s
        return out

    def left_matrix(self, x: list) -> Matrix:
        """Matrix of left multiplication by x on the basis."""
        cols = [self.multiply(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(cols, rows=self.dim)

    def _validate(self):
        n = self.dim
        for i in range(n):
            e = self.basis_vector(i)
            if self.multiply(self.unit, e) != e or self.multiply(e, self.unit) != e:
                raise ValueError("identity vector is not a two-sided unit")
        st = self.structure
        for i in range(n):
            for j in range(n):
                cij = st[i][j]
                for k in range(n):
                    left = [qq(0)] * n
                    for v, c in enumerate(cij):
                        if c:
                            for t, s in enumerate(st[v][k]):
                                if s:
                                    left[t] += c * s
                    right = [qq(0)] * n
                    for v, c in enumerate(st[j][k]):
                        if c:
                            for t, s in enumerate(st[i][v]):
                                if s:
                                    right[t] += c * s
                    if left != right:
                        raise ValueError(
                            "associativity fails on basis triple (%d, %d, %d)" % (i, j, k))

    def __repr__(self) -> str:
        return "FinDimAlgebra(dim=%d, labels=%r)" % (self.dim, list(self.labels))


def trace_gram(alg: FinDimAlgebra) -> Matrix:
    """Gram matrix T[i][j] = trace of left multiplication by basis_i basis_j."""
    n = alg.dim
    # trace of L_{b_v} for each v; traces extend linearly to products
    tr = [sum(alg.structure[v][j][j] for j in range(n)) for v in range(n)]
    return Matrix(n, n, [[sum(c * tr[v] for v, c in enumerate(alg.structure[i][j]) if c)
                          for j in range(n)] for i in range(n)])


def radical(alg: FinDimAlgebra) -> Matrix:
    """Columns spanning the Jacobson radical (char-0 trace criterion).

    Cross-verified: the subspace is a two-sided ideal, some power of it
    vanishes, and the quotient trace form is nondegenerate.
    """
    rad = kernel_basis(trace_gram(alg))
    _cross_verify_radical(alg, rad)
    return rad


def _cross_verify_radical(alg: FinDimAlgebra, rad: Matrix):
    n = alg.dim
    rad_cols = rad.columns()
    span = SpanBuilder(n)
    for c in rad_cols:
        span.add(c)
    for c in rad_cols:
        for i in range(n):
            e = alg.basis_vector(i)
            if not span.contains(alg.multiply(e, c)) or not span.contains(alg.multiply(c, e)):
                raise RuntimeError("radical cross-check failed: not a two-sided ideal")
    power = rad_cols
    while power:
        nxt = SpanBuilder(n)
        for u in power:
            for r in rad_cols:
                nxt.add(alg.multiply(u, r))
        if nxt.rank >= len(power):
            raise RuntimeError("radical cross-check failed: ideal is not nilpotent")
        power = nxt.basis
    quo, _ = quotient_by_subspace(alg, rad)
    if quo.dim and det(trace_gram(quo)) == 0:
        raise RuntimeError("radical cross-check failed: quotient trace form degenerate")


def quotient_by_subspace(alg: FinDimAlgebra, ideal: Matrix):
    """Quotient algebra by a two-sided ideal given as columns.

    Returns (quotient, project) where project maps coordinate vectors of
    the original algebra onto quotient coordinates.  The complement basis
    is chosen deterministically from the standard basis.
    """
    n = alg.dim
    span = SpanBuilder(n)
    for c in ideal.columns():
        span.add(c)
    complement = []
    for j in range(n):
        e = alg.basis_vector(j)
        if span.add(e):
            complement.append((j, e))
    p_cols = ideal.columns() + [e for _, e in complement]
    basis_change = Matrix.from_columns(p_cols, rows=n)
    inv = inverse(basis_change)
    r = ideal.cols

    def project(vec: list) -> list:
        coords = inv.apply(vec)
        return coords[r:]

    labels = [alg.labels[j] for j, _ in complement]
    structure = [[project(alg.multiply(e_i, e_j)) for _, e_j in complement]
                 for _, e_i in complement]
    unit = project(alg.unit)
    quo = FinDimAlgebra(labels, structure, unit) if complement else _zero_algebra()
    return quo, project


def _zero_algebra() -> FinDimAlgebra:
    raise RuntimeError("quotient collapsed to zero; unital algebra expected")


def center_basis(alg: FinDimAlgebra) -> Matrix:
    """Columns spanning {x : xb = bx for all basis b}."""
    n = alg.dim
    rows = []
    for i in range(n):
        # row block: column u holds structure[u][i] - structure[i][u]
        block = [[alg.structure[u][i][k] - alg.structure[i][u][k] for u in range(n)]
                 for k in range(n)]
        rows.extend(block)
    return kernel_basis(Matrix.from_rows(rows, cols=n))


def commutator_ideal(alg: FinDimAlgebra) -> SpanBuilder:
    """Two-sided ideal generated by all commutators of basis elements."""
    n = alg.dim
    span = SpanBuilder(n)
    frontier = []
    for i in range(n):
        for j in range(i + 1, n):
            c = [a - b for a, b in zip(alg.structure[i][j], alg.structure[j][i])]
            if span.add(c):
                frontier.append(c)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                e = alg.basis_vector(i)
                for w in (alg.multiply(e, v), alg.multiply(v, e)):
                    if span.add(w):
                        nxt.append(w)
        frontier = nxt
    return span


def one_dim_reps_absent(alg: FinDimAlgebra, rad: Matrix | None = None) -> bool:
    """True when rad + (ideal generated by commutators) is everything.

    Equivalent to the absence of one-dimensional representations over
    any field extension.
    """
    if rad is None:
        rad = radical(alg)
    span = commutator_ideal(alg)
    for c in rad.columns():
        span.add(c)
    return span.rank == alg.dim


@dataclass
class AnalysisReport:
    """Summary invariants of a finite-dimensional algebra."""

    dim: int
    radical_dim: int
    center_dim: int
    ss_center_dim: int
    one_dim_reps_absent: bool
    ruling_count: int | None
    smooth: bool

    def invariants(self) -> tuple:
        return (self.dim, self.radical_dim, self.center_dim, self.ss_center_dim)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "radical_dim": self.radical_dim,
            "center_dim": self.center_dim,
            "ss_center_dim": self.ss_center_dim,
            "one_dim_reps_absent": self.one_dim_reps_absent,
            "ruling_count": "n/a" if self.ruling_count is None else self.ruling_count,
            "smooth": self.smooth,
        }


def analyze(alg: FinDimAlgebra) -> AnalysisReport:
    """Radical, center, semisimplicity, ruling count, smoothness verdict.

    The ruling count equals the center dimension of the semisimple
    quotient when the algebra is 8-dimensional with no one-dimensional
    representations: every geometric simple block is then a 2x2 matrix
    block over the closure and contributes exactly one central line.
    """
    rad = radical(alg)
    quo, _ = quotient_by_subspace(alg, rad)
    center_dim = center_basis(alg).cols
    ss_center_dim = center_basis(quo).cols
    absent = one_dim_reps_absent(alg, rad)
    ruling = None
    if alg.dim == 8 and absent and ss_center_dim in (1, 2):
        ruling = ss_center_dim
    return AnalysisReport(
        dim=alg.dim,
        radical_dim=rad.cols,
        center_dim=center_dim,
        ss_center_dim=ss_center_dim,
        one_dim_reps_absent=absent,
        ruling_count=ruling,
        smooth=(rad.cols == 0),
    )
