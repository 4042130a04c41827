"""Degreewise construction of quadratic algebras T(V)/(R).

An algebra is presented by generators and a subspace of quadratic
relations.  Graded components are built by the exact recurrence

    A_{n+1} = (V (x) A_n) / image(R (x) A_{n-1}),

which is correct for quadratic algebras and needs nothing beyond dense
rational kernels.  Normal-word bases are picked by deglex pivoting with
a fixed generator order, so identical inputs always produce identical
tables.  Words are tuples of generator indices; the degree-2 word space
indexes the pair (i, j) at position i*g + j.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .exactlin import Matrix, kernel_basis, qq, qq_str, rank, rref


class DegreeOverflowError(ValueError):
    """Requested product lands beyond the table's degree bound."""


class QuadraticPresentation:
    """Generators plus a rational relation subspace R inside V (x) V."""

    __slots__ = ("generator_names", "relations")

    def __init__(self, generator_names, relations):
        names = tuple(str(n) for n in generator_names)
        if not names:
            raise ValueError("need at least one generator")
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        g = len(names)
        rels = tuple(tuple(qq(c) for c in r) for r in relations)
        for r in rels:
            if len(r) != g * g:
                raise ValueError("relation vector length %d, expected %d" % (len(r), g * g))
        if rels and rank(Matrix.from_rows(rels)) != len(rels):
            raise ValueError("relation vectors are linearly dependent")
        self.generator_names = names
        self.relations = rels

    @property
    def num_generators(self) -> int:
        return len(self.generator_names)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuadraticPresentation):
            return NotImplemented
        return (self.generator_names == other.generator_names
                and self.relations == other.relations)

    def __repr__(self) -> str:
        return "QuadraticPresentation(%r, <%d relations>)" % (
            list(self.generator_names), len(self.relations))

    def relation_span_equals(self, other: "QuadraticPresentation") -> bool:
        """True when both relation lists span the same subspace."""
        if self.generator_names != other.generator_names:
            return False
        if len(self.relations) != len(other.relations):
            return False
        if not self.relations:
            return True
        a = rref(Matrix.from_rows(self.relations))
        b = rref(Matrix.from_rows(other.relations))
        return a == b

    def to_json_dict(self) -> dict:
        g = self.num_generators
        rels = []
        for r in self.relations:
            terms = []
            for k, c in enumerate(r):
                if c:
                    i, j = divmod(k, g)
                    terms.append({"coef": qq_str(c),
                                  "word": [self.generator_names[i],
                                           self.generator_names[j]]})
            rels.append(terms)
        return {"generators": list(self.generator_names), "relations": rels}

    @classmethod
    def from_json_dict(cls, data: dict) -> "QuadraticPresentation":
        names = [str(n) for n in data["generators"]]
        index = {n: i for i, n in enumerate(names)}
        g = len(names)
        rels = []
        for terms in data["relations"]:
            vec = [qq(0)] * (g * g)
            for term in terms:
                word = term["word"]
                if len(word) != 2:
                    raise ValueError("relation word %r is not quadratic" % (word,))
                i, j = index[word[0]], index[word[1]]
                vec[i * g + j] += qq(term["coef"])
            rels.append(vec)
        return cls(names, rels)

    def dump(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def load(cls, text: str) -> "QuadraticPresentation":
        return cls.from_json_dict(json.loads(text))


def koszul_dual(p: QuadraticPresentation) -> QuadraticPresentation:
    """Quadratic dual: relations are a basis of the annihilator of R.

    The pairing is <x_i (x) x_j, x_k* (x) x_l*> = delta_ik delta_jl with
    no sign twist; dim R + dim R_perp = g^2 always holds.
    """
    g = p.num_generators
    if not p.relations:
        cols = Matrix.identity(g * g).columns()
    else:
        cols = kernel_basis(Matrix.from_rows(p.relations)).columns()
    return QuadraticPresentation(p.generator_names, cols)


@dataclass
class GradedTable:
    """Bases, dimensions and generator multiplication maps up to a bound.

    ``words[n][b]`` is the representative word of basis element b in
    degree n; every representative evaluates to its own basis vector.
    ``left[n][i]`` is multiplication by generator i on the left, a map
    from degree n to degree n+1, and ``right[n][i]`` the same on the
    right.
    """

    presentation: QuadraticPresentation
    max_degree: int
    dims: list[int]
    words: list[list[tuple[int, ...]]]
    left: list[list[Matrix]]
    right: list[list[Matrix]]
    word_index: list[dict] = field(repr=False, default_factory=list)

    def __post_init__(self):
        if not self.word_index:
            self.word_index = [{w: b for b, w in enumerate(ws)} for ws in self.words]


def build_table(p: QuadraticPresentation, max_degree: int) -> GradedTable:
    """Construct the graded table of T(V)/(R) through the given degree."""
    if max_degree < 2:
        raise ValueError("degree bound must be at least 2")
    g = p.num_generators
    dims = [1, g]
    words: list[list[tuple[int, ...]]] = [[()], [(i,) for i in range(g)]]
    unit_cols = Matrix.identity(g).columns()
    left = [[Matrix.from_columns([unit_cols[i]]) for i in range(g)]]
    right = [[Matrix.from_columns([unit_cols[i]]) for i in range(g)]]

    for n in range(1, max_degree):
        d_prev, d_n = dims[n - 1], dims[n]
        m = g * d_n
        coord_words = [(i,) + words[n][b] for i in range(g) for b in range(d_n)]

        # image of R (x) A_{n-1} inside V (x) A_n
        image_rows = []
        lmaps = left[n - 1]
        for rel in p.relations:
            cols_by_gen = [[qq(0)] * d_n for _ in range(g)]
            for b in range(d_prev):
                for i in range(g):
                    base = i * g
                    row_acc = None
                    for j in range(g):
                        c = rel[base + j]
                        if c:
                            col = lmaps[j].column(b)
                            if row_acc is None:
                                row_acc = [c * x for x in col]
                            else:
                                for t, x in enumerate(col):
                                    if x:
                                        row_acc[t] += c * x
                    cols_by_gen[i] = row_acc or [qq(0)] * d_n
                vec = [qq(0)] * m
                for i in range(g):
                    seg = cols_by_gen[i]
                    off = i * d_n
                    for t, x in enumerate(seg):
                        if x:
                            vec[off + t] = x
                image_rows.append(vec)

        # deglex pivoting: eliminate lex-largest words first
        perm = sorted(range(m), key=lambda k: coord_words[k], reverse=True)
        permuted = [[row[perm[k]] for k in range(m)] for row in image_rows]
        red, pivots = rref(Matrix.from_rows(permuted, cols=m))
        pivot_set = set(pivots)
        free_positions = [k for k in range(m) if k not in pivot_set]
        basis_positions = list(reversed(free_positions))  # ascending word order
        d_next = len(basis_positions)
        pos_to_basis = {k: idx for idx, k in enumerate(basis_positions)}
        pivot_rows = [(pc, red.entries[r_idx],
                       [j for j in basis_positions if red.entries[r_idx][j]])
                      for r_idx, pc in enumerate(pivots)]
        pivot_lookup = {pc: (row, nz) for pc, row, nz in pivot_rows}
        inv_perm = [0] * m
        for k, orig in enumerate(perm):
            inv_perm[orig] = k

        new_words = [coord_words[perm[k]] for k in basis_positions]

        # left maps: reduce each unit coordinate modulo the image
        lmat = [[None] * d_n for _ in range(g)]
        for i in range(g):
            for b in range(d_n):
                k = inv_perm[i * d_n + b]
                col = [qq(0)] * d_next
                if k in pivot_lookup:
                    row, nz = pivot_lookup[k]
                    for j in nz:
                        col[pos_to_basis[j]] = -row[j]
                else:
                    col[pos_to_basis[k]] = qq(1)
                lmat[i][b] = col
        left.append([Matrix.from_columns(lmat[i], rows=d_next) for i in range(g)])

        dims.append(d_next)
        words.append(new_words)

        # right maps, recursively: (x_j w') x_i = x_j (w' x_i)
        word_idx_prev = {w: b for b, w in enumerate(words[n - 1])}
        rmat = [[None] * d_n for _ in range(g)]
        for b in range(d_n):
            j = words[n][b][0]
            tail = words[n][b][1:]
            b_tail = word_idx_prev[tail]
            for i in range(g):
                rmat[i][b] = left[n][j].apply(right[n - 1][i].column(b_tail))
        right.append([Matrix.from_columns(rmat[i], rows=d_next) for i in range(g)])

    return GradedTable(p, max_degree, dims, words, left, right)


def hilbert(table: GradedTable) -> list[int]:
    """Dimension list [d_0 .. d_N]."""
    return list(table.dims)


def multiply(table: GradedTable, a: list, deg_a: int, b: list, deg_b: int) -> list:
    """Product of homogeneous elements, degree deg_a + deg_b.

    b is decomposed into representative words; each word acts through
    the right-multiplication maps one letter at a time.
    """
    total = deg_a + deg_b
    if total > table.max_degree:
        raise DegreeOverflowError("degree %d exceeds table bound %d"
                                  % (total, table.max_degree))
    if len(a) != table.dims[deg_a] or len(b) != table.dims[deg_b]:
        raise ValueError("element length does not match its degree")
    out = [qq(0)] * table.dims[total]
    for idx, coef in enumerate(b):
        if not coef:
            continue
        v = a
        d = deg_a
        for letter in table.words[deg_b][idx]:
            v = table.right[d][letter].apply(v)
            d += 1
        for t, x in enumerate(v):
            if x:
                out[t] += coef * x
    return out


def evaluate_word(table: GradedTable, word) -> list:
    """Class of a generator word in its graded component."""
    word = tuple(word)
    if len(word) > table.max_degree:
        raise DegreeOverflowError("word of length %d exceeds table bound %d"
                                  % (len(word), table.max_degree))
    v = [qq(1)]
    d = 0
    for letter in reversed(word):
        v = table.left[d][letter].apply(v)
        d += 1
    return v


def element_word_lift(table: GradedTable, vec: list, degree: int) -> list:
    """Lift an element of A_n to the degree-n word space via representatives."""
    g = table.presentation.num_generators
    out = [qq(0)] * (g ** degree)
    for b, c in enumerate(vec):
        if c:
            k = 0
            for letter in table.words[degree][b]:
                k = k * g + letter
            out[k] += c
    return out


def central_quadratic_space(table: GradedTable) -> Matrix:
    """Basis of {z in A_2 : z x = x z for all x in A_1}, as columns.

    Commuting with the generators forces commuting with everything in
    degree-one-generated algebras, so the degree-3 linear system is a
    full centrality certificate for degree-2 elements.
    """
    if table.max_degree < 3:
        raise ValueError("need a table through degree 3")
    g = table.presentation.num_generators
    d2, d3 = table.dims[2], table.dims[3]
    rows = []
    for i in range(g):
        diff = table.right[2][i] - table.left[2][i]
        rows.extend(diff.entries)
    return kernel_basis(Matrix.from_rows(rows, cols=d2))


@dataclass
class RegularityCertificate:
    """Outcome of a centrality-plus-regularity check up to a degree."""

    central: bool
    regular: bool
    checked_degree: int
    failure_degree: int | None = None
    witness: list | None = None
    side: str | None = None

    @property
    def ok(self) -> bool:
        return self.central and self.regular

    def describe(self) -> str:
        if self.ok:
            return "central and regular through degree %d" % self.checked_degree
        if not self.central:
            return "not central: witness generator index %s" % self.side
        return "not regular: %s kernel at degree %d" % (self.side, self.failure_degree)


def is_regular_central(table: GradedTable, z: list, bound: int) -> RegularityCertificate:
    """Check z in A_2 is central and multiplication by z is injective.

    Injectivity of both z*(-) and (-)*z is verified on A_n -> A_{n+2}
    for every n <= bound - 2.
    """
    if bound > table.max_degree:
        raise ValueError("bound exceeds table degree")
    g = table.presentation.num_generators
    for i in range(g):
        lhs = table.right[2][i].apply(z)
        rhs = table.left[2][i].apply(z)
        if lhs != rhs:
            return RegularityCertificate(False, False, bound, side=str(i))
    for n in range(0, bound - 1):
        d_n = table.dims[n]
        basis = Matrix.identity(d_n).columns()
        for side, prod in (("left", lambda b: multiply(table, z, 2, b, n)),
                           ("right", lambda b: multiply(table, b, n, z, 2))):
            cols = [prod(b) for b in basis]
            ker = kernel_basis(Matrix.from_columns(cols, rows=table.dims[n + 2]))
            if ker.cols:
                return RegularityCertificate(True, False, bound,
                                             failure_degree=n,
                                             witness=ker.column(0), side=side)
    return RegularityCertificate(True, True, bound)


def koszul_identity_check(p: QuadraticPresentation, bound: int) -> list:
    """Coefficients of H_dual(t) * H(-t) - 1 through the given degree.

    An all-zero residual is a necessary numerical condition for the
    presentation to be Koszul.
    """
    dims = build_table(p, bound).dims
    dual_dims = build_table(koszul_dual(p), bound).dims
    residual = []
    for n in range(bound + 1):
        s = sum(dual_dims[k] * ((-1) ** (n - k)) * dims[n - k] for k in range(n + 1))
        residual.append(s - (1 if n == 0 else 0))
    return residual
