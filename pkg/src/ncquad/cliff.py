"""The 8-dimensional Clifford-type invariant of a quadric quotient.

Given S with the right Hilbert behaviour and a central degree-2 element
z, the quotient A = S/(z) has a quadratic dual carrying a canonical
central element w in degree 2: the one-dimensional kernel of the map
from the degree-2 part of the dual of A onto the degree-2 part of the
dual of S.  Inverting w and taking degree zero gives a finite
dimensional algebra; concretely it lives on the degree-4 component of
the dual of A, with products pulled back through multiplication by w^2.

A classical even Clifford construction over a diagonalized symmetric
form serves as the independent oracle, and a matrix-factorization
verifier covers the commutative hypersurface side.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import (LaurentPoly, Matrix, RationalSeries, det, inverse,
                       kernel_basis, qq, qq_str, rank)
from .findim import FinDimAlgebra, analyze
from .qalg import (GradedTable, QuadraticPresentation, build_table,
                   evaluate_word, is_regular_central, koszul_dual, multiply)


class HypothesisViolation(Exception):
    """An input failed one of the standing structural hypotheses."""

    def __init__(self, hypothesis: str, message: str):
        super().__init__("%s hypothesis failed: %s" % (hypothesis, message))
        self.hypothesis = hypothesis


class HypersurfaceData:
    """Ambient presentation S plus a degree-2 lift cutting out A = S/(z)."""

    __slots__ = ("S", "z_lift", "A")

    def __init__(self, S: QuadraticPresentation, z_lift):
        g = S.num_generators
        z_lift = tuple(qq(c) for c in z_lift)
        if len(z_lift) != g * g:
            raise ValueError("lift must live in the degree-2 word space")
        stacked = list(S.relations) + [z_lift]
        if rank(Matrix.from_rows(stacked)) != len(stacked):
            raise HypothesisViolation(
                "independence", "the degree-2 element lies in the relation span")
        self.S = S
        self.z_lift = z_lift
        self.A = QuadraticPresentation(S.generator_names, stacked)


def dual_central_element(h: HypersurfaceData, degree: int = 8):
    """The dual-side central element w, plus the dual table of A.

    w spans the kernel of the degree-2 comparison map onto the dual of
    S; it is verified central (degree-3 generator check) and regular
    through the requested degree.  Any failure raises
    HypothesisViolation naming the broken property.
    """
    dual_a = build_table(koszul_dual(h.A), degree)
    dual_s = build_table(koszul_dual(h.S), 2)
    cols = [evaluate_word(dual_s, word) for word in dual_a.words[2]]
    ker = kernel_basis(Matrix.from_columns(cols, rows=dual_s.dims[2]))
    if ker.cols != 1:
        raise HypothesisViolation(
            "kernel-dimension",
            "degree-2 comparison kernel has dimension %d, expected 1" % ker.cols)
    w = ker.column(0)
    cert = is_regular_central(dual_a, w, degree)
    if not cert.central:
        raise HypothesisViolation("centrality", "w is not central: " + cert.describe())
    if not cert.regular:
        raise HypothesisViolation("regularity", "w is not regular: " + cert.describe())
    return w, dual_a


def clifford_with_scale(h: HypersurfaceData, degree: int = 8):
    """Clifford-type algebra together with det of the w^2 pullback map.

    The determinant tracks the only non-canonical choice in the
    construction (the scale of w): rescaling w by u multiplies the
    returned determinant by u^16 and the trace-form determinant of the
    algebra by u^-32, so det(gram) * det(w^2 map)^2 is scale-free.
    """
    if degree < 8:
        raise ValueError("construction needs the dual table through degree 8")
    w, dual_a = dual_central_element(h, degree)
    return clifford_from_dual(dual_a, w)


def clifford_from_dual(dual_a: GradedTable, w: list):
    """Assemble the invariant algebra from a dual table and its w."""
    dims = dual_a.dims
    if not (dims[4] == dims[6] == dims[8] == 8):
        raise HypothesisViolation(
            "stabilization",
            "dual dimensions at degrees (4, 6, 8) are %r, expected (8, 8, 8)"
            % ((dims[4], dims[6], dims[8]),))
    basis4 = Matrix.identity(8).columns()
    basis6 = Matrix.identity(8).columns()
    w46 = Matrix.from_columns([multiply(dual_a, b, 4, w, 2) for b in basis4], rows=8)
    w68 = Matrix.from_columns([multiply(dual_a, b, 6, w, 2) for b in basis6], rows=8)
    if det(w46) == 0 or det(w68) == 0:
        raise HypothesisViolation(
            "stabilization", "multiplication by w is not bijective between "
            "degrees 4, 6, 8 of the dual")
    w2map = w68 @ w46
    w2inv = inverse(w2map)
    unit = multiply(dual_a, w, 2, w, 2)
    names = dual_a.presentation.generator_names
    labels = [".".join(names[i] for i in word) for word in dual_a.words[4]]
    structure = []
    for i in range(8):
        e_i = basis4[i]
        row = []
        for j in range(8):
            prod8 = multiply(dual_a, e_i, 4, basis4[j], 4)
            row.append(w2inv.apply(prod8))
        structure.append(row)
    alg = FinDimAlgebra(labels, structure, unit)
    return alg, det(w2map)


def clifford_algebra(h: HypersurfaceData, degree: int = 8) -> FinDimAlgebra:
    """The 8-dimensional invariant algebra of the quadric Proj S/(z)."""
    return clifford_with_scale(h, degree)[0]


# -- classical even Clifford oracle --

def congruent_diagonal(q) -> list:
    """Diagonal of a rational congruence-diagonalization of symmetric q."""
    n = len(q)
    m = [[qq(q[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if m[i][j] != m[j][i]:
                raise ValueError("form matrix is not symmetric")
    for k in range(n):
        if not m[k][k]:
            j = next((j for j in range(k + 1, n) if m[j][j]), None)
            if j is not None:
                m[k], m[j] = m[j], m[k]
                for row in m:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if m[k][j]), None)
                if j is None:
                    continue
                for t in range(n):
                    m[k][t] += m[j][t]
                for t in range(n):
                    m[t][k] += m[t][j]
        piv = m[k][k]
        for i in range(k + 1, n):
            if m[i][k]:
                f = m[i][k] / piv
                for t in range(n):
                    m[i][t] -= f * m[k][t]
                for t in range(n):
                    m[t][i] -= f * m[t][k]
    return [m[k][k] for k in range(n)]


_EVEN_SUBSETS = ((), (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 1, 2, 3))


def _clifford_word_product(left, right, diag):
    """Multiply two increasing generator words under e_i e_j = -e_j e_i, e_i^2 = q_i."""
    word = list(left)
    sign = 1
    coef = qq(1)
    for gen in right:
        pos = len(word)
        while pos > 0 and word[pos - 1] > gen:
            pos -= 1
            sign = -sign
        if pos > 0 and word[pos - 1] == gen:
            coef *= diag[gen]
            del word[pos - 1]
        else:
            word.insert(pos, gen)
    return sign, coef, tuple(word)


def even_clifford_oracle(q) -> FinDimAlgebra:
    """Even Clifford algebra of a 4x4 symmetric rational form.

    The form is congruence-diagonalized first; degenerate forms are
    allowed and produce nilpotents.  Basis: 1, the six products
    e_i e_j (i < j), and e_1 e_2 e_3 e_4.
    """
    if len(q) != 4 or any(len(row) != 4 for row in q):
        raise ValueError("expected a 4x4 symmetric matrix")
    diag = congruent_diagonal(q)
    index = {s: k for k, s in enumerate(_EVEN_SUBSETS)}
    labels = ["1"] + ["e%d%d" % (i + 1, j + 1) for (i, j) in _EVEN_SUBSETS[1:7]] + ["e1234"]
    structure = []
    for s in _EVEN_SUBSETS:
        row = []
        for t in _EVEN_SUBSETS:
            sign, coef, word = _clifford_word_product(s, t, diag)
            vec = [qq(0)] * 8
            c = sign * coef
            if c:
                vec[index[word]] = c
            row.append(vec)
        structure.append(row)
    unit = [qq(1)] + [qq(0)] * 7
    return FinDimAlgebra(labels, structure, unit)


@dataclass
class InvariantComparison:
    """Invariant tuples of two algebras, with an equality verdict."""

    left: tuple
    right: tuple
    equal: bool

    FIELDS = ("dim", "radical_dim", "center_dim", "ss_center_dim", "commutator_codim")

    def to_dict(self) -> dict:
        return {
            "left": dict(zip(self.FIELDS, self.left)),
            "right": dict(zip(self.FIELDS, self.right)),
            "equal": self.equal,
        }


def invariant_tuple(alg: FinDimAlgebra) -> tuple:
    """(dim, radical dim, center dim, ss-center dim, commutator-ideal codim)."""
    from .findim import commutator_ideal
    report = analyze(alg)
    codim = alg.dim - commutator_ideal(alg).rank
    return (report.dim, report.radical_dim, report.center_dim,
            report.ss_center_dim, codim)


def compare_invariants(c1: FinDimAlgebra, c2: FinDimAlgebra) -> InvariantComparison:
    """Isomorphism-invariant comparison used in place of isomorphism search."""
    t1, t2 = invariant_tuple(c1), invariant_tuple(c2)
    return InvariantComparison(t1, t2, t1 == t2)


# -- matrix factorization verifier --

@dataclass
class MFWitness:
    product: str
    row: int
    col: int
    got: list
    expected: list

    def describe(self) -> str:
        return "%s entry (%d, %d) is %r, expected %r" % (
            self.product, self.row, self.col,
            [qq_str(x) for x in self.got], [qq_str(x) for x in self.expected])


@dataclass
class MFVerdict:
    ok: bool
    size: int
    series: RationalSeries | None
    witness: MFWitness | None

    def to_dict(self) -> dict:
        out = {"ok": self.ok, "size": self.size}
        if self.series is not None:
            out["cokernel_series"] = {
                "numerator": {str(e): c for e, c in self.series.numerator.coeffs.items()},
                "denominator": {str(e): c for e, c in self.series.denominator.coeffs.items()},
            }
        if self.witness is not None:
            out["witness"] = {
                "product": self.witness.product,
                "row": self.witness.row,
                "col": self.witness.col,
                "got": [qq_str(x) for x in self.witness.got],
                "expected": [qq_str(x) for x in self.witness.expected],
            }
        return out


def verify_matrix_factorization(S: QuadraticPresentation, phi, psi, z_lift,
                                table: GradedTable | None = None) -> MFVerdict:
    """Check phi psi = psi phi = z * identity over the degree-2 component.

    phi and psi are s x s matrices whose entries are degree-1 elements
    (coefficient vectors over the generators).  On success the verdict
    carries the 2-periodic cokernel Hilbert series s * (1 - t)^(-3),
    whose rational-function identity with s * H_A(t)/(1 + t) encodes the
    period-two syzygy behaviour of the cokernel.
    """
    g = S.num_generators
    if table is None:
        table = build_table(S, 2)
    s = len(phi)
    if s == 0 or len(psi) != s or any(len(r) != s for r in phi) or any(len(r) != s for r in psi):
        raise ValueError("factors must be square matrices of equal size")
    phi = [[[qq(c) for c in entry] for entry in row] for row in phi]
    psi = [[[qq(c) for c in entry] for entry in row] for row in psi]
    for mat in (phi, psi):
        for row in mat:
            for entry in row:
                if len(entry) != g:
                    raise ValueError("entries must be degree-1 coefficient vectors")
    z = word_vector_class(table, z_lift)
    zero = [qq(0)] * table.dims[2]
    for name, left_m, right_m in (("phi.psi", phi, psi), ("psi.phi", psi, phi)):
        for i in range(s):
            for j in range(s):
                acc = [qq(0)] * table.dims[2]
                for k in range(s):
                    term = multiply(table, left_m[i][k], 1, right_m[k][j], 1)
                    for t, x in enumerate(term):
                        if x:
                            acc[t] += x
                expected = z if i == j else zero
                if acc != expected:
                    witness = MFWitness(name, i, j, acc, expected)
                    return MFVerdict(False, s, None, witness)
    one_minus_t = LaurentPoly({0: 1, 1: -1})
    series = RationalSeries(LaurentPoly.const(s),
                            one_minus_t * one_minus_t * one_minus_t)
    return MFVerdict(True, s, series, None)


def word_vector_class(table: GradedTable, vec) -> list:
    """Image in A_2 of a vector in the degree-2 word space."""
    g = table.presentation.num_generators
    vec = list(vec)
    if len(vec) != g * g:
        raise ValueError("expected a degree-2 word vector")
    out = [qq(0)] * table.dims[2]
    for k, c in enumerate(vec):
        if c:
            i, j = divmod(k, g)
            cls = evaluate_word(table, (i, j))
            for t, x in enumerate(cls):
                if x:
                    out[t] += qq(c) * x
    return out
