"""Elliptic pencil bookkeeping and the algebraic singular-member scan.

The curve side is a plain exact chord-tangent group law on
y^2 = x(x - e1)(x - e2), restricted to curves with full rational
2-torsion so the subgroup E_2 is exactly representable.  Quadric labels
identify z with -z - 2*tau; a member is singular exactly when z + tau
is 2-torsion, and lines (secant pairs {p, q}) lie on the member of sum
p + q, two rulings for smooth members and one for the singular ones.
Coplanarity of four curve points is sum-to-zero, which is all the
ambient geometry used here.

The pencil scan drives the Clifford construction at many rational
parameters and recovers the number of distinct singular members from
the vanishing locus of the trace-form determinant, reconstructed
exactly as a function of the pencil parameter.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cliff import (HypersurfaceData, HypothesisViolation, clifford_from_dual,
                    clifford_with_scale, dual_central_element, word_vector_class)
from .exactlin import (Matrix, det, kernel_basis, poly_degree, poly_eval,
                       poly_gcd, poly_interpolate, poly_squarefree_degree,
                       poly_trim, qq, qq_str)
from .findim import analyze, trace_gram
from .qalg import GradedTable, QuadraticPresentation, build_table


@dataclass(frozen=True)
class ECPoint:
    """Exact rational point: affine (x, y) or the point at infinity."""

    x: object = None
    y: object = None
    infinity: bool = False

    def __post_init__(self):
        if not self.infinity:
            object.__setattr__(self, "x", qq(self.x))
            object.__setattr__(self, "y", qq(self.y))

    def sort_key(self):
        if self.infinity:
            return (0, 0, 0)
        return (1, self.x, self.y)

    def __str__(self) -> str:
        if self.infinity:
            return "O"
        return "(%s, %s)" % (qq_str(self.x), qq_str(self.y))


INFINITY = ECPoint(infinity=True)


@dataclass(frozen=True)
class PencilLabel:
    """Canonical representative of the unordered pair {z, -z - 2 tau}."""

    rep: ECPoint

    def __str__(self) -> str:
        return "Q[%s]" % self.rep


@dataclass(frozen=True)
class SecantLine:
    """Unordered pair of curve points spanning a secant line."""

    first: ECPoint
    second: ECPoint

    @classmethod
    def of(cls, p: ECPoint, q: ECPoint) -> "SecantLine":
        a, b = sorted((p, q), key=lambda pt: pt.sort_key())
        return cls(a, b)

    def __str__(self) -> str:
        return "line(%s, %s)" % (self.first, self.second)


class Curve:
    """y^2 = x(x - e1)(x - e2) with rational e1, e2 and a translation point.

    The right-hand side must have three distinct roots; tau, when given,
    must lie on the curve.  Points off the curve are rejected at
    construction time.
    """

    def __init__(self, e1, e2, tau=None):
        self.e1 = qq(e1)
        self.e2 = qq(e2)
        roots = (qq(0), self.e1, self.e2)
        if len({str(r) for r in roots}) != 3:
            raise ValueError("curve is singular: repeated root among 0, e1, e2")
        # y^2 = x^3 + a2 x^2 + a4 x
        self.a2 = -(self.e1 + self.e2)
        self.a4 = self.e1 * self.e2
        self.tau = None
        if tau is not None:
            self.tau = tau if isinstance(tau, ECPoint) else self.point(*tau)

    def rhs(self, x):
        x = qq(x)
        return x * x * x + self.a2 * x * x + self.a4 * x

    def contains(self, p: ECPoint) -> bool:
        if p.infinity:
            return True
        return p.y * p.y == self.rhs(p.x)

    def point(self, x, y) -> ECPoint:
        p = ECPoint(x, y)
        if not self.contains(p):
            raise ValueError("point (%s, %s) is not on the curve" % (qq_str(p.x), qq_str(p.y)))
        return p

    def add(self, p: ECPoint, q: ECPoint) -> ECPoint:
        if p.infinity:
            return q
        if q.infinity:
            return p
        if p.x == q.x:
            if p.y == -q.y:
                return INFINITY
            slope = (3 * p.x * p.x + 2 * self.a2 * p.x + self.a4) / (2 * p.y)
        else:
            slope = (q.y - p.y) / (q.x - p.x)
        x3 = slope * slope - self.a2 - p.x - q.x
        y3 = slope * (p.x - x3) - p.y
        return ECPoint(x3, y3)

    def neg(self, p: ECPoint) -> ECPoint:
        if p.infinity:
            return p
        return ECPoint(p.x, -p.y)

    def mul(self, n: int, p: ECPoint) -> ECPoint:
        n = int(n)
        if n < 0:
            return self.mul(-n, self.neg(p))
        acc = INFINITY
        addend = p
        while n:
            if n & 1:
                acc = self.add(acc, addend)
            addend = self.add(addend, addend)
            n >>= 1
        return acc

    def two_torsion(self) -> list[ECPoint]:
        """The four 2-torsion points O, (0,0), (e1,0), (e2,0)."""
        pts = [INFINITY, ECPoint(0, 0), ECPoint(self.e1, 0), ECPoint(self.e2, 0)]
        return sorted(pts, key=lambda p: p.sort_key())

    # -- pencil labels and rulings --

    def _need_tau(self):
        if self.tau is None:
            raise ValueError("this operation needs the translation point tau")

    def partner(self, z: ECPoint) -> ECPoint:
        """The point -z - 2 tau labelling the same quadric."""
        self._need_tau()
        return self.neg(self.add(z, self.mul(2, self.tau)))

    def label(self, z: ECPoint) -> PencilLabel:
        """Canonical label of the member through z: min of {z, -z - 2 tau}."""
        if not self.contains(z):
            raise ValueError("label point must lie on the curve")
        w = self.partner(z)
        rep = min(z, w, key=lambda p: p.sort_key())
        return PencilLabel(rep)

    def line_on_quadric(self, line: SecantLine, label: PencilLabel) -> bool:
        """A secant line lies on the member iff p + q is z or -z - 2 tau."""
        s = self.add(line.first, line.second)
        return s == label.rep or s == self.partner(label.rep)

    def same_ruling(self, l1: SecantLine, l2: SecantLine, label: PencilLabel) -> bool:
        """Two lines on one member are in the same ruling iff sums agree."""
        for l in (l1, l2):
            if not self.line_on_quadric(l, label):
                raise ValueError("%s is not on the quadric %s" % (l, label))
        s1 = self.add(l1.first, l1.second)
        s2 = self.add(l2.first, l2.second)
        return s1 == s2

    def is_singular(self, z: ECPoint) -> bool:
        """Singular members are exactly those with z + tau 2-torsion."""
        self._need_tau()
        return self.add(z, self.tau) in set(self.two_torsion())

    def singular_labels(self) -> list[PencilLabel]:
        """Labels of the members through omega - tau, omega 2-torsion.

        Returned as a list in deterministic order; callers interested in
        the count take the set (for torsion tau the four labels could in
        principle collide, so the multiset is reported, not collapsed).
        """
        self._need_tau()
        out = [self.label(self.add(omega, self.neg(self.tau)))
               for omega in self.two_torsion()]
        return sorted(out, key=lambda lab: lab.rep.sort_key())

    def coplanar(self, p1: ECPoint, p2: ECPoint, p3: ECPoint, p4: ECPoint) -> bool:
        """Four curve points are coplanar iff they sum to the identity."""
        for p in (p1, p2, p3, p4):
            if not self.contains(p):
                raise ValueError("coplanarity input must lie on the curve")
        s = self.add(self.add(p1, p2), self.add(p3, p4))
        return s.infinity

    def fat_point_lines(self, omega: ECPoint, i: int, line: SecantLine) -> bool:
        """Incidence of a secant line with the i-th fat point over omega."""
        if omega not in set(self.two_torsion()):
            raise ValueError("base point of a fat-point tower must be 2-torsion")
        if i < 0:
            raise ValueError("index must be nonnegative")
        self._need_tau()
        target = self.add(omega, self.mul(i, self.tau))
        return self.add(line.first, line.second) == target


def fat_point_h0(i: int) -> int:
    """Global-section count of the i-th fat point: i + 1."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    return i + 1


# -- singular members of an algebra pencil --

class PencilError(Exception):
    """The discriminant scan could not certify a result."""


@dataclass
class PencilReport:
    """Outcome of the pencil discriminant scan."""

    sample_values: list          # (lambda, value) pairs actually used
    skipped: list                # (lambda, reason)
    mode: str                    # "polynomial" or "rational"
    numerator: list              # coefficients, ascending degree
    denominator: list            # [1] in polynomial mode
    squarefree_degree: int
    infinity_singular: bool
    distinct_root_count: int

    def to_dict(self) -> dict:
        return {
            "samples": [[qq_str(x), qq_str(v)] for x, v in self.sample_values],
            "skipped": [[qq_str(x), reason] for x, reason in self.skipped],
            "mode": self.mode,
            "polynomial": [qq_str(c) for c in self.numerator],
            "denominator": [qq_str(c) for c in self.denominator],
            "squarefree_degree": self.squarefree_degree,
            "infinity_singular": self.infinity_singular,
            "distinct_root_count": self.distinct_root_count,
        }


def _check_central(table: GradedTable, z_class: list) -> bool:
    g = table.presentation.num_generators
    for i in range(g):
        if table.right[2][i].apply(z_class) != table.left[2][i].apply(z_class):
            return False
    return True


def _scan_sample(S: QuadraticPresentation, lift: list):
    """One pencil member: scale-invariant trace-form determinant sample."""
    h = HypersurfaceData(S, lift)
    alg, det_w2 = clifford_with_scale(h)
    value = det(trace_gram(alg)) * det_w2 * det_w2
    pattern = tuple(alg.labels)
    return value, pattern


def _poly_divide_exact(a: list, b: list) -> list:
    out = [qq(0)] * (len(a) - len(b) + 1)
    a = [qq(c) for c in a]
    lead = b[-1]
    while poly_trim(a) and len(a) >= len(b):
        f = a[-1] / lead
        shift = len(a) - len(b)
        out[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a = poly_trim(a)
    return poly_trim(out)


def _rational_fit(points: list, dp: int, dq: int):
    """Coprime (P, Q), deg within bounds, with P(x) = v Q(x) at all points.

    Returns None when no nonzero solution exists at these degree bounds.
    Needs len(points) >= dp + dq + 1 so the reduced solution is unique
    up to scale; the denominator is normalized monic.
    """
    rows = []
    for x, v in points:
        powers = [qq(1)]
        for _ in range(max(dp, dq)):
            powers.append(powers[-1] * x)
        rows.append(powers[:dp + 1] + [-v * powers[k] for k in range(dq + 1)])
    ker = kernel_basis(Matrix.from_rows(rows, cols=dp + dq + 2))
    if ker.cols == 0:
        return None
    sol = ker.column(0)
    p = poly_trim(sol[:dp + 1])
    q = poly_trim(sol[dp + 1:])
    if not q:
        return None
    g = poly_gcd(p, q)
    if poly_degree(g) > 0:
        p = _poly_divide_exact(p, g)
        q = _poly_divide_exact(q, g)
    lead = q[-1]
    return [c / lead for c in p], [c / lead for c in q]


def pencil_discriminant(S: QuadraticPresentation, omega1_lift, omega2_lift,
                        samples, degree_bound: int,
                        table: GradedTable | None = None) -> PencilReport:
    """Count distinct singular members of the pencil z = omega1 + t*omega2.

    At each sample t the 8-dimensional invariant algebra of S/(z_t) is
    built and the determinant of its trace Gram matrix evaluated
    exactly, normalized by the square of the w^2-pullback determinant so
    the value does not depend on the scale of w.  Samples whose
    construction fails, or whose normal-word basis pattern differs from
    the majority, are skipped and recorded.

    The values are first fit by a single polynomial of degree at most
    degree_bound and checked against at least three held-out samples.
    The basis pattern can make the exact sample values rational rather
    than polynomial in t (their denominator tracks pattern degenerations
    at points outside the sample set); when the polynomial fit fails,
    the same samples are refit as a ratio of polynomials of degree at
    most degree_bound, held out the same way, and the reduced numerator
    carries the vanishing locus.  Distinct roots over the closure are
    counted through the squarefree part; the member at infinity (omega2
    alone) is analyzed separately and merged into the count.
    """
    omega1_lift = [qq(c) for c in omega1_lift]
    omega2_lift = [qq(c) for c in omega2_lift]
    if table is None:
        table = build_table(S, 3)
    for name, lift in (("omega1", omega1_lift), ("omega2", omega2_lift)):
        if not _check_central(table, word_vector_class(table, lift)):
            raise HypothesisViolation("centrality", "%s is not central" % name)

    raw = []
    skipped = []
    for lam in samples:
        lam = qq(lam)
        lift = [a + lam * b for a, b in zip(omega1_lift, omega2_lift)]
        try:
            value, pattern = _scan_sample(S, lift)
        except HypothesisViolation as exc:
            skipped.append((lam, str(exc)))
            continue
        raw.append((lam, value, pattern))

    patterns: dict = {}
    for lam, value, pattern in raw:
        patterns.setdefault(pattern, []).append((lam, value))
    if not patterns:
        raise PencilError("no sample admitted the construction")
    main_pattern = max(patterns, key=lambda k: len(patterns[k]))
    points = patterns[main_pattern]
    for pattern, pts in patterns.items():
        if pattern is not main_pattern:
            for lam, _ in pts:
                skipped.append((lam, "normal-word basis pattern differs from majority"))

    d = degree_bound
    if len(points) < d + 4:
        raise PencilError(
            "need at least degree_bound + 4 usable samples, have %d" % len(points))

    # primary path: one polynomial through the first d + 1 samples
    mode = None
    numerator = denominator = None
    fit_pts, holdout = points[:d + 1], points[d + 1:]
    poly = poly_interpolate([x for x, _ in fit_pts], [v for _, v in fit_pts])
    if all(poly_eval(poly, x) == v for x, v in holdout):
        mode = "polynomial"
        numerator, denominator = (poly if poly else [qq(0)]), [qq(1)]
    else:
        need = 2 * d + 5
        if len(points) < need:
            raise PencilError(
                "polynomial interpolation inconsistent (degree bound too small or "
                "denominators vary); a rational refit needs %d usable samples, have %d"
                % (need, len(points)))
        fit_pts, holdout = points[:2 * d + 2], points[2 * d + 2:]
        fit = _rational_fit(fit_pts, d, d)
        if fit is not None:
            p, q = fit
            if all(poly_eval(p, x) == v * poly_eval(q, x) for x, v in holdout):
                mode = "rational"
                numerator, denominator = p, q
        if mode is None:
            raise PencilError(
                "interpolation inconsistent at degree bound %d (raise the bound "
                "or change the sample set)" % d)

    numerator = poly_trim(numerator) or [qq(0)]
    if poly_degree(numerator) < 0 or (poly_degree(numerator) == 0 and numerator[0] == 0):
        raise PencilError("trace-form determinant vanishes identically on the pencil")

    sq_degree = poly_squarefree_degree(numerator)

    inf_report = analyze(clifford_with_scale(HypersurfaceData(S, omega2_lift))[0])
    infinity_singular = not inf_report.smooth

    return PencilReport(
        sample_values=points,
        skipped=skipped,
        mode=mode,
        numerator=numerator,
        denominator=denominator,
        squarefree_degree=sq_degree,
        infinity_singular=infinity_singular,
        distinct_root_count=sq_degree + (1 if infinity_singular else 0),
    )
