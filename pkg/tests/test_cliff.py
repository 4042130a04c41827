import pytest

from ncquad.cliff import (HypersurfaceData, HypothesisViolation,
                          InvariantComparison, clifford_algebra,
                          clifford_with_scale, compare_invariants,
                          congruent_diagonal, dual_central_element,
                          even_clifford_oracle, verify_matrix_factorization,
                          word_vector_class)
from ncquad.exactlin import LaurentPoly, RationalSeries
from ncquad.families import (HYPERBOLIC_FORM, commutative_presentation,
                             sklyanin_gamma, sklyanin_presentation,
                             symmetric_form_to_element, word_vector)
from ncquad.findim import analyze, radical
from ncquad.qalg import build_table, central_quadratic_space, element_word_lift

COMM = commutative_presentation()
SKLY = sklyanin_presentation("1/2", "-1/3", sklyanin_gamma("1/2", "-1/3"))

HYPER = word_vector(4, {(0, 3): 1, (1, 2): -1})
DIAG4 = word_vector(4, {(0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1})
DIAG3 = word_vector(4, {(0, 0): 1, (1, 1): 1, (2, 2): 1})
DIAG2 = word_vector(4, {(0, 0): 1, (1, 1): 1})

Q4 = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
Q3 = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 0))
Q2 = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0))


def test_hypersurface_rejects_dependent_lift():
    comm_rel = word_vector(4, {(0, 1): 1, (1, 0): -1})
    with pytest.raises(HypothesisViolation):
        HypersurfaceData(COMM, comm_rel)


def test_dual_central_element_hyperbolic():
    w, table = dual_central_element(HypersurfaceData(COMM, HYPER))
    assert len(w) == table.dims[2] == 7
    assert any(c for c in w)


def test_dual_central_element_rank_one():
    z = word_vector(4, {(0, 0): 1})
    alg = clifford_algebra(HypersurfaceData(COMM, z))
    assert alg.dim == 8
    assert radical(alg).cols > 0


def test_dual_central_element_sklyanin():
    table = build_table(SKLY, 3)
    omega = central_quadratic_space(table).column(0)
    lift = element_word_lift(table, omega, 2)
    alg = clifford_algebra(HypersurfaceData(SKLY, lift))
    assert alg.dim == 8


@pytest.mark.parametrize("lift", [HYPER, DIAG4, DIAG3, DIAG2])
def test_clifford_dimension_eight(lift):
    alg = clifford_algebra(HypersurfaceData(COMM, lift))
    assert alg.dim == 8


def test_clifford_unit_axiom():
    alg = clifford_algebra(HypersurfaceData(COMM, HYPER))
    for i in range(8):
        e = alg.basis_vector(i)
        assert alg.multiply(alg.unit, e) == e
        assert alg.multiply(e, alg.unit) == e


def test_even_oracle_units_and_dims():
    for q in (Q4, Q3, Q2, HYPERBOLIC_FORM):
        alg = even_clifford_oracle(q)
        assert alg.dim == 8


def test_even_oracle_degenerate_has_radical():
    assert radical(even_clifford_oracle(Q3)).cols == 4
    assert radical(even_clifford_oracle(Q4)).cols == 0
    assert radical(even_clifford_oracle(HYPERBOLIC_FORM)).cols == 0


def test_congruent_diagonal():
    diag = congruent_diagonal(HYPERBOLIC_FORM)
    nonzero = [d for d in diag if d]
    assert len(nonzero) == 4
    diag3 = congruent_diagonal(Q3)
    assert sum(1 for d in diag3 if d) == 3
    with pytest.raises(ValueError):
        congruent_diagonal(((0, 1, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0)))


FORM_PAIRS = [
    (HYPER, HYPERBOLIC_FORM),
    (DIAG4, Q4),
    (DIAG3, Q3),
    (DIAG2, Q2),
]


@pytest.mark.parametrize("lift,q", FORM_PAIRS)
def test_oracle_equivalence(lift, q):
    ours = clifford_algebra(HypersurfaceData(COMM, lift))
    oracle = even_clifford_oracle(q)
    report = compare_invariants(ours, oracle)
    assert report.equal, report.to_dict()


def test_compare_self_and_different_ranks():
    c4 = even_clifford_oracle(Q4)
    assert compare_invariants(c4, c4).equal
    c3 = even_clifford_oracle(Q3)
    report = compare_invariants(c4, c3)
    assert not report.equal
    assert report.left[1] != report.right[1]  # radical dims differ


def test_scale_invariance_quantity():
    alg, det_w2 = clifford_with_scale(HypersurfaceData(COMM, HYPER))
    assert det_w2 != 0


# -- matrix factorization --

PHI = [[[1, 0, 0, 0], [0, 1, 0, 0]],
       [[0, 0, 1, 0], [0, 0, 0, 1]]]    # [[x0, x1], [x2, x3]]
PSI = [[[0, 0, 0, 1], [0, -1, 0, 0]],
       [[0, 0, -1, 0], [1, 0, 0, 0]]]   # adjugate [[x3, -x1], [-x2, x0]]


def test_mf_adjugate_verifies():
    verdict = verify_matrix_factorization(COMM, PHI, PSI, HYPER)
    assert verdict.ok
    one_minus_t = LaurentPoly({0: 1, 1: -1})
    expected = RationalSeries(LaurentPoly.const(2),
                              one_minus_t * one_minus_t * one_minus_t)
    assert verdict.series == expected


def test_mf_series_is_s_ha_over_one_plus_t():
    verdict = verify_matrix_factorization(COMM, PHI, PSI, HYPER)
    one_minus_t = LaurentPoly({0: 1, 1: -1})
    one_plus_t = LaurentPoly({0: 1, 1: 1})
    h_a = RationalSeries(one_plus_t, one_minus_t * one_minus_t * one_minus_t)
    target = RationalSeries(LaurentPoly.const(2) * h_a.numerator,
                            h_a.denominator * one_plus_t)
    assert verdict.series == target


def test_mf_periodicity_shadow():
    # H_M(t) (1 - t^2) = s H_A(t) (1 - t)
    verdict = verify_matrix_factorization(COMM, PHI, PSI, HYPER)
    s = verdict.series
    one_minus_t = LaurentPoly({0: 1, 1: -1})
    one_minus_t2 = LaurentPoly({0: 1, 2: -1})
    one_plus_t = LaurentPoly({0: 1, 1: 1})
    lhs = RationalSeries(s.numerator * one_minus_t2, s.denominator)
    h_a = RationalSeries(one_plus_t, one_minus_t * one_minus_t * one_minus_t)
    rhs = RationalSeries(2 * h_a.numerator * one_minus_t, h_a.denominator)
    assert lhs == rhs


def test_mf_sign_flip_rejected_with_witness():
    bad = [[[0, 0, 0, 1], [0, 1, 0, 0]],     # +x1 instead of -x1
           [[0, 0, -1, 0], [1, 0, 0, 0]]]
    verdict = verify_matrix_factorization(COMM, PHI, bad, HYPER)
    assert not verdict.ok
    assert verdict.witness is not None
    assert verdict.witness.product in ("phi.psi", "psi.phi")
    assert "entry" in verdict.witness.describe()


def test_mf_swapped_pair_verifies():
    verdict = verify_matrix_factorization(COMM, PSI, PHI, HYPER)
    assert verdict.ok


def test_mf_shape_validation():
    with pytest.raises(ValueError):
        verify_matrix_factorization(COMM, [[[1, 0, 0, 0]]], PSI, HYPER)


def test_word_vector_class_matches_form():
    table = build_table(COMM, 2)
    z = word_vector_class(table, symmetric_form_to_element(HYPERBOLIC_FORM))
    z2 = word_vector_class(table, HYPER)
    assert z == z2


def test_invariant_comparison_serialization():
    c = even_clifford_oracle(Q4)
    d = compare_invariants(c, c).to_dict()
    assert d["equal"] is True
    assert set(d["left"]) == set(InvariantComparison.FIELDS)
