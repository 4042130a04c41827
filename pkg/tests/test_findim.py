import pytest

from ncquad.cliff import HypersurfaceData, clifford_algebra, even_clifford_oracle
from ncquad.exactlin import qq
from ncquad.families import HYPERBOLIC_FORM, commutative_presentation, word_vector
from ncquad.findim import (AnalysisReport, FinDimAlgebra, analyze, center_basis,
                           commutator_ideal, one_dim_reps_absent,
                           quotient_by_subspace, radical, trace_gram)

Q4 = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
Q3 = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 0))
Q2 = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0))


def upper_triangular_2x2():
    # basis e11, e22, e12 of the upper triangular 2x2 matrices
    z = [0, 0, 0]
    structure = [
        [[1, 0, 0], z, [0, 0, 1]],
        [z, [0, 1, 0], z],
        [z, [0, 0, 1], z],
    ]
    return FinDimAlgebra(["e11", "e22", "e12"], structure, [1, 1, 0])


def split_commutative_2():
    # k x k with idempotent basis
    structure = [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]
    return FinDimAlgebra(["u", "v"], structure, [1, 1])


def test_oracle_rank4_semisimple():
    assert radical(even_clifford_oracle(Q4)).cols == 0


def test_oracle_rank3_radical():
    assert radical(even_clifford_oracle(Q3)).cols > 0


def test_upper_triangular_radical():
    alg = upper_triangular_2x2()
    rad = radical(alg)
    assert rad.cols == 1
    # the radical is the strictly upper triangular line
    col = rad.column(0)
    assert col[0] == 0 and col[1] == 0 and col[2] != 0


def test_associativity_validation_rejects_bad_table():
    z = [0, 0]
    bad = [[[0, 1], z], [z, z]]
    with pytest.raises(ValueError):
        FinDimAlgebra(["a", "b"], bad, [1, 0])


def test_unit_validation():
    structure = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    with pytest.raises(ValueError):
        FinDimAlgebra(["a", "b"], structure, [0, 1])


def test_one_dim_reps_absent_matrix_blocks():
    assert one_dim_reps_absent(even_clifford_oracle(HYPERBOLIC_FORM))


def test_one_dim_reps_present_commutative():
    assert not one_dim_reps_absent(split_commutative_2())


def test_one_dim_reps_absent_quadric_invariant():
    comm = commutative_presentation()
    diag4 = word_vector(4, {(0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1})
    alg = clifford_algebra(HypersurfaceData(comm, diag4))
    assert one_dim_reps_absent(alg)


def test_analyze_rank4():
    report = analyze(even_clifford_oracle(Q4))
    assert report.smooth and report.ruling_count == 2
    assert report.radical_dim == 0
    assert report.invariants() == (8, 0, 2, 2)


def test_analyze_rank3_cone():
    report = analyze(even_clifford_oracle(Q3))
    assert not report.smooth and report.ruling_count == 1


def test_analyze_rank2_no_ruling_count():
    report = analyze(even_clifford_oracle(Q2))
    assert not report.smooth
    assert report.ruling_count is None
    assert report.to_dict()["ruling_count"] == "n/a"


def test_analyze_agrees_with_construction_across_ranks():
    comm = commutative_presentation()
    pairs = [
        (word_vector(4, {(0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1}), Q4),
        (word_vector(4, {(0, 0): 1, (1, 1): 1, (2, 2): 1}), Q3),
        (word_vector(4, {(0, 0): 1, (1, 1): 1}), Q2),
    ]
    for lift, q in pairs:
        ours = analyze(clifford_algebra(HypersurfaceData(comm, lift)))
        oracle = analyze(even_clifford_oracle(q))
        assert ours.invariants() == oracle.invariants()
        assert ours.smooth == oracle.smooth
        assert ours.ruling_count == oracle.ruling_count


def test_center_of_quotient():
    alg = upper_triangular_2x2()
    rad = radical(alg)
    quo, project = quotient_by_subspace(alg, rad)
    assert quo.dim == 2
    assert center_basis(quo).cols == 2
    assert center_basis(alg).cols == 1


def test_commutator_ideal_full_for_blocks():
    alg = even_clifford_oracle(HYPERBOLIC_FORM)
    assert commutator_ideal(alg).rank == 8


def test_trace_gram_symmetric():
    alg = even_clifford_oracle(Q3)
    t = trace_gram(alg)
    assert t == t.transpose()


def test_report_serialization():
    report = analyze(even_clifford_oracle(Q4))
    d = report.to_dict()
    assert d["smooth"] is True and d["ruling_count"] == 2
    assert isinstance(report, AnalysisReport)


def test_radical_cross_check_runs_on_every_analysis():
    # degenerate and split algebras all pass the nilpotency and
    # quotient-nondegeneracy verification without raising
    for q in (Q4, Q3, Q2):
        analyze(even_clifford_oracle(q))
    analyze(upper_triangular_2x2())
    analyze(split_commutative_2())
