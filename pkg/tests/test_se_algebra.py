from fractions import Fraction
from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from structctrl.core.pattern import Pattern, candidate_entries
from structctrl.core.se_algebra import (
    MIN_COEFFICIENT, BasisElement, CanonicalSubspace, DenseElement, SignedBasisTerm,
    coordinates_of, dense_bracket, dense_of, derived_series, derived_step, element_of_coordinates,
    larc_exact, larc_numeric, lie_closure, sample_realization, sample_realizations, se_dimension,
    standard_basis, structural_bracket, subspace_of_pattern,
)


def rot(n, i, j):
    return BasisElement.rotation(n, i, j)


def tr(n, k):
    return BasisElement.translation(n, k)


def dense_of_term(n, term):
    if term.is_zero:
        return DenseElement.zeros(n)
    return term.coefficient * dense_of(term.element)


def test_basis_element_validation():
    with pytest.raises(ValueError):
        BasisElement(3, 2, 2)
    with pytest.raises(ValueError):
        BasisElement(3, 4, 4)
    with pytest.raises(ValueError):
        BasisElement.rotation(3, 1, 4)
    assert tr(3, 2).kind == "translation"
    assert rot(3, 1, 2).kind == "rotation"
    assert str(rot(3, 1, 3)) == "Ω13"
    assert str(tr(3, 1)) == "E1(4)"


def test_signed_term_invariant():
    with pytest.raises(ValueError):
        SignedBasisTerm(1)
    with pytest.raises(ValueError):
        SignedBasisTerm(0, rot(2, 1, 2))
    with pytest.raises(ValueError):
        SignedBasisTerm(2, rot(2, 1, 2))
    assert -SignedBasisTerm(1, rot(2, 1, 2)) == SignedBasisTerm(-1, rot(2, 1, 2))


def test_dense_of_rotation():
    x = dense_of(rot(2, 1, 2))
    expected = np.array([[0, 1, 0], [-1, 0, 0], [0, 0, 0]], dtype=object)
    assert x.n == 2
    assert np.array_equal(x.entries, expected)


def test_dense_of_translation():
    x = dense_of(tr(2, 1))
    expected = np.array([[0, 0, 1], [0, 0, 0], [0, 0, 0]], dtype=object)
    assert np.array_equal(x.entries, expected)


def test_dense_of_rotation_in_higher_dimension():
    x = dense_of(rot(3, 2, 3))
    assert x.entries.shape == (4, 4)
    assert x.entries[1, 2] == 1
    assert x.entries[2, 1] == -1
    assert sum(abs(v) for v in x.entries.flat) == 2


def test_dense_element_rejects_invalid_matrices():
    with pytest.raises(ValueError):
        DenseElement(2, np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=object))
    with pytest.raises(ValueError):
        DenseElement(2, np.array([[0, 0, 0], [0, 0, 0], [1, 0, 0]], dtype=object))
    with pytest.raises(ValueError):
        DenseElement(2, np.zeros((2, 2)))


def test_dense_element_is_immutable():
    x = dense_of(rot(2, 1, 2))
    with pytest.raises(AttributeError):
        x.n = 5


def test_dense_bracket_examples():
    a = dense_of(rot(3, 1, 2))
    assert dense_bracket(a, a).is_zero()
    assert dense_bracket(a, dense_of(rot(3, 2, 3))) == dense_of(rot(3, 1, 3))
    assert dense_bracket(dense_of(tr(3, 1)), dense_of(tr(3, 2))).is_zero()


def test_dense_bracket_dimension_mismatch():
    with pytest.raises(ValueError):
        dense_bracket(dense_of(rot(2, 1, 2)), dense_of(rot(3, 1, 2)))


def test_structural_bracket_examples():
    assert structural_bracket(rot(3, 1, 2), rot(3, 2, 3)) == SignedBasisTerm(1, rot(3, 1, 3))
    assert structural_bracket(rot(3, 1, 2), tr(3, 2)) == SignedBasisTerm(1, tr(3, 1))
    assert structural_bracket(rot(4, 1, 2), rot(4, 3, 4)).is_zero
    assert structural_bracket(tr(3, 1), tr(3, 2)).is_zero


def test_structural_bracket_dimension_mismatch():
    with pytest.raises(ValueError):
        structural_bracket(rot(2, 1, 2), rot(3, 1, 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_structural_bracket_matches_dense_bracket(n):
    basis = standard_basis(n)
    for a, b in product(basis, repeat=2):
        expected = dense_bracket(dense_of(a), dense_of(b))
        assert dense_of_term(n, structural_bracket(a, b)) == expected, (a, b)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_structural_bracket_is_antisymmetric(n):
    for a, b in product(standard_basis(n), repeat=2):
        assert structural_bracket(a, b) == -structural_bracket(b, a)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_jacobi_identity(n):
    dense = [dense_of(b) for b in standard_basis(n)]
    for x, y, z in combinations(dense, 3):
        total = (dense_bracket(x, dense_bracket(y, z))
                 + dense_bracket(y, dense_bracket(z, x))
                 + dense_bracket(z, dense_bracket(x, y)))
        assert total.is_zero()


def test_derived_step_examples():
    d = CanonicalSubspace(3, {rot(3, 1, 2), rot(3, 2, 3)})
    assert derived_step(d).generators == {rot(3, 1, 2), rot(3, 2, 3), rot(3, 1, 3)}
    translations = CanonicalSubspace(3, {tr(3, 1), tr(3, 2)})
    assert derived_step(translations) == translations
    assert derived_step(CanonicalSubspace(3)) == CanonicalSubspace(3)


def test_lie_closure_examples():
    path = CanonicalSubspace(3, {rot(3, 1, 2), rot(3, 2, 3), tr(3, 1)})
    assert lie_closure(path) == CanonicalSubspace.full(3)

    partial = CanonicalSubspace(3, {rot(3, 1, 2), tr(3, 1), tr(3, 3)})
    assert lie_closure(partial).generators == {rot(3, 1, 2), tr(3, 1), tr(3, 2), tr(3, 3)}

    assert lie_closure(CanonicalSubspace.full(3)) == CanonicalSubspace.full(3)


def test_lie_closure_accepts_patterns(path_pattern):
    assert len(lie_closure(path_pattern)) == se_dimension(3)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_derived_series_stabilises_by_step_n(n):
    for pattern in Pattern.all_patterns(n):
        series = derived_series(pattern)
        assert len(series) == n + 1
        for before, after in zip(series, series[1:]):
            assert before.generators <= after.generators
        closure = lie_closure(pattern)
        assert series[-1] == closure
        assert lie_closure(closure) == closure


def test_larc_exact_examples(path_pattern, disconnected_pattern):
    assert larc_exact(path_pattern)
    assert not larc_exact(disconnected_pattern)
    for n in range(1, 5):
        assert not larc_exact(Pattern.empty(n))
        assert larc_exact(Pattern.full(n))


def test_subspace_of_pattern(path_pattern):
    assert subspace_of_pattern(path_pattern).generators == {rot(3, 1, 2), rot(3, 2, 3), tr(3, 1)}


def test_coordinates_round_trip():
    coords = np.arange(1.0, 7.0)
    x = element_of_coordinates(3, coords)
    assert np.array_equal(coordinates_of(x), coords)
    assert np.array_equal(coordinates_of(dense_of(rot(3, 1, 3))), np.eye(6)[1])


def test_sample_realization_of_empty_pattern_is_zero():
    assert sample_realization(Pattern.empty(3), 7).is_zero()


@pytest.mark.parametrize("seed", range(10))
def test_sample_realization_single_entry(seed):
    x = sample_realization(Pattern.from_pairs(2, [(1, 2)]), seed)
    c = x.entries[0, 1]
    assert MIN_COEFFICIENT <= abs(c) <= 1.0
    assert x.entries[1, 0] == -c
    assert np.count_nonzero(x.entries) == 2


@given(seed=st.integers(min_value=0, max_value=2**32 - 1), mask=st.integers(min_value=0, max_value=2**10 - 1))
@settings(max_examples=50, deadline=None)
def test_sample_realization_stays_in_pattern(seed, mask):
    pattern = Pattern.from_mask(4, mask)
    x = sample_realization(pattern, seed)
    assert not x.is_exact
    assert not np.any(x.entries[4, :])
    support = {(i, j) for i, j in candidate_entries(4) if x.entries[i - 1, j - 1] != 0}
    assert support == set(pattern.entries)
    assert sample_realization(pattern, seed) == x


def test_sample_realizations_are_independent_and_deterministic(path_pattern):
    first = sample_realizations(path_pattern, 3, 42)
    second = sample_realizations(path_pattern, 3, 42)
    assert first == second
    assert first[0] != first[1]


def test_larc_numeric_on_basis_generators(path_pattern):
    mats = [dense_of(BasisElement(3, i, j)) for i, j in path_pattern]
    assert larc_numeric(mats, 1e-9)


def test_larc_numeric_single_matrix_is_not_enough():
    assert not larc_numeric([sample_realization(Pattern.full(2), 1)], 1e-9)


@pytest.mark.parametrize("seed", range(5))
def test_larc_numeric_two_random_inputs(seed):
    mats = sample_realizations(Pattern.full(2), 2, seed)
    assert larc_numeric(mats, 1e-9)


def test_larc_numeric_argument_checks():
    x = dense_of(rot(2, 1, 2))
    with pytest.raises(ValueError):
        larc_numeric([x], 0)
    with pytest.raises(ValueError):
        larc_numeric([x, dense_of(rot(3, 1, 2))], 1e-9)
    assert not larc_numeric([], 1e-9)


def test_larc_numeric_accepts_exact_rational_matrices():
    x = Fraction(1, 3) * dense_of(rot(2, 1, 2))
    y = Fraction(-5, 7) * dense_of(tr(2, 1))
    assert larc_numeric([x, y], 1e-9)


@pytest.mark.parametrize("factor", [1e-10, 1e-3, 1.0, 1e6])
def test_larc_numeric_is_invariant_under_scaling(factor, path_pattern):
    x, y = dense_of(rot(2, 1, 2)), dense_of(tr(2, 1))
    assert larc_numeric([factor * x, factor * y], 1e-9) == larc_exact(Pattern.from_pairs(2, [(1, 2), (1, 3)]))
    mats = sample_realizations(path_pattern, 2, 42)
    assert larc_numeric([factor * m for m in mats], 1e-9) == larc_numeric(mats, 1e-9)
    single = sample_realization(Pattern.full(2), 1)
    assert not larc_numeric([factor * single], 1e-9)


def test_larc_numeric_mixed_generator_scales():
    x, y = dense_of(rot(2, 1, 2)), dense_of(tr(2, 1))
    assert larc_numeric([1e-4 * x, 1e4 * y], 1e-9)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_larc_numeric_agrees_with_exact_on_basis_generators(n):
    for pattern in Pattern.all_patterns(n):
        mats = [dense_of(BasisElement(n, i, j)) for i, j in pattern]
        assert larc_numeric(mats, 1e-9) == larc_exact(pattern), str(pattern)
