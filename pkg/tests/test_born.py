import math
from fractions import Fraction

import numpy as np
import pytest

from genspace import (
    DensityMatrix,
    ExactDistribution,
    JspsVector,
    MeasurementSet,
    born_probability,
    collapse,
    collapse_jsps,
    jacobi_eigenvalues,
    jsps_from_distribution,
    measure,
    sample,
    validate_density,
)
from genspace.born import format_matrix, parse_matrix
from helpers import gram_schmidt_basis, random_distribution, random_unit_vector

F = Fraction


class TestJspsVector:
    def test_fair_coin_components(self):
        psi = jsps_from_distribution(ExactDistribution([F(1, 2), F(1, 2)]))
        assert psi.components == pytest.approx([math.sqrt(0.5)] * 2)

    def test_bent_coin_squares_back_to_probabilities(self):
        psi = jsps_from_distribution(ExactDistribution([F(2, 3), F(1, 3)]))
        assert psi.probabilities() == pytest.approx([2 / 3, 1 / 3], abs=1e-15)

    def test_certainty(self):
        psi = jsps_from_distribution(ExactDistribution([F(1)]))
        assert psi.components.tolist() == [1.0]

    def test_squaring_is_identity_on_random_distributions(self):
        rng = np.random.default_rng(31)
        for _ in range(30):
            dist = random_distribution(rng)
            psi = jsps_from_distribution(dist)
            for component, p in zip(psi.components, dist.probs):
                assert component**2 == pytest.approx(float(p), abs=1e-12)

    def test_non_unit_rejected(self):
        with pytest.raises(ValueError, match="squared norm"):
            JspsVector([0.5, 0.5])

    def test_sign_freedom_allowed(self):
        psi = JspsVector([-math.sqrt(0.5), math.sqrt(0.5)])
        assert born_probability(psi, JspsVector([1.0, 0.0])) == pytest.approx(0.5)

    def test_angles(self):
        psi = JspsVector([1.0, 0.0])
        assert psi.angles() == pytest.approx([0.0, math.pi / 2])

    def test_components_are_read_only(self):
        psi = JspsVector([1.0, 0.0])
        with pytest.raises(ValueError):
            psi.components[0] = 0.0


class TestBornProbability:
    def test_fair_coin_axis(self):
        psi = JspsVector([math.sqrt(0.5), math.sqrt(0.5)])
        assert born_probability(psi, JspsVector([1.0, 0.0])) == pytest.approx(0.5)

    def test_bent_coin_head(self):
        psi = jsps_from_distribution(ExactDistribution([F(2, 3), F(1, 3)]))
        head = JspsVector([1.0, 0.0])
        assert born_probability(psi, head) == pytest.approx(2 / 3, abs=1e-12)

    def test_alignment(self):
        psi = JspsVector([0.6, 0.8])
        assert born_probability(psi, psi) == pytest.approx(1.0, abs=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension mismatch"):
            born_probability(JspsVector([1.0]), JspsVector([1.0, 0.0]))


class TestCollapseJsps:
    def test_bent_coin(self):
        psi = collapse_jsps(3, (2, 1))
        assert psi.components == pytest.approx(
            [math.sqrt(2 / 3), math.sqrt(1 / 3)], abs=1e-15
        )

    def test_no_collapse_uniform(self):
        assert collapse_jsps(4, (1, 1, 1, 1)).components == pytest.approx([0.5] * 4)

    def test_dyadic(self):
        psi = collapse_jsps(8, (4, 2, 1, 1))
        expected = [math.sqrt(x) for x in (0.5, 0.25, 0.125, 0.125)]
        assert psi.components == pytest.approx(expected, abs=1e-15)

    def test_squares_match_collapse_exactly_within_float(self):
        rng = np.random.default_rng(37)
        for _ in range(30):
            d = int(rng.integers(2, 200))
            parts = int(rng.integers(1, min(6, d) + 1))
            cuts = np.sort(rng.choice(d - 1, size=parts - 1, replace=False) + 1)
            counts = tuple(np.diff([0, *cuts.tolist(), d]).tolist())
            psi = collapse_jsps(d, counts)
            dist = collapse(d, counts)
            for component, p in zip(psi.components, dist.probs):
                assert component**2 == pytest.approx(float(p), abs=1e-12)

    def test_bad_counts(self):
        with pytest.raises(ValueError):
            collapse_jsps(5, (2, 2))


class TestParsevalNormalization:
    def test_random_bases_sum_to_one(self):
        rng = np.random.default_rng(41)
        for _ in range(50):
            dim = int(rng.integers(2, 17))
            psi = JspsVector(random_unit_vector(rng, dim))
            basis = gram_schmidt_basis(rng, dim)
            total = sum(
                born_probability(psi, JspsVector(row)) for row in basis
            )
            assert total == pytest.approx(1.0, abs=1e-10)

    def test_scaled_vector_recovers_squared_norm(self):
        # For a vector of norm r the projections squared sum to r^2.
        rng = np.random.default_rng(43)
        for _ in range(20):
            dim = int(rng.integers(2, 17))
            direction = random_unit_vector(rng, dim)
            r = float(rng.uniform(0.1, 5.0))
            scaled = r * direction
            basis = gram_schmidt_basis(rng, dim)
            total = sum(float(row @ scaled) ** 2 for row in basis)
            assert total == pytest.approx(r**2, abs=1e-10 * max(1.0, r**2))


class TestJacobiEigenvalues:
    def test_two_by_two_closed_form(self):
        values = jacobi_eigenvalues(np.array([[0.5, 0.6], [0.6, 0.5]]))
        assert values == pytest.approx([-0.1, 1.1], abs=1e-12)

    def test_diagonal_is_fixed_point(self):
        values = jacobi_eigenvalues(np.diag([3.0, 1.0, 2.0]))
        assert values == pytest.approx([1.0, 2.0, 3.0])

    def test_matches_lapack_on_random_symmetric(self):
        rng = np.random.default_rng(47)
        for _ in range(25):
            n = int(rng.integers(2, 17))
            m = rng.normal(size=(n, n))
            sym = (m + m.T) / 2
            ours = jacobi_eigenvalues(sym)
            reference = np.sort(np.linalg.eigvalsh(sym))
            assert ours == pytest.approx(reference, abs=1e-9)

    def test_rejects_asymmetric_and_oversized(self):
        with pytest.raises(ValueError):
            jacobi_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))
        with pytest.raises(ValueError):
            jacobi_eigenvalues(np.eye(65))


class TestValidateDensity:
    def test_valid_diagonal(self):
        report = validate_density(np.diag([0.5, 0.5]))
        assert report.valid
        assert report.eigenvalues == pytest.approx([0.5, 0.5])

    def test_indefinite_matrix_rejected(self):
        # Closed form: eigenvalues 0.5 +- 0.6.
        report = validate_density(np.array([[0.5, 0.6], [0.6, 0.5]]))
        assert not report.valid and not report.psd
        assert min(report.eigenvalues) == pytest.approx(-0.1, abs=1e-12)

    def test_trace_violation(self):
        report = validate_density(np.diag([0.6, 0.6]))
        assert not report.valid and not report.unit_trace
        assert report.trace_defect == pytest.approx(0.2, abs=1e-12)

    def test_non_square_raises(self):
        with pytest.raises(ValueError, match="square"):
            validate_density(np.ones((2, 3)))

    def test_constructor_enforces_validity(self):
        with pytest.raises(ValueError, match="not a density matrix"):
            DensityMatrix([[0.5, 0.6], [0.6, 0.5]])


class TestMeasure:
    def test_diagonal_density_standard_projectors(self):
        probs = [0.5, 0.25, 0.125, 0.125]
        rho = DensityMatrix(np.diag(probs))
        mset = MeasurementSet.von_neumann(np.eye(4))
        assert measure(rho, mset) == pytest.approx(probs, abs=1e-12)

    def test_standard_basis_projectors_match_born_probability(self):
        rng = np.random.default_rng(51)
        for _ in range(10):
            dim = int(rng.integers(2, 9))
            psi = JspsVector(random_unit_vector(rng, dim))
            rho = DensityMatrix.pure(psi)
            probs = measure(rho, MeasurementSet.von_neumann(np.eye(dim)))
            for i, p in enumerate(probs):
                axis = JspsVector(np.eye(dim)[i])
                assert p == pytest.approx(born_probability(psi, axis), abs=1e-12)

    def test_pure_state_reduces_to_born_probability(self):
        rng = np.random.default_rng(53)
        for _ in range(10):
            dim = int(rng.integers(2, 9))
            psi = JspsVector(random_unit_vector(rng, dim))
            rho = DensityMatrix.pure(psi)
            basis = gram_schmidt_basis(rng, dim)
            mset = MeasurementSet.von_neumann(basis)
            probs = measure(rho, mset)
            for p, row in zip(probs, basis):
                assert p == pytest.approx(
                    born_probability(psi, JspsVector(row)), abs=1e-12
                )

    def test_maximally_mixed_is_uniform(self):
        rng = np.random.default_rng(59)
        dim = 6
        rho = DensityMatrix(np.eye(dim) / dim)
        mset = MeasurementSet.von_neumann(gram_schmidt_basis(rng, dim))
        assert measure(rho, mset) == pytest.approx([1 / dim] * dim, abs=1e-12)

    def test_rotation_invariance(self):
        rng = np.random.default_rng(61)
        for _ in range(10):
            dim = int(rng.integers(2, 9))
            diag = rng.dirichlet(np.ones(dim))
            rho = DensityMatrix(np.diag(diag))
            basis = gram_schmidt_basis(rng, dim)
            before = measure(rho, MeasurementSet.von_neumann(basis))
            q = gram_schmidt_basis(rng, dim)
            rotated_rho = DensityMatrix(q @ rho.entries @ q.T)
            rotated_basis = basis @ q.T  # rows a_i -> Q a_i
            after = measure(rotated_rho, MeasurementSet.von_neumann(rotated_basis))
            assert after == pytest.approx(before, abs=1e-10)

    def test_dimension_mismatch(self):
        rho = DensityMatrix(np.diag([0.5, 0.5]))
        mset = MeasurementSet.von_neumann(np.eye(3))
        with pytest.raises(ValueError, match="dimension mismatch"):
            measure(rho, mset)

    def test_incomplete_operator_set_rejected(self):
        half = np.diag([1.0, 0.0])
        with pytest.raises(ValueError, match="identity"):
            MeasurementSet([half])

    def test_raw_operator_set_accepted_when_valid(self):
        ops = [np.diag([1.0, 0.0]), np.diag([0.0, 1.0])]
        mset = MeasurementSet(ops)
        assert len(mset) == 2

    def test_indefinite_operator_rejected(self):
        ops = [np.array([[1.0, 0.5], [0.5, 0.0]]), np.array([[0.0, -0.5], [-0.5, 1.0]])]
        with pytest.raises(ValueError, match="positive semidefinite"):
            MeasurementSet(ops)


class TestSample:
    def test_certainty(self):
        counts = sample(JspsVector([1.0, 0.0]), seed=7, draws=100)
        assert counts == [100, 0]

    def test_fair_coin_within_binomial_noise(self):
        counts = sample(
            jsps_from_distribution(ExactDistribution([F(1, 2), F(1, 2)])),
            seed=123,
            draws=100_000,
        )
        sigma = math.sqrt(100_000 * 0.25)
        assert sum(counts) == 100_000
        assert abs(counts[0] - 50_000) <= 4 * sigma

    def test_bent_coin_within_binomial_noise(self):
        counts = sample(
            jsps_from_distribution(ExactDistribution([F(2, 3), F(1, 3)])),
            seed=42,
            draws=100_000,
        )
        sigma = math.sqrt(100_000 * 2 / 9)
        assert abs(counts[0] - 66_667) <= 4 * sigma

    def test_deterministic_for_fixed_seed(self):
        psi = jsps_from_distribution(ExactDistribution([F(1, 3), F(1, 3), F(1, 3)]))
        assert sample(psi, 99, 5000) == sample(psi, 99, 5000)
        assert sample(psi, 99, 5000) != sample(psi, 100, 5000)

    def test_draws_must_be_positive(self):
        with pytest.raises(ValueError):
            sample(JspsVector([1.0]), seed=1, draws=0)


class TestMatrixText:
    def test_round_trip(self):
        m = np.array([[0.5, 0.25], [0.25, 0.5]])
        assert parse_matrix(format_matrix(m)) == pytest.approx(m)

    def test_parse_example(self):
        parsed = parse_matrix("2\n0.5 0.0\n0.0 0.5\n")
        assert parsed == pytest.approx(np.diag([0.5, 0.5]))

    def test_errors(self):
        with pytest.raises(ValueError, match="size"):
            parse_matrix("x\n1.0\n")
        with pytest.raises(ValueError, match="rows"):
            parse_matrix("2\n0.5 0.5\n")
        with pytest.raises(ValueError, match="entries per row"):
            parse_matrix("2\n0.5\n0.5 0.5\n")
