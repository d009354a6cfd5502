"""Copyable-element extraction, orthogonality, roundtrips, witnesses."""

import numpy as np
import pytest

from frobasis import (
    BasisKind,
    BasisSpec,
    ExtractionError,
    check_orthogonality,
    conjugate_structure,
    extract_copyables,
    from_basis,
    non_copyable_witness,
    roundtrip_algebra,
    roundtrip_basis,
    standard_structure,
)
from test_frobenius import hadamard_basis, matrix_algebra_structure, orth_basis, skew_basis

from conftest import rand_unitary, random_arbitrary_basis, random_orthogonal_basis


def match_sets(found, expected, atol):
    """Each expected vector appears exactly once among the found ones."""
    remaining = list(found)
    for target in expected:
        hits = [i for i, c in enumerate(remaining) if np.linalg.norm(c - target) <= atol]
        assert hits, f"no match for {target}"
        remaining.pop(hits[0])
    assert not remaining


class TestExtraction:
    def test_standard_d3(self):
        result = extract_copyables(standard_structure(3), seed=1)
        match_sets(result.copyables, list(np.eye(3).astype(complex)), 1e-10)
        assert len(result.copyables) == 3
        assert max(result.copy_residuals) <= 1e-10
        assert max(result.counit_residuals) <= 1e-10

    def test_orthogonal_recovers_scaled_basis(self):
        result = extract_copyables(from_basis(orth_basis()), seed=2)
        match_sets(
            result.copyables,
            [np.array([2.0, 0.0], dtype=complex), np.array([0.0, 1.0], dtype=complex)],
            1e-9,
        )

    def test_hadamard_recovers_basis(self):
        result = extract_copyables(from_basis(hadamard_basis()), seed=3)
        s = 1 / np.sqrt(2)
        match_sets(
            result.copyables,
            [np.array([s, s], dtype=complex), np.array([s, -s], dtype=complex)],
            1e-9,
        )

    def test_skew_non_dagger_path(self):
        result = extract_copyables(from_basis(skew_basis()), seed=4)
        match_sets(
            result.copyables,
            [np.array([1.0, 0.0], dtype=complex), np.array([1.0, 1.0], dtype=complex)],
            1e-8,
        )

    def test_dimension_one(self):
        result = extract_copyables(standard_structure(1), seed=5)
        np.testing.assert_allclose(result.copyables[0], [1.0], atol=1e-12)

    def test_seed_independence_up_to_order(self, rng):
        f = from_basis(random_orthogonal_basis(5, rng))
        r1 = extract_copyables(f, seed=101)
        r2 = extract_copyables(f, seed=202)
        match_sets(r1.copyables, list(r2.copyables), 1e-7)

    def test_unitary_equivariance(self, rng):
        f = from_basis(random_orthogonal_basis(4, rng))
        u = rand_unitary(4, rng)
        g = conjugate_structure(f, u)
        transported = [u @ psi for psi in extract_copyables(f, seed=7).copyables]
        match_sets(extract_copyables(g, seed=7).copyables, transported, 1e-7)

    def test_rescaling_scalars_are_the_norms(self, rng):
        f = from_basis(random_orthogonal_basis(3, rng))
        for psi in extract_copyables(f, seed=8).copyables:
            v = psi / np.linalg.norm(psi)
            lam = np.vdot(np.kron(v, v), f.delta @ v)
            assert abs(lam.imag) <= 1e-9
            assert lam.real == pytest.approx(float(np.linalg.norm(psi)), abs=1e-9)

    def test_cardinality_is_dim(self, rng):
        for d in (1, 2, 3, 6):
            f = from_basis(random_orthogonal_basis(d, rng))
            assert len(extract_copyables(f, seed=d).copyables) == d

    def test_non_commutative_structure_rejected(self):
        with pytest.raises(ExtractionError, match="commutative"):
            extract_copyables(matrix_algebra_structure(), seed=1)

    def test_non_basis_type_fails(self):
        # valid monoid+comonoid+frobenius+commutative is required up front;
        # a commutative-but-broken pair must raise, not hang
        f = standard_structure(2)
        bad = type(f)(
            dim=2, m=f.m, u=f.u, delta=f.delta * 1.7, eps=f.eps, dagger=False
        )
        with pytest.raises(ExtractionError):
            extract_copyables(bad, seed=1)


class TestOrthogonality:
    def test_standard_gram_identity(self):
        result = extract_copyables(standard_structure(2), seed=1)
        check = check_orthogonality(result)
        assert check.orthogonal
        np.testing.assert_allclose(np.sort(np.diagonal(check.gram).real), [1, 1], atol=1e-12)

    def test_orthogonal_gram_diag_4_1(self):
        result = extract_copyables(from_basis(orth_basis()), seed=1)
        check = check_orthogonality(result)
        assert check.orthogonal
        np.testing.assert_allclose(
            np.sort(np.diagonal(check.gram).real), [1.0, 4.0], atol=1e-9
        )

    def test_skew_not_orthogonal(self):
        result = extract_copyables(from_basis(skew_basis()), seed=1)
        check = check_orthogonality(result)
        assert not check.orthogonal
        assert np.max(np.abs(check.gram - np.diag(np.diagonal(check.gram)))) == pytest.approx(
            1.0, abs=1e-8
        )


class TestRoundtrips:
    def test_standard_basis_roundtrip(self):
        rt = roundtrip_basis(
            BasisSpec(dim=3, vectors=np.eye(3), kind=BasisKind.ORTHONORMAL), seed=1
        )
        assert sorted(rt.permutation) == [0, 1, 2]
        assert rt.max_distance <= 1e-9

    def test_random_orthogonal_roundtrip(self, rng):
        rt = roundtrip_basis(random_orthogonal_basis(5, rng), seed=11)
        assert rt.max_distance <= 1e-7

    def test_random_arbitrary_roundtrip(self, rng):
        rt = roundtrip_basis(random_arbitrary_basis(4, rng), seed=12)
        assert rt.max_distance <= 1e-5

    def test_algebra_roundtrip_standard(self):
        assert roundtrip_algebra(standard_structure(3), seed=13) <= 1e-10

    def test_algebra_roundtrip_hadamard(self):
        assert roundtrip_algebra(from_basis(hadamard_basis()), seed=14) <= 1e-8

    def test_algebra_roundtrip_unitary_conjugate_d6(self, rng):
        f = conjugate_structure(standard_structure(6), rand_unitary(6, rng))
        assert roundtrip_algebra(f, seed=15) <= 1e-7

    def test_algebra_roundtrip_skew(self):
        assert roundtrip_algebra(from_basis(skew_basis()), seed=16) <= 1e-7


class TestNonCopyableWitness:
    def test_standard_two_dim_fixture(self):
        # psi = e1 + e2: delta psi = e1e1 + e2e2, psi(x)psi adds the cross
        # terms, so the defect is exactly (0,-1,-1,0) with norm sqrt(2)
        w = non_copyable_witness(standard_structure(2), seed=1)
        assert w.residual == pytest.approx(np.sqrt(2), abs=1e-12)
        assert w.schmidt == 2

    def test_single_copyable_negative_control(self):
        f = standard_structure(2)
        psi = np.array([1.0, 0.0], dtype=complex)
        residual = np.linalg.norm(f.delta @ psi - np.kron(psi, psi))
        assert residual <= 1e-12

    def test_random_combination_schmidt_two(self, rng):
        from frobasis import schmidt_rank

        f = from_basis(random_orthogonal_basis(4, rng))
        cop = extract_copyables(f, seed=3).copyables
        for _ in range(5):
            i, j = rng.choice(4, size=2, replace=False)
            a = rng.uniform(0.5, 2.0) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            b = rng.uniform(0.5, 2.0) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            psi = a * cop[i] + b * cop[j]
            assert schmidt_rank(f.delta @ psi, 4) == 2

    def test_requires_dim_two(self):
        with pytest.raises(ExtractionError):
            non_copyable_witness(standard_structure(1), seed=1)
