"""Core relations: Jordan product, commute/anticommute predicates, sampling."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from commutant_lab import (
    Tolerance,
    as_hermitian,
    frobenius,
    is_scalar,
    jordan_product,
    random_hermitian,
    random_projection,
    random_scalar,
    random_unitary,
    rel_c,
    rel_j,
    rel_q,
    sample,
    triadic_relation,
)

from conftest import SWAP2, diag


class TestJordanProduct:
    def test_identity_absorbs(self):
        b = random_hermitian(4, 1)
        assert np.allclose(jordan_product(np.eye(4, dtype=complex), b), 2 * b)

    def test_zero_annihilates(self):
        a = random_hermitian(3, 2)
        assert np.allclose(jordan_product(a, np.zeros((3, 3))), 0)

    def test_anticommuting_pair(self):
        # diag(1,-1) o swap: computed by direct 2x2 multiplication
        assert np.allclose(jordan_product(diag(1, -1), SWAP2), 0)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension mismatch"):
            jordan_product(np.eye(2), np.eye(3))

    def test_result_hermitian(self):
        for seed in range(30):
            a = random_hermitian(5, [seed, 0])
            b = random_hermitian(5, [seed, 1])
            j = jordan_product(a, b)
            assert frobenius(j - j.conj().T) <= 1e-12 * max(1.0, frobenius(j))


class TestRelations:
    def test_rel_c_self(self):
        a = random_hermitian(4, 3)
        assert rel_c(a, a)

    def test_rel_c_counterexamples(self):
        # commutator of diag(1,2) with the swap is off-diagonal and nonzero
        assert not rel_c(diag(1, 2), SWAP2)
        # anticommuting but not commuting
        assert not rel_c(diag(1, -1), SWAP2)

    def test_rel_j_examples(self):
        assert rel_j(random_hermitian(3, 4), np.zeros((3, 3)))
        assert rel_j(diag(1, -1), SWAP2)
        assert not rel_j(np.eye(2), np.eye(2))

    def test_rel_q_examples(self):
        assert rel_q(diag(1, -1), SWAP2)
        assert rel_q(diag(1, 2), diag(3, 4))
        assert not rel_q(diag(1, 2), SWAP2)

    def test_symmetry(self):
        for seed in range(20):
            a = random_hermitian(4, [seed, 10])
            b = random_hermitian(4, [seed, 11])
            assert rel_c(a, b) == rel_c(b, a)
            assert rel_j(a, b) == rel_j(b, a)

    def test_scalar_absorption_exact(self):
        # the commutator of A + tI with B equals that of A with B
        a = random_hermitian(4, 12)
        b = random_hermitian(4, 13)
        for t in (-3.0, -0.5, 0.1, 2.0, 17.0):
            assert rel_c(a + t * np.eye(4), b) == rel_c(a, b)

    def test_rel_q_implied(self):
        for seed in range(25):
            a = random_hermitian(3, [seed, 20])
            w, v = np.linalg.eigh(a)
            commuting = (v * np.sign(w)) @ v.conj().T
            assert rel_c(a, commuting) and rel_q(a, commuting)
        anti = SWAP2
        assert rel_j(diag(1, -1), anti) and rel_q(diag(1, -1), anti)


class TestTriadic:
    def test_equal_pair_always_holds(self):
        a = random_hermitian(3, 30)
        c = random_hermitian(3, 31)
        assert triadic_relation(a, a, c, "commutative")
        assert triadic_relation(a, a, c, "quasi")

    def test_quasi_via_anticommutation(self):
        assert triadic_relation(diag(2, 0), diag(1, 1), SWAP2, "quasi")

    def test_commutative_failure(self):
        assert not triadic_relation(diag(2, 0), diag(0, 1), SWAP2, "commutative")

    def test_unknown_kind(self):
        a = np.eye(2)
        with pytest.raises(ValueError, match="relation kind"):
            triadic_relation(a, a, a, "sideways")


class TestBrookeProperty:
    """Quasi-commuting Hermitian pairs have proportionality factor +-1."""

    @staticmethod
    def least_squares_factor(a, b):
        ba = b @ a
        ab = a @ b
        return complex(np.sum(ba.conj() * ab)) / (frobenius(ba) ** 2)

    def test_commuting_factor_is_plus_one(self):
        for seed in range(50):
            a = random_hermitian(4, [seed, 40])
            w, v = np.linalg.eigh(a)
            b = (v * (1.0 + np.abs(w))) @ v.conj().T
            lam = self.least_squares_factor(a, b)
            assert abs(lam - 1.0) <= 1e-6

    def test_anticommuting_factor_is_minus_one(self):
        for seed in range(50):
            rng = np.random.default_rng([seed, 41])
            dim = int(rng.integers(3, 7))
            lam0 = float(rng.uniform(0.5, 2.0))
            values = np.concatenate([[lam0, -lam0], rng.standard_normal(dim - 2)])
            v = random_unitary(dim, rng)
            a = (v * values) @ v.conj().T
            swap = np.zeros((dim, dim), dtype=complex)
            swap[0, 1] = swap[1, 0] = 1.0
            b = v @ swap @ v.conj().T
            lam = self.least_squares_factor(a, b)
            assert abs(lam + 1.0) <= 1e-6
            assert rel_j(a, b) and not rel_c(a, b)


class TestSampling:
    def test_projection_contract(self):
        p = random_projection(3, 1, 7)
        assert frobenius(p @ p - p) <= 1e-12
        assert frobenius(p - p.conj().T) <= 1e-12
        assert abs(np.trace(p).real - 1.0) <= 1e-12

    def test_full_rank_projection_is_identity(self):
        assert np.allclose(random_projection(4, 4, 8), np.eye(4), atol=1e-12)

    def test_unitary_contract(self):
        u = random_unitary(4, 9)
        assert frobenius(u.conj().T @ u - np.eye(4)) <= 1e-12

    def test_invalid_rank(self):
        with pytest.raises(ValueError, match="invalid rank"):
            random_projection(3, 0, 1)
        with pytest.raises(ValueError, match="invalid rank"):
            random_projection(3, 4, 1)

    def test_determinism_per_seed(self):
        for kind, extra in (("hermitian", {}), ("unitary", {}), ("scalar", {}),
                            ("projection", {"rank": 2})):
            first = sample(kind, 4, 123, **extra)
            second = sample(kind, 4, 123, **extra)
            assert np.array_equal(first, second)

    def test_scalar_sample_is_scalar(self):
        assert is_scalar(random_scalar(5, 11))

    def test_unknown_kind(self):
        with pytest.raises(ValueError, match="sample kind"):
            sample("symplectic", 3, 0)


class TestIngestion:
    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError, match="not Hermitian"):
            as_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_rejects_non_square(self):
        with pytest.raises(ValueError, match="square"):
            as_hermitian(np.zeros((2, 3)))

    def test_symmetrizes_noise(self):
        noisy = random_hermitian(4, 50)
        noisy[0, 1] += 1e-14  # representation noise below the ingestion tolerance
        out = as_hermitian(noisy)
        assert frobenius(out - out.conj().T) == 0.0

    def test_is_scalar_includes_zero(self):
        assert is_scalar(np.zeros((3, 3)))
        assert is_scalar(2.5 * np.eye(3))
        assert not is_scalar(diag(1, 1, 2))


class TestToleranceValidation:
    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Tolerance(rel_zero=-1e-9)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            Tolerance(rank_cut=float("nan"))


@settings(max_examples=60, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=2**32 - 1),
    dim=st.integers(min_value=2, max_value=6),
    t=st.floats(min_value=-10, max_value=10, allow_nan=False),
)
def test_relation_invariants_hold_generically(seed, dim, t):
    a = random_hermitian(dim, [seed, 0])
    b = random_hermitian(dim, [seed, 1])
    assert rel_c(a, b) == rel_c(b, a)
    assert rel_c(a + t * np.eye(dim), b) == rel_c(a, b)
    if rel_c(a, b) or rel_j(a, b):
        assert rel_q(a, b)
