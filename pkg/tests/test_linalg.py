import numpy as np
import pytest

from gamma_opkit import linalg
from gamma_opkit.errors import (
    DimensionMismatch,
    IndefiniteBeyondTolerance,
    NotAContraction,
    NotHermitian,
)
from gamma_opkit.linalg import (
    SubspaceBasis,
    commutation_residual,
    compress,
    defect,
    defect_pinv,
    full_basis,
    op_norm,
    psd_sqrt,
    random_unitary,
)

from conftest import random_contraction, random_psd


class TestPsdSqrt:
    def test_identity(self, tol):
        assert np.allclose(psd_sqrt(np.eye(3), tol), np.eye(3))

    def test_zero(self, tol):
        assert np.allclose(psd_sqrt(np.zeros((2, 2)), tol), 0)

    def test_diagonal(self, tol):
        # oracle: direct eigendecomposition of a diagonal matrix
        r = psd_sqrt(np.diag([4.0, 9.0]), tol)
        assert np.allclose(r, np.diag([2.0, 3.0]), atol=1e-14)

    def test_square_law_random(self, tol, rng):
        for n in (2, 5, 17, 64):
            m = random_psd(rng, n)
            r = psd_sqrt(m, tol)
            rel = op_norm(r @ r - m) / max(op_norm(m), 1e-30)
            assert rel <= 10 * tol.residual_tol
            assert linalg.herm_defect(r) <= 1e-12

    def test_rejects_non_hermitian(self, tol):
        with pytest.raises(NotHermitian):
            psd_sqrt(np.array([[0.0, 1.0], [0.0, 0.0]]), tol)

    def test_rejects_indefinite(self, tol):
        with pytest.raises(IndefiniteBeyondTolerance):
            psd_sqrt(np.diag([1.0, -1e-3]), tol)

    def test_clamps_noise_eigenvalues(self, tol):
        r = psd_sqrt(np.diag([1.0, 1e-14]), tol)
        assert r[1, 1] == 0.0


class TestDefect:
    def test_zero_contraction(self, tol):
        d, sp = defect(np.zeros((2, 2)), tol)
        assert np.allclose(d, np.eye(2))
        assert sp.dim == 2

    def test_unitary_has_zero_defect(self, tol, rng):
        u = random_unitary(rng, 4)
        d, sp = defect(u, tol)
        assert op_norm(d) <= 1e-12
        assert sp.dim == 0

    def test_scalar_half(self, tol):
        d, sp = defect(np.array([[0.5]]), tol)
        assert abs(d[0, 0] - np.sqrt(3) / 2) < 1e-15
        assert sp.dim == 1

    def test_rejects_expansion(self, tol):
        with pytest.raises(NotAContraction):
            defect(2 * np.eye(2), tol)

    def test_commutes_with_pstarp(self, tol, rng):
        for _ in range(5):
            p = random_contraction(rng, 6)
            d, _ = defect(p, tol)
            pp = p.conj().T @ p
            assert op_norm(d @ pp - pp @ d) <= tol.residual_tol

    def test_intertwining_relation(self, tol, rng):
        # P D_P = D_{P*} D relation for every contraction
        for _ in range(5):
            p = random_contraction(rng, 5)
            dp, _ = defect(p, tol)
            dps, _ = defect(p.conj().T, tol)
            assert op_norm(p @ dp - dps @ p) <= tol.residual_tol

    def test_basis_deterministic(self, tol, rng):
        p = random_contraction(rng, 6)
        _, s1 = defect(p, tol)
        _, s2 = defect(p.copy(), tol)
        assert np.array_equal(s1.basis, s2.basis)
        assert s1.orthonormality_defect() <= 1e-12


class TestCompress:
    def test_identity_roundtrip(self, tol):
        b = full_basis(3)
        assert np.allclose(compress(np.eye(3), b, b), np.eye(3))

    def test_degenerate_domain(self):
        dom = SubspaceBasis(3, np.zeros((3, 0), dtype=complex))
        cod = full_basis(3)
        out = compress(np.diag([1.0, 2.0, 3.0]), dom, cod)
        assert out.shape == (3, 0) and out.size == 0

    def test_coordinate_projection(self):
        # oracle: direct projection onto the first two coordinates
        e12 = np.eye(3, dtype=complex)[:, :2]
        b = SubspaceBasis(3, e12)
        out = compress(np.diag([1.0, 2.0, 3.0]), b, b)
        assert np.allclose(out, np.diag([1.0, 2.0]))

    def test_contractive(self, rng):
        for _ in range(5):
            t = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
            q = random_unitary(rng, 6)[:, :3]
            b = SubspaceBasis(6, q)
            assert op_norm(compress(t, b, b)) <= op_norm(t) + 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            compress(np.eye(3), full_basis(2), full_basis(3))


class TestOpNorm:
    def test_identity(self):
        assert op_norm(np.eye(4)) == pytest.approx(1.0)

    def test_zero(self):
        assert op_norm(np.zeros((3, 2))) == 0.0

    def test_nilpotent(self):
        # singular values {2, 0} by hand
        assert op_norm(np.array([[0.0, 2.0], [0.0, 0.0]])) == pytest.approx(2.0)

    def test_empty(self):
        assert op_norm(np.zeros((0, 3))) == 0.0


class TestCommutationResidual:
    def test_diagonal_tuple(self):
        ms = [np.diag([1.0, 2.0]), np.diag([3.0, 4.0])]
        assert commutation_residual(ms) == 0.0

    def test_polynomials_commute(self, rng):
        p = random_contraction(rng, 5)
        assert commutation_residual([p, p @ p]) <= 1e-14

    def test_shift_pair(self):
        a = np.array([[0.0, 1.0], [0.0, 0.0]])
        b = np.array([[0.0, 0.0], [1.0, 0.0]])
        # [a, b] = diag(1, -1), norm 1 by hand
        assert commutation_residual([a, b]) == pytest.approx(1.0)

    def test_mixed_dims_rejected(self):
        with pytest.raises(DimensionMismatch):
            commutation_residual([np.eye(2), np.eye(3)])


class TestPinv:
    def test_pinv_on_range(self, tol, rng):
        p = random_contraction(rng, 5, norm_cap=0.8)
        d, sp = defect(p, tol)
        dp = defect_pinv(d, tol)
        proj = sp.projector()
        assert op_norm(d @ dp - proj) <= 1e-9
        assert op_norm(dp @ d - proj) <= 1e-9
