import numpy as np
import pytest

from gamma_opkit.errors import IncompatibleOperators, NotToeplitz
from gamma_opkit.linalg import op_norm, windowed_norm
from gamma_opkit.structured import (
    DirectSum,
    Finite,
    HardyMultiplier,
    HardyShiftAdjoint,
    LaurentMultiplier,
    TrigPolySymbol,
    TruncationOrder,
    adjoint,
    ambient_dim,
    compose,
    interior_mask,
    materialize,
    strong_limit_astar,
    toeplitz_extract,
)


def sym(d, **modes):
    """Helper: TrigPolySymbol from {"m<k>": matrix} keyword blocks."""
    return TrigPolySymbol(d, {int(k[1:].replace("_", "-")): v for k, v in modes.items()})


def random_symbol(rng, d, deg_neg, deg_pos):
    coeffs = {}
    for k in range(-deg_neg, deg_pos + 1):
        coeffs[k] = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return TrigPolySymbol(d, coeffs)


class TestMaterialize:
    def test_mz_is_lower_shift(self):
        op = HardyMultiplier(TrigPolySymbol.shift(1))
        m = materialize(op, TruncationOrder(N=2, interior_margin=1))
        expect = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0]], dtype=complex)
        assert np.array_equal(m, expect)

    def test_laurent_identity(self):
        op = LaurentMultiplier(TrigPolySymbol.constant(np.eye(1)))
        m = materialize(op, TruncationOrder(N=1))
        assert np.array_equal(m, np.eye(3))

    def test_toeplitz_layout_by_hand(self):
        op = HardyMultiplier(sym(1, m0=np.array([[2.0]]), m1=np.array([[3.0]])))
        m = materialize(op, TruncationOrder(N=1))
        assert np.array_equal(m, np.array([[2, 0], [3, 2]], dtype=complex))

    def test_shift_adjoint_transposes_mz(self):
        t = TruncationOrder(N=5, interior_margin=1)
        l = materialize(HardyShiftAdjoint(2), t)
        mz = materialize(HardyMultiplier(TrigPolySymbol.shift(2)), t)
        assert np.array_equal(l, mz.conj().T)

    def test_direct_sum(self):
        op = DirectSum((Finite(np.eye(2)), HardyShiftAdjoint(1)))
        t = TruncationOrder(N=2, interior_margin=1)
        m = materialize(op, t)
        assert m.shape == (5, 5)
        assert np.array_equal(m[:2, :2], np.eye(2))
        assert ambient_dim(op, t) == 5


class TestCompose:
    def test_shift_squared(self):
        mz = HardyMultiplier(TrigPolySymbol.shift(1))
        z2 = compose(mz, mz)
        assert isinstance(z2, HardyMultiplier)
        assert sorted(z2.symbol.coeffs) == [2]

    def test_identity_neutral(self, rng):
        x = HardyMultiplier(random_symbol(rng, 2, 0, 2))
        i = HardyMultiplier(TrigPolySymbol.constant(np.eye(2)))
        y = compose(i, x)
        assert x.symbol.max_coeff_distance(y.symbol) < 1e-15

    def test_laurent_inverse_pair(self):
        f = LaurentMultiplier(TrigPolySymbol.shift(1, 1))
        g = LaurentMultiplier(TrigPolySymbol.shift(1, -1))
        h = compose(f, g)
        assert sorted(h.symbol.coeffs) == [0]
        assert np.allclose(h.symbol.coeff(0), 1.0)

    def test_product_matches_materialization_on_interior(self, rng):
        t = TruncationOrder(N=16, interior_margin=7)
        for da, db in [(0, 3), (2, 1), (3, 3)]:
            a = LaurentMultiplier(random_symbol(rng, 2, da, 3 - da if da else 3))
            b = LaurentMultiplier(random_symbol(rng, 2, db, 3 - db if db != 3 else 0))
            ab = compose(a, b)
            lhs = materialize(ab, t)
            rhs = materialize(a, t) @ materialize(b, t)
            mask = interior_mask(ab, t)
            assert windowed_norm(lhs - rhs, mask, mask) <= 1e-12

    def test_hardy_product_exact_everywhere(self, rng):
        # analytic x analytic truncated Toeplitz products have no edge error
        t = TruncationOrder(N=10, interior_margin=1)
        a = HardyMultiplier(random_symbol(rng, 2, 0, 3))
        b = HardyMultiplier(random_symbol(rng, 2, 0, 2))
        lhs = materialize(compose(a, b), t)
        rhs = materialize(a, t) @ materialize(b, t)
        assert op_norm(lhs - rhs) <= 1e-12

    def test_incompatible(self):
        with pytest.raises(IncompatibleOperators):
            compose(HardyMultiplier(TrigPolySymbol.shift(1)),
                    LaurentMultiplier(TrigPolySymbol.shift(1)))

    def test_lossy_fallback(self):
        t = TruncationOrder(N=4, interior_margin=1)
        mz = HardyMultiplier(TrigPolySymbol.shift(1))
        back = HardyShiftAdjoint(1)
        prod = compose(back, mz, default_trunc=t)
        assert isinstance(prod, Finite) and prod.lossy
        assert np.allclose(prod.matrix, materialize(back, t) @ materialize(mz, t))


class TestAdjoint:
    def test_laurent_shift(self):
        op = LaurentMultiplier(TrigPolySymbol.shift(1, 1))
        adj = adjoint(op)
        assert sorted(adj.symbol.coeffs) == [-1]

    def test_finite(self, rng):
        m = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        assert np.array_equal(adjoint(Finite(m)).matrix, m.conj().T)

    def test_coefficient_flip_rule(self, rng):
        c0 = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        c1 = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        op = LaurentMultiplier(TrigPolySymbol(2, {0: c0, 1: c1}))
        adj = adjoint(op)
        assert np.allclose(adj.symbol.coeff(0), c0.conj().T)
        assert np.allclose(adj.symbol.coeff(-1), c1.conj().T)

    def test_laurent_adjoint_materialization_exact(self, rng):
        t = TruncationOrder(N=8, interior_margin=3)
        op = LaurentMultiplier(random_symbol(rng, 2, 2, 1))
        lhs = materialize(adjoint(op), t)
        rhs = materialize(op, t).conj().T
        assert op_norm(lhs - rhs) <= 1e-13

    def test_hardy_adjoint_flagged_and_windowed(self, rng):
        t = TruncationOrder(N=12, interior_margin=4)
        op = HardyMultiplier(random_symbol(rng, 1, 0, 2))
        adj = adjoint(op)
        assert adj.lossy
        assert np.allclose(materialize(adj, t), materialize(op, t).conj().T)

    def test_shift_adjoint_roundtrip(self):
        t = TruncationOrder(N=6, interior_margin=1)
        adj = adjoint(HardyShiftAdjoint(2))
        assert isinstance(adj, HardyMultiplier)
        assert np.array_equal(materialize(adj, t),
                              materialize(HardyShiftAdjoint(2), t).conj().T)


class TestToeplitzExtract:
    def test_shift_roundtrip(self):
        t = TruncationOrder(N=8, interior_margin=2)
        m = materialize(HardyMultiplier(TrigPolySymbol.shift(1)), t)
        fit = toeplitz_extract(m, 1, t)
        assert fit.residual == 0.0
        assert sorted(fit.symbol.coeffs) == [1]

    def test_identity(self):
        t = TruncationOrder(N=8, interior_margin=2)
        fit = toeplitz_extract(np.eye(9), 1, t)
        assert fit.residual == 0.0
        assert sorted(fit.symbol.coeffs) == [0]

    def test_block_roundtrip(self, rng):
        t = TruncationOrder(N=8, interior_margin=2)
        s = random_symbol(rng, 2, 0, 1)
        m = materialize(HardyMultiplier(s), t)
        fit = toeplitz_extract(m, 2, t)
        assert fit.residual <= 1e-12
        assert fit.symbol.max_coeff_distance(s) <= 1e-12

    def test_rejects_generic_matrix(self, rng):
        t = TruncationOrder(N=4, interior_margin=1)
        m = rng.standard_normal((5, 5))
        with pytest.raises(NotToeplitz):
            toeplitz_extract(m, 1, t)


class TestStrongLimit:
    def test_strict_contraction_vanishes(self, rng, tol):
        t = TruncationOrder(N=16, interior_margin=2)
        p = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        p *= 0.6 / np.linalg.norm(p, 2)
        lim = strong_limit_astar(Finite(p), t, tol)
        assert op_norm(lim.matrix) <= 100 * tol.convergence_tol

    def test_shift_adjoint_gives_identity(self, tol):
        t = TruncationOrder(N=8, interior_margin=2)
        lim = strong_limit_astar(HardyShiftAdjoint(2), t, tol)
        assert np.array_equal(materialize(lim, t), np.eye(18))

    def test_unitary_gives_identity(self, rng, tol):
        from gamma_opkit.linalg import random_unitary
        t = TruncationOrder(N=16, interior_margin=2)
        u = random_unitary(rng, 4)
        lim = strong_limit_astar(Finite(u), t, tol)
        assert op_norm(lim.matrix - np.eye(4)) <= 1e-9

    def test_invariance_under_conjugation(self, rng, tol):
        # P A_* P^* = A_* on the interior window
        t = TruncationOrder(N=12, interior_margin=3)
        op = DirectSum((Finite(0.5 * np.eye(2)), HardyShiftAdjoint(1)))
        a = materialize(strong_limit_astar(op, t, tol), t)
        p = materialize(op, t)
        mask = interior_mask(op, t)
        assert windowed_norm(p @ a @ p.conj().T - a, mask, mask) <= tol.residual_tol
