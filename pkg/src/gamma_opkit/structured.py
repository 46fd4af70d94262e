"""Structured operators on truncated Hardy and Lebesgue spaces.

Multiplication operators are represented by their matrix-valued trigonometric
polynomial symbols and materialized as block-Toeplitz (Hardy) or block-Laurent
matrices.  Coordinates are mode-major: index = (mode offset) * block_dim + c,
with Hardy modes 0..N and Laurent modes -N..N.

Truncation artifacts are quarantined by an interior margin; residual checks on
truncated surrogates restrict to interior coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import (
    DimensionMismatch,
    IncompatibleOperators,
    NoConvergence,
    NotAContraction,
    NotToeplitz,
)
from .linalg import DEFAULT_TOL, Tolerances, as_square, dagger, op_norm


@dataclass(frozen=True)
class TruncationOrder:
    """Hardy spaces keep modes 0..N; Laurent spaces keep modes -N..N.

    The default margin quarantines 4 modes at the truncation edge (or fewer
    for tiny truncations); callers widen it to total symbol degree + 2 when
    they know the degrees involved.
    """

    N: int = 64
    interior_margin: int | None = None

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("truncation order must be positive")
        if self.interior_margin is None:
            object.__setattr__(self, "interior_margin", min(4, self.N - 1))
        if not 0 <= self.interior_margin < self.N:
            raise ValueError("interior_margin must lie in [0, N)")


class TrigPolySymbol:
    """Matrix-valued trigonometric polynomial sum_k C_k e^{ikt}."""

    def __init__(self, block_dim: int, coeffs: dict):
        self.block_dim = int(block_dim)
        cleaned = {}
        for k, c in coeffs.items():
            c = np.asarray(c, dtype=complex)
            if c.shape != (self.block_dim, self.block_dim):
                raise DimensionMismatch(
                    f"coefficient {k} has shape {c.shape}, expected "
                    f"({self.block_dim}, {self.block_dim})")
            if np.any(c):
                cleaned[int(k)] = c
        self.coeffs = cleaned

    @property
    def degree_pos(self) -> int:
        return max((k for k in self.coeffs if k > 0), default=0)

    @property
    def degree_neg(self) -> int:
        return max((-k for k in self.coeffs if k < 0), default=0)

    @property
    def total_degree(self) -> int:
        return self.degree_pos + self.degree_neg

    def coeff(self, k: int) -> np.ndarray:
        c = self.coeffs.get(k)
        if c is None:
            return np.zeros((self.block_dim, self.block_dim), dtype=complex)
        return c

    def is_analytic(self) -> bool:
        return self.degree_neg == 0

    def eval_at(self, t: float) -> np.ndarray:
        out = np.zeros((self.block_dim, self.block_dim), dtype=complex)
        for k, c in self.coeffs.items():
            out += c * np.exp(1j * k * t)
        return out

    def conj_flip(self) -> "TrigPolySymbol":
        """Symbol of the adjoint multiplier: k -> coeff(-k)^*."""
        return TrigPolySymbol(
            self.block_dim, {-k: dagger(c) for k, c in self.coeffs.items()})

    def multiply(self, other: "TrigPolySymbol") -> "TrigPolySymbol":
        if self.block_dim != other.block_dim:
            raise DimensionMismatch("symbol block dimensions differ")
        out: dict = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 @ c2
        return TrigPolySymbol(self.block_dim, out)

    def scaled(self, a: complex) -> "TrigPolySymbol":
        return TrigPolySymbol(self.block_dim, {k: a * c for k, c in self.coeffs.items()})

    def max_coeff_distance(self, other: "TrigPolySymbol") -> float:
        keys = set(self.coeffs) | set(other.coeffs)
        return max((op_norm(self.coeff(k) - other.coeff(k)) for k in keys), default=0.0)

    @staticmethod
    def constant(c) -> "TrigPolySymbol":
        c = np.atleast_2d(np.asarray(c, dtype=complex))
        return TrigPolySymbol(c.shape[0], {0: c})

    @staticmethod
    def shift(block_dim: int = 1, power: int = 1) -> "TrigPolySymbol":
        return TrigPolySymbol(block_dim, {power: np.eye(block_dim, dtype=complex)})

    def __repr__(self):
        ks = sorted(self.coeffs)
        return f"TrigPolySymbol(d={self.block_dim}, modes={ks})"


# ---------------------------------------------------------------------------
# structured operator variants


@dataclass(frozen=True)
class StructuredOperator:
    astar_hint: str = field(default="unknown", kw_only=True)
    lossy: bool = field(default=False, kw_only=True)


@dataclass(frozen=True)
class Finite(StructuredOperator):
    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "matrix", as_square(self.matrix, "Finite"))


@dataclass(frozen=True)
class HardyMultiplier(StructuredOperator):
    symbol: TrigPolySymbol

    def __post_init__(self):
        if not self.symbol.is_analytic():
            raise IncompatibleOperators(
                "Hardy multiplier symbols must be analytic")


@dataclass(frozen=True)
class HardyAdjoint(StructuredOperator):
    """Adjoint of an analytic multiplier; closed only at materialization time."""

    symbol: TrigPolySymbol

    def __post_init__(self):
        object.__setattr__(self, "lossy", True)


@dataclass(frozen=True)
class LaurentMultiplier(StructuredOperator):
    symbol: TrigPolySymbol


@dataclass(frozen=True)
class HardyShiftAdjoint(StructuredOperator):
    """Backward shift M_z^* on truncated H^2(C^d); A_* hint is the identity."""

    block_dim: int = 1

    def __post_init__(self):
        object.__setattr__(self, "astar_hint", "identity")


@dataclass(frozen=True)
class DirectSum(StructuredOperator):
    parts: tuple

    def __post_init__(self):
        if not self.parts:
            raise IncompatibleOperators("DirectSum needs at least one part")
        object.__setattr__(self, "parts", tuple(self.parts))


# ---------------------------------------------------------------------------
# materialization


def block_multiplier_matrix(symbol_coeff, row_modes, col_modes, d_out, d_in):
    """Rectangular block matrix of a multiplier: block (r, c) = coeff(r - c).

    symbol_coeff maps an integer frequency to a (d_out, d_in) block (missing
    frequencies are zero).  row_modes / col_modes are iterables of mode indices.
    """
    row_modes = list(row_modes)
    col_modes = list(col_modes)
    out = np.zeros((len(row_modes) * d_out, len(col_modes) * d_in), dtype=complex)
    for i, rm in enumerate(row_modes):
        for j, cm in enumerate(col_modes):
            blk = symbol_coeff(rm - cm)
            if blk is not None:
                out[i * d_out:(i + 1) * d_out, j * d_in:(j + 1) * d_in] = blk
    return out


def hardy_dim(trunc: TruncationOrder, block_dim: int) -> int:
    return (trunc.N + 1) * block_dim


def laurent_dim(trunc: TruncationOrder, block_dim: int) -> int:
    return (2 * trunc.N + 1) * block_dim


def hardy_modes(trunc: TruncationOrder):
    return range(0, trunc.N + 1)


def laurent_modes(trunc: TruncationOrder):
    return range(-trunc.N, trunc.N + 1)


def _sym_getter(symbol: TrigPolySymbol):
    return lambda k: symbol.coeffs.get(k)


def materialize(op: StructuredOperator, trunc: TruncationOrder) -> np.ndarray:
    """Dense matrix of a structured operator at the given truncation."""
    if isinstance(op, Finite):
        return op.matrix.copy()
    if isinstance(op, HardyMultiplier):
        d = op.symbol.block_dim
        return block_multiplier_matrix(
            _sym_getter(op.symbol), hardy_modes(trunc), hardy_modes(trunc), d, d)
    if isinstance(op, HardyAdjoint):
        d = op.symbol.block_dim
        m = block_multiplier_matrix(
            _sym_getter(op.symbol), hardy_modes(trunc), hardy_modes(trunc), d, d)
        return dagger(m)
    if isinstance(op, LaurentMultiplier):
        d = op.symbol.block_dim
        return block_multiplier_matrix(
            _sym_getter(op.symbol), laurent_modes(trunc), laurent_modes(trunc), d, d)
    if isinstance(op, HardyShiftAdjoint):
        d = op.block_dim
        n = hardy_dim(trunc, d)
        m = np.zeros((n, n), dtype=complex)
        for j in range(trunc.N):
            m[j * d:(j + 1) * d, (j + 1) * d:(j + 2) * d] = np.eye(d)
        return m
    if isinstance(op, DirectSum):
        blocks = [materialize(p, trunc) for p in op.parts]
        n = sum(b.shape[0] for b in blocks)
        out = np.zeros((n, n), dtype=complex)
        at = 0
        for b in blocks:
            out[at:at + b.shape[0], at:at + b.shape[0]] = b
            at += b.shape[0]
        return out
    raise IncompatibleOperators(f"cannot materialize {type(op).__name__}")


def ambient_dim(op: StructuredOperator, trunc: TruncationOrder) -> int:
    if isinstance(op, Finite):
        return op.matrix.shape[0]
    if isinstance(op, (HardyMultiplier, HardyAdjoint)):
        return hardy_dim(trunc, op.symbol.block_dim)
    if isinstance(op, LaurentMultiplier):
        return laurent_dim(trunc, op.symbol.block_dim)
    if isinstance(op, HardyShiftAdjoint):
        return hardy_dim(trunc, op.block_dim)
    if isinstance(op, DirectSum):
        return sum(ambient_dim(p, trunc) for p in op.parts)
    raise IncompatibleOperators(f"unknown operator {type(op).__name__}")


def interior_mask(op: StructuredOperator, trunc: TruncationOrder,
                  margin: int | None = None) -> np.ndarray:
    """Boolean mask of coordinates at least `margin` modes away from the edge.

    Finite blocks are fully interior; Hardy/Laurent coordinates near the
    truncation boundary are excluded.
    """
    if margin is None:
        margin = trunc.interior_margin
    if isinstance(op, Finite):
        return np.ones(op.matrix.shape[0], dtype=bool)
    if isinstance(op, (HardyMultiplier, HardyAdjoint, HardyShiftAdjoint)):
        d = op.symbol.block_dim if not isinstance(op, HardyShiftAdjoint) else op.block_dim
        mask = np.array([m <= trunc.N - margin for m in hardy_modes(trunc)])
        return np.repeat(mask, d)
    if isinstance(op, LaurentMultiplier):
        d = op.symbol.block_dim
        mask = np.array([abs(m) <= trunc.N - margin for m in laurent_modes(trunc)])
        return np.repeat(mask, d)
    if isinstance(op, DirectSum):
        return np.concatenate([interior_mask(p, trunc, margin) for p in op.parts])
    raise IncompatibleOperators(f"unknown operator {type(op).__name__}")


# ---------------------------------------------------------------------------
# algebra


def compose(a: StructuredOperator, b: StructuredOperator,
            default_trunc: TruncationOrder | None = None) -> StructuredOperator:
    """Product a.b, symbol-exact where possible, lossy Finite otherwise."""
    if isinstance(a, Finite) and isinstance(b, Finite):
        if a.matrix.shape != b.matrix.shape:
            raise IncompatibleOperators("Finite blocks of different dimension")
        return Finite(a.matrix @ b.matrix)
    if isinstance(a, HardyMultiplier) and isinstance(b, HardyMultiplier):
        return HardyMultiplier(a.symbol.multiply(b.symbol))
    if isinstance(a, LaurentMultiplier) and isinstance(b, LaurentMultiplier):
        return LaurentMultiplier(a.symbol.multiply(b.symbol))
    if isinstance(a, DirectSum) and isinstance(b, DirectSum):
        if len(a.parts) != len(b.parts):
            raise IncompatibleOperators("direct sums of different arity")
        return DirectSum(tuple(compose(x, y, default_trunc)
                               for x, y in zip(a.parts, b.parts)))
    if _space_kind(a) != _space_kind(b):
        raise IncompatibleOperators(
            f"cannot compose {type(a).__name__} with {type(b).__name__}")
    # same space but no exact symbol product (shift adjoints, Hardy adjoints)
    if default_trunc is None:
        raise IncompatibleOperators(
            "composition is not symbol-exact; supply default_trunc")
    prod = materialize(a, default_trunc) @ materialize(b, default_trunc)
    return Finite(prod, lossy=True)


def _space_kind(op: StructuredOperator) -> str:
    if isinstance(op, Finite):
        return "finite"
    if isinstance(op, (HardyMultiplier, HardyAdjoint, HardyShiftAdjoint)):
        return "hardy"
    if isinstance(op, LaurentMultiplier):
        return "laurent"
    if isinstance(op, DirectSum):
        return "sum:" + ",".join(_space_kind(p) for p in op.parts)
    return "unknown"


def adjoint(op: StructuredOperator) -> StructuredOperator:
    if isinstance(op, Finite):
        return Finite(dagger(op.matrix))
    if isinstance(op, LaurentMultiplier):
        return LaurentMultiplier(op.symbol.conj_flip())
    if isinstance(op, HardyMultiplier):
        if op.symbol.degree_pos == 0:
            return HardyMultiplier(op.symbol.conj_flip())
        return HardyAdjoint(op.symbol)
    if isinstance(op, HardyAdjoint):
        return HardyMultiplier(op.symbol)
    if isinstance(op, HardyShiftAdjoint):
        return HardyMultiplier(TrigPolySymbol.shift(op.block_dim))
    if isinstance(op, DirectSum):
        return DirectSum(tuple(adjoint(p) for p in op.parts))
    raise IncompatibleOperators(f"unknown operator {type(op).__name__}")


# ---------------------------------------------------------------------------
# Toeplitz extraction


@dataclass(frozen=True)
class ToeplitzFit:
    symbol: TrigPolySymbol
    residual: float


def toeplitz_extract(m, block_dim: int, trunc: TruncationOrder,
                     tol: Tolerances = DEFAULT_TOL) -> ToeplitzFit:
    """Fit a block-Toeplitz structure over the interior window of m.

    The least-squares fit of each diagonal is a plain average of its interior
    blocks; the structural residual is the largest deviation of any interior
    block from its diagonal average.  Raises NotToeplitz when the residual
    exceeds residual_tol (extraction hypothesis fails).
    """
    m = as_square(m, "toeplitz_extract")
    n = m.shape[0]
    if block_dim < 1 or n % block_dim:
        raise DimensionMismatch(
            f"matrix dim {n} not divisible by block_dim {block_dim}")
    b = n // block_dim
    lo = min(trunc.interior_margin, (b - 1) // 2)
    hi = b - lo
    window = range(lo, hi)
    if not window:
        raise DimensionMismatch("interior window is empty")

    def blk(r, c):
        return m[r * block_dim:(r + 1) * block_dim,
                 c * block_dim:(c + 1) * block_dim]

    coeffs = {}
    residual = 0.0
    span = len(window)
    for k in range(-(span - 1), span):
        pairs = [(r, r - k) for r in window if lo <= r - k < hi]
        if not pairs:
            continue
        avg = sum(blk(r, c) for r, c in pairs) / len(pairs)
        for r, c in pairs:
            residual = max(residual, op_norm(blk(r, c) - avg))
        if op_norm(avg) > tol.residual_tol:
            coeffs[k] = avg
    if residual > tol.residual_tol:
        raise NotToeplitz(f"structural residual {residual:.3e}")
    return ToeplitzFit(TrigPolySymbol(block_dim, coeffs), residual)


# ---------------------------------------------------------------------------
# strong limit of P^n P^{*n}


def strong_limit_astar(op: StructuredOperator, trunc: TruncationOrder,
                       tol: Tolerances = DEFAULT_TOL) -> StructuredOperator:
    """Structure-aware strong limit A_* of P^n P^{*n}.

    Finite contractions iterate M -> P M P^* from the identity; shift
    adjoints return the identity multiplier exactly (S^{*n} S^n = I); the
    fallback for generic multipliers is a windowed power iteration whose
    result is trusted only on interior coordinates.
    """
    if isinstance(op, DirectSum):
        return DirectSum(tuple(strong_limit_astar(p, trunc, tol) for p in op.parts))
    if op.astar_hint == "identity":
        if isinstance(op, Finite):
            return Finite(np.eye(op.matrix.shape[0], dtype=complex))
        return HardyMultiplier(TrigPolySymbol.constant(np.eye(_block_dim_of(op))))
    if op.astar_hint == "zero":
        if isinstance(op, Finite):
            return Finite(np.zeros_like(op.matrix))
        return Finite(np.zeros((ambient_dim(op, trunc),) * 2, dtype=complex))
    if isinstance(op, Finite):
        return Finite(_power_limit(op.matrix, trunc, tol))
    # generic multiplier: materialize and trust the interior window only
    return Finite(_power_limit(materialize(op, trunc), trunc, tol), lossy=True)


def _block_dim_of(op: StructuredOperator) -> int:
    if isinstance(op, (HardyMultiplier, HardyAdjoint, LaurentMultiplier)):
        return op.symbol.block_dim
    if isinstance(op, HardyShiftAdjoint):
        return op.block_dim
    raise IncompatibleOperators("operator has no block dimension")


def _power_limit(p: np.ndarray, trunc: TruncationOrder, tol: Tolerances) -> np.ndarray:
    if op_norm(p) > 1 + tol.rank_tol:
        raise NotAContraction("strong_limit_astar requires a contraction")
    a = np.eye(p.shape[0], dtype=complex)
    for _ in range(10 * trunc.N):
        nxt = p @ a @ dagger(p)
        if op_norm(nxt - a) < tol.convergence_tol:
            return nxt
        a = nxt
    raise NoConvergence("power iteration for A_* did not converge")
