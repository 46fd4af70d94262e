"""Point geometry of the symmetrized polydisc and the tetrablock.

Membership tests are algebraic (root moduli via companion matrices, linear
parametrization inversion); sup norms over the distinguished boundaries are
grid maxima refined by deterministic coordinate ascent, so the reported value
is always a lower bound of the true supremum.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import GridTooCoarse, InvalidParams, RootFindingFailure
from .linalg import DEFAULT_TOL, Tolerances, as_square, op_norm

GRID_EVAL_CAP = 10 ** 7
_CHUNK = 1 << 16


# ---------------------------------------------------------------------------
# polynomials in several complex variables


class MultiPoly:
    """Polynomial in n complex variables as a multi-index coefficient map."""

    def __init__(self, n: int, terms: dict):
        self.n = int(n)
        self.terms = {}
        for alpha, c in terms.items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != self.n or min(alpha, default=0) < 0:
                raise InvalidParams(f"bad multi-index {alpha}")
            c = complex(c)
            if c != 0:
                self.terms[alpha] = self.terms.get(alpha, 0) + c

    @property
    def degree(self) -> int:
        return max((sum(a) for a in self.terms), default=0)

    def alpha_matrix(self):
        alphas = sorted(self.terms)
        coeffs = np.array([self.terms[a] for a in alphas], dtype=complex)
        return np.array(alphas, dtype=np.int64).reshape(len(alphas), self.n), coeffs

    def eval_points(self, points: np.ndarray) -> np.ndarray:
        """Values at an (m, n) array of points."""
        points = np.asarray(points, dtype=complex)
        if not self.terms:
            return np.zeros(points.shape[0], dtype=complex)
        alphas, coeffs = self.alpha_matrix()
        return coeffs @ _kernels.monomial_values(alphas, points)

    def eval_operators(self, members) -> np.ndarray:
        """f(T_1, ..., T_n) for commuting square matrices, via cached powers."""
        members = [as_square(m, "member") for m in members]
        if len(members) != self.n:
            raise InvalidParams(f"expected {self.n} operators, got {len(members)}")
        dim = members[0].shape[0]
        maxdeg = [max((a[v] for a in self.terms), default=0) for v in range(self.n)]
        pows = []
        for v, m in enumerate(members):
            pv = [np.eye(dim, dtype=complex)]
            for _ in range(maxdeg[v]):
                pv.append(pv[-1] @ m)
            pows.append(pv)
        out = np.zeros((dim, dim), dtype=complex)
        for alpha, c in self.terms.items():
            term = None
            for v, a in enumerate(alpha):
                if a:
                    term = pows[v][a] if term is None else term @ pows[v][a]
            out += c * (np.eye(dim, dtype=complex) if term is None else term)
        return out

    def to_json(self) -> dict:
        return {"n": self.n,
                "terms": [{"alpha": list(a), "coeff": [self.terms[a].real, self.terms[a].imag]}
                          for a in sorted(self.terms)]}

    @staticmethod
    def from_json(obj: dict) -> "MultiPoly":
        return MultiPoly(obj["n"], {tuple(t["alpha"]): complex(t["coeff"][0], t["coeff"][1])
                                    for t in obj["terms"]})

    def __repr__(self):
        return f"MultiPoly(n={self.n}, terms={len(self.terms)}, deg={self.degree})"


def all_alphas(n: int, max_degree: int):
    """All multi-indices in n variables of total degree <= max_degree."""
    out = [()]
    for _ in range(n):
        out = [a + (d,) for a in out for d in range(max_degree + 1 - sum(a))]
    return sorted(out)


def random_poly(rng: np.random.Generator, n: int, max_degree: int = 4) -> MultiPoly:
    """Random polynomial with standard complex Gaussian coefficients."""
    terms = {}
    for a in all_alphas(n, max_degree):
        terms[a] = complex(rng.standard_normal(), rng.standard_normal())
    return MultiPoly(n, terms)


# ---------------------------------------------------------------------------
# symmetrization and membership


@dataclass(frozen=True)
class GammaPoint:
    n: int
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.n:
            raise InvalidParams("coords length must equal n")


@dataclass(frozen=True)
class MembershipVerdict:
    status: str  # Interior | InSet | OnDistinguishedBoundary | Outside
    margin: float
    witness: object = None

    @property
    def in_closure(self) -> bool:
        return self.status in ("Interior", "InSet", "OnDistinguishedBoundary")

    @property
    def is_interior(self) -> bool:
        return self.status == "Interior"


def symmetrize(z) -> GammaPoint:
    """Elementary symmetric coordinates (e_1, ..., e_n) of a complex tuple."""
    z = np.asarray(z, dtype=complex).ravel()
    n = z.size
    e = np.zeros(n + 1, dtype=complex)
    e[0] = 1.0
    for j in range(n):
        # descending k keeps the recurrence e_k += z_j e_{k-1} in place
        for k in range(j + 1, 0, -1):
            e[k] = e[k] + z[j] * e[k - 1]
    return GammaPoint(n, tuple(e[1:]))


def companion_matrix(monic_coeffs: np.ndarray) -> np.ndarray:
    """Companion matrix of w^n + c_{n-1} w^{n-1} + ... + c_0 (coeffs low-first)."""
    c = np.asarray(monic_coeffs, dtype=complex).ravel()
    n = c.size
    m = np.zeros((n, n), dtype=complex)
    if n > 1:
        m[1:, :-1] = np.eye(n - 1)
    m[:, -1] = -c
    return m


def gamma_roots(pt: GammaPoint) -> np.ndarray:
    """Roots of w^n - s_1 w^{n-1} + ... + (-1)^n p via companion eigenvalues."""
    n = pt.n
    signs = np.array([(-1.0) ** k for k in range(1, n + 1)])
    # low-first coefficients c_0..c_{n-1} of the monic polynomial
    c = np.array([signs[n - 1 - j] * pt.coords[n - 1 - j] for j in range(n)])
    roots = np.linalg.eigvals(companion_matrix(c))
    if not np.all(np.isfinite(roots)):
        raise RootFindingFailure("companion eigenvalues are not finite")
    return roots


def gamma_membership(pt: GammaPoint, tol: Tolerances = DEFAULT_TOL) -> MembershipVerdict:
    """Classify a point against the closed symmetrized polydisc.

    Membership is equivalent to all roots of the associated monic polynomial
    having modulus <= 1; the distinguished boundary is the image of the torus.
    The boundary band widens with the root condition number (1/|p'(r)|) so
    multiple roots on the circle are still recognized.
    """
    roots = gamma_roots(pt)
    mods = np.abs(roots)
    n = pt.n
    signs = np.array([(-1.0) ** k for k in range(1, n + 1)])
    c = np.array([signs[n - 1 - j] * pt.coords[n - 1 - j] for j in range(n)])
    scale = 1.0 + np.abs(c).max(initial=0.0)
    dp = n * roots ** (n - 1)
    for k in range(1, n):
        dp += k * c[k] * roots ** (k - 1)
    eps = np.finfo(float).eps
    err = eps * (n + 1) * scale / np.maximum(np.abs(dp), 1e-300)
    band = np.maximum(tol.algebraic_tol, np.minimum(50 * err, 1e-5))

    atol = tol.algebraic_tol
    margin = float(1.0 - mods.max(initial=0.0))
    if np.all(np.abs(mods - 1.0) <= band):
        return MembershipVerdict("OnDistinguishedBoundary", margin, roots)
    if mods.max(initial=0.0) < 1 - atol:
        return MembershipVerdict("Interior", margin, roots)
    if mods.max(initial=0.0) <= 1 + atol:
        return MembershipVerdict("InSet", margin, roots)
    return MembershipVerdict("Outside", margin, roots)


def _tetra_beta(x1, x2, x3):
    den = 1.0 - abs(x3) ** 2
    b1 = (x1 - np.conj(x2) * x3) / den
    b2 = (x2 - np.conj(x1) * x3) / den
    return b1, b2


def tetrablock_membership(x, tol: Tolerances = DEFAULT_TOL) -> MembershipVerdict:
    """Classify a triple against the closed tetrablock.

    For |x3| < 1 the defining parametrization is inverted linearly.  For
    unimodular x3 the parametrization degenerates; the point is classified
    against the closure by solving the (rank-deficient) realified system in
    the limit, which requires x2 = conj(x1) x3 and |x1| <= 1.
    """
    x1, x2, x3 = (complex(v) for v in x)
    atol = tol.algebraic_tol
    if abs(x3) > 1 + atol:
        return MembershipVerdict("Outside", 1.0 - abs(x3), None)
    if abs(x3) < 1 - atol:
        b1, b2 = _tetra_beta(x1, x2, x3)
        s = abs(b1) + abs(b2)
        margin = 1.0 - s
        if s < 1 - atol:
            return MembershipVerdict("Interior", margin, (b1, b2))
        if s <= 1 + atol:
            return MembershipVerdict("InSet", margin, (b1, b2))
        return MembershipVerdict("Outside", margin, (b1, b2))
    # |x3| ~ 1: limit of the interior solves; least-squares on the realified
    # system beta1 + conj(beta2) x3 = x1, beta2 + conj(beta1) x3 = x2
    u = x3 / abs(x3)
    a = np.zeros((4, 4))
    a[0, 0], a[1, 1] = 1.0, 1.0
    a[0, 2], a[0, 3] = u.real, u.imag
    a[1, 2], a[1, 3] = u.imag, -u.real
    a[2, 2], a[3, 3] = 1.0, 1.0
    a[2, 0], a[2, 1] = u.real, u.imag
    a[3, 0], a[3, 1] = u.imag, -u.real
    rhs = np.array([x1.real, x1.imag, x2.real, x2.imag])
    sol, *_ = np.linalg.lstsq(a, rhs, rcond=None)
    b1 = complex(sol[0], sol[1])
    b2 = complex(sol[2], sol[3])
    resid = float(np.linalg.norm(a @ sol - rhs))
    s = abs(b1) + abs(b2)
    if resid <= tol.grid_tol and s <= 1 + tol.grid_tol:
        return MembershipVerdict("OnDistinguishedBoundary", 0.0, (b1, b2))
    return MembershipVerdict("Outside", -max(resid, s - 1.0), (b1, b2))


# ---------------------------------------------------------------------------
# structured singular value for 2x2 diagonal perturbations


def _mu_cost_grid(a, b, d, z_grid):
    """max(|x1|, |x2|) along det(I - A diag(x1, x2)) = 0 with x1 = z_grid."""
    num = a * z_grid - 1.0
    den = d * z_grid - b
    safe = np.abs(den) > 1e-14
    cost = np.full(z_grid.shape, np.inf)
    x2 = np.where(safe, num / np.where(safe, den, 1.0), 0.0)
    cost[safe] = np.maximum(np.abs(z_grid[safe]), np.abs(x2[safe]))
    # on the pole line the determinant is constant: solvable iff num ~ 0 too
    free = (~safe) & (np.abs(num) <= 1e-12)
    cost[free] = np.abs(z_grid[free])
    return cost


def _mu_scan(a, b, d, radii, phases):
    z = np.outer(radii, np.exp(1j * phases)).ravel()
    c1 = _mu_cost_grid(a, b, d, z)
    c2 = _mu_cost_grid(b, a, d, z)  # roles of x1 and x2 swapped
    cost = np.minimum(c1, c2)
    i = int(np.argmin(cost))
    return float(cost[i]), z[i]


def mu_diag_2x2(A, tol: Tolerances = DEFAULT_TOL) -> float:
    """Structured singular value of a 2x2 matrix w.r.t. diagonal perturbations.

    Brute-force minimization of max(|x1|, |x2|) over the singularity variety
    det(I - A X) = 0, refined by nested local grids, cross-checked against
    the tetrablock membership of (a11, a22, det A).
    """
    A = as_square(A, "mu_diag_2x2")
    if A.shape != (2, 2):
        raise InvalidParams("mu_diag_2x2 expects a 2x2 matrix")
    a, b = complex(A[0, 0]), complex(A[1, 1])
    d = complex(np.linalg.det(A))

    best = np.inf
    if max(abs(a), abs(b), abs(d)) > 1e-14:
        radii = np.geomspace(1e-3, 1e3, 121)
        phases = np.linspace(0.0, 2 * np.pi, 72, endpoint=False)
        best, zbest = _mu_scan(a, b, d, radii, phases)
        # exact candidates on the degenerate lines d*x - c = 0
        for aa, bb in ((a, b), (b, a)):
            if abs(d) > 1e-14:
                x = bb / d
                if abs(aa * x - 1.0) <= 1e-10:
                    if abs(x) < best:
                        best, zbest = abs(x), x
        span = 0.5
        for _ in range(12):
            r0 = abs(zbest)
            ph0 = np.angle(zbest)
            radii = r0 * np.exp(np.linspace(-span, span, 21))
            phases = ph0 + np.linspace(-np.pi * span, np.pi * span, 23)
            cand, zc = _mu_scan(a, b, d, radii, phases)
            if cand < best:
                best, zbest = cand, zc
            span *= 0.45

    mu = 0.0 if not np.isfinite(best) or best > 1e5 else 1.0 / best

    verdict = tetrablock_membership((a, b, d), tol)
    gt = tol.grid_tol
    if mu < 1 - gt and verdict.margin < -gt:
        raise GridTooCoarse(f"mu={mu:.6f} but point margin {verdict.margin:.3e}")
    if mu > 1 + gt and verdict.is_interior and verdict.margin > gt:
        raise GridTooCoarse(f"mu={mu:.6f} but point is interior ({verdict.margin:.3e})")
    return mu


# ---------------------------------------------------------------------------
# sup norms over distinguished boundaries


_SYM_GRID_CACHE: dict = {}
_TOPK = 4


def _torus_theta_chunk(idx: np.ndarray, n: int, g: int) -> np.ndarray:
    """Angles for flat grid indices (fixed enumeration order)."""
    th = np.empty((idx.size, n))
    rem = idx.copy()
    for v in range(n - 1, -1, -1):
        th[:, v] = (rem % g) * (2 * np.pi / g)
        rem //= g
    return th


def _merge_topk(best_v, best_x, vals, xs, k):
    """Per-row top-k merge of running bests with a chunk of candidates."""
    v = np.concatenate([best_v, vals], axis=1)
    x = np.concatenate([best_x, xs], axis=1)
    order = np.argsort(-v, axis=1)[:, :k]
    rows = np.arange(v.shape[0])[:, None]
    return v[rows, order], x[rows, order]


def _gamma_eval_rows(coeff_rows, alphas):
    def eval_rows(thetas):
        pts = _kernels.torus_symmetrize(thetas)
        mono = _kernels.monomial_values(alphas, pts)
        return np.abs(np.einsum("bt,tb->b", coeff_rows, mono))
    return eval_rows


def _topk_on_torus(coeff_rows: np.ndarray, alphas: np.ndarray, n: int, g: int,
                   k: int = _TOPK, rng: np.random.Generator | None = None):
    """Per-row top-k grid nodes of |f| over the symmetrized torus.

    Returns (values (B, k), thetas (B, k, n)).  Falls back to seeded random
    torus sampling above the evaluation cap (flagged with a warning).
    """
    total = g ** n
    B = coeff_rows.shape[0]
    best_v = np.full((B, k), -1.0)
    best_th = np.zeros((B, k, n))

    if total > GRID_EVAL_CAP:
        warnings.warn("full torus grid exceeds evaluation cap; sampling randomly")
        rng = rng or np.random.default_rng(0)
        for _ in range(max(1, GRID_EVAL_CAP // _CHUNK)):
            th = rng.uniform(0.0, 2 * np.pi, (_CHUNK, n))
            pts = _kernels.torus_symmetrize(th)
            vals = np.abs(coeff_rows @ _kernels.monomial_values(alphas, pts))
            part = np.argpartition(-vals, k, axis=1)[:, :k]
            rows = np.arange(B)[:, None]
            best_v, best_th = _merge_topk(
                best_v, best_th, vals[rows, part], th[part], k)
        return best_v, best_th

    key = (n, g)
    pts_full = _SYM_GRID_CACHE.get(key)
    if pts_full is None and total * n <= 2 ** 21:
        th = _torus_theta_chunk(np.arange(total), n, g)
        pts_full = _kernels.torus_symmetrize(th)
        _SYM_GRID_CACHE[key] = pts_full

    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total))
        if pts_full is not None:
            pts = pts_full[start:start + idx.size]
        else:
            pts = _kernels.torus_symmetrize(_torus_theta_chunk(idx, n, g))
        vals = np.abs(coeff_rows @ _kernels.monomial_values(alphas, pts))
        kk = min(k, idx.size)
        part = np.argpartition(-vals, kk - 1, axis=1)[:, :kk]
        rows = np.arange(B)[:, None]
        chunk_th = _torus_theta_chunk(idx[part.ravel()], n, g).reshape(B, kk, n)
        best_v, best_th = _merge_topk(best_v, best_th, vals[rows, part], chunk_th, k)
    return best_v, best_th


def _batched_ascend(eval_rows, x0: np.ndarray, step: float, clip=None,
                    max_rounds: int = 60):
    """Deterministic coordinate ascent run on every row simultaneously."""
    x = x0.copy()
    v = eval_rows(x)
    B, d = x.shape
    h = np.full(B, step)
    for _ in range(max_rounds):
        improved = np.zeros(B, dtype=bool)
        for i in range(d):
            for s in (1.0, -1.0):
                y = x.copy()
                y[:, i] += s * h
                if clip is not None:
                    y = clip(y)
                vy = eval_rows(y)
                better = vy > v + 1e-15
                x[better] = y[better]
                v[better] = vy[better]
                improved |= better
        h = np.where(improved, h, h * 0.5)
        if np.all(h < 1e-10):
            break
    return v, x


def _refined_sup_batch(coeff_rows, alphas, n, g, refine, clip=None,
                       grid_topk=None, eval_rows=None, step=None):
    """Shared grid + multi-start ascent driver; returns (B,) sup lower bounds."""
    best_v, best_x = grid_topk()
    sup = best_v.max(axis=1)
    if refine:
        for j in range(best_v.shape[1]):
            v, _ = _batched_ascend(eval_rows, best_x[:, j], step, clip=clip)
            sup = np.maximum(sup, v)
    return sup


def gamma_sup_batch(coeff_rows: np.ndarray, alphas: np.ndarray, n: int, g: int,
                    refine: bool = True) -> np.ndarray:
    """Sup lower bounds over Gamma_n for a batch of polynomials sharing alphas."""
    return _refined_sup_batch(
        coeff_rows, alphas, n, g, refine,
        grid_topk=lambda: _topk_on_torus(coeff_rows, alphas, n, g),
        eval_rows=_gamma_eval_rows(coeff_rows, alphas),
        step=np.pi / g)


def sup_norm_on_gamma(f: MultiPoly, n: int | None = None,
                      grid: int | None = None,
                      tol: Tolerances = DEFAULT_TOL,
                      refine: bool = True) -> float:
    """Lower bound of sup |f| over the closed symmetrized polydisc.

    The sup is attained on the symmetrized torus (distinguished boundary);
    grid maxima are sharpened by multi-start coordinate ascent over the torus
    angles, so refinement is monotone nondecreasing in the grid.
    """
    n = f.n if n is None else n
    if n != f.n:
        raise InvalidParams("polynomial arity differs from n")
    g = grid or tol.grid_points
    alphas, coeffs = f.alpha_matrix()
    if coeffs.size == 0:
        return 0.0
    return float(gamma_sup_batch(coeffs[None, :], alphas, n, g, refine)[0])


def _tetra_boundary_points(params: np.ndarray) -> np.ndarray:
    """Map (r1, r2, phi1, phi2, psi) rows to distinguished-boundary triples."""
    r1, r2, p1, p2, ps = (params[:, i] for i in range(5))
    b1 = r1 * np.exp(1j * p1)
    b2 = r2 * np.exp(1j * p2)
    x3 = np.exp(1j * ps)
    x1 = b1 + np.conj(b2) * x3
    x2 = b2 + np.conj(b1) * x3
    return np.stack([x1, x2, x3], axis=1)


def _clip_tetra_params(y: np.ndarray) -> np.ndarray:
    y = y.copy()
    y[0] = min(max(y[0], 0.0), 1.0)
    y[1] = min(max(y[1], 0.0), 1.0)
    s = y[0] + y[1]
    if s > 1.0:
        y[0] /= s
        y[1] /= s
    return y


def _clip_tetra_rows(y: np.ndarray) -> np.ndarray:
    y = y.copy()
    y[:, 0] = np.clip(y[:, 0], 0.0, 1.0)
    y[:, 1] = np.clip(y[:, 1], 0.0, 1.0)
    s = y[:, 0] + y[:, 1]
    over = s > 1.0
    y[over, 0] /= s[over]
    y[over, 1] /= s[over]
    return y


def _tetra_eval_rows(coeff_rows, alphas):
    def eval_rows(params):
        pts = _tetra_boundary_points(params)
        mono = _kernels.monomial_values(alphas, pts)
        return np.abs(np.einsum("bt,tb->b", coeff_rows, mono))
    return eval_rows


def _topk_on_tetra(coeff_rows, alphas, g, k=_TOPK):
    steps = 5
    radial = [(i / steps, j / steps)
              for i in range(steps + 1) for j in range(steps + 1 - i)]
    phases = np.linspace(0.0, 2 * np.pi, g, endpoint=False)
    pp1, pp2, pps = np.meshgrid(phases, phases, phases, indexing="ij")
    phase_rows = np.stack([pp1.ravel(), pp2.ravel(), pps.ravel()], axis=1)
    B = coeff_rows.shape[0]
    best_v = np.full((B, k), -1.0)
    best_x = np.zeros((B, k, 5))
    rows = np.arange(B)[:, None]
    for r1, r2 in radial:
        params = np.concatenate(
            [np.full((phase_rows.shape[0], 1), r1),
             np.full((phase_rows.shape[0], 1), r2), phase_rows], axis=1)
        pts = _tetra_boundary_points(params)
        vals = np.abs(coeff_rows @ _kernels.monomial_values(alphas, pts))
        kk = min(k, params.shape[0])
        part = np.argpartition(-vals, kk - 1, axis=1)[:, :kk]
        best_v, best_x = _merge_topk(best_v, best_x, vals[rows, part],
                                     params[part], k)
    return best_v, best_x


def tetra_sup_batch(coeff_rows: np.ndarray, alphas: np.ndarray, g: int,
                    refine: bool = True) -> np.ndarray:
    """Sup lower bounds over the closed tetrablock for a batch of polynomials."""
    return _refined_sup_batch(
        coeff_rows, alphas, 3, g, refine,
        grid_topk=lambda: _topk_on_tetra(coeff_rows, alphas, g),
        eval_rows=_tetra_eval_rows(coeff_rows, alphas),
        step=0.1, clip=_clip_tetra_rows)


def sup_norm_on_tetra(f: MultiPoly, grid: int | None = None,
                      tol: Tolerances = DEFAULT_TOL,
                      refine: bool = True) -> float:
    """Lower bound of sup |f| over the closed tetrablock.

    Maximizes over the distinguished boundary parametrized by
    (beta_1, beta_2, x_3) with |beta_1| + |beta_2| <= 1 and |x_3| = 1.
    """
    if f.n != 3:
        raise InvalidParams("tetrablock polynomials have 3 variables")
    g = grid or max(8, tol.grid_points // 4)
    alphas, coeffs = f.alpha_matrix()
    if coeffs.size == 0:
        return 0.0
    return float(tetra_sup_batch(coeffs[None, :], alphas, g, refine)[0])


# ---------------------------------------------------------------------------
# von Neumann refutation


@dataclass(frozen=True)
class RefutationWitness:
    poly: MultiPoly
    operator_norm: float
    sup_norm: float


def _refute(members, sup_fn, samples: int, seed: int,
            tol: Tolerances, max_degree: int = 4):
    n = len(members)
    rng = np.random.default_rng(seed)
    margin = max(tol.grid_tol, 1e-6)
    for _ in range(samples):
        f = random_poly(rng, n, max_degree)
        val = op_norm(f.eval_operators(members))
        sup = sup_fn(f)
        if val > sup * (1 + margin):
            return RefutationWitness(f, val, sup)
    return None


def refute_gamma_contraction(members, samples: int = 50, seed: int = 0,
                             tol: Tolerances = DEFAULT_TOL,
                             grid: int | None = None,
                             max_degree: int = 4) -> RefutationWitness | None:
    """Search for a polynomial violating the von Neumann bound over Gamma_n.

    Absence of a witness is not a certificate (one-sided test).  The members
    are (S_1, ..., S_{n-1}, P); the scan grid defaults to a coarse torus grid
    whose maxima are sharpened by ascent.
    """
    n = len(members)
    g = grid or min(DEFAULT_TOL.grid_points, max(12, 96 // n))

    def sup_fn(f):
        return sup_norm_on_gamma(f, n, grid=g, tol=tol)

    return _refute(members, sup_fn, samples, seed, tol, max_degree)


def refute_e_contraction(members, samples: int = 50, seed: int = 0,
                         tol: Tolerances = DEFAULT_TOL,
                         grid: int | None = None,
                         max_degree: int = 4) -> RefutationWitness | None:
    """von Neumann refutation over the closed tetrablock for a triple."""
    if len(members) != 3:
        raise InvalidParams("tetrablock refutation expects a triple")

    def sup_fn(f):
        return sup_norm_on_tetra(f, grid=grid, tol=tol)

    return _refute(members, sup_fn, samples, seed, tol, max_degree)


def is_contraction_unrefuted(members, tol: Tolerances = DEFAULT_TOL,
                             samples: int = 30, seed: int = 0) -> bool:
    """Refutation-only Gamma_k-contraction check used by the recursive
    characterizations; k = 1 reduces to an exact norm test."""
    if len(members) == 1:
        return op_norm(members[0]) <= 1 + tol.residual_tol
    return refute_gamma_contraction(members, samples=samples, seed=seed, tol=tol) is None
