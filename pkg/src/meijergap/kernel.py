"""Hard-edge Meijer-G kernel: gamma-ratio symbol, contour quadrature,
double-contour evaluation, residue-series oracle, and the Bessel kernel.

The kernel of the determinantal point process is

    K(x, y) = (2 pi i)^-2  int_gamma du  int_gammatilde dv
              F(u)/F(v) * x^-u y^(v-1) / (v - u),

with F(z) = Gamma(z) prod_k Gamma(1+mu_k-z) / prod_j Gamma(1+nu_j-z).
Both contours run upward between the two pole families, gamma bending into
the left half-plane past the poles of Gamma(z) and gammatilde into the
right half-plane short of the poles at 1+nu_min, 2+nu_min, ...
Discretizing both contours once turns every kernel evaluation into a
bilinear form in precomputed separable coefficients, which is what makes
the Fredholm matrix fill cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import AccuracyError, ConvergenceError, DomainError
from .specfun import bessel_j, log_gamma

_TWO_PI_I_SQ = (2j * math.pi) ** 2


@dataclass(frozen=True)
class ProcessParams:
    """Model parameters (r, q, nu_1..nu_r, mu_1..mu_q) of the point process.

    Requires r > q >= 0 and every nu_j, mu_k > -1.
    """

    r: int
    q: int
    nu: tuple
    mu: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "nu", tuple(float(v) for v in self.nu))
        object.__setattr__(self, "mu", tuple(float(v) for v in self.mu))
        if int(self.r) != self.r or int(self.q) != self.q:
            raise DomainError("r and q must be integers")
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "q", int(self.q))
        if not self.r > self.q >= 0:
            raise DomainError("requires r > q >= 0")
        if len(self.nu) != self.r:
            raise DomainError(f"nu must have length r = {self.r}")
        if len(self.mu) != self.q:
            raise DomainError(f"mu must have length q = {self.q}")
        if any(v <= -1.0 for v in self.nu) or any(m <= -1.0 for m in self.mu):
            raise DomainError("requires every nu_j > -1 and mu_k > -1")

    @property
    def nu_min(self) -> float:
        return min(self.nu + self.mu)


def log_big_f(z, params: ProcessParams):
    """ln F(z) = ln Gamma(z) + sum_k ln Gamma(1+mu_k-z) - sum_j ln Gamma(1+nu_j-z),
    each term the principal branch.

    The sum is analytic on C minus ((-inf, 0] union [1+nu_min, inf)); off
    that set it is still a valid pointwise logarithm of F.  Raises PoleError
    at poles of the numerator gammas (and at zeros of F, where the
    denominator gammas blow up).
    """
    z = np.asarray(z, dtype=complex)
    out = log_gamma(z)
    for m in params.mu:
        out = out + log_gamma(1.0 + m - z)
    for v in params.nu:
        out = out - log_gamma(1.0 + v - z)
    return out


@dataclass(frozen=True)
class ContourQuadrature:
    """Discretized contours and precomputed separable kernel coefficients.

    ``gamma_weights`` / ``gammatilde_weights`` already carry the complex
    direction factor dz of each node, so a contour integral is just the dot
    product with integrand values.  ``separable_coeffs[i, j]`` equals
    w_i wt_j F(u_i) / (F(v_j) (v_j - u_i) (2 pi i)^2), making

        K(x, y) = Re sum_ij separable_coeffs[i, j] x^-u_i y^(v_j - 1).
    """

    params: ProcessParams
    gamma_nodes: np.ndarray
    gamma_weights: np.ndarray
    gammatilde_nodes: np.ndarray
    gammatilde_weights: np.ndarray
    crossing_points: tuple
    x_range: tuple
    truncation_bound: float
    separable_coeffs: np.ndarray = field(repr=False)


def _panel(z0: complex, z1: complex, points: int):
    """Gauss-Legendre nodes/weights on the straight segment z0 -> z1."""
    x, w = np.polynomial.legendre.leggauss(points)
    return (z0 + z1) / 2 + (z1 - z0) / 2 * x, (z1 - z0) / 2 * w


def _build_half_contour(x_cross, angle, params, x_range, tol, invert, panel_points, panel_length, node_cap):
    """One contour: vertical segment through x_cross for |Im| <= 1 plus rays
    at +-angle, oriented upward.  Rays are extended panel by panel until the
    integrand magnitude bound over x_range drops below tol."""
    x_lo, x_hi = x_range
    ln_tol = math.log(tol)
    nodes, weights = [], []

    for k in range(2):  # vertical segment in two panels, bottom to top
        z0 = x_cross + 1j * (-1.0 + k)
        zz, ww = _panel(z0, z0 + 1j, panel_points)
        nodes.append(zz)
        weights.append(ww)

    for direction, orient in ((np.exp(1j * angle), +1), (np.exp(-1j * angle), -1)):
        start = x_cross + 1j * orient
        t = 0.0
        n_panels = 0
        while True:
            zz, ww = _panel(start + direction * t, start + direction * (t + panel_length), panel_points)
            # lower ray is traversed from infinity toward the segment
            nodes.append(zz)
            weights.append(orient * ww)
            t += panel_length
            n_panels += 1
            tip = start + direction * t
            ln_f = float(log_big_f(tip, params).real)
            ln_mag = -ln_f if invert else ln_f
            re = tip.real
            if invert:
                ln_pow = max((re - 1.0) * math.log(x_lo), (re - 1.0) * math.log(x_hi))
            else:
                ln_pow = max(-re * math.log(x_lo), -re * math.log(x_hi))
            if n_panels >= 2 and ln_mag + ln_pow < ln_tol:
                break
            if sum(len(n) for n in nodes) + panel_points > node_cap:
                raise ConvergenceError(
                    f"contour truncation bound {tol} not reached within {node_cap} nodes"
                )
    return np.concatenate(nodes), np.concatenate(weights)


def build_contours(
    params: ProcessParams,
    x_range: tuple,
    tol: float,
    panel_points: int = 20,
    panel_length: float = 1.5,
    node_cap: int = 4096,
) -> ContourQuadrature:
    """Discretize the two kernel contours for arguments inside ``x_range``.

    gamma crosses the real axis at (1+nu_min)/3 with rays into the left
    half-plane at angles +-2 pi/3; gammatilde crosses at 2(1+nu_min)/3 with
    rays at +-pi/3 into the right half-plane.  The integrand factors
    |F(u) x^-u| and |y^(v-1) / F(v)| decay super-exponentially along these
    rays, so fixed-length composite Gauss-Legendre panels are extended until
    their magnitude bound over ``x_range`` falls below ``tol``.
    """
    x_lo, x_hi = float(x_range[0]), float(x_range[1])
    if not (0.0 < x_lo < x_hi) or not math.isfinite(x_hi):
        raise DomainError("x_range must satisfy 0 < x_lo < x_hi < inf")
    if not tol > 0.0:
        raise DomainError("tol must be positive")

    span = 1.0 + params.nu_min
    x_gamma, x_gammatilde = span / 3.0, 2.0 * span / 3.0
    u, wu = _build_half_contour(
        x_gamma, 2 * math.pi / 3, params, (x_lo, x_hi), tol, False, panel_points, panel_length, node_cap
    )
    v, wv = _build_half_contour(
        x_gammatilde, math.pi / 3, params, (x_lo, x_hi), tol, True, panel_points, panel_length, node_cap
    )

    ln_fu = log_big_f(u, params)
    ln_fv = log_big_f(v, params)
    coeffs = (wu[:, None] * wv[None, :]) * np.exp(ln_fu[:, None] - ln_fv[None, :])
    coeffs /= (v[None, :] - u[:, None]) * _TWO_PI_I_SQ
    if not np.all(np.isfinite(coeffs)):
        raise AccuracyError("non-finite separable coefficients; contours too aggressive for these parameters")

    return ContourQuadrature(
        params=params,
        gamma_nodes=u,
        gamma_weights=wu,
        gammatilde_nodes=v,
        gammatilde_weights=wv,
        crossing_points=(x_gamma, x_gammatilde),
        x_range=(x_lo, x_hi),
        truncation_bound=float(tol),
        separable_coeffs=coeffs,
    )


def _check_range(x, cq: ContourQuadrature):
    x_lo, x_hi = cq.x_range
    if np.any(x < 0.999 * x_lo) or np.any(x > 1.001 * x_hi):
        raise DomainError(f"argument outside the x_range {cq.x_range} the contours were built for")


def kernel_matrix(xs, ys, cq: ContourQuadrature) -> np.ndarray:
    """K(x_i, y_j) on the grid xs x ys via the separable bilinear form."""
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    ys = np.atleast_1d(np.asarray(ys, dtype=float))
    _check_range(xs, cq)
    _check_range(ys, cq)
    px = np.exp(-np.outer(np.log(xs), cq.gamma_nodes))
    py = np.exp(np.outer(np.log(ys), cq.gammatilde_nodes - 1.0))
    vals = px @ cq.separable_coeffs @ py.T
    # the imaginary part must vanish in exact arithmetic; allow it to scale
    # with the value magnitude where the kernel legitimately exceeds 1
    # (x -> 0 with nu_min < 0), which reduces to the plain absolute check
    # everywhere else
    threshold = 100.0 * cq.truncation_bound * np.maximum(1.0, np.abs(vals.real))
    bad = np.abs(vals.imag) > threshold
    if np.any(bad):
        resid = float(np.abs(vals.imag).max())
        raise AccuracyError(
            f"imaginary residual {resid:.3e} exceeds 100*tol; contour truncation inadequate for these arguments"
        )
    return vals.real


def kernel_eval(x: float, y: float, cq: ContourQuadrature, params: ProcessParams | None = None) -> float:
    """K(x, y) from the precomputed double-contour discretization.

    The imaginary part of the bilinear sum must vanish in exact arithmetic;
    it is checked against 100*tol and AccuracyError is raised when the
    contour truncation was inadequate for these arguments.
    """
    if params is not None and params != cq.params:
        raise DomainError("params disagree with the ContourQuadrature's parameters")
    return float(kernel_matrix([x], [y], cq)[0, 0])


class MeijerKernel:
    """Callable kernel handle bundling parameters with their contours."""

    def __init__(self, params: ProcessParams, x_range: tuple, tol: float = 1e-12, **build_kw):
        self.params = params
        self.cq = build_contours(params, x_range, tol, **build_kw)

    def __call__(self, x: float, y: float) -> float:
        return kernel_eval(x, y, self.cq)

    def matrix(self, xs) -> np.ndarray:
        return kernel_matrix(xs, xs, self.cq)


# ---------------------------------------------------------------------------
# Residue-series oracle
# ---------------------------------------------------------------------------

def _cluster_poles(bases, n_terms: int):
    """Pole positions {b + k : b in bases, 0 <= k < n_terms} grouped into
    coincidence clusters, plus a safe circle radius for residue extraction."""
    pts = np.sort(np.concatenate([np.asarray(bases, dtype=float) + k for k in range(n_terms)]))
    locs = [pts[0]]
    for p in pts[1:]:
        if abs(p - locs[-1]) >= 1e-9:
            locs.append(p)
    locs = np.asarray(locs)
    gaps = np.diff(locs)
    radius = 0.25 if gaps.size == 0 else min(0.25, 0.35 * float(gaps.min()))
    if radius < 1e-6:
        raise ConvergenceError("pole families nearly coincide; residue extraction is ill-conditioned")
    return locs, radius


def _sum_residues(locs, radius, ln_num, z, circle_points: int = 40):
    """-(sum of residues) of exp(ln_num(t)) * z^t over the listed pole
    clusters, each extracted by trapezoidal integration on a small circle.
    ``z`` may be a vector; returns one value per z.  The circle rule is
    spectrally accurate and handles higher-order (logarithmic) poles with no
    special casing.  The leading minus sign matches the orientation of the
    defining loop contour.
    """
    theta = 2 * math.pi * np.arange(circle_points) / circle_points
    ring = radius * np.exp(1j * theta)
    t = (locs[:, None] + ring[None, :]).ravel()
    ln_z = np.log(np.asarray(z, dtype=float))
    vals = np.exp(ln_num(t)[:, None] + np.outer(t, ln_z))  # (n_locs*M, nz)
    vals *= np.tile(ring, locs.size)[:, None]
    per_cluster = vals.reshape(locs.size, circle_points, -1).mean(axis=1)
    totals = -per_cluster.sum(axis=0)
    tail = np.abs(per_cluster[-1])
    scale = np.abs(totals) + 1e-16 * np.abs(per_cluster).max(axis=0)
    if np.any(tail > 1e-14 * scale):
        raise ConvergenceError("residue series not converged: last term exceeds 1e-14 of the partial sum")
    return totals


def _g_first(z, params: ProcessParams, n_terms: int):
    """Series value of the first kernel factor: pole family at 0, 1, 2, ...,
    integrand Gamma(-t) prod_k Gamma(1+mu_k+t) / prod_j Gamma(1+nu_j+t) z^t."""

    def ln_num(t):
        out = log_gamma(-t)
        for m in params.mu:
            out = out + log_gamma(1.0 + m + t)
        for v in params.nu:
            out = out - log_gamma(1.0 + v + t)
        return out

    locs, radius = _cluster_poles([0.0], n_terms)
    return _sum_residues(locs, radius, ln_num, z)


def _g_second(z, params: ProcessParams, n_terms: int):
    """Series value of the second kernel factor: pole families at
    nu_j, nu_j + 1, ..., integrand
    prod_j Gamma(nu_j - t) / (Gamma(1+t) prod_k Gamma(mu_k - t)) z^t."""

    def ln_num(t):
        out = -log_gamma(1.0 + t)
        for v in params.nu:
            out = out + log_gamma(v - t)
        for m in params.mu:
            out = out - log_gamma(m - t)
        return out

    locs, radius = _cluster_poles(params.nu, n_terms)
    return _sum_residues(locs, radius, ln_num, z)


def kernel_eval_series(
    x: float, y: float, params: ProcessParams, n_t: int = 80, n_terms: int = 48
) -> float:
    """Independent oracle for :func:`kernel_eval`.

    Evaluates K(x, y) = int_0^1 G_1(t x) G_2(t y) dt where each factor is the
    single-contour series of a Meijer G-function, summed over ``n_terms``
    residue clusters per pole family.  The t-integrand behaves like
    t^nu_min near 0, so the integral is computed by ``n_t``-point
    Gauss-Legendre quadrature after the regularizing substitution
    t = tau^kappa with kappa = max(4, ceil(4 / (1 + nu_min))).
    """
    x, y = float(x), float(y)
    if x <= 0.0 or y <= 0.0:
        raise DomainError("kernel arguments must be positive")
    kappa = max(4, math.ceil(4.0 / (1.0 + params.nu_min)))
    tau, w = np.polynomial.legendre.leggauss(int(n_t))
    tau = (tau + 1.0) / 2.0
    w = w / 2.0
    t = tau**kappa
    dt = kappa * tau ** (kappa - 1) * w
    g1 = _g_first(t * x, params, n_terms)
    g2 = _g_second(t * y, params, n_terms)
    return float(np.sum(dt * (g1 * g2).real))


# ---------------------------------------------------------------------------
# Bessel kernel (r = 1, q = 0 hard-edge limit)
# ---------------------------------------------------------------------------

def _t_jprime(nu: float, t: float) -> float:
    # t J'_nu(t) = nu J_nu(t) - t J_{nu+1}(t); finite at t = 0 for nu >= 0
    return nu * bessel_j(nu, t) - t * bessel_j(nu + 1.0, t)


def bessel_kernel(x: float, y: float, nu: float) -> float:
    """Bessel hard-edge kernel
    (J_nu(sqrt x) sqrt y J'_nu(sqrt y) - sqrt x J'_nu(sqrt x) J_nu(sqrt y)) / (2(x-y)).

    Near the diagonal the quotient is evaluated at the midpoint through its
    analytic limit ((c - nu^2) J_nu(sqrt c)^2 + (sqrt c J'_nu(sqrt c))^2) / (4c),
    which agrees with the off-diagonal formula to O((x-y)^2).
    """
    x, y = float(x), float(y)
    if x < 0.0 or y < 0.0:
        raise DomainError("bessel_kernel requires x, y >= 0")
    if abs(x - y) < 1e-6:
        c = 0.5 * (x + y)
        if c == 0.0:
            if nu == 0.0:
                return 0.25
            if nu > 0.0:
                return 0.0
            raise DomainError("diagonal value diverges at the origin for nu < 0")
        t = math.sqrt(c)
        j = bessel_j(nu, t)
        tjp = _t_jprime(nu, t)
        return ((c - nu * nu) * j * j + tjp * tjp) / (4.0 * c)
    sx, sy = math.sqrt(x), math.sqrt(y)
    num = bessel_j(nu, sx) * _t_jprime(nu, sy) - _t_jprime(nu, sx) * bessel_j(nu, sy)
    return num / (2.0 * (x - y))


class BesselKernel:
    """Callable kernel handle for the Bessel hard-edge kernel."""

    def __init__(self, nu: float):
        if nu <= -1.0:
            raise DomainError("requires nu > -1")
        self.nu = float(nu)

    def __call__(self, x: float, y: float) -> float:
        return bessel_kernel(x, y, self.nu)

    def matrix(self, xs) -> np.ndarray:
        # the numerator is separable in per-node Bessel values, so the fill
        # needs only O(m) series evaluations
        xs = np.asarray(xs, dtype=float)
        t = np.sqrt(xs)
        j = np.array([bessel_j(self.nu, ti) for ti in t])
        tjp = np.array([_t_jprime(self.nu, ti) for ti in t])
        diff = xs[:, None] - xs[None, :]
        near = np.abs(diff) < 1e-6
        np.fill_diagonal(diff, 1.0)
        out = (j[:, None] * tjp[None, :] - tjp[:, None] * j[None, :]) / (2.0 * diff)
        if np.any(near):
            for i, k in zip(*np.nonzero(near)):
                out[i, k] = bessel_kernel(xs[i], xs[k], self.nu)
        return out
