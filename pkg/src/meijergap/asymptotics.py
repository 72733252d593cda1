"""Closed forms for the large-gap expansion of the gap probability,

    ln det(1 - K|[0,s]) = -a s^(2 rho) + b s^rho + c ln s + ln C + o(1),

including the multiplicative constant C for general parameters, its Bessel
and equal-parameter specializations, and the Muttalib-Borodin constant used
as a cross-check.  Everything is evaluated additively in log space; Barnes-G
products are never exponentiated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .kernel import ProcessParams
from .specfun import log_barnes_g, zeta_prime_minus1

_LN_2PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class AsymptoticCoeffs:
    """Expansion coefficients (rho, a, b, c, ln C)."""

    rho: float
    a: float
    b: float
    c: float
    ln_c: float


def _ln_barnes(x: float) -> float:
    return float(log_barnes_g(x).real)


def compute_coeffs(params: ProcessParams) -> AsymptoticCoeffs:
    """All five expansion coefficients for the given parameters.

    With n = r - q, S1 = sum(nu) - sum(mu), S2 = sum(nu^2) - sum(mu^2):

        rho = 1/(1+n),           a = n^((1-n)/(1+n)) (n+1)^2 / 4,
        b   = (1+n) n^(-n/(1+n)) S1,
        c   = (n-1)/(12(n+1)) - S2/(2(n+1)),

    and ln C is assembled from the Barnes-G/2pi prefactor, the zeta'(-1)
    term, and the ln(n) and ln(1+n) blocks.  The ln(n) block is skipped
    when ln(n) = 0 (n = 1), so no 0*inf products can arise.
    """
    nu, mu = params.nu, params.mu
    n = params.r - params.q
    rho = 1.0 / (1 + n)
    a = float(n) ** ((1.0 - n) / (1 + n)) * (n + 1) ** 2 / 4.0
    s_nu1, s_mu1 = math.fsum(nu), math.fsum(mu)
    s_nu2 = math.fsum(v * v for v in nu)
    s_mu2 = math.fsum(m * m for m in mu)
    b = (1 + n) * float(n) ** (-n / (1.0 + n)) * (s_nu1 - s_mu1)
    c = (n - 1.0) / (12 * (n + 1)) - (s_nu2 - s_mu2) / (2.0 * (n + 1))

    p_nu = math.fsum(nu[i] * nu[j] for i in range(len(nu)) for j in range(i + 1, len(nu)))
    p_mu = math.fsum(mu[i] * mu[j] for i in range(len(mu)) for j in range(i + 1, len(mu)))

    ln_c = math.fsum(_ln_barnes(1.0 + v) for v in nu)
    ln_c -= math.fsum(_ln_barnes(1.0 + m) for m in mu)
    ln_c += _LN_2PI / 2.0 * (s_mu1 - s_nu1)
    ln_c += (1 - n) * zeta_prime_minus1()

    ln_n = math.log(n)
    if ln_n != 0.0:
        coef = (
            (1.0 + n - n * n) / (2.0 * (1 + n)) * (s_nu2 - s_mu2)
            + (-2.0 + n * n * (n - 1)) / (24.0 * (1 + n))
            + p_nu
            + p_mu
            - s_nu1 * s_mu1
            + s_mu2
        )
        ln_c += coef * ln_n
    coef = (
        -(2.0 - n) / 2.0 * (s_nu2 - s_mu2)
        - (n - 1.0) ** 2 / 24.0
        - p_nu
        - p_mu
        + s_nu1 * s_mu1
        - s_mu2
    )
    ln_c += coef * math.log(1 + n)
    return AsymptoticCoeffs(rho=rho, a=a, b=b, c=c, ln_c=ln_c)


def log_constant_bessel(nu: float) -> float:
    """ln of the Bessel-case constant G(1+nu) (2 pi)^(-nu/2) 2^(-nu^2/2)."""
    nu = float(nu)
    if nu <= -1.0:
        raise DomainError("requires nu > -1")
    return _ln_barnes(1.0 + nu) - nu / 2.0 * _LN_2PI - nu * nu / 2.0 * math.log(2.0)


def log_constant_kr(r: float, nu: float) -> float:
    """ln C_r for the interpolating kernel family with all parameters equal:

        C_r = G(1+nu)^r (2 pi)^(-r nu/2) exp(-(r-1) zeta'(-1))
              * r^((-2 + r^2 (r - 1 + 12 nu^2)) / (24 (r+1)))
              * (1+r)^(-((r-1)^2 + 12 r nu^2) / 24).

    ``r`` may be real (the interpolation path is continuous in r >= 1).
    """
    r = float(r)
    nu = float(nu)
    if r < 1.0:
        raise DomainError("requires r >= 1")
    if nu <= -1.0:
        raise DomainError("requires nu > -1")
    out = r * _ln_barnes(1.0 + nu) - r * nu / 2.0 * _LN_2PI - (r - 1.0) * zeta_prime_minus1()
    out += (-2.0 + r * r * (r - 1.0 + 12.0 * nu * nu)) / (24.0 * (r + 1.0)) * math.log(r)
    out -= ((r - 1.0) ** 2 + 12.0 * r * nu * nu) / 24.0 * math.log(1.0 + r)
    return out


def log_constant_mb(r: int, alpha: float) -> float:
    """ln of the Muttalib-Borodin hard-edge constant at theta = 1/r.

    Assembled from the regularized sums d(1, alpha) and d(1/r, alpha),

        d(1/r, a) = r zeta'(-1) + (1 + (1+2a) r)/4 ln(2 pi)
                    - (3 + 1/r + r + 6a(1 + r + a r))/12 ln r
                    - sum_{k=1..r} ln G(1 + a + k/r),

    and the two explicit ln(theta), ln(1+theta) blocks.
    """
    if int(r) != r or r < 1:
        raise DomainError("requires integer r >= 1")
    r = int(r)
    alpha = float(alpha)
    if alpha <= -1.0:
        raise DomainError("requires alpha > -1")
    theta = 1.0 / r

    d_1 = zeta_prime_minus1() + (1.0 + alpha) / 2.0 * _LN_2PI - _ln_barnes(2.0 + alpha)
    d_r = (
        r * zeta_prime_minus1()
        + (1.0 + (1.0 + 2.0 * alpha) * r) / 4.0 * _LN_2PI
        - (3.0 + 1.0 / r + r + 6.0 * alpha * (1.0 + r + alpha * r)) / 12.0 * math.log(r)
        - math.fsum(_ln_barnes(1.0 + alpha + k / r) for k in range(1, r + 1))
    )

    out = _ln_barnes(1.0 + alpha) - alpha / 2.0 * _LN_2PI + d_1 - d_r
    out += (24.0 * alpha * (alpha + 2.0) + 15.0 + 3.0 * theta + 4.0 * theta**2) / (24.0 * (1.0 + theta)) * math.log(theta)
    out += (6.0 * alpha * theta - 6.0 * alpha * (1.0 + alpha) - (theta - 1.0) ** 2) / (12.0 * theta) * math.log(1.0 + theta)
    return out


def truncated_log_expansion(s: float, coeffs: AsymptoticCoeffs) -> float:
    """-a s^(2 rho) + b s^rho + c ln s + ln C, the truncated expansion of
    ln det(1 - K|[0,s])."""
    s = float(s)
    if s <= 0.0:
        raise DomainError("s must be positive")
    return (
        -coeffs.a * s ** (2.0 * coeffs.rho)
        + coeffs.b * s**coeffs.rho
        + coeffs.c * math.log(s)
        + coeffs.ln_c
    )
