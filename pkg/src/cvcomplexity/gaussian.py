"""Diffusive single-mode Gaussian channels in closed form.

A channel is parameterized by a damping rate Gamma, a bath photon number
N and a bath squeezing correlation M with |M|^2 <= N(N+1).  All results
here come from the solved parametrization: the asymptotic state
(mu_inf, r_inf, theta_inf), the purity/squeezing evolution of an initially
displaced thermal input, and the channel complexity at finite and infinite
time.  The master equation is never integrated at the operator level; a
Runge-Kutta integration of the 2x2 covariance relaxation
d(sigma)/dt = -Gamma (sigma - sigma_inf) serves as the independent
dynamical cross-check.

The Wigner covariance convention has the vacuum at Identity/4, so a
thermal state has Wigner covariance (1 + 2 nbar)/4 per axis and the
Husimi per-axis variances of `states` are sigma_W + 1/4.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "GaussianChannelParams",
    "AsymptoticState",
    "asymptotic_state",
    "evolve_purity_squeezing",
    "channel_complexity_at_t",
    "channel_complexity_asymptotic",
    "covariance_flow_rk4",
]

_CONSTRAINT_SLACK = 1e-12


@dataclass(frozen=True)
class GaussianChannelParams:
    """(Gamma, N, M) of the diffusive master equation."""

    damping: float
    bath_photons: float
    bath_squeezing: complex = 0j

    def __post_init__(self):
        if not self.damping > 0.0:
            raise DomainError(f"damping rate must be positive, got {self.damping}")
        if self.bath_photons < 0.0:
            raise DomainError(f"bath photon number must be nonnegative, got {self.bath_photons}")
        object.__setattr__(self, "bath_squeezing", complex(self.bath_squeezing))
        n = self.bath_photons
        m2 = abs(self.bath_squeezing) ** 2
        if m2 > n * (n + 1.0) * (1.0 + _CONSTRAINT_SLACK) + _CONSTRAINT_SLACK:
            raise DomainError(
                f"|M|^2 = {m2:g} violates the constraint |M|^2 <= N(N+1) = {n * (n + 1.0):g}"
            )


@dataclass(frozen=True)
class AsymptoticState:
    """Centered Gaussian fixed point of the channel: purity, squeezing
    magnitude and squeezing phase."""

    purity: float
    squeezing: float
    squeezing_phase: float


def asymptotic_state(ch: GaussianChannelParams) -> AsymptoticState:
    """Fixed-point state of the channel.

    mu_inf = 1/sqrt((2N+1)^2 - 4|M|^2), cosh(2 r_inf) follows from the
    same discriminant, and the squeezing phase is arg(M) reduced to
    [0, 2 pi) (the tangent relation fixes it only modulo pi; the argument
    itself is the physical choice, and nothing downstream depends on it).
    Saturation |M|^2 = N(N+1) gives mu_inf = 1: a pure squeezed state.
    """
    n = ch.bath_photons
    m = abs(ch.bath_squeezing)
    disc = (2.0 * n + 1.0) ** 2 - 4.0 * m * m
    # the constraint bounds disc >= 1; tolerate roundoff at saturation
    disc = max(disc, 1.0)
    mu_inf = 1.0 / math.sqrt(disc)
    cosh2r = math.sqrt(1.0 + 4.0 * m * m / disc)
    r_inf = 0.5 * math.acosh(max(cosh2r, 1.0))
    theta_inf = cmath.phase(ch.bath_squeezing) % (2.0 * math.pi) if m > 0.0 else 0.0
    return AsymptoticState(purity=mu_inf, squeezing=r_inf, squeezing_phase=theta_inf)


def evolve_purity_squeezing(
    mu0: float, t: float, ch: GaussianChannelParams
) -> tuple[float, float]:
    """Purity and squeezing magnitude of the evolved state at time t for a
    displaced thermal input of purity mu0.

    Closed forms:

        1/mu(t)^2 = e^{-2 G t}/mu0^2
                    + 2 e^{-G t}(1 - e^{-G t}) cosh(2 r_inf)/(mu0 mu_inf)
                    + (1 - e^{-G t})^2/mu_inf^2,
        cosh(2 r(t)) = mu(t) [ e^{-G t}/mu0 + (1 - e^{-G t}) cosh(2 r_inf)/mu_inf ],

    with cosh(2 r_inf)/mu_inf = 2N + 1.  The cosh argument is clamped to 1
    before acosh to absorb roundoff (at the 1e-12 level) near r = 0.
    """
    if not 0.0 < mu0 <= 1.0:
        raise DomainError(f"initial purity must lie in (0, 1], got {mu0}")
    if t < 0.0:
        raise DomainError(f"time must be nonnegative, got {t}")
    asym = asymptotic_state(ch)
    e = math.exp(-ch.damping * t)
    cosh_over_mu_inf = math.cosh(2.0 * asym.squeezing) / asym.purity
    inv_mu2 = (
        e * e / mu0 ** 2
        + 2.0 * e * (1.0 - e) * cosh_over_mu_inf / mu0
        + (1.0 - e) ** 2 / asym.purity ** 2
    )
    mu_t = 1.0 / math.sqrt(inv_mu2)
    cosh2r = mu_t * (e / mu0 + (1.0 - e) * cosh_over_mu_inf)
    r_t = 0.5 * math.acosh(max(cosh2r, 1.0))
    return mu_t, r_t


def channel_complexity_at_t(ch: GaussianChannelParams, t: float) -> float:
    """Channel complexity at time t: the supremum of the output complexity
    over displaced thermal inputs, attained at a coherent input (mu0 = 1).

    Equals 1/sqrt(1 - 4 (|M| / (coth(G t/2) + 2N + 1))^2); evaluated via the
    equivalent form with y = 2 |M| (1 - e^{-G t}) / (1 + X), which handles
    t = 0 (where coth diverges and the complexity is 1) without overflow.
    """
    if t < 0.0:
        raise DomainError(f"time must be nonnegative, got {t}")
    m = abs(ch.bath_squeezing)
    if m == 0.0:
        return 1.0
    e = math.exp(-ch.damping * t)
    one_plus_x = 1.0 + e + (2.0 * ch.bath_photons + 1.0) * (1.0 - e)
    y = 2.0 * m * (1.0 - e) / one_plus_x
    return 1.0 / math.sqrt(1.0 - y * y)


def channel_complexity_asymptotic(ch: GaussianChannelParams) -> float:
    """Infinite-time channel complexity 1/sqrt(1 - (|M|/(N+1))^2).

    Bounded by sqrt(N+1), with equality exactly at |M|^2 = N(N+1), where
    the asymptotic state is a pure squeezed state.
    """
    y = abs(ch.bath_squeezing) / (ch.bath_photons + 1.0)
    return 1.0 / math.sqrt(1.0 - y * y)


# ---------------------------------------------------------------------------
# Independent dynamical oracle
# ---------------------------------------------------------------------------

def _asymptotic_wigner_covariance(ch: GaussianChannelParams) -> np.ndarray:
    asym = asymptotic_state(ch)
    half = 0.5 * asym.squeezing_phase
    c, s = math.cos(half), math.sin(half)
    rot = np.array([[c, -s], [s, c]])
    principal = np.diag(
        [math.exp(2.0 * asym.squeezing), math.exp(-2.0 * asym.squeezing)]
    ) / (4.0 * asym.purity)
    return rot @ principal @ rot.T


def covariance_flow_rk4(
    mu0: float, t: float, ch: GaussianChannelParams, steps: int = 2000
) -> tuple[float, float]:
    """Purity and squeezing at time t obtained by RK4 integration of the
    covariance relaxation d(sigma)/dt = -Gamma (sigma - sigma_inf).

    This is the independent cross-check for `evolve_purity_squeezing`: it
    shares only the asymptotic covariance with the closed forms.  The
    evolved (mu, r) are read off the integrated matrix via
    mu = 1/(4 sqrt(det sigma)) and cosh(2 r) = 2 mu tr(sigma).
    """
    if not 0.0 < mu0 <= 1.0:
        raise DomainError(f"initial purity must lie in (0, 1], got {mu0}")
    if t < 0.0:
        raise DomainError(f"time must be nonnegative, got {t}")
    sigma_inf = _asymptotic_wigner_covariance(ch)
    sigma = np.eye(2) / (4.0 * mu0)
    h = t / steps
    gamma = ch.damping

    def rhs(s: np.ndarray) -> np.ndarray:
        return -gamma * (s - sigma_inf)

    for _ in range(steps):
        k1 = rhs(sigma)
        k2 = rhs(sigma + 0.5 * h * k1)
        k3 = rhs(sigma + 0.5 * h * k2)
        k4 = rhs(sigma + h * k3)
        sigma = sigma + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    det = float(np.linalg.det(sigma))
    mu_t = 1.0 / (4.0 * math.sqrt(det))
    cosh2r = 2.0 * mu_t * float(np.trace(sigma))
    r_t = 0.5 * math.acosh(max(cosh2r, 1.0))
    return mu_t, r_t
