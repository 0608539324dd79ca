"""Closed-form Husimi Q-functions, with analytic gradients, for every
state family the package works with.

Conventions
-----------
Phase-space points are alpha = x + i y and the vacuum Husimi function is
exp(-|alpha|^2), so the per-axis variance of the vacuum is 1/2 and of a
thermal state with mean photon number nbar is (nbar + 1) / 2.  A squeezed
thermal state of purity mu and squeezing magnitude r has principal-axis
variances

    v_pm = (exp(+-2 r) / mu + 1) / 4,

the squeezed axis (v_minus) lying at angle theta/2 from the x axis, where
theta is the squeezing phase.  With these choices the displaced thermal
Husimi function is exactly (1/(nbar+1)) exp(-|alpha - xi|^2 / (nbar+1)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .functionals import QField
from .numerics import i1_over_i0, log_i0

__all__ = [
    "GaussianStateParams",
    "PhaseDiffusionParams",
    "PhotonVariantParams",
    "q_gaussian",
    "q_thermal",
    "gaussian_complexity_closed_form",
    "q_phase_diffused",
    "q_photon_added",
    "q_photon_subtracted",
    "photon_sub_mixture_weights",
]


# ---------------------------------------------------------------------------
# Parameter records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussianStateParams:
    """Displaced squeezed thermal state (xi, r, theta, mu).

    ``purity`` is tr(rho^2) = 1/(1+2 nbar) of the underlying thermal state,
    so it lies in (0, 1]; ``squeezing_phase`` is reduced modulo 2 pi.
    """

    displacement: complex = 0j
    squeezing_magnitude: float = 0.0
    squeezing_phase: float = 0.0
    purity: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.purity <= 1.0:
            raise DomainError(f"purity must lie in (0, 1], got {self.purity}")
        if self.squeezing_magnitude < 0.0:
            raise DomainError("squeezing magnitude must be nonnegative")
        object.__setattr__(
            self, "squeezing_phase", float(self.squeezing_phase) % (2.0 * math.pi)
        )
        object.__setattr__(self, "displacement", complex(self.displacement))

    @classmethod
    def displaced_thermal(cls, displacement: complex, nbar: float) -> "GaussianStateParams":
        if nbar < 0.0:
            raise DomainError(f"mean photon number must be nonnegative, got {nbar}")
        return cls(displacement=displacement, purity=1.0 / (1.0 + 2.0 * nbar))

    @property
    def nbar(self) -> float:
        """Mean photon number of the underlying thermal state."""
        return 0.5 * (1.0 / self.purity - 1.0)

    @property
    def principal_variances(self) -> tuple[float, float]:
        """(v_plus, v_minus): per-axis Husimi variances along the
        anti-squeezed and squeezed principal axes."""
        mu = self.purity
        r = self.squeezing_magnitude
        return (
            (math.exp(2.0 * r) / mu + 1.0) / 4.0,
            (math.exp(-2.0 * r) / mu + 1.0) / 4.0,
        )


@dataclass(frozen=True)
class PhaseDiffusionParams:
    """Displaced thermal state after von Mises phase diffusion.

    ``concentration`` is the von Mises concentration: infinite means no
    diffusion, zero means uniform phase randomization.  The displacement
    is restricted to the nonnegative real axis; a complex displacement is
    equivalent up to a phase-space rotation, which leaves complexity
    unchanged.
    """

    concentration: float
    displacement: float = 0.0
    thermal_photons: float = 0.0

    def __post_init__(self):
        if self.concentration < 0.0:
            raise DomainError("concentration must be nonnegative")
        if self.displacement < 0.0:
            raise DomainError("displacement must be a nonnegative real")
        if self.thermal_photons < 0.0:
            raise DomainError("thermal photon number must be nonnegative")


@dataclass(frozen=True)
class PhotonVariantParams:
    """Heralded photon addition or subtraction applied to a displaced
    thermal state.

    Subtraction from the vacuum (xi = nbar = 0) is undefined: there is no
    photon to subtract and the normalization 1/(xi^2 + nbar) diverges.
    """

    variant: str
    displacement: float = 0.0
    thermal_photons: float = 0.0

    def __post_init__(self):
        if self.variant not in ("added", "subtracted"):
            raise DomainError(f"variant must be 'added' or 'subtracted', got {self.variant!r}")
        if self.displacement < 0.0:
            raise DomainError("displacement must be a nonnegative real")
        if self.thermal_photons < 0.0:
            raise DomainError("thermal photon number must be nonnegative")
        if self.variant == "subtracted" and self.displacement ** 2 + self.thermal_photons <= 0.0:
            raise DomainError("cannot subtract a photon from the vacuum (xi = nbar = 0)")


# ---------------------------------------------------------------------------
# Gaussian states
# ---------------------------------------------------------------------------

def q_gaussian(params: GaussianStateParams) -> QField:
    """Husimi field of a displaced squeezed thermal state.

    A bivariate Gaussian with principal variances ``params.principal_variances``
    rotated by half the squeezing phase and centered at the displacement;
    at zero squeezing it reduces to
    (1/(nbar+1)) exp(-|alpha - xi|^2/(nbar+1)).
    """
    v_plus, v_minus = params.principal_variances
    xi = params.displacement
    half = 0.5 * params.squeezing_phase
    cphi, sphi = math.cos(half), math.sin(half)
    amp = 1.0 / (2.0 * math.sqrt(v_plus * v_minus))

    def value_at(alpha):
        a = np.asarray(alpha, dtype=complex)
        dx = a.real - xi.real
        dy = a.imag - xi.imag
        u1 = cphi * dx + sphi * dy      # squeezed axis
        u2 = -sphi * dx + cphi * dy     # anti-squeezed axis
        return amp * np.exp(-u1 * u1 / (2.0 * v_minus) - u2 * u2 / (2.0 * v_plus))

    def gradient_at(alpha):
        a = np.asarray(alpha, dtype=complex)
        dx = a.real - xi.real
        dy = a.imag - xi.imag
        u1 = cphi * dx + sphi * dy
        u2 = -sphi * dx + cphi * dy
        q = amp * np.exp(-u1 * u1 / (2.0 * v_minus) - u2 * u2 / (2.0 * v_plus))
        t1 = u1 / v_minus
        t2 = u2 / v_plus
        return -q * (t1 * cphi - t2 * sphi), -q * (t1 * sphi + t2 * cphi)

    return QField(value_at=value_at, gradient_at=gradient_at, center=xi, scale=v_plus)


def q_thermal(nbar: float, displacement: complex = 0j) -> QField:
    """Husimi field of a displaced thermal state (no squeezing)."""
    return q_gaussian(GaussianStateParams.displaced_thermal(displacement, nbar))


def gaussian_complexity_closed_form(mu: float, r: float) -> float:
    """Complexity of any Gaussian state with purity mu and squeezing r.

    Independent of displacement and squeezing phase; equals cosh(r) for
    pure states and 1 whenever r = 0.
    """
    if not 0.0 < mu <= 1.0:
        raise DomainError(f"purity must lie in (0, 1], got {mu}")
    if r < 0.0:
        raise DomainError(f"squeezing magnitude must be nonnegative, got {r}")
    c = math.cosh(2.0 * r) / mu
    return (1.0 + c) / math.sqrt(1.0 + 2.0 * c + 1.0 / mu ** 2)


# ---------------------------------------------------------------------------
# Phase diffusion
# ---------------------------------------------------------------------------

def q_phase_diffused(params: PhaseDiffusionParams) -> QField:
    """Husimi field of a displaced thermal state after von Mises phase
    diffusion with concentration kappa.

    In polar coordinates alpha = rho e^{i phi} the field is

        Q = exp(ln I_0(R) - ln I_0(kappa) - (rho^2 + xi^2)/(nbar+1)) / (nbar+1),
        R = sqrt(kappa^2 + kp^2 + 2 kappa kp cos(phi)),   kp = 2 rho xi/(nbar+1),

    evaluated entirely in the log domain so large concentrations never
    overflow.  R is computed as hypot(kappa + 2 xi x/(nbar+1), 2 xi y/(nbar+1)),
    which is the same quantity in Cartesian form and manifestly nonnegative.
    At xi = 0 the Bessel factors cancel exactly and the thermal state is
    recovered.
    """
    kappa = float(params.concentration)
    xi = float(params.displacement)
    n1 = float(params.thermal_photons) + 1.0
    log_norm = log_i0(np.asarray(kappa))[()] if kappa > 0.0 else 0.0
    xi2 = xi * xi

    def _r_parts(a: np.ndarray):
        x = a.real
        y = a.imag
        px = kappa + 2.0 * xi * x / n1
        py = 2.0 * xi * y / n1
        return x, y, px, py, np.hypot(px, py)

    def value_at(alpha):
        a = np.asarray(alpha, dtype=complex)
        x, y, _, _, big_r = _r_parts(a)
        log_q = log_i0(big_r) - log_norm - (x * x + y * y + xi2) / n1 - math.log(n1)
        return np.exp(log_q)

    def gradient_at(alpha):
        a = np.asarray(alpha, dtype=complex)
        x, y, px, py, big_r = _r_parts(a)
        log_q = log_i0(big_r) - log_norm - (x * x + y * y + xi2) / n1 - math.log(n1)
        q = np.exp(log_q)
        # d(ln I_0(R)) = (I_1/I_0)(R) dR = h(R) d(R^2), h = ratio/(2R) -> 1/4 at 0
        ratio = i1_over_i0(big_r)
        h = np.where(big_r > 1e-8, ratio / (2.0 * np.maximum(big_r, 1e-300)), 0.25)
        coef = 2.0 * xi / n1
        gx = q * (h * 2.0 * px * coef - 2.0 * x / n1)
        gy = q * (h * 2.0 * py * coef - 2.0 * y / n1)
        return gx, gy

    return QField(
        value_at=value_at,
        gradient_at=gradient_at,
        center=complex(xi),
        scale=n1 / 2.0,
    )


# ---------------------------------------------------------------------------
# Photon addition / subtraction
# ---------------------------------------------------------------------------

def q_photon_added(params: PhotonVariantParams) -> QField:
    """Husimi field of the photon-added displaced thermal state:

        Q = |alpha|^2 / ((1 + xi^2 + nbar)(1 + nbar)) exp(-|alpha - xi|^2/(1+nbar)).

    Q vanishes at the origin; the Fisher integrand stays finite there and
    the radial quadrature grid never contains the origin itself.
    """
    if params.variant != "added":
        raise DomainError("q_photon_added requires variant 'added'")
    xi = float(params.displacement)
    nb = float(params.thermal_photons)
    n1 = nb + 1.0
    norm = (1.0 + xi * xi + nb) * n1

    def value_at(alpha):
        a = np.asarray(alpha, dtype=complex)
        x = a.real
        y = a.imag
        g = np.exp(-((x - xi) ** 2 + y * y) / n1)
        return (x * x + y * y) * g / norm

    def gradient_at(alpha):
        a = np.asarray(alpha, dtype=complex)
        x = a.real
        y = a.imag
        r2 = x * x + y * y
        g = np.exp(-((x - xi) ** 2 + y * y) / n1) / norm
        gx = g * (2.0 * x - r2 * 2.0 * (x - xi) / n1)
        gy = g * (2.0 * y - r2 * 2.0 * y / n1)
        return gx, gy

    return QField(
        value_at=value_at,
        gradient_at=gradient_at,
        center=complex(xi),
        scale=n1 / 2.0,
    )


def q_photon_subtracted(params: PhotonVariantParams) -> QField:
    """Husimi field of the photon-subtracted displaced thermal state, in
    the frame displaced back to the origin (beta = alpha - xi):

        Q = exp(-|beta|^2/(1+nbar)) / (xi^2 + nbar)
            * ( nbar^2 |beta|^2/(1+nbar)^3
              + nbar (1 + xi (beta + beta*))/(1+nbar)^2
              + xi^2/(1+nbar) ).

    Dropping the displacement is legitimate for every functional computed
    here because complexity is displacement invariant.  At nbar = 0 the
    polynomial collapses and the coherent state exp(-|beta|^2) remains.
    """
    if params.variant != "subtracted":
        raise DomainError("q_photon_subtracted requires variant 'subtracted'")
    xi = float(params.displacement)
    nb = float(params.thermal_photons)
    n1 = nb + 1.0
    norm = xi * xi + nb
    c_r2 = nb * nb / n1 ** 3 / norm
    c_x = 2.0 * xi * nb / n1 ** 2 / norm
    c_0 = (nb / n1 ** 2 + xi * xi / n1) / norm

    def _poly(x, y):
        return c_r2 * (x * x + y * y) + c_x * x + c_0

    def value_at(alpha):
        a = np.asarray(alpha, dtype=complex)
        x = a.real
        y = a.imag
        return _poly(x, y) * np.exp(-(x * x + y * y) / n1)

    def gradient_at(alpha):
        a = np.asarray(alpha, dtype=complex)
        x = a.real
        y = a.imag
        g = np.exp(-(x * x + y * y) / n1)
        p = _poly(x, y)
        gx = g * (2.0 * c_r2 * x + c_x - p * 2.0 * x / n1)
        gy = g * (2.0 * c_r2 * y - p * 2.0 * y / n1)
        return gx, gy

    return QField(
        value_at=value_at,
        gradient_at=gradient_at,
        center=0j,
        scale=n1 / 2.0,
    )


def photon_sub_mixture_weights(nbar: float) -> tuple[float, float]:
    """Weights (nbar/(1+nbar), 1/(1+nbar)) expressing the photon-subtracted
    thermal state as a mixture of the photon-added thermal state and the
    thermal state itself.  Undefined at nbar = 0."""
    if nbar <= 0.0:
        raise DomainError(f"mixture weights require nbar > 0, got {nbar}")
    return nbar / (1.0 + nbar), 1.0 / (1.0 + nbar)
