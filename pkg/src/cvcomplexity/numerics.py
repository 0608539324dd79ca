"""Shared numerical kernels: log-domain Bessel functions and the
phase-plane quadrature engine.

All integrals over the complex plane use the measure ``d^2(alpha) / pi``
and are evaluated in polar coordinates on a disc ``|alpha| <= r_max``:
an equispaced (periodic trapezoid) rule in the angle, which is spectrally
accurate for smooth periodic integrands, tensored with panelled
Gauss-Legendre in the radius.  ``r_max`` starts at
``|center| + r_max_sigmas * sqrt(scale)`` using the field's metadata and
is grown until a Gaussian tail bound falls below ``tail_tolerance``.

Modified Bessel functions of the first kind are handled exclusively in
the log domain (via the exponentially scaled ``I_k(x) e^{-x}``), so no
intermediate quantity overflows for arguments up to 1e6 and beyond.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from scipy import special

from .errors import DomainError, FieldEvaluationError, QuadratureError

if TYPE_CHECKING:  # pragma: no cover - import only for annotations
    from .functionals import QField

__all__ = [
    "LogBesselValue",
    "QuadratureConfig",
    "log_bessel_i",
    "bessel_ratio",
    "integrate_phase_plane",
]

#: Husimi values below this threshold contribute zero to the Fisher
#: integrand (the limit of ||grad Q||^2 / Q there is zero for every field
#: in this package, but the quotient is numerically meaningless).
FISHER_FLOOR = 1e-300

INTEGRAND_KINDS = ("normalization", "wehrl", "fisher")


# ---------------------------------------------------------------------------
# Bessel functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LogBesselValue:
    """ln I_k(x) together with the order and argument it belongs to.

    ``log_value`` is ``-inf`` for k >= 1 at x = 0 (I_k(0) = 0).
    """

    log_value: float
    order: int
    argument: float


def log_bessel_i(order: int, x: float) -> LogBesselValue:
    """Natural logarithm of the modified Bessel function I_order(x).

    Uses the exponentially scaled function, ln I_k(x) = x + ln(e^{-x} I_k(x)),
    which never overflows; when the scaled value itself underflows (order much
    larger than the argument) the leading power-series term
    (x/2)^k / k! is used in log form instead.

    Parameters
    ----------
    order : int
        Nonnegative order k.
    x : float
        Nonnegative argument.

    Returns
    -------
    LogBesselValue
    """
    if order < 0:
        raise DomainError(f"Bessel order must be nonnegative, got {order}")
    if x < 0:
        raise DomainError(f"Bessel argument must be nonnegative, got {x}")
    order = int(order)
    x = float(x)
    if x == 0.0:
        return LogBesselValue(0.0 if order == 0 else -math.inf, order, 0.0)
    scaled = float(special.ive(order, x))
    if scaled > 0.0:
        log_value = x + math.log(scaled)
    else:
        # deep underflow: I_k(x) ~ (x/2)^k / k! for x^2 << k
        log_value = order * math.log(x / 2.0) - float(special.gammaln(order + 1.0))
    return LogBesselValue(log_value, order, x)


def bessel_ratio(order: int, kappa: float) -> float:
    """I_order(kappa) / I_0(kappa), computed in the log domain.

    The result lies in [0, 1], equals 1 at order 0, decreases with the
    order and (for order >= 1) increases with kappa.
    """
    if order < 0:
        raise DomainError(f"Bessel order must be nonnegative, got {order}")
    if kappa < 0:
        raise DomainError(f"concentration must be nonnegative, got {kappa}")
    if order == 0:
        return 1.0
    if kappa == 0.0:
        return 0.0
    num = log_bessel_i(order, kappa).log_value
    if num == -math.inf:
        return 0.0
    den = log_bessel_i(0, kappa).log_value
    return min(math.exp(num - den), 1.0)


def log_i0(x: np.ndarray) -> np.ndarray:
    """Vectorized ln I_0(x) for nonnegative x, overflow safe."""
    x = np.asarray(x, dtype=float)
    return x + np.log(special.ive(0, x))


def i1_over_i0(x: np.ndarray) -> np.ndarray:
    """Vectorized I_1(x)/I_0(x) for nonnegative x."""
    x = np.asarray(x, dtype=float)
    return special.ive(1, x) / special.ive(0, x)


def bessel_ratio_sequence(max_order: int, kappa: float) -> np.ndarray:
    """Array [I_0/I_0, I_1/I_0, ..., I_max/I_0] at the given kappa."""
    if kappa < 0:
        raise DomainError(f"concentration must be nonnegative, got {kappa}")
    orders = np.arange(max_order + 1)
    if kappa == 0.0:
        out = np.zeros(max_order + 1)
        out[0] = 1.0
        return out
    scaled = special.ive(orders, kappa)
    i0 = scaled[0]
    out = np.where(scaled > 0.0, scaled / i0, 0.0)
    return np.minimum(out, 1.0)


# ---------------------------------------------------------------------------
# Quadrature
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureConfig:
    """Node layout and stopping rule for the polar phase-plane quadrature.

    ``r_max_sigmas`` realizes the radial-cutoff rule: the initial cutoff is
    ``|field.center| + r_max_sigmas * sqrt(field.scale)`` and panels of the
    initial width are appended until the estimated Gaussian tail drops
    below ``tail_tolerance``.
    """

    angular_nodes: int = 256
    radial_panel_order: int = 16
    radial_panel_count: int = 24
    tail_tolerance: float = 1e-12
    r_max_sigmas: float = 8.0
    max_extensions: int = 64

    def __post_init__(self):
        if self.angular_nodes < 8 or self.angular_nodes % 2 != 0:
            raise DomainError("angular_nodes must be even and >= 8")
        if self.radial_panel_order < 4:
            raise DomainError("radial_panel_order must be >= 4")
        if self.radial_panel_count < 1:
            raise DomainError("radial_panel_count must be >= 1")
        if not self.tail_tolerance > 0:
            raise DomainError("tail_tolerance must be positive")
        if not self.r_max_sigmas > 0:
            raise DomainError("r_max_sigmas must be positive")

    def doubled(self) -> "QuadratureConfig":
        """Config with twice the angular nodes and radial panels (used by
        the self-consistency check)."""
        return QuadratureConfig(
            angular_nodes=2 * self.angular_nodes,
            radial_panel_order=self.radial_panel_order,
            radial_panel_count=2 * self.radial_panel_count,
            tail_tolerance=self.tail_tolerance,
            r_max_sigmas=self.r_max_sigmas,
            max_extensions=self.max_extensions,
        )


def _gauss_legendre_unit(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights mapped to [0, 1]."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return 0.5 * (nodes + 1.0), 0.5 * weights


def _integrand_values(field: "QField", points: np.ndarray, kind: str) -> np.ndarray:
    q = np.asarray(field.value_at(points), dtype=float)
    if not np.all(np.isfinite(q)):
        bad = points[~np.isfinite(q)][0]
        raise FieldEvaluationError(
            f"non-finite Husimi value at alpha = {bad}", point=complex(bad)
        )
    if kind == "normalization":
        return q
    if kind == "wehrl":
        out = np.zeros_like(q)
        mask = q > 0.0
        out[mask] = -q[mask] * np.log(q[mask])
        return out
    gx, gy = field.gradient_at(points)
    gx = np.asarray(gx, dtype=float)
    gy = np.asarray(gy, dtype=float)
    if not (np.all(np.isfinite(gx)) and np.all(np.isfinite(gy))):
        finite = np.isfinite(gx) & np.isfinite(gy)
        bad = points[~finite][0]
        raise FieldEvaluationError(
            f"non-finite Husimi gradient at alpha = {bad}", point=complex(bad)
        )
    out = np.zeros_like(q)
    mask = q >= FISHER_FLOOR
    out[mask] = (gx[mask] ** 2 + gy[mask] ** 2) / (4.0 * q[mask])
    return out


def _tail_estimate(field: "QField", r_max: float, kind: str) -> float:
    """Upper estimate of the neglected integral beyond ``r_max``.

    The integrand on the boundary circle is sampled at 32 angles; beyond
    the circle it is assumed to decay at least like the Gaussian envelope
    exp(-(r - c)^2 / (2 v)) encoded in the field metadata (c = |center|,
    v = scale).  The envelope's radial moment is integrated in closed form
    via the scaled complementary error function.
    """
    phi = np.arange(32) * (2.0 * math.pi / 32.0)
    ring = r_max * np.exp(1j * phi)
    boundary = float(np.max(_integrand_values(field, ring, kind)))
    if boundary == 0.0:
        return 0.0
    c = abs(complex(field.center))
    v = float(field.scale)
    z = (r_max - c) / math.sqrt(2.0 * v)
    geom = 2.0 * (v + c * math.sqrt(math.pi * v / 2.0) * float(special.erfcx(z)))
    return boundary * geom


def integrate_phase_plane(
    field: "QField",
    config: QuadratureConfig,
    integrand_kind: str,
) -> float:
    """Integrate a functional of a Husimi field over the phase plane.

    Parameters
    ----------
    field : QField
        Evaluable Husimi function with gradient and tail metadata.
    config : QuadratureConfig
        Node layout and tail tolerance.
    integrand_kind : {"normalization", "wehrl", "fisher"}
        Which integrand to use: Q itself, -Q ln Q (with 0 ln 0 = 0), or
        ||grad Q||^2 / (4 Q) (zero where Q underflows).

    Returns
    -------
    float
        The integral with respect to d^2(alpha) / pi.
    """
    if integrand_kind not in INTEGRAND_KINDS:
        raise DomainError(f"unknown integrand kind {integrand_kind!r}")
    nodes, weights = _gauss_legendre_unit(config.radial_panel_order)
    n_ang = config.angular_nodes
    phi = np.arange(n_ang) * (2.0 * math.pi / n_ang)
    unit_circle = np.exp(1j * phi)

    sigma = math.sqrt(float(field.scale))
    r_max = abs(complex(field.center)) + config.r_max_sigmas * sigma
    width = r_max / config.radial_panel_count

    def panel_sum(panel_index: int) -> float:
        radii = (panel_index + nodes) * width
        pts = radii[:, None] * unit_circle[None, :]
        vals = _integrand_values(field, pts.ravel(), integrand_kind)
        angular = vals.reshape(len(radii), n_ang).sum(axis=1)
        # weights * width * r is the radial measure, 2/n collects the
        # angular weight 2*pi/n and the overall 1/pi of the measure
        return float((weights * width * radii) @ angular) * (2.0 / n_ang)

    total = 0.0
    n_panels = config.radial_panel_count
    for i in range(n_panels):
        total += panel_sum(i)

    extensions = 0
    while _tail_estimate(field, n_panels * width, integrand_kind) > config.tail_tolerance:
        if extensions >= config.max_extensions:
            raise QuadratureError(
                f"tail tolerance {config.tail_tolerance:g} not reached after "
                f"{extensions} radial extensions (r_max = {n_panels * width:g})"
            )
        add = max(1, math.ceil(2.0 * sigma / width))
        for i in range(n_panels, n_panels + add):
            total += panel_sum(i)
        n_panels += add
        extensions += 1
    return total
