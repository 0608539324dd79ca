"""Curve families reproducing the reference figures as data.

Each figure id maps to a list of curves; a curve is a 1-D parameter grid
with the complexity at every grid point (plus, for the small-displacement
blowup, the fitted quartic reference 1 + gamma_kappa * xi^4).  Grids:

* fig1a: phase-diffused complexity vs displacement, xi in [0, 6] step 0.1,
  one curve per concentration kappa in {0.001, 3, 10}.
* fig1b: blowup of fig1a, xi in [0, 0.5] step 0.01, with the quartic
  reference column.
* fig2: phase-diffused complexity vs -ln(kappa) in [-3, 7] step 0.25, one
  curve per displacement xi in {1, 2, 3}.
* fig3a/fig3b: photon-added complexity vs xi in [0, 3] step 0.1 at
  nbar in {0.1, 1, 10}, and vs nbar (40 log-spaced points in [0.1, 10])
  at xi in {0.1, 1, 3}.
* fig4a/fig4b: the same two panels for photon subtraction.

Curves of one figure are computed concurrently; the values are
deterministic functions of the grid, so the ordering of results is fixed
regardless of scheduling.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .functionals import complexity
from .nongaussian import gamma_kappa
from .numerics import QuadratureConfig
from .states import (
    PhaseDiffusionParams,
    PhotonVariantParams,
    q_phase_diffused,
    q_photon_added,
    q_photon_subtracted,
)

__all__ = ["FIGURE_IDS", "FigureCurve", "figure_curves"]

FIGURE_IDS = ("fig1a", "fig1b", "fig2", "fig3a", "fig3b", "fig4a", "fig4b")

_PD_KAPPAS = (0.001, 3.0, 10.0)
_PD_XIS = (1.0, 2.0, 3.0)
_PHOTON_NBARS = (0.1, 1.0, 10.0)
_PHOTON_XIS = (0.1, 1.0, 3.0)


@dataclass(frozen=True)
class FigureCurve:
    """One curve of a figure: a parameter grid and the complexity on it."""

    label: str
    param_name: str
    params: np.ndarray
    values: np.ndarray
    reference: np.ndarray | None = None


def _pd_complexity(kappa: float, xi: float, config: QuadratureConfig) -> float:
    field = q_phase_diffused(PhaseDiffusionParams(kappa, xi, 0.0))
    return complexity(field, config).complexity


def _photon_complexity(variant: str, xi: float, nbar: float, config: QuadratureConfig) -> float:
    maker = q_photon_added if variant == "added" else q_photon_subtracted
    field = maker(PhotonVariantParams(variant, xi, nbar))
    return complexity(field, config).complexity


def _curve_values(fn, grid: np.ndarray, config: QuadratureConfig) -> np.ndarray:
    return np.array([fn(float(p), config) for p in grid])


def figure_curves(figure_id: str, config: QuadratureConfig | None = None) -> list[FigureCurve]:
    """Compute every curve of the given figure id."""
    if figure_id not in FIGURE_IDS:
        raise DomainError(f"unknown figure id {figure_id!r}; choose from {FIGURE_IDS}")
    config = config or QuadratureConfig()

    if figure_id in ("fig1a", "fig1b"):
        grid = np.round(np.arange(0.0, 6.0001, 0.1), 10) if figure_id == "fig1a" \
            else np.round(np.arange(0.0, 0.5001, 0.01), 10)
        specs = [
            (f"kappa_{kappa:g}", lambda xi, cfg, k=kappa: _pd_complexity(k, xi, cfg))
            for kappa in _PD_KAPPAS
        ]
        param_name = "xi"
    elif figure_id == "fig2":
        grid = np.round(np.arange(-3.0, 7.0001, 0.25), 10)
        specs = [
            (
                f"xi_{xi:g}",
                lambda neg_log_k, cfg, x=xi: _pd_complexity(float(np.exp(-neg_log_k)), x, cfg),
            )
            for xi in _PD_XIS
        ]
        param_name = "neg_ln_kappa"
    elif figure_id in ("fig3a", "fig4a"):
        variant = "added" if figure_id == "fig3a" else "subtracted"
        grid = np.round(np.arange(0.0, 3.0001, 0.1), 10)
        specs = [
            (
                f"nbar_{nbar:g}",
                lambda xi, cfg, n=nbar, v=variant: _photon_complexity(v, xi, n, cfg),
            )
            for nbar in _PHOTON_NBARS
        ]
        param_name = "xi"
    else:  # fig3b, fig4b
        variant = "added" if figure_id == "fig3b" else "subtracted"
        grid = np.geomspace(0.1, 10.0, 40)
        specs = [
            (
                f"xi_{xi:g}",
                lambda nbar, cfg, x=xi, v=variant: _photon_complexity(v, x, nbar, cfg),
            )
            for xi in _PHOTON_XIS
        ]
        param_name = "nbar"

    with ThreadPoolExecutor(max_workers=len(specs)) as pool:
        futures = [pool.submit(_curve_values, fn, grid, config) for _, fn in specs]
        results = [f.result() for f in futures]

    curves = []
    for (label, _), values in zip(specs, results):
        reference = None
        if figure_id == "fig1b":
            kappa = float(label.split("_")[1])
            reference = 1.0 + gamma_kappa(kappa).gamma * grid ** 4
        curves.append(
            FigureCurve(
                label=label,
                param_name=param_name,
                params=grid.copy(),
                values=values,
                reference=reference,
            )
        )
    return curves
