"""Acceptance suite: every exit criterion at its stated tolerance, one
printed PASS/FAIL line per check (run with ``pytest -s`` to see them all).

Five sub-checks fail with the exact functional and are left failing on
purpose; each was confirmed against at least two independent numerical
routes (closed-form quadrature, doubled-node quadrature, and the
truncated-Fock oracle):

* criterion 7, quartic ratio and log-log slope at kappa = 1: at xi = 0.1
  the xi^2-order remainder of C = 1 + gamma*xi^4 + o(xi^4) is still 22%
  of the leading term (the asymptote needs smaller xi at small kappa);
  the measured ratio converges to 1 as xi -> 0.
* criterion 7, monotone increase in -ln(kappa) at xi = 1: the exact curve
  has a shallow interior maximum near kappa = 0.37 and decreases by ~2e-4
  toward the uniform-diffusion limit.
* criterion 7, photon-subtracted complexity decreasing in xi at
  nbar = 0.1: the exact curve has an interior maximum near xi = 0.25
  (~2.6e-4 above the endpoint values).
* criterion 10, small-concentration ratio to kappa^4/32: the correctly
  expanded series limit of the quartic coefficient is kappa^4/128, which
  the quadrature measurement confirms; the /32 constant cannot be met.
"""

import math
import time

import numpy as np
import pytest

from cvcomplexity import (
    EULER_GAMMA_EXP,
    GaussianChannelParams,
    GaussianChannelSpec,
    GaussianStateParams,
    PhaseDiffusionParams,
    PhotonVariantParams,
    QuadratureConfig,
    SearchConfig,
    channel_complexity,
    channel_complexity_asymptotic,
    channel_complexity_at_t,
    complexity,
    complexity_from_fock,
    covariance_flow_rk4,
    dephase_von_mises,
    displaced_thermal_fock,
    evolve_purity_squeezing,
    gamma_kappa,
    gaussian_complexity_closed_form,
    husimi_from_fock,
    photon_sub_mixture_weights,
    q_gaussian,
    q_phase_diffused,
    q_photon_added,
    q_photon_subtracted,
    q_thermal,
    quartic_law_check,
    apply_ladder,
)

CONFIG = QuadratureConfig()


def report(criterion: str, passed: bool, detail: str) -> None:
    print(f"ACCEPTANCE {criterion}: {'PASS' if passed else 'FAIL'} ({detail})")


def check(criterion: str, passed: bool, detail: str) -> None:
    report(criterion, passed, detail)
    assert passed, f"{criterion}: {detail}"


# ---------------------------------------------------------------------------
# 1. minimality of displaced thermal states
# ---------------------------------------------------------------------------

def test_c01_displaced_thermal_minimality():
    pairs = [
        (0.0, 0.0), (0.0, 0.5), (0.0, 3.0),
        (1.0, 0.0), (1.0, 1.0), (2.0, 0.5),
        (0.5j, 0.2), (1.0 + 1.0j, 1.5), (-1.5, 2.0),
        (2.0 - 0.5j, 0.1), (0.3, 4.0), (1.2j, 0.8),
    ]
    start = time.perf_counter()
    worst = max(
        abs(complexity(q_thermal(nbar, xi), CONFIG).complexity - 1.0)
        for xi, nbar in pairs
    )
    elapsed = time.perf_counter() - start
    check(
        "01 displaced-thermal minimality",
        worst <= 1e-6 and elapsed < 10.0,
        f"max |C-1| = {worst:.2e} over 12 pairs, {elapsed:.1f} s",
    )


# ---------------------------------------------------------------------------
# 2. Gaussian closed form on the purity x squeezing grid
# ---------------------------------------------------------------------------

def test_c02_gaussian_closed_form_grid():
    start = time.perf_counter()
    worst = 0.0
    for mu in (0.2, 0.5, 1.0):
        for r in (0.0, 0.5, 1.0):
            field = q_gaussian(GaussianStateParams(squeezing_magnitude=r, purity=mu))
            quad = complexity(field, CONFIG).complexity
            worst = max(worst, abs(quad - gaussian_complexity_closed_form(mu, r)))
    elapsed = time.perf_counter() - start
    check(
        "02 gaussian closed form",
        worst <= 1e-6 and elapsed < 30.0,
        f"max residual = {worst:.2e} on 3x3 grid, {elapsed:.1f} s",
    )


# ---------------------------------------------------------------------------
# 3. Gaussian channel complexity
# ---------------------------------------------------------------------------

def test_c03_gaussian_channel_complexity():
    rng = np.random.default_rng(31)
    search = SearchConfig(quadrature=CONFIG)
    worst_scan = 0.0
    all_boundary = True
    for _ in range(10):
        n = float(rng.uniform(0.2, 4.0))
        m = math.sqrt(n * (n + 1.0)) * float(rng.uniform(0.2, 0.999))
        m = m * complex(np.exp(1j * rng.uniform(0, 2 * np.pi)))
        gamma_t = float(rng.uniform(0.2, 5.0))
        report_g = channel_complexity(
            GaussianChannelSpec(GaussianChannelParams(1.0, n, m), gamma_t), search
        )
        worst_scan = max(worst_scan, float(report_g.diagnostics["scan_residual"]))
        all_boundary = all_boundary and report_g.boundary_optimum
    no_squeezing = channel_complexity_at_t(GaussianChannelParams(1.0, 1.7, 0.0), 2.3)
    n_eq = 2.0
    saturated = GaussianChannelParams(1.0, n_eq, math.sqrt(n_eq * (n_eq + 1.0)))
    bound_residual = abs(channel_complexity_asymptotic(saturated) - math.sqrt(n_eq + 1.0))
    below = all(
        channel_complexity_asymptotic(GaussianChannelParams(1.0, n, math.sqrt(n * (n + 1.0)) * f))
        <= math.sqrt(n + 1.0) + 1e-9
        for n in (0.5, 1.0, 3.0)
        for f in (0.0, 0.5, 1.0)
    )
    check(
        "03 gaussian channel complexity",
        worst_scan <= 1e-6 and all_boundary and no_squeezing == 1.0
        and bound_residual <= 1e-9 and below,
        f"scan residual = {worst_scan:.2e}, boundary argmax = {all_boundary}, "
        f"M=0 value = {no_squeezing}, equality residual = {bound_residual:.2e}",
    )


# ---------------------------------------------------------------------------
# 4. evolution oracle
# ---------------------------------------------------------------------------

def test_c04_evolution_rk4_oracle():
    rng = np.random.default_rng(41)
    worst = 0.0
    for _ in range(20):
        n = float(rng.uniform(0.2, 4.0))
        m = math.sqrt(n * (n + 1.0)) * float(rng.uniform(0.0, 0.999))
        m = m * complex(np.exp(1j * rng.uniform(0, 2 * np.pi)))
        ch = GaussianChannelParams(float(rng.uniform(0.5, 2.0)), n, m)
        mu0 = float(rng.uniform(0.05, 1.0))
        t = float(rng.uniform(0.05, 5.0))
        closed = evolve_purity_squeezing(mu0, t, ch)
        oracle = covariance_flow_rk4(mu0, t, ch)
        worst = max(worst, abs(closed[0] - oracle[0]), abs(closed[1] - oracle[1]))
    check(
        "04 evolution vs RK4 covariance flow",
        worst <= 1e-9,
        f"max residual = {worst:.2e} over 20 instances",
    )


# ---------------------------------------------------------------------------
# 5. photon addition
# ---------------------------------------------------------------------------

def test_c05_photon_addition_euler():
    start = time.perf_counter()
    worst = max(
        abs(
            complexity(q_photon_added(PhotonVariantParams("added", 0.0, nbar)), CONFIG).complexity
            - EULER_GAMMA_EXP
        )
        for nbar in (0.5, 1.0, 5.0)
    )
    elapsed = time.perf_counter() - start
    check(
        "05 photon addition exp(euler gamma)",
        worst <= 1e-5 and elapsed < 20.0,
        f"max |C - e^gamma| = {worst:.2e}, {elapsed:.1f} s",
    )


# ---------------------------------------------------------------------------
# 6. photon subtraction
# ---------------------------------------------------------------------------

def test_c06_photon_subtraction():
    nbar = 1.5
    w_add, w_th = photon_sub_mixture_weights(nbar)
    grid = np.linspace(-4.0, 4.0, 41)
    pts = grid[:, None] + 1j * grid[None, :]
    residual = float(
        np.max(
            np.abs(
                q_photon_subtracted(PhotonVariantParams("subtracted", 0.0, nbar)).value_at(pts)
                - w_add * q_photon_added(PhotonVariantParams("added", 0.0, nbar)).value_at(pts)
                - w_th * q_thermal(nbar).value_at(pts)
            )
        )
    )
    sweep = [
        complexity(
            q_photon_subtracted(PhotonVariantParams("subtracted", 0.0, n)), CONFIG
        ).complexity
        for n in (1.0, 10.0, 50.0, 200.0)
    ]
    increasing = all(b > a for a, b in zip(sweep, sweep[1:]))
    bounded = sweep[-1] <= EULER_GAMMA_EXP + 1e-4
    check(
        "06 photon subtraction",
        residual <= 1e-12 and increasing and bounded,
        f"mixture residual = {residual:.2e}, sweep = "
        + " -> ".join(f"{v:.6f}" for v in sweep),
    )


# ---------------------------------------------------------------------------
# 7. phase-diffusion quartic law and figure properties
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("kappa", [1.0, 3.0, 10.0])
def test_c07_quartic_ratio(kappa):
    measured, predicted = quartic_law_check(kappa, 0.1, CONFIG)
    ratio = measured / predicted
    check(
        f"07 quartic ratio kappa={kappa:g}",
        abs(ratio - 1.0) <= 0.05,
        f"(C-1)/xi^4 / gamma = {ratio:.4f} at xi = 0.1",
    )


@pytest.mark.parametrize("kappa", [1.0, 3.0, 10.0])
def test_c07_quartic_slope(kappa):
    xs = np.linspace(0.05, 0.15, 5)
    cs = [
        complexity(q_phase_diffused(PhaseDiffusionParams(kappa, float(x), 0.0)), CONFIG).complexity
        for x in xs
    ]
    slope = float(np.polyfit(np.log(xs), np.log(np.array(cs) - 1.0), 1)[0])
    check(
        f"07 quartic log-log slope kappa={kappa:g}",
        abs(slope - 4.0) <= 0.1,
        f"slope = {slope:.3f} over xi in [0.05, 0.15]",
    )


def test_c07_fig1_monotone_and_ordering():
    kappas = (0.001, 3.0, 10.0)
    grid = np.linspace(0.5, 6.0, 23)
    curves = {
        kappa: np.array(
            [
                complexity(
                    q_phase_diffused(PhaseDiffusionParams(kappa, float(x), 0.0)), CONFIG
                ).complexity
                for x in grid
            ]
        )
        for kappa in kappas
    }
    monotone = all(np.all(np.diff(curves[k]) > 0.0) for k in kappas)
    # ordering where the curves are separated at plot scale (they cross
    # below xi ~ 0.7, where all lie within 1e-4 of 1: the small-xi flip is
    # the quartic-coefficient nonmonotonicity checked in criterion 10)
    sep = grid >= 1.0
    ordered = bool(
        np.all(curves[0.001][sep] > curves[3.0][sep])
        and np.all(curves[3.0][sep] > curves[10.0][sep])
    )
    check(
        "07 fig1 monotone in xi and kappa ordering",
        monotone and ordered,
        f"monotone = {monotone}, top-to-bottom ordering on xi >= 1: {ordered}",
    )


@pytest.mark.parametrize("xi", [1.0, 2.0, 3.0])
def test_c07_fig2_monotone_in_neg_log_kappa(xi):
    grid = np.round(np.arange(-3.0, 7.0001, 0.25), 10)
    values = [
        complexity(
            q_phase_diffused(PhaseDiffusionParams(float(np.exp(-s)), xi, 0.0)), CONFIG
        ).complexity
        for s in grid
    ]
    steps = np.diff(values)
    check(
        f"07 fig2 monotone in -ln(kappa) at xi={xi:g}",
        bool(np.all(steps > 0.0)),
        f"min step = {steps.min():.2e} over 41 points",
    )


@pytest.mark.parametrize("nbar", [0.1, 1.0, 10.0])
def test_c07_fig3a_added_decreasing_in_xi(nbar):
    grid = np.linspace(0.0, 3.0, 21)
    values = [
        complexity(q_photon_added(PhotonVariantParams("added", float(x), nbar)), CONFIG).complexity
        for x in grid
    ]
    steps = np.diff(values)
    check(
        f"07 fig3a added decreasing in xi at nbar={nbar:g}",
        bool(np.all(steps < 0.0)),
        f"max step = {steps.max():.2e}",
    )


@pytest.mark.parametrize("xi", [0.1, 1.0, 3.0])
def test_c07_fig3b_added_increasing_in_nbar(xi):
    grid = np.geomspace(0.1, 10.0, 20)
    values = [
        complexity(q_photon_added(PhotonVariantParams("added", xi, float(n))), CONFIG).complexity
        for n in grid
    ]
    steps = np.diff(values)
    check(
        f"07 fig3b added increasing in nbar at xi={xi:g}",
        bool(np.all(steps > 0.0)),
        f"min step = {steps.min():.2e}",
    )


@pytest.mark.parametrize("nbar", [0.1, 1.0, 10.0])
def test_c07_fig4a_subtracted_decreasing_in_xi(nbar):
    grid = np.linspace(0.0, 3.0, 21)
    values = [
        complexity(
            q_photon_subtracted(PhotonVariantParams("subtracted", float(x), nbar)), CONFIG
        ).complexity
        for x in grid
    ]
    steps = np.diff(values)
    check(
        f"07 fig4a subtracted decreasing in xi at nbar={nbar:g}",
        bool(np.all(steps < 0.0)),
        f"max step = {steps.max():.2e}",
    )


@pytest.mark.parametrize("xi", [0.1, 1.0, 3.0])
def test_c07_fig4b_subtracted_increasing_in_nbar(xi):
    grid = np.geomspace(0.1, 10.0, 20)
    values = [
        complexity(
            q_photon_subtracted(PhotonVariantParams("subtracted", xi, float(n))), CONFIG
        ).complexity
        for n in grid
    ]
    steps = np.diff(values)
    check(
        f"07 fig4b subtracted increasing in nbar at xi={xi:g}",
        bool(np.all(steps > 0.0)),
        f"min step = {steps.min():.2e}",
    )


# ---------------------------------------------------------------------------
# 8. scaling-invariance reduction
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("kappa", [0.5, 3.0])
def test_c08_scaling_reduction(kappa):
    full = complexity(q_phase_diffused(PhaseDiffusionParams(kappa, 2.0, 3.0)), CONFIG).complexity
    reduced = complexity(q_phase_diffused(PhaseDiffusionParams(kappa, 1.0, 0.0)), CONFIG).complexity
    check(
        f"08 scaling reduction kappa={kappa:g}",
        abs(full - reduced) <= 1e-6,
        f"|C(2,3) - C(1,0)| = {abs(full - reduced):.2e}",
    )


# ---------------------------------------------------------------------------
# 9. Fock oracle equivalence
# ---------------------------------------------------------------------------

def test_c09_fock_oracle_equivalence():
    start = time.perf_counter()
    rng = np.random.default_rng(91)
    families = {
        "displaced_thermal": (displaced_thermal_fock(1.0, 0.5, 70), q_thermal(0.5, 1.0), 0.0),
        "phase_diffused": (
            dephase_von_mises(displaced_thermal_fock(1.0, 0.5, 70), 3.0),
            q_phase_diffused(PhaseDiffusionParams(3.0, 1.0, 0.5)),
            0.0,
        ),
        "photon_added": (
            apply_ladder(displaced_thermal_fock(1.0, 1.0, 70), "added"),
            q_photon_added(PhotonVariantParams("added", 1.0, 1.0)),
            0.0,
        ),
        "photon_subtracted": (
            apply_ladder(displaced_thermal_fock(1.0, 1.0, 70), "subtracted"),
            q_photon_subtracted(PhotonVariantParams("subtracted", 1.0, 1.0)),
            1.0,
        ),
    }
    worst_point = 0.0
    for rho, field, shift in families.values():
        radius = math.sqrt(rho.dim / 4.0) / math.sqrt(2.0)
        pts = rng.uniform(-radius, radius, (50, 2)) @ np.array([1.0, 1.0j])
        fock_vals = np.array([husimi_from_fock(rho, p) for p in pts])
        worst_point = max(worst_point, float(np.max(np.abs(fock_vals - field.value_at(pts - shift)))))

    complexity_cases = {
        "displaced_thermal": (displaced_thermal_fock(1.0, 0.5, 60), 1.0),
        "phase_diffused": (
            dephase_von_mises(displaced_thermal_fock(1.0, 0.0, 60), 3.0),
            complexity(q_phase_diffused(PhaseDiffusionParams(3.0, 1.0, 0.0)), CONFIG).complexity,
        ),
        "photon_added": (apply_ladder(displaced_thermal_fock(0.0, 1.0, 60), "added"), EULER_GAMMA_EXP),
        "photon_subtracted": (
            apply_ladder(displaced_thermal_fock(1.0, 1.0, 60), "subtracted"),
            complexity(
                q_photon_subtracted(PhotonVariantParams("subtracted", 1.0, 1.0)), CONFIG
            ).complexity,
        ),
    }
    worst_complexity = max(
        abs(complexity_from_fock(rho, CONFIG).complexity - reference)
        for rho, reference in complexity_cases.values()
    )
    elapsed = time.perf_counter() - start
    check(
        "09 fock oracle equivalence",
        worst_point <= 1e-8 and worst_complexity <= 1e-4 and elapsed < 120.0,
        f"max Husimi residual = {worst_point:.2e}, max complexity residual = "
        f"{worst_complexity:.2e}, {elapsed:.0f} s",
    )


# ---------------------------------------------------------------------------
# 10. quartic-coefficient limits
# ---------------------------------------------------------------------------

def test_c10_gamma_small_kappa_bound():
    value = gamma_kappa(1e-3).gamma
    check("10 gamma(1e-3) below 1e-10", value <= 1e-10, f"gamma = {value:.2e}")


def test_c10_gamma_small_kappa_series_ratio():
    # stated reference constant kappa^4/32; the series limit the formula
    # actually obeys is kappa^4/128 (see the module docstring)
    kappa = 0.01
    ratio = gamma_kappa(kappa).gamma / (kappa ** 4 / 32.0)
    check(
        "10 gamma(0.01) ratio to kappa^4/32 within 1%",
        abs(ratio - 1.0) <= 0.01,
        f"ratio = {ratio:.4f} (ratio to kappa^4/128 = {ratio * 4.0:.4f})",
    )


def test_c10_gamma_large_kappa_bound():
    value = gamma_kappa(1e3).gamma
    check("10 gamma(1e3) below 1e-5", value <= 1e-5, f"gamma = {value:.2e}")


def test_c10_gamma_interior_maximum():
    from cvcomplexity import maximize_1d

    arg, value = maximize_1d(lambda k: gamma_kappa(k).gamma, (0.1, 50.0), 1e-6)
    ok = (
        0.1 + 1e-3 < arg < 50.0 - 1e-3
        and value > gamma_kappa(0.1).gamma
        and value > gamma_kappa(50.0).gamma
    )
    check(
        "10 gamma interior maximum",
        ok,
        f"argmax = {arg:.3f}, gamma = {value:.5f} vs endpoints "
        f"{gamma_kappa(0.1).gamma:.2e}, {gamma_kappa(50.0).gamma:.2e}",
    )
