"""Quartic growth coefficient, scaling reduction, and the photon-channel
suprema."""

import math

import numpy as np
import pytest
from scipy import special

from cvcomplexity import (
    ConsistencyError,
    DomainError,
    EULER_GAMMA_EXP,
    PhaseDiffusionParams,
    complexity,
    gamma_kappa,
    gamma_kappa_limit_zero,
    photon_variant_channel_complexity,
    q_phase_diffused,
    quartic_law_check,
    scaling_reduce,
)


class TestGammaKappa:
    def test_matches_direct_bessel_expression(self):
        # same quantity without the regrouping, straight from unscaled
        # Bessel functions (safe at moderate kappa)
        for kappa in (0.1, 0.7, 2.0, 5.0, 15.0):
            i0 = special.iv(0, kappa)
            i1 = special.iv(1, kappa)
            direct = 0.5 * ((2.0 * i0 * i1 + kappa * i1 ** 2) / (kappa * i0 ** 2) - 1.0) ** 2
            assert gamma_kappa(kappa).gamma == pytest.approx(direct, rel=1e-12)

    def test_small_kappa_series_limit(self):
        # expanding I_0 = 1 + k^2/4 + k^4/64 and I_1 = k/2 + k^3/16 gives
        # gamma -> k^4/128; the quadrature measurement below confirms the
        # coefficient is the quartic growth rate of the complexity
        value = gamma_kappa(1e-3).gamma
        assert value == pytest.approx(1e-12 / 128.0, rel=1e-4)
        assert gamma_kappa(0.01).gamma == pytest.approx(1e-8 / 128.0, rel=1e-3)

    def test_vanishes_in_both_limits(self):
        assert gamma_kappa(1e-3).gamma <= 1e-10
        assert gamma_kappa(1e3).gamma <= 1e-5
        assert gamma_kappa(1e6).gamma <= 1e-11

    def test_nonmonotone_with_interior_maximum(self):
        assert gamma_kappa(3.0).gamma > gamma_kappa(0.001).gamma
        assert gamma_kappa(3.0).gamma > gamma_kappa(10.0).gamma

    def test_limit_zero(self):
        limit = gamma_kappa_limit_zero()
        assert limit.kappa == 0.0
        assert limit.gamma == 0.0

    def test_domain(self):
        with pytest.raises(DomainError):
            gamma_kappa(0.0)
        with pytest.raises(DomainError):
            gamma_kappa(-1.0)


class TestScalingReduce:
    def test_identity_at_zero_temperature(self):
        assert scaling_reduce(1.7, 0.0) == (1.7, 0.0)

    def test_arithmetic(self):
        xi, nbar = scaling_reduce(2.0, 3.0)
        assert xi == pytest.approx(1.0, rel=1e-15)
        assert nbar == 0.0

    @pytest.mark.parametrize("kappa", [0.5, 3.0])
    def test_complexity_equality(self, kappa, fast_config):
        full = complexity(
            q_phase_diffused(PhaseDiffusionParams(kappa, 2.0, 3.0)), fast_config
        ).complexity
        xi_red, nbar_red = scaling_reduce(2.0, 3.0)
        reduced = complexity(
            q_phase_diffused(PhaseDiffusionParams(kappa, xi_red, nbar_red)), fast_config
        ).complexity
        assert full == pytest.approx(reduced, abs=1e-6)

    def test_domain(self):
        with pytest.raises(DomainError):
            scaling_reduce(-1.0, 0.0)


class TestQuarticLaw:
    def test_kappa_three(self):
        measured, predicted = quartic_law_check(3.0, 0.1)
        assert abs(measured / predicted - 1.0) <= 0.05

    def test_converges_from_below_in_xi(self):
        # the xi^2-order remainder shrinks with xi
        ratios = []
        for xi in (0.1, 0.05, 0.025):
            measured, predicted = quartic_law_check(1.0, xi)
            ratios.append(measured / predicted)
        assert ratios[0] > ratios[1] > ratios[2] > 1.0
        assert ratios[2] == pytest.approx(1.0, abs=0.02)

    def test_log_log_slope_kappa_three(self):
        xs = np.linspace(0.05, 0.15, 5)
        cs = [quartic_law_check(3.0, float(x))[0] * x ** 4 for x in xs]
        slope = np.polyfit(np.log(xs), np.log(cs), 1)[0]
        assert slope == pytest.approx(4.0, abs=0.1)

    def test_domain(self):
        with pytest.raises(DomainError):
            quartic_law_check(3.0, 0.0)
        with pytest.raises(DomainError):
            quartic_law_check(3.0, 0.5)


class TestPhotonChannels:
    def test_added(self, fast_config):
        report = photon_variant_channel_complexity("added", fast_config)
        assert report.value == pytest.approx(EULER_GAMMA_EXP, abs=1e-12)
        assert report.attained
        assert report.argmax[0] == 0.0
        assert report.diagnostics["max_residual"] <= 1e-5

    def test_subtracted(self, fast_config):
        report = photon_variant_channel_complexity("subtracted", fast_config)
        assert report.value == pytest.approx(EULER_GAMMA_EXP, abs=1e-12)
        assert not report.attained
        assert report.diagnostics["diagnosis"] == "limit"
        values = [v for _, v in report.scan_curve]
        assert all(b > a for a, b in zip(values, values[1:]))
        assert values[-1] < EULER_GAMMA_EXP

    def test_subtracted_below_limit_at_nbar_one(self, fast_config):
        from cvcomplexity import PhotonVariantParams, q_photon_subtracted

        value = complexity(
            q_photon_subtracted(PhotonVariantParams("subtracted", 0.0, 1.0)), fast_config
        ).complexity
        assert value < EULER_GAMMA_EXP

    def test_unknown_variant(self):
        with pytest.raises(DomainError):
            photon_variant_channel_complexity("doubled")
