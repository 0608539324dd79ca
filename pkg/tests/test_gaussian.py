"""Closed-form Gaussian channel results against substitution values, the
RK4 covariance oracle, and end-to-end quadrature."""

import math

import numpy as np
import pytest

from cvcomplexity import (
    DomainError,
    GaussianChannelParams,
    GaussianStateParams,
    asymptotic_state,
    channel_complexity_asymptotic,
    channel_complexity_at_t,
    complexity,
    covariance_flow_rk4,
    evolve_purity_squeezing,
    gaussian_complexity_closed_form,
    q_gaussian,
)


def random_channel(rng, saturated=False):
    n = float(rng.uniform(0.2, 4.0))
    frac = 1.0 if saturated else float(rng.uniform(0.2, 0.999))
    m = math.sqrt(n * (n + 1.0)) * frac * np.exp(1j * rng.uniform(0, 2 * np.pi))
    return GaussianChannelParams(float(rng.uniform(0.5, 2.0)), n, complex(m))


class TestChannelParams:
    def test_constraint_enforced(self):
        with pytest.raises(DomainError):
            GaussianChannelParams(1.0, 1.0, 1.5)  # |M|^2 = 2.25 > 2
        GaussianChannelParams(1.0, 1.0, math.sqrt(2.0))  # saturation is allowed

    def test_damping_positive(self):
        with pytest.raises(DomainError):
            GaussianChannelParams(0.0, 1.0, 0.0)
        with pytest.raises(DomainError):
            GaussianChannelParams(1.0, -0.5, 0.0)


class TestAsymptoticState:
    def test_unsqueezed_bath(self):
        state = asymptotic_state(GaussianChannelParams(1.0, 1.0, 0.0))
        assert state.purity == pytest.approx(1.0 / 3.0, rel=1e-14)
        assert state.squeezing == 0.0

    def test_saturated_bath_is_pure(self):
        state = asymptotic_state(GaussianChannelParams(1.0, 1.0, math.sqrt(2.0)))
        assert state.purity == pytest.approx(1.0, rel=1e-12)

    def test_intermediate_values(self):
        state = asymptotic_state(GaussianChannelParams(1.0, 1.0, 1.0))
        assert state.purity == pytest.approx(1.0 / math.sqrt(5.0), rel=1e-14)
        assert math.cosh(2.0 * state.squeezing) == pytest.approx(
            math.sqrt(9.0 / 5.0), rel=1e-14
        )

    def test_phase_is_arg_m(self):
        m = 0.7 * np.exp(1j * 2.3)
        state = asymptotic_state(GaussianChannelParams(1.0, 1.0, complex(m)))
        assert state.squeezing_phase == pytest.approx(2.3, rel=1e-12)


class TestEvolution:
    def test_initial_time(self):
        ch = GaussianChannelParams(1.0, 1.0, 1.0)
        mu, r = evolve_purity_squeezing(0.7, 0.0, ch)
        assert mu == pytest.approx(0.7, rel=1e-14)
        assert r == 0.0

    def test_long_time_limit(self):
        ch = GaussianChannelParams(1.0, 1.5, 1.2)
        asym = asymptotic_state(ch)
        mu, r = evolve_purity_squeezing(0.4, 50.0, ch)
        assert mu == pytest.approx(asym.purity, abs=1e-9)
        assert r == pytest.approx(asym.squeezing, abs=1e-9)

    def test_rk4_oracle(self, rng):
        worst = 0.0
        for _ in range(20):
            ch = random_channel(rng)
            mu0 = float(rng.uniform(0.05, 1.0))
            t = float(rng.uniform(0.05, 5.0))
            closed = evolve_purity_squeezing(mu0, t, ch)
            oracle = covariance_flow_rk4(mu0, t, ch)
            worst = max(worst, abs(closed[0] - oracle[0]), abs(closed[1] - oracle[1]))
        assert worst <= 1e-9

    def test_domain(self):
        ch = GaussianChannelParams(1.0, 1.0, 0.0)
        with pytest.raises(DomainError):
            evolve_purity_squeezing(0.0, 1.0, ch)
        with pytest.raises(DomainError):
            evolve_purity_squeezing(0.5, -1.0, ch)


class TestChannelComplexity:
    def test_unsqueezed_bath_generates_nothing(self):
        ch = GaussianChannelParams(1.0, 2.0, 0.0)
        for t in (0.0, 0.5, 3.0, 100.0):
            assert channel_complexity_at_t(ch, t) == 1.0

    def test_zero_time(self):
        ch = GaussianChannelParams(1.0, 1.0, 1.0)
        assert channel_complexity_at_t(ch, 0.0) == 1.0

    def test_short_time_limit(self):
        ch = GaussianChannelParams(1.0, 1.0, 1.0)
        assert channel_complexity_at_t(ch, 1e-12) == pytest.approx(1.0, abs=1e-11)

    def test_saturated_limit_reaches_sqrt_n_plus_one(self):
        ch = GaussianChannelParams(1.0, 1.0, math.sqrt(2.0))
        assert channel_complexity_at_t(ch, 1e4) == pytest.approx(math.sqrt(2.0), rel=1e-12)

    def test_asymptotic_values(self):
        assert channel_complexity_asymptotic(GaussianChannelParams(1.0, 2.0, 0.0)) == 1.0
        assert channel_complexity_asymptotic(
            GaussianChannelParams(1.0, 3.0, 2.0)
        ) == pytest.approx(2.0 / math.sqrt(3.0), rel=1e-14)

    def test_finite_time_approaches_asymptotic(self, rng):
        for _ in range(5):
            ch = random_channel(rng)
            t50 = 50.0 / ch.damping
            assert channel_complexity_at_t(ch, t50) == pytest.approx(
                channel_complexity_asymptotic(ch), abs=1e-9
            )

    def test_monotone_in_time(self, rng):
        ch = random_channel(rng)
        times = np.linspace(0.0, 8.0, 30)
        values = [channel_complexity_at_t(ch, float(t)) for t in times]
        assert all(b >= a for a, b in zip(values, values[1:]))

    def test_monotone_in_squeezing(self):
        n, t = 1.5, 2.0
        mags = np.linspace(0.0, math.sqrt(n * (n + 1.0)), 20)
        values = [
            channel_complexity_at_t(GaussianChannelParams(1.0, n, float(m)), t)
            for m in mags
        ]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_bounded_by_sqrt_n_plus_one(self, rng):
        for _ in range(10):
            ch = random_channel(rng)
            assert channel_complexity_asymptotic(ch) <= math.sqrt(ch.bath_photons + 1.0) + 1e-12

    def test_end_to_end_quadrature(self, fast_config, rng):
        # evolved-state quadrature equals the closed form
        ch = random_channel(rng)
        t = 1.3
        mu_t, r_t = evolve_purity_squeezing(1.0, t, ch)
        theta = asymptotic_state(ch).squeezing_phase
        field = q_gaussian(
            GaussianStateParams(squeezing_magnitude=r_t, squeezing_phase=theta, purity=mu_t)
        )
        assert complexity(field, fast_config).complexity == pytest.approx(
            channel_complexity_at_t(ch, t), abs=1e-6
        )

    def test_argmax_at_unit_purity(self, rng):
        # the output complexity increases with the input purity
        ch = random_channel(rng)
        t = 0.8
        values = [
            gaussian_complexity_closed_form(*evolve_purity_squeezing(mu0, t, ch))
            for mu0 in np.linspace(0.01, 1.0, 34)
        ]
        assert np.argmax(values) == len(values) - 1
        assert values[-1] == pytest.approx(channel_complexity_at_t(ch, t), rel=1e-12)
