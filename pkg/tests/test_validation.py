"""The named validation suites must pass end to end (reduced quadrature
settings keep this quick; the acceptance suite re-runs the heavyweight
claims at full settings)."""

import pytest

from cvcomplexity import QuadratureConfig
from cvcomplexity.validation import SUITES, run_suite


@pytest.fixture(scope="module")
def config():
    return QuadratureConfig(
        angular_nodes=128,
        radial_panel_order=12,
        radial_panel_count=12,
        tail_tolerance=1e-10,
    )


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suite_passes(suite, config):
    results = run_suite(suite, config)
    failures = [r for r in results if not r.passed]
    assert not failures, "failed checks: " + ", ".join(
        f"{r.name} (residual {r.residual:.2e} > {r.threshold:.2e})" for r in failures
    )


def test_unknown_suite_rejected(config):
    with pytest.raises(KeyError):
        run_suite("everything", config)


def test_all_collects_every_suite(config):
    named = sum(len(run_suite(name, config)) for name in SUITES)
    assert len(run_suite("all", config)) == named
