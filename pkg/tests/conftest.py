import numpy as np
import pytest

from cvcomplexity import (
    GaussianStateParams,
    PhaseDiffusionParams,
    PhotonVariantParams,
    QuadratureConfig,
    q_gaussian,
    q_phase_diffused,
    q_photon_added,
    q_photon_subtracted,
)


@pytest.fixture(scope="session")
def fast_config():
    """Reduced node counts for property sweeps; still accurate to ~1e-10
    for the smooth fields used in tests."""
    return QuadratureConfig(
        angular_nodes=128,
        radial_panel_order=12,
        radial_panel_count=12,
        tail_tolerance=1e-10,
    )


def family_fields():
    """One representative Husimi field per analytic family."""
    return {
        "gaussian": q_gaussian(
            GaussianStateParams(
                displacement=1.0 + 0.5j,
                squeezing_magnitude=0.8,
                squeezing_phase=0.6,
                purity=0.5,
            )
        ),
        "phase_diffused": q_phase_diffused(PhaseDiffusionParams(3.0, 1.0, 0.5)),
        "photon_added": q_photon_added(PhotonVariantParams("added", 1.0, 1.0)),
        "photon_subtracted": q_photon_subtracted(
            PhotonVariantParams("subtracted", 1.0, 1.0)
        ),
    }


@pytest.fixture(scope="session")
def fields():
    return family_fields()


@pytest.fixture()
def rng():
    return np.random.default_rng(20250810)
