"""Statistical phase-space complexity of single-mode bosonic states and
channels, computed from Husimi functions.

The complexity of a state is exp(S_W - 1) * I, where S_W is the Wehrl
entropy and I the location Fisher information of its Husimi function;
the complexity of a channel is the supremum of the output complexity
over displaced thermal inputs.  The package provides closed-form Husimi
fields for Gaussian, phase-diffused and photon-added/subtracted states,
a polar quadrature engine for the functionals, closed-form results for
diffusive Gaussian channels, and an independent truncated-Fock-basis
oracle for cross-validation.
"""

__version__ = "0.1.0"

from .errors import (
    ConsistencyError,
    CvComplexityError,
    DomainError,
    FieldEvaluationError,
    QuadratureError,
    ReliabilityError,
    TruncationError,
)
from .fock import (
    FockDensityMatrix,
    apply_ladder,
    complexity_from_fock,
    dephase_von_mises,
    displaced_thermal_fock,
    fock_q_field,
    husimi_from_fock,
)
from .functionals import (
    ComplexityValue,
    QField,
    complexity,
    fisher_information,
    scale_field,
    translate_field,
    wehrl_entropy,
)
from .gaussian import (
    AsymptoticState,
    GaussianChannelParams,
    asymptotic_state,
    channel_complexity_asymptotic,
    channel_complexity_at_t,
    covariance_flow_rk4,
    evolve_purity_squeezing,
)
from .nongaussian import (
    EULER_GAMMA_EXP,
    QuarticCoefficient,
    gamma_kappa,
    gamma_kappa_limit_zero,
    photon_variant_channel_complexity,
    quartic_law_check,
    scaling_reduce,
)
from .numerics import (
    LogBesselValue,
    QuadratureConfig,
    bessel_ratio,
    integrate_phase_plane,
    log_bessel_i,
)
from .optimizer import (
    ComplexityReport,
    GaussianChannelSpec,
    PhaseDiffusionChannelSpec,
    PhotonChannelSpec,
    SearchConfig,
    channel_complexity,
    maximize_1d,
)
from .states import (
    GaussianStateParams,
    PhaseDiffusionParams,
    PhotonVariantParams,
    gaussian_complexity_closed_form,
    photon_sub_mixture_weights,
    q_gaussian,
    q_phase_diffused,
    q_photon_added,
    q_photon_subtracted,
    q_thermal,
)
