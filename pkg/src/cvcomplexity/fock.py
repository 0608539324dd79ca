"""Independent truncated-Fock-basis engine.

Everything here rebuilds the states of the closed-form families from
first principles in a truncated number basis, without touching any
closed-form Husimi expression: thermal weights, displacement by matrix
exponential, von Mises dephasing as an exact entrywise Bessel kernel,
and ladder-operator channels.  Husimi values come from the coherent-state
overlap series, so agreement with the analytic fields is a genuine
two-route cross-validation.

Numerical notes
---------------
The coherent coefficients <n|alpha> = e^{-|alpha|^2/2} alpha^n / sqrt(n!)
are accumulated by the stable recursion v_n = v_{n-1} * alpha / sqrt(n);
every |v_n| <= 1, so the series never overflows.  The Wirtinger derivative
of Q = v^H rho v gives the analytic gradient:

    dQ/d(alpha) = -conj(alpha) Q + v^H rho (S v),   (S v)_n = sqrt(n) v_{n-1},
    dQ/dx = 2 Re dQ/d(alpha),  dQ/dy = -2 Im dQ/d(alpha).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .errors import ConsistencyError, DomainError, ReliabilityError, TruncationError
from .functionals import ComplexityValue, QField, complexity
from .numerics import QuadratureConfig, bessel_ratio_sequence

__all__ = [
    "FockDensityMatrix",
    "displaced_thermal_fock",
    "dephase_von_mises",
    "apply_ladder",
    "husimi_from_fock",
    "fock_q_field",
    "complexity_from_fock",
]

DEFAULT_DIM = 70

_HERMITICITY_TOL = 1e-12
_TRACE_TOL = 1e-10
_LEAKAGE_TOL = 1e-10


@dataclass(frozen=True)
class FockDensityMatrix:
    """Density matrix truncated to the number states |0> .. |dim-1>.

    Hermiticity and unit trace are enforced at construction (the entries
    are stored read-only); positivity and truncation leakage are separate
    checks because they are only meaningful for physically prepared
    matrices, not intermediate products.
    """

    entries: np.ndarray

    def __post_init__(self):
        m = np.array(self.entries, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DomainError(f"density matrix must be square, got shape {m.shape}")
        herm = float(np.max(np.abs(m - m.conj().T)))
        if herm > _HERMITICITY_TOL:
            raise ConsistencyError(f"matrix is not Hermitian (defect {herm:g})")
        m = 0.5 * (m + m.conj().T)
        tr = float(m.trace().real)
        if abs(tr - 1.0) > _TRACE_TOL:
            raise ConsistencyError(f"trace {tr!r} differs from 1 beyond {_TRACE_TOL:g}")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def populations(self) -> np.ndarray:
        return self.entries.diagonal().real.copy()

    def smallest_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.entries)[0])

    def leakage(self) -> float:
        """Population of the top 10 percent of levels; must stay below
        1e-10 for the truncation to be trustworthy."""
        top = max(1, self.dim // 10)
        return float(self.populations()[-top:].sum())

    def check_truncation(self) -> None:
        leak = self.leakage()
        if leak > _LEAKAGE_TOL:
            raise TruncationError(
                f"top-level population {leak:g} exceeds {_LEAKAGE_TOL:g}; "
                f"dimension {self.dim} is too small for this state"
            )


def _annihilation(dim: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, dim, dtype=float)), k=1)


def displaced_thermal_fock(xi: complex, nbar: float, dim: int = DEFAULT_DIM) -> FockDensityMatrix:
    """Displaced thermal state built in the number basis.

    The thermal state is diagonal with the geometric weights
    (1/(1+nbar)) (nbar/(1+nbar))^k; it is conjugated by the matrix
    exponential of xi a^dag - conj(xi) a at truncation ``dim``.  The guard
    dim >= 8 (|xi|^2 + nbar + 1) + 20 keeps the displaced state's support
    far from the truncation edge.
    """
    xi = complex(xi)
    if nbar < 0.0:
        raise DomainError(f"mean photon number must be nonnegative, got {nbar}")
    required = 8.0 * (abs(xi) ** 2 + nbar + 1.0) + 20.0
    if dim < required:
        raise TruncationError(
            f"dimension {dim} too small for xi={xi}, nbar={nbar}; "
            f"need at least {math.ceil(required)}"
        )
    k = np.arange(dim, dtype=float)
    if nbar == 0.0:
        weights = np.zeros(dim)
        weights[0] = 1.0
    else:
        ratio = nbar / (1.0 + nbar)
        weights = np.exp(k * math.log(ratio)) / (1.0 + nbar)
    rho = np.diag(weights.astype(complex))
    if xi != 0:
        a = _annihilation(dim)
        displacer = expm(xi * a.conj().T - xi.conjugate() * a)
        rho = displacer @ rho @ displacer.conj().T
    rho = rho / rho.trace().real
    return FockDensityMatrix(rho)


def dephase_von_mises(rho: FockDensityMatrix, kappa: float) -> FockDensityMatrix:
    """Phase diffusion with a von Mises phase distribution of
    concentration kappa.

    Averaging e^{-i theta n} rho e^{i theta n} over the von Mises density
    multiplies each entry rho_{mn} by the circular characteristic function
    I_{|m-n|}(kappa)/I_0(kappa); the kernel is applied entrywise, which is
    exact (no theta quadrature involved).  Diagonal entries, and hence the
    trace, are untouched; kappa = 0 removes all coherences.
    """
    if kappa < 0.0:
        raise DomainError(f"concentration must be nonnegative, got {kappa}")
    dim = rho.dim
    ratios = bessel_ratio_sequence(dim - 1, kappa)
    m, n = np.indices((dim, dim))
    kernel = ratios[np.abs(m - n)]
    return FockDensityMatrix(rho.entries * kernel)


def apply_ladder(rho: FockDensityMatrix, variant: str) -> FockDensityMatrix:
    """Heralded photon addition (a^dag rho a) or subtraction (a rho a^dag),
    renormalized by the computed trace.

    The computed trace equals 1 + <n> for addition and <n> for subtraction
    up to truncation error; subtraction from a state with vanishing <n>
    (nothing to subtract) is rejected.
    """
    a = _annihilation(rho.dim)
    if variant == "added":
        raw = a.conj().T @ rho.entries @ a
    elif variant == "subtracted":
        raw = a @ rho.entries @ a.conj().T
    else:
        raise DomainError(f"variant must be 'added' or 'subtracted', got {variant!r}")
    tr = float(raw.trace().real)
    if variant == "subtracted" and tr <= 1e-12:
        raise DomainError(
            "cannot subtract a photon: the state has no photons to remove "
            f"(trace of a rho a^dag = {tr:g})"
        )
    return FockDensityMatrix(raw / tr)


def _coherent_row(alpha: np.ndarray, dim: int) -> np.ndarray:
    """Matrix of coherent coefficients v[j, n] = <n|alpha_j>."""
    alpha = np.asarray(alpha, dtype=complex).ravel()
    v = np.empty((alpha.size, dim), dtype=complex)
    v[:, 0] = np.exp(-0.5 * np.abs(alpha) ** 2)
    for n in range(1, dim):
        v[:, n] = v[:, n - 1] * alpha / math.sqrt(n)
    return v


def husimi_from_fock(rho: FockDensityMatrix, alpha: complex) -> float:
    """Husimi value <alpha| rho |alpha> of a truncated density matrix.

    Points with |alpha|^2 > dim/4 are rejected: so far from the origin the
    truncated basis no longer represents the coherent probe reliably.
    Tiny negative values (above -1e-12) from roundoff are clamped to zero;
    anything more negative indicates a broken matrix.
    """
    alpha = complex(alpha)
    if abs(alpha) ** 2 > rho.dim / 4.0:
        raise ReliabilityError(
            f"|alpha|^2 = {abs(alpha) ** 2:g} exceeds dim/4 = {rho.dim / 4.0:g}; "
            "increase the truncation dimension"
        )
    v = _coherent_row(np.array([alpha]), rho.dim)
    q = float(np.real(v.conj()[0] @ rho.entries @ v[0]))
    if q < -1e-12:
        raise ConsistencyError(f"Husimi value {q!r} is negative beyond roundoff")
    return max(q, 0.0)


def fock_q_field(rho: FockDensityMatrix) -> QField:
    """Wrap a truncated density matrix as an evaluable Husimi field.

    The value is the coherent-overlap series; the gradient is its exact
    Wirtinger derivative (see the module docstring).  Center and scale
    metadata come from the first and second moments of rho:
    center = tr(rho a) and scale = (tr(rho a a^dag) - |center|^2) / 2,
    the per-axis variance of an isotropic envelope with those moments.
    """
    rho.check_truncation()
    entries = rho.entries
    dim = rho.dim
    a = _annihilation(dim)
    center = complex(np.trace(entries @ a))
    second = float(np.real(np.trace(entries @ (a @ a.conj().T))))
    scale = max(0.5, 0.5 * (second - abs(center) ** 2))
    sqrt_n = np.sqrt(np.arange(dim, dtype=float))

    rho_t = np.ascontiguousarray(entries.T)

    def value_at(alpha):
        pts = np.asarray(alpha, dtype=complex)
        v = _coherent_row(pts, dim)
        q = np.sum(v.conj() * (v @ rho_t), axis=1).real
        return np.maximum(q, 0.0).reshape(pts.shape)

    def gradient_at(alpha):
        pts = np.asarray(alpha, dtype=complex)
        flat = pts.ravel()
        v = _coherent_row(flat, dim)
        q = np.sum(v.conj() * (v @ rho_t), axis=1).real
        shifted = np.zeros_like(v)
        shifted[:, 1:] = v[:, :-1] * sqrt_n[1:]
        d_alpha = np.sum(v.conj() * (shifted @ rho_t), axis=1) - flat.conj() * q
        gx = 2.0 * d_alpha.real
        gy = -2.0 * d_alpha.imag
        return gx.reshape(pts.shape), gy.reshape(pts.shape)

    return QField(value_at=value_at, gradient_at=gradient_at, center=center, scale=scale)


def complexity_from_fock(
    rho: FockDensityMatrix, config: QuadratureConfig | None = None
) -> ComplexityValue:
    """Complexity of a truncated state via quadrature on its overlap-series
    Husimi field.  Raises TruncationError when the top-level leakage guard
    indicates the dimension is too small."""
    return complexity(fock_q_field(rho), config or QuadratureConfig())
