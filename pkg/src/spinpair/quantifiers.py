"""Non-local correlation quantifiers for two-qubit density matrices.

Three measures are reported per state, each normalized to [0, 1]:

* local quantum Fisher information (``lqfi``): one minus the largest
  eigenvalue of a 3x3 matrix built from the state's spectral
  decomposition and one qubit's Pauli observables,
* local quantum uncertainty (``lqu``): one minus the largest eigenvalue
  of a 3x3 matrix of skew-information overlaps built from the square
  root of the state,
* logarithmic negativity (``log_negativity``): log2(1 + 2 mu) with mu
  the absolute sum of negative partial-transpose eigenvalues.

``lqfi`` probes qubit B by default and ``lqu`` probes qubit A; both
accept an explicit side because those defaults differ and the states
produced by an inhomogeneous field are not exchange-symmetric.  Purity
Tr(M^2) rides along as a dephasing diagnostic.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericalDefect, ValidationError
from .linalg import (
    IDENTITY_2,
    PAULIS,
    eig_hermitian,
    hermitian_part,
    kron,
    matrix_sqrt_psd,
    partial_transpose_b,
    validate_density_matrix,
)

#: Pairs (pi_m, pi_n) with pi_m + pi_n at or below this are skipped in the
#: lqfi weights; skipped terms contribute O(cutoff) to the 3x3 matrix.
EIGENSUM_CUTOFF = 1e-12
#: Partial-transpose eigenvalues in [-this, 0) count as zero.
NEGATIVE_EIG_CUTOFF = 1e-12
#: The accumulated 3x3 matrices must be real-symmetric to within this.
SYMMETRY_TOL = 1e-8
#: Outputs may leave their exact range by at most this before it is a defect.
CLAMP_TOL = 1e-9


class LocalSide(enum.Enum):
    """Which qubit the local observable set {sigma_x, sigma_y, sigma_z} acts on."""

    QUBIT_A = "A"
    QUBIT_B = "B"


_OBSERVABLES = {
    LocalSide.QUBIT_A: tuple(kron(s, IDENTITY_2) for s in PAULIS),
    LocalSide.QUBIT_B: tuple(kron(IDENTITY_2, s) for s in PAULIS),
}


def _clamped(value: float, low: float, high: float, what: str) -> float:
    if value < low - CLAMP_TOL or value > high + CLAMP_TOL:
        raise NumericalDefect(f"{what} = {value!r} outside [{low}, {high}]")
    return min(max(value, low), high)


@dataclass(frozen=True)
class CorrelationSample:
    """One time point of the three quantifiers plus purity."""

    t: float
    lqfi: float
    lqu: float
    log_negativity: float
    purity: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.t) and self.t >= 0.0):
            raise ValidationError(f"t must be finite and >= 0, got {self.t!r}")
        for name, value, low, high in (
            ("lqfi", self.lqfi, 0.0, 1.0),
            ("lqu", self.lqu, 0.0, 1.0),
            ("log_negativity", self.log_negativity, 0.0, 1.0),
            ("purity", self.purity, 0.25, 1.0),
        ):
            if not (low <= value <= high):
                raise ValidationError(f"{name} = {value!r} outside [{low}, {high}]")


def lqfi(m: np.ndarray, side: LocalSide = LocalSide.QUBIT_B) -> float:
    """Local quantum Fisher information of a valid density matrix.

    With spectral decomposition M = sum_m pi_m |m><m| and local Paulis
    O_i, accumulates

        r_ij = sum_{pi_m + pi_n > cutoff} [2 pi_m pi_n / (pi_m + pi_n)]
               <m|O_i|n> <m|O_j|n>^*

    and returns 1 - lambda_max(R), clamped to [0, 1].  The accumulation
    is Hermitian and real up to round-off; a residual beyond
    SYMMETRY_TOL raises NumericalDefect.
    """
    m = validate_density_matrix(m)
    dec = eig_hermitian(m)
    probs = np.maximum(dec.eigenvalues, 0.0)
    vecs = dec.eigenvectors
    xi = np.stack([vecs.conj().T @ o @ vecs for o in _OBSERVABLES[side]])
    pair_sum = probs[:, None] + probs[None, :]
    weights = np.zeros((4, 4))
    kept = pair_sum > EIGENSUM_CUTOFF
    weights[kept] = 2.0 * (probs[:, None] * probs[None, :])[kept] / pair_sum[kept]
    r = np.einsum("imn,jmn,mn->ij", xi, xi.conj(), weights)
    r = (r + r.conj().T) / 2.0
    residual = float(np.max(np.abs(r.imag)))
    if residual > SYMMETRY_TOL:
        raise NumericalDefect(f"lqfi matrix not real: max imaginary part {residual:.3e}")
    top = float(np.linalg.eigvalsh(r.real)[-1])
    return _clamped(1.0 - top, 0.0, 1.0, "lqfi")


def lqu(m: np.ndarray, side: LocalSide = LocalSide.QUBIT_A) -> float:
    """Local quantum uncertainty of a valid density matrix.

    Builds a_ij = Tr{sqrt(M) O_i sqrt(M) O_j} from the PSD square root
    and returns 1 - lambda_max(A), clamped to [0, 1].  A must be
    real-symmetric within SYMMETRY_TOL or NumericalDefect is raised.
    """
    m = validate_density_matrix(m)
    root = matrix_sqrt_psd(m)
    halves = np.stack([root @ o for o in _OBSERVABLES[side]])
    a = np.einsum("imn,jnm->ij", halves, halves)
    residual = max(float(np.max(np.abs(a.imag))), float(np.max(np.abs(a - a.T))))
    if residual > SYMMETRY_TOL:
        raise NumericalDefect(f"lqu matrix not real-symmetric: residual {residual:.3e}")
    top = float(np.linalg.eigvalsh(((a + a.T) / 2.0).real)[-1])
    return _clamped(1.0 - top, 0.0, 1.0, "lqu")


def log_negativity(m: np.ndarray) -> float:
    """Logarithmic negativity log2(1 + 2 mu) of a valid density matrix.

    mu is the absolute sum of the negative eigenvalues of the
    second-qubit partial transpose; eigenvalues within
    NEGATIVE_EIG_CUTOFF of zero count as zero, so explicit product
    states give exactly 0.
    """
    m = validate_density_matrix(m)
    w = np.linalg.eigvalsh(hermitian_part(partial_transpose_b(m)))
    mu = float(-np.sum(w[w < -NEGATIVE_EIG_CUTOFF]))
    return _clamped(math.log2(1.0 + 2.0 * mu), 0.0, 1.0, "log negativity")


def purity(m: np.ndarray) -> float:
    """Tr(M^2); 1 for pure states, 1/4 for the maximally mixed state."""
    m = np.asarray(m, dtype=complex)
    return float(np.trace(m @ m).real)


def sample(
    m: np.ndarray,
    t: float,
    lqfi_side: LocalSide = LocalSide.QUBIT_B,
    lqu_side: LocalSide = LocalSide.QUBIT_A,
) -> CorrelationSample:
    """Bundle all quantifiers for one state at time t."""
    return CorrelationSample(
        t=float(t),
        lqfi=lqfi(m, lqfi_side),
        lqu=lqu(m, lqu_side),
        log_negativity=log_negativity(m),
        purity=_clamped(purity(m), 0.25, 1.0, "purity"),
    )
