"""Fixed-size complex linear algebra for the two-qubit kernel.

Matrices are plain numpy arrays (2x2 or 4x4, complex128).  The two-qubit
product basis is ordered {|11>, |10>, |01>, |00>}: qubit A is the slow
(left) Kronecker index and |1> is the +1 eigenvector of sigma_z.  Every
function here is pure; returned values are meant to be treated as
immutable and are safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidDensityMatrix, NotHermitian, NotPositiveSemidefinite

# Tolerances: inputs may deviate from exact Hermiticity/positivity by
# round-off; anything past these windows is treated as a caller error.
HERMITICITY_TOL = 1e-9
PSD_CLAMP = 1e-9
DENSITY_TOL = 1e-9
# Eigenvalues of rank-deficient inputs come back as +-1e-16 noise; sqrt
# has an unbounded derivative at zero and would blow that up to ~1e-8,
# so anything below this is treated as an exact zero.
SQRT_NOISE_CLAMP = 1e-14

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)

#: The three Pauli matrices in (x, y, z) order.
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


def hermitian_part(m: np.ndarray) -> np.ndarray:
    """Return (m + m^dagger)/2."""
    return (m + m.conj().T) / 2.0


def hermitian_deviation(m: np.ndarray) -> float:
    """Max-abs entry of (m - m^dagger)/2."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T)) / 2.0)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues sorted ascending, eigenvector columns in matching order."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        """eigenvectors . diag(eigenvalues) . eigenvectors^dagger."""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def eig_hermitian(m: np.ndarray) -> SpectralDecomposition:
    """Spectral decomposition of a Hermitian matrix.

    Raises NotHermitian when entries are non-finite or the anti-Hermitian
    part exceeds HERMITICITY_TOL.  Degenerate eigenvalues come back in
    ascending order with no ordering guarantee inside degenerate blocks;
    callers must not rely on the eigenvector choice there.
    """
    m = np.asarray(m, dtype=complex)
    if not np.all(np.isfinite(m)):
        raise NotHermitian("matrix has non-finite entries")
    dev = hermitian_deviation(m)
    if dev > HERMITICITY_TOL:
        raise NotHermitian(
            f"anti-Hermitian part {dev:.3e} exceeds {HERMITICITY_TOL:.0e}"
        )
    w, v = np.linalg.eigh(hermitian_part(m))
    return SpectralDecomposition(eigenvalues=w, eigenvectors=v)


def matrix_sqrt_psd(m: np.ndarray) -> np.ndarray:
    """Hermitian PSD square root via eigendecomposition.

    Eigenvalues in [-PSD_CLAMP, SQRT_NOISE_CLAMP) are clamped to zero
    before taking square roots; anything below -PSD_CLAMP raises
    NotPositiveSemidefinite.
    """
    dec = eig_hermitian(m)
    low = float(dec.eigenvalues[0])
    if low < -PSD_CLAMP:
        raise NotPositiveSemidefinite(
            f"eigenvalue {low:.3e} below -{PSD_CLAMP:.0e}"
        )
    w = np.where(dec.eigenvalues < SQRT_NOISE_CLAMP, 0.0, dec.eigenvalues)
    v = dec.eigenvectors
    return (v * np.sqrt(w)) @ v.conj().T


def partial_transpose_b(m: np.ndarray) -> np.ndarray:
    """Transpose the second-qubit index of a 4x4 matrix.

    entry[(a,b),(a',b')] -> entry[(a,b'),(a',b)].  Pure data movement,
    hence an exact involution.
    """
    m = np.asarray(m, dtype=complex)
    return m.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4).copy()


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with qubit A as the slow (left) index."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def validate_density_matrix(m: np.ndarray) -> np.ndarray:
    """Check that m is a valid two-qubit density matrix.

    Requires a 4x4 matrix, Hermitian within DENSITY_TOL, trace within
    DENSITY_TOL of 1 and eigenvalues >= -DENSITY_TOL.  Returns the input
    as a complex array; raises InvalidDensityMatrix naming the violated
    property otherwise.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise InvalidDensityMatrix(f"expected a 4x4 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidDensityMatrix("non-finite entries")
    dev = hermitian_deviation(m)
    if dev > DENSITY_TOL:
        raise InvalidDensityMatrix(f"not Hermitian: deviation {dev:.3e}")
    tr = complex(m.trace())
    if abs(tr - 1.0) > DENSITY_TOL:
        raise InvalidDensityMatrix(f"trace {tr:.12g} is not 1")
    low = float(np.linalg.eigvalsh(hermitian_part(m))[0])
    if low < -DENSITY_TOL:
        raise InvalidDensityMatrix(f"negative eigenvalue {low:.3e}")
    return m
