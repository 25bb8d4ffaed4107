"""Two-qubit Hamiltonian assembly and the reference initial state.

Units follow hbar = 1: couplings and fields are dimensionless energies,
time carries inverse-energy units, and the decoherence rate ``gamma``
carries time units so that gamma * gap^2 * t is a pure number.
"""

from __future__ import annotations

import math
from dataclasses import astuple, dataclass

import numpy as np

from .errors import NumericalDefect, ValidationError
from .linalg import (
    IDENTITY_2,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    SpectralDecomposition,
    eig_hermitian,
    hermitian_deviation,
    kron,
)

_XX = kron(SIGMA_X, SIGMA_X)
_YY = kron(SIGMA_Y, SIGMA_Y)
_ZZ = kron(SIGMA_Z, SIGMA_Z)
# Antisymmetric spin-orbit pairs, cyclic rule x -> y -> z -> x.
_C_X = kron(SIGMA_Y, SIGMA_Z) - kron(SIGMA_Z, SIGMA_Y)
_C_Y = kron(SIGMA_Z, SIGMA_X) - kron(SIGMA_X, SIGMA_Z)
_X_ON_A = kron(SIGMA_X, IDENTITY_2)
_X_ON_B = kron(IDENTITY_2, SIGMA_X)

_RECONSTRUCTION_TOL = 1e-10


@dataclass(frozen=True)
class ModelParams:
    """Scalar couplings of the two-qubit model.

    j_x, j_y, j_z : XYZ exchange couplings.
    d_x, d_y      : antisymmetric spin-orbit couplings along x and y.
    b_uniform     : mean x-direction field applied to both qubits.
    b_inhomog     : antisymmetric field offset (+ on qubit A, - on B).
    gamma         : intrinsic-decoherence rate, >= 0.
    """

    j_x: float = 0.0
    j_y: float = 0.0
    j_z: float = 0.0
    d_x: float = 0.0
    d_y: float = 0.0
    b_uniform: float = 0.0
    b_inhomog: float = 0.0
    gamma: float = 0.0

    def __post_init__(self) -> None:
        for name, value in zip(PARAM_FIELDS, astuple(self)):
            if not math.isfinite(value):
                raise ValidationError(f"{name} must be finite, got {value!r}")
        if self.gamma < 0.0:
            raise ValidationError(f"gamma must be >= 0, got {self.gamma!r}")


PARAM_FIELDS = (
    "j_x",
    "j_y",
    "j_z",
    "d_x",
    "d_y",
    "b_uniform",
    "b_inhomog",
    "gamma",
)


@dataclass(frozen=True)
class Hamiltonian:
    """4x4 Hermitian matrix together with its spectral decomposition."""

    matrix: np.ndarray
    spectrum: SpectralDecomposition

    def __post_init__(self) -> None:
        dev = hermitian_deviation(self.matrix)
        if dev > _RECONSTRUCTION_TOL:
            raise NumericalDefect(f"Hamiltonian not Hermitian: {dev:.3e}")
        residual = float(np.max(np.abs(self.spectrum.reconstruct() - self.matrix)))
        if residual > _RECONSTRUCTION_TOL:
            raise NumericalDefect(f"spectrum does not reconstruct: {residual:.3e}")


def build_hamiltonian(p: ModelParams) -> Hamiltonian:
    """Assemble the exchange + spin-orbit + x-field Hamiltonian.

    H = sum_a J_a sigma_A^a sigma_B^a
        + D_x (sigma_A^y sigma_B^z - sigma_A^z sigma_B^y)
        + D_y (sigma_A^z sigma_B^x - sigma_A^x sigma_B^z)
        + (B + b) sigma_A^x + (B - b) sigma_B^x

    in the fixed {|11>, |10>, |01>, |00>} basis; traceless and Hermitian
    for all finite parameters.
    """
    h = (
        p.j_x * _XX
        + p.j_y * _YY
        + p.j_z * _ZZ
        + p.d_x * _C_X
        + p.d_y * _C_Y
        + (p.b_uniform + p.b_inhomog) * _X_ON_A
        + (p.b_uniform - p.b_inhomog) * _X_ON_B
    )
    return Hamiltonian(matrix=h, spectrum=eig_hermitian(h))


def initial_state() -> np.ndarray:
    """Density matrix of the uncorrelated upper-upper state |11><11|."""
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = 1.0
    return m
