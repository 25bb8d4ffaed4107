"""Density-matrix propagation under energy-eigenbasis dephasing.

The master equation

    dM/dt = -i [H, M] - (gamma/2) [H, [H, M]]

has a closed-form solution: in the H eigenbasis each entry evolves as

    M_mn(t) = M_mn(0) * exp(-i (V_m - V_n) t)
                      * exp(-(gamma/2) (V_m - V_n)^2 t),

so coherences between non-degenerate eigenstates dephase while
populations stay fixed.  ``evolve`` evaluates this per element and
rotates back to the product basis; ``rk4_oracle`` integrates the master
equation directly with classical RK4 and exists only to cross-check the
closed form, never on the hot path.

When all gaps are nonzero the long-time limit is the eigenbasis-diagonal
pinch of M(0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericalDefect, ValidationError
from .linalg import hermitian_deviation, validate_density_matrix
from .model import Hamiltonian


@dataclass(frozen=True)
class TimeGrid:
    """Closed uniform time grid with at least two samples."""

    t_start: float
    t_end: float
    samples: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.t_start) and self.t_start >= 0.0):
            raise ValidationError(f"t_start must be finite and >= 0, got {self.t_start!r}")
        if not (math.isfinite(self.t_end) and self.t_end > self.t_start):
            raise ValidationError(f"t_end must exceed t_start, got {self.t_end!r}")
        if not isinstance(self.samples, (int, np.integer)) or self.samples < 2:
            raise ValidationError(f"samples must be an integer >= 2, got {self.samples!r}")

    @property
    def spacing(self) -> float:
        return (self.t_end - self.t_start) / (self.samples - 1)

    @property
    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.samples)


@dataclass(frozen=True)
class Propagator:
    """Frozen ingredients of the closed-form solution.

    ``initial_in_eigenbasis`` holds <V_m| M(0) |V_n>.  Immutable after
    construction; `evolve` is pure, so different times may be evaluated
    concurrently on a shared Propagator without synchronization.
    """

    hamiltonian: Hamiltonian
    gamma: float
    initial_in_eigenbasis: np.ndarray

    def __post_init__(self) -> None:
        rho = self.initial_in_eigenbasis
        dev = hermitian_deviation(rho)
        tr_err = abs(complex(rho.trace()) - 1.0)
        if dev > 1e-10 or tr_err > 1e-10:
            raise NumericalDefect(
                f"eigenbasis state defect: hermiticity {dev:.3e}, trace error {tr_err:.3e}"
            )


def make_propagator(h: Hamiltonian, gamma: float, m0: np.ndarray) -> Propagator:
    """Rotate a valid initial density matrix into the H eigenbasis."""
    if not (math.isfinite(gamma) and gamma >= 0.0):
        raise ValidationError(f"gamma must be finite and >= 0, got {gamma!r}")
    m0 = validate_density_matrix(m0)
    vecs = h.spectrum.eigenvectors
    rho0 = vecs.conj().T @ m0 @ vecs
    return Propagator(hamiltonian=h, gamma=gamma, initial_in_eigenbasis=rho0)


def evolve(p: Propagator, t: float) -> np.ndarray:
    """Density matrix after evolving for time t >= 0.

    Exact for the dephasing master equation; at t = 0 both exponential
    factors are 1 and M(0) comes back to round-off.
    """
    t = float(t)
    if not (math.isfinite(t) and t >= 0.0):
        raise ValidationError(f"t must be finite and >= 0, got {t!r}")
    v = p.hamiltonian.spectrum.eigenvalues
    gaps = v[:, None] - v[None, :]
    # Zero gap gives exactly exp(0) = 1, so no degeneracy threshold is needed.
    factors = np.exp(gaps * (-1j * t) - np.square(gaps) * (0.5 * p.gamma * t))
    vecs = p.hamiltonian.spectrum.eigenvectors
    return vecs @ (factors * p.initial_in_eigenbasis) @ vecs.conj().T


def evolve_series(p: Propagator, grid: TimeGrid) -> list[tuple[float, np.ndarray]]:
    """Closed-form states at every grid point; identical to pointwise evolve."""
    return [(float(t), evolve(p, float(t))) for t in grid.times]


def rk4_oracle(
    h: Hamiltonian,
    gamma: float,
    m0: np.ndarray,
    grid: TimeGrid,
    substeps: int = 1,
) -> list[tuple[float, np.ndarray]]:
    """Integrate the master equation directly with classical RK4.

    The state is m0 at grid.t_start and each grid interval is subdivided
    into ``substeps`` RK4 steps.  Validation-only: O(step^4) accurate and
    much slower than `evolve`.
    """
    if not isinstance(substeps, (int, np.integer)) or substeps < 1:
        raise ValidationError(f"substeps must be an integer >= 1, got {substeps!r}")
    if not (math.isfinite(gamma) and gamma >= 0.0):
        raise ValidationError(f"gamma must be finite and >= 0, got {gamma!r}")
    state = np.array(validate_density_matrix(m0))
    hm = h.matrix

    def deriv(m: np.ndarray) -> np.ndarray:
        comm = hm @ m - m @ hm
        out = -1j * comm
        if gamma != 0.0:
            out -= (0.5 * gamma) * (hm @ comm - comm @ hm)
        return out

    times = grid.times
    trajectory = [(float(times[0]), state.copy())]
    for k in range(grid.samples - 1):
        dt = (float(times[k + 1]) - float(times[k])) / substeps
        for _ in range(substeps):
            k1 = deriv(state)
            k2 = deriv(state + (0.5 * dt) * k1)
            k3 = deriv(state + (0.5 * dt) * k2)
            k4 = deriv(state + dt * k3)
            state = state + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        trajectory.append((float(times[k + 1]), state.copy()))
    return trajectory
