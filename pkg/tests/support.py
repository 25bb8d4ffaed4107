"""Shared random-state and reference-state builders for the tests."""

from __future__ import annotations

import numpy as np

from spinpair import ModelParams


def random_density_matrix(rng: np.random.Generator, rank: int = 4) -> np.ndarray:
    """Full-rank (or given-rank) random density matrix via a Ginibre factor."""
    g = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    m = g @ g.conj().T
    return m / float(np.trace(m).real)


def random_pure_state(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=4) + 1j * rng.normal(size=4)
    v = v / np.linalg.norm(v)
    return np.outer(v, v.conj())


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-ish unitary via QR with phase fixing."""
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_params(rng: np.random.Generator, gamma: float = 0.0) -> ModelParams:
    """Couplings and fields drawn uniformly from [-2, 2]."""
    return ModelParams(*rng.uniform(-2.0, 2.0, size=7), gamma)


def bell_state() -> np.ndarray:
    """Projector onto (|11> + |00>)/sqrt(2)."""
    v = np.zeros(4, dtype=complex)
    v[0] = v[3] = 1.0 / np.sqrt(2.0)
    return np.outer(v, v.conj())


def werner_state(p: float) -> np.ndarray:
    return p * bell_state() + (1.0 - p) * np.eye(4, dtype=complex) / 4.0


def product_state(rho_a: np.ndarray, rho_b: np.ndarray) -> np.ndarray:
    return np.kron(rho_a, rho_b)


def random_qubit_state(rng: np.random.Generator) -> np.ndarray:
    g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    m = g @ g.conj().T
    return m / float(np.trace(m).real)
