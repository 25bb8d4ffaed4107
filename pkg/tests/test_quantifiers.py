import math

import numpy as np
import pytest

from spinpair import (
    IDENTITY_2,
    PAULIS,
    CorrelationSample,
    InvalidDensityMatrix,
    LocalSide,
    ValidationError,
    initial_state,
    log_negativity,
    lqfi,
    lqu,
    partial_transpose_b,
    purity,
    sample,
)
from support import (
    bell_state,
    product_state,
    random_density_matrix,
    random_pure_state,
    random_qubit_state,
    random_unitary,
    werner_state,
)

MAXIMALLY_MIXED = np.eye(4, dtype=complex) / 4.0

# Independently derived reference values for the p = 1/2 isotropic
# Bell/identity mixture: the Fisher value from the closed form
# 1 - (1-p)(1+2p)/(1+p), the negativity mass from the (3p-1)/4 negative
# partial-transpose eigenvalue (both confirmed by the brute-force paths
# below before being frozen here).
WERNER_HALF_LQFI = 1.0 / 3.0
WERNER_HALF_LN = math.log2(1.25)


def observables(side):
    if side is LocalSide.QUBIT_A:
        return [np.kron(s, np.eye(2)) for s in PAULIS]
    return [np.kron(np.eye(2), s) for s in PAULIS]


def lqfi_bruteforce(m, side):
    """Element-by-element reference path: eigensolve once, accumulate the
    3x3 matrix from explicit 4x4 products."""
    w, v = np.linalg.eigh(m)
    obs = observables(side)
    r = np.zeros((3, 3), dtype=complex)
    for i in range(3):
        for j in range(3):
            acc = 0.0j
            for a in range(4):
                for b in range(4):
                    denom = w[a] + w[b]
                    if denom <= 1e-12:
                        continue
                    xi_i = v[:, a].conj() @ obs[i] @ v[:, b]
                    xi_j = v[:, b].conj() @ obs[j] @ v[:, a]
                    acc += (2.0 * w[a] * w[b] / denom) * xi_i * xi_j
            r[i, j] = acc
    top = float(np.linalg.eigvalsh((r + r.conj().T).real / 2.0)[-1])
    return 1.0 - top


def negativity_mass(m, transpose_side):
    """Absolute sum of negative partial-transpose eigenvalues."""
    if transpose_side is LocalSide.QUBIT_B:
        pt = partial_transpose_b(m)
    else:
        # first-qubit transpose, written out directly
        pt = m.reshape(2, 2, 2, 2).transpose(2, 1, 0, 3).reshape(4, 4)
    w = np.linalg.eigvalsh((pt + pt.conj().T) / 2.0)
    return float(-np.sum(w[w < -1e-12]))


# ---------------------------------------------------------------------------
# lqfi


@pytest.mark.parametrize("side", list(LocalSide))
def test_lqfi_vanishes_on_uncorrelated_pure_state(side):
    assert lqfi(initial_state(), side) == 0.0


@pytest.mark.parametrize("side", list(LocalSide))
def test_lqfi_maximal_on_bell_state(side):
    assert lqfi(bell_state(), side) == pytest.approx(1.0, abs=1e-12)


def test_lqfi_agrees_with_bruteforce_on_werner_mixture():
    m = werner_state(0.5)
    for side in LocalSide:
        fast = lqfi(m, side)
        assert abs(fast - lqfi_bruteforce(m, side)) <= 1e-9
        assert fast == pytest.approx(WERNER_HALF_LQFI, abs=1e-12)


def test_lqfi_agrees_with_bruteforce_on_random_states():
    rng = np.random.default_rng(41)
    for _ in range(25):
        m = random_density_matrix(rng, rank=int(rng.integers(1, 5)))
        for side in LocalSide:
            assert abs(lqfi(m, side) - lqfi_bruteforce(m, side)) <= 1e-9


def test_lqfi_rejects_invalid_state():
    with pytest.raises(InvalidDensityMatrix):
        lqfi(np.eye(4, dtype=complex))


# ---------------------------------------------------------------------------
# lqu


@pytest.mark.parametrize("side", list(LocalSide))
def test_lqu_vanishes_on_uncorrelated_pure_state(side):
    assert lqu(initial_state(), side) == 0.0


@pytest.mark.parametrize("side", list(LocalSide))
def test_lqu_maximal_on_bell_state(side):
    assert lqu(bell_state(), side) == pytest.approx(1.0, abs=1e-12)


def test_lqu_vanishes_on_maximally_mixed():
    # Hand evaluation: sqrt(M) = I/2, so the overlap matrix is
    # Tr{(I/2) s_i (I/2) s_j} = delta_ij and the largest eigenvalue is 1.
    assert lqu(MAXIMALLY_MIXED) <= 1e-9


def test_lqu_rejects_invalid_state():
    with pytest.raises(InvalidDensityMatrix):
        lqu(np.diag([2.0, -1.0, 0.0, 0.0]).astype(complex))


# ---------------------------------------------------------------------------
# log_negativity


def test_ln_zero_exactly_on_explicit_product_states():
    rng = np.random.default_rng(42)
    for _ in range(25):
        m = product_state(random_qubit_state(rng), random_qubit_state(rng))
        assert log_negativity(m) == 0.0


def test_ln_maximal_on_bell_state():
    assert log_negativity(bell_state()) == pytest.approx(1.0, abs=1e-12)


def test_ln_matches_pt_spectrum_on_werner_mixture():
    m = werner_state(0.5)
    mu = negativity_mass(m, LocalSide.QUBIT_B)
    assert mu == pytest.approx(1.0 / 8.0, abs=1e-12)
    assert log_negativity(m) == pytest.approx(math.log2(1.0 + 2.0 * mu), abs=1e-12)
    assert log_negativity(m) == pytest.approx(WERNER_HALF_LN, abs=1e-12)


def test_ln_rejects_invalid_state():
    with pytest.raises(InvalidDensityMatrix):
        log_negativity(np.zeros((4, 4), dtype=complex))


# ---------------------------------------------------------------------------
# purity / sample


def test_purity_reference_points():
    assert purity(initial_state()) == 1.0
    assert purity(MAXIMALLY_MIXED) == pytest.approx(0.25, abs=1e-15)
    half_half = np.diag([0.5, 0.5, 0.0, 0.0]).astype(complex)
    assert purity(half_half) == pytest.approx(0.5, abs=1e-15)


def test_sample_reference_points():
    s = sample(initial_state(), 0.0)
    assert (s.lqfi, s.lqu, s.log_negativity, s.purity) == (0.0, 0.0, 0.0, 1.0)
    s = sample(bell_state(), 1.0)
    assert min(s.lqfi, s.lqu, s.log_negativity, s.purity) >= 1.0 - 1e-9
    s = sample(MAXIMALLY_MIXED, 2.0)
    assert max(s.lqfi, s.lqu, s.log_negativity) <= 1e-9
    assert s.purity == pytest.approx(0.25, abs=1e-12)


def test_sample_rejects_bad_ranges():
    with pytest.raises(ValidationError):
        CorrelationSample(t=0.0, lqfi=1.5, lqu=0.0, log_negativity=0.0, purity=1.0)
    with pytest.raises(ValidationError):
        CorrelationSample(t=-1.0, lqfi=0.0, lqu=0.0, log_negativity=0.0, purity=1.0)
    with pytest.raises(ValidationError):
        CorrelationSample(t=0.0, lqfi=0.0, lqu=0.0, log_negativity=0.0, purity=0.1)


# ---------------------------------------------------------------------------
# cross-quantifier properties


def test_local_unitary_invariance():
    rng = np.random.default_rng(43)
    for _ in range(40):
        m = random_density_matrix(rng)
        u = np.kron(random_unitary(rng, 2), random_unitary(rng, 2))
        rotated = u @ m @ u.conj().T
        for side in LocalSide:
            assert abs(lqfi(rotated, side) - lqfi(m, side)) <= 1e-8
            assert abs(lqu(rotated, side) - lqu(m, side)) <= 1e-8
        assert abs(log_negativity(rotated) - log_negativity(m)) <= 1e-8
        assert abs(purity(rotated) - purity(m)) <= 1e-10


def test_pure_states_fisher_equals_uncertainty():
    rng = np.random.default_rng(44)
    for _ in range(40):
        m = random_pure_state(rng)
        for side in LocalSide:
            assert abs(lqfi(m, side) - lqu(m, side)) <= 1e-8


def test_uncertainty_bounded_by_fisher_on_same_side():
    rng = np.random.default_rng(45)
    for _ in range(200):
        m = random_density_matrix(rng, rank=int(rng.integers(1, 5)))
        for side in LocalSide:
            assert lqu(m, side) <= lqfi(m, side) + 1e-8


def test_quantifiers_are_continuous_in_the_state():
    rng = np.random.default_rng(46)
    for _ in range(20):
        m = random_density_matrix(rng)  # full rank, away from clamp edges
        g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        h = g + g.conj().T
        h -= np.trace(h) * np.eye(4) / 4.0
        delta = 1e-8 * h / np.max(np.abs(h))
        perturbed = m + delta
        assert abs(lqfi(perturbed) - lqfi(m)) <= 1e-5
        assert abs(lqu(perturbed) - lqu(m)) <= 1e-5
        assert abs(log_negativity(perturbed) - log_negativity(m)) <= 1e-5


def test_negativity_mass_is_side_symmetric():
    rng = np.random.default_rng(47)
    for _ in range(100):
        m = random_density_matrix(rng, rank=int(rng.integers(1, 5)))
        mu_b = negativity_mass(m, LocalSide.QUBIT_B)
        mu_a = negativity_mass(m, LocalSide.QUBIT_A)
        assert abs(mu_a - mu_b) <= 1e-10
