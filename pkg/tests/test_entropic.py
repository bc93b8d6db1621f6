import math

import numpy as np
import pytest

from nvuncertainty.entropic import (
    PAULI_X,
    PAULI_Z,
    PauliObservable,
    UncertaintyReport,
    binary_entropy,
    complementarity,
    conditional_entropy,
    lower_bound,
    lower_bound_generic,
    measured_conditional_entropy,
    measurement_estimate,
    post_measurement_state,
    uncertainty_closed,
    uncertainty_generic,
    uncertainty_report,
    von_neumann_entropy,
)
from nvuncertainty.qcore import BlochForm, ID2, bloch_decompose, partial_trace, tensor
from nvuncertainty.states import random_mixed, random_pure, schmidt_state, werner_state

BELL = schmidt_state(np.pi / 4)

# Frozen reference values, each evaluated independently to 20 digits.
H_QUARTER = 0.8112781244591328          # -1/4 log2(1/4) - 3/4 log2(3/4)
S_WERNER_HALF = 1.5487949406953985      # entropy of {0.625, 0.125 x3}
U_SCHMIDT_PI8 = 0.3991239633071439      # 1 - H(sin^2(pi/8))
ME_SCHMIDT_PI8 = 0.6008760366928561     # H((1 - sin(pi/4))/2)
U_WERNER_HALF = 1.6225562489182657      # 2 H(1/4)
COS2_PI8 = 0.8535533905932737


def test_binary_entropy_reference_points():
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    # cross-check against the Shannon entropy of (1/4, 3/4)
    shannon = -(0.25 * math.log2(0.25) + 0.75 * math.log2(0.75))
    assert abs(binary_entropy(0.25) - shannon) < 1e-15
    assert abs(binary_entropy(0.25) - H_QUARTER) < 1e-15


def test_binary_entropy_symmetry_and_domain():
    for p in np.linspace(0, 1, 33):
        assert abs(binary_entropy(p) - binary_entropy(1 - p)) < 1e-14
    assert binary_entropy(-1e-13) == 0.0
    assert binary_entropy(1 + 1e-13) == 0.0
    for p in (-0.01, 1.01):
        with pytest.raises(ValueError):
            binary_entropy(p)


def test_von_neumann_entropy_reference_points():
    assert von_neumann_entropy(BELL) == 0.0
    assert abs(von_neumann_entropy(np.eye(4) / 4) - 2.0) < 1e-14
    assert abs(von_neumann_entropy(werner_state(0.5)) - S_WERNER_HALF) < 1e-12
    # agrees with a direct sum over the known spectrum
    direct = -(0.625 * math.log2(0.625) + 3 * 0.125 * math.log2(0.125))
    assert abs(von_neumann_entropy(werner_state(0.5)) - direct) < 1e-12


def test_von_neumann_entropy_rejects_invalid():
    with pytest.raises(ValueError):
        von_neumann_entropy(np.eye(4))  # trace 4
    with pytest.raises(ValueError):
        von_neumann_entropy(np.diag([1.5, -0.5, 0.0, 0.0]))


def test_post_measurement_state_examples():
    diagonal = np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex)
    assert np.allclose(post_measurement_state(diagonal, PAULI_Z), diagonal, atol=1e-14)
    assert np.allclose(post_measurement_state(BELL, PAULI_Z),
                       np.diag([0.5, 0, 0, 0.5]), atol=1e-14)
    assert np.allclose(post_measurement_state(np.eye(4) / 4, PAULI_X),
                       np.eye(4) / 4, atol=1e-14)


def test_post_measurement_state_idempotent_and_keeps_marginal():
    for seed in range(50):
        rho = random_mixed(seed)
        for obs in (PAULI_X, PAULI_Z):
            pm = post_measurement_state(rho, obs)
            again = post_measurement_state(pm, obs)
            assert np.abs(pm - again).max() < 1e-12
            assert abs(np.trace(pm) - 1.0) < 1e-12
            assert np.abs(partial_trace(pm, "B") - partial_trace(rho, "B")).max() < 1e-12


def test_conditional_entropy_examples():
    rho_a = np.array([[0.8, 0.1], [0.1, 0.2]], dtype=complex)
    rho_b = np.array([[0.6, 0.0], [0.0, 0.4]], dtype=complex)
    product = tensor(rho_a, rho_b)
    s_a = von_neumann_entropy(rho_a)
    assert abs(conditional_entropy(product) - s_a) < 1e-12
    assert abs(conditional_entropy(BELL) - (-1.0)) < 1e-12
    assert abs(conditional_entropy(werner_state(0.5)) - (S_WERNER_HALF - 1.0)) < 1e-12


def test_measured_conditional_entropy_examples():
    assert abs(measured_conditional_entropy(BELL, PAULI_Z)) < 1e-12
    # measuring sigma_1 on |0 down> leaves 1/2 x |down><down|
    ket = np.zeros(4, dtype=complex)
    ket[0] = 1.0
    pure = np.outer(ket, ket)
    expected_post = tensor(ID2 / 2, np.diag([1.0, 0.0]))
    assert np.allclose(post_measurement_state(pure, PAULI_X), expected_post, atol=1e-14)
    assert abs(measured_conditional_entropy(pure, PAULI_X) - 1.0) < 1e-12
    assert abs(measured_conditional_entropy(np.eye(4) / 4, PAULI_X) - 1.0) < 1e-12
    assert abs(measured_conditional_entropy(np.eye(4) / 4, PAULI_Z) - 1.0) < 1e-12


def test_measured_conditional_entropy_bounds():
    for seed in range(100):
        rho = random_mixed(seed) if seed % 2 == 0 else random_pure(seed)
        cond = conditional_entropy(rho)
        for obs in (PAULI_X, PAULI_Z):
            measured = measured_conditional_entropy(rho, obs)
            assert measured >= -1e-12
            assert measured >= cond - 1e-9


def test_uncertainty_generic_examples():
    assert abs(uncertainty_generic(BELL, PAULI_X, PAULI_Z)) < 1e-12
    assert abs(uncertainty_generic(np.eye(4) / 4, PAULI_X, PAULI_Z) - 2.0) < 1e-12
    value = uncertainty_generic(schmidt_state(np.pi / 8), PAULI_X, PAULI_Z)
    assert abs(value - U_SCHMIDT_PI8) < 1e-10
    assert abs(value - (1.0 - binary_entropy(np.sin(np.pi / 8) ** 2))) < 1e-10


def test_uncertainty_closed_schmidt_family():
    for chi in np.linspace(0, np.pi / 2, 41):
        closed = uncertainty_closed(bloch_decompose(schmidt_state(chi)))
        assert abs(closed - (1.0 - binary_entropy(np.sin(chi) ** 2))) < 1e-10


def test_uncertainty_closed_werner_family():
    for q in np.linspace(0, 1, 41):
        closed = uncertainty_closed(bloch_decompose(werner_state(q)))
        assert abs(closed - 2.0 * binary_entropy((1.0 - q) / 2.0)) < 1e-10


def test_uncertainty_closed_matches_generic_on_random_states():
    for seed in range(500):
        rho = random_mixed(seed) if seed % 2 == 0 else random_pure(seed)
        closed = uncertainty_closed(bloch_decompose(rho))
        generic = uncertainty_generic(rho, PAULI_X, PAULI_Z)
        assert abs(closed - generic) < 1e-8


def test_uncertainty_closed_rejects_inconsistent_bloch_data():
    # entries are individually in range but describe no physical state
    bad = BlochForm(np.zeros(3), np.array([1.0, 0.0, 0.0]),
                    np.diag([1.0, 0.0, 0.0]))
    with pytest.raises(ValueError):
        uncertainty_closed(bad)


def test_complementarity_values():
    assert complementarity(PAULI_X, PAULI_Z) == 0.5
    assert complementarity(PAULI_Z, PAULI_Z) == 1.0
    diag = PauliObservable(np.array([1.0, 0.0, 1.0]) / np.sqrt(2))
    assert abs(complementarity(PAULI_Z, diag) - COS2_PI8) < 1e-12


def test_complementarity_matches_eigenvector_overlap():
    rng = np.random.default_rng(11)
    for _ in range(25):
        axis_q = rng.standard_normal(3)
        axis_r = rng.standard_normal(3)
        q = PauliObservable(axis_q / np.linalg.norm(axis_q))
        r = PauliObservable(axis_r / np.linalg.norm(axis_r))
        _, vq = np.linalg.eigh(q.operator())
        _, vr = np.linalg.eigh(r.operator())
        overlap = max(abs(np.vdot(vq[:, i], vr[:, j])) ** 2
                      for i in range(2) for j in range(2))
        assert abs(complementarity(q, r) - overlap) < 1e-12


def test_lower_bound_examples():
    for chi in np.linspace(0, np.pi / 2, 21):
        expected = 1.0 - binary_entropy(np.sin(chi) ** 2)
        assert abs(lower_bound(schmidt_state(chi)) - expected) < 1e-10
    for q in np.linspace(0, 1, 21):
        expected = binary_entropy((1 + 3 * q) / 4) + (3 * (1 - q) / 4) * math.log2(3)
        assert abs(lower_bound(werner_state(q)) - expected) < 1e-10
    assert abs(lower_bound(np.eye(4) / 4) - 2.0) < 1e-12


def test_lower_bound_generic_examples():
    assert abs(lower_bound_generic(BELL, PAULI_X, PAULI_Z)) < 1e-12
    product = schmidt_state(0.0)
    assert abs(lower_bound_generic(product, PAULI_X, PAULI_Z) - 1.0) < 1e-12
    assert abs(lower_bound_generic(werner_state(0.5), PAULI_X, PAULI_Z)
               - S_WERNER_HALF) < 1e-12


def test_lower_bound_agrees_with_generic_for_qubit_memory():
    for seed in range(200):
        rho = random_mixed(seed)
        assert abs(lower_bound(rho) - lower_bound_generic(rho, PAULI_X, PAULI_Z)) < 1e-10


def test_measurement_estimate_examples():
    for chi in np.linspace(0, np.pi / 2, 21):
        value = measurement_estimate(bloch_decompose(schmidt_state(chi)))
        assert abs(value - binary_entropy((1 - np.sin(2 * chi)) / 2)) < 1e-12
    for q in np.linspace(0, 1, 21):
        value = measurement_estimate(bloch_decompose(werner_state(q)))
        assert abs(value - 2 * binary_entropy((1 - q) / 2)) < 1e-12
    assert measurement_estimate(bloch_decompose(BELL)) == 0.0


def test_uncertainty_report_reference_states():
    rep = uncertainty_report(BELL)
    assert abs(rep.uncertainty) < 1e-9
    assert abs(rep.lower_bound) < 1e-9
    assert abs(rep.measurement_estimate) < 1e-9
    assert rep.complementarity == 0.5
    assert abs(rep.conditional_entropy - (-1.0)) < 1e-12

    rep = uncertainty_report(np.eye(4) / 4)
    assert abs(rep.uncertainty - 2.0) < 1e-12
    assert abs(rep.lower_bound - 2.0) < 1e-12
    assert abs(rep.measurement_estimate - 2.0) < 1e-12

    rep = uncertainty_report(schmidt_state(np.pi / 8))
    assert abs(rep.uncertainty - U_SCHMIDT_PI8) < 1e-10
    assert abs(rep.lower_bound - U_SCHMIDT_PI8) < 1e-10
    assert abs(rep.measurement_estimate - ME_SCHMIDT_PI8) < 1e-10
    assert rep.measurement_estimate > rep.uncertainty


def test_uncertainty_report_invariants_on_random_states():
    for seed in range(300):
        rho = random_mixed(seed) if seed % 2 == 0 else random_pure(seed)
        rep = uncertainty_report(rho)
        assert abs(rep.uncertainty - rep.entropy_q_given_b - rep.entropy_r_given_b) < 1e-12
        assert rep.uncertainty >= rep.lower_bound - 1e-9
        assert rep.measurement_estimate >= rep.uncertainty - 1e-9


def test_uncertainty_report_rejects_inconsistent_fields():
    with pytest.raises(ValueError):
        UncertaintyReport(uncertainty=1.0, lower_bound=0.0, measurement_estimate=1.0,
                          complementarity=0.5, entropy_q_given_b=0.2,
                          entropy_r_given_b=0.2, conditional_entropy=0.0)
    with pytest.raises(ValueError):
        UncertaintyReport(uncertainty=0.4, lower_bound=1.0, measurement_estimate=0.4,
                          complementarity=0.5, entropy_q_given_b=0.2,
                          entropy_r_given_b=0.2, conditional_entropy=0.0)
    with pytest.raises(ValueError):
        UncertaintyReport(uncertainty=0.4, lower_bound=0.0, measurement_estimate=0.1,
                          complementarity=0.5, entropy_q_given_b=0.2,
                          entropy_r_given_b=0.2, conditional_entropy=0.0)


def test_pauli_observable_validation():
    with pytest.raises(ValueError):
        PauliObservable(np.array([1.0, 1.0, 0.0]))
    with pytest.raises(ValueError):
        PauliObservable(np.array([1.0, 0.0]))
