import numpy as np
import pytest

from nvuncertainty.entropic import UncertaintyReport, binary_entropy, uncertainty_report
from nvuncertainty.entwit import WitnessVerdict, concurrence, witness, witness_threshold_q
from nvuncertainty.qcore import tensor
from nvuncertainty.states import random_mixed, random_pure, schmidt_state, werner_state

# Frozen references (20-digit evaluations of the closed forms).
U_WERNER_09 = 0.5727939142319123        # 2 H(0.05)
QSTAR = 0.7799442711232809              # root of 2 H((1-q)/2) = 1
C_AT_QSTAR = 0.6699164066849213         # (3 q* - 1)/2


def test_concurrence_schmidt_family():
    for chi in np.linspace(0, np.pi / 2, 41):
        assert abs(concurrence(schmidt_state(chi)) - np.sin(2 * chi)) < 1e-9


def test_concurrence_werner_family():
    for q in np.linspace(0, 1, 41):
        expected = max(0.0, (3 * q - 1) / 2)
        assert abs(concurrence(werner_state(q)) - expected) < 1e-9


def test_concurrence_product_states_vanish():
    rng = np.random.default_rng(5)
    for _ in range(20):
        a = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        b = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        a /= np.linalg.norm(a)
        b /= np.linalg.norm(b)
        rho = tensor(np.outer(a, a.conj()), np.outer(b, b.conj()))
        assert concurrence(rho) < 1e-9


def test_concurrence_local_unitary_invariance():
    def haar2(rng):
        g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        q, r = np.linalg.qr(g)
        return q @ np.diag(np.diagonal(r) / np.abs(np.diagonal(r)))

    for seed in range(1000):
        rho = random_mixed(seed) if seed % 2 == 0 else random_pure(seed)
        rng = np.random.default_rng(seed + 10_000)
        u = tensor(haar2(rng), haar2(rng))
        rotated = u @ rho @ u.conj().T
        assert abs(concurrence(rho) - concurrence(rotated)) < 1e-9


def test_witness_on_mixture_family():
    assert witness(uncertainty_report(werner_state(1.0))).entangled_certified
    assert not witness(uncertainty_report(werner_state(0.0))).entangled_certified
    rep = witness(uncertainty_report(werner_state(0.9)))
    assert rep.entangled_certified
    assert abs(rep.uncertainty - U_WERNER_09) < 1e-10


def test_witness_threshold_consistency():
    verdict = witness(uncertainty_report(werner_state(0.5)))
    assert verdict.threshold == 1.0
    assert not verdict.entangled_certified
    # incompleteness: entangled but not certified
    assert concurrence(werner_state(0.5)) == pytest.approx(0.25, abs=1e-9)


def test_witness_requires_unbiased_pair():
    biased = UncertaintyReport(uncertainty=0.5, lower_bound=0.0,
                               measurement_estimate=0.5, complementarity=0.8,
                               entropy_q_given_b=0.25, entropy_r_given_b=0.25,
                               conditional_entropy=0.0)
    with pytest.raises(ValueError):
        witness(biased)


def test_witness_verdict_consistency_enforced():
    with pytest.raises(ValueError):
        WitnessVerdict(uncertainty=2.0, threshold=1.0, entangled_certified=True)


def test_witness_threshold_q():
    qstar = witness_threshold_q()
    assert abs(2 * binary_entropy((1 - qstar) / 2) - 1.0) <= 1e-9
    assert abs(qstar - QSTAR) < 1e-8
    assert abs(concurrence(werner_state(qstar)) - C_AT_QSTAR) < 1e-8


def test_witness_sound_on_families():
    for chi in np.linspace(0, np.pi / 2, 51):
        rho = schmidt_state(chi)
        if witness(uncertainty_report(rho)).entangled_certified:
            assert concurrence(rho) > 0
    for q in np.linspace(0, 1, 51):
        rho = werner_state(q)
        if witness(uncertainty_report(rho)).entangled_certified:
            assert concurrence(rho) > 0


def test_witness_sound_on_random_states():
    for seed in range(500):
        rho = random_mixed(seed)
        if witness(uncertainty_report(rho)).entangled_certified:
            assert concurrence(rho) > 1e-9
