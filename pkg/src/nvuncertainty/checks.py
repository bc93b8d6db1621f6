"""Randomized invariant suite over seeded random states.

Backs the ``check`` CLI command. Each invariant is scored as an excess
(amount by which its tolerance is exceeded): nonpositive means satisfied.
States alternate between Ginibre mixed (even trial index) and Haar pure
(odd), with per-state seeds ``seed + index`` so failures are reproducible.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from . import entropic, entwit, qcore, states


@dataclass
class InvariantResult:
    name: str
    samples: int = 0
    max_excess: float = -np.inf
    worst_seed: int | None = None
    worst_fingerprint: str | None = None

    @property
    def passed(self) -> bool:
        return self.max_excess <= 0.0

    def record(self, excess: float, seed: int, fingerprint: str) -> None:
        self.samples += 1
        if excess > self.max_excess:
            self.max_excess = excess
            self.worst_seed = seed
            self.worst_fingerprint = fingerprint


def _fingerprint(rho: np.ndarray) -> str:
    return hashlib.sha256(np.ascontiguousarray(rho).tobytes()).hexdigest()[:12]


def _haar_unitary2(rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(g)
    return q @ np.diag(np.diagonal(r) / np.abs(np.diagonal(r)))


def run_invariant_checks(trials: int, seed: int) -> list[InvariantResult]:
    """Evaluate every invariant on ``trials`` random states."""
    if trials < 1:
        raise ValueError("trials must be at least 1")

    results = {
        name: InvariantResult(name)
        for name in (
            "uncertainty_ge_lower_bound",
            "closed_matches_generic",
            "estimate_ge_uncertainty",
            "memory_marginal_entropy_identity",
            "measured_conditional_entropy_bounds",
            "post_measurement_idempotent",
            "witness_soundness",
            "concurrence_local_unitary_invariance",
        )
    }

    for index in range(trials):
        state_seed = seed + index
        if index % 2 == 0:
            rho = states.random_mixed(state_seed)
        else:
            rho = states.random_pure(state_seed)
        fp = _fingerprint(rho)

        report = entropic.uncertainty_report(rho)
        form = qcore.bloch_decompose(rho)
        closed = entropic.uncertainty_closed(form)
        generic = entropic.uncertainty_generic(rho, entropic.PAULI_X, entropic.PAULI_Z)

        results["uncertainty_ge_lower_bound"].record(
            report.lower_bound - report.uncertainty - entropic.INEQ_SLACK, state_seed, fp)
        results["closed_matches_generic"].record(
            abs(closed - generic) - 1e-8, state_seed, fp)
        results["estimate_ge_uncertainty"].record(
            closed - report.measurement_estimate - entropic.INEQ_SLACK, state_seed, fp)

        b_norm = float(np.linalg.norm(form.local_b))
        marginal_entropy = entropic.von_neumann_entropy(qcore.partial_trace(rho, "B"))
        results["memory_marginal_entropy_identity"].record(
            abs(entropic.binary_entropy((1.0 - b_norm) / 2.0) - marginal_entropy) - 1e-10,
            state_seed, fp)

        cond = report.conditional_entropy
        excess = -np.inf
        for obs in (entropic.PAULI_X, entropic.PAULI_Z):
            measured = entropic.measured_conditional_entropy(rho, obs)
            excess = max(excess, -measured, cond - measured - entropic.INEQ_SLACK)
            pm = entropic.post_measurement_state(rho, obs)
            idem = np.abs(pm - entropic.post_measurement_state(pm, obs)).max()
            trace_dev = abs(pm.trace() - rho.trace())
            results["post_measurement_idempotent"].record(
                max(idem, trace_dev) - 1e-12, state_seed, fp)
        results["measured_conditional_entropy_bounds"].record(excess, state_seed, fp)

        verdict = entwit.witness(report)
        conc = entwit.concurrence(rho)
        if verdict.entangled_certified:
            results["witness_soundness"].record(1e-9 - conc, state_seed, fp)
        else:
            results["witness_soundness"].record(-1.0, state_seed, fp)

        rng = np.random.default_rng([state_seed, 1701])
        u = qcore.tensor(_haar_unitary2(rng), _haar_unitary2(rng))
        rotated = u @ rho @ qcore.dagger(u)
        results["concurrence_local_unitary_invariance"].record(
            abs(conc - entwit.concurrence(rotated)) - 1e-9, state_seed, fp)

    return list(results.values())
