"""Entropies and the memory-assisted uncertainty quantities.

For a joint state of measured particle A (electron) and quantum memory B
(nucleus), and a projective observable L on A, the relevant inequality is

    S(Q|B) + S(R|B) >= log2(1/c) + S(A|B)

where S(L|B) is the conditional entropy of the post-measurement state and
c is the complementarity of the observable pair. Entropies are in bits.

Two routes to the left-hand side are provided: a generic eigensolver path
(:func:`uncertainty_generic`) valid for any observable pair, and a closed
form (:func:`uncertainty_closed`) specific to the sigma_1/sigma_3 pair used
throughout, written in terms of the Bloch data of the state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qcore import (
    ATOL_ALGEBRA,
    ATOL_VALID,
    BlochForm,
    ID2,
    PAULIS,
    bloch_decompose,
    dagger,
    hermitian_eigenvalues,
    partial_trace,
    tensor,
)

# Eigenvalues below this are treated as exact zeros inside entropy sums.
ENTROPY_CLIP = 1e-12

# Slack granted to inequalities that hold exactly in infinite precision.
INEQ_SLACK = 1e-9


@dataclass(frozen=True)
class PauliObservable:
    """Spin-1/2 observable axis . sigma for a unit Bloch axis."""

    axis: np.ndarray

    def __post_init__(self) -> None:
        axis = np.asarray(self.axis, dtype=float)
        if axis.shape != (3,):
            raise ValueError("axis must have shape (3,)")
        if abs(np.linalg.norm(axis) - 1.0) > ATOL_ALGEBRA:
            raise ValueError("axis must be a unit vector")
        object.__setattr__(self, "axis", axis)

    def operator(self) -> np.ndarray:
        """The 2x2 matrix axis . sigma."""
        return sum(self.axis[i] * PAULIS[i] for i in range(3))

    def projectors(self) -> tuple[np.ndarray, np.ndarray]:
        """Eigenprojectors (1 +/- axis . sigma)/2 for outcomes +1 and -1."""
        op = self.operator()
        return (ID2 + op) / 2.0, (ID2 - op) / 2.0


PAULI_X = PauliObservable(np.array([1.0, 0.0, 0.0]))
PAULI_Z = PauliObservable(np.array([0.0, 0.0, 1.0]))


def _shannon_bits(probs: np.ndarray) -> float:
    """Shannon entropy of a probability vector, zeros clipped below 1e-12."""
    p = np.asarray(probs, dtype=float)
    p = p[p > ENTROPY_CLIP]
    if p.size == 0:
        return 0.0
    return float(-(p * np.log2(p)).sum()) + 0.0


def binary_entropy(p: float) -> float:
    """H(p) = -p log2 p - (1-p) log2(1-p), with 0 log 0 := 0."""
    p = float(p)
    if not -ATOL_ALGEBRA <= p <= 1.0 + ATOL_ALGEBRA:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    p = min(max(p, 0.0), 1.0)
    return _shannon_bits(np.array([p, 1.0 - p]))


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Entropy -sum lambda_i log2 lambda_i of a density matrix, in bits.

    Accepts the 4x4 joint state or a 2x2 reduction. Eigenvalues must be no
    smaller than -1e-10 and sum to 1 within 1e-10; small negatives are
    clipped to zero before the log.
    """
    vals = hermitian_eigenvalues(rho)
    if vals.min() < -ATOL_VALID or abs(vals.sum() - 1.0) > ATOL_VALID:
        raise ValueError("matrix is not a valid state (trace or positivity)")
    return _shannon_bits(vals)


def post_measurement_state(rho: np.ndarray, observable: PauliObservable) -> np.ndarray:
    """State after an unrecorded projective measurement of ``observable`` on A.

    rho -> sum_m (P_m x 1) rho (P_m x 1) over the eigenprojectors P_m:
    coherences between the observable's eigenspaces on A are removed, the B
    marginal is untouched, and the map is idempotent.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    out = np.zeros_like(rho)
    for p in observable.projectors():
        pj = tensor(p, ID2)
        out += pj @ rho @ pj
    return out


def conditional_entropy(rho: np.ndarray) -> float:
    """S(A|B) = S(rho_AB) - S(rho_B); negative only for entangled states."""
    return von_neumann_entropy(rho) - von_neumann_entropy(partial_trace(rho, "B"))


def measured_conditional_entropy(rho: np.ndarray, observable: PauliObservable) -> float:
    """S(L|B): conditional entropy after measuring ``observable`` on A.

    Always nonnegative, and never below S(A|B) of the input state.
    """
    return conditional_entropy(post_measurement_state(rho, observable))


def uncertainty_generic(rho: np.ndarray, q: PauliObservable, r: PauliObservable) -> float:
    """S(Q|B) + S(R|B) via post-measurement states and the eigensolver.

    Valid for any pair of axis observables; serves as the brute-force
    reference for the closed form below.
    """
    return measured_conditional_entropy(rho, q) + measured_conditional_entropy(rho, r)


def uncertainty_closed(form: BlochForm) -> float:
    """Closed form of S(Q|B) + S(R|B) for the pair (sigma_1, sigma_3).

    With a = local_a, b = local_b, T = correlation, the four eigenvalues of
    the post-measurement state for the axis lam in {1, 3} are

        eta = [1 + (-1)^mu a_lam + (-1)^nu ||b + (-1)^mu T_lam.|| ] / 4

    and the uncertainty is -sum eta log2 eta - 2 H((1 - ||b||)/2).
    """
    total = 0.0
    for lam in (0, 2):
        a_lam = form.local_a[lam]
        etas = []
        for mu in (0, 1):
            shifted = form.local_b + (-1.0) ** mu * form.correlation[lam]
            norm = float(np.linalg.norm(shifted))
            for nu in (0, 1):
                etas.append((1.0 + (-1.0) ** mu * a_lam + (-1.0) ** nu * norm) / 4.0)
        etas = np.array(etas)
        if etas.min() < -ATOL_ALGEBRA or etas.max() > 1.0 + ATOL_ALGEBRA:
            raise ValueError("inconsistent Bloch data: eigenvalue outside [0, 1]")
        total += _shannon_bits(np.clip(etas, 0.0, 1.0))
    b_norm = float(np.linalg.norm(form.local_b))
    return total - 2.0 * binary_entropy((1.0 - b_norm) / 2.0)


def complementarity(q: PauliObservable, r: PauliObservable) -> float:
    """Maximal squared overlap between eigenstates of the two observables.

    For axis observables this is (1 + |q_axis . r_axis|)/2: exactly 1/2 for
    orthogonal axes and 1 for identical ones.
    """
    return (1.0 + abs(float(np.dot(q.axis, r.axis)))) / 2.0


def lower_bound(rho: np.ndarray) -> float:
    """Uncertainty lower bound S(rho_AB) + 1 - H((1 - ||b||)/2) for (sigma_1, sigma_3).

    The binary-entropy term equals S(rho_B) for a qubit memory, so this
    agrees with :func:`lower_bound_generic` at complementarity 1/2.
    """
    b_norm = float(np.linalg.norm(bloch_decompose(rho).local_b))
    return von_neumann_entropy(rho) + 1.0 - binary_entropy((1.0 - b_norm) / 2.0)


def lower_bound_generic(rho: np.ndarray, q: PauliObservable, r: PauliObservable) -> float:
    """log2(1/c) + S(A|B) for an arbitrary observable pair."""
    return -np.log2(complementarity(q, r)) + conditional_entropy(rho)


def measurement_estimate(form: BlochForm) -> float:
    """Count-based estimate H((1-T_11)/2) + H((1-T_33)/2) of the uncertainty.

    (1 - T_ll)/2 is the probability that identical measurements of sigma_l
    on the two particles disagree; by Fano's inequality the estimate never
    falls below the uncertainty itself.
    """
    t11 = float(form.correlation[0, 0])
    t33 = float(form.correlation[2, 2])
    for t in (t11, t33):
        if not -1.0 - ATOL_ALGEBRA <= t <= 1.0 + ATOL_ALGEBRA:
            raise ValueError(f"correlation diagonal entry outside [-1, 1]: {t}")
    return binary_entropy((1.0 - t11) / 2.0) + binary_entropy((1.0 - t33) / 2.0)


@dataclass(frozen=True)
class UncertaintyReport:
    """All uncertainty quantities of one state for the (sigma_1, sigma_3) pair.

    Fields, in bits: ``uncertainty`` (the sum of the two measured
    conditional entropies), ``lower_bound``, ``measurement_estimate`` (the
    count-based proxy), ``entropy_q_given_b`` / ``entropy_r_given_b`` (the
    two summands), ``conditional_entropy`` (S(A|B)), and the dimensionless
    ``complementarity`` c.
    """

    uncertainty: float
    lower_bound: float
    measurement_estimate: float
    complementarity: float
    entropy_q_given_b: float
    entropy_r_given_b: float
    conditional_entropy: float

    def __post_init__(self) -> None:
        if abs(self.uncertainty - self.entropy_q_given_b - self.entropy_r_given_b) > ATOL_ALGEBRA:
            raise ValueError("uncertainty must equal the sum of its two terms")
        if self.uncertainty < self.lower_bound - INEQ_SLACK:
            raise ValueError("uncertainty below its lower bound")
        if self.measurement_estimate < self.uncertainty - INEQ_SLACK:
            raise ValueError("measurement estimate below the uncertainty")


def uncertainty_report(rho: np.ndarray) -> UncertaintyReport:
    """Evaluate all quantities for ``rho`` with Q = sigma_1 and R = sigma_3."""
    sq = measured_conditional_entropy(rho, PAULI_X)
    sr = measured_conditional_entropy(rho, PAULI_Z)
    return UncertaintyReport(
        uncertainty=sq + sr,
        lower_bound=lower_bound(rho),
        measurement_estimate=measurement_estimate(bloch_decompose(rho)),
        complementarity=complementarity(PAULI_X, PAULI_Z),
        entropy_q_given_b=sq,
        entropy_r_given_b=sr,
        conditional_entropy=conditional_entropy(rho),
    )
