"""Concurrence and the uncertainty-based entanglement witness.

A two-qubit state measured with the mutually unbiased pair (sigma_1,
sigma_3) has complementarity 1/2, so an uncertainty below log2(1/c) = 1 bit
forces S(A|B) < 0 and therefore certifies entanglement. The witness is
sound but not complete: states exist with nonzero concurrence whose
uncertainty stays above 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .entropic import UncertaintyReport, binary_entropy
from .qcore import PSD_FLOOR, SIGMA_Y, dagger, tensor

# Margin below the threshold required before certifying, so that boundary
# states are never certified out of round-off.
_STRICT_TOL = 1e-12

_SY_SY = tensor(SIGMA_Y, SIGMA_Y)


def _psd_sqrt(m: np.ndarray) -> np.ndarray:
    """Square root of a Hermitian PSD matrix via eigendecomposition."""
    vals, vecs = np.linalg.eigh((m + dagger(m)) / 2.0)
    if vals.min() < PSD_FLOOR:
        raise ValueError(f"matrix is not PSD: min eigenvalue {vals.min():.3e}")
    return (vecs * np.sqrt(np.clip(vals, 0.0, None))) @ dagger(vecs)


def concurrence(rho: np.ndarray) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    C = max(0, l1 - l2 - l3 - l4) with l_i the descending square roots of
    the eigenvalues of rho (sy x sy) rho* (sy x sy), conjugation taken in
    the computational basis. The l_i are computed as the singular values of
    A = sqrt(rho) (sy x sy) sqrt(rho)*, whose Gram matrix A A^dagger is the
    Hermitian equivalent sqrt(rho) rho_tilde sqrt(rho); taking singular
    values avoids the square-root noise amplification near zero.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    root = _psd_sqrt(rho)
    lam = np.linalg.svd(root @ _SY_SY @ root.conj(), compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


@dataclass(frozen=True)
class WitnessVerdict:
    """Outcome of the uncertainty witness for one state."""

    uncertainty: float
    threshold: float
    entangled_certified: bool

    def __post_init__(self) -> None:
        if self.entangled_certified != (self.uncertainty < self.threshold - _STRICT_TOL):
            raise ValueError("verdict inconsistent with uncertainty and threshold")


def witness(report: UncertaintyReport) -> WitnessVerdict:
    """Certify entanglement when the uncertainty drops below log2(1/c).

    Requires a report taken with the mutually unbiased pair (c = 1/2), for
    which the threshold is 1 bit.
    """
    if abs(report.complementarity - 0.5) > _STRICT_TOL:
        raise ValueError("witness threshold is calibrated for complementarity 1/2")
    threshold = 1.0
    return WitnessVerdict(
        uncertainty=report.uncertainty,
        threshold=threshold,
        entangled_certified=report.uncertainty < threshold - _STRICT_TOL,
    )


def witness_threshold_q() -> float:
    """Mixing weight q* at which the isotropic-mixture uncertainty crosses 1.

    Solves 2 H((1-q)/2) = 1 on the monotone branch q in (0, 1); the witness
    certifies the family only above this point, well after concurrence
    becomes positive at q = 1/3.
    """
    return float(brentq(lambda q: 2.0 * binary_entropy((1.0 - q) / 2.0) - 1.0,
                        1e-9, 1.0 - 1e-9, xtol=1e-12))
