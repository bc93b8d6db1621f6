"""Exact small-dimension complex linear algebra for the electron-nuclear register.

States are plain ``numpy`` arrays of ``complex128``. The joint basis is fixed
as |electron, nucleus> in the order

    |0 down>, |0 up>, |-1 down>, |-1 up>

with the electron as the first tensor factor, |0> and |down> mapping to
logical 0, and |-1> and |up> mapping to logical 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

# Tolerances used across the library: algebraic identities, validity of
# states (hermiticity/trace), and the PSD floor below which eigenvalues are
# treated as exact zeros.
ATOL_ALGEBRA = 1e-12
ATOL_VALID = 1e-10
PSD_FLOOR = -1e-10

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
ID2 = np.eye(2, dtype=np.complex128)

PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


class InvalidStateError(ValueError):
    """Raised when a matrix fails the density-matrix invariants."""


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the first argument as the leftmost factor."""
    return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def dagger(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def validate_density_matrix(rho: np.ndarray, dim: int | None = None) -> np.ndarray:
    """Check the density-matrix invariants and return ``rho`` as complex128.

    Requires hermiticity and unit trace within 1e-12 and eigenvalues no
    smaller than -1e-10. Raises :class:`InvalidStateError` otherwise.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise InvalidStateError(f"expected a square matrix, got shape {rho.shape}")
    if dim is not None and rho.shape[0] != dim:
        raise InvalidStateError(f"expected a {dim}x{dim} matrix, got shape {rho.shape}")
    herm_dev = np.abs(rho - dagger(rho)).max()
    if herm_dev > ATOL_ALGEBRA:
        raise InvalidStateError(f"not Hermitian: max deviation {herm_dev:.3e}")
    trace_dev = abs(rho.trace() - 1.0)
    if trace_dev > ATOL_ALGEBRA:
        raise InvalidStateError(f"trace differs from 1 by {trace_dev:.3e}")
    eigmin = np.linalg.eigvalsh((rho + dagger(rho)) / 2.0).min()
    if eigmin < PSD_FLOOR:
        raise InvalidStateError(f"not positive semidefinite: min eigenvalue {eigmin:.3e}")
    return rho


def partial_trace(rho: np.ndarray, keep: Literal["A", "B"]) -> np.ndarray:
    """Reduced 2x2 state of one subsystem of a 4x4 joint state.

    ``keep="A"`` keeps the electron (first factor), ``keep="B"`` the nucleus.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (4, 4):
        raise ValueError(f"partial_trace expects a 4x4 matrix, got shape {rho.shape}")
    blocks = rho.reshape(2, 2, 2, 2)
    if keep == "A":
        return np.einsum("ikjk->ij", blocks)
    if keep == "B":
        return np.einsum("kikj->ij", blocks)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted in descending order.

    The input is symmetrized as (M + M^dagger)/2 before solving; deviations
    from hermiticity beyond 1e-10 are rejected.
    """
    m = np.asarray(m, dtype=np.complex128)
    herm_dev = np.abs(m - dagger(m)).max()
    if herm_dev > ATOL_VALID:
        raise ValueError(f"matrix is not Hermitian: max deviation {herm_dev:.3e}")
    vals = np.linalg.eigvalsh((m + dagger(m)) / 2.0)
    return vals[::-1]


@dataclass(frozen=True)
class BlochForm:
    """Pauli expansion data of a two-qubit state.

    ``local_a`` and ``local_b`` are the local Pauli expectation vectors of
    the electron and the nucleus; ``correlation`` is the 3x3 tensor of joint
    Pauli expectations. Every component is an expectation of an operator
    with eigenvalues +/-1 and therefore lies in [-1, 1].
    """

    local_a: np.ndarray
    local_b: np.ndarray
    correlation: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "local_a", np.asarray(self.local_a, dtype=float))
        object.__setattr__(self, "local_b", np.asarray(self.local_b, dtype=float))
        object.__setattr__(self, "correlation", np.asarray(self.correlation, dtype=float))
        if self.local_a.shape != (3,) or self.local_b.shape != (3,):
            raise ValueError("local vectors must have shape (3,)")
        if self.correlation.shape != (3, 3):
            raise ValueError("correlation tensor must have shape (3, 3)")
        bound = 1.0 + ATOL_ALGEBRA
        for name, arr in (("local_a", self.local_a), ("local_b", self.local_b),
                          ("correlation", self.correlation)):
            if np.abs(arr).max() > bound:
                raise ValueError(f"{name} has entries outside [-1, 1]")


# Pauli operators lifted to the joint space, precomputed for the trace
# contractions in bloch_decompose.
_PAULI_A_OPS = np.stack([np.kron(s, ID2) for s in PAULIS])
_PAULI_B_OPS = np.stack([np.kron(ID2, s) for s in PAULIS])
_PAULI_AB_OPS = np.stack(
    [np.kron(si, sj) for si in PAULIS for sj in PAULIS]).reshape(3, 3, 4, 4)


def bloch_decompose(rho: np.ndarray) -> BlochForm:
    """Local vectors and correlation tensor of a two-qubit state.

    local_a[i] = tr(rho sigma_i x 1), local_b[i] = tr(rho 1 x sigma_i),
    correlation[i, j] = tr(rho sigma_i x sigma_j).
    """
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (4, 4):
        raise ValueError(f"bloch_decompose expects a 4x4 matrix, got shape {rho.shape}")
    a = np.einsum("kij,ji->k", _PAULI_A_OPS, rho).real
    b = np.einsum("kij,ji->k", _PAULI_B_OPS, rho).real
    t = np.einsum("klij,ji->kl", _PAULI_AB_OPS, rho).real
    return BlochForm(a, b, t)


def bloch_compose(form: BlochForm) -> np.ndarray:
    """Two-qubit state with the given Pauli expansion.

    rho = (1/4) [1x1 + sum_i a_i sigma_i x 1 + sum_i b_i 1 x sigma_i
                 + sum_ij T_ij sigma_i x sigma_j]

    The expansion admits matrices that are not states; the result is
    validated and :class:`InvalidStateError` is raised if it is not
    positive semidefinite.
    """
    rho = tensor(ID2, ID2).astype(np.complex128)
    for i, s in enumerate(PAULIS):
        rho += form.local_a[i] * tensor(s, ID2)
        rho += form.local_b[i] * tensor(ID2, s)
        for j, sj in enumerate(PAULIS):
            rho += form.correlation[i, j] * tensor(s, sj)
    rho /= 4.0
    return validate_density_matrix(rho, dim=4)
