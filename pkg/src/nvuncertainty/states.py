"""Constructors for the state families under study and seeded random states."""

from __future__ import annotations

import numpy as np

from .qcore import tensor, ID2


def schmidt_vector(chi: float) -> np.ndarray:
    """State vector cos(chi)|0 down> + sin(chi)|-1 up> for chi in [0, pi/2]."""
    chi = float(chi)
    if not 0.0 <= chi <= np.pi / 2:
        raise ValueError(f"chi must lie in [0, pi/2], got {chi}")
    return np.array([np.cos(chi), 0.0, 0.0, np.sin(chi)], dtype=np.complex128)


def schmidt_state(chi: float) -> np.ndarray:
    """Projector onto the Schmidt family state cos(chi)|0 down> + sin(chi)|-1 up>.

    Interpolates from the product state |0 down> at chi = 0 to the maximally
    entangled state at chi = pi/4.
    """
    v = schmidt_vector(chi)
    return np.outer(v, v.conj())


def werner_state(q: float) -> np.ndarray:
    """Isotropic mixture (1-q)/4 * identity + q * Bell projector, q in [0, 1].

    Eigenvalues are (1+3q)/4 and (1-q)/4 (three-fold); the correlation
    tensor is diag(q, -q, q).
    """
    q = float(q)
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"q must lie in [0, 1], got {q}")
    return (1.0 - q) / 4.0 * tensor(ID2, ID2) + q * schmidt_state(np.pi / 4)


def random_pure(seed: int) -> np.ndarray:
    """Projector onto a Haar-random two-qubit state vector.

    The vector is a normalized 4-vector of independent standard complex
    Gaussians drawn from ``numpy.random.default_rng(seed)`` (PCG64); equal
    seeds reproduce the state exactly within one numpy version.
    """
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    v /= np.linalg.norm(v)
    return np.outer(v, v.conj())


def random_mixed(seed: int) -> np.ndarray:
    """Ginibre-ensemble random density matrix G G^dagger / tr(G G^dagger).

    G is a 4x4 matrix of independent standard complex Gaussians from
    ``numpy.random.default_rng(seed)``; generically full rank.
    """
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    rho = g @ g.conj().T
    return rho / rho.trace().real
