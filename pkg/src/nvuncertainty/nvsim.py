"""Pulse-level simulation of the electron-nuclear uncertainty protocol.

The register is an electron spin qubit {|0>, |-1>} hyperfine-coupled to a
nuclear spin qubit {|down>, |up>}. Pulses are ideal instantaneous gates:

* a green-laser reset that repolarizes the electron to |0> while leaving
  the nuclear marginal untouched,
* microwave (MW) rotations of the electron, optionally conditioned on the
  nuclear level, and radio-frequency (RF) rotations of the nucleus,
  optionally conditioned on the electron level,
* an unconditional electron Hadamard used to reduce a sigma_1 readout to
  the native sigma_3 (shelving) readout,
* projective single-shot electron Z readout, handled by
  :func:`run_protocol` only.

Rotations use the real convention R(theta) = [[cos t/2, -sin t/2],
[sin t/2, cos t/2]]; the physical -i of a resonant pi pulse is absorbed into
pulse phase calibration. With that convention the nuclear-to-electron
mapping needs its RF pulse rotated through -pi (an axis sign flip) so that
coherences map without a residual sign and sigma_1 statistics survive the
transfer; the choice is pinned down by the protocol-versus-Born tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .entropic import PauliObservable, binary_entropy
from .qcore import ID2, dagger, partial_trace, tensor

_MW_CONDITIONS = ("nuclear_down", "nuclear_up", "unconditional")
_RF_CONDITIONS = ("electron_0", "electron_minus1", "unconditional")
_KINDS = ("laser_polarize", "mw_rotation", "rf_rotation", "electron_hadamard",
          "measure_electron_z")

_HADAMARD = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2.0)
_KET0_PROJ = np.array([[1, 0], [0, 0]], dtype=np.complex128)
_KET1_PROJ = np.array([[0, 0], [0, 1]], dtype=np.complex128)

# Born probabilities within this distance of 0 or 1 are snapped exactly, so
# that analytically impossible outcomes never fire from round-off.
_PROB_SNAP = 1e-12


@dataclass(frozen=True)
class PulseOp:
    """One ideal pulse: kind, rotation angle (radians), and gating condition."""

    kind: str
    angle: float = 0.0
    condition: str = "unconditional"

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown pulse kind {self.kind!r}")
        if not math.isfinite(self.angle):
            raise ValueError("pulse angle must be finite")
        if self.kind == "mw_rotation":
            if self.condition not in _MW_CONDITIONS:
                raise ValueError(f"MW condition must be one of {_MW_CONDITIONS}")
        elif self.kind == "rf_rotation":
            if self.condition not in _RF_CONDITIONS:
                raise ValueError(f"RF condition must be one of {_RF_CONDITIONS}")
        elif self.angle != 0.0 or self.condition != "unconditional":
            raise ValueError(f"{self.kind} takes no angle or condition")


def laser_polarize() -> PulseOp:
    return PulseOp("laser_polarize")


def mw_rotation(angle: float, condition: str = "unconditional") -> PulseOp:
    return PulseOp("mw_rotation", angle=float(angle), condition=condition)


def rf_rotation(angle: float, condition: str = "unconditional") -> PulseOp:
    return PulseOp("rf_rotation", angle=float(angle), condition=condition)


def electron_hadamard() -> PulseOp:
    return PulseOp("electron_hadamard")


def measure_electron_z() -> PulseOp:
    return PulseOp("measure_electron_z")


@dataclass(frozen=True)
class ProtocolSequence:
    """Ordered pulse operations with a human-readable label."""

    ops: tuple[PulseOp, ...]
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "ops", tuple(self.ops))
        for i, op in enumerate(self.ops):
            if op.kind == "measure_electron_z" and i < len(self.ops) - 2:
                raise ValueError("readouts are only allowed in the final two slots")


def _rotation(theta: float) -> np.ndarray:
    c, s = np.cos(theta / 2.0), np.sin(theta / 2.0)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


def _pulse_unitary(op: PulseOp) -> np.ndarray:
    r = _rotation(op.angle)
    if op.kind == "mw_rotation":
        if op.condition == "nuclear_down":
            return tensor(r, _KET0_PROJ) + tensor(ID2, _KET1_PROJ)
        if op.condition == "nuclear_up":
            return tensor(ID2, _KET0_PROJ) + tensor(r, _KET1_PROJ)
        return tensor(r, ID2)
    if op.kind == "rf_rotation":
        if op.condition == "electron_0":
            return tensor(_KET0_PROJ, r) + tensor(_KET1_PROJ, ID2)
        if op.condition == "electron_minus1":
            return tensor(_KET0_PROJ, ID2) + tensor(_KET1_PROJ, r)
        return tensor(ID2, r)
    if op.kind == "electron_hadamard":
        return tensor(_HADAMARD, ID2)
    raise ValueError(f"{op.kind} has no unitary")


def apply_pulse(rho: np.ndarray, op: PulseOp) -> np.ndarray:
    """Apply one pulse to a joint state.

    The laser reset implements rho -> |0><0|_e x tr_e(rho); rotations and
    the Hadamard act by conjugation. Readout ops are the business of
    :func:`run_protocol` and are rejected here.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    if op.kind == "measure_electron_z":
        raise ValueError("readout is handled by run_protocol, not apply_pulse")
    if op.kind == "laser_polarize":
        return tensor(_KET0_PROJ, partial_trace(rho, "B"))
    u = _pulse_unitary(op)
    return u @ rho @ dagger(u)


def apply_sequence(rho: np.ndarray, sequence: ProtocolSequence) -> np.ndarray:
    """Fold :func:`apply_pulse` over a measurement-free sequence."""
    for op in sequence.ops:
        rho = apply_pulse(rho, op)
    return rho


def prepare_schmidt_sequence(chi: float) -> ProtocolSequence:
    """Pulse program preparing cos(chi)|0 down> + sin(chi)|-1 up>.

    Laser reset, a conditional MW-pi and RF-pi swap that empties the nuclear
    qubit into the electron, a second reset leaving |0 down>, then an
    MW-2chi rotation and a conditional RF-pi that entangle the pair. Works
    for every initial register state.
    """
    chi = float(chi)
    if not 0.0 <= chi <= np.pi / 2:
        raise ValueError(f"chi must lie in [0, pi/2], got {chi}")
    return ProtocolSequence(
        ops=(
            laser_polarize(),
            mw_rotation(np.pi, "nuclear_up"),
            rf_rotation(np.pi, "electron_minus1"),
            laser_polarize(),
            mw_rotation(2.0 * chi, "nuclear_down"),
            rf_rotation(np.pi, "electron_minus1"),
        ),
        label=f"prepare-schmidt(chi={chi:.6g})",
    )


def map_nuclear_to_electron_sequence() -> ProtocolSequence:
    """Pulse program moving the nuclear qubit onto a freshly reset electron.

    Maps |0><0| x rho_n to rho_n (relabeled down -> |0>, up -> |-1>) on the
    electron with the nucleus left in |down>. The RF pulse is rotated
    through -pi so the transfer carries coherences without a sign flip.
    """
    return ProtocolSequence(
        ops=(
            laser_polarize(),
            mw_rotation(np.pi, "nuclear_up"),
            rf_rotation(-np.pi, "electron_minus1"),
        ),
        label="map-nuclear-to-electron",
    )


@dataclass(frozen=True)
class CountsTable:
    """Paired readout counts; first index is the first electron readout."""

    n00: int
    n01: int
    n10: int
    n11: int
    shots: int

    def __post_init__(self) -> None:
        counts = (self.n00, self.n01, self.n10, self.n11)
        if any(n < 0 for n in counts):
            raise ValueError("counts must be nonnegative")
        if sum(counts) != self.shots:
            raise ValueError("counts must sum to shots")

    @property
    def disagreements(self) -> int:
        return self.n01 + self.n10


@dataclass(frozen=True)
class KappaEstimate:
    """Estimated disagreement probability with its binomial standard error."""

    kappa: float
    shots: int
    std_err: float

    @classmethod
    def from_counts(cls, counts: CountsTable) -> "KappaEstimate":
        kappa = counts.disagreements / counts.shots
        return cls(
            kappa=kappa,
            shots=counts.shots,
            std_err=math.sqrt(kappa * (1.0 - kappa) / counts.shots),
        )


def _snap(p: float) -> float:
    p = min(max(float(p), 0.0), 1.0)
    if p < _PROB_SNAP:
        return 0.0
    if p > 1.0 - _PROB_SNAP:
        return 1.0
    return p


def _electron_ground_probability(rho: np.ndarray) -> float:
    return _snap((rho[0, 0] + rho[1, 1]).real)


def _collapse_electron(rho: np.ndarray, outcome: int, prob: float) -> np.ndarray:
    block = slice(0, 2) if outcome == 0 else slice(2, 4)
    out = np.zeros_like(rho)
    out[block, block] = rho[block, block]
    return out / prob


def _basis_uses_hadamard(basis: PauliObservable) -> bool:
    if np.allclose(basis.axis, [1.0, 0.0, 0.0]):
        return True
    if np.allclose(basis.axis, [0.0, 0.0, 1.0]):
        return False
    raise ValueError("protocol readout supports only the sigma_1 and sigma_3 axes")


def run_protocol(rho: np.ndarray, basis: PauliObservable, shots: int,
                 seed: int) -> CountsTable:
    """Monte Carlo of the paired-readout protocol in one basis.

    Each shot: rotate into the readout basis if measuring sigma_1 (sigma_1 =
    H sigma_3 H), project the electron in Z and record the outcome, rotate
    back, run the polarize-and-map program that moves the nuclear qubit onto
    the electron, then read out once more in the same basis. The two
    post-readout branches are evolved exactly once (the collapse is
    deterministic given the outcome) and per-shot outcomes are then drawn
    from the branch statistics, so equal seeds give identical tables.
    """
    if shots < 1:
        raise ValueError("shots must be at least 1")
    rho = np.asarray(rho, dtype=np.complex128)
    use_h = _basis_uses_hadamard(basis)
    h = electron_hadamard()

    work = apply_pulse(rho, h) if use_h else rho
    p_first0 = _electron_ground_probability(work)

    # Probability that the second readout returns 0 given each first outcome.
    p_second0 = [0.0, 0.0]
    for outcome, prob in ((0, p_first0), (1, 1.0 - p_first0)):
        if prob <= 0.0:
            continue
        branch = _collapse_electron(work, outcome, prob)
        if use_h:
            branch = apply_pulse(branch, h)
        branch = apply_sequence(branch, map_nuclear_to_electron_sequence())
        if use_h:
            branch = apply_pulse(branch, h)
        p_second0[outcome] = _electron_ground_probability(branch)

    rng = np.random.default_rng(seed)
    first = rng.random(shots) >= p_first0
    cond = np.where(first, p_second0[1], p_second0[0])
    second = rng.random(shots) >= cond
    cells = np.bincount(2 * first.astype(int) + second.astype(int), minlength=4)
    return CountsTable(n00=int(cells[0]), n01=int(cells[1]), n10=int(cells[2]),
                       n11=int(cells[3]), shots=shots)


def joint_distribution(rho: np.ndarray, basis: PauliObservable) -> np.ndarray:
    """Exact Born probabilities of the four paired outcomes.

    Measures ``basis`` on both qubits; returns [p00, p01, p10, p11] with
    index 0 the +1 outcome, matching the :class:`CountsTable` cells. The
    disagreement mass p01 + p10 equals (1 - T_ll)/2 for a Pauli axis l.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    plus, minus = basis.projectors()
    probs = [
        np.trace(tensor(pa, pb) @ rho).real
        for pa in (plus, minus)
        for pb in (plus, minus)
    ]
    return np.array(probs)


def estimate_me(counts_q: CountsTable, counts_r: CountsTable) -> float:
    """Uncertainty proxy H(kappa_Q) + H(kappa_R) from two counts tables."""
    kq = KappaEstimate.from_counts(counts_q).kappa
    kr = KappaEstimate.from_counts(counts_r).kappa
    return binary_entropy(kq) + binary_entropy(kr)


@dataclass(frozen=True)
class DephasingModel:
    """Electron phase damping over a duration ``t`` with coherence time ``t2e``."""

    t2e: float
    t: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.t2e) and self.t2e > 0.0):
            raise ValueError("t2e must be positive and finite")
        if self.t < 0.0:
            raise ValueError("t must be nonnegative")

    @property
    def gamma(self) -> float:
        """Coherence survival factor exp(-t / (2 t2e))."""
        return math.exp(-self.t / (2.0 * self.t2e))


def dephase(rho: np.ndarray, model: DephasingModel) -> np.ndarray:
    """Electron-local phase damping.

    Matrix elements connecting the electron levels are multiplied by
    gamma = exp(-t/(2 t2e)); electron-diagonal blocks and the trace are
    untouched. Composes as a semigroup in t.
    """
    rho = np.asarray(rho, dtype=np.complex128).copy()
    rho[0:2, 2:4] *= model.gamma
    rho[2:4, 0:2] *= model.gamma
    return rho
