"""Dense state-vector simulation of n-qubit pure states.

Conventions used across the whole package:
  * wires are 1-based, ``1 <= wire <= n_qubits``
  * qubit 1 is the most significant bit of the amplitude index, so
    ``|b1 b2 ... bn>`` lives at index ``sum(b_w << (n - w))``
  * global phase is unspecified and never asserted.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from . import _kernels

MAX_QUBITS = 20

_SQ2 = 1.0 / np.sqrt(2.0)

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
HADAMARD = np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=complex)
S_DAGGER = np.array([[1, 0], [0, -1j]], dtype=complex)
CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)

_PAULI_BY_NAME = {"X": PAULI_X, "Y": PAULI_Y, "Z": PAULI_Z}


class NonUnitaryGateError(ValueError):
    """Gate matrix fails the unitarity contract."""


class Statevector:
    """Amplitudes of an n-qubit pure state, mutated in place by gates."""

    __slots__ = ("n_qubits", "amplitudes")

    def __init__(self, n_qubits: int, amplitudes: np.ndarray):
        if not 1 <= n_qubits <= MAX_QUBITS:
            raise ValueError(f"n_qubits must be in 1..{MAX_QUBITS}, got {n_qubits}")
        amplitudes = np.ascontiguousarray(amplitudes, dtype=np.complex128)
        if amplitudes.shape != (1 << n_qubits,):
            raise ValueError(
                f"expected {1 << n_qubits} amplitudes, got shape {amplitudes.shape}"
            )
        self.n_qubits = n_qubits
        self.amplitudes = amplitudes

    def copy(self) -> "Statevector":
        return Statevector(self.n_qubits, self.amplitudes.copy())

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self) -> np.ndarray:
        a = self.amplitudes
        return a.real * a.real + a.imag * a.imag

    def __repr__(self) -> str:
        return f"Statevector(n_qubits={self.n_qubits})"


def new_basis_state(n_qubits: int, bitstring: Sequence[int]) -> Statevector:
    """Computational-basis state |b1 b2 ... bn> with qubit 1 as MSB."""
    if len(bitstring) != n_qubits:
        raise ValueError(
            f"bitstring length {len(bitstring)} does not match n_qubits {n_qubits}"
        )
    if any(b not in (0, 1) for b in bitstring):
        raise ValueError(f"bitstring entries must be 0 or 1, got {list(bitstring)}")
    index = 0
    for b in bitstring:
        index = (index << 1) | int(b)
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[index] = 1.0
    return Statevector(n_qubits, amps)


def _check_wire(state: Statevector, wire: int) -> None:
    if not 1 <= wire <= state.n_qubits:
        raise ValueError(f"wire {wire} out of range 1..{state.n_qubits}")


def _check_unitary(gate: np.ndarray, dim: int, tol: float = 1e-12) -> np.ndarray:
    gate = np.asarray(gate, dtype=np.complex128)
    if gate.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} gate, got shape {gate.shape}")
    dev = np.abs(gate @ gate.conj().T - np.eye(dim)).max()
    if dev > tol:
        raise NonUnitaryGateError(f"gate deviates from unitarity by {dev:.3e}")
    return gate


def apply_1q(state: Statevector, gate: np.ndarray, qubit: int) -> Statevector:
    """Apply a 2x2 unitary to one wire, in place; returns the state."""
    _check_wire(state, qubit)
    g = _check_unitary(gate, 2)
    _kernels.apply_1q_kernel(
        state.amplitudes, state.n_qubits, qubit, g[0, 0], g[0, 1], g[1, 0], g[1, 1]
    )
    return state


def apply_2q(state: Statevector, gate: np.ndarray, qubit_a: int, qubit_b: int) -> Statevector:
    """Apply a 4x4 unitary; qubit_a is the first tensor factor of the matrix."""
    _check_wire(state, qubit_a)
    _check_wire(state, qubit_b)
    if qubit_a == qubit_b:
        raise ValueError(f"two-qubit gate needs distinct wires, got {qubit_a} twice")
    g = _check_unitary(gate, 4)
    _kernels.apply_2q_kernel(state.amplitudes, state.n_qubits, qubit_a, qubit_b, g)
    return state


def inner_expectation(
    state: Statevector, observable_applier: Callable[[Statevector], Statevector]
) -> float:
    """Re <psi| O |psi> for O given as a state-to-state applier."""
    applied = observable_applier(state.copy())
    value = complex(np.vdot(state.amplitudes, applied.amplitudes))
    if abs(value.imag) > 1e-9 * max(1.0, abs(value.real)):
        raise ValueError(
            f"imaginary residue {value.imag:.3e}; applier is not Hermitian-representing"
        )
    return value.real


def rot1(axis: str, angle: float) -> np.ndarray:
    """exp(-i * angle * sigma_axis / 2)."""
    sigma = _PAULI_BY_NAME[axis]
    return np.cos(0.5 * angle) * np.eye(2) - 1j * np.sin(0.5 * angle) * sigma


def rot2(pair: str, angle: float) -> np.ndarray:
    """exp(-i * angle * (sigma_a x sigma_b) / 2) for a two-letter Pauli string."""
    p = np.kron(_PAULI_BY_NAME[pair[0]], _PAULI_BY_NAME[pair[1]])
    return np.cos(0.5 * angle) * np.eye(4) - 1j * np.sin(0.5 * angle) * p


def rx(angle: float) -> np.ndarray:
    return rot1("X", angle)


def ry(angle: float) -> np.ndarray:
    return rot1("Y", angle)


def rz(angle: float) -> np.ndarray:
    return rot1("Z", angle)
