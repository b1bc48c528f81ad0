"""Transformation operators and the faithfulness criterion.

The protocol: Alice holds an unknown two-qubit state and two qubits of a
shared five-qubit channel, Bob holds two channel qubits, and Charlie
holds the remaining one.  Alice Bell-measures each of her unknown qubits
against one of her channel qubits, Charlie measures his qubit in a
one-parameter rotated basis (angle theta), and Bob applies a local
correction.  For each measurement outcome (i, j, n) the channel induces
a fixed 4x4 operator on Bob's pair; the teleportation is faithful for
every input exactly when the two base operators (both Bell outcomes 1)
are unitary, in which case all 32 outcome operators are unitary too.

Operator layouts:

* ``action``: Bob's unnormalized post-measurement amplitudes equal
  1/(4*sqrt(2)) times matrix @ x, where x holds the four input
  coefficients.
* ``tableau``: the transpose; rows indexed by the collapsed two-bit
  index of Alice's channel pair, columns by Bob's basis index.  This is
  the orientation in which the operators are usually tabulated.

Unitarity is layout-independent, so every check accepts either.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .entanglement import partial_trace, purity
from .states import PureState, permute_qubits, project_subsystem, tensor

__all__ = [
    "LAYOUT_ACTION",
    "LAYOUT_TABLEAU",
    "PAULI_FACTORS",
    "RoleAssignment",
    "TransformationOperator",
    "UnitarityVerdict",
    "CriterionReport",
    "FactorizationReport",
    "TeleportationRecord",
    "bell_state",
    "charlie_state",
    "transformation_operator",
    "unitarity_defect",
    "is_unitary",
    "criterion_check",
    "pauli_factorization_check",
    "simulate",
]

LAYOUT_ACTION = "action"
LAYOUT_TABLEAU = "tableau"

# operator scale: with it, a faithful channel yields exactly unitary matrices
_SCALE = 2.0 * math.sqrt(2.0)
# measurement prefactor relating raw projections to the scaled operators
_PREFACTOR = 1.0 / (4.0 * math.sqrt(2.0))

# Bell outcome dictionary, binding across the package:
#   1: (|00> + |11>)/sqrt(2)    2: (|00> - |11>)/sqrt(2)
#   3: (|01> + |10>)/sqrt(2)    4: (|01> - |10>)/sqrt(2)
_BELL_AMPLITUDES = {
    1: np.array([1, 0, 0, 1], dtype=np.complex128) / math.sqrt(2.0),
    2: np.array([1, 0, 0, -1], dtype=np.complex128) / math.sqrt(2.0),
    3: np.array([0, 1, 1, 0], dtype=np.complex128) / math.sqrt(2.0),
    4: np.array([0, 1, -1, 0], dtype=np.complex128) / math.sqrt(2.0),
}

# Local correction factors paired with the Bell dictionary above: in the
# action layout, operator(i, j, n) = operator(1, 1, n) @ kron(F[i], F[j]).
PAULI_FACTORS = {
    1: np.eye(2, dtype=np.complex128),
    2: np.array([[1, 0], [0, -1]], dtype=np.complex128),
    3: np.array([[0, 1], [1, 0]], dtype=np.complex128),
    4: np.array([[0, -1], [1, 0]], dtype=np.complex128),
}


def bell_state(index: int) -> PureState:
    """Two-qubit Bell state for an outcome index, per the dictionary above.

    Qubit 1 is the measured unknown-state qubit, qubit 2 the channel
    qubit it is paired with; the order matters only for index 4.
    """
    if index not in _BELL_AMPLITUDES:
        raise ValueError(f"Bell outcome index must be 1..4, got {index}")
    return PureState(2, _BELL_AMPLITUDES[index])


def charlie_state(theta: float, outcome: int) -> PureState:
    """Element of Charlie's rotated measurement basis.

    Outcome 1 is cos(theta)|0> + sin(theta)|1>, outcome 2 the orthogonal
    sin(theta)|0> - cos(theta)|1>.  Only real angles are supported.
    """
    if outcome not in (1, 2):
        raise ValueError(f"Charlie outcome must be 1 or 2, got {outcome}")
    c, s = math.cos(theta), math.sin(theta)
    vec = (c, s) if outcome == 1 else (s, -c)
    return PureState(1, np.array(vec, dtype=np.complex128))


@dataclass(frozen=True)
class RoleAssignment:
    """Which channel qubits Alice, Bob, and Charlie hold.

    Within-role order is significant: ``alice[0]`` is paired with the
    first unknown qubit, ``alice[1]`` with the second; ``bob`` orders the
    receiver pair.  Swapping within a role relabels operators but never
    changes a pass/fail verdict.
    """

    alice: tuple[int, int]
    bob: tuple[int, int]
    charlie: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "alice", tuple(self.alice))
        object.__setattr__(self, "bob", tuple(self.bob))
        labels = [*self.alice, *self.bob, self.charlie]
        if sorted(labels) != [1, 2, 3, 4, 5]:
            raise ValueError(
                f"roles must partition qubits 1..5, got alice={self.alice} "
                f"bob={self.bob} charlie={self.charlie}"
            )

    def relabeling(self) -> dict[int, int]:
        """Old-label -> new-label map putting roles in canonical order."""
        return {
            self.alice[0]: 1,
            self.alice[1]: 2,
            self.bob[0]: 3,
            self.bob[1]: 4,
            self.charlie: 5,
        }

    def as_dict(self) -> dict:
        return {
            "alice": list(self.alice),
            "bob": list(self.bob),
            "charlie": self.charlie,
        }


def _arranged(channel: PureState, assignment: RoleAssignment) -> PureState:
    """Channel relabeled so qubits run (alice 1, alice 2, bob 1, bob 2, charlie)."""
    if channel.num_qubits != 5:
        raise ValueError("the channel must be a five-qubit state")
    return permute_qubits(channel, assignment.relabeling())


@dataclass(frozen=True, eq=False)
class TransformationOperator:
    """4x4 operator induced on Bob's pair by one measurement outcome."""

    matrix: np.ndarray
    bell_first: int
    bell_second: int
    charlie_outcome: int
    theta: float
    layout: str

    def __post_init__(self) -> None:
        m = np.array(self.matrix, dtype=np.complex128)
        if m.shape != (4, 4):
            raise ValueError(f"operator must be 4x4, got {m.shape}")
        if self.layout not in (LAYOUT_ACTION, LAYOUT_TABLEAU):
            raise ValueError(f"unknown layout {self.layout!r}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def action_matrix(self) -> np.ndarray:
        return self.matrix if self.layout == LAYOUT_ACTION else self.matrix.T

    @property
    def tableau_matrix(self) -> np.ndarray:
        return self.matrix if self.layout == LAYOUT_TABLEAU else self.matrix.T

    def as_layout(self, layout: str) -> "TransformationOperator":
        if layout == self.layout:
            return self
        if layout not in (LAYOUT_ACTION, LAYOUT_TABLEAU):
            raise ValueError(f"unknown layout {layout!r}")
        return TransformationOperator(
            self.matrix.T,
            self.bell_first,
            self.bell_second,
            self.charlie_outcome,
            self.theta,
            layout,
        )


def _base_tableau(grid: np.ndarray, charlie_outcome: int, theta: float) -> np.ndarray:
    """Base operator (both Bell outcomes 1) straight from the amplitudes.

    ``grid`` is the arranged channel reshaped (2, 2, 2, 2, 2).  Entry
    [k][b] combines the two Charlie components of amplitude (k, b, .)
    with the basis weights of the requested outcome.
    """
    g0 = grid[..., 0].reshape(4, 4)
    g1 = grid[..., 1].reshape(4, 4)
    c, s = math.cos(theta), math.sin(theta)
    if charlie_outcome == 1:
        return _SCALE * (c * g0 + s * g1)
    return _SCALE * (s * g0 - c * g1)


def _projected_tableau(
    grid: np.ndarray,
    bell_first: int,
    bell_second: int,
    charlie_outcome: int,
    theta: float,
) -> np.ndarray:
    """General operator by direct projection of the measurement bras.

    Contracts the conjugated Bell amplitudes of both sender pairs and
    Charlie's basis vector against the channel tensor; equals the base
    operator times local factors, which pauli_factorization_check
    verifies rather than assumes.
    """
    first = _BELL_AMPLITUDES[bell_first].reshape(2, 2).conj()
    second = _BELL_AMPLITUDES[bell_second].reshape(2, 2).conj()
    basis = charlie_state(theta, charlie_outcome).amplitudes.conj()
    contracted = np.einsum("ka,lb,c,abmnc->klmn", first, second, basis, grid)
    return (1.0 / _PREFACTOR) * contracted.reshape(4, 4)


def transformation_operator(
    channel: PureState,
    assignment: RoleAssignment,
    bell_first: int,
    bell_second: int,
    charlie_outcome: int,
    theta: float,
    layout: str = LAYOUT_ACTION,
) -> TransformationOperator:
    """The 4x4 operator Bob's pair picks up for one measurement outcome.

    ``bell_first``/``bell_second`` are the Bell outcome indices of the
    two sender measurements, ``charlie_outcome`` selects Charlie's basis
    element.  The base outcome (1, 1, n) is assembled directly from the
    channel amplitudes; other outcomes are built by projecting the
    measurement bras.
    """
    if bell_first not in (1, 2, 3, 4) or bell_second not in (1, 2, 3, 4):
        raise ValueError("Bell outcome indices must be in 1..4")
    if charlie_outcome not in (1, 2):
        raise ValueError("Charlie outcome must be 1 or 2")
    grid = _arranged(channel, assignment).amplitudes.reshape([2] * 5)
    if (bell_first, bell_second) == (1, 1):
        tableau = _base_tableau(grid, charlie_outcome, theta)
    else:
        tableau = _projected_tableau(
            grid, bell_first, bell_second, charlie_outcome, theta
        )
    matrix = tableau if layout == LAYOUT_TABLEAU else tableau.T
    return TransformationOperator(
        matrix, bell_first, bell_second, charlie_outcome, theta, layout
    )


def unitarity_defect(matrix: np.ndarray) -> float:
    """Frobenius norm of M^dagger M - I; zero exactly for unitary M."""
    m = np.asarray(matrix, dtype=np.complex128)
    gram = m.conj().T @ m
    return float(np.linalg.norm(gram - np.eye(m.shape[0])))


@dataclass(frozen=True)
class UnitarityVerdict:
    unitary: bool
    defect: float


def is_unitary(
    op: TransformationOperator | np.ndarray, tol: float = 1e-10
) -> UnitarityVerdict:
    """Unitarity test by Frobenius defect; layout-independent."""
    matrix = op.matrix if isinstance(op, TransformationOperator) else op
    defect = unitarity_defect(matrix)
    return UnitarityVerdict(defect <= tol, defect)


@dataclass(frozen=True)
class CriterionReport:
    """Faithfulness verdict for one channel, assignment, and angle."""

    assignment: RoleAssignment
    theta: float
    sigma111_defect: float
    sigma112_defect: float
    passed: bool
    purity_alice_pair: float
    purity_bob_pair: float
    tol: float

    def as_dict(self) -> dict:
        return {
            "assignment": self.assignment.as_dict(),
            "theta": self.theta,
            "sigma111_defect": self.sigma111_defect,
            "sigma112_defect": self.sigma112_defect,
            "pass": self.passed,
            "purity_alice_pair": self.purity_alice_pair,
            "purity_bob_pair": self.purity_bob_pair,
        }


def criterion_check(
    channel: PureState,
    assignment: RoleAssignment,
    theta: float,
    tol: float = 1e-10,
) -> CriterionReport:
    """Faithful-for-every-input test: both base operators unitary within tol.

    Also reports the purities of the two held pairs; unitarity forces
    both to be exactly 1/4, so a purity away from 1/4 explains a FAIL.
    """
    arranged = _arranged(channel, assignment)
    grid = arranged.amplitudes.reshape([2] * 5)
    defect_1 = unitarity_defect(_base_tableau(grid, 1, theta))
    defect_2 = unitarity_defect(_base_tableau(grid, 2, theta))
    return CriterionReport(
        assignment=assignment,
        theta=theta,
        sigma111_defect=defect_1,
        sigma112_defect=defect_2,
        passed=defect_1 <= tol and defect_2 <= tol,
        purity_alice_pair=purity(partial_trace(arranged, (1, 2))),
        purity_bob_pair=purity(partial_trace(arranged, (3, 4))),
        tol=tol,
    )


@dataclass(frozen=True)
class FactorizationReport:
    """Outcome of checking operator(i, j, n) == operator(1, 1, n) @ kron(F_i, F_j)."""

    holds: bool
    max_deviation: float


def pauli_factorization_check(
    channel: PureState,
    assignment: RoleAssignment,
    theta: float,
    tol: float = 1e-10,
) -> FactorizationReport:
    """Verify all 32 outcome operators factor through the two base ones.

    Compares the projection-built operator for every outcome against the
    base operator times the local correction factors, entrywise, in the
    action layout.  Holds identically for any channel; this check guards
    the Bell dictionary and factor pairing.
    """
    max_dev = 0.0
    for charlie_outcome in (1, 2):
        base = transformation_operator(
            channel, assignment, 1, 1, charlie_outcome, theta
        ).action_matrix
        for i in (1, 2, 3, 4):
            for j in (1, 2, 3, 4):
                direct = transformation_operator(
                    channel, assignment, i, j, charlie_outcome, theta
                ).action_matrix
                product = base @ np.kron(PAULI_FACTORS[i], PAULI_FACTORS[j])
                max_dev = max(max_dev, float(np.max(np.abs(direct - product))))
    return FactorizationReport(max_dev <= tol, max_dev)


@dataclass(frozen=True, eq=False)
class TeleportationRecord:
    """One measurement outcome of a full protocol run."""

    outcome: tuple[int, int, int]
    probability: float
    bob_corrected: PureState
    fidelity: float
    unrecoverable: bool = False

    def as_dict(self) -> dict:
        doc = {
            "outcome": list(self.outcome),
            "probability": self.probability,
            "fidelity": self.fidelity,
        }
        if self.unrecoverable:
            doc["unrecoverable"] = True
        return doc


# relative singular-value cutoff below which an operator cannot be inverted
_SINGULAR_RTOL = 1e-12


def simulate(
    channel: PureState,
    assignment: RoleAssignment,
    theta: float,
    input_state: PureState,
    correction: str = "adjoint",
) -> list[TeleportationRecord]:
    """Brute-force the full protocol over all 32 measurement outcomes.

    Builds the seven-qubit joint state, projects every combination of
    the two Bell outcomes and Charlie's outcome, and applies the
    correction (the base-operator route) to Bob's residual.  Records are
    ordered by (bell_first, bell_second, charlie_outcome).  Outcome
    probabilities always sum to 1; for a faithful channel every outcome
    has probability 1/32 and fidelity 1.

    ``correction`` is "adjoint" (default; always defined) or "inverse"
    (marks the record unrecoverable when the operator is singular, in
    which case the residual is kept uncorrected).
    """
    if input_state.num_qubits != 2:
        raise ValueError("the input must be a two-qubit state")
    if abs(input_state.norm**2 - 1.0) > 1e-6:
        raise ValueError("the input state must be normalized")
    if correction not in ("adjoint", "inverse"):
        raise ValueError(f"correction must be 'adjoint' or 'inverse', got {correction!r}")
    arranged = _arranged(channel, assignment)
    # joint qubits: 1-2 unknown pair, 3-4 Alice's channel pair,
    # 5-6 Bob's pair, 7 Charlie
    joint = tensor(input_state, arranged)
    records = []
    for i in (1, 2, 3, 4):
        for j in (1, 2, 3, 4):
            bell_bras = tensor(bell_state(i), bell_state(j))
            for n in (1, 2):
                bra = tensor(bell_bras, charlie_state(theta, n))
                residual = project_subsystem(joint, bra, (1, 3, 2, 4, 7))
                probability = float(np.vdot(residual.amplitudes, residual.amplitudes).real)
                op = transformation_operator(channel, assignment, i, j, n, theta)
                matrix = op.action_matrix
                unrecoverable = False
                if correction == "adjoint":
                    corrected = matrix.conj().T @ residual.amplitudes
                else:
                    smallest = float(np.linalg.svd(matrix, compute_uv=False)[-1])
                    largest = float(np.linalg.norm(matrix, 2))
                    if smallest <= _SINGULAR_RTOL * max(largest, 1.0):
                        unrecoverable = True
                        corrected = np.array(residual.amplitudes)
                    else:
                        corrected = np.linalg.solve(matrix, residual.amplitudes)
                norm = float(np.linalg.norm(corrected))
                if norm > 0.0:
                    corrected = corrected / norm
                bob = PureState(2, corrected)
                fidelity = (
                    abs(complex(np.vdot(input_state.amplitudes, bob.amplitudes))) ** 2
                    if norm > 0.0
                    else 0.0
                )
                records.append(
                    TeleportationRecord(
                        outcome=(i, j, n),
                        probability=probability,
                        bob_corrected=bob,
                        fidelity=fidelity,
                        unrecoverable=unrecoverable,
                    )
                )
    return records
