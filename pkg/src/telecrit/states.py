"""n-qubit pure states as dense complex amplitude vectors.

Conventions, binding for the whole package:

* Qubit labels are 1-based: a state on n qubits has qubits 1..n.
* Amplitude index k encodes the qubit values as a big-endian bit string
  in ascending label order, so qubit 1 is the most significant bit.  For
  five qubits, index k has bit layout (q1 q2 q3 q4 q5) with q1 = k >> 4
  and q5 = k & 1.
* Values are immutable after construction and every operation returns a
  new state, so states can be shared freely.

States built by :func:`make_state`, the catalog, :func:`tensor` and
:func:`permute_qubits` are unit norm.  :func:`project_subsystem` returns
an *unnormalized* residual whose squared norm is the probability of the
projected measurement outcome.
"""

from __future__ import annotations

import json
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PureState",
    "StateFileError",
    "CATALOG_NAMES",
    "FIVE_QUBIT_CATALOG",
    "NORM_TOL",
    "STRICT_NORM_TOL",
    "make_state",
    "named_state",
    "tensor",
    "permute_qubits",
    "inner_product",
    "project_subsystem",
    "load_state_file",
    "save_state_json",
    "save_state_text",
]

# squared-norm drift below which input counts as already normalized
NORM_TOL = 1e-12
# squared-norm drift beyond which file / CLI input is rejected as corrupt
# rather than merely rounded
STRICT_NORM_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class PureState:
    """Dense state vector on ``num_qubits`` qubits.

    ``amplitudes`` is a read-only complex128 array of length
    2**num_qubits, indexed by the big-endian convention above.
    ``renormalized`` records whether construction had to rescale the
    input by more than ``NORM_TOL`` (squared norm).
    """

    num_qubits: int
    amplitudes: np.ndarray
    renormalized: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.num_qubits, int) or self.num_qubits < 1:
            raise ValueError("num_qubits must be a positive integer")
        amps = np.array(self.amplitudes, dtype=np.complex128)
        if amps.shape != (2**self.num_qubits,):
            raise ValueError(
                f"expected {2**self.num_qubits} amplitudes for "
                f"{self.num_qubits} qubits, got shape {amps.shape}"
            )
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def amplitude(self, bits: str) -> complex:
        """Amplitude of the computational basis ket given as a bit string."""
        if len(bits) != self.num_qubits or set(bits) - {"0", "1"}:
            raise ValueError(f"need a {self.num_qubits}-bit string, got {bits!r}")
        return complex(self.amplitudes[int(bits, 2)])


def make_state(num_qubits: int, amplitudes: Sequence[complex]) -> PureState:
    """Build a normalized state from raw amplitudes.

    The vector is scaled to unit norm; ``renormalized`` on the result
    records whether that moved the squared norm by more than NORM_TOL.
    Raises ValueError for a length mismatch, non-finite entries, or the
    zero vector.
    """
    amps = np.asarray(amplitudes, dtype=np.complex128)
    if amps.shape != (2**num_qubits,):
        raise ValueError(
            f"expected {2**num_qubits} amplitudes for {num_qubits} qubits, "
            f"got shape {amps.shape}"
        )
    if not np.all(np.isfinite(amps)):
        raise ValueError("amplitudes must be finite")
    norm_sq = float(np.vdot(amps, amps).real)
    if norm_sq == 0.0:
        raise ValueError("zero vector cannot be normalized")
    return PureState(
        num_qubits,
        amps / math.sqrt(norm_sq),
        renormalized=abs(norm_sq - 1.0) > NORM_TOL,
    )


# Five-qubit catalog entries, as {index: sign} over the big-endian basis.
# man_m5: sixteen kets of weight 1/4; brown: eight kets of weight 1/(2*sqrt(2)).
_MAN_M5_SIGNS = {
    0: 1, 1: 1, 6: 1, 7: -1,
    10: 1, 11: 1, 12: -1, 13: 1,
    18: -1, 19: 1, 20: 1, 21: 1,
    24: 1, 25: -1, 30: 1, 31: 1,
}
_BROWN_SIGNS = {5: 1, 6: -1, 8: 1, 11: -1, 17: 1, 18: 1, 28: 1, 31: 1}

CATALOG_NAMES = (
    "man_m5",
    "brown",
    "ghz5",
    "bell_phi_plus",
    "bell_phi_minus",
    "bell_psi_plus",
    "bell_psi_minus",
    "product_zero_n",
)

# the five-qubit catalog entries, i.e. valid channels for the protocol
FIVE_QUBIT_CATALOG = ("man_m5", "brown", "ghz5", "product_zero_n")


def _sparse(num_qubits: int, signs: Mapping[int, int], weight: float) -> PureState:
    amps = np.zeros(2**num_qubits, dtype=np.complex128)
    for index, sign in signs.items():
        amps[index] = sign * weight
    return make_state(num_qubits, amps)


def named_state(name: str, num_qubits: int | None = None) -> PureState:
    """Return a catalog state by name.

    ``num_qubits`` applies only to the parameterized all-zeros product
    state ``product_zero_n`` (default 5).  Bell states follow the
    standard naming: phi = (|00> +/- |11>)/sqrt(2),
    psi = (|01> +/- |10>)/sqrt(2).
    """
    if name == "man_m5":
        return _sparse(5, _MAN_M5_SIGNS, 0.25)
    if name == "brown":
        return _sparse(5, _BROWN_SIGNS, 1.0 / math.sqrt(8.0))
    if name == "ghz5":
        return _sparse(5, {0: 1, 31: 1}, 1.0 / math.sqrt(2.0))
    if name == "bell_phi_plus":
        return _sparse(2, {0: 1, 3: 1}, 1.0 / math.sqrt(2.0))
    if name == "bell_phi_minus":
        return _sparse(2, {0: 1, 3: -1}, 1.0 / math.sqrt(2.0))
    if name == "bell_psi_plus":
        return _sparse(2, {1: 1, 2: 1}, 1.0 / math.sqrt(2.0))
    if name == "bell_psi_minus":
        return _sparse(2, {1: 1, 2: -1}, 1.0 / math.sqrt(2.0))
    if name == "product_zero_n":
        n = 5 if num_qubits is None else num_qubits
        if n < 1:
            raise ValueError("product_zero_n needs at least one qubit")
        return _sparse(n, {0: 1}, 1.0)
    raise ValueError(f"unknown state {name!r}; catalog: {', '.join(CATALOG_NAMES)}")


def tensor(a: PureState, b: PureState) -> PureState:
    """Tensor product; a's qubits keep labels 1..n_a, b's become n_a+1.."""
    return PureState(
        a.num_qubits + b.num_qubits, np.kron(a.amplitudes, b.amplitudes)
    )


def permute_qubits(s: PureState, perm: Mapping[int, int]) -> PureState:
    """Relabel qubits: the bit of old qubit q moves to new label perm[q].

    ``perm`` must be a bijection on 1..n.  The amplitude at the
    bit-permuted index equals the original amplitude.
    """
    n = s.num_qubits
    if sorted(perm.keys()) != list(range(1, n + 1)) or sorted(
        perm.values()
    ) != list(range(1, n + 1)):
        raise ValueError(f"perm must be a bijection on 1..{n}, got {dict(perm)!r}")
    # new tensor axis (new - 1) is fed from old axis (old - 1)
    axes = [0] * n
    for old, new in perm.items():
        axes[new - 1] = old - 1
    shuffled = s.amplitudes.reshape([2] * n).transpose(axes)
    return PureState(n, shuffled.reshape(-1))


def inner_product(a: PureState, b: PureState) -> complex:
    """<a|b> with the first argument conjugated."""
    if a.num_qubits != b.num_qubits:
        raise ValueError("states must have the same number of qubits")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def project_subsystem(
    s: PureState, bra: PureState, labels: Sequence[int]
) -> PureState:
    """Apply <bra| on the given qubit labels of s; return the residual.

    ``labels[t]`` is the qubit of ``s`` measured by qubit t+1 of ``bra``;
    the residual lives on the remaining qubits in ascending label order
    and is *not* normalized: its squared norm is the probability of the
    outcome ``bra``.  ``bra`` is assumed normalized.
    """
    n, m = s.num_qubits, bra.num_qubits
    labels = list(labels)
    if len(labels) != m:
        raise ValueError(f"bra covers {m} qubits but {len(labels)} labels given")
    if len(set(labels)) != m or not all(1 <= q <= n for q in labels):
        raise ValueError(f"labels must be distinct and within 1..{n}")
    if m >= n:
        raise ValueError("bra must leave at least one unmeasured qubit")
    keep = [q for q in range(1, n + 1) if q not in set(labels)]
    axes = [q - 1 for q in labels] + [q - 1 for q in keep]
    grid = s.amplitudes.reshape([2] * n).transpose(axes).reshape(2**m, -1)
    return PureState(n - m, bra.amplitudes.conj() @ grid)


class StateFileError(ValueError):
    """Raised when a state file is unreadable, malformed, or corrupt."""


def _reject_norm_drift(amps: np.ndarray, path: str) -> None:
    norm_sq = float(np.vdot(amps, amps).real)
    if abs(norm_sq - 1.0) > STRICT_NORM_TOL:
        raise StateFileError(
            f"{path}: squared norm {norm_sq!r} deviates from 1 by more than "
            f"{STRICT_NORM_TOL}; refusing to renormalize file input"
        )


def _load_json_text(text: str, path: str) -> PureState:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFileError(f"{path}:{exc.lineno}: invalid JSON: {exc.msg}") from exc
    if not isinstance(doc, dict) or "num_qubits" not in doc or "amplitudes" not in doc:
        raise StateFileError(
            f"{path}:1: expected an object with num_qubits and amplitudes"
        )
    n = doc["num_qubits"]
    pairs = doc["amplitudes"]
    if not isinstance(n, int) or n < 1:
        raise StateFileError(f"{path}:1: num_qubits must be a positive integer")
    if not isinstance(pairs, list) or len(pairs) != 2**n:
        raise StateFileError(
            f"{path}:1: amplitudes must list {2**n} [re, im] pairs for "
            f"num_qubits={n}"
        )
    amps = np.zeros(2**n, dtype=np.complex128)
    for k, pair in enumerate(pairs):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) for x in pair)
        ):
            raise StateFileError(
                f"{path}:1: amplitude {k} must be an [re, im] pair, got {pair!r}"
            )
        amps[k] = complex(pair[0], pair[1])
    _reject_norm_drift(amps, path)
    return make_state(n, amps)


def _load_plain_text(text: str, path: str) -> PureState:
    entries: dict[int, complex] = {}
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise StateFileError(
                f"{path}:{lineno}: expected 'bitstring re im', got {raw!r}"
            )
        bits, re_s, im_s = parts
        if set(bits) - {"0", "1"}:
            raise StateFileError(f"{path}:{lineno}: bad bit string {bits!r}")
        if width is None:
            width = len(bits)
        elif len(bits) != width:
            raise StateFileError(
                f"{path}:{lineno}: bit string {bits!r} has length {len(bits)}, "
                f"expected {width}"
            )
        try:
            value = complex(float(re_s), float(im_s))
        except ValueError as exc:
            raise StateFileError(
                f"{path}:{lineno}: bad amplitude {re_s!r} {im_s!r}"
            ) from exc
        index = int(bits, 2)
        if index in entries:
            raise StateFileError(f"{path}:{lineno}: duplicate basis state {bits!r}")
        entries[index] = value
    if width is None:
        raise StateFileError(f"{path}:1: no amplitudes found")
    amps = np.zeros(2**width, dtype=np.complex128)
    for index, value in entries.items():
        amps[index] = value
    _reject_norm_drift(amps, path)
    return make_state(width, amps)


def load_state_file(path: str) -> PureState:
    """Load a state from a JSON or plain-text amplitude file.

    JSON form: {"num_qubits": n, "amplitudes": [[re, im], ...]} with
    2**n entries.  Text form: one 'bitstring re im' line per nonzero
    amplitude; blank lines and '#' comments are ignored.  Input whose
    squared norm deviates from 1 by more than STRICT_NORM_TOL is
    rejected; smaller round-off is silently renormalized.
    """
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise StateFileError(f"{path}: {exc.strerror or exc}") from exc
    if text.lstrip().startswith("{"):
        return _load_json_text(text, path)
    return _load_plain_text(text, path)


def save_state_json(s: PureState, path: str) -> None:
    doc = {
        "num_qubits": s.num_qubits,
        "amplitudes": [[z.real, z.imag] for z in s.amplitudes],
    }
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(doc, handle)
        handle.write("\n")


def save_state_text(s: PureState, path: str) -> None:
    lines = []
    for index, raw in enumerate(s.amplitudes):
        if raw != 0:
            bits = format(index, f"0{s.num_qubits}b")
            z = complex(raw)  # builtin floats, so repr round-trips
            lines.append(f"{bits} {z.real!r} {z.imag!r}")
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")
