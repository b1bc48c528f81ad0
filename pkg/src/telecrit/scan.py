"""Enumerate role assignments and classify the basis angles that work.

For a fixed channel and role assignment the combined defect

    d(theta) = max(defect of base operator 1, defect of base operator 2)

is a smooth pi-periodic function of Charlie's basis angle.  A channel
either works for every theta (d identically ~0), for finitely many
angles (isolated zeros of d), or for none.  The classifier samples d on
a uniform grid over [0, pi) and refines each local minimum by
golden-section search; this is a numerical certificate, not a symbolic
proof, so grid density and refinement tolerance are fixed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

import numpy as np

from .entanglement import partial_trace, purity
from .states import PureState
from .teleport import RoleAssignment, _arranged, _base_tableau, unitarity_defect

__all__ = [
    "GRID_POINTS",
    "KIND_ALL",
    "KIND_DISCRETE",
    "KIND_NONE",
    "ThetaClassification",
    "ScanEntry",
    "ScanReport",
    "enumerate_assignments",
    "classify_theta",
    "optimal_theta",
    "scan",
]

GRID_POINTS = 720
# golden-section refinement width in theta
REFINE_XTOL = 1e-12

KIND_ALL = "all_theta"
KIND_DISCRETE = "discrete_theta"
KIND_NONE = "none"

_KIND_ORDER = {KIND_ALL: 0, KIND_DISCRETE: 1, KIND_NONE: 2}

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class ThetaClassification:
    """How a channel/assignment pair depends on Charlie's basis angle.

    ``roots`` is present (sorted, canonicalized into [0, pi)) only for
    kind discrete_theta.  ``min_defect``/``argmin_theta`` are always
    reported; for all_theta the argmin is 0 by convention.
    """

    kind: str
    roots: tuple[float, ...] | None
    min_defect: float
    argmin_theta: float


@dataclass(frozen=True)
class ScanEntry:
    assignment: RoleAssignment
    classification: ThetaClassification
    purity_alice: float
    purity_bob: float

    def as_dict(self) -> dict:
        cls = self.classification
        return {
            "alice": list(self.assignment.alice),
            "bob": list(self.assignment.bob),
            "charlie": self.assignment.charlie,
            "kind": cls.kind,
            "roots": None if cls.roots is None else list(cls.roots),
            "min_defect": cls.min_defect,
            "argmin_theta": cls.argmin_theta,
            "purity_alice": self.purity_alice,
            "purity_bob": self.purity_bob,
        }


@dataclass(frozen=True)
class ScanReport:
    entries: tuple[ScanEntry, ...]

    def as_dicts(self) -> list[dict]:
        return [entry.as_dict() for entry in self.entries]


def enumerate_assignments() -> list[RoleAssignment]:
    """All 30 role assignments, ascending within roles, lexicographic order."""
    out = []
    for alice in combinations(range(1, 6), 2):
        rest = [q for q in range(1, 6) if q not in alice]
        for bob in combinations(rest, 2):
            (charlie,) = (q for q in rest if q not in bob)
            out.append(RoleAssignment(alice, bob, charlie))
    return out


def _defect_profile(
    channel: PureState, assignment: RoleAssignment
) -> Callable[[float], float]:
    grid = _arranged(channel, assignment).amplitudes.reshape([2] * 5)

    def profile(theta: float) -> float:
        return max(
            unitarity_defect(_base_tableau(grid, 1, theta)),
            unitarity_defect(_base_tableau(grid, 2, theta)),
        )

    return profile


def _golden_min(
    fn: Callable[[float], float], lo: float, hi: float, xtol: float
) -> tuple[float, float]:
    c = hi - _INVPHI * (hi - lo)
    d = lo + _INVPHI * (hi - lo)
    fc, fd = fn(c), fn(d)
    while hi - lo > xtol:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - _INVPHI * (hi - lo)
            fc = fn(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INVPHI * (hi - lo)
            fd = fn(d)
    mid = 0.5 * (lo + hi)
    return mid, fn(mid)


def _minima_runs(flags: np.ndarray) -> list[tuple[int, int]]:
    """Cyclically-consecutive runs of True, as (start, end) index pairs."""
    count = len(flags)
    idxs = np.flatnonzero(flags)
    if len(idxs) == 0:
        return []
    if len(idxs) == count:
        return [(0, count - 1)]
    runs = []
    start = prev = int(idxs[0])
    for k in idxs[1:]:
        k = int(k)
        if k == prev + 1:
            prev = k
        else:
            runs.append((start, prev))
            start = prev = k
    runs.append((start, prev))
    # merge a run ending at the last grid point into one starting at 0
    if len(runs) > 1 and runs[0][0] == 0 and runs[-1][1] == count - 1:
        first, last = runs[0], runs.pop()
        runs[0] = (last[0] - count, first[1])
    return runs


def _canonical_root(theta: float) -> float:
    root = math.fmod(theta, math.pi)
    if root < 0.0:
        root += math.pi
    if math.pi - root < 1e-9:
        root = 0.0
    return abs(root)  # fold -0.0


def classify_theta(
    channel: PureState, assignment: RoleAssignment, tol: float = 1e-10
) -> ThetaClassification:
    """Classify the combined-defect profile over theta in [0, pi).

    all_theta: every grid point passes.  discrete_theta: refined local
    minima reach defect <= tol only at isolated angles.  none: no angle
    passes.  Root locations are refined to REFINE_XTOL and deduplicated
    modulo pi.
    """
    profile = _defect_profile(channel, assignment)
    step = math.pi / GRID_POINTS
    values = np.array([profile(k * step) for k in range(GRID_POINTS)])
    if float(values.max()) <= tol:
        return ThetaClassification(KIND_ALL, None, float(values[0]), 0.0)

    best_defect = float(values.min())
    best_theta = float(np.argmin(values)) * step
    flags = (values <= np.roll(values, 1)) & (values <= np.roll(values, -1))
    roots = []
    for start, end in _minima_runs(flags):
        lo, hi = (start - 1) * step, (end + 1) * step
        theta_min, defect_min = _golden_min(profile, lo, hi, REFINE_XTOL)
        if defect_min < best_defect:
            best_defect, best_theta = defect_min, _canonical_root(theta_min)
        if defect_min <= tol:
            roots.append(_canonical_root(theta_min))

    deduped: list[float] = []
    for root in sorted(roots):
        if all(
            min(abs(root - other), math.pi - abs(root - other)) > 1e-6
            for other in deduped
        ):
            deduped.append(root)

    if deduped:
        return ThetaClassification(
            KIND_DISCRETE, tuple(deduped), best_defect, best_theta
        )
    return ThetaClassification(KIND_NONE, None, best_defect, best_theta)


def optimal_theta(
    channel: PureState, assignment: RoleAssignment, tol: float = 1e-10
) -> tuple[float, float]:
    """Basis angle minimizing the combined defect, with that defect.

    Returns (0.0, defect at 0) when every angle passes.
    """
    cls = classify_theta(channel, assignment, tol)
    return cls.argmin_theta, cls.min_defect


def scan(channel: PureState, tol: float = 1e-10) -> ScanReport:
    """Classify every role assignment of a five-qubit channel.

    Entries are sorted working-first: all_theta, then discrete_theta,
    then none; ties by min_defect, then by assignment order.
    """
    entries = []
    for assignment in enumerate_assignments():
        cls = classify_theta(channel, assignment, tol)
        entries.append(
            ScanEntry(
                assignment=assignment,
                classification=cls,
                purity_alice=purity(partial_trace(channel, assignment.alice)),
                purity_bob=purity(partial_trace(channel, assignment.bob)),
            )
        )
    entries.sort(
        key=lambda e: (
            _KIND_ORDER[e.classification.kind],
            e.classification.min_defect,
            e.assignment.alice,
            e.assignment.bob,
        )
    )
    return ScanReport(tuple(entries))
