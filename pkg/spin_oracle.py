# SPDX-License-Identifier: MIT
# Copyright (c) 2025-2026 alfkit contributors

"""Stipsicz spin criterion for closed-fiber Lefschetz fibrations.

LF(Sigma_g, phi) is not spin iff some vanishing cycles v_1..v_k sum (mod 2) to
another vanishing cycle v with k + sum_{i<j} v_i.v_j = 0 (mod 2).

Both algorithms below search the equivalent zero-sum form: a nonempty set T of
letter positions whose classes sum to 0 mod 2 with |T| + sum_{i<j in T} v_i.v_j
odd. Taking v = the last position of T recovers the (S, v) form, and moving v
across the sum flips the parity by exactly one since <v, v> = 0.

- brute force enumerates all 2^k position subsets (numpy, bit-packed classes);
- the linear method asks for a quadratic refinement q of the mod-2 form on the
  span of the classes with q(v_i) = 1 for every letter. It exists iff the
  fibration is spin, and a GF(2) inconsistency certificate is a zero-sum set T.

Letter positions are 1-based throughout, matching the order of the word.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from alf_core import ALF
from config import BRUTE_FORCE_BOUND, BRUTE_FORCE_MAX_RANK, SENTRY_DSN
from homology_algebra import HClass, gf2_solve, intersection, pack_mod2
from surface_model import AlfInputError, InternalInconsistencyError

METHODS = ("brute", "linear", "both")


def _report_internal_error(context: str, exc: Optional[BaseException] = None) -> None:
    """Route bug-trap details to stderr/Sentry only."""
    if exc is not None:
        print(f"[ERROR] {context}: {type(exc).__name__}: {exc}", file=sys.stderr)
    else:
        print(f"[ERROR] {context}", file=sys.stderr)
    if SENTRY_DSN and exc is not None:
        import sentry_sdk

        sentry_sdk.capture_exception(exc)


@dataclass(frozen=True)
class SpinWitness:
    """Positions S summing (mod 2) to the class of position ``target``."""

    subset: Tuple[int, ...]
    target: int
    parity: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {"subset": list(self.subset), "target": self.target}

    @classmethod
    def from_dict(cls, payload: Mapping[str, Any]) -> "SpinWitness":
        # A serialised witness is a valid one, so its parity is 0.
        return cls(tuple(int(i) for i in payload["subset"]), int(payload["target"]), 0)


@dataclass(frozen=True)
class SpinStatus:
    spin: bool
    witness: Optional[SpinWitness]
    method: str

    def __post_init__(self):
        if self.method not in METHODS:
            raise AlfInputError(f"unknown spin method {self.method!r}")
        if self.spin != (self.witness is None):
            raise AlfInputError("a spin verdict carries no witness, a non-spin verdict needs one")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "spin": self.spin,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "method": self.method,
        }

    @classmethod
    def from_dict(cls, payload: Mapping[str, Any]) -> "SpinStatus":
        witness = payload.get("witness")
        return cls(
            spin=bool(payload["spin"]),
            witness=None if witness is None else SpinWitness.from_dict(witness),
            method=str(payload["method"]),
        )


def stipsicz_parity(subset: Sequence[int], classes: Sequence[HClass]) -> int:
    """|S| + sum_{i<j in S} <v_i, v_j> mod 2, S given as 1-based positions."""
    positions = list(subset)
    if len(set(positions)) != len(positions):
        raise AlfInputError(f"letter positions must be distinct, got {positions}")
    for p in positions:
        if not 1 <= p <= len(classes):
            raise AlfInputError(f"letter position {p} is out of range 1..{len(classes)}")
    total = len(positions)
    for a in range(len(positions)):
        for b in range(a + 1, len(positions)):
            total += intersection(classes[positions[a] - 1], classes[positions[b] - 1])
    return total % 2


def validate_witness(witness: SpinWitness, classes: Sequence[HClass]) -> bool:
    """Re-check a witness from scratch: class-sum equality and parity 0."""
    k = len(classes)
    if not 1 <= witness.target <= k or witness.target in witness.subset:
        return False
    if len(set(witness.subset)) != len(witness.subset):
        return False
    if any(not 1 <= p <= k for p in witness.subset):
        return False
    target = classes[witness.target - 1].mod2()
    total = [0] * len(target)
    for p in witness.subset:
        total = [(a + b) % 2 for a, b in zip(total, classes[p - 1].mod2())]
    if tuple(total) != target:
        return False
    return witness.parity == 0 and stipsicz_parity(witness.subset, classes) == 0


def _require_closed(alf: ALF) -> None:
    if not alf.fiber.is_closed:
        raise AlfInputError(
            f"the spin criterion needs a closed fiber, got {alf.fiber.label}; double it first"
        )


def _witness_from_zero_sum(positions: Sequence[int], classes: Sequence[HClass]) -> SpinWitness:
    ordered = sorted(positions)
    subset, target = tuple(ordered[:-1]), ordered[-1]
    return SpinWitness(subset, target, stipsicz_parity(subset, classes))


def not_spin_bruteforce(alf: ALF, bound: Optional[int] = None) -> SpinStatus:
    """Enumerate every position subset.

    The reported witness is the least zero-sum set: fewest letters, then
    lexicographically smallest positions.
    """
    _require_closed(alf)
    bound = BRUTE_FORCE_BOUND if bound is None else bound
    if alf.k > bound:
        raise AlfInputError(f"{alf.k} letters exceed the brute-force bound of {bound}")
    rank = alf.fiber.h1_rank
    if rank > BRUTE_FORCE_MAX_RANK:
        raise AlfInputError(f"brute force packs classes into 64 bits, H_1 rank is {rank}")

    classes = alf.classes()
    masks = [pack_mod2(c.coords) for c in classes]
    alpha = sum(1 << (2 * i) for i in range(rank // 2))

    sums = np.zeros(1 << alf.k, dtype=np.uint64)
    parity = np.zeros(1 << alf.k, dtype=np.uint8)
    for j, v in enumerate(masks):
        half = 1 << j
        swapped = np.uint64(((v & alpha) << 1) | ((v >> 1) & alpha))
        cross = (np.bitwise_count(sums[:half] & swapped) & 1).astype(np.uint8)
        sums[half:2 * half] = sums[:half] ^ np.uint64(v)
        parity[half:2 * half] = parity[:half] ^ np.uint8(1) ^ cross

    hits = np.nonzero((sums == 0) & (parity == 1))[0]
    if hits.size == 0:
        return SpinStatus(True, None, "brute")

    sizes = np.bitwise_count(hits.astype(np.uint64))
    fewest = hits[sizes == sizes.min()]
    best = min(
        tuple(j + 1 for j in range(alf.k) if (int(mask) >> j) & 1) for mask in fewest
    )
    return SpinStatus(False, _witness_from_zero_sum(best, classes), "brute")


def _span_basis(vectors: List[Tuple[int, ...]], rank: int) -> List[Tuple[int, ...]]:
    basis: List[Tuple[int, ...]] = []
    for v in vectors:
        if not any(v):
            continue
        if basis and gf2_solve(_columns(basis, rank), v).consistent:
            continue
        basis.append(v)
    return basis


def _columns(basis: List[Tuple[int, ...]], rank: int) -> np.ndarray:
    return np.array(basis, dtype=np.int64).reshape(len(basis), rank).T


def not_spin_linear(alf: ALF) -> SpinStatus:
    """Solve for a quadratic refinement with q = 1 on every vanishing cycle."""
    _require_closed(alf)
    classes = alf.classes()
    rank = alf.fiber.h1_rank
    vectors = [c.mod2() for c in classes]
    basis = _span_basis(vectors, rank)
    basis_classes = [HClass(b, alf.fiber) for b in basis]

    # Unknowns are q(b_j). With v = sum_{j in E} b_j,
    # q(v) = sum_{j in E} q(b_j) + sum_{j<l in E} <b_j, b_l>.
    A = np.zeros((len(classes), len(basis)), dtype=np.int64)
    rhs = np.ones(len(classes), dtype=np.int64)
    for i, v in enumerate(vectors):
        if not any(v):
            continue
        coords = gf2_solve(_columns(basis, rank), v).solution
        support = [j for j, bit in enumerate(coords) if bit]
        A[i, support] = 1
        for a in range(len(support)):
            for b in range(a + 1, len(support)):
                rhs[i] += intersection(basis_classes[support[a]], basis_classes[support[b]])
    result = gf2_solve(A, rhs % 2)
    if result.consistent:
        return SpinStatus(True, None, "linear")
    positions = [row + 1 for row in result.certificate]
    return SpinStatus(False, _witness_from_zero_sum(positions, classes), "linear")


def spin_status(alf: ALF, bound: Optional[int] = None) -> SpinStatus:
    """Linear method always; brute force too when k is within the bound.

    Disagreement, or a witness that fails re-validation, raises
    InternalInconsistencyError.
    """
    bound = BRUTE_FORCE_BOUND if bound is None else bound
    classes = alf.classes()
    linear = not_spin_linear(alf)
    _check_witness(linear, classes)
    if alf.k > bound or alf.fiber.h1_rank > BRUTE_FORCE_MAX_RANK:
        return linear

    brute = not_spin_bruteforce(alf, bound)
    _check_witness(brute, classes)
    if brute.spin != linear.spin:
        exc = InternalInconsistencyError(
            f"spin oracles disagree on {alf.fiber.label} word {list(alf.word.names)}: "
            f"brute force says spin={brute.spin}, linear says spin={linear.spin}"
        )
        _report_internal_error("spin oracle mismatch", exc)
        raise exc
    return SpinStatus(brute.spin, brute.witness, "both")


def _check_witness(status: SpinStatus, classes: Sequence[HClass]) -> None:
    if status.witness is None or validate_witness(status.witness, classes):
        return
    exc = InternalInconsistencyError(
        f"{status.method} witness {status.witness.to_dict()} does not re-validate"
    )
    _report_internal_error("invalid spin witness", exc)
    raise exc
