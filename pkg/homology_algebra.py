# SPDX-License-Identifier: MIT
# Copyright (c) 2025-2026 alfkit contributors

"""
Exact linear algebra on H_1 of the fiber, over Z and GF(2).

Sign convention, used everywhere: <alpha_i, beta_i> = +1 and a positive Dehn
twist along c acts by x -> x + <x, c> c (a negative twist subtracts). Words act
leftmost letter first, so the matrix of "w1 w2" is T(w2) @ T(w1).

Integer matrices are numpy object arrays of Python ints, so nothing overflows
however long the word. GF(2) work uses uint8 arrays or int bit masks (bit 2i
is alpha_{i+1}, bit 2i+1 is beta_{i+1}).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from config import CLEAN_MAX_LEN
from surface_model import AlfInputError, HClass, Letter, SurfaceFiber, TwistWord

if TYPE_CHECKING:
    from surface_model import CurveSystem

__all__ = [
    "ActionMatrix",
    "GF2Solution",
    "HClass",
    "IntersectionForm",
    "SearchBoundExceeded",
    "SmithForm",
    "clean_class",
    "cokernel",
    "gf2_solve",
    "identity_matrix",
    "intersection",
    "pack_mod2",
    "pairing_mod2",
    "smith_normal_form",
    "transvection_matrix",
    "twist_action",
    "unpack_mod2",
    "word_action",
]


class SearchBoundExceeded(AlfInputError):
    """clean_class found no word within the length bound."""


# --- integer matrix helpers -------------------------------------------------


def _as_int_matrix(M) -> np.ndarray:
    A = np.asarray(M)
    if A.ndim == 1 and A.size == 0:
        A = A.reshape(0, 0)
    if A.ndim != 2:
        raise AlfInputError(f"expected a 2-D integer matrix, got shape {A.shape}")
    out = np.empty(A.shape, dtype=object)
    for idx in np.ndindex(A.shape):
        out[idx] = int(A[idx])
    return out


def identity_matrix(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def _column(x: HClass) -> np.ndarray:
    return np.array(x.coords, dtype=object)


# --- intersection form ------------------------------------------------------


@dataclass(frozen=True)
class IntersectionForm:
    """Block-diagonal skew form, one [[0, 1], [-1, 0]] block per handle."""

    fiber: SurfaceFiber

    def matrix(self) -> np.ndarray:
        self.fiber.require_homology_model()
        J = np.zeros((self.fiber.h1_rank, self.fiber.h1_rank), dtype=object)
        for i in range(self.fiber.genus):
            J[2 * i, 2 * i + 1] = 1
            J[2 * i + 1, 2 * i] = -1
        return J

    def determinant(self) -> int:
        # Each block has determinant 1.
        return 1


def intersection(x: HClass, y: HClass) -> int:
    """Algebraic intersection number x^T J y."""
    if x.fiber != y.fiber:
        raise AlfInputError(f"classes live on {x.fiber.label} and {y.fiber.label}")
    x.fiber.require_homology_model()
    a, b = x.coords, y.coords
    return sum(a[2 * i] * b[2 * i + 1] - a[2 * i + 1] * b[2 * i] for i in range(x.fiber.genus))


def twist_action(c: HClass, chirality: int, x: HClass) -> HClass:
    """Picard-Lefschetz transvection: x + chirality * <x, c> * c."""
    if chirality not in (1, -1):
        raise AlfInputError(f"chirality must be +1 or -1, got {chirality}")
    return x + c.scaled(chirality * intersection(x, c))


def transvection_matrix(c: HClass, chirality: int) -> np.ndarray:
    """Matrix of twist_action(c, chirality, -): I + chirality * c (Jc)^T."""
    J = IntersectionForm(c.fiber).matrix()
    col = _column(c)
    return identity_matrix(c.fiber.h1_rank) + chirality * np.outer(col, J @ col)


# --- word action ------------------------------------------------------------


@dataclass(frozen=True)
class ActionMatrix:
    """phi_*: the action of a monodromy word on H_1(fiber)."""

    entries: Tuple[Tuple[int, ...], ...]
    fiber: SurfaceFiber

    @classmethod
    def from_array(cls, M: np.ndarray, fiber: SurfaceFiber) -> "ActionMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in M.tolist()), fiber)

    def as_array(self) -> np.ndarray:
        if not self.entries:
            return np.zeros((0, 0), dtype=object)
        return _as_int_matrix(self.entries)

    def apply(self, x: HClass) -> HClass:
        if x.fiber != self.fiber:
            raise AlfInputError(f"matrix acts on {self.fiber.label}, class lives on {x.fiber.label}")
        return HClass(tuple(self.as_array() @ _column(x)), self.fiber)

    def preserves_form(self) -> bool:
        M = self.as_array()
        J = IntersectionForm(self.fiber).matrix()
        return bool(np.array_equal(M.T @ J @ M, J))

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.as_array(), identity_matrix(self.fiber.h1_rank)))

    def mod2(self) -> np.ndarray:
        return (self.as_array() % 2).astype(np.uint8)

    def to_list(self) -> List[List[int]]:
        return [list(row) for row in self.entries]


def word_action(word: TwistWord, system: "CurveSystem") -> ActionMatrix:
    """Composite transvection matrix of ``word`` over ``system``'s curves."""
    system.fiber.require_homology_model()
    M = identity_matrix(system.fiber.h1_rank)
    for letter in word:
        M = transvection_matrix(system.hclass(letter.curve), letter.chirality) @ M
    return ActionMatrix.from_array(M, system.fiber)


# --- Smith normal form ------------------------------------------------------


class SmithForm(NamedTuple):
    U: np.ndarray
    D: np.ndarray
    V: np.ndarray


def _swap_rows(A: np.ndarray, i: int, j: int) -> None:
    if i != j:
        A[[i, j], :] = A[[j, i], :]


def _swap_cols(A: np.ndarray, i: int, j: int) -> None:
    if i != j:
        A[:, [i, j]] = A[:, [j, i]]


def _settle_pivot(A: np.ndarray, U: np.ndarray, V: np.ndarray, t: int) -> None:
    """Clear row and column t and make A[t, t] divide the rest of the block."""
    m, n = A.shape
    while True:
        candidates = [(abs(A[i, t]), i, t) for i in range(t, m) if A[i, t] != 0]
        candidates += [(abs(A[t, j]), t, j) for j in range(t + 1, n) if A[t, j] != 0]
        _, i, j = min(candidates)
        _swap_rows(A, t, i)
        _swap_rows(U, t, i)
        _swap_cols(A, t, j)
        _swap_cols(V, t, j)

        pivot = A[t, t]
        clean = True
        for i in range(t + 1, m):
            q = A[i, t] // pivot
            if q:
                A[i, :] -= q * A[t, :]
                U[i, :] -= q * U[t, :]
            if A[i, t] != 0:
                clean = False
        for j in range(t + 1, n):
            q = A[t, j] // pivot
            if q:
                A[:, j] -= q * A[:, t]
                V[:, j] -= q * V[:, t]
            if A[t, j] != 0:
                clean = False
        if not clean:
            continue

        offender = next(
            (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i, j] % pivot != 0),
            None,
        )
        if offender is None:
            return
        # Pull the offending row up; the next pass shrinks the pivot.
        A[t, :] += A[offender, :]
        U[t, :] += U[offender, :]


def smith_normal_form(M) -> SmithForm:
    """U, D, V with D = U @ M @ V, U and V unimodular, d_i >= 0 and d_i | d_{i+1}."""
    A = _as_int_matrix(M)
    m, n = A.shape
    U, V = identity_matrix(m), identity_matrix(n)
    for t in range(min(m, n)):
        if not any(A[i, j] != 0 for i in range(t, m) for j in range(t, n)):
            break
        _, i, j = min(
            (abs(A[i, j]), i, j) for i in range(t, m) for j in range(t, n) if A[i, j] != 0
        )
        _swap_rows(A, t, i)
        _swap_rows(U, t, i)
        _swap_cols(A, t, j)
        _swap_cols(V, t, j)
        _settle_pivot(A, U, V, t)
        if A[t, t] < 0:
            A[t, :] = -A[t, :]
            U[t, :] = -U[t, :]
    return SmithForm(U, A, V)


def cokernel(M) -> Tuple[int, List[int]]:
    """(free rank, torsion) of Z^rows / column span of M."""
    D = smith_normal_form(M).D
    rows, cols = D.shape
    diagonal = [int(D[i, i]) for i in range(min(rows, cols))]
    nonzero = [d for d in diagonal if d != 0]
    return rows - len(nonzero), [d for d in nonzero if d > 1]


# --- GF(2) ------------------------------------------------------------------


@dataclass(frozen=True)
class GF2Solution:
    """Exactly one of ``solution`` and ``certificate`` is set.

    A certificate is a set of row indices whose rows sum to zero while their
    right-hand sides sum to 1.
    """

    solution: Optional[Tuple[int, ...]] = None
    certificate: Optional[Tuple[int, ...]] = None

    @property
    def consistent(self) -> bool:
        return self.solution is not None


def gf2_solve(A, b) -> GF2Solution:
    """Solve A x = b over GF(2) by Gauss-Jordan elimination with row history."""
    A = np.asarray(A, dtype=np.int64)
    if A.ndim == 1 and A.size == 0:
        A = A.reshape(0, 0)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    rows, cols = A.shape
    if b.size != rows:
        raise AlfInputError(f"right-hand side has {b.size} entries for {rows} rows")

    aug = np.concatenate(
        [A % 2, (b % 2).reshape(rows, 1), np.eye(rows, dtype=np.int64)], axis=1
    ).astype(np.uint8)
    pivots: List[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        hits = np.nonzero(aug[row:, col])[0]
        if hits.size == 0:
            continue
        _swap_rows(aug, row, row + int(hits[0]))
        mask = aug[:, col].astype(bool)
        mask[row] = False
        aug[mask] ^= aug[row]
        pivots.append(col)
        row += 1

    for i in range(row, rows):
        if aug[i, cols]:
            history = np.nonzero(aug[i, cols + 1:])[0]
            return GF2Solution(certificate=tuple(int(r) for r in history))

    x = [0] * cols
    for i, col in enumerate(pivots):
        x[col] = int(aug[i, cols])
    return GF2Solution(solution=tuple(x))


def pack_mod2(coords: Sequence[int]) -> int:
    """Mod-2 coordinates as an int bit mask (bit i = coordinate i)."""
    mask = 0
    for i, c in enumerate(coords):
        if c % 2:
            mask |= 1 << i
    return mask


def unpack_mod2(mask: int, rank: int) -> Tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(rank))


def _alpha_bits(rank: int) -> int:
    return sum(1 << (2 * i) for i in range(rank // 2))


def pairing_mod2(x: int, y: int, rank: int) -> int:
    """<x, y> mod 2 for bit-packed classes."""
    alpha = _alpha_bits(rank)
    swapped = ((y & alpha) << 1) | ((y >> 1) & alpha)
    return (x & swapped).bit_count() & 1


# --- clean_class ------------------------------------------------------------


def clean_class(v: HClass, system: "CurveSystem", max_len: Optional[int] = None) -> TwistWord:
    """Shortest word whose mod-2 action moves v into span(alpha_1, ..., alpha_g).

    Breadth-first over the 2^(2g) mod-2 classes. Moves are tried in curve order,
    chirality +1 before -1, so the first hit is the lexicographically least
    shortest word. A class already in span(alpha), including 0, gets the empty word.
    """
    limit = CLEAN_MAX_LEN if max_len is None else max_len
    fiber = system.fiber
    fiber.require_homology_model()
    if v.fiber != fiber:
        raise AlfInputError(f"class lives on {v.fiber.label}, curves on {fiber.label}")

    rank = fiber.h1_rank
    beta = _alpha_bits(rank) << 1
    start = pack_mod2(v.coords)
    if start & beta == 0:
        return TwistWord()

    moves = [
        (Letter(curve.name, chirality), pack_mod2(curve.hclass.coords))
        for curve in system.curves
        for chirality in (1, -1)
    ]
    parents: Dict[int, Optional[Tuple[int, Letter]]] = {start: None}
    frontier = [start]
    for _ in range(limit):
        next_frontier = []
        for state in frontier:
            for letter, c in moves:
                image = state ^ c if pairing_mod2(state, c, rank) else state
                if image in parents:
                    continue
                parents[image] = (state, letter)
                if image & beta == 0:
                    return _trace_word(parents, image)
                next_frontier.append(image)
        frontier = next_frontier
        if not frontier:
            break
    raise SearchBoundExceeded(f"no cleaning word of length <= {limit} found")


def _trace_word(parents: Dict[int, Optional[Tuple[int, Letter]]], state: int) -> TwistWord:
    letters: List[Letter] = []
    step = parents[state]
    while step is not None:
        state, letter = step
        letters.append(letter)
        step = parents[state]
    return TwistWord(tuple(reversed(letters)))
