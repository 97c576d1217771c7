# SPDX-License-Identifier: MIT
# Copyright (c) 2025-2026 alfkit contributors

"""
Achiral Lefschetz fibrations over the disk, LF(Sigma, phi).

An ALF is a fiber plus a twist word; the word's letters are the vanishing
cycles in the order their critical values are met along the boundary circle.
The total space is D^2 x Sigma with one 2-handle per letter, and the boundary
carries the open book with page Sigma and the same monodromy.

Homology here is H_1 only. Chirality is recorded but never changes H_1 or the
Euler characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

import numpy as np

from homology_algebra import ActionMatrix, HClass, cokernel, identity_matrix, word_action
from surface_model import (
    AlfInputError,
    CurveSystem,
    SurfaceFiber,
    TwistWord,
    double_surface,
    humphreys_system,
    standard_surface,
)


@dataclass(frozen=True)
class H1Report:
    free_rank: int
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        torsion = tuple(int(t) for t in self.torsion)
        object.__setattr__(self, "torsion", torsion)
        if any(t <= 1 for t in torsion):
            raise AlfInputError(f"torsion coefficients must exceed 1, got {torsion}")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise AlfInputError(f"torsion coefficients must form a divisibility chain, got {torsion}")

    @property
    def group(self) -> str:
        """'Z^2 + Z/2 + Z/6', or '0' for the trivial group."""
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> Dict[str, Any]:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion), "group": self.group}


@dataclass(frozen=True)
class OpenBook:
    page: SurfaceFiber
    monodromy: TwistWord
    system: CurveSystem = field(repr=False)

    def __post_init__(self):
        if self.page.boundary_components < 1:
            raise AlfInputError(f"an open book page needs boundary, got {self.page.label}")


@dataclass(frozen=True)
class ALF:
    """LF(fiber, word). ``system`` resolves the word's curve names to classes."""

    fiber: SurfaceFiber
    word: TwistWord
    system: CurveSystem = field(repr=False)

    @property
    def k(self) -> int:
        """Number of critical points."""
        return len(self.word)

    def classes(self) -> List[HClass]:
        return [self.system.hclass(letter.curve) for letter in self.word]


def make_alf(fiber: SurfaceFiber, word: TwistWord, system: Optional[CurveSystem] = None) -> ALF:
    """Validate ``word`` over the fiber's curve system and build the ALF."""
    if fiber.boundary_components not in (0, 1):
        raise AlfInputError(f"fibers must have at most one boundary component, got {fiber.label}")
    if fiber.genus < 1:
        raise AlfInputError("fibers must have genus >= 1")
    if system is None:
        system = humphreys_system(fiber)
    elif system.fiber != fiber:
        raise AlfInputError(f"curve system lives on {system.fiber.label}, fiber is {fiber.label}")
    for letter in word:
        system.curve(letter.curve)
    return ALF(fiber=fiber, word=word, system=system)


def monodromy(alf: ALF) -> ActionMatrix:
    return word_action(alf.word, alf.system)


def euler_characteristic(alf: ALF) -> int:
    """chi(Sigma) plus one for each 2-handle."""
    return alf.fiber.euler_characteristic + alf.k


def _class_columns(classes: List[HClass], rank: int) -> np.ndarray:
    M = np.zeros((rank, len(classes)), dtype=object)
    for j, c in enumerate(classes):
        for i, value in enumerate(c.coords):
            M[i, j] = value
    return M


def total_space_h1(alf: ALF) -> H1Report:
    """H_1(V) = Z^{2g} / <classes of the vanishing cycles>."""
    alf.fiber.require_homology_model()
    free_rank, torsion = cokernel(_class_columns(alf.classes(), alf.fiber.h1_rank))
    return H1Report(free_rank, tuple(torsion))


def boundary_open_book(alf: ALF) -> OpenBook:
    if alf.fiber.is_closed:
        raise AlfInputError(f"a closed fiber ({alf.fiber.label}) induces no boundary open book")
    return OpenBook(page=alf.fiber, monodromy=alf.word, system=alf.system)


def open_book_h1(ob: OpenBook) -> H1Report:
    """H_1 of the open book's 3-manifold: coker(phi_* - I)."""
    if ob.page.boundary_components != 1:
        raise AlfInputError(f"open book H_1 needs a page with one binding component, got {ob.page.label}")
    M = word_action(ob.monodromy, ob.system).as_array() - identity_matrix(ob.page.h1_rank)
    free_rank, torsion = cokernel(M)
    return H1Report(free_rank, tuple(torsion))


def double_alf(alf: ALF) -> ALF:
    """The closed-fiber ALF on Sigma_{2g}, monodromy extended by the identity."""
    if alf.fiber.boundary_components != 1:
        raise AlfInputError(f"only ALFs over Sigma_{{g,1}} can be doubled, got {alf.fiber.label}")
    doubled, inclusion = double_surface(alf.fiber)
    return ALF(fiber=doubled, word=alf.word, system=alf.system.pushforward(doubled, inclusion))


# --- JSON schema ------------------------------------------------------------


def alf_to_dict(alf: ALF) -> Dict[str, Any]:
    return {
        "genus": alf.fiber.genus,
        "boundary": alf.fiber.boundary_components,
        "word": [{"curve": letter.curve, "chirality": letter.chirality} for letter in alf.word],
    }


def alf_from_dict(payload: Mapping[str, Any]) -> ALF:
    """Inverse of alf_to_dict. Doubled ALFs are not serialised; rebuild them with double_alf."""
    if not isinstance(payload, Mapping):
        raise AlfInputError("an ALF must be a JSON object")
    missing = [key for key in ("genus", "boundary", "word") if key not in payload]
    if missing:
        raise AlfInputError(f"ALF object is missing {', '.join(missing)}")
    fiber = standard_surface(payload["genus"], payload["boundary"])
    letters = payload["word"]
    if not isinstance(letters, list):
        raise AlfInputError("'word' must be a list of {curve, chirality} objects")
    pairs = []
    for position, item in enumerate(letters, start=1):
        if not isinstance(item, Mapping) or "curve" not in item or "chirality" not in item:
            raise AlfInputError(f"letter {position} must be an object with 'curve' and 'chirality'")
        curve, chirality = item["curve"], item["chirality"]
        if not isinstance(curve, str) or isinstance(chirality, bool) or not isinstance(chirality, int):
            raise AlfInputError(f"letter {position} has a malformed curve or chirality")
        pairs.append((curve, chirality))
    return make_alf(fiber, TwistWord.from_pairs(pairs))
