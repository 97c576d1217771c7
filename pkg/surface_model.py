# SPDX-License-Identifier: MIT
# Copyright (c) 2025-2026 alfkit contributors

"""
Standard fibers, the Humphreys curve system and surface doubling.

Single source of truth for curve names and their homology model. Homology
vectors use the fixed basis order (alpha_1, beta_1, alpha_2, beta_2, ...),
with <alpha_i, beta_i> = +1.

Model of the 2g+1 Humphreys generators of Sigma_{g,1}:

    [a_i] = alpha_i    [b_1] = beta_1    [b_2] = beta_2    [c_i] = beta_i + beta_{i+1}

Geometric adjacency is the chain b_1 - a_1 - c_1 - a_2 - c_2 - ... - a_g (each
consecutive pair meeting once) plus b_2 - a_2. All other pairs are disjoint.

Besides the generators, s<k> names a separating curve cutting off the first k
handles. It is not a Humphreys generator and its class is zero.

HClass and TwistWord are housed here, next to the fiber and curve names they
refer to, so every other module can import them without cycles.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple


class AlfInputError(ValueError):
    """A precondition on user-supplied data failed (exit code 1 in the CLI)."""


class InternalInconsistencyError(RuntimeError):
    """Two computations that must agree did not. Always a bug, never bad input."""


_CURVE_NAME_RE = re.compile(r"([abcs])([1-9][0-9]*)")


# --- Fibers -----------------------------------------------------------------


@dataclass(frozen=True)
class SurfaceFiber:
    """Sigma_{g,m}: genus g with m boundary components."""

    genus: int
    boundary_components: int

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.boundary_components

    @property
    def h1_rank(self) -> int:
        # 2g whenever m <= 1, which is all the homology operations accept.
        return 2 * self.genus + max(self.boundary_components - 1, 0)

    @property
    def is_closed(self) -> bool:
        return self.boundary_components == 0

    @property
    def label(self) -> str:
        return f"Sigma_{{{self.genus},{self.boundary_components}}}"

    @property
    def basis_labels(self) -> Tuple[str, ...]:
        return tuple(
            label
            for i in range(1, self.genus + 1)
            for label in (f"alpha{i}", f"beta{i}")
        )

    def require_homology_model(self) -> None:
        """Homology operations are restricted to m <= 1."""
        if self.boundary_components > 1:
            raise AlfInputError(
                f"{self.label}: homology operations need at most one boundary component"
            )


def standard_surface(g: int, m: int) -> SurfaceFiber:
    """Build Sigma_{g,m}. Total for g, m >= 0; downstream operations validate m."""
    if isinstance(g, bool) or not isinstance(g, int) or g < 0:
        raise AlfInputError(f"genus must be a non-negative integer, got {g!r}")
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise AlfInputError(f"boundary count must be a non-negative integer, got {m!r}")
    return SurfaceFiber(genus=g, boundary_components=m)


# --- Homology classes -------------------------------------------------------


@dataclass(frozen=True)
class HClass:
    """An element of H_1(fiber; Z) as integer coordinates in the fixed basis."""

    coords: Tuple[int, ...]
    fiber: SurfaceFiber

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.fiber.h1_rank:
            raise AlfInputError(
                f"class has {len(coords)} coordinates, {self.fiber.label} needs {self.fiber.h1_rank}"
            )

    @classmethod
    def zero(cls, fiber: SurfaceFiber) -> "HClass":
        return cls((0,) * fiber.h1_rank, fiber)

    @classmethod
    def basis_vector(cls, fiber: SurfaceFiber, index: int) -> "HClass":
        coords = [0] * fiber.h1_rank
        coords[index] = 1
        return cls(tuple(coords), fiber)

    def mod2(self) -> Tuple[int, ...]:
        return tuple(c % 2 for c in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check_same_fiber(self, other: "HClass") -> None:
        if self.fiber != other.fiber:
            raise AlfInputError(f"classes live on {self.fiber.label} and {other.fiber.label}")

    def __add__(self, other: "HClass") -> "HClass":
        self._check_same_fiber(other)
        return HClass(tuple(a + b for a, b in zip(self.coords, other.coords)), self.fiber)

    def __neg__(self) -> "HClass":
        return HClass(tuple(-c for c in self.coords), self.fiber)

    def scaled(self, factor: int) -> "HClass":
        return HClass(tuple(factor * c for c in self.coords), self.fiber)

    def to_list(self) -> List[int]:
        return list(self.coords)


# --- Curves -----------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorCurve:
    name: str
    hclass: HClass


def split_curve_name(name: str) -> Tuple[str, int]:
    """'c12' -> ('c', 12). Raises AlfInputError for anything else."""
    match = _CURVE_NAME_RE.fullmatch(name or "")
    if not match:
        raise AlfInputError(f"unknown curve label {name!r}")
    return match.group(1), int(match.group(2))


def _humphreys_names(g: int) -> List[str]:
    names = []
    for i in range(1, g + 1):
        names.append(f"a{i}")
        if i == 1:
            names.append("b1")
        if i == 2:
            names.append("b2")
        if i < g:
            names.append(f"c{i}")
    return names


def _humphreys_class(fiber: SurfaceFiber, name: str) -> HClass:
    family, i = split_curve_name(name)
    coords = [0] * fiber.h1_rank
    if family == "a":
        coords[2 * (i - 1)] = 1
    elif family == "b":
        coords[2 * (i - 1) + 1] = 1
    else:
        coords[2 * (i - 1) + 1] = 1
        coords[2 * i + 1] = 1
    return HClass(tuple(coords), fiber)


def _humphreys_edges(g: int) -> List[Tuple[str, str]]:
    edges = [("b1", "a1")]
    for i in range(1, g):
        edges.append((f"a{i}", f"c{i}"))
        edges.append((f"c{i}", f"a{i + 1}"))
    if g >= 2:
        edges.append(("b2", "a2"))
    return edges


@dataclass(frozen=True)
class CurveSystem:
    """Named generator curves on a fiber with their geometric intersection table.

    ``separating_limit`` is the largest k for which s<k> is a valid curve name.
    """

    fiber: SurfaceFiber
    curves: Tuple[GeneratorCurve, ...]
    geometric_adjacency: Tuple[Tuple[int, ...], ...]
    separating_limit: int

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(curve.name for curve in self.curves)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise AlfInputError(self._unknown_reason(name)) from None

    def _unknown_reason(self, name: str) -> str:
        family, i = split_curve_name(name)
        g = self.fiber.genus
        if family == "b":
            if i == 2:
                return "b2 needs genus >= 2"
            return f"unknown curve label {name!r} (only b1 and b2 exist)"
        if family == "c":
            return f"{name} needs genus >= {i + 1}"
        if family == "a":
            return f"{name} needs genus >= {i}"
        return f"{name}: separating curves s1..s{self.separating_limit} exist on this fiber"

    def curve(self, name: str) -> GeneratorCurve:
        """Resolve a Humphreys generator or a separating curve s<k>."""
        family, k = split_curve_name(name)
        if family == "s":
            if k > self.separating_limit:
                raise AlfInputError(self._unknown_reason(name))
            return GeneratorCurve(name, HClass.zero(self.fiber))
        return self.curves[self.index(name)]

    def hclass(self, name: str) -> HClass:
        return self.curve(name).hclass

    def geometric_intersection(self, first: str, second: str) -> int:
        return self.geometric_adjacency[self.index(first)][self.index(second)]

    def pushforward(self, fiber: SurfaceFiber, inclusion: "Inclusion") -> "CurveSystem":
        """Same names and adjacency, classes carried along ``inclusion``."""
        curves = tuple(GeneratorCurve(c.name, inclusion(c.hclass)) for c in self.curves)
        return CurveSystem(fiber, curves, self.geometric_adjacency, self.separating_limit)


def humphreys_system(fiber: SurfaceFiber) -> CurveSystem:
    """The 2g+1 Humphreys generators (a_1, b_1 only when g = 1)."""
    if fiber.genus < 1:
        raise AlfInputError("the Humphreys system needs genus >= 1")
    fiber.require_homology_model()

    names = _humphreys_names(fiber.genus)
    curves = tuple(GeneratorCurve(name, _humphreys_class(fiber, name)) for name in names)
    position: Dict[str, int] = {name: i for i, name in enumerate(names)}
    table = [[0] * len(names) for _ in names]
    for first, second in _humphreys_edges(fiber.genus):
        i, j = position[first], position[second]
        table[i][j] = table[j][i] = 1

    limit = fiber.genus if fiber.boundary_components == 1 else fiber.genus - 1
    return CurveSystem(
        fiber=fiber,
        curves=curves,
        geometric_adjacency=tuple(tuple(row) for row in table),
        separating_limit=limit,
    )


def separating_curve(fiber: SurfaceFiber, k: int) -> GeneratorCurve:
    """s<k>: the separating curve around the first k handles (class 0)."""
    return humphreys_system(fiber).curve(f"s{k}")


# --- Twist words ------------------------------------------------------------


class Letter(NamedTuple):
    curve: str
    chirality: int


@dataclass(frozen=True)
class TwistWord:
    """Dehn twists in application order: the leftmost letter acts first.

    Chirality +1 is a positive twist (ordinary critical point), -1 a negative
    twist (achiral critical point).
    """

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple(Letter(str(curve), int(chirality)) for curve, chirality in self.letters)
        for letter in letters:
            split_curve_name(letter.curve)
            if letter.chirality not in (1, -1):
                raise AlfInputError(
                    f"chirality of {letter.curve} must be +1 or -1, got {letter.chirality}"
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[str, int]]) -> "TwistWord":
        return cls(tuple(Letter(curve, chirality) for curve, chirality in pairs))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __add__(self, other: "TwistWord") -> "TwistWord":
        return TwistWord(self.letters + other.letters)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(letter.curve for letter in self.letters)

    def inverse(self) -> "TwistWord":
        return TwistWord(tuple(Letter(c, -e) for c, e in reversed(self.letters)))

    def with_chirality(self, chirality: Optional[int] = None) -> "TwistWord":
        """Flip every letter (None) or force every letter to ``chirality``."""
        return TwistWord(
            tuple(Letter(c, -e if chirality is None else chirality) for c, e in self.letters)
        )


# --- Doubling ---------------------------------------------------------------


@dataclass(frozen=True)
class Inclusion:
    """H_1(Sigma_{g,1}) -> H_1(Sigma_{2g}): pad with 2g zero coordinates."""

    source: SurfaceFiber
    target: SurfaceFiber

    def __call__(self, x: HClass) -> HClass:
        if x.fiber != self.source:
            raise AlfInputError(f"inclusion expects a class on {self.source.label}")
        padding = (0,) * (self.target.h1_rank - self.source.h1_rank)
        return HClass(x.coords + padding, self.target)


def double_surface(fiber: SurfaceFiber) -> Tuple[SurfaceFiber, Inclusion]:
    """Cap Sigma_{g,1} with its mirror image to get the closed Sigma_{2g}."""
    if fiber.boundary_components != 1:
        raise AlfInputError(f"only Sigma_{{g,1}} can be doubled, got {fiber.label}")
    if fiber.genus < 1:
        raise AlfInputError("doubling needs genus >= 1")
    doubled = SurfaceFiber(genus=2 * fiber.genus, boundary_components=0)
    return doubled, Inclusion(fiber, doubled)
