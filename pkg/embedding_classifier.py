# SPDX-License-Identifier: MIT
# Copyright (c) 2025-2026 alfkit contributors

"""
Embeddability report for an ALF over Sigma_{g,1}.

- (S^2 x S^2 minus D^4) x D^2: always embeds.
- D^6: "embeds" when the word is hyperelliptic (Humphreys generators without
  b2), "obstructed" when the doubled fibration fails the Stipsicz criterion,
  otherwise "unknown".

Hyperelliptic detection is syntactic: it looks at the presentation, not at the
mapping class. The double's spin status is computed for every input so the two
theorems can be cross-checked; a hyperelliptic word with a non-spin double is a
model inconsistency and raises.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from typing import Any, Dict, Mapping, Optional, Tuple, Union

from alf_core import ALF, alf_from_dict, alf_to_dict, double_alf
from citations import THEOREM_LABELS, citations_for
from config import SENTRY_DSN
from spin_oracle import SpinStatus, SpinWitness, spin_status
from surface_model import AlfInputError, InternalInconsistencyError, TwistWord, split_curve_name
from word_dsl import format_word

D6_VERDICTS = ("embeds", "obstructed", "unknown")
S2S2_VERDICT = "embeds"


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
class EmbeddingReport:
    alf: ALF
    d6_verdict: str
    hyperelliptic: bool
    double_spin: SpinStatus
    notes: Tuple[str, ...]
    ambient_s2s2: str = S2S2_VERDICT

    def __post_init__(self):
        if self.d6_verdict not in D6_VERDICTS:
            raise AlfInputError(f"unknown D^6 verdict {self.d6_verdict!r}")
        if self.ambient_s2s2 != S2S2_VERDICT:
            raise AlfInputError("the (S^2 x S^2 minus D^4) x D^2 verdict is always 'embeds'")
        if self.d6_verdict == "embeds" and not self.hyperelliptic:
            raise AlfInputError("a D^6 embedding verdict needs a hyperelliptic word")
        if self.d6_verdict == "obstructed" and self.double_spin.spin:
            raise AlfInputError("an obstructed verdict needs a non-spin double")
        object.__setattr__(self, "notes", tuple(self.notes))

    @property
    def witness(self) -> Optional[SpinWitness]:
        return self.double_spin.witness if self.d6_verdict == "obstructed" else None


def is_hyperelliptic_word(word: TwistWord) -> bool:
    """True iff every letter is a Humphreys generator other than b2.

    Separating curves s<k> are not Humphreys generators, so a word using them
    is not a hyperelliptic presentation.
    """
    for letter in word:
        family, _ = split_curve_name(letter.curve)
        if family == "s" or letter.curve == "b2":
            return False
    return True


def classify(alf: ALF) -> EmbeddingReport:
    if alf.fiber.boundary_components != 1:
        raise AlfInputError(f"classification needs a fiber Sigma_{{g,1}}, got {alf.fiber.label}")

    hyperelliptic = is_hyperelliptic_word(alf.word)
    double_spin = spin_status(double_alf(alf))
    if hyperelliptic and not double_spin.spin:
        exc = InternalInconsistencyError(
            f"{alf.fiber.label} word '{format_word(alf.word)}' is hyperelliptic "
            f"(embeds in D^6) but its double is not spin (obstructed)"
        )
        _report_internal_error("embedding verdicts contradict", exc)
        raise exc

    if hyperelliptic:
        verdict = "embeds"
    elif not double_spin.spin:
        verdict = "obstructed"
    else:
        verdict = "unknown"
    return EmbeddingReport(
        alf=alf,
        d6_verdict=verdict,
        hyperelliptic=hyperelliptic,
        double_spin=double_spin,
        notes=tuple(citations_for(verdict)),
    )


def report_to_dict(report: EmbeddingReport) -> Dict[str, Any]:
    """Report JSON with keys in their documented order."""
    return {
        "input": alf_to_dict(report.alf),
        "s2s2xd2": report.ambient_s2s2,
        "d6": report.d6_verdict,
        "hyperelliptic": report.hyperelliptic,
        "double_spin": report.double_spin.to_dict(),
        "citations": list(report.notes),
    }


def parse_report(payload: Union[str, Mapping[str, Any]]) -> EmbeddingReport:
    """Inverse of report_render(..., "json")."""
    if isinstance(payload, str):
        try:
            payload = json.loads(payload)
        except json.JSONDecodeError as exc:
            raise AlfInputError(f"report is not valid JSON: {exc.msg}") from None
    if not isinstance(payload, Mapping):
        raise AlfInputError("a report must be a JSON object")
    try:
        return EmbeddingReport(
            alf=alf_from_dict(payload["input"]),
            d6_verdict=payload["d6"],
            hyperelliptic=bool(payload["hyperelliptic"]),
            double_spin=SpinStatus.from_dict(payload["double_spin"]),
            notes=tuple(payload["citations"]),
            ambient_s2s2=payload["s2s2xd2"],
        )
    except (KeyError, TypeError) as exc:
        raise AlfInputError(f"report is missing or mangles a field: {exc}") from None


def _render_text(report: EmbeddingReport) -> str:
    alf = report.alf
    spin = report.double_spin
    if spin.spin:
        spin_line = f"spin (method {spin.method})"
    else:
        subset = ", ".join(str(p) for p in spin.witness.subset)
        spin_line = (
            f"not spin (method {spin.method}), witness S = {{{subset}}}, "
            f"target {spin.witness.target}"
        )
    doubled = f"Sigma_{{{2 * alf.fiber.genus},0}}"
    lines = [
        f"LF({alf.fiber.label}, {format_word(alf.word)}): {alf.k} critical points",
        f"(S^2 x S^2 minus D^4) x D^2: {report.ambient_s2s2} [{THEOREM_LABELS['s2s2xd2']}]",
        f"D^6: {report.d6_verdict} [{THEOREM_LABELS[report.d6_verdict]}]",
        f"hyperelliptic presentation: {'yes' if report.hyperelliptic else 'no'}",
        f"double {doubled}: {spin_line}",
        "notes:",
    ]
    lines.extend(f"  - {note}" for note in report.notes)
    return "\n".join(lines)


def report_render(report: EmbeddingReport, fmt: str = "json") -> str:
    """Deterministic serialisation: one JSON line, or the text summary."""
    if fmt == "json":
        return json.dumps(report_to_dict(report))
    if fmt == "text":
        return _render_text(report)
    raise AlfInputError(f"unknown report format {fmt!r} (json or text)")
