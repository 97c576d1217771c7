# SPDX-License-Identifier: MIT
# Copyright (c) 2025-2026 alfkit contributors

"""
Citation strings attached to embedding reports.

Kept in one place so the JSON reports, the text renderer and the golden files
agree byte for byte. ASCII only.
"""

from typing import Dict, List

S2S2_EMBEDS = (
    "Theorem 1.1: every LF(Sigma, phi) admits a relative LF embedding in "
    "(S^2 x S^2 minus D^4) x D^2"
)

HYPERELLIPTIC_EMBEDS = (
    "Theorem 1.3(2): hyperelliptic monodromy in Humphreys generators gives a "
    "relative LF embedding in D^6"
)

DOUBLING_OBSTRUCTION = (
    "Theorem 1.3(1) via doubling: a proper embedding in D^6 makes the double "
    "embed in S^6, hence in R^6, hence the double is spin"
)

STIPSICZ_CRITERION = (
    "Stipsicz criterion: the doubled fibration is not spin, witnessed by "
    "vanishing cycles summing to another vanishing cycle with even parity"
)

NO_THEOREM_APPLIES = (
    "Open: the presentation is not hyperelliptic and the double is spin, so no "
    "embedding theorem or obstruction applies"
)

CLOSED_MANIFOLD_CONTEXT = (
    "Corollary 1.2 (context, not computed): every closed orientable 4-manifold "
    "embeds in S^2 x S^2 x S^2"
)

_BY_VERDICT: Dict[str, List[str]] = {
    "embeds": [S2S2_EMBEDS, HYPERELLIPTIC_EMBEDS, CLOSED_MANIFOLD_CONTEXT],
    "obstructed": [S2S2_EMBEDS, DOUBLING_OBSTRUCTION, STIPSICZ_CRITERION, CLOSED_MANIFOLD_CONTEXT],
    "unknown": [S2S2_EMBEDS, NO_THEOREM_APPLIES, CLOSED_MANIFOLD_CONTEXT],
}

# Short labels for the text renderer, keyed by verdict.
THEOREM_LABELS: Dict[str, str] = {
    "s2s2xd2": "Theorem 1.1",
    "embeds": "Theorem 1.3(2)",
    "obstructed": "Theorem 1.3(1) + Stipsicz criterion on the double",
    "unknown": "no applicable theorem",
}


def citations_for(d6_verdict: str) -> List[str]:
    """Citations for a report with the given D^6 verdict."""
    return list(_BY_VERDICT[d6_verdict])
