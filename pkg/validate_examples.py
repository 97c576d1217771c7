#!/usr/bin/env python3
"""
Worked-example validation for alfkit.
Spot-checks the classifier and the H_1 calculator against hand-computed answers.

Run manually: `python3 validate_examples.py`
Dev/CI tool, not part of the installed modules.
"""

import sys

import pandas as pd

from alf_core import (
    boundary_open_book,
    euler_characteristic,
    make_alf,
    open_book_h1,
    total_space_h1,
)
from embedding_classifier import classify
from surface_model import humphreys_system, standard_surface
from word_dsl import parse_word, resolve_word

# (genus, word, expected D^6 verdict, expected witness as (subset, target) or None)
WORKED_EXAMPLES = [
    (2, "b1 c1 b2", "obstructed", ((1, 2), 3)),
    (3, "b1 c1 b2", "obstructed", ((1, 2), 3)),
    (4, "b1 c1 b2", "obstructed", ((1, 2), 3)),
    (2, "s1", "obstructed", ((), 1)),
    (3, "a1 s2^-1 c2", "obstructed", ((), 2)),
    (2, "a1 c1 b1", "embeds", None),
    (2, "a1 c1^-1 b1", "embeds", None),
    (2, "b2 b2", "unknown", None),
    (1, "id", "embeds", None),
]

# (genus, word, chi, total space H_1, boundary H_1)
INVARIANT_EXAMPLES = [
    (2, "id", -3, "Z^4", "Z^4"),
    (2, "b1 c1 b2", 0, "Z^2", None),
    (1, "a1 a1", 1, "Z", None),
    (1, "a1", 0, "Z", "Z"),
    (1, "a1 b1 a1 b1 a1 b1", 5, "0", "Z/2 + Z/2"),
]


def _alf(genus, text):
    fiber = standard_surface(genus, 1)
    system = humphreys_system(fiber)
    return make_alf(fiber, resolve_word(parse_word(text), system), system)


def validate():
    failures = 0

    print("=" * 60)
    print("alfkit worked-example validation")
    print("=" * 60)

    # 1. Embedding verdicts
    rows = []
    for genus, text, expected, expected_witness in WORKED_EXAMPLES:
        report = classify(_alf(genus, text))
        witness = report.witness
        got_witness = None if witness is None else (witness.subset, witness.target)
        ok = report.d6_verdict == expected and got_witness == expected_witness
        rows.append(
            {
                "genus": genus,
                "word": text,
                "d6": report.d6_verdict,
                "expected": expected,
                "double_spin": report.double_spin.spin,
                "method": report.double_spin.method,
            }
        )
        if ok:
            print(f"  [OK] g={genus} '{text}': {report.d6_verdict}")
        else:
            print(f"  [FAIL] g={genus} '{text}': got {report.d6_verdict} {got_witness}, "
                  f"expected {expected} {expected_witness}")
            failures += 1
    print()
    print(pd.DataFrame(rows).to_string(index=False))

    # 2. Invariants
    print("\n  Checking invariants...")
    for genus, text, chi, total, boundary in INVARIANT_EXAMPLES:
        alf = _alf(genus, text)
        got_chi = euler_characteristic(alf)
        got_total = total_space_h1(alf).group
        got_boundary = open_book_h1(boundary_open_book(alf)).group
        problems = []
        if got_chi != chi:
            problems.append(f"chi {got_chi} != {chi}")
        if got_total != total:
            problems.append(f"H_1(V) {got_total} != {total}")
        if boundary is not None and got_boundary != boundary:
            problems.append(f"H_1(boundary) {got_boundary} != {boundary}")
        if problems:
            print(f"  [FAIL] g={genus} '{text}': " + "; ".join(problems))
            failures += 1
        else:
            print(f"  [OK] g={genus} '{text}': chi={got_chi}, H_1(V)={got_total}, "
                  f"H_1(boundary)={got_boundary}")

    print("\n" + "=" * 60)
    if failures == 0:
        print("ALL CHECKS PASSED")
    else:
        print(f"{failures} CHECK(S) FAILED")
    print("=" * 60)

    return failures == 0


if __name__ == "__main__":
    success = validate()
    sys.exit(0 if success else 1)
