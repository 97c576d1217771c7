# SPDX-License-Identifier: MIT
# Copyright (c) 2025-2026 alfkit contributors

"""
Toolkit configuration.

Everything is read from the environment once, at import:
- ALFKIT_BRUTE_BOUND: largest number of vanishing cycles the brute-force spin
  search will enumerate (2^k subsets). Defaults to 20.
- ALFKIT_MAX_WORD_LETTERS: longest word, after exponents are expanded, that the
  word parser accepts. Defaults to 5000.
- SENTRY_DSN / ENVIRONMENT: optional error capture, see cli.py.

There is no configuration file. Tests override values with
mock.patch.object on the consuming module.
"""

import os
import sys

DEFAULT_BRUTE_FORCE_BOUND = 20
DEFAULT_MAX_WORD_LETTERS = 5000

# clean_class breadth-first search depth. 2^(2g) states means every class is
# reached well before this for g <= 6.
CLEAN_MAX_LEN = 16

# The brute-force search packs mod-2 classes into uint64 bit masks.
BRUTE_FORCE_MAX_RANK = 64

SENTRY_DSN = os.environ.get("SENTRY_DSN", "")
ENVIRONMENT = os.environ.get("ENVIRONMENT", "production")


def _read_bound(name: str, default: int) -> int:
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        value = -1
    if value < 0:
        # Never raise at import: keep the default and say so.
        print(
            f"[ERROR] config: {name}={raw!r} is not a non-negative integer, using {default}",
            file=sys.stderr,
        )
        return default
    return value


BRUTE_FORCE_BOUND = _read_bound("ALFKIT_BRUTE_BOUND", DEFAULT_BRUTE_FORCE_BOUND)
MAX_WORD_LETTERS = _read_bound("ALFKIT_MAX_WORD_LETTERS", DEFAULT_MAX_WORD_LETTERS)
