# SPDX-License-Identifier: MIT
# Copyright (c) 2025-2026 alfkit contributors

"""
alfkit command line.

    alfkit classify   --genus G --word W [--json]
    alfkit spin       --genus G --word W (--double | --closed)
    alfkit invariants --genus G --word W
    alfkit action     --genus G --word W
    alfkit clean      --genus G --class CSV
    alfkit batch      --file PATH [--jobs N]

Bounded commands work over Sigma_{G,1}; `spin --closed` uses Sigma_{G,0}.
Output is one JSON line per result (classify without --json prints text).
Exit codes: 0 success, 1 input error, 2 internal inconsistency. Every error
goes to stderr prefixed with "error:".
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Tuple

from alf_core import (
    ALF,
    alf_from_dict,
    boundary_open_book,
    double_alf,
    euler_characteristic,
    make_alf,
    monodromy,
    open_book_h1,
    total_space_h1,
)
from config import ENVIRONMENT, SENTRY_DSN
from embedding_classifier import classify, report_render
from homology_algebra import HClass, clean_class, word_action
from spin_oracle import spin_status
from surface_model import (
    AlfInputError,
    InternalInconsistencyError,
    humphreys_system,
    standard_surface,
)
from word_dsl import format_word, parse_word, resolve_word

_sentry_ready = False


def _init_sentry() -> None:
    # No-op unless SENTRY_DSN is set.
    global _sentry_ready
    if _sentry_ready or not SENTRY_DSN:
        return
    import sentry_sdk

    sentry_sdk.init(
        dsn=SENTRY_DSN,
        traces_sample_rate=0.1,
        environment=ENVIRONMENT,
        send_default_pii=False,
    )
    _sentry_ready = True


def _report_internal_error(context: str, exc: Optional[BaseException] = None) -> None:
    """Route error details to stderr/Sentry only."""
    if exc is not None:
        print(f"[ERROR] {context}: {type(exc).__name__}: {exc}", file=sys.stderr)
    else:
        print(f"[ERROR] {context}", file=sys.stderr)
    if SENTRY_DSN and exc is not None:
        import sentry_sdk

        sentry_sdk.capture_exception(exc)


class _UsageError(AlfInputError):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _emit(payload: Dict[str, Any]) -> None:
    print(json.dumps(payload))


def _alf(genus: int, text: str, boundary: int = 1) -> ALF:
    fiber = standard_surface(genus, boundary)
    system = humphreys_system(fiber)
    word = resolve_word(parse_word(text), system)
    return make_alf(fiber, word, system)


# --- subcommands ------------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> int:
    report = classify(_alf(args.genus, args.word))
    print(report_render(report, "json" if args.json else "text"))
    return 0


def cmd_spin(args: argparse.Namespace) -> int:
    if args.closed:
        alf = _alf(args.genus, args.word, boundary=0)
    else:
        alf = double_alf(_alf(args.genus, args.word))
    _emit(spin_status(alf).to_dict())
    return 0


def cmd_invariants(args: argparse.Namespace) -> int:
    alf = _alf(args.genus, args.word)
    _emit(
        {
            "genus": alf.fiber.genus,
            "boundary": alf.fiber.boundary_components,
            "word": format_word(alf.word),
            "k": alf.k,
            "euler_characteristic": euler_characteristic(alf),
            "total_space_h1": total_space_h1(alf).to_dict(),
            "boundary_h1": open_book_h1(boundary_open_book(alf)).to_dict(),
        }
    )
    return 0


def cmd_action(args: argparse.Namespace) -> int:
    alf = _alf(args.genus, args.word)
    action = monodromy(alf)
    _emit(
        {
            "genus": alf.fiber.genus,
            "boundary": alf.fiber.boundary_components,
            "word": format_word(alf.word),
            "matrix": action.to_list(),
            "preserves_form": action.preserves_form(),
        }
    )
    return 0


def _parse_class(csv: str, rank: int) -> List[int]:
    try:
        coords = [int(part) for part in csv.split(",")]
    except ValueError:
        raise AlfInputError(f"--class must be comma-separated integers, got {csv!r}") from None
    if len(coords) != rank:
        raise AlfInputError(f"--class needs {rank} coordinates, got {len(coords)}")
    return coords


def cmd_clean(args: argparse.Namespace) -> int:
    fiber = standard_surface(args.genus, 1)
    system = humphreys_system(fiber)
    v = HClass(tuple(_parse_class(args.class_csv, fiber.h1_rank)), fiber)
    word = clean_class(v, system)
    image = word_action(word, system).apply(v)
    _emit(
        {
            "genus": fiber.genus,
            "class": list(v.mod2()),
            "word": format_word(word),
            "image": list(image.mod2()),
        }
    )
    return 0


def _batch_alf(payload: Any) -> ALF:
    # "word" may also be given in the word language.
    if isinstance(payload, dict) and isinstance(payload.get("word"), str):
        if "genus" not in payload or "boundary" not in payload:
            raise AlfInputError("ALF object is missing genus or boundary")
        return _alf(payload["genus"], payload["word"], payload["boundary"])
    return alf_from_dict(payload)


def _batch_line(item: Tuple[int, str]) -> Tuple[str, bool]:
    """One batch line -> (output JSON line, hit an internal trap)."""
    number, line = item
    try:
        try:
            payload = json.loads(line)
        except RecursionError:
            raise AlfInputError("not a JSON object: nesting too deep") from None
        except ValueError as exc:
            raise AlfInputError(f"not a JSON object: {getattr(exc, 'msg', exc)}") from None
        return report_render(classify(_batch_alf(payload)), "json"), False
    except InternalInconsistencyError as exc:
        return json.dumps({"line": number, "error": f"internal inconsistency: {exc}"}), True
    except AlfInputError as exc:
        return json.dumps({"line": number, "error": str(exc)}), False
    except Exception as exc:  # noqa: BLE001  one bad line never sinks the batch
        _report_internal_error(f"batch line {number}", exc)
        return json.dumps({"line": number, "error": f"internal failure ({type(exc).__name__})"}), True


def cmd_batch(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        raise AlfInputError("--jobs must be at least 1")
    try:
        with open(args.file, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise AlfInputError(f"cannot read {args.file}: {exc}") from None

    items = list(enumerate(lines, start=1))
    if args.jobs == 1 or len(items) < 2:
        results = [_batch_line(item) for item in items]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_batch_line, items, chunksize=max(1, len(items) // (4 * args.jobs))))

    tripped = False
    for output, internal in results:
        print(output)
        tripped = tripped or internal
    if tripped:
        print("error: internal failure on at least one batch line", file=sys.stderr)
        return 2
    return 0


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="alfkit",
        description="Achiral Lefschetz fibrations as Dehn twist words: invariants, spin and embeddings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fibration(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--genus", type=int, required=True, help="fiber genus g")
        p.add_argument("--word", required=True, help="monodromy word, e.g. 'b1 c1 b2' or 'id'")
        return p

    p = fibration("classify", "embeddability report over Sigma_{g,1}")
    p.add_argument("--json", action="store_true", help="print the JSON report")
    p.set_defaults(handler=cmd_classify)

    p = fibration("spin", "Stipsicz spin criterion")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--double", action="store_true", help="double Sigma_{g,1} first")
    mode.add_argument("--closed", action="store_true", help="read the word on closed Sigma_g")
    p.set_defaults(handler=cmd_spin)

    p = fibration("invariants", "Euler characteristic, H_1 of total space and boundary")
    p.set_defaults(handler=cmd_invariants)

    p = fibration("action", "monodromy action on H_1")
    p.set_defaults(handler=cmd_action)

    p = sub.add_parser("clean", help="word moving a mod-2 class into span(alpha)")
    p.add_argument("--genus", type=int, required=True, help="fiber genus g")
    p.add_argument("--class", dest="class_csv", required=True, help="coordinates, e.g. 0,1")
    p.set_defaults(handler=cmd_clean)

    p = sub.add_parser("batch", help="classify one JSON ALF per line")
    p.add_argument("--file", required=True, help="UTF-8 file, one JSON object per line")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(handler=cmd_batch)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """cli_run: parse argv, run one subcommand, return the exit code."""
    _init_sentry()
    try:
        args = build_parser().parse_args(argv)
        return args.handler(args)
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else 0
    except InternalInconsistencyError as exc:
        print(f"error: internal inconsistency: {exc}", file=sys.stderr)
        return 2
    except AlfInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001  anything else is a bug
        _report_internal_error("unexpected failure", exc)
        print(f"error: internal failure ({type(exc).__name__})", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
