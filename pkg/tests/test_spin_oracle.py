# SPDX-License-Identifier: MIT
# Copyright (c) 2025-2026 alfkit contributors

"""Unit tests for spin_oracle.

Stdlib unittest only. Run from the repo root with:

    python -m unittest tests.test_spin_oracle

The two spin algorithms are cross-checked on seeded random fibrations, both
Humphreys words and fibrations whose vanishing classes are arbitrary.
"""

import io
import random
import unittest
from contextlib import redirect_stderr
from unittest import mock

import spin_oracle
from alf_core import double_alf, make_alf
from spin_oracle import (
    SpinStatus,
    SpinWitness,
    not_spin_bruteforce,
    not_spin_linear,
    spin_status,
    stipsicz_parity,
    validate_witness,
)
from surface_model import (
    AlfInputError,
    CurveSystem,
    GeneratorCurve,
    HClass,
    InternalInconsistencyError,
    TwistWord,
    humphreys_system,
    standard_surface,
)


def _word(text):
    return TwistWord.from_pairs((token, 1) for token in text.split())


def _doubled(genus, text):
    return double_alf(make_alf(standard_surface(genus, 1), _word(text)))


def _closed(genus, text):
    return make_alf(standard_surface(genus, 0), _word(text))


def _random_class_alf(rng, genus, k):
    """Closed-fiber ALF whose letters carry arbitrary mod-2 classes."""
    fiber = standard_surface(genus, 0)
    curves = tuple(
        GeneratorCurve(f"a{i + 1}", HClass(tuple(rng.randint(0, 1) for _ in range(fiber.h1_rank)), fiber))
        for i in range(k)
    )
    zeros = tuple(tuple(0 for _ in curves) for _ in curves)
    system = CurveSystem(fiber, curves, zeros, separating_limit=0)
    word = TwistWord.from_pairs((curve.name, rng.choice((1, -1))) for curve in curves)
    return make_alf(fiber, word, system)


def _random_humphreys_alf(rng):
    """A closed-fiber ALF from a random word, read either on Sigma_g or as a double."""
    genus = rng.randint(1, 3)
    if rng.random() < 0.5:
        fiber = standard_surface(genus, 0)
        names = list(humphreys_system(fiber).names) + [f"s{i}" for i in range(1, genus)]
        word = TwistWord.from_pairs(
            (rng.choice(names), rng.choice((1, -1))) for _ in range(rng.randint(0, 12))
        )
        return make_alf(fiber, word)
    fiber = standard_surface(genus, 1)
    names = list(humphreys_system(fiber).names) + [f"s{i}" for i in range(1, genus + 1)]
    word = TwistWord.from_pairs((rng.choice(names), rng.choice((1, -1))) for _ in range(rng.randint(0, 12)))
    return double_alf(make_alf(fiber, word))


class StipsiczParityTests(unittest.TestCase):
    def test_worked_example(self):
        classes = _doubled(2, "b1 c1 b2").classes()
        self.assertEqual(stipsicz_parity([1, 2], classes), 0)
        self.assertEqual(stipsicz_parity([], classes), 0)
        self.assertEqual(stipsicz_parity([3], classes), 1)

    def test_intersecting_pair(self):
        classes = _closed(2, "a1 b1").classes()
        self.assertEqual(stipsicz_parity([1, 2], classes), 1)

    def test_rejects_repeated_or_out_of_range_positions(self):
        classes = _closed(2, "a1 b1").classes()
        with self.assertRaises(AlfInputError):
            stipsicz_parity([1, 1], classes)
        with self.assertRaises(AlfInputError):
            stipsicz_parity([3], classes)
        with self.assertRaises(AlfInputError):
            stipsicz_parity([0], classes)


class ValidateWitnessTests(unittest.TestCase):
    def test_accepts_the_worked_example_witness(self):
        classes = _doubled(2, "b1 c1 b2").classes()
        self.assertTrue(validate_witness(SpinWitness((1, 2), 3), classes))

    def test_rejects_broken_witnesses(self):
        classes = _doubled(2, "b1 c1 b2").classes()
        for witness in [
            SpinWitness((1,), 3),
            SpinWitness((1, 2), 2),
            SpinWitness((1, 2), 4),
            SpinWitness((1, 2), 3, parity=1),
        ]:
            self.assertFalse(validate_witness(witness, classes), witness)


class SpinStatusShapeTests(unittest.TestCase):
    def test_witness_must_match_verdict(self):
        with self.assertRaises(AlfInputError):
            SpinStatus(True, SpinWitness((), 1), "brute")
        with self.assertRaises(AlfInputError):
            SpinStatus(False, None, "linear")
        with self.assertRaises(AlfInputError):
            SpinStatus(True, None, "guess")

    def test_dict_round_trip(self):
        status = SpinStatus(False, SpinWitness((1, 2), 3), "both")
        self.assertEqual(
            status.to_dict(),
            {"spin": False, "witness": {"subset": [1, 2], "target": 3}, "method": "both"},
        )
        self.assertEqual(SpinStatus.from_dict(status.to_dict()), status)


class BruteForceTests(unittest.TestCase):
    def test_worked_example(self):
        status = not_spin_bruteforce(_doubled(2, "b1 c1 b2"))
        self.assertFalse(status.spin)
        self.assertEqual((status.witness.subset, status.witness.target), ((1, 2), 3))
        self.assertEqual(status.witness.parity, 0)
        self.assertEqual(status.method, "brute")

    def test_separating_letter_alone_is_a_witness(self):
        status = not_spin_bruteforce(_doubled(2, "a1 s1"))
        self.assertFalse(status.spin)
        self.assertEqual((status.witness.subset, status.witness.target), ((), 2))

    def test_repeated_curve_is_spin(self):
        self.assertTrue(not_spin_bruteforce(_doubled(2, "b2 b2")).spin)
        self.assertTrue(not_spin_bruteforce(_closed(4, "b2 b2")).spin)

    def test_empty_word_is_spin(self):
        self.assertTrue(not_spin_bruteforce(_closed(2, "")).spin)

    def test_smallest_witness_wins(self):
        # Positions 1,2,3 already form a witness; position 4 alone is smaller.
        status = not_spin_bruteforce(_doubled(2, "b1 c1 b2 s1"))
        self.assertEqual((status.witness.subset, status.witness.target), ((), 4))

    def test_needs_a_closed_fiber(self):
        with self.assertRaisesRegex(AlfInputError, "double it first"):
            not_spin_bruteforce(make_alf(standard_surface(2, 1), _word("b1 c1 b2")))

    def test_bound(self):
        with self.assertRaises(AlfInputError):
            not_spin_bruteforce(_doubled(2, "b1 c1 b2"), bound=2)


class LinearTests(unittest.TestCase):
    def test_worked_example(self):
        status = not_spin_linear(_doubled(2, "b1 c1 b2"))
        self.assertFalse(status.spin)
        self.assertEqual((status.witness.subset, status.witness.target), ((1, 2), 3))
        self.assertEqual(status.method, "linear")

    def test_spin_cases(self):
        self.assertTrue(not_spin_linear(_closed(3, "")).spin)
        self.assertTrue(not_spin_linear(_doubled(2, "a1 b1 c1 a2")).spin)

    def test_separating_letter(self):
        status = not_spin_linear(_closed(3, "a1 s2"))
        self.assertFalse(status.spin)
        self.assertEqual((status.witness.subset, status.witness.target), ((), 2))

    def test_handles_long_words(self):
        # Far beyond what brute force could enumerate.
        word = " ".join(["a1", "b1", "c1", "a2", "b2"] * 40)
        status = not_spin_linear(_doubled(2, word))
        self.assertFalse(status.spin)
        self.assertTrue(validate_witness(status.witness, _doubled(2, word).classes()))


class OracleEquivalenceTests(unittest.TestCase):
    def _compare(self, alf):
        brute = not_spin_bruteforce(alf)
        linear = not_spin_linear(alf)
        self.assertEqual(brute.spin, linear.spin, list(alf.word.names))
        classes = alf.classes()
        for status in (brute, linear):
            if status.witness is not None:
                self.assertTrue(validate_witness(status.witness, classes))

    def test_random_humphreys_words(self):
        rng = random.Random(61)
        for _ in range(300):
            self._compare(_random_humphreys_alf(rng))

    def test_random_vanishing_classes(self):
        rng = random.Random(67)
        for _ in range(300):
            self._compare(_random_class_alf(rng, rng.randint(1, 3), rng.randint(0, 10)))


class SpinPropertyTests(unittest.TestCase):
    def test_duplicating_a_letter_keeps_non_spin(self):
        rng = random.Random(71)
        checked = 0
        while checked < 50:
            alf = _random_class_alf(rng, 2, rng.randint(1, 8))
            if spin_status(alf).spin:
                continue
            letter = rng.choice(alf.word.letters)
            longer = make_alf(alf.fiber, alf.word + TwistWord((letter,)), alf.system)
            self.assertFalse(spin_status(longer).spin)
            checked += 1

    def test_permutation_and_chirality_invariance(self):
        rng = random.Random(73)
        for _ in range(100):
            alf = _random_humphreys_alf(rng)
            letters = list(alf.word.letters)
            rng.shuffle(letters)
            other = make_alf(alf.fiber, TwistWord(tuple(letters)).with_chirality(), alf.system)
            self.assertEqual(spin_status(alf).spin, spin_status(other).spin)


class SpinStatusTests(unittest.TestCase):
    def test_worked_example_runs_both(self):
        status = spin_status(_doubled(2, "b1 c1 b2"))
        self.assertEqual(
            status.to_dict(),
            {"spin": False, "witness": {"subset": [1, 2], "target": 3}, "method": "both"},
        )

    def test_empty_word(self):
        status = spin_status(_doubled(2, ""))
        self.assertTrue(status.spin)
        self.assertEqual(status.method, "both")

    def test_long_words_use_the_linear_method_only(self):
        word = " ".join(["a1", "a2"] * 13)
        status = spin_status(_doubled(2, word))
        self.assertTrue(status.spin)
        self.assertEqual(status.method, "linear")

    def test_bound_comes_from_config(self):
        with mock.patch.object(spin_oracle, "BRUTE_FORCE_BOUND", 2):
            self.assertEqual(spin_status(_doubled(2, "b1 c1 b2")).method, "linear")
        self.assertEqual(spin_status(_doubled(2, "b1 c1 b2"), bound=3).method, "both")

    def test_disagreement_is_an_internal_error(self):
        wrong = SpinStatus(True, None, "brute")
        with mock.patch.object(spin_oracle, "not_spin_bruteforce", return_value=wrong), \
                redirect_stderr(io.StringIO()) as err:
            with self.assertRaises(InternalInconsistencyError):
                spin_status(_doubled(2, "b1 c1 b2"))
        self.assertIn("[ERROR] spin oracle mismatch: InternalInconsistencyError: ", err.getvalue())

    def test_invalid_witness_is_an_internal_error(self):
        forged = SpinStatus(False, SpinWitness((1,), 2), "linear")
        with mock.patch.object(spin_oracle, "not_spin_linear", return_value=forged), \
                redirect_stderr(io.StringIO()) as err:
            with self.assertRaises(InternalInconsistencyError):
                spin_status(_doubled(2, "b1 c1 b2"))
        self.assertIn("[ERROR] invalid spin witness: InternalInconsistencyError: ", err.getvalue())


if __name__ == "__main__":
    unittest.main()
