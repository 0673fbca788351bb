"""
Tests for the DNA-distance, index-distance, matchings and exact balls.

    python -m pytest tests/test_metric.py -v
"""
import unittest
from itertools import permutations

import numpy as np

from dnacc.core.errors import BudgetExceeded, ParamMismatch, SizeMismatch, TooFewCodewords
from dnacc.metric import (
    INF,
    ball,
    bottleneck_matching,
    code_dna_distance,
    distance_breakdown,
    distance_le,
    dna_distance,
    exceeds,
    hall_violating_set,
    index_distance,
    is_finite,
    minimum,
    neighbourhood,
    saturating_add,
    to_json_value,
)
from dnacc.primitives import BitVector, SystemParams, hamming, iter_messages, message_from_pairs

from golden import (
    DISJOINT_Z1,
    DISJOINT_Z2,
    P,
    SHARED_PARAMS,
    SHARED_WEIGHTS,
    SHARED_Z1,
    SHARED_Z2,
)


def words(*bits):
    return [BitVector.from_str(b) for b in bits]


class TestDistanceValues(unittest.TestCase):

    def test_infinity_orders_above_integers(self):
        self.assertTrue(exceeds(INF, 10 ** 9))
        self.assertFalse(exceeds(3, 3))
        self.assertTrue(distance_le(5, INF))
        self.assertFalse(distance_le(INF, 5))

    def test_finiteness_and_saturating_sum(self):
        self.assertTrue(is_finite(0))
        self.assertFalse(is_finite(INF))
        self.assertEqual(saturating_add(2, 3), 5)
        self.assertIs(saturating_add(2, INF), INF)
        self.assertIs(saturating_add(INF, INF), INF)

    def test_minimum_and_json(self):
        self.assertEqual(minimum([INF, 1, INF]), 1)
        self.assertIs(minimum([INF, INF]), INF)
        self.assertEqual(to_json_value(INF), "inf")
        self.assertEqual(to_json_value(2), 2)


class TestDnaDistance(unittest.TestCase):

    def test_shared_multiset_pair(self):
        self.assertEqual(dna_distance(SHARED_Z1, SHARED_Z2), 1)
        breakdown = distance_breakdown(SHARED_Z1, SHARED_Z2)
        weights = {str(u): m.weight for u, m in breakdown.items()}
        self.assertEqual(weights, SHARED_WEIGHTS)

    def test_different_multisets_are_infinitely_far(self):
        other = message_from_pairs(SHARED_PARAMS, [("00", "000"), ("01", "000"), ("10", "111"), ("11", "001")])
        self.assertIs(dna_distance(SHARED_Z1, other), INF)
        self.assertIsNone(distance_breakdown(SHARED_Z1, other))

    def test_distance_to_self_is_zero(self):
        self.assertEqual(dna_distance(SHARED_Z1, SHARED_Z1), 0)

    def test_disjoint_pair_distance(self):
        self.assertEqual(dna_distance(DISJOINT_Z1, DISJOINT_Z2), 2)

    def test_parameter_mismatch(self):
        with self.assertRaises(ParamMismatch):
            dna_distance(SHARED_Z1, DISJOINT_Z1)

    def test_code_distance_ignores_infinite_pairs(self):
        other = message_from_pairs(SHARED_PARAMS, [("00", "000"), ("01", "000"), ("10", "000"), ("11", "000")])
        self.assertEqual(code_dna_distance([SHARED_Z1, SHARED_Z2, other]), 1)
        self.assertIs(code_dna_distance([SHARED_Z1, other]), INF)

    def test_code_distance_needs_two_codewords(self):
        with self.assertRaises(TooFewCodewords):
            code_dna_distance([SHARED_Z1, SHARED_Z1])

    def test_index_distance(self):
        rows = list(P)
        self.assertEqual(index_distance(rows[0], rows[0]), 0)
        for a in rows:
            for b in rows:
                if a != b:
                    self.assertGreaterEqual(index_distance(a, b), 2)


class TestMatching(unittest.TestCase):

    def test_bottleneck_prefers_balanced_pairs(self):
        matching = bottleneck_matching(words("00", "10"), words("00", "01"))
        self.assertEqual(matching.weight, 1)
        self.assertEqual(len(matching.pairs), 2)

    def test_size_mismatch(self):
        with self.assertRaises(SizeMismatch):
            bottleneck_matching(words("00", "10"), words("00"))

    def test_hall_witness_when_threshold_too_small(self):
        A, B = words("00", "11"), words("01", "10")
        self.assertIsNone(hall_violating_set(A, B, 1))
        Y = hall_violating_set(A, B, 0)
        self.assertIsNotNone(Y)
        self.assertGreater(len(Y), len(neighbourhood(Y, B, 0)))

    def test_hall_witness_examples(self):
        self.assertIsNone(hall_violating_set(words("00", "10"), words("01", "00"), 1))
        self.assertEqual(hall_violating_set(words("00"), words("11"), 1), frozenset(words("00")))
        Y = hall_violating_set(words("0000", "1100"), words("1111", "0011"), 1)
        self.assertEqual(Y, frozenset(words("0000", "1100")))
        self.assertEqual(neighbourhood(Y, words("1111", "0011"), 1), frozenset())

    def test_identical_sets_match_at_weight_zero(self):
        matching = bottleneck_matching(words("01", "10"), words("10", "01"))
        self.assertEqual(matching.weight, 0)
        self.assertTrue(all(a == b for a, b in matching.pairs))

    def test_hall_witness_partial_neighbourhood(self):
        A, B = words("000", "001", "111"), words("000", "001", "010")
        Y = hall_violating_set(A, B, 1)
        self.assertIsNotNone(Y)
        self.assertGreater(len(Y), len(neighbourhood(Y, B, 1)))


class TestMatchingAgainstBruteForce(unittest.TestCase):

    def random_sets(self, rng):
        length = int(rng.integers(2, 5))
        n = int(rng.integers(1, min(5, 1 << length) + 1))
        A = [BitVector(length, int(v)) for v in rng.choice(1 << length, n, replace=False)]
        B = [BitVector(length, int(v)) for v in rng.choice(1 << length, n, replace=False)]
        return length, A, B

    def test_weight_is_the_minimum_over_all_bijections(self):
        rng = np.random.default_rng(11)
        for _ in range(300):
            _, A, B = self.random_sets(rng)
            best = min(max(hamming(a, b) for a, b in zip(A, p)) for p in permutations(B))
            matching = bottleneck_matching(A, B)
            self.assertEqual(matching.weight, best)
            self.assertEqual(sorted(a for a, _ in matching.pairs), sorted(A))
            self.assertEqual(sorted(b for _, b in matching.pairs), sorted(B))
            self.assertTrue(all(hamming(a, b) <= best for a, b in matching.pairs))

    def test_hall_witness_exists_exactly_below_the_weight(self):
        rng = np.random.default_rng(12)
        for _ in range(300):
            length, A, B = self.random_sets(rng)
            weight = bottleneck_matching(A, B).weight
            for t in range(length + 1):
                Y = hall_violating_set(A, B, t)
                self.assertEqual(Y is None, weight <= t)
                if Y is not None:
                    self.assertGreater(len(Y), len(neighbourhood(Y, B, t)))


class TestBall(unittest.TestCase):

    def test_radius_zero_is_the_message(self):
        self.assertEqual(ball(SHARED_Z1, 0), frozenset({SHARED_Z1}))
        self.assertEqual(ball(SHARED_Z1, -1), frozenset())

    def test_ball_matches_distance_on_a_small_space(self):
        params = SystemParams(M=2, L=3, l=2)
        space = list(iter_messages(params))
        for Z in space[:6]:
            for r in range(3):
                expected = {Y for Y in space if distance_le(dna_distance(Z, Y), r)}
                self.assertEqual(ball(Z, r), frozenset(expected))

    def test_radius_one_balls_of_the_distance_two_pair_are_disjoint(self):
        b1, b2 = ball(DISJOINT_Z1, 1), ball(DISJOINT_Z2, 1)
        self.assertIn(DISJOINT_Z1, b1)
        self.assertEqual(b1 & b2, frozenset())
        for Y in b1:
            self.assertLessEqual(dna_distance(DISJOINT_Z1, Y), 1)

    def test_shared_pair_balls_contain_each_other(self):
        self.assertIn(SHARED_Z2, ball(SHARED_Z1, 1))

    def test_cap_is_enforced(self):
        with self.assertRaises(BudgetExceeded):
            ball(DISJOINT_Z1, 2, cap=10)


if __name__ == "__main__":
    unittest.main()
