"""
Tests for permanents, ball sizes, upper bounds, construction sizes and redundancy.

    python -m pytest tests/test_bounds.py -v
"""
import math
import unittest
from itertools import permutations

import numpy as np

from dnacc.bounds import (
    A_U_size,
    BinaryMatrix,
    ball_size_B,
    build_A,
    construction_size,
    exact_F,
    extension_lower_bound,
    packing_radius_count,
    permanent,
    redundancy_distinct,
    singleton_bound,
    sphere_packing_bound,
)
from dnacc.core.errors import (
    BudgetExceeded,
    EmptySpace,
    InvalidParams,
    NotPowerOfTwo,
    OutOfRange,
    SizeMismatch,
    UnsupportedD,
    UnsupportedEd,
)
from dnacc.indexcodes import IndexTuple, construct_coset, inner_code_by_name
from dnacc.metric import ball, index_distance
from dnacc.primitives import SystemParams, distinct_space_size, message_from_pairs, space_size


def brute_permanent(a):
    n = len(a)
    return sum(math.prod(a[i][p[i]] for i in range(n)) for p in permutations(range(n)))


class TestPermanent(unittest.TestCase):

    def test_matches_brute_force(self):
        rng = np.random.default_rng(3)
        for n in range(1, 7):
            a = rng.integers(0, 2, size=(n, n))
            with self.subTest(n=n):
                self.assertEqual(permanent(BinaryMatrix(a)), brute_permanent(a.tolist()))

    def test_all_ones_and_empty(self):
        self.assertEqual(permanent(BinaryMatrix(np.ones((7, 7), dtype=int))), math.factorial(7))
        self.assertEqual(permanent(BinaryMatrix(np.zeros((0, 0), dtype=int))), 1)

    def test_matrix_validation(self):
        with self.assertRaises(SizeMismatch):
            BinaryMatrix(np.ones((2, 3), dtype=int))
        with self.assertRaises(InvalidParams):
            BinaryMatrix(np.array([[0, 2], [1, 1]]))
        self.assertEqual(BinaryMatrix([[1, 0], [0, 1]]), BinaryMatrix(np.eye(2, dtype=int)))

    def test_dimension_cap(self):
        with self.assertRaises(BudgetExceeded):
            permanent(BinaryMatrix(np.ones((5, 5), dtype=int)), cap=4)


class TestBallSizes(unittest.TestCase):

    def test_small_ball_sizes(self):
        self.assertEqual([ball_size_B(r, 4) for r in range(3)], [1, 9, 24])
        self.assertEqual(ball_size_B(3, 8), math.factorial(8))

    def test_ball_size_counts_permutations(self):
        identity = IndexTuple.from_values(3, range(8))
        for r in (1, 2):
            count = sum(
                1 for p in permutations(range(8))
                if index_distance(identity, IndexTuple.from_values(3, p)) <= r
            )
            self.assertEqual(ball_size_B(r, 8), count)

    def test_message_balls_match_the_permanent(self):
        params = SystemParams(M=4, L=4, l=2)
        for pairs in (
            [("00", "00"), ("01", "01"), ("10", "10"), ("11", "11")],
            [("11", "00"), ("00", "01"), ("10", "10"), ("01", "11")],
        ):
            Z = message_from_pairs(params, pairs)
            self.assertEqual([len(ball(Z, r)) for r in range(3)], [ball_size_B(r, 4) for r in range(3)])
        Z = message_from_pairs(SystemParams(M=2, L=3, l=1), [("0", "00"), ("1", "11")])
        self.assertEqual([len(ball(Z, r)) for r in range(2)], [ball_size_B(r, 2) for r in range(2)])

    def test_build_A(self):
        A = build_A(1, 4)
        self.assertEqual(A.entries.tolist(), [[1, 1, 1, 0], [1, 1, 0, 1], [1, 0, 1, 1], [0, 1, 1, 1]])
        with self.assertRaises(NotPowerOfTwo):
            build_A(1, 6)


class TestUpperBounds(unittest.TestCase):

    def test_sphere_packing(self):
        self.assertEqual([sphere_packing_bound(4, d).floor for d in (1, 2, 3)], [24, 24, 2])
        at_8 = sphere_packing_bound(8, 3)
        self.assertEqual(at_8.floor, 70)
        self.assertEqual(at_8.exact, "70")
        self.assertEqual(at_8.notes, [])

    def test_fractional_exponent_is_noted(self):
        report = sphere_packing_bound(4, 3)
        self.assertIsNone(report.exact)
        self.assertEqual(len(report.notes), 1)
        self.assertAlmostEqual(float(report.value), 24 / 6 ** (4 / 3), places=12)

    def test_packing_radius(self):
        self.assertEqual(packing_radius_count(8, 3), 4)
        self.assertEqual(packing_radius_count(16, 5), 11)

    def test_singleton(self):
        self.assertEqual(singleton_bound(4, 2).floor, 6)
        self.assertEqual(singleton_bound(8, 3).floor, 70)
        self.assertEqual(singleton_bound(8, 1).floor, math.factorial(8))
        with self.assertRaises(OutOfRange):
            singleton_bound(8, 5)

    def test_bounds_hold_wherever_exact_search_completes(self):
        checked = []
        for M in (4, 8):
            l = M.bit_length() - 1
            for d in (1, 2, 3):
                F = exact_F(l, M, d)
                if F is None:
                    continue
                checked.append((M, d))
                self.assertLessEqual(F, singleton_bound(M, d).floor)
                self.assertLessEqual(F, sphere_packing_bound(M, d).floor)
        self.assertIn((4, 2), checked)
        self.assertIn((8, 1), checked)

    def test_validated_constructions_respect_the_bounds(self):
        for M, d, inner in ((4, 2, "parity"), (8, 2, "parity"), (8, 3, "hamming")):
            l = M.bit_length() - 1
            built, _ = construct_coset(M, d, inner_code_by_name(inner, l))
            self.assertTrue(built.validate().valid)
            self.assertLessEqual(built.size, singleton_bound(M, d).floor)
            self.assertLessEqual(built.size, sphere_packing_bound(M, d).floor)
            F = exact_F(l, M, d)
            if F is not None:
                self.assertLessEqual(built.size, F)

    def test_bounds_dominate_exact_values(self):
        for d in (1, 2, 3):
            F = exact_F(2, 4, d)
            self.assertLessEqual(F, singleton_bound(4, d).floor)
            self.assertLessEqual(F, sphere_packing_bound(4, d).floor)


class TestConstructionSizes(unittest.TestCase):

    def test_parity_sizes(self):
        self.assertEqual(construction_size(4, 2).floor, 4)
        self.assertEqual(construction_size(8, 2).floor, 612)

    def test_hamming_sizes(self):
        report = construction_size(8, 3)
        self.assertEqual(report.floor, 16)
        self.assertEqual(report.extra["appendix"], "40")
        self.assertEqual(report.extra["c_prime"], "2")

    def test_unsupported(self):
        with self.assertRaises(UnsupportedD):
            construction_size(8, 4)
        with self.assertRaises(OutOfRange):
            construction_size(4, 3)

    def test_extension_lower_bound(self):
        report = extension_lower_bound(6, 4, 2, l=2)
        self.assertEqual(report.lower, 96)
        self.assertEqual(report.inputs["l_extended"], 3)
        with self.assertRaises(OutOfRange):
            extension_lower_bound(-1, 4, 2)


class TestRedundancy(unittest.TestCase):

    def test_exact_value(self):
        report = redundancy_distinct(2, 3, 1)
        self.assertAlmostEqual(float(report.value), math.log2(16 / 12), places=12)
        self.assertFalse(report.extra["beta_ok"])

    def test_upper_bound_holds(self):
        report = redundancy_distinct(2, 6, 1)
        self.assertAlmostEqual(float(report.value), math.log2(32 / 31), places=12)
        self.assertTrue(report.extra["beta_ok"])
        self.assertLessEqual(float(report.value), float(report.extra["upper"]))
        self.assertLess(float(report.value), 1)

    def test_single_strand_has_no_redundancy(self):
        self.assertEqual(float(redundancy_distinct(1, 3, 1).value), 0.0)

    def test_matches_space_sizes(self):
        params = SystemParams(M=4, L=16, l=2)
        expected = math.log2(space_size(params)) - math.log2(distinct_space_size(params))
        report = redundancy_distinct(4, 16, 2)
        self.assertAlmostEqual(float(report.value), expected, places=9)
        self.assertLess(float(report.value), float(report.extra["upper"]))
        self.assertLess(float(report.extra["upper"]), 1)

    def test_small_rate_parameter_sets(self):
        cases = []
        for M in (2, 3, 4, 8, 16):
            l = max(1, (M - 1).bit_length())
            for extra in range(4):
                k = (M * M).bit_length() + extra
                cases.append((M, l + k, l))
        self.assertEqual(len(cases), 20)
        for M, L, l in cases:
            with self.subTest(M=M, L=L, l=l):
                self.assertLess(math.log2(M) / L, (1 - l / L) / 2)
                report = redundancy_distinct(M, L, l)
                exact, upper = float(report.value), float(report.extra["upper"])
                self.assertLess(exact, upper)
                self.assertLess(upper, 1)
                params = SystemParams(M=M, L=L, l=l)
                expected = math.log2(space_size(params)) - math.log2(distinct_space_size(params))
                self.assertLessEqual(abs(exact - expected), 1e-9 * expected)

    def test_empty_space(self):
        with self.assertRaises(EmptySpace):
            redundancy_distinct(4, 3, 2)


class TestClassSize(unittest.TestCase):

    def test_regimes(self):
        self.assertEqual(A_U_size(2, 4, 1, K=1, e_i=0).floor, 24)
        self.assertEqual(A_U_size(2, 4, "1/2", K=2, e_i=1).floor, 6)
        self.assertEqual(A_U_size(2, 4, "1/4", K=8, e_i=3).floor, 24)
        self.assertEqual(A_U_size(2, 4, 1, K=1, e_i=1).floor, 1)

    def test_over_budget_gives_a_bracket(self):
        report = A_U_size(2, 4, "1/2", K=2, e_i=1, seed=0, cap=10)
        self.assertIsNone(report.exact)
        self.assertLessEqual(report.lower, report.upper)
        self.assertEqual(report.upper, singleton_bound(4, 2).floor)
        self.assertIn("seed 0", report.notes[0])

    def test_bracket_needs_a_seed(self):
        with self.assertRaises(InvalidParams):
            A_U_size(2, 4, "1/2", K=2, e_i=1, cap=10)

    def test_data_errors_unsupported(self):
        with self.assertRaises(UnsupportedEd):
            A_U_size(2, 4, 1, K=1, e_i=0, e_d=1)


if __name__ == "__main__":
    unittest.main()
