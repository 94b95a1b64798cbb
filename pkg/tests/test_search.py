# test_search.py
import os
import sys
import unittest
from fractions import Fraction

# Add src directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../src')))

from core.exceptions import CapExceededError, InfeasibleGadgetError
from family.formulas import delta_closed_form
from family.hgraph import t0_of
from family.named import prop2, prop3, prop4
from gadgets import BroomGadget, EmptyGadget, PathCenter3Gadget
from search.realize import realize_gadget, verify_hit
from search.sweep import (ABOVE_PATH_BOUND, BELOW_MINIMUM, NON_INTEGRAL, SHORT_CYCLE,
                          SweepHit, solve_t0, sweep)


class TestRealize(unittest.TestCase):
    """Broom realizations of (n0, t0)."""

    def test_known_realizations(self):
        """Known (n0, t0) pairs map to the expected brooms."""
        cases = {
            (17, 69): 'broom-8-8-leaf',
            (10, 55): 'broom-1-8-leaf',
            (3, 5): 'broom-2-0-center',
            (2, 3): 'broom-1-0-center',
            (3, 6): 'broom-1-1-leaf',
        }
        for (n0, t0), label in cases.items():
            with self.subTest(n0=n0, t0=t0):
                gadget = realize_gadget(n0, 1, t0)
                self.assertEqual(gadget.label, label)
                self.assertEqual(gadget.order, n0)
                self.assertEqual(gadget.expected_t0(), t0)

    def test_unrealizable(self):
        """Unreachable t0 gives None, and t0 below the minimum raises."""
        self.assertIsNone(realize_gadget(3, 1, 7))
        self.assertIsNone(realize_gadget(4, 2, 6))
        with self.assertRaises(InfeasibleGadgetError):
            realize_gadget(3, 1, 4)


class TestSweep(unittest.TestCase):
    """Parameter sweep for Δ_v = m."""

    def test_solve_t0(self):
        """t0 is solved exactly for known families."""
        self.assertEqual(solve_t0(0, 95, 6, 5), 5)
        self.assertEqual(solve_t0(0, 25, 4, 17), 69)
        self.assertEqual(solve_t0(0, 71, 4, 3), 5)

    def test_rediscovers_named_families(self):
        """Single-cell sweeps return the named tuples with their gadgets."""
        cases = [
            ((0, [95], [6], [5], 5), (95, 6, 5, 5, 5), EmptyGadget(5)),
            ((1, [111], [7], [6], 6), (111, 7, 6, 6, 6), EmptyGadget(6)),
            ((0, [28], [2], [10], 1), (28, 2, 1, 10, 55), BroomGadget(1, 8, from_leaf=True)),
            ((0, [25], [4], [17], 1), (25, 4, 1, 17, 69), BroomGadget(8, 8, from_leaf=True)),
            ((0, [71], [4], [3], 1), (71, 4, 1, 3, 5), PathCenter3Gadget()),
        ]
        for (m, ns, ks, n0s, l), key, gadget in cases:
            with self.subTest(key=key):
                hits = sweep(m, ns, ks, n0s, l=l)
                self.assertEqual([hit.key() for hit in hits], [key])
                self.assertEqual(hits[0].realization, gadget)
                self.assertEqual(hits[0].bound, Fraction(key[1], key[1] + key[3]))

    def test_rediscovers_every_table_tuple(self):
        """Each tabulated family instance is a realized sweep hit with the right t0."""
        instances = ([(m, prop2(m)) for m in range(6)]
                     + [(0, prop3(k)) for k in range(2, 8)]
                     + [(0, prop4(k)) for k in range(4, 20, 3)])
        self.assertEqual(len(instances), 18)
        for m, params in instances:
            with self.subTest(label=params.label()):
                hits = sweep(m, [params.n], [params.k], [params.n0], l=params.l)
                self.assertEqual([hit.key() for hit in hits], [params.quintuple()])
                self.assertTrue(hits[0].realized)
                self.assertEqual(t0_of(hits[0].realization), params.t0)
                self.assertEqual(delta_closed_form(params.n, params.k, params.n0, params.t0), m)

    def test_best_realized_hit(self):
        """The top realized hit for m = 0 is the 497-vertex graph."""
        hits = [hit for hit in sweep(0, range(5, 131), range(2, 12), range(1, 21)) if hit.realized]
        self.assertEqual(hits[0].key(), (71, 4, 1, 3, 5))
        self.assertEqual(hits[0].bound, Fraction(4, 7))
        self.assertEqual(hits[0].order, 497)
        self.assertLess(hits[1].bound, Fraction(4, 7))

    def test_ranking(self):
        """Hits are sorted by descending bound."""
        hits = sweep(0, range(5, 80), range(2, 8), range(1, 12))
        keys = [hit.sort_key() for hit in hits]
        self.assertEqual(keys, sorted(keys))
        for first, second in zip(hits, hits[1:]):
            self.assertGreaterEqual(first.bound, second.bound)

    def test_hits_are_exact(self):
        """Every hit satisfies the Δ closed form and the t0 minimum."""
        for hit in sweep(2, range(5, 60), range(2, 7), range(1, 10)):
            self.assertEqual(delta_closed_form(hit.n, hit.k, hit.n0, hit.t0), 2)
            self.assertEqual(hit.m, 2)
            self.assertGreaterEqual(hit.t0, 2 * hit.n0 - hit.l)

    def test_determinism(self):
        """Repeated and threaded sweeps return the same hits."""
        args = (0, range(5, 70), range(2, 7), range(1, 12))
        first = sweep(*args)
        self.assertEqual(sweep(*args), first)
        self.assertEqual(sweep(*args, threads=4), first)

    def test_rejection_ledger(self):
        """Every cell is either a hit or a tagged rejection."""
        rejected = []
        sweep(0, range(3, 5), [2], [1], rejected=rejected)
        self.assertEqual([r.reason for r in rejected], [SHORT_CYCLE, SHORT_CYCLE])
        rejected = []
        hits = sweep(0, range(5, 40), range(2, 6), range(1, 8), rejected=rejected, realize=False)
        reasons = {r.reason for r in rejected}
        self.assertTrue(reasons <= {NON_INTEGRAL, BELOW_MINIMUM, ABOVE_PATH_BOUND})
        self.assertEqual(len(hits) + len(rejected), 35 * 4 * 7)
        self.assertTrue(all(hit.realization is None for hit in hits))

    def test_l_must_be_positive(self):
        """l = 0 is refused."""
        with self.assertRaises(ValueError):
            sweep(0, [10], [2], [1], l=0)


class TestVerifyHit(unittest.TestCase):
    """Brute-force verification of realized hits."""

    def test_realized_hit_passes(self):
        """A realized hit passes brute-force verification."""
        hit = sweep(0, [25], [4], [17])[0]
        report = verify_hit(hit)
        self.assertTrue(report.passed, [c.describe() for c in report.failures()])
        self.assertEqual(report.delta_bfs, 0)
        self.assertGreaterEqual(report.ratio, Fraction(4, 21))

    def test_wrong_realization_is_reported(self):
        """A gadget with the wrong t0 fails its check."""
        hit = SweepHit(71, 4, 1, 3, 6, 0, Fraction(4, 7), PathCenter3Gadget())
        report = verify_hit(hit)
        self.assertFalse(report.passed)
        self.assertEqual([c.name for c in report.failures()], ["t0 of realization"])

    def test_unrealized_and_capped(self):
        """Unrealized hits and hits above the cap are refused."""
        with self.assertRaises(ValueError):
            verify_hit(SweepHit(71, 4, 1, 3, 5, 0, Fraction(4, 7)))
        with self.assertRaises(CapExceededError):
            verify_hit(sweep(0, [71], [4], [3])[0], cap=100)


if __name__ == '__main__':
    unittest.main()
