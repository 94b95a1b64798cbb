# test_families.py
import io
import os
import sys
import unittest
from fractions import Fraction

import sympy

# Add src directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../src')))

from analysis.cases import case_increases
from analysis.spectrum import delta_of_vertex
from core.distances import all_transmissions, wiener
from core.exceptions import (DisconnectedGraphError, FamilyParameterError, GadgetError,
                             MetadataError, NonIntegralDeltaError, SelectorError)
from core.graph import build_graph
from core.manager import parse_gadget, setup_families
from family.formulas import (case_sums, case_sums_by_summation, delta_closed_form,
                             delta_times_four, expected_ratio, lower_bound, tr_closed_form)
from family.hgraph import CYCLE, GADGET, HParams, build_H, hgraph_from_roles, t0_of
from family.named import example497, named_family, prop2, prop2_matching, prop3, prop4
from gadgets import (BroomGadget, CustomGadget, EmptyGadget, EmptyPlusEdgesGadget,
                     PathCenter3Gadget, PerfectMatchingGadget, StarCycleGadget,
                     StarPathGadget, first_pairs)
from utils.edgelist import format_edge_list, parse_edge_list


class TestGadgets(unittest.TestCase):
    """Gadget shapes and their apex transmission t0."""

    def test_named_gadgets(self):
        """StarPath, StarCycle, P3, Empty and matching gadgets have the tabulated t0."""
        for k in range(2, 12):
            with self.subTest(k=k):
                star_path = StarPathGadget(k)
                self.assertEqual(star_path.order, k + 8)
                self.assertEqual(t0_of(star_path), 2 * k + 51)
                star_cycle = StarCycleGadget(k)
                self.assertEqual(star_cycle.order, k + 13)
                self.assertEqual(t0_of(star_cycle), 2 * k + 61)
        self.assertEqual(t0_of(PathCenter3Gadget()), 5)
        self.assertEqual(t0_of(EmptyGadget(7)), 7)
        self.assertEqual(t0_of(PerfectMatchingGadget(6)), 6)

    def test_broom_shape_formula(self):
        """The broom shape formula agrees with BFS."""
        for leaves in range(0, 6):
            for path_length in range(0, 9):
                for from_leaf in (False, True):
                    if from_leaf and leaves == 0:
                        continue
                    broom = BroomGadget(leaves, path_length, from_leaf=from_leaf)
                    with self.subTest(label=broom.label):
                        self.assertEqual(t0_of(broom), broom.expected_t0())

    def test_labels(self):
        """Gadget labels name their shape."""
        self.assertEqual(BroomGadget(8, 8, from_leaf=True).label, 'broom-8-8-leaf')
        self.assertEqual(BroomGadget(2, 0).label, 'broom-2-0-center')
        self.assertEqual(StarPathGadget(3).label, 'starpath(3)')
        self.assertEqual(EmptyGadget(2).with_edges([(0, 1)]).label, 'empty(2)+1e')

    def test_structural_equality(self):
        """Gadgets with the same structure compare equal."""
        self.assertEqual(PathCenter3Gadget(), BroomGadget(2, 0))
        self.assertEqual(StarPathGadget(4), BroomGadget(3, 8, from_leaf=True))
        self.assertEqual(PerfectMatchingGadget(4), EmptyPlusEdgesGadget(4, [(0, 1), (2, 3)]))
        self.assertNotEqual(EmptyGadget(4), PerfectMatchingGadget(4))

    def test_first_pairs(self):
        """Inserted edges follow the lexicographic pair order."""
        self.assertEqual(first_pairs(3, range(4)), [(0, 1), (0, 2), (0, 3)])
        self.assertEqual(StarPathGadget(5).pendant_leaves(), [2, 3, 4])
        with self.assertRaises(GadgetError):
            first_pairs(4, [0, 1, 2])

    def test_invalid_gadgets(self):
        """Malformed gadgets raise GadgetError."""
        with self.assertRaises(GadgetError):
            EmptyGadget(0)
        with self.assertRaises(GadgetError):
            PerfectMatchingGadget(5)
        with self.assertRaises(GadgetError):
            CustomGadget(3, [(0, 1)], []).validate()
        with self.assertRaises(GadgetError):
            CustomGadget(3, [(0, 1)], [0, 0]).validate()
        with self.assertRaises(GadgetError):
            CustomGadget(3, [(0, 3)], [0]).validate()
        with self.assertRaises(GadgetError):
            EmptyGadget(2).with_edges([(0, 1), (1, 0)])
        # vertex 2 cannot reach the apex
        with self.assertRaises(GadgetError):
            t0_of(CustomGadget(3, [(0, 1)], [0]))

    def test_parse_gadget(self):
        """The gadget mini-language parses known forms and rejects others."""
        self.assertEqual(parse_gadget('empty/3'), EmptyGadget(3))
        self.assertEqual(parse_gadget('broom/8/8/leaf'), BroomGadget(8, 8, from_leaf=True))
        self.assertEqual(parse_gadget('p3'), PathCenter3Gadget())
        self.assertEqual(parse_gadget('starcycle/4'), StarCycleGadget(4))
        for text in ('hexagon/3', 'empty/x', 'broom/1/2', 'matching/3'):
            with self.subTest(text=text):
                with self.assertRaises(SelectorError):
                    parse_gadget(text)


class TestConstruction(unittest.TestCase):
    """build_H layout, degrees and failure modes."""

    def test_order_edges_and_degrees(self):
        """build_H lays out ids, roles and degrees as documented."""
        gadget = BroomGadget(2, 2, from_leaf=True)
        h = build_H(HParams(7, 3, gadget))
        p = h.params
        self.assertEqual(h.graph.order, 7 * (3 + 5))
        self.assertEqual(h.graph.edge_count, 3 * 7 + 7 * 3 * 1 + 7 * 4)
        self.assertEqual(p.quintuple(), (7, 3, 1, 5, t0_of(gadget)))
        for v in h.cycle_vertices:
            self.assertEqual(h.graph.degree(v), p.l + 2)
        self.assertEqual(h.graph.degree(h.gadget_vertex(3, 0)), 2 + 3)
        self.assertEqual(h.role_of[h.cycle_vertex(2, 4)], (CYCLE, 2))
        self.assertEqual(h.role_of[h.gadget_vertex(4, 1)], (GADGET, 1))
        self.assertEqual(h.position_of[h.gadget_vertex(4, 1)], 4)
        self.assertEqual(h.gadget_copy(1), list(range(21 + 5, 21 + 10)))

    def test_label(self):
        """H labels list the five parameters."""
        self.assertEqual(example497().label(), 'H(71,4,1,3,5)')

    def test_invalid_parameters(self):
        """Cycles shorter than 3 and a single cycle are refused."""
        with self.assertRaises(FamilyParameterError):
            build_H(HParams(2, 2, EmptyGadget(1)))
        with self.assertRaises(FamilyParameterError):
            build_H(HParams(5, 1, EmptyGadget(1)))

    def test_disconnected_gadget(self):
        """A gadget that cannot reach its attachment makes H disconnected."""
        with self.assertRaises(DisconnectedGraphError):
            build_H(HParams(5, 2, CustomGadget(2, [], [0])))

    def test_roles_round_trip(self):
        """H rebuilt from written role lines matches the original."""
        h = build_H(HParams(6, 2, BroomGadget(1, 2, from_leaf=True)))
        text = format_edge_list(h.graph, h.cycle_vertices)
        doc = parse_edge_list(io.StringIO(text))
        rebuilt = hgraph_from_roles(doc.graph, doc.cycle_ids)
        self.assertEqual(rebuilt.graph, h.graph)
        self.assertEqual(rebuilt.params.quintuple(), h.params.quintuple())

    def test_roles_rejected(self):
        """Missing, shifted or inconsistent roles raise MetadataError."""
        h = build_H(HParams(6, 2, EmptyGadget(1)))
        with self.assertRaises(MetadataError):
            hgraph_from_roles(h.graph, None)
        with self.assertRaises(MetadataError):
            hgraph_from_roles(h.graph, list(range(1, 12)))
        tampered = build_graph(h.graph.order, h.graph.edges() + [(0, 3)])
        with self.assertRaises(MetadataError):
            hgraph_from_roles(tampered, h.cycle_vertices)


class TestFormulas(unittest.TestCase):
    """Closed forms for cycle vertices against BFS."""

    SMALL = [
        (5, 2, EmptyGadget(1)),
        (6, 2, EmptyGadget(2)),
        (7, 3, PathCenter3Gadget()),
        (10, 2, EmptyGadget(1)),
        (11, 2, EmptyGadget(1)),
        (12, 2, EmptyGadget(2)),
        (13, 2, EmptyGadget(2)),
        (9, 4, BroomGadget(1, 3, from_leaf=True)),
    ]

    def test_transmission_matches_bfs(self):
        """The tr closed form matches BFS on every cycle vertex."""
        for n, k, gadget in self.SMALL + [(3, 2, EmptyGadget(1)), (4, 3, EmptyGadget(2))]:
            h = build_H(HParams(n, k, gadget))
            p = h.params
            with self.subTest(label=h.label()):
                tr = all_transmissions(h.graph)
                expected = tr_closed_form(p.n, p.k, p.n0, p.t0)
                self.assertEqual({tr[v] for v in h.cycle_vertices}, {expected})

    def test_delta_matches_bfs(self):
        """The Δ closed form matches a brute-force deletion."""
        for n, k, gadget in self.SMALL:
            h = build_H(HParams(n, k, gadget))
            p = h.params
            with self.subTest(label=h.label()):
                self.assertEqual(delta_of_vertex(h.graph, 0),
                                 delta_closed_form(p.n, p.k, p.n0, p.t0))

    def test_case_increases_match_case_sums(self):
        """Measured pair-class increases equal the case sums."""
        for n, k, gadget in self.SMALL[:7]:
            h = build_H(HParams(n, k, gadget))
            p = h.params
            with self.subTest(label=h.label()):
                increases = case_increases(h)
                self.assertEqual(increases.other, 0)
                self.assertEqual(increases[:3], case_sums(p.n, p.n0))
                self.assertEqual(tr_closed_form(p.n, p.k, p.n0, p.t0) - increases.total,
                                 delta_closed_form(p.n, p.k, p.n0, p.t0))

    def test_case_sums_by_summation(self):
        """Closed-form case sums equal the double sums."""
        for n in range(5, 80):
            for n0 in (1, 2, 5, 13):
                with self.subTest(n=n, n0=n0):
                    self.assertEqual(case_sums_by_summation(n, n0), case_sums(n, n0))
        with self.assertRaises(FamilyParameterError):
            case_sums(4, 1)

    def test_reference_case_sums(self):
        """Known case sums for n = 95 and n0 = 5."""
        # n = 95, n0 = 5
        self.assertEqual(case_sums(95, 5), (4141, 940, 21160))

    def test_symbolic_identity(self):
        """tr minus the case sums equals Δ symbolically for both parities."""
        p, k, n0, t0 = sympy.symbols('p k n0 t0', integer=True, positive=True)
        for n, floor_square, case1, case3, tail in (
            (2 * p, p ** 2, (4 * p ** 2 - 16 * p + 16) / 2, n0 * (4 * p ** 2 - 12 * p + 8) / 2,
             2 * n0 + 8),
            (2 * p + 1, p ** 2 + p, ((2 * p + 1) ** 2 - 8 * (2 * p + 1) + 17) / 2,
             n0 * ((2 * p + 1) ** 2 - 12 * p + 3) / 2, (k + 11 * n0 + 34) / 4),
        ):
            tr = floor_square * (k + n0) + n * (2 * k + t0 - 2)
            case2 = 2 * n0 * (n - 1)
            delta = n * (2 * k + t0 + n0 + 2) - n ** 2 * (n0 - k + 2) / 4 - tail
            self.assertEqual(sympy.expand(tr - case1 - case2 - case3 - delta), 0)

    def test_delta_is_always_integral(self):
        """4Δ is a multiple of 4 for integer inputs."""
        for n in range(5, 40):
            for k in range(2, 8):
                for n0 in range(1, 10):
                    for t0 in (n0, 2 * n0 + 3):
                        self.assertEqual(delta_times_four(n, k, n0, t0) % 4, 0)
        error = NonIntegralDeltaError((5, 2, 1, 1), 2)
        self.assertIn("(5, 2, 1, 1)", str(error))

    def test_named_deltas(self):
        """Named families have the advertised Δ."""
        for m in range(0, 20):
            p = prop2(m)
            self.assertEqual(delta_closed_form(p.n, p.k, p.n0, p.t0), m)
        for k in range(2, 20):
            p = prop3(k)
            self.assertEqual(delta_closed_form(p.n, p.k, p.n0, p.t0), 0)
        for k in range(4, 40, 3):
            p = prop4(k)
            self.assertEqual(delta_closed_form(p.n, p.k, p.n0, p.t0), 0)
        p = example497()
        self.assertEqual(delta_closed_form(p.n, p.k, p.n0, p.t0), 0)

    def test_ratios(self):
        """Lower bound and named ratios are exact fractions."""
        self.assertEqual(lower_bound(4, 3), Fraction(4, 7))
        self.assertEqual(str(expected_ratio('prop2', 0)), '6/11')
        self.assertEqual(str(expected_ratio('prop3', 4)), '1/4')
        self.assertEqual(str(expected_ratio('prop4', 13)), '1/3')
        with self.assertRaises(FamilyParameterError):
            expected_ratio('cycle')


class TestNamedFamilies(unittest.TestCase):
    """Named families and selectors."""

    def test_parameters(self):
        """Named families produce the expected parameter tuples."""
        self.assertEqual(prop2(0).quintuple(), (95, 6, 5, 5, 5))
        self.assertEqual(prop2_matching(1).quintuple(), (111, 7, 6, 6, 6))
        self.assertEqual(prop3(2).quintuple(), (28, 2, 1, 10, 55))
        self.assertEqual(prop4(4).quintuple(), (25, 4, 1, 17, 69))
        self.assertEqual(example497().quintuple(), (71, 4, 1, 3, 5))
        self.assertEqual(example497(joined=True).t0, 5)

    def test_orders(self):
        """Named families have the tabulated orders."""
        orders = {'prop2': (0, 1045), 'prop3': (2, 336), 'prop4': (4, 525)}
        for family, (parameter, order) in orders.items():
            self.assertEqual(named_family(family, parameter).order, order)
        self.assertEqual(named_family('example497').order, 497)

    def test_preconditions(self):
        """Parity and range violations raise FamilyParameterError."""
        for family, parameter in (('prop2', -1), ('prop2matching', 2), ('prop3', 1),
                                  ('prop4', 5), ('prop4', 3), ('cycle', 1), ('prop2', None)):
            with self.subTest(family=family, parameter=parameter):
                with self.assertRaises(FamilyParameterError):
                    named_family(family, parameter)
        with self.assertRaises(FamilyParameterError):
            named_family('prop4', 4, inserted_edges=1)

    def test_inserted_edges(self):
        """Inserted edges keep t0 and lower W by n per edge."""
        p = prop3(4, inserted_edges=1)
        self.assertEqual(p.gadget.internal_edges()[-1], (2, 3))
        self.assertEqual(p.t0, prop3(4).t0)
        small = HParams(10, 2, EmptyGadget(3))
        joined = HParams(10, 2, EmptyGadget(3).with_edges([(0, 1)]))
        self.assertEqual(wiener(build_H(small).graph) - wiener(build_H(joined).graph), 10)

    def test_selectors(self):
        """Selectors resolve to their parameters, and malformed ones are refused."""
        manager = setup_families()
        self.assertEqual(manager.resolve('prop2:m=0').quintuple(), (95, 6, 5, 5, 5))
        self.assertEqual(manager.resolve('h:n=25,k=4,f=broom/8/8/leaf').quintuple(), (25, 4, 1, 17, 69))
        self.assertEqual(manager.resolve('example497-joined').gadget.label, 'p3+1e')
        for selector in ('prop4:k=5', 'prop2', 'prop2:m=x', 'prop2:q=1', 'prop2:m=1,m=2',
                         'nosuch:m=1', 'Prop2:m=1', 'h:n=5,k=2', 'prop2matching:m=1,s=1'):
            with self.subTest(selector=selector):
                with self.assertRaises((SelectorError, FamilyParameterError)):
                    manager.resolve(selector)


if __name__ == '__main__':
    unittest.main()
