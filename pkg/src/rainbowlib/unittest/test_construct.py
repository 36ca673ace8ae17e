#!/usr/bin/python3

"""
Copyright (c) 2026, RainbowLib developers
All rights reserved.

This file is part of RainbowLib.

RainbowLib is free software: you can redistribute it and/or modify
it under the terms of the GNU Lesser General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

RainbowLib is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License
along with RainbowLib.  If not, see <https://www.gnu.org/licenses/>.

Tests for the constructive 5-coloring.
"""

import itertools
import unittest

from unittest import mock

import networkx as nx

from .. import construct, exact, graph, rainbow, util
from ..construct import ConstructionError, PartialColoring, PreconditionError
from ..construct.partition import partition_first_shell
from ..construct.staging import color_stage_cycle
from ..extremal import gen_extremal
from ..generate import GenModel, random_diam2_bridgeless
from ..graph import Graph
from ..util import CycleCase, GenModelName, TerminalCase
from . import common

K23 = Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])


def side_example():
    """u=0, X={1}, Y={2}; 3 in S, 4 in T, 5 in Q and 6 in P"""
    return Graph(7, [
        (0, 1), (0, 2), (1, 3), (2, 4), (3, 4),
        (1, 5), (2, 5), (1, 6), (3, 6),
    ])


class AppropriateColoringTestCase(unittest.TestCase):
    def test_triangle(self):
        self.assertEqual(construct.appropriate_coloring((0, 1, 2)),
                         {(0, 1): 1, (1, 2): 3, (0, 2): 2})

    def test_square(self):
        self.assertEqual(construct.appropriate_coloring((0, 1, 2, 3)),
                         {(0, 1): 1, (1, 2): 3, (2, 3): 4, (0, 3): 2})

    def test_pentagon(self):
        self.assertEqual(construct.appropriate_coloring((0, 1, 2, 3, 4)),
                         {(0, 1): 1, (1, 2): 3, (2, 3): 5, (3, 4): 4, (0, 4): 2})

    def test_hexagon(self):
        with self.assertRaises(ConstructionError):
            construct.appropriate_coloring((0, 1, 2, 3, 4, 5))


class PartitionTestCase(unittest.TestCase):
    def test_wheel_blocks(self):
        bpart = partition_first_shell(graph.wheel_graph(5), 0)
        self.assertEqual(len(bpart.blocks), 1)
        self.assertEqual(bpart.blocks[0].dominator, 1)
        self.assertEqual(bpart.blocks[0].members, frozenset({1, 2, 4}))
        self.assertEqual(bpart.adjacent, frozenset({3}))
        self.assertEqual(bpart.isolated, frozenset())
        self.assertEqual(bpart.covered, frozenset({0, 1, 2, 3, 4}))

    def test_independent_shell(self):
        bpart = partition_first_shell(K23, 0)
        self.assertEqual(bpart.blocks, ())
        self.assertEqual(bpart.isolated, frozenset({2, 3, 4}))

    def test_second_shell(self):
        part = construct.partition_second_shell(side_example(), 0, {1}, {2})
        self.assertFalse(part.mirrored)
        self.assertEqual(part.s, frozenset({3}))
        self.assertEqual(part.t, frozenset({4}))
        self.assertEqual(part.q, frozenset({5}))
        self.assertEqual(part.p, frozenset({6}))
        self.assertEqual(part.l, frozenset())
        self.assertEqual(part.p1, frozenset({6}))
        self.assertFalse(part.covered)

    def test_second_shell_mirrors(self):
        part = construct.partition_second_shell(side_example(), 0, {2}, {1})
        self.assertTrue(part.mirrored)
        self.assertEqual(part.x, frozenset({1}))
        self.assertEqual(part.p, frozenset({6}))
        self.assertEqual(part.l, frozenset())


class StagingTestCase(unittest.TestCase):
    def test_shortest_cycle_prefers_new_vertices(self):
        self.assertEqual(construct.shortest_cycle_through_edge(K23, 0, 2, {0}),
                         (0, 2, 1, 3))
        self.assertEqual(
            construct.shortest_cycle_through_edge(K23, 0, 4, {0, 1, 2, 3}),
            (0, 4, 1, 2)
        )

    def test_bridge_has_no_cycle(self):
        with self.assertRaises(ConstructionError) as context:
            construct.shortest_cycle_through_edge(graph.path_graph(3), 0, 1)
        self.assertEqual(context.exception.code, 2)

    def test_conflicting_colors(self):
        partial = PartialColoring()
        partial.assign(0, 3, 1, 'test')
        partial.assign(2, 3, 4, 'test')
        with self.assertRaises(ConstructionError):
            color_stage_cycle((0, 1, 2, 3), partial)

    def test_partial_assign_conflict(self):
        partial = PartialColoring()
        partial.assign(0, 1, 1, 'first')
        partial.assign(1, 0, 1, 'again')
        self.assertEqual(partial.rules[(0, 1)], 'first')
        with self.assertRaises(ConstructionError):
            partial.assign(0, 1, 2, 'second')
        self.assertFalse(partial.offer(0, 1, 3, 'third'))


class Theorem1TestCase(unittest.TestCase):
    def assertVerified(self, g, c):
        self.assertLessEqual(len(c.colors_used()), 5)
        self.assertTrue(rainbow.is_rainbow_connected(g, c).connected)

    def test_complete_bipartite(self):
        c, trace = construct.theorem1_color(K23)
        self.assertEqual(trace.center, 0)
        self.assertEqual([stage.case for stage in trace.stages.cycles],
                         [CycleCase.FRESH_C4, CycleCase.CASE_I_LATTER])
        self.assertEqual(trace.terminal_case, TerminalCase.SHELL2_STAGED)
        self.assertEqual(dict(c.assignment), {
            (0, 2): 1, (1, 2): 3, (1, 3): 4, (0, 3): 2, (1, 4): 4, (0, 4): 2,
        })
        self.assertEqual(trace.repairs, [])
        self.assertVerified(K23, c)

    def test_five_cycle(self):
        g = graph.cycle_graph(5)
        c, trace = construct.theorem1_color(g)
        self.assertEqual(construct.choose_center(g), 0)
        self.assertEqual(trace.stages.cycles[0].case, CycleCase.FRESH_C5)
        self.assertEqual(c.colors_used(), (1, 2, 3, 4, 5))
        self.assertVerified(g, c)

    def test_wheel(self):
        g = graph.wheel_graph(5)
        c, trace = construct.theorem1_color(g)
        self.assertEqual(trace.stages.cycles, [])
        self.assertEqual(trace.stages.final, frozenset(g.vertices()))
        self.assertVerified(g, c)

    def test_sharpness_graph(self):
        g, _ = gen_extremal(17)
        c, trace = construct.theorem1_color(g)
        self.assertEqual(c.colors_used(), (1, 2, 3, 4, 5))
        self.assertEqual(trace.terminal_case, TerminalCase.SHELL2_STAGED)
        self.assertVerified(g, c)

    def test_petersen(self):
        g = graph.from_networkx(nx.petersen_graph())
        c, trace = construct.theorem1_color(g)
        self.assertTrue(trace.certificate.connected)
        self.assertVerified(g, c)

    def test_every_edge_has_a_rule(self):
        g, _ = gen_extremal(4)
        c, trace = construct.theorem1_color(g)
        self.assertEqual(set(trace.provenance), set(g.edges))
        header, rules = construct.parse_trace_rules(trace.deb822)
        self.assertEqual(header['Center'], str(trace.center))
        self.assertEqual(set(rules), set(g.edges))
        for edge, (color, rule) in rules.items():
            self.assertEqual(color, c.color(*edge))
            self.assertEqual(rule, trace.provenance[edge])

    def test_random_graphs(self):
        for index in range(12):
            model = GenModel(GenModelName.HUB, 6 + index % 7, 1000 + index)
            g = random_diam2_bridgeless(model)
            c, _ = construct.theorem1_color(g)
            self.assertVerified(g, c)

    def test_preconditions(self):
        with self.assertRaises(PreconditionError) as context:
            construct.theorem1_color(graph.complete_graph(5))
        self.assertEqual(context.exception.failed, ['diameter=2'])
        self.assertEqual(context.exception.code, 2)

        with self.assertRaises(PreconditionError) as context:
            construct.theorem1_color(graph.path_graph(4))
        self.assertEqual(context.exception.failed, ['bridgeless', 'diameter=2'])


def eligible_samples():
    """Small fixtures plus seeded graphs from the hub model"""
    samples = [
        K23, graph.cycle_graph(5), graph.wheel_graph(5),
        common.covered_example(), common.case1_example(),
        common.mirrored_example(), common.anchored_example(),
        common.single_x_example(), common.spread_example(),
        common.repair_example(),
    ]
    for index in range(8):
        model = GenModel(GenModelName.HUB, 6 + index % 7, 1000 + index)
        samples.append(random_diam2_bridgeless(model))
    return samples


class TerminalCaseTestCase(unittest.TestCase):
    def color(self, g):
        c, trace = construct.theorem1_color(g)
        self.assertLessEqual(len(c.colors_used()), 5)
        self.assertTrue(rainbow.is_rainbow_connected(g, c).connected)
        self.assertTrue(trace.certificate.connected)
        return c, trace

    def test_second_shell_covered(self):
        c, trace = self.color(common.covered_example())
        self.assertEqual(trace.center, 0)
        self.assertEqual(trace.terminal_case, TerminalCase.SHELL2_COVERED)
        self.assertEqual(trace.second_shell.s, frozenset({3}))
        self.assertEqual(trace.second_shell.t, frozenset({4}))
        self.assertEqual(dict(c.assignment), {
            (0, 1): 1, (0, 2): 2, (1, 2): 3, (1, 3): 3, (2, 4): 4, (3, 4): 5,
        })
        self.assertEqual(trace.provenance[(3, 4)], 'terminal:N2=S+T+Q:S-TQ')
        self.assertEqual(trace.repairs, [])

    def test_case_1(self):
        c, trace = self.color(common.case1_example())
        self.assertEqual(trace.terminal_case, TerminalCase.CASE_1)
        self.assertFalse(trace.mirrored)
        self.assertEqual(trace.second_shell.p, frozenset({5}))
        self.assertEqual(trace.second_shell.p1, frozenset())
        self.assertEqual(dict(c.assignment), {
            (0, 1): 1, (0, 2): 1, (0, 3): 2, (0, 4): 2,
            (1, 3): 3, (2, 4): 3, (1, 5): 5, (2, 5): 4,
        })
        self.assertTrue(all(claim.holds for claim in trace.claims))

    def test_case_1_mirrored(self):
        c, trace = self.color(common.mirrored_example())
        self.assertEqual(trace.terminal_case, TerminalCase.CASE_1)
        self.assertTrue(trace.mirrored)
        self.assertEqual(trace.second_shell.x, frozenset({3, 4}))
        self.assertEqual(trace.second_shell.l, frozenset())
        # Hub colors swap along with X and Y
        self.assertEqual(c.color(0, 1), 2)
        self.assertEqual(c.color(0, 3), 1)
        self.assertEqual(c.color(3, 5), 5)
        self.assertEqual(c.color(4, 5), 4)

    def test_subcase_2_1(self):
        _, trace = self.color(common.single_x_example())
        self.assertEqual(trace.terminal_case, TerminalCase.SUBCASE_2_1)
        self.assertEqual(len(trace.second_shell.x), 1)
        self.assertIsNotNone(trace.dpartition)

    def test_subcase_2_2_1(self):
        c, trace = self.color(common.anchored_example())
        self.assertEqual(trace.terminal_case, TerminalCase.SUBCASE_2_2_1)
        self.assertEqual(trace.second_shell.p1, frozenset({5}))
        self.assertEqual(trace.second_shell.p2, frozenset({6}))
        self.assertEqual(dict(c.assignment), {
            (0, 1): 1, (0, 2): 1, (0, 3): 2, (0, 4): 2, (1, 3): 3, (1, 4): 3,
            (1, 5): 1, (1, 6): 1, (2, 4): 4, (2, 6): 5, (5, 6): 2,
        })
        self.assertEqual(trace.repairs, [])

    def test_subcase_2_2_2(self):
        _, trace = self.color(common.spread_example())
        self.assertEqual(trace.terminal_case, TerminalCase.SUBCASE_2_2_2)
        self.assertGreater(len(trace.second_shell.x), 1)
        self.assertTrue(trace.second_shell.p1)


class RepairTestCase(unittest.TestCase):
    def test_construction_needs_one_repair(self):
        g = common.repair_example()
        trace = construct.construct_from_center(g, 0)
        self.assertEqual(trace.terminal_case, TerminalCase.SHELL2_COVERED)
        certificate = rainbow.is_rainbow_connected(g, trace.partial.to_coloring())
        self.assertEqual(certificate.violation, (1, 2))

        c = construct.repair_coloring(g, trace)
        self.assertIsNotNone(c)
        self.assertEqual(trace.repairs, [((1, 5), 1, 2)])
        self.assertEqual(trace.provenance[(1, 5)], 'repair')
        self.assertTrue(trace.certificate.connected)
        self.assertTrue(rainbow.is_rainbow_connected(g, c).connected)

    def test_theorem1_records_the_repair(self):
        g = common.repair_example()
        c, trace = construct.theorem1_color(g)
        self.assertEqual(trace.center, 0)
        self.assertEqual(trace.attempts, [(0, 'repaired 1 edges')])
        self.assertEqual(c.color(1, 5), 2)
        self.assertTrue(rainbow.is_rainbow_connected(g, c).connected)
        self.assertIn('Repairs:', trace.deb822)


class CenterFallbackTestCase(unittest.TestCase):
    def setUp(self):
        self.attempts = util.CENTER_ATTEMPTS
        self.build = construct.construct_from_center

    def tearDown(self):
        util.set_center_attempts(self.attempts)

    def refuse_center_0(self, g, u):
        if u == 0:
            raise ConstructionError('Refused center 0', code=1)
        return self.build(g, u)

    def test_next_center(self):
        g = graph.cycle_graph(5)
        with mock.patch.object(construct, 'construct_from_center',
                               side_effect=self.refuse_center_0):
            c, trace = construct.theorem1_color(g)
        self.assertEqual(trace.center, 1)
        self.assertEqual(trace.attempts[0], (0, 'error: Refused center 0'))
        self.assertEqual(trace.attempts[1], (1, 'verified'))
        self.assertTrue(rainbow.is_rainbow_connected(g, c).connected)

    def test_single_center(self):
        util.set_center_attempts(1)
        with mock.patch.object(construct, 'construct_from_center',
                               side_effect=self.refuse_center_0):
            with self.assertRaises(ConstructionError) as context:
                construct.theorem1_color(graph.cycle_graph(5))
        self.assertEqual(context.exception.code, 1)

    def test_bad_center_count(self):
        with self.assertRaises(util.RainbowError) as context:
            util.set_center_attempts(0)
        self.assertEqual(context.exception.code, 2)
        self.assertEqual(util.CENTER_ATTEMPTS, self.attempts)


class StructureTestCase(unittest.TestCase):
    def check_bpartition(self, g, bpart):
        shell1 = graph.shells(g, bpart.center).shell1
        seen: set = set()
        for block in bpart.blocks:
            self.assertFalse(seen & block.members)
            seen |= block.members
            self.assertGreaterEqual(len(block.members), 2)
            for v in block.others:
                self.assertTrue(g.has_edge(block.dominator, v))
        self.assertEqual(seen | bpart.adjacent | bpart.isolated, shell1)
        for v in bpart.adjacent:
            self.assertTrue(set(g.neighbors(v)) & bpart.non_dominators)
        for v in bpart.isolated:
            self.assertFalse(set(g.neighbors(v)) & shell1)

    def check_stages(self, g, trace):
        stages = trace.stages
        self.assertEqual(stages.stages[0], trace.bpartition.covered)
        self.assertLessEqual(graph.shells(g, trace.center).shell1, stages.final)
        for before, after in zip(stages.stages, stages.stages[1:]):
            self.assertLess(before, after)
        for stage in stages.cycles:
            cycle = stage.cycle
            self.assertIn(len(cycle), (3, 4, 5))
            self.assertEqual(cycle[0], trace.center)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                self.assertTrue(g.has_edge(a, b), (a, b))

    def check_second_shell(self, g, trace):
        part = trace.second_shell
        if part is None:
            return
        shell2 = graph.shells(g, trace.center).shell2
        self.assertEqual(part.l, frozenset())
        self.assertEqual(part.s | part.t | part.q | part.p, shell2)
        for a, b in itertools.combinations((part.s, part.t, part.q, part.p), 2):
            self.assertFalse(a & b)
        for v in part.s:
            self.assertTrue(set(g.neighbors(v)) & (part.t | part.q))
        for v in part.t:
            self.assertTrue(set(g.neighbors(v)) & (part.s | part.q))
        # S cannot grow
        for v in part.p:
            self.assertFalse(set(g.neighbors(v)) & (part.t | part.q))
        for v in part.p1:
            self.assertEqual(len(set(g.neighbors(v)) & part.x), 1)

    def test_partitions(self):
        for g in eligible_samples():
            _, trace = construct.theorem1_color(g)
            self.check_bpartition(g, trace.bpartition)
            self.check_stages(g, trace)
            self.check_second_shell(g, trace)

    def test_repeated_runs_agree(self):
        for g in eligible_samples():
            first_coloring, first = construct.theorem1_color(g)
            second_coloring, second = construct.theorem1_color(g)
            self.assertEqual(first_coloring, second_coloring)
            self.assertEqual(first.deb822, second.deb822)

    def test_exact_value_below_construction(self):
        for g in eligible_samples():
            if g.m > 11:
                continue
            c, _ = construct.theorem1_color(g)
            result = exact.exact_rc(g)
            self.assertTrue(result.exhausted)
            self.assertGreaterEqual(result.rc_value, 2)
            self.assertLessEqual(result.rc_value, len(c.colors_used()))
            self.assertLessEqual(len(c.colors_used()), 5)
