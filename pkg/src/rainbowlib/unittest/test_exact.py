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

Tests for the exact rainbow connection number search.
"""

import unittest

import numpy as np

from .. import exact, graph, rainbow
from ..exact import ExactSearchError
from . import common


class ExactTestCase(unittest.TestCase):
    def test_complete_graphs(self):
        for n in range(3, 8):
            result = exact.exact_rc(graph.complete_graph(n))
            self.assertEqual(result.rc_value, 1)
            self.assertTrue(result.exhausted)

    def test_paths(self):
        for n in range(3, 7):
            result = exact.exact_rc(graph.path_graph(n))
            self.assertEqual(result.rc_value, n - 1)
            self.assertTrue(result.exhausted)

    def test_cycles(self):
        self.assertEqual(exact.exact_rc(graph.cycle_graph(4)).rc_value, 2)
        self.assertEqual(exact.exact_rc(graph.cycle_graph(5)).rc_value, 3)
        self.assertEqual(exact.exact_rc(graph.cycle_graph(6)).rc_value, 3)

    def test_optimal_coloring_is_verified(self):
        g = graph.cycle_graph(5)
        result = exact.exact_rc(g)
        self.assertEqual(result.optimal_coloring.num_colors, 3)
        self.assertTrue(rainbow.is_rainbow_connected(g, result.optimal_coloring).connected)
        self.assertEqual(result.lower_bound, 3)

    def test_matches_unpruned_enumeration(self):
        rng = np.random.Generator(np.random.PCG64(77))
        for _ in range(30):
            n = int(rng.integers(4, 6))
            m = int(rng.integers(n - 1, min(7, n * (n - 1) // 2) + 1))
            g = common.random_connected_graph(rng, n, m)
            self.assertEqual(exact.exact_rc(g).rc_value, common.brute_force_rc(g))

    def test_palette_limit_reports_upper_bound(self):
        g = graph.cycle_graph(6)
        result = exact.exact_rc(g, max_colors=2)
        self.assertFalse(result.exhausted)
        self.assertEqual(result.lower_bound, 3)
        self.assertEqual(result.rc_value, 5)
        self.assertTrue(rainbow.is_rainbow_connected(g, result.optimal_coloring).connected)

    def test_budget(self):
        g = graph.cycle_graph(7)
        result = exact.exact_rc(g, budget=1)
        self.assertLessEqual(result.colorings_tested, 1)
        self.assertTrue(rainbow.is_rainbow_connected(g, result.optimal_coloring).connected)
        if not result.exhausted:
            self.assertEqual(result.rc_value, 6)

    def test_lower_bound_and_tree(self):
        g = graph.wheel_graph(6)
        self.assertEqual(exact.rc_lower_bound(g), 2)
        tree = exact.spanning_tree_coloring(g)
        self.assertEqual(tree.num_colors, 5)
        self.assertTrue(rainbow.is_rainbow_connected(g, tree).connected)

    def test_disconnected(self):
        with self.assertRaises(ExactSearchError):
            exact.exact_rc(graph.Graph(4, [(0, 1), (2, 3)]))
