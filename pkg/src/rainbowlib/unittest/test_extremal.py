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

Tests for the sharpness family G_k.
"""

import itertools
import unittest

from .. import extremal, graph, rainbow
from ..coloring import EdgeColoring
from ..extremal import ExtremalError, ExtremalSpec


def pair_coloring(k: int, hub: int, spoke: int, clique: int = 3) -> EdgeColoring:
    spec = ExtremalSpec(k)
    colors: dict = {}
    for i in spec.middle:
        colors[(spec.hub, spec.v(i))] = hub
        colors[(spec.v(i), spec.w(i))] = spoke
    for edge in itertools.combinations(spec.clique, 2):
        colors[edge] = clique
    return EdgeColoring(4, colors)


class GenExtremalTestCase(unittest.TestCase):
    def test_sizes(self):
        g, spec = extremal.gen_extremal(3)
        self.assertEqual((g.n, g.m), (7, 9))
        self.assertEqual(spec.middle, (1, 2, 3))
        self.assertEqual(spec.clique, (4, 5, 6))

        g, spec = extremal.gen_extremal(17)
        self.assertEqual((g.n, g.m), (35, 170))
        self.assertEqual((spec.n, spec.m), (35, 170))

    def test_too_small(self):
        with self.assertRaises(ExtremalError) as context:
            extremal.gen_extremal(1)
        self.assertEqual(context.exception.code, 2)

    def test_structure(self):
        for k in range(2, 31):
            g, spec = extremal.gen_extremal(k)
            self.assertTrue(graph.eligibility(g).eligible, k)
            self.assertTrue(graph.is_independent(g, spec.middle), k)
            self.assertEqual((g.n, g.m), (2 * k + 1, 2 * k + k * (k - 1) // 2))
            self.assertEqual(g.neighbors(spec.hub), spec.middle)
            for i in spec.middle:
                self.assertEqual(g.neighbors(spec.v(i)), (spec.hub, spec.w(i)))
            self.assertTrue(all(
                g.has_edge(a, b) for a, b in itertools.combinations(spec.clique, 2)
            ))

    def test_canonical_coloring(self):
        for k in (2, 5, 17):
            g, _ = extremal.gen_extremal(k)
            c = extremal.canonical_coloring(k)
            self.assertEqual(c.colors_used(), (1, 2, 3, 4, 5))
            self.assertTrue(rainbow.is_rainbow_connected(g, c).connected)


class PigeonholeTestCase(unittest.TestCase):
    def setUp(self):
        self.spec = ExtremalSpec(17)

    def test_uniform_pairs(self):
        self.assertEqual(extremal.pigeonhole_pair(self.spec, pair_coloring(17, 1, 2)), (1, 2))

    def test_first_path_differs(self):
        c = extremal.canonical_coloring(17).relabel({5: 4})
        self.assertEqual(c.colors_used(), (1, 2, 3, 4))
        self.assertEqual(extremal.pigeonhole_pair(self.spec, c), (2, 3))

    def test_needs_k_17(self):
        with self.assertRaises(ExtremalError) as context:
            extremal.pigeonhole_pair(ExtremalSpec(16), pair_coloring(16, 1, 2))
        self.assertEqual(context.exception.code, 2)

    def test_needs_four_colors(self):
        with self.assertRaises(ExtremalError):
            extremal.pigeonhole_pair(self.spec, extremal.canonical_coloring(17))


class RefutationTestCase(unittest.TestCase):
    def test_all_ones(self):
        spec = ExtremalSpec(17)
        g, _ = extremal.gen_extremal(17)
        c = EdgeColoring(4, {edge: 1 for edge in g.edges})
        refutation = extremal.refute_four_coloring(spec, c)
        self.assertEqual(refutation.pair, (1, 2))
        self.assertEqual(refutation.vertices, (1, 2))
        self.assertEqual(refutation.rainbow_paths, [])
        self.assertIsNotNone(refutation.violation)

    def test_random_colorings(self):
        summary = extremal.sample_refutations(17, 20, 3)
        self.assertEqual(summary.refuted, 20)
        self.assertTrue(summary.all_refuted)
        self.assertEqual(len(summary.pairs), 20)

    def test_random_coloring_is_seeded(self):
        g, _ = extremal.gen_extremal(17)
        first = extremal.random_coloring(g, 4, [5, 0])
        self.assertEqual(first, extremal.random_coloring(g, 4, [5, 0]))
        self.assertLessEqual(len(first.colors_used()), 4)
        self.assertEqual(len(first), g.m)

    def test_sampling_limits(self):
        with self.assertRaises(ExtremalError):
            extremal.sample_refutations(16, 1, 0)
        with self.assertRaises(ExtremalError):
            extremal.sample_refutations(17, 1, 0, num_colors=5)
