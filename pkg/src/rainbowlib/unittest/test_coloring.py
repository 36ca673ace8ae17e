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

Tests for edge colorings and the coloring file format.
"""

import unittest

from .. import coloring, graph
from ..coloring import ColoringError, EdgeColoring


class ColoringTestCase(unittest.TestCase):
    def setUp(self):
        self.g = graph.cycle_graph(4)
        self.c = coloring.from_sequence(self.g, [1, 2, 1, 2])

    def test_colors_outside_palette(self):
        with self.assertRaises(ColoringError) as context:
            EdgeColoring(2, {(0, 1): 3})
        self.assertEqual(context.exception.code, 2)

    def test_canonical_lookup(self):
        self.assertEqual(self.c.color(1, 0), self.c.color(0, 1))
        self.assertIn((3, 0), self.c)
        self.assertEqual(self.c.colors_used(), (1, 2))

    def test_relabel(self):
        swapped = self.c.relabel({1: 2, 2: 1})
        for edge in self.g.edges:
            self.assertEqual(swapped.color(*edge), 3 - self.c.color(*edge))

    def test_recolor(self):
        changed = self.c.recolor({(0, 1): 2})
        self.assertEqual(changed.color(0, 1), 2)
        self.assertEqual(self.c.color(0, 1), self.g.edges.index((0, 1)) % 2 + 1)

    def test_validate_mismatch(self):
        triangle = graph.complete_graph(3)
        with self.assertRaises(ColoringError) as context:
            self.c.validate(triangle)
        self.assertEqual(context.exception.code, 2)

    def test_file_round_trip(self):
        text = self.c.deb822
        self.assertIn('Num-Colors: 2', text)
        self.assertIn('Edges: 4', text)
        self.assertEqual(coloring.parse_coloring(text), self.c)

    def test_parse_errors(self):
        with self.assertRaisesRegex(ColoringError, 'Num-Colors'):
            coloring.parse_coloring('Edges: 1\nColoring:\n 0 1 1\n')
        with self.assertRaisesRegex(ColoringError, 'promises'):
            coloring.parse_coloring('Num-Colors: 1\nEdges: 2\nColoring:\n 0 1 1\n')
        with self.assertRaisesRegex(ColoringError, 'twice'):
            coloring.parse_coloring(
                'Num-Colors: 1\nEdges: 2\nColoring:\n 0 1 1\n 1 0 1\n'
            )

    def test_helpers(self):
        self.assertEqual(coloring.uniform_coloring(self.g).colors_used(), (1,))
        distinct = coloring.distinct_coloring(self.g)
        self.assertEqual(distinct.colors_used(), (1, 2, 3, 4))
        with self.assertRaises(ColoringError):
            coloring.from_sequence(self.g, [1, 2])
