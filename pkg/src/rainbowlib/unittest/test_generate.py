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

Tests for the seeded graph generators.
"""

import unittest

from .. import generate, graph
from ..generate import GeneratorError, GenModel
from ..util import GenModelName


class GeneratorTestCase(unittest.TestCase):
    def test_models_are_eligible(self):
        for name in GenModelName:
            for seed in range(3):
                g = generate.random_diam2_bridgeless(GenModel(name, 10, seed))
                self.assertTrue(graph.eligibility(g).eligible, (name, seed))

    def test_deterministic(self):
        for name in GenModelName:
            model = GenModel(name, 10, 42)
            self.assertEqual(generate.random_diam2_bridgeless(model),
                             generate.random_diam2_bridgeless(model))

    def test_extremal_perturbed(self):
        g = generate.random_diam2_bridgeless(GenModel(GenModelName.EXTREMAL, 9, 7))
        self.assertEqual(g.n, 9)
        self.assertEqual(g.m, 14 + 2)
        self.assertEqual(graph.bridges(g), frozenset())

    def test_too_small(self):
        with self.assertRaises(GeneratorError) as context:
            generate.random_diam2_bridgeless(GenModel(GenModelName.HUB, 3, 0))
        self.assertEqual(context.exception.code, 2)

    def test_exhausted(self):
        model = GenModel(GenModelName.UNIFORM, 60, 1, max_attempts=1)
        with self.assertRaisesRegex(GeneratorError, 'max-attempts') as context:
            generate.random_diam2_bridgeless(model)
        self.assertEqual(context.exception.code, 2)

    def test_trial_seed(self):
        self.assertEqual(generate.trial_seed(1, 2), generate.trial_seed(1, 2))
        self.assertNotEqual(generate.trial_seed(1, 2), generate.trial_seed(1, 3))
        self.assertAlmostEqual(generate.uniform_probability(10), 0.6907755, places=5)
