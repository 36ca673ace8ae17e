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

The fuzz subcommand.
"""

from pathlib import Path

import numpy as np

from .. import util
from ..construct import ConstructionError, theorem1_color
from ..generate import GenModel, GeneratorError, random_diam2_bridgeless, trial_seed
from ..rainbow import is_rainbow_connected
from ..util import ExitCode, GenModelName, Outcome
from .command import Command

MIXED = 'mixed'
SMALLEST_N = 5


class Fuzz(Command):
    """Fuzz subcommand

    Generates seeded random eligible graphs, colors each one with the
    5-coloring construction and verifies the result independently. Graphs
    that fail, and graphs that only pass after a repair or on a later
    center, are written out with their traces, named by seed and trial.

    Options:
        --trials
        --n-max
        --seed
        --model
        --max-attempts
        --failures
    """

    @classmethod
    def init_options(cls, subparsers):
        """Sets up the argument parser for this command.

        Returns: argparse.subparser:
            This command's subparser
        """
        sub = subparsers.add_parser(
            'fuzz',
            help='Check the 5-coloring construction on random graphs'
        )
        sub.add_argument(
            '--trials',
            type=int,
            default=100,
            help='Number of graphs to try (default 100)'
        )
        sub.add_argument(
            '--n-max',
            type=int,
            default=30,
            help='Largest vertex count (default 30)'
        )
        sub.add_argument(
            '--seed',
            type=int,
            default=0,
            help='Seed of the whole run (default 0)'
        )
        sub.add_argument(
            '--model',
            choices=[MIXED] + [model.value for model in GenModelName],
            default=MIXED,
            help='Random graph model; mixed cycles through all of them'
        )
        sub.add_argument(
            '--max-attempts',
            type=int,
            default=util.DEFAULT_MAX_ATTEMPTS,
            help='Rejected draws allowed per graph'
        )
        sub.add_argument(
            '--failures',
            metavar='DIR',
            default='.',
            help='Directory for graphs and traces of failed or repaired trials'
        )
        cls.add_common_options(sub)
        return sub

    def finalize_options(self, args):
        super().finalize_options(args)
        self.trials = args.trials
        self.n_max = args.n_max
        self.seed = args.seed
        self.model = args.model
        self.max_attempts = args.max_attempts
        self.failures = Path(args.failures)
        if self.n_max < SMALLEST_N:
            raise util.RainbowError(f'--n-max must be at least {SMALLEST_N}', code=2)
        if self.trials < 0:
            raise util.RainbowError('--trials must not be negative', code=2)

    def model_for(self, index: int, seed: int) -> GenModel:
        """The model of one trial, drawn from its own seed"""
        if self.model == MIXED:
            name = list(GenModelName)[index % len(GenModelName)]
        else:
            name = GenModelName(self.model)
        n_max = self.n_max
        if name == GenModelName.UNIFORM:
            n_max = min(n_max, util.UNIFORM_N_CAP)
        rng = np.random.Generator(np.random.PCG64(seed))
        n = int(rng.integers(SMALLEST_N, n_max + 1))
        return GenModel(name, n, seed, self.max_attempts)

    def dump_trial(self, index: int, g, trace) -> list:
        stem = self.failures / f'fuzz-{self.seed}-{index}'
        written = [f'{stem}.graph']
        self.write_text(written[0], g.to_edge_list())
        if trace is not None:
            written.append(f'{stem}.trace')
            self.write_text(written[1], trace.deb822)
        return written

    @staticmethod
    def detours(trace) -> list:
        """ How a verified coloring got off the plain path: repaired, fallback"""
        found = []
        if trace.repairs:
            found.append('repaired')
        if len(trace.attempts) > 1:
            found.append('fallback')
        return found

    def run_trial(self, index: int) -> tuple:
        """ Returns: (status, colors used, detours, files written)"""
        seed = trial_seed(self.seed, index)
        model = self.model_for(index, seed)
        try:
            g = random_diam2_bridgeless(model)
        except GeneratorError as err:
            self.log.info('Trial %s: %s', index, err)
            return 'exhausted', 0, [], []

        try:
            coloring, trace = theorem1_color(g)
        except ConstructionError as err:
            self.log.error('Trial %s (%s, n=%s): %s', index, model.name.value, model.n, err)
            return 'failed', 0, [], self.dump_trial(index, g, err.trace)

        used = len(coloring.colors_used())
        certificate = is_rainbow_connected(g, coloring)
        if not certificate.connected or used > util.MAX_THEOREM_COLORS:
            self.log.error('Trial %s: coloring rejected by the verifier', index)
            return 'failed', used, [], self.dump_trial(index, g, trace)

        detours = self.detours(trace)
        if detours:
            # Verified, but only after a repair or on a later center
            self.log.warning('Trial %s (%s, n=%s): %s', index, model.name.value,
                             model.n, ', '.join(detours))
            return 'passed', used, detours, self.dump_trial(index, g, trace)
        return 'passed', used, [], []

    def execute(self, report):
        tally = {'passed': 0, 'failed': 0, 'exhausted': 0, 'repaired': 0, 'fallback': 0}
        histogram = [0] * (util.MAX_THEOREM_COLORS + 1)
        failure_files: list = []
        detour_files: list = []
        for index in range(self.trials):
            status, used, detours, written = self.run_trial(index)
            tally[status] += 1
            for detour in detours:
                tally[detour] += 1
            if status == 'passed':
                histogram[used] += 1
                detour_files.extend(written)
            else:
                failure_files.extend(written)

        report.put('Trials', self.trials)
        report.put('Passed', tally['passed'])
        report.put('Failed', tally['failed'])
        report.put('Generator-Exhausted', tally['exhausted'])
        report.put('Repaired', tally['repaired'])
        report.put('Center-Fallback', tally['fallback'])
        report.put('Colors-Histogram', ' '.join(
            f'{colors}:{count}' for colors, count in enumerate(histogram) if count
        ))
        if failure_files:
            report.put('Failure-Files', failure_files)
        if detour_files:
            report.put('Repair-Files', detour_files)
        if tally['failed']:
            report.outcome = Outcome.VIOLATION
            return ExitCode.VERIFICATION
        return ExitCode.OK
