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

The sharpness subcommand.
"""

from ..extremal import PIGEONHOLE_K, sample_refutations
from ..util import ExitCode, Outcome
from .command import Command


class Sharpness(Command):
    """Sharpness subcommand

    Draws seeded random 4-colorings of G_k and shows that each one leaves
    a pair of middle vertices without a rainbow path.

    Options:
        --k
        --samples
        --seed
    """

    @classmethod
    def init_options(cls, subparsers):
        """Sets up the argument parser for this command.

        Returns: argparse.subparser:
            This command's subparser
        """
        sub = subparsers.add_parser(
            'sharpness',
            help='Refute random 4-colorings of the sharpness graph G_k'
        )
        sub.add_argument(
            '--k',
            type=int,
            default=PIGEONHOLE_K,
            help=f'Number of paths of G_k, at least {PIGEONHOLE_K}'
        )
        sub.add_argument(
            '--samples',
            type=int,
            default=1000,
            help='Number of random colorings (default 1000)'
        )
        sub.add_argument(
            '--seed',
            type=int,
            default=0,
            help='Seed of the sampling (default 0)'
        )
        cls.add_common_options(sub)
        return sub

    def finalize_options(self, args):
        super().finalize_options(args)
        self.k = args.k
        self.samples = args.samples
        self.seed = args.seed

    def execute(self, report):
        summary = sample_refutations(self.k, self.samples, self.seed)
        self.log.info('%s', summary.ui.rstrip())
        report.put('K', summary.k)
        report.put('Samples', summary.samples)
        report.put('Refuted', summary.refuted)
        if summary.pairs:
            report.put('First-Pair', '{} {}'.format(*summary.pairs[0]))
        if not summary.all_refuted:
            report.outcome = Outcome.VIOLATION
            return ExitCode.VERIFICATION
        return ExitCode.OK
