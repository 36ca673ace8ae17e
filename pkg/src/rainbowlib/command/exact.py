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

The exact subcommand.
"""

from .. import util
from ..exact import DEFAULT_MAX_COLORS, exact_rc
from ..util import ExitCode
from .command import Command


class Exact(Command):
    """Exact subcommand

    Computes the rainbow connection number of a small graph by exhaustive
    search, or an upper bound when the search budget runs out.

    Options:
        graph
        --max-colors
        --budget
        --out, -o
    """

    @classmethod
    def init_options(cls, subparsers):
        """Sets up the argument parser for this command.

        Returns: argparse.subparser:
            This command's subparser
        """
        sub = subparsers.add_parser(
            'exact',
            help='Compute rc(G) exactly for a small graph'
        )
        sub.add_argument(
            'graph',
            help='The edge-list file'
        )
        sub.add_argument(
            '--max-colors',
            type=int,
            default=DEFAULT_MAX_COLORS,
            help=f'Largest palette to try (default {DEFAULT_MAX_COLORS})'
        )
        sub.add_argument(
            '--budget',
            type=int,
            default=util.DEFAULT_BUDGET,
            help=f'Most colorings to test (default {util.DEFAULT_BUDGET})'
        )
        sub.add_argument(
            '-o',
            '--out',
            metavar='FILE',
            help='Write the best coloring found to FILE'
        )
        cls.add_common_options(sub)
        return sub

    def finalize_options(self, args):
        super().finalize_options(args)
        self.graph_path = args.graph
        self.max_colors = args.max_colors
        self.budget = args.budget
        self.out = args.out

    def execute(self, report):
        g = self.read_graph(self.graph_path)
        result = exact_rc(g, self.max_colors, self.budget)

        report.put('Rc', result.rc_value)
        report.put('Exhausted', result.exhausted)
        report.put('Lower-Bound', result.lower_bound)
        report.put('Colorings-Tested', result.colorings_tested)
        if not result.exhausted:
            self.log.warning(
                'Search stopped early; %s is only an upper bound', result.rc_value
            )

        if self.out:
            self.write_text(self.out, result.optimal_coloring.deb822)
            report.put('Coloring', self.out)
        return ExitCode.OK
