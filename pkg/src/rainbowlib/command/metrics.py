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

The metrics subcommand.
"""

from ..graph import bridges, eligibility, metrics
from ..util import ExitCode, format_vertices
from .command import Command


class Metrics(Command):
    """Metrics subcommand

    Prints the size, distance metrics and bridge count of a graph, and
    whether it meets the hypotheses of the 5-coloring construction.

    Options:
        graph
    """

    @classmethod
    def init_options(cls, subparsers):
        """Sets up the argument parser for this command.

        Returns: argparse.subparser:
            This command's subparser
        """
        sub = subparsers.add_parser(
            'metrics',
            help='Show diameter, radius, center, bridges and eligibility of a graph'
        )
        sub.add_argument(
            'graph',
            help='The edge-list file to read'
        )
        cls.add_common_options(sub)
        return sub

    def finalize_options(self, args):
        super().finalize_options(args)
        self.graph_path = args.graph

    def execute(self, report):
        g = self.read_graph(self.graph_path)
        report.put('N', g.n)
        report.put('M', g.m)

        result = eligibility(g)
        if result.connected:
            info = metrics(g)
            report.put('Diameter', info.diameter)
            report.put('Radius', info.radius)
            report.put('Center', format_vertices(info.center_vertices))
        else:
            report.put('Connected', False)
        report.put('Bridges', len(bridges(g)))

        if result.eligible:
            report.put('Eligible', f'true, diam={result.diameter}')
        else:
            report.put('Eligible', f'false ({result.reason})')
        self.log.debug('Eligibility: %s', result)
        return ExitCode.OK
