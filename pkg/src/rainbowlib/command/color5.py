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

The color5 subcommand.
"""

from .. import util
from ..construct import ConstructionError, PreconditionError, theorem1_color
from ..util import ExitCode, Outcome, format_vertices
from .command import Command


class Color5(Command):
    """Color5 subcommand

    Colors a connected, bridgeless graph of diameter 2 with at most five
    colors so that every pair of vertices is joined by a rainbow path. The
    coloring is verified before it is written.

    Options:
        graph
        --out, -o
        --trace, -t
        --repair-budget
        --centers
    """

    @classmethod
    def init_options(cls, subparsers):
        """Sets up the argument parser for this command.

        Returns: argparse.subparser:
            This command's subparser
        """
        sub = subparsers.add_parser(
            'color5',
            help='Construct and verify a rainbow coloring with at most 5 colors'
        )
        sub.add_argument(
            'graph',
            help='The edge-list file to color'
        )
        sub.add_argument(
            '-o',
            '--out',
            metavar='FILE',
            help='Write the coloring to FILE instead of standard output'
        )
        sub.add_argument(
            '-t',
            '--trace',
            metavar='FILE',
            help='Write the construction trace to FILE'
        )
        sub.add_argument(
            '--repair-budget',
            type=int,
            default=util.REPAIR_BUDGET,
            help=f'Tentative recolorings tried per center (default {util.REPAIR_BUDGET})'
        )
        sub.add_argument(
            '--centers',
            type=int,
            default=util.CENTER_ATTEMPTS,
            help=f'Centers tried before giving up (default {util.CENTER_ATTEMPTS})'
        )
        cls.add_common_options(sub)
        return sub

    def finalize_options(self, args):
        super().finalize_options(args)
        self.graph_path = args.graph
        self.out = args.out
        self.trace_path = args.trace
        util.set_repair_budget(args.repair_budget)
        util.set_center_attempts(args.centers)

    def execute(self, report):
        g = self.read_graph(self.graph_path)
        try:
            coloring, trace = theorem1_color(g)
        except PreconditionError as err:
            report.put('Failed', ' '.join(err.failed))
            raise
        except ConstructionError as err:
            if err.code == ExitCode.INTERNAL:
                raise
            # Keep the evidence of a failed construction
            path = self.trace_path or f'{self.graph_path}.trace'
            if err.trace is not None:
                self.write_text(path, err.trace.deb822)
                report.put('Trace', path)
            if err.violation:
                report.put('Violation', format_vertices(err.violation))
            report.outcome = Outcome.VIOLATION
            report.put('Error', str(err))
            self.log.error('Construction failed, trace in %s', path)
            return ExitCode.VERIFICATION

        report.put('Center', trace.center)
        report.put('Terminal-Case', trace.terminal_case.value)
        report.put('Colors-Used', ' '.join(str(c) for c in coloring.colors_used()))
        report.put('Repaired-Edges', len(trace.repairs))
        report.put('Verified', trace.certificate is not None and trace.certificate.connected)
        self.log.info('Construction:%s%s', util.PRETTY_PRINT, trace.ui.rstrip())

        if self.out:
            self.write_text(self.out, coloring.deb822)
            report.put('Coloring', self.out)
        else:
            print(coloring.deb822)
        if self.trace_path:
            self.write_text(self.trace_path, trace.deb822)
            report.put('Trace', self.trace_path)
        return ExitCode.OK
