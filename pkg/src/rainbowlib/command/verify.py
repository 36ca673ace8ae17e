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

The verify subcommand.
"""

from ..coloring import parse_coloring
from ..rainbow import is_rainbow_connected
from ..util import ExitCode, Outcome
from .command import Command


class Verify(Command):
    """Verify subcommand

    Checks whether a coloring makes a graph rainbow connected.

    Options:
        graph
        coloring
        --witnesses, -w
    """

    @classmethod
    def init_options(cls, subparsers):
        """Sets up the argument parser for this command.

        Returns: argparse.subparser:
            This command's subparser
        """
        sub = subparsers.add_parser(
            'verify',
            help='Check that a coloring joins every vertex pair by a rainbow path'
        )
        sub.add_argument(
            'graph',
            help='The edge-list file'
        )
        sub.add_argument(
            'coloring',
            help='The coloring file'
        )
        sub.add_argument(
            '-w',
            '--witnesses',
            action='store_true',
            help='List a rainbow path for every vertex pair'
        )
        cls.add_common_options(sub)
        return sub

    def finalize_options(self, args):
        super().finalize_options(args)
        self.graph_path = args.graph
        self.coloring_path = args.coloring
        self.witnesses = args.witnesses

    def execute(self, report):
        g = self.read_graph(self.graph_path)
        coloring = parse_coloring(self.read_text(self.coloring_path))
        coloring.validate(g)

        certificate = is_rainbow_connected(g, coloring)
        report.put('Connected', certificate.connected)
        report.put('Colors-Used', ' '.join(str(c) for c in coloring.colors_used()))
        if not certificate.connected:
            s, t = certificate.violation
            report.put('Violation', f'{s} {t}')
            report.outcome = Outcome.VIOLATION
            return ExitCode.VERIFICATION

        if self.witnesses:
            report.put('Witnesses', [
                f'{s} {t}: ' + ' '.join(str(v) for v in path)
                for (s, t), path in sorted(certificate.witnesses.items())
            ])
        return ExitCode.OK
