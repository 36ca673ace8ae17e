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

Command line application helper class.
"""

import time

from pathlib import Path

from .. import util
from ..graph import Graph, parse_edge_list
from ..report import RunReport, digest_text
from ..util import ExitCode, Outcome

# Namespace entries that do not change what a command computes
ECHO_SKIP = ('action', 'debug', 'report', 'timing')


class CommandError(util.RainbowError):
    """ Exceptions generated by rc-manage."""

    def __init__(self, *args, code=2, **kwargs):
        """Exception from a CLI

        Arguments:
            code (:obj:`int`, optional, default=2): Exception error code.
    """
        super().__init__(*args, code=code, **kwargs)


class Command:
    # pylint: disable=too-few-public-methods
    # Base class giving every subcommand the same options, report handling
    # and exit codes.
    """ CLI helper class for developing command line applications."""

    def __init__(self, log, args, parser):
        self.log = log
        self.parser = parser
        self.inputs: list = []
        self.finalize_options(args)

    @staticmethod
    def add_common_options(sub) -> None:
        """Options every subcommand accepts"""
        sub.add_argument(
            '--report',
            metavar='FILE',
            help='Write the machine-readable run report to FILE'
        )
        sub.add_argument(
            '--timing',
            action='store_true',
            help='Include the wall time in the report'
        )

    def finalize_options(self, args):
        """ Base options parsing class.

        Use this class in commands to set up the final options parsing and set
        instance variables for later use.
        """
        self.verbose = False
        self.debug = False
        if args.debug:
            if args.debug > 1:
                self.verbose = True
            self.debug = True
        self.report_path = getattr(args, 'report', None)
        self.timing = getattr(args, 'timing', False)
        self.echo = ' '.join(
            [args.action] + [
                f'--{key.replace("_", "-")}={value}'
                for key, value in sorted(vars(args).items())
                if key not in ECHO_SKIP and value is not None
            ]
        )

    def read_text(self, path) -> str:
        try:
            text = Path(path).read_text(encoding='utf-8')
        except OSError as err:
            raise CommandError(f'Could not read {path}: {err.strerror}')
        except UnicodeDecodeError as err:
            raise CommandError(f'{path} is not UTF-8 text: {err.reason}')
        self.inputs.append(text)
        return text

    def read_graph(self, path) -> Graph:
        self.log.debug('Reading graph %s', path)
        return parse_edge_list(self.read_text(path))

    def write_text(self, path, text: str) -> None:
        try:
            Path(path).write_text(text, encoding='utf-8')
        except OSError as err:
            raise CommandError(f'Could not write {path}: {err.strerror}', code=1)
        self.log.info('Wrote %s', path)

    def execute(self, report: RunReport) -> ExitCode:
        """ Do the work of the command, filling in the report.

        Returns: ExitCode
        """
        return ExitCode.OK

    def run(self) -> int:
        """ Run the command and emit its report.

        Errors from rainbowlib are reported, not raised; their code becomes
        the exit code.

        Returns:
            The process exit code.
        """
        start = time.perf_counter()
        report = RunReport(command=self.echo)
        try:
            code = self.execute(report)
        except util.RainbowError as err:
            self.log.error('%s', err)
            report.outcome = Outcome.ERROR
            report.put('Error', str(err))
            code = err.code

        report['Input-Digest'] = digest_text(*self.inputs)
        if self.timing:
            report.set_wall_time(time.perf_counter() - start)
        print(report.ui, end='')
        if self.report_path:
            self.write_text(self.report_path, report.deb822)
        return int(code)
