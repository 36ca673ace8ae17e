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

Run reports written by rc-manage.
"""

import hashlib
import logging

from debian import deb822

from . import util
from .util import Outcome

PAYLOAD_PREFIX = 'X-'


class RunReportError(util.RainbowError):
    """ Exception from a run report."""

    def __init__(self, *args, code=2, **kwargs):
        """Run report error

        Arguments:
            code (:obj:`int`, optional, default=2): Exception error code.
    """
        super().__init__(*args, code=code, **kwargs)


def digest_text(*texts: str) -> str:
    """sha256 over the given inputs, in order"""
    digest = hashlib.sha256()
    for text in texts:
        digest.update(text.encode('utf-8'))
    return digest.hexdigest()


class RunReport(deb822.Deb822):
    """ The outcome of one rc-manage command as a Deb822 paragraph.

    Fields: Command, Input-Digest, Outcome, payload fields prefixed with
    X-, and Wall-Time only when timing was requested.
    """

    def __init__(self, *args, command: str = '', digest: str = '', **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self.log = logging.getLogger(__name__)
        if command:
            self['Command'] = command
            self['Input-Digest'] = digest or digest_text()
            self['Outcome'] = Outcome.OK.value

    def __bool__(self) -> bool:
        return 'Command' in self

    @property
    def command(self) -> str:
        return self.get('Command', '')

    @property
    def digest(self) -> str:
        return self.get('Input-Digest', '')

    @property
    def outcome(self) -> Outcome:
        return Outcome(self.get('Outcome', Outcome.OK.value))

    @outcome.setter
    def outcome(self, outcome: Outcome) -> None:
        self['Outcome'] = outcome.value

    @property
    def payload(self) -> dict:
        """The payload fields without their prefix"""
        return {
            key[len(PAYLOAD_PREFIX):]: value
            for key, value in self.items() if key.startswith(PAYLOAD_PREFIX)
        }

    def put(self, key: str, value) -> None:
        """Set a payload field; lists become continuation lines"""
        if isinstance(value, (list, tuple)):
            value = ''.join(f'\n {item}' for item in value)
        elif isinstance(value, bool):
            value = 'true' if value else 'false'
        self[f'{PAYLOAD_PREFIX}{key}'] = str(value)
        self.log.debug('Report field %s: %s', key, value)

    def set_wall_time(self, seconds: float) -> None:
        self['Wall-Time'] = f'{seconds:.3f}'

    @property
    def deb822(self) -> str:
        return self.dump()

    @property
    def ui(self) -> str:
        lines = [f'{self.command}: {self.outcome.value}']
        for key, value in self.payload.items():
            if '\n' in value:
                lines.append(f'{key}:')
                lines.extend(
                    f'    {line.strip()}' for line in value.splitlines() if line.strip()
                )
            else:
                lines.append(f'{key}: {value}')
        if 'Wall-Time' in self:
            lines.append(f'Wall time: {self["Wall-Time"]} s')
        return util.PRETTY_PRINT.join(lines) + '\n'


def parse_report(text: str) -> RunReport:
    """ Load a report written from RunReport.deb822."""
    report = RunReport(text.splitlines())
    if not report:
        raise RunReportError('The report has no Command field')
    return report
