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
"""

import logging
import math

from enum import Enum, IntEnum

log = logging.getLogger(__name__)

# Largest palette the subset dynamic program accepts (2**t states per vertex)
COLOR_CAP = 16

# Every eligible graph gets a coloring drawn from 1..5
MAX_THEOREM_COLORS = 5

# Tentative recolorings the repair search may try per center
REPAIR_BUDGET = 4000

# Minimum-eccentricity centers tried before a construction is given up
CENTER_ATTEMPTS = 8

# Colorings tested by the exact search before it reports a bound
DEFAULT_BUDGET = 2_000_000

# Rejection cap for the random graph models
DEFAULT_MAX_ATTEMPTS = 2000

# Largest n the fuzz harness draws for the uniform-rejection model
UNIFORM_N_CAP = 18

# Sentinel distance for vertices in another component
UNREACHABLE = math.inf

PRETTY_PRINT = '\n    '


class RainbowError(Exception):
    """ Exception from this module."""

    def __init__(self, *args, code=1, **kwargs):
        """Exception with an exit code

        Arguments:
            code (:obj:`int`, optional, default=1): Exception error code.
    """
        super().__init__(*args, **kwargs)
        self.code = code


class ExitCode(IntEnum):
    """Process exit codes shared by every rc-manage subcommand"""
    OK = 0
    INTERNAL = 1
    BAD_INPUT = 2
    VERIFICATION = 3


class Outcome(Enum):
    """Outcome recorded in a run report"""
    OK = 'ok'
    VIOLATION = 'violation'
    ERROR = 'error'


class CycleCase(Enum):
    """How a stage cycle was colored"""
    FRESH_C3 = 'fresh-C3'
    FRESH_C4 = 'fresh-C4'
    FRESH_C5 = 'fresh-C5'
    CASE_I_FORMER = 'case-I-former'
    CASE_I_LATTER = 'case-I-latter'
    CASE_II_FORMER = 'case-II-former'
    CASE_II_LATTER = 'case-II-latter'

    @classmethod
    def fresh(cls, length: int) -> 'CycleCase':
        """The appropriate-coloring tag for a cycle of the given length"""
        return {3: cls.FRESH_C3, 4: cls.FRESH_C4, 5: cls.FRESH_C5}[length]


class TerminalCase(Enum):
    """Which completion colored the edges left after staging"""
    SHELL2_STAGED = 'N2-in-Sk'
    SHELL2_COVERED = 'N2=S+T+Q'
    CASE_1 = 'case-1'
    SUBCASE_2_1 = 'subcase-2.1'
    SUBCASE_2_2_1 = 'subcase-2.2.1'
    SUBCASE_2_2_2 = 'subcase-2.2.2'


class GenModelName(Enum):
    """Random graph models for fuzzing"""
    UNIFORM = 'uniform-rejection'
    HUB = 'hub-augmented'
    EXTREMAL = 'extremal-perturbed'


def set_color_cap(cap: int) -> None:
    """Set the largest palette the rainbow dynamic program accepts.

    Arguments:
        cap(int): The new cap, at least 1.
    """
    global COLOR_CAP
    if cap < 1:
        raise RainbowError(f'Color cap must be positive, got {cap}', code=2)
    COLOR_CAP = cap


def set_repair_budget(budget: int) -> None:
    """Set how many tentative recolorings the repair search may try."""
    global REPAIR_BUDGET
    if budget < 1:
        raise RainbowError(f'Repair budget must be positive, got {budget}', code=2)
    REPAIR_BUDGET = budget


def set_center_attempts(count: int) -> None:
    """Set how many centers theorem1_color tries before giving up."""
    global CENTER_ATTEMPTS
    if count < 1:
        raise RainbowError(f'At least one center must be tried, got {count}', code=2)
    CENTER_ATTEMPTS = count


def canonical_edge(a: int, b: int) -> tuple:
    """ Return the edge {a, b} with the smaller endpoint first.

    Arguments:
        a, b (int): The endpoints.

    Returns: (int, int)
    """
    if a < b:
        return (a, b)
    return (b, a)


def format_vertices(vertices) -> str:
    """ Space separated, sorted vertex listing for reports and traces."""
    return ' '.join(str(v) for v in sorted(vertices))


def bits(mask: int):
    """ Yield the indices of the set bits of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
