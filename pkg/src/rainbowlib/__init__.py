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

Rainbow connection colorings: verification, exact search and the
constructive 5-coloring of bridgeless graphs of diameter 2.
"""

import logging

from . import __version__

VERSION = __version__.__version__

from .graph import (
    Eligibility,
    Graph,
    GraphError,
    Metrics,
    ShellDecomposition,
    bridges,
    distances_from,
    edges_between,
    eligibility,
    is_connected,
    is_independent,
    metrics,
    parse_edge_list,
    shells,
)
from .coloring import ColoringError, EdgeColoring, parse_coloring
from .rainbow import (
    RainbowCertificate,
    RainbowCheckError,
    count_violations,
    enumerate_rainbow_paths,
    is_rainbow_connected,
    rainbow_reachable,
)
from .exact import ExactResult, ExactSearchError, exact_rc
from .construct import (
    ConstructionError,
    ConstructionTrace,
    PreconditionError,
    choose_center,
    theorem1_color,
)
from .extremal import (
    ExtremalError,
    ExtremalSpec,
    canonical_coloring,
    gen_extremal,
    pigeonhole_pair,
    refute_four_coloring,
)
from .generate import GenModel, GeneratorError, random_diam2_bridgeless, trial_seed
from .report import RunReport
from . import util

from .util import (
    RainbowError,
    set_center_attempts,
    set_color_cap,
    set_repair_budget,
)

LOG_LEVEL = logging.WARNING

## Setup logging
stream_fmt = logging.Formatter(
    '%(name)-21s: %(levelname)-8s %(message)s'
)
log = logging.getLogger(__name__)

console_log = logging.StreamHandler()
console_log.setFormatter(stream_fmt)
console_log.setLevel(LOG_LEVEL)
log.addHandler(console_log)

log_level_map: dict = {
    0: logging.WARNING,
    1: logging.INFO,
    2: logging.DEBUG
}

log.setLevel(logging.DEBUG)


def set_logging_level(level: int) -> None:
    """Set the console logging level for rainbowlib

    Accepts an integer between 0 and 2, with 0 being the default loglevel of
    logging.WARNING, 1 being logging.INFO, and 2 being logging.DEBUG.
    Values outside that range are clamped.

    Arguments:
        level(int): A logging level from 0-2
    """
    level = max(0, min(2, level))
    console_log.setLevel(log_level_map[level])
