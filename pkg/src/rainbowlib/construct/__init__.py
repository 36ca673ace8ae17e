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

The constructive 5-coloring of bridgeless graphs of diameter 2.
"""

import logging

from .. import util
from ..graph import Graph, eligibility, metrics
from ..rainbow import is_rainbow_connected
from .partition import (
    Block,
    BPartition,
    SecondShellPartition,
    partition_d_blocks,
    partition_dominated,
    partition_first_shell,
    partition_second_shell,
)
from .repair import repair_coloring
from .staging import (
    StageCycle,
    StagedSets,
    appropriate_coloring,
    build_staged_sets,
    shortest_cycle_through_edge,
)
from .terminal import color_terminal_case
from .trace import (
    Claim,
    ConstructionError,
    ConstructionTrace,
    PartialColoring,
    PreconditionError,
    parse_trace_rules,
)

log = logging.getLogger(__name__)


def choose_center(g: Graph) -> int:
    """ The vertex of minimum eccentricity, smallest index on ties."""
    return metrics(g).center_vertices[0]


def check_preconditions(g: Graph) -> None:
    """Raise PreconditionError unless g is connected, bridgeless, of diameter 2"""
    result = eligibility(g)
    if not result.eligible:
        raise PreconditionError(
            f'Graph is not eligible for the 5-coloring: {result.reason}',
            failed=result.failed
        )


def construct_from_center(g: Graph, u: int) -> ConstructionTrace:
    """ Run the construction once, with u as the center.

    The returned trace holds the finished, unverified coloring in its
    partial coloring.
    """
    trace = ConstructionTrace(center=u)
    try:
        trace.bpartition = partition_first_shell(g, u)
        trace.stages = build_staged_sets(g, u, trace.bpartition, trace.partial)
        color_terminal_case(g, trace)
    except ConstructionError as err:
        if err.trace is None:
            err.trace = trace
        raise
    return trace


def theorem1_color(g: Graph) -> tuple:
    """ Color a bridgeless diameter-2 graph with at most 5 colors.

    The coloring is verified before it is returned. When the construction
    around a center fails verification, a bounded repair search runs, and
    then the next center is tried; every attempt is kept in the trace.

    Arguments:
        g(Graph): A connected, bridgeless graph of diameter 2

    Returns: (EdgeColoring, ConstructionTrace)
    """
    check_preconditions(g)
    centers = metrics(g).center_vertices[:util.CENTER_ATTEMPTS]
    attempts: list = []
    last_error = None

    for u in centers:
        try:
            trace = construct_from_center(g, u)
        except ConstructionError as err:
            log.warning('Construction around %s failed: %s', u, err)
            attempts.append((u, f'error: {err}'))
            last_error = err
            continue

        coloring = trace.partial.to_coloring()
        certificate = is_rainbow_connected(g, coloring)
        if certificate.connected:
            attempts.append((u, 'verified'))
            trace.attempts = attempts
            trace.certificate = certificate
            return coloring, trace

        log.warning('Coloring around %s leaves %s %s without a rainbow path',
                    u, *certificate.violation)
        repaired = repair_coloring(g, trace)
        if repaired is not None:
            attempts.append((u, f'repaired {len(trace.repairs)} edges'))
            trace.attempts = attempts
            return repaired, trace

        attempts.append((u, 'violation {} {}'.format(*certificate.violation)))
        last_error = ConstructionError(
            f'No rainbow path between {certificate.violation[0]} and '
            f'{certificate.violation[1]}',
            trace=trace, violation=certificate.violation
        )

    if last_error.trace is not None:
        last_error.trace.attempts = attempts
    raise last_error


__all__ = [
    'Block',
    'BPartition',
    'Claim',
    'ConstructionError',
    'ConstructionTrace',
    'PartialColoring',
    'PreconditionError',
    'SecondShellPartition',
    'StageCycle',
    'StagedSets',
    'appropriate_coloring',
    'build_staged_sets',
    'check_preconditions',
    'choose_center',
    'color_terminal_case',
    'construct_from_center',
    'parse_trace_rules',
    'partition_d_blocks',
    'partition_dominated',
    'partition_first_shell',
    'partition_second_shell',
    'repair_coloring',
    'shortest_cycle_through_edge',
    'theorem1_color',
]
