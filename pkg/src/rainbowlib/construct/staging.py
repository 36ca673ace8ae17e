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

Staged sets S_1, ..., S_k: every first-shell vertex is put on a short cycle
through the center carrying colors 1..5 in a fixed pattern.
"""

import logging

from dataclasses import dataclass, field

import networkx as nx

from ..graph import Graph, shells
from ..util import CycleCase, canonical_edge, format_vertices
from .partition import BPartition
from .trace import ConstructionError, PartialColoring

log = logging.getLogger(__name__)

HUB_DOMINATOR = 'hub-dominator'
HUB_BLOCK = 'hub-block'
HUB_ADJACENT = 'hub-adjacent'

# Side color that must follow each hub color along a stage cycle
SIDE_COLOR = {1: 3, 2: 4}
OTHER_HUB = {1: 2, 2: 1}


def cycle_edges(cycle) -> list:
    """The edges of a closed vertex sequence, in order"""
    return [
        canonical_edge(cycle[i], cycle[(i + 1) % len(cycle)])
        for i in range(len(cycle))
    ]


def appropriate_coloring(cycle) -> dict:
    """ The fixed coloring of a 3, 4 or 5-cycle through the center.

    Arguments:
        cycle(tuple): (u, v1, ..., v_last); u is the center.

    Returns: dict
        canonical edge -> color
    """
    patterns = {
        3: (1, 3, 2),
        4: (1, 3, 4, 2),
        5: (1, 3, 5, 4, 2),
    }
    if len(cycle) not in patterns:
        raise ConstructionError(
            f'No appropriate coloring for a cycle of length {len(cycle)}: '
            f'{format_vertices(cycle)}'
        )
    if len(set(cycle)) != len(cycle):
        raise ConstructionError(f'{cycle} is not a cycle', code=1)
    return dict(zip(cycle_edges(cycle), patterns[len(cycle)]))


def shortest_cycle_through_edge(g: Graph, u: int, v: int, staged=frozenset()) -> tuple:
    """ A shortest cycle through the edge uv.

    Among shortest cycles the one with most vertices outside staged wins,
    then the lexicographically smallest vertex sequence.

    Arguments:
        g(Graph): The graph
        u(int): The center
        v(int): A neighbour of u
        staged(set): The current staged set

    Returns: tuple
        (u, v, ..., w) with w adjacent to u.
    """
    if not g.has_edge(u, v):
        raise ConstructionError(f'{u} {v} is not an edge', code=1)
    without = nx.restricted_view(g.nx_graph, [], [(u, v), (v, u)])
    try:
        paths = list(nx.all_shortest_paths(without, v, u))
    except nx.NetworkXNoPath:
        raise ConstructionError(f'Edge {u} {v} lies on no cycle (it is a bridge)', code=2)

    best = None
    best_key = None
    for path in paths:
        cycle = (u,) + tuple(path[:-1])
        key = (-sum(1 for w in cycle if w not in staged), cycle)
        if best_key is None or key < best_key:
            best = cycle
            best_key = key
    return best


@dataclass(frozen=True)
class StageCycle:
    """One cycle of the staging procedure"""
    vertex: int
    cycle: tuple
    case: CycleCase
    staged: tuple

    def describe(self) -> str:
        marks = ''.join('s' if v in self.staged else '-' for v in self.cycle)
        path = ' '.join(str(v) for v in self.cycle)
        return f'{self.vertex} [{path}] {self.case.value} {marks}'


@dataclass
class StagedSets:
    """ S_1 through S_k and the cycle that produced each step."""
    stages: list = field(default_factory=list)
    cycles: list = field(default_factory=list)

    @property
    def final(self) -> frozenset:
        return self.stages[-1]


def color_hub_edges(bpart: BPartition, partial: PartialColoring) -> None:
    """Color u-b_i with 1, the rest of each block with 2, and B_{b+1} with 1"""
    u = bpart.center
    for block in bpart.blocks:
        partial.assign(u, block.dominator, 1, HUB_DOMINATOR)
        for v in sorted(block.others):
            partial.assign(u, v, 2, HUB_BLOCK)
    for v in sorted(bpart.adjacent):
        partial.assign(u, v, 1, HUB_ADJACENT)


def color_stage_cycle(cycle, partial: PartialColoring) -> CycleCase:
    """ Color a stage cycle given what is already colored on it.

    A cycle with no colored edge takes the appropriate coloring. Otherwise
    the edge from the center to the last vertex fixes the pattern: the
    remaining edges get the same colors as an appropriate coloring read
    from that end.

    Returns: CycleCase
    """
    length = len(cycle)
    edges = cycle_edges(cycle)
    if all(partial.color(*edge) is None for edge in edges):
        case = CycleCase.fresh(length)
        for edge, color in appropriate_coloring(cycle).items():
            partial.assign(*edge, color, f'cycle:{case.value}')
        return case

    if length not in (4, 5):
        raise ConstructionError(
            f'Cycle {cycle} already meets colored edges and has length {length}'
        )

    u, last, before = cycle[0], cycle[-1], cycle[-2]
    hub = partial.color(u, last)
    if hub not in SIDE_COLOR:
        raise ConstructionError(
            f'Cycle {cycle} meets colored edges but {u} {last} has color {hub}'
        )
    side = partial.color(last, before)
    if side is not None and side != SIDE_COLOR[hub]:
        raise ConstructionError(
            f'Cycle {cycle}: hub color {hub} next to side color {side}'
        )

    former = side is None
    if length == 4:
        case = CycleCase.CASE_I_FORMER if former else CycleCase.CASE_I_LATTER
    else:
        case = CycleCase.CASE_II_FORMER if former else CycleCase.CASE_II_LATTER
    rule = f'cycle:{case.value}'

    other = OTHER_HUB[hub]
    partial.assign(last, before, SIDE_COLOR[hub], rule)
    if length == 5:
        partial.assign(cycle[2], cycle[3], 5, rule)
    partial.assign(cycle[1], cycle[2], SIDE_COLOR[other], rule)
    partial.assign(u, cycle[1], other, rule)
    return case


def build_staged_sets(g: Graph, u: int, bpart: BPartition, partial: PartialColoring) -> StagedSets:
    """ Grow S_1 until it holds the whole first shell.

    Hub edges of the B-partition are colored first, then each uncovered
    first-shell vertex (smallest first) brings in a shortest cycle.

    Arguments:
        g(Graph): The graph
        u(int): The center
        bpart(BPartition): The B-partition around u
        partial(PartialColoring): Colors so far; extended in place

    Returns: StagedSets
    """
    shell1 = shells(g, u).shell1
    color_hub_edges(bpart, partial)

    current = bpart.covered
    result = StagedSets(stages=[current])
    while not shell1 <= current:
        v = min(shell1 - current)
        cycle = shortest_cycle_through_edge(g, u, v, current)
        if len(cycle) > 5:
            raise ConstructionError(
                f'Shortest cycle through {u} {v} has length {len(cycle)}'
            )
        staged = tuple(w for w in cycle if w in current)
        case = color_stage_cycle(cycle, partial)
        result.cycles.append(StageCycle(v, cycle, case, staged))
        log.debug('Stage %s: vertex %s, cycle %s, %s', len(result.stages), v, cycle, case.value)
        current = current | frozenset(cycle)
        result.stages.append(current)

    return result
