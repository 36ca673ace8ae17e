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

Bounded recoloring search for constructed colorings that fail verification.
"""

import logging

from .. import util
from ..coloring import EdgeColoring
from ..graph import Graph
from ..rainbow import color_adjacency, count_violations, is_rainbow_connected, reach_by_mask
from .trace import REPAIR, RESIDUAL, ConstructionTrace

log = logging.getLogger(__name__)


def repairable(rule: str) -> bool:
    """Edges colored by a residual or terminal rule may be recolored"""
    return rule in (RESIDUAL, REPAIR) or rule.startswith('terminal:')


def _pair_connected(g: Graph, c: EdgeColoring, s: int, t: int) -> bool:
    adjacency = color_adjacency(g, c)
    reach = reach_by_mask(adjacency, c.num_colors, s, full=1 << t)
    return any(value >> t & 1 for value in reach)


def _candidates(g: Graph, trace: ConstructionTrace, pair: tuple) -> list:
    s, t = pair
    near = {s, t} | set(g.neighbors(s)) | set(g.neighbors(t))
    edges = [
        edge for edge, rule in trace.partial.rules.items()
        if repairable(rule) and (edge[0] in near or edge[1] in near)
    ]
    # Edges at the failing pair first
    return sorted(edges, key=lambda edge: (not ({s, t} & set(edge)), edge))


def repair_coloring(g: Graph, trace: ConstructionTrace, budget: int = 0):
    """ Recolor residual and terminal-rule edges until every pair is joined.

    First-improvement search: for the first failing pair, try each nearby
    repairable edge in each color 1..5; a move is kept when it joins the
    pair and lowers the number of failing pairs. Staged cycle edges are
    never touched.

    Arguments:
        g(Graph): The graph
        trace(ConstructionTrace): Trace of the failed construction; its
            partial coloring and repairs are updated in place
        budget(int): Tentative moves allowed; 0 means util.REPAIR_BUDGET

    Returns: EdgeColoring, or None when the budget runs out
    """
    budget = budget or util.REPAIR_BUDGET
    partial = trace.partial
    coloring = partial.to_coloring()
    certificate = is_rainbow_connected(g, coloring)
    violations = count_violations(g, coloring)
    moves = 0

    while not certificate.connected:
        pair = certificate.violation
        improved = False
        for edge in _candidates(g, trace, pair):
            old = partial.colors[edge]
            for color in range(1, util.MAX_THEOREM_COLORS + 1):
                if color == old:
                    continue
                moves += 1
                if moves > budget:
                    log.info('Repair budget of %s moves spent with %s failing pairs',
                             budget, violations)
                    return None
                tentative = coloring.recolor({edge: color})
                if not _pair_connected(g, tentative, *pair):
                    continue
                remaining = count_violations(g, tentative)
                if remaining < violations:
                    log.debug('Repair: edge %s %s -> %s, %s failing pairs left',
                              edge, old, color, remaining)
                    partial.colors[edge] = color
                    partial.rules[edge] = REPAIR
                    trace.repairs.append((edge, old, color))
                    coloring = tentative
                    violations = remaining
                    improved = True
                    break
            if improved:
                break
        if not improved:
            log.info('Repair stuck at pair %s with %s failing pairs', pair, violations)
            return None
        certificate = is_rainbow_connected(g, coloring)

    trace.certificate = certificate
    return coloring
