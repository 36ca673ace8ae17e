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

Completion of the coloring once the staged sets cover the first shell.
"""

import logging

from ..coloring import EdgeColoring
from ..graph import Graph, edges_between, shells
from ..util import TerminalCase, format_vertices
from .partition import SecondShellPartition, partition_d_blocks, partition_second_shell
from .trace import RESIDUAL, ConstructionError, ConstructionTrace, PartialColoring

log = logging.getLogger(__name__)

# Swaps the roles of X and Y
MIRROR = {1: 2, 2: 1, 3: 4, 4: 3}


def _around(g: Graph, v: int, vertices) -> list:
    return sorted(w for w in g.neighbors(v) if w in vertices)


def _pick(partial: PartialColoring, v: int, candidates) -> object:
    """Smallest candidate whose edge to v is uncolored, else the smallest"""
    if not candidates:
        return None
    free = [w for w in candidates if not partial.is_colored(v, w)]
    return min(free) if free else min(candidates)


def hub_split(g: Graph, u: int, partial: PartialColoring) -> tuple:
    """ X and Y: first-shell vertices whose edge to u has color 1 and 2."""
    x: set = set()
    y: set = set()
    for v in sorted(shells(g, u).shell1):
        color = partial.color(u, v)
        if color == 1:
            x.add(v)
        elif color == 2:
            y.add(v)
        else:
            raise ConstructionError(
                f'Hub edge {u} {v} has color {color} after staging', code=1
            )
    return frozenset(x), frozenset(y)


class _Completion:
    """Applies one terminal case to a partial coloring"""

    def __init__(self, g: Graph, trace: ConstructionTrace) -> None:
        self.log = logging.getLogger(__name__)
        self.g = g
        self.trace = trace
        self.partial = trace.partial
        self.u = trace.center
        self.shells = shells(g, self.u)
        self.isolated = trace.bpartition.isolated
        self.case = None

    def offer(self, edges, color: int, what: str) -> None:
        self.partial.offer_all(edges, color, f'terminal:{self.case.value}:{what}')

    def offer_edge(self, a: int, b: int, color: int, what: str) -> None:
        self.partial.offer(a, b, color, f'terminal:{self.case.value}:{what}')

    def between(self, xs, ys):
        return edges_between(self.g, xs, ys)

    @property
    def shell1_edges(self):
        return self.between(self.shells.shell1, self.shells.shell1)

    def run(self) -> None:
        if self.shells.shell2 <= self.trace.stages.final:
            self.case = TerminalCase.SHELL2_STAGED
            self.offer(self.shell1_edges, 3, 'N1')
            return

        x, y = hub_split(self.g, self.u, self.partial)
        part = partition_second_shell(self.g, self.u, x, y)
        if part.mirrored:
            self.log.info('Swapping the roles of X and Y around %s', self.u)
            self.partial.relabel(MIRROR)
            self.trace.mirrored = True
        self.trace.second_shell = part

        self.color_shell2_blocks(part)
        if part.covered:
            self.case = TerminalCase.SHELL2_COVERED
            self.offer(self.shell1_edges, 3, 'N1')
            self.offer(self.between(part.s, part.t | part.q), 5, 'S-TQ')
            return

        self.check_claims(part)
        if not part.p1:
            self.case = TerminalCase.CASE_1
            self.case_1(part)
        elif len(part.x) == 1:
            self.case = TerminalCase.SUBCASE_2_1
            self.subcase_2_1(part)
        elif any(v not in self.isolated and not _around(self.g, v, part.p1)
                 for v in part.x):
            self.case = TerminalCase.SUBCASE_2_2_1
            self.subcase_2_2_1(part)
        else:
            self.case = TerminalCase.SUBCASE_2_2_2
            self.subcase_2_2_2(part)

    def color_shell2_blocks(self, part: SecondShellPartition) -> None:
        rule = 'terminal:STQ'
        self.partial.offer_all(self.between(part.s, part.x), 3, rule)
        self.partial.offer_all(self.between(part.t, part.y), 4, rule)
        self.partial.offer_all(self.between(part.q, part.x), 3, rule)
        self.partial.offer_all(self.between(part.q, part.y), 4, rule)

    def check_claims(self, part: SecondShellPartition) -> None:
        trace = self.trace
        wrong = [v for v in self.isolated if self.partial.color(self.u, v) != 1]
        trace.claim('isolated-hub-color-1', not wrong, format_vertices(wrong))
        touching = self.between(part.p1, self.isolated)
        trace.claim('P1-misses-isolated', not touching,
                    ' '.join(f'{a}-{b}' for a, b in sorted(touching)))
        crowded = [p for p in part.p2 if len(_around(self.g, p, self.isolated)) > 1]
        trace.claim('P2-meets-isolated-once', not crowded, format_vertices(crowded))

    def case_1(self, part: SecondShellPartition) -> None:
        self.offer(self.between(part.x, part.y), 3, 'X-Y')
        self.offer(self.between(part.p, part.s), 2, 'P-S')
        self.offer(self.between(part.p, part.p), 5, 'P-P')
        for p in sorted(part.p):
            candidates = [
                v for v in _around(self.g, p, part.x)
                if v not in self.isolated and _around(self.g, v, part.y)
            ]
            self.trace.claim(f'x_p exists for {p}', bool(candidates))
            chosen = _pick(self.partial, p, candidates)
            if chosen is not None:
                self.offer_edge(p, chosen, 5, 'x_p')
            self.offer(self.between({p}, part.x), 4, 'P-X')

    def subcase_2_1(self, part: SecondShellPartition) -> None:
        (x,) = part.x
        blocks, rest = partition_d_blocks(self.g, x, part.p)
        self.trace.dpartition = (blocks, rest)
        for block in blocks:
            if self.g.has_edge(x, block.dominator):
                self.offer_edge(x, block.dominator, 1, 'x-d_i')
            self.offer(self.between({x}, block.others), 2, 'x-D_i')
        self.offer(self.between({x}, rest), 1, 'x-D_rest')
        self.offer(self.between(rest, self.shells.shell2 - rest), 4, 'D_rest-N2')
        self.offer(self.between(part.p, part.p), 3, 'P-P')
        self.offer(self.shell1_edges, 3, 'N1')

    def subcase_2_2_1(self, part: SecondShellPartition) -> None:
        x1 = frozenset(v for v in part.x if _around(self.g, v, part.p1))
        x2 = part.x - x1 - self.isolated
        anchor = min(x2)
        anchor_y = _around(self.g, anchor, part.y)
        self.trace.claim(f'y_x2 exists for {anchor}', bool(anchor_y))
        p1 = frozenset(p for p in part.p if _around(self.g, p, x1))
        p2 = part.p - p1
        self.log.debug('x2=%s, P1\'={%s}, P2\'={%s}', anchor,
                       format_vertices(p1), format_vertices(p2))

        self.offer(self.between(x1, part.y), 3, 'X1-Y')
        self.offer(self.between(x2, part.y), 4, 'X2-Y')
        self.offer(self.between(x1, p1), 1, 'X1-P1')
        self.offer(self.between({anchor}, part.p), 5, 'x2-P')
        for p in sorted(p2):
            if not self.g.has_edge(p, anchor):
                candidates = _around(self.g, p, x2)
                self.trace.claim(f'x_p exists for {p}', bool(candidates))
                chosen = _pick(self.partial, p, candidates)
                if chosen is not None:
                    self.offer_edge(p, chosen, 5, 'x_p')
            self.offer(self.between({p}, part.x), 3, 'P2-X')
        self.offer(self.between(part.p, part.p), 2, 'P-P')
        self.offer(self.between(part.p, part.s), 2, 'P-S')

    def subcase_2_2_2(self, part: SecondShellPartition) -> None:
        candidates = sorted(part.x - self.isolated) or sorted(part.x)
        x1 = candidates[0]
        ys = _around(self.g, x1, part.y)
        self.log.debug('x1=%s, y=%s', x1, ys[0] if ys else min(part.y, default=None))

        self.offer(self.between({x1}, part.p), 5, 'x1-P')
        self.offer(self.between(part.x, part.p), 3, 'X-P')
        self.offer(self.between({x1}, part.y), 4, 'x1-Y')
        self.offer(self.between(part.x - {x1}, part.y), 1, 'X-Y')
        self.offer(self.between(part.p, part.p), 2, 'P-P')
        self.offer(self.between(part.p, part.s), 2, 'P-S')


def color_terminal_case(g: Graph, trace: ConstructionTrace) -> EdgeColoring:
    """ Finish a coloring whose staged sets cover the first shell.

    Each terminal rule only colors edges still uncolored; whatever remains
    afterwards takes color 1.

    Arguments:
        g(Graph): The graph
        trace(ConstructionTrace): Trace holding the B-partition, the staged
            sets and the partial coloring; updated in place

    Returns: EdgeColoring
    """
    if trace.stages is None or trace.bpartition is None:
        raise ConstructionError('The staged sets have not been built', code=1)
    completion = _Completion(g, trace)
    completion.run()
    trace.terminal_case = completion.case
    filled = trace.partial.fill(g.edges, 1, RESIDUAL)
    log.debug('Terminal case %s; %s edges took the residual color',
              completion.case.value, filled)
    return trace.partial.to_coloring()
