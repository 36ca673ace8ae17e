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

Exact rainbow connection numbers for small graphs.

Colorings are enumerated as restricted growth strings over the canonically
sorted edges: the first edge has color 1 and color j + 1 only appears after
color j. Relabelling colors never changes rainbow connectivity, so this
visits one coloring per color-permutation class.
"""

import logging

from dataclasses import dataclass

import networkx as nx

from . import util
from .coloring import EdgeColoring
from .graph import Graph, is_connected, metrics
from .rainbow import is_rainbow_connected, optimistic_connected
from .util import canonical_edge

log = logging.getLogger(__name__)

DEFAULT_MAX_COLORS = 8


class ExactSearchError(util.RainbowError):
    """ Exceptions from the exact search."""

    def __init__(self, *args, code=2, **kwargs):
        """Exceptions from the exact search.

        Arguments:
            code (:obj:`int`, optional, default=2): Exception error code.
    """
        super().__init__(*args, **kwargs)
        self.code = code


@dataclass
class ExactResult:
    """The outcome of an exact search.

    Attributes:
        rc_value(int): The rainbow connection number when exhausted is True,
            otherwise the best known upper bound
        optimal_coloring(EdgeColoring): A coloring achieving rc_value
        colorings_tested(int): Complete colorings checked
        exhausted(bool): False when the budget or the palette limit stopped
            the search before optimality was proven
        lower_bound(int): The largest t known to satisfy rc >= t
    """
    rc_value: int
    optimal_coloring: EdgeColoring
    colorings_tested: int
    exhausted: bool
    lower_bound: int


class _BudgetExceeded(Exception):
    pass


def rc_lower_bound(g: Graph) -> int:
    """ A rainbow path between two vertices at distance d needs d colors.

    Returns: int
        max(1, diameter)
    """
    return max(1, metrics(g).diameter)


def spanning_tree_coloring(g: Graph) -> EdgeColoring:
    """ Distinct colors on a breadth-first spanning tree, color 1 elsewhere.

    Every tree path is rainbow, so this witnesses rc <= n - 1.
    """
    if not is_connected(g):
        raise ExactSearchError('A spanning tree needs a connected graph')
    tree_edges = sorted(
        canonical_edge(a, b) for a, b in nx.bfs_edges(g.nx_graph, 0)
    )
    colors = {edge: 1 for edge in g.edges}
    for index, edge in enumerate(tree_edges, 1):
        colors[edge] = index
    return EdgeColoring(max(1, len(tree_edges)), colors)


class _Search:
    """Restricted-growth enumeration for one palette size"""

    def __init__(self, g: Graph, num_colors: int, budget: int, tested: int) -> None:
        self.g = g
        self.edges = g.edges
        self.num_colors = num_colors
        self.budget = budget
        self.tested = tested
        self.colors: dict = {}
        self.found = None

    def run(self) -> bool:
        return self._extend(0, 0)

    def _extend(self, depth: int, highest: int) -> bool:
        remaining = len(self.edges) - depth
        # every one of the num_colors colors must still be able to appear
        if highest + remaining < self.num_colors:
            return False

        if remaining == 0:
            if self.tested >= self.budget:
                raise _BudgetExceeded()
            self.tested += 1
            if optimistic_connected(self.g, self.colors, self.num_colors):
                self.found = dict(self.colors)
                return True
            return False

        if depth > 0 and not optimistic_connected(self.g, self.colors, self.num_colors):
            return False

        edge = self.edges[depth]
        for color in range(1, min(highest + 1, self.num_colors) + 1):
            self.colors[edge] = color
            if self._extend(depth + 1, max(highest, color)):
                return True
        del self.colors[edge]
        return False


def exact_rc(g: Graph, max_colors: int = DEFAULT_MAX_COLORS,
             budget: int = 0) -> ExactResult:
    """ Compute rc(g) by exhaustive search.

    Palette sizes are tried from rc_lower_bound upward; the first rainbow
    connected coloring found is the lexicographically first restricted growth
    string for that size.

    Arguments:
        g(Graph): A connected graph, ideally with at most about 13 edges
        max_colors(int): The largest palette size to try
        budget(int): The most complete colorings to test (0: util.DEFAULT_BUDGET)

    Returns: ExactResult
    """
    if not is_connected(g):
        raise ExactSearchError('The exact search needs a connected graph')
    budget = budget or util.DEFAULT_BUDGET
    lower = rc_lower_bound(g)

    if g.m == 0:
        return ExactResult(lower, EdgeColoring(1, {}), 0, True, lower)

    top = min(max_colors, g.m, util.COLOR_CAP)
    tested = 0
    known = lower

    for num_colors in range(lower, top + 1):
        log.info('Searching %s-colorings of %s edges', num_colors, g.m)
        search = _Search(g, num_colors, budget, tested)
        try:
            success = search.run()
        except _BudgetExceeded:
            log.warning('Budget of %s colorings exhausted at t=%s', budget, num_colors)
            return _bounded(g, search.tested, known)
        tested = search.tested

        if success:
            coloring = EdgeColoring(num_colors, search.found)
            certificate = is_rainbow_connected(g, coloring)
            if not certificate.connected:
                raise ExactSearchError(
                    f'Search accepted a coloring that fails at {certificate.violation}',
                    code=1
                )
            return ExactResult(num_colors, coloring, tested, True, num_colors)
        known = num_colors + 1

    log.info('No coloring with at most %s colors; reporting an upper bound', top)
    return _bounded(g, tested, known)


def _bounded(g: Graph, tested: int, known: int) -> ExactResult:
    """Fallback result carrying the spanning-tree upper bound"""
    tree = spanning_tree_coloring(g)
    return ExactResult(tree.num_colors, tree, tested, False, known)
