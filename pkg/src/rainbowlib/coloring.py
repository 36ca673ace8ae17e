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

Edge colorings and their Deb822 file format.
"""

import logging
import types

from debian import deb822

from . import util
from .graph import Graph
from .util import canonical_edge

log = logging.getLogger(__name__)


class ColoringError(util.RainbowError):
    """ Exceptions related to edge colorings and coloring files."""

    def __init__(self, *args, code=2, **kwargs):
        """Exceptions related to edge colorings and coloring files.

        Arguments:
            code (:obj:`int`, optional, default=2): Exception error code.
    """
        super().__init__(*args, **kwargs)
        self.code = code


class EdgeColoring:
    """A mapping from edges to the colors 1..num_colors.

    Colors need not all be used, and adjacent edges may share a color.

    Attributes:
        num_colors(int): The palette size t
        assignment(mapping): canonical edge -> color
    """

    def __init__(self, num_colors: int, assignment: dict) -> None:
        if num_colors < 1:
            raise ColoringError(f'A coloring needs at least one color, got {num_colors}')
        colors: dict = {}
        for (a, b), color in assignment.items():
            if not 1 <= color <= num_colors:
                raise ColoringError(
                    f'Edge ({a}, {b}) has color {color}, outside 1..{num_colors}'
                )
            colors[canonical_edge(a, b)] = color
        self._num_colors = num_colors
        self._colors = colors

    def __repr__(self) -> str:
        return f'EdgeColoring(num_colors={self._num_colors}, edges={len(self._colors)})'

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return (
            self._num_colors == other._num_colors
            and self._colors == other._colors
        )

    def __len__(self) -> int:
        return len(self._colors)

    def __contains__(self, edge) -> bool:
        return canonical_edge(*edge) in self._colors

    @property
    def num_colors(self) -> int:
        return self._num_colors

    @property
    def assignment(self):
        """A read-only view of edge -> color"""
        return types.MappingProxyType(self._colors)

    @property
    def edges(self) -> tuple:
        return tuple(sorted(self._colors))

    def color(self, a: int, b: int) -> int:
        """The color of edge {a, b}"""
        try:
            return self._colors[canonical_edge(a, b)]
        except KeyError:
            raise ColoringError(f'Edge ({a}, {b}) is not colored')

    def colors_used(self) -> tuple:
        """The distinct colors that appear, ascending"""
        return tuple(sorted(set(self._colors.values())))

    def relabel(self, permutation: dict) -> 'EdgeColoring':
        """Apply a color permutation, e.g. {1: 2, 2: 1}; missing colors stay."""
        return EdgeColoring(
            self._num_colors,
            {edge: permutation.get(color, color) for edge, color in self._colors.items()}
        )

    def recolor(self, updates: dict, num_colors: int = 0) -> 'EdgeColoring':
        """A copy with some edges given new colors."""
        colors = dict(self._colors)
        for (a, b), color in updates.items():
            colors[canonical_edge(a, b)] = color
        return EdgeColoring(num_colors or self._num_colors, colors)

    def validate(self, g: Graph) -> None:
        """Make sure this coloring covers exactly the edges of g.

        Raises ColoringError (code 2) on a mismatch.
        """
        colored = set(self._colors)
        expected = set(g.edges)
        missing = sorted(expected - colored)
        extra = sorted(colored - expected)
        if missing or extra:
            detail: list = []
            if missing:
                detail.append(f'{len(missing)} uncolored edge(s), first {missing[0]}')
            if extra:
                detail.append(f'{len(extra)} edge(s) not in the graph, first {extra[0]}')
            raise ColoringError(
                'The coloring does not match the graph: ' + '; '.join(detail)
            )

    @property
    def deb822(self) -> str:
        """Output the coloring in the Deb822 coloring file format"""
        paragraph = deb822.Deb822()
        paragraph['Num-Colors'] = str(self._num_colors)
        paragraph['Edges'] = str(len(self._colors))
        paragraph['Coloring'] = ''.join(
            f'\n {a} {b} {self._colors[(a, b)]}' for a, b in self.edges
        )
        return paragraph.dump()


def uniform_coloring(g: Graph, color: int = 1, num_colors: int = 1) -> EdgeColoring:
    """Every edge of g gets the same color."""
    return EdgeColoring(max(color, num_colors), {edge: color for edge in g.edges})


def distinct_coloring(g: Graph) -> EdgeColoring:
    """Every edge of g gets its own color, in canonical edge order."""
    return EdgeColoring(
        max(1, g.m), {edge: index for index, edge in enumerate(g.edges, 1)}
    )


def from_sequence(g: Graph, colors, num_colors: int = 0) -> EdgeColoring:
    """Color the edges of g in canonical order with the given color sequence."""
    colors = list(colors)
    if len(colors) != g.m:
        raise ColoringError(f'Expected {g.m} colors, got {len(colors)}')
    return EdgeColoring(
        num_colors or max(colors, default=1), dict(zip(g.edges, colors))
    )


def parse_coloring(text: str) -> EdgeColoring:
    """ Load a coloring from the Deb822 coloring file format.

    Arguments:
        text(str): The file contents

    Returns: EdgeColoring
    """
    paragraph = deb822.Deb822(text.splitlines())
    for key in ('Num-Colors', 'Edges', 'Coloring'):
        if key not in paragraph:
            raise ColoringError(f'The coloring file has no {key} field')

    try:
        num_colors = int(paragraph['Num-Colors'])
        edge_count = int(paragraph['Edges'])
    except ValueError:
        raise ColoringError('Num-Colors and Edges must be integers')

    colors: dict = {}
    for line in paragraph['Coloring'].splitlines():
        words = line.split()
        if not words:
            continue
        if len(words) != 3:
            raise ColoringError(f'Expected "u v color", got "{line.strip()}"')
        try:
            a, b, color = (int(word) for word in words)
        except ValueError:
            raise ColoringError(f'Expected integers, got "{line.strip()}"')
        if a == b:
            raise ColoringError(f'Self-loop {a} {b} in coloring file')
        edge = canonical_edge(a, b)
        if edge in colors:
            raise ColoringError(f'Edge {a} {b} is colored twice')
        colors[edge] = color

    if len(colors) != edge_count:
        raise ColoringError(
            f'The header promises {edge_count} edges but {len(colors)} are listed'
        )
    log.debug('Parsed coloring with %s colors on %s edges', num_colors, edge_count)
    return EdgeColoring(num_colors, colors)
