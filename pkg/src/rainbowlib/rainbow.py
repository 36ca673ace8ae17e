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

Rainbow reachability and rainbow-connectivity certificates.

Reachability is a dynamic program over (vertex, set of used colors) states.
A walk whose edge colors are pairwise distinct can always be shortened to a
path with the same property, so reachability through such walks is exactly
reachability through rainbow paths.
"""

import functools
import logging

from dataclasses import dataclass, field

from . import util
from .coloring import EdgeColoring
from .graph import Graph, is_connected
from .util import bits, canonical_edge

log = logging.getLogger(__name__)


class RainbowCheckError(util.RainbowError):
    """ Exceptions raised while deciding rainbow connectivity."""

    def __init__(self, *args, code=2, **kwargs):
        """Exceptions raised while deciding rainbow connectivity.

        Arguments:
            code (:obj:`int`, optional, default=2): Exception error code.
    """
        super().__init__(*args, **kwargs)
        self.code = code


@dataclass(frozen=True)
class Reachability:
    """Rainbow reachability from one source.

    Attributes:
        source(int): The source vertex
        reachable(tuple): reachable[v] is True iff a rainbow source-v path exists
        witnesses(dict): v -> witness path (vertex tuple) for each reachable v
    """
    source: int
    reachable: tuple
    witnesses: dict = field(default_factory=dict)


@dataclass
class RainbowCertificate:
    """The outcome of a rainbow connectivity check.

    Attributes:
        connected(bool): Whether every pair has a rainbow path
        num_colors(int): The palette size of the checked coloring
        witnesses(dict): (s, t) with s < t -> rainbow path, when connected
        violation(tuple): The lexicographically first failing pair, or None
    """
    connected: bool
    num_colors: int
    witnesses: dict = field(default_factory=dict)
    violation: object = None

    @property
    def summary(self) -> str:
        if self.connected:
            return f'rainbow connected ({len(self.witnesses)} pairs witnessed)'
        s, t = self.violation
        return f'not rainbow connected: no rainbow path between {s} and {t}'


@functools.lru_cache(maxsize=None)
def _mask_levels(num_colors: int) -> tuple:
    """Color subsets grouped by size, each group ascending"""
    levels: list = [[] for _ in range(num_colors + 1)]
    for mask in range(1 << num_colors):
        levels[bin(mask).count('1')].append(mask)
    return tuple(tuple(level) for level in levels)


def _check_palette(num_colors: int) -> None:
    if num_colors > util.COLOR_CAP:
        raise RainbowCheckError(
            f'{num_colors} colors exceed the cap of {util.COLOR_CAP}; the '
            'subset state space would be infeasible'
        )


def color_adjacency(g: Graph, c: EdgeColoring) -> list:
    """Per color index, per vertex, the bitmask of neighbors across that color.

    Raises ColoringError when c does not cover exactly the edges of g.
    """
    c.validate(g)
    _check_palette(c.num_colors)
    adjacency = [[0] * g.n for _ in range(c.num_colors)]
    for (a, b), color in c.assignment.items():
        layer = adjacency[color - 1]
        layer[a] |= 1 << b
        layer[b] |= 1 << a
    return adjacency


def _closure(reached: int, free: list) -> int:
    frontier = reached
    while frontier:
        step = 0
        for v in bits(frontier):
            step |= free[v]
        frontier = step & ~reached
        reached |= frontier
    return reached


def reach_by_mask(adjacency: list, num_colors: int, source: int,
                  full: int = 0, free: list = None) -> list:
    """ Fill reach[mask] = vertices reachable from source by a walk whose
    edges use exactly the colors in mask, each once.

    Arguments:
        adjacency(list): From color_adjacency
        num_colors(int): The palette size
        source(int): The start vertex
        full(int): Bitmask of all vertices; once every one of them is reached
            the remaining, larger subsets are skipped
        free(list): Optional per-vertex bitmasks of edges that consume no color

    Returns: [int]
    """
    reach = [0] * (1 << num_colors)
    reach[0] = 1 << source
    seen = 0
    levels = _mask_levels(num_colors)
    for size, level in enumerate(levels):
        for mask in level:
            current = reach[mask]
            if not current:
                continue
            if free is not None:
                current = _closure(current, free)
                reach[mask] = current
            seen |= current
            for color in range(num_colors):
                bit = 1 << color
                if mask & bit:
                    continue
                layer = adjacency[color]
                step = 0
                for v in bits(current):
                    step |= layer[v]
                if step:
                    reach[mask | bit] |= step
        if full and size < num_colors:
            above = seen
            for mask in levels[size + 1]:
                above |= reach[mask]
            if above & full == full:
                break
    return reach


def _witness(reach: list, adjacency: list, num_colors: int, target: int) -> tuple:
    """Walk back from the smallest color set that reaches target"""
    found = None
    for level in _mask_levels(num_colors):
        for mask in level:
            if reach[mask] >> target & 1:
                found = mask
                break
        if found is not None:
            break
    if found is None:
        return ()

    mask = found
    path = [target]
    current = target
    while mask:
        for color in bits(mask):
            before = reach[mask ^ (1 << color)] & adjacency[color][current]
            if before:
                current = (before & -before).bit_length() - 1
                mask ^= 1 << color
                path.append(current)
                break
        else:
            raise RainbowCheckError(
                f'Witness reconstruction for {target} is inconsistent', code=1
            )
    path.reverse()
    return tuple(path)


def is_rainbow_path(c: EdgeColoring, path) -> bool:
    """ True if consecutive vertices of path are joined by edges of pairwise
    distinct colors and no vertex repeats."""
    if len(set(path)) != len(path):
        return False
    colors: set = set()
    for a, b in zip(path, path[1:]):
        edge = canonical_edge(a, b)
        if edge not in c:
            return False
        color = c.assignment[edge]
        if color in colors:
            return False
        colors.add(color)
    return True


def rainbow_reachable(g: Graph, c: EdgeColoring, s: int) -> Reachability:
    """ Decide, for every vertex v, whether a rainbow s-v path exists.

    Arguments:
        g(Graph): The graph
        c(EdgeColoring): A coloring of every edge of g
        s(int): The source vertex

    Returns: Reachability
    """
    if not 0 <= s < g.n:
        raise RainbowCheckError(f'Vertex {s} is not in the graph')
    adjacency = color_adjacency(g, c)
    return _reachable_from(g, adjacency, c.num_colors, s)


def _reachable_from(g: Graph, adjacency: list, num_colors: int, s: int) -> Reachability:
    full = (1 << g.n) - 1
    reach = reach_by_mask(adjacency, num_colors, s, full=full)
    union = 0
    for value in reach:
        union |= value
    reachable = tuple(bool(union >> v & 1) for v in range(g.n))
    witnesses = {
        v: _witness(reach, adjacency, num_colors, v)
        for v in range(g.n) if reachable[v]
    }
    return Reachability(s, reachable, witnesses)


def is_rainbow_connected(g: Graph, c: EdgeColoring) -> RainbowCertificate:
    """ Check every vertex pair for a rainbow path.

    Sources are scanned in increasing order, so a reported violation is the
    lexicographically first failing pair.

    Arguments:
        g(Graph): A connected graph
        c(EdgeColoring): A coloring of every edge of g

    Returns: RainbowCertificate
    """
    if not is_connected(g):
        raise RainbowCheckError('Rainbow connectivity needs a connected graph')
    adjacency = color_adjacency(g, c)
    witnesses: dict = {}

    for s in range(g.n):
        result = _reachable_from(g, adjacency, c.num_colors, s)
        for t in range(s + 1, g.n):
            if not result.reachable[t]:
                log.debug('No rainbow path between %s and %s', s, t)
                return RainbowCertificate(False, c.num_colors, {}, (s, t))
            path = result.witnesses[t]
            if len(path) - 1 > c.num_colors or not is_rainbow_path(c, path):
                raise RainbowCheckError(
                    f'Witness {path} for ({s}, {t}) is not a rainbow path', code=1
                )
            witnesses[(s, t)] = path

    return RainbowCertificate(True, c.num_colors, witnesses, None)


def count_violations(g: Graph, c: EdgeColoring) -> int:
    """ The number of vertex pairs with no rainbow path."""
    adjacency = color_adjacency(g, c)
    full = (1 << g.n) - 1
    missing = 0
    for s in range(g.n):
        reach = reach_by_mask(adjacency, c.num_colors, s, full=full)
        union = 0
        for value in reach:
            union |= value
        later = full & ~((1 << (s + 1)) - 1)
        missing += bin(later & ~union).count('1')
    return missing


def optimistic_connected(g: Graph, partial: dict, num_colors: int) -> bool:
    """ Could some completion of a partial coloring be rainbow connected?

    Uncolored edges are treated as consuming no color, which only ever adds
    rainbow paths, so False proves that no completion works.

    Arguments:
        g(Graph): The graph
        partial(dict): canonical edge -> color for the colored edges
        num_colors(int): The palette size

    Returns: bool
    """
    _check_palette(num_colors)
    adjacency = [[0] * g.n for _ in range(num_colors)]
    free = [0] * g.n
    for a, b in g.edges:
        color = partial.get((a, b))
        if color is None:
            free[a] |= 1 << b
            free[b] |= 1 << a
        else:
            adjacency[color - 1][a] |= 1 << b
            adjacency[color - 1][b] |= 1 << a

    full = (1 << g.n) - 1
    for s in range(g.n):
        reach = reach_by_mask(adjacency, num_colors, s, full=full, free=free)
        union = 0
        for value in reach:
            union |= value
        if union & full != full:
            return False
    return True


def enumerate_rainbow_paths(g: Graph, c: EdgeColoring, s: int, t: int,
                            max_length: int = None) -> list:
    """ Every simple rainbow s-t path, by depth-first search.

    Arguments:
        g(Graph): The graph
        c(EdgeColoring): A coloring of every edge of g
        s, t(int): The end vertices
        max_length(int): Optional bound on the number of edges

    Returns: [tuple]
        Paths in depth-first order over sorted neighbors.
    """
    c.validate(g)
    limit = c.num_colors if max_length is None else min(max_length, c.num_colors)
    found: list = []
    path = [s]
    on_path = {s}
    used: set = set()

    def extend(v: int) -> None:
        if v == t:
            found.append(tuple(path))
            return
        if len(path) - 1 >= limit:
            return
        for w in g.neighbors(v):
            if w in on_path:
                continue
            color = c.assignment[canonical_edge(v, w)]
            if color in used:
                continue
            path.append(w)
            on_path.add(w)
            used.add(color)
            extend(w)
            used.discard(color)
            on_path.discard(w)
            path.pop()

    if s == t:
        return [(s,)]
    extend(s)
    return found
