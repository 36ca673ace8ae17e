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

The sharpness family G_k: k paths u-v_i-w_i of length two whose far ends
form a clique. Every G_k has diameter 2 and no bridges; for k >= 17 no
coloring with 4 colors is rainbow connected.
"""

import itertools
import logging

from dataclasses import dataclass, field

import numpy as np

from . import util
from .coloring import EdgeColoring, from_sequence
from .graph import Graph
from .rainbow import enumerate_rainbow_paths, is_rainbow_connected, rainbow_reachable

log = logging.getLogger(__name__)

# Hub/spoke color pairs available to a 4-coloring
PAIR_TYPES = 16

# Smallest k for which two of the paths must share a color pair
PIGEONHOLE_K = PAIR_TYPES + 1


class ExtremalError(util.RainbowError):
    """ Exception from the extremal module."""

    def __init__(self, *args, code=2, **kwargs):
        """Extremal family error

        Arguments:
            code (:obj:`int`, optional, default=2): Exception error code.
    """
        super().__init__(*args, code=code, **kwargs)


@dataclass(frozen=True)
class ExtremalSpec:
    """ Vertex roles of G_k.

    Attributes:
        k(int): The number of u-v_i-w_i paths
    """
    k: int

    hub = 0

    def v(self, i: int) -> int:
        """Middle vertex v_i, 1 <= i <= k"""
        return i

    def w(self, i: int) -> int:
        """Clique vertex w_i, 1 <= i <= k"""
        return self.k + i

    @property
    def n(self) -> int:
        return 2 * self.k + 1

    @property
    def m(self) -> int:
        return 2 * self.k + self.k * (self.k - 1) // 2

    @property
    def middle(self) -> tuple:
        return tuple(range(1, self.k + 1))

    @property
    def clique(self) -> tuple:
        return tuple(range(self.k + 1, 2 * self.k + 1))

    @property
    def deb822(self) -> dict:
        return {
            'K': str(self.k),
            'Hub': str(self.hub),
            'Middle': util.format_vertices(self.middle),
            'Clique': util.format_vertices(self.clique),
        }


def _check_k(k: int, least: int = 2) -> None:
    if k < least:
        raise ExtremalError(f'k must be at least {least}, got {k}')


def gen_extremal(k: int) -> tuple:
    """ Build G_k.

    Arguments:
        k(int): The number of paths, at least 2

    Returns: (Graph, ExtremalSpec)
    """
    _check_k(k)
    spec = ExtremalSpec(k)
    edges: list = []
    for i in range(1, k + 1):
        edges.append((spec.hub, spec.v(i)))
        edges.append((spec.v(i), spec.w(i)))
    edges.extend(itertools.combinations(spec.clique, 2))
    g = Graph(spec.n, edges)
    log.debug('Generated G_%s with %s vertices and %s edges', k, g.n, g.m)
    return g, spec


def canonical_coloring(k: int) -> EdgeColoring:
    """ The 5-coloring of G_k that is rainbow connected.

    u-v_1 gets 1, v_1-w_1 gets 2, the other hub edges 3, the other spokes 4
    and every clique edge 5.
    """
    g, spec = gen_extremal(k)
    colors: dict = {}
    for i in spec.middle:
        first = i == 1
        colors[(spec.hub, spec.v(i))] = 1 if first else 3
        colors[(spec.v(i), spec.w(i))] = 2 if first else 4
    for a, b in itertools.combinations(spec.clique, 2):
        colors[(a, b)] = 5
    return EdgeColoring(util.MAX_THEOREM_COLORS, colors)


def _check_lower_bound_input(spec: ExtremalSpec, c: EdgeColoring) -> None:
    if spec.k < PIGEONHOLE_K:
        raise ExtremalError(
            f'Two paths are only forced to share colors for k >= {PIGEONHOLE_K}, '
            f'got k={spec.k}'
        )
    used = c.colors_used()
    if len(used) > 4:
        raise ExtremalError(
            f'Expected a coloring with at most 4 colors, got {len(used)}'
        )


def pigeonhole_pair(spec: ExtremalSpec, c: EdgeColoring) -> tuple:
    """ The lexicographically smallest i < j whose paths share both colors.

    Arguments:
        spec(ExtremalSpec): Roles of G_k, k >= 17
        c(EdgeColoring): A coloring of G_k with at most 4 colors

    Returns: (int, int)
    """
    _check_lower_bound_input(spec, c)
    pairs = [
        (c.color(spec.hub, spec.v(i)), c.color(spec.v(i), spec.w(i)))
        for i in spec.middle
    ]
    for i, j in itertools.combinations(range(spec.k), 2):
        if pairs[i] == pairs[j]:
            return i + 1, j + 1
    raise ExtremalError(
        f'No two of {spec.k} paths share a color pair', code=1
    )


@dataclass
class Refutation:
    """ Why a 4-coloring of G_k is not rainbow connected.

    Attributes:
        pair(tuple): (i, j) from pigeonhole_pair
        vertices(tuple): (v_i, v_j)
        rainbow_paths(list): Every rainbow v_i-v_j path; always empty
        violation(tuple): The first failing pair of the full verifier
    """
    pair: tuple
    vertices: tuple
    rainbow_paths: list = field(default_factory=list)
    violation: tuple = None


def refute_four_coloring(spec: ExtremalSpec, c: EdgeColoring) -> Refutation:
    """ Show that a 4-coloring of G_k leaves v_i, v_j without a rainbow path.

    Arguments:
        spec(ExtremalSpec): Roles of G_k, k >= 17
        c(EdgeColoring): A coloring of G_k with at most 4 colors

    Returns: Refutation
    """
    i, j = pigeonhole_pair(spec, c)
    g, _ = gen_extremal(spec.k)
    vi, vj = spec.v(i), spec.v(j)

    if rainbow_reachable(g, c, vi).reachable[vj]:
        raise ExtremalError(
            f'Found a rainbow path between {vi} and {vj} in a 4-coloring', code=1
        )
    paths = enumerate_rainbow_paths(g, c, vi, vj)
    if paths:
        raise ExtremalError(f'Rainbow path {paths[0]} contradicts the pigeonhole pair', code=1)
    certificate = is_rainbow_connected(g, c)
    if certificate.connected:
        raise ExtremalError('A 4-coloring of G_k passed verification', code=1)

    log.debug('Paths %s and %s share colors; first failing pair %s',
              i, j, certificate.violation)
    return Refutation((i, j), (vi, vj), paths, certificate.violation)


def random_coloring(g: Graph, num_colors: int, seed) -> EdgeColoring:
    """ Color every edge uniformly from 1..num_colors.

    Arguments:
        g(Graph): The graph
        num_colors(int): The palette size
        seed: Anything numpy.random.SeedSequence accepts

    Returns: EdgeColoring
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    colors = rng.integers(1, num_colors + 1, size=g.m)
    return from_sequence(g, (int(color) for color in colors), num_colors)


@dataclass
class SamplingSummary:
    """ Outcome of refuting many random 4-colorings of one G_k."""
    k: int
    samples: int
    seed: int
    refuted: int = 0
    pairs: list = field(default_factory=list)

    @property
    def all_refuted(self) -> bool:
        return self.refuted == self.samples

    @property
    def ui(self) -> str:
        return (
            f'G_{self.k}: {self.refuted}/{self.samples} random 4-colorings '
            f'refuted (seed {self.seed})\n'
        )


def sample_refutations(k: int, samples: int, seed: int, num_colors: int = 4) -> SamplingSummary:
    """ Refute seeded random colorings of G_k with at most 4 colors.

    Sample i uses the seed sequence (seed, i), so any failing sample can be
    rebuilt on its own.

    Returns: SamplingSummary
    """
    _check_k(k, PIGEONHOLE_K)
    if not 1 <= num_colors <= 4:
        raise ExtremalError(f'Sampled colorings use 1 to 4 colors, got {num_colors}')
    g, spec = gen_extremal(k)
    summary = SamplingSummary(k, samples, seed)
    for index in range(samples):
        c = random_coloring(g, num_colors, [seed, index])
        refutation = refute_four_coloring(spec, c)
        summary.refuted += 1
        summary.pairs.append(refutation.pair)
    log.info('Refuted %s of %s random colorings of G_%s', summary.refuted, samples, k)
    return summary
