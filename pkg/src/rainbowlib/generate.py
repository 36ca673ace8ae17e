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

Seeded random connected, bridgeless graphs of diameter 2.
"""

import itertools
import logging
import math

from dataclasses import dataclass

import networkx as nx
import numpy as np

from . import util
from .extremal import gen_extremal
from .graph import Graph, eligibility
from .util import GenModelName, canonical_edge

log = logging.getLogger(__name__)

UNIFORM_P_CAP = 0.95

# Edge probabilities inside and between the shells of the hub model
HUB_SHELL1_P = 0.3
HUB_SHELL2_P = 0.3
HUB_CROSS_P = 0.15


class GeneratorError(util.RainbowError):
    """ Exception from the generator."""

    def __init__(self, *args, code=2, **kwargs):
        """Generator error

        Arguments:
            code (:obj:`int`, optional, default=2): Exception error code.
    """
        super().__init__(*args, code=code, **kwargs)


@dataclass(frozen=True)
class GenModel:
    """ A random graph model and its parameters.

    Attributes:
        name(GenModelName): Which model to draw from
        n(int): Target vertex count; extremal-perturbed uses 2k+1 vertices
            with k = (n-1)//2
        seed(int): Seed of the PCG64 generator
        max_attempts(int): Rejected draws allowed before giving up
        extra_edges(int): Edges added to G_k by extremal-perturbed
    """
    name: GenModelName
    n: int
    seed: int
    max_attempts: int = util.DEFAULT_MAX_ATTEMPTS
    extra_edges: int = 2

    @property
    def k(self) -> int:
        return (self.n - 1) // 2

    @property
    def deb822(self) -> dict:
        fields = {
            'Model': self.name.value,
            'N': str(self.n),
            'Seed': str(self.seed),
        }
        if self.name == GenModelName.EXTREMAL:
            fields['Extra-Edges'] = str(self.extra_edges)
        return fields


def trial_seed(seed: int, index: int) -> int:
    """ Independent 64-bit seed for trial index of a run seeded with seed."""
    state = np.random.SeedSequence([seed, index]).generate_state(1, np.uint64)
    return int(state[0])


def uniform_probability(n: int) -> float:
    return min(UNIFORM_P_CAP, 3 * math.log(n) / n)


def _draw_uniform(n: int, rng: np.random.Generator) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    keep = rng.random(len(pairs)) < uniform_probability(n)
    return Graph(n, [pair for pair, kept in zip(pairs, keep) if kept])


def _other_side(graph: nx.Graph, a: int, b: int) -> tuple:
    view = nx.restricted_view(graph, [], [(a, b), (b, a)])
    side_a = sorted(nx.node_connected_component(view, a))
    side_b = sorted(nx.node_connected_component(view, b))
    return side_a, side_b


def _draw_hub(n: int, rng: np.random.Generator) -> Graph:
    shell1_size = int(rng.integers(2, n))
    shell1 = list(range(1, shell1_size + 1))
    shell2 = list(range(shell1_size + 1, n))
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from((0, v) for v in shell1)

    for w in shell2:
        count = int(rng.integers(1, min(2, len(shell1)) + 1))
        for v in rng.choice(shell1, size=count, replace=False):
            graph.add_edge(int(v), w)
    for group, p in ((shell1, HUB_SHELL1_P), (shell2, HUB_SHELL2_P)):
        for a, b in itertools.combinations(group, 2):
            if rng.random() < p:
                graph.add_edge(a, b)
    for a in shell1:
        for b in shell2:
            if rng.random() < HUB_CROSS_P:
                graph.add_edge(a, b)

    # Pairs further than 2 apart: join one to a neighbour of the other
    for a, b in itertools.combinations(range(n), 2):
        if graph.has_edge(a, b) or set(graph[a]) & set(graph[b]):
            continue
        target = sorted(v for v in graph.neighbors(b) if v != a)
        graph.add_edge(a, int(rng.choice(target)))

    # Close every bridge with a second edge between its two sides
    for a, b in sorted(canonical_edge(*edge) for edge in nx.bridges(graph)):
        if not any(canonical_edge(*edge) == (a, b) for edge in nx.bridges(graph)):
            continue
        side_a, side_b = _other_side(graph, a, b)
        options = [
            (x, y) for x in side_a for y in side_b
            if (x, y) != (a, b) and (y, x) != (a, b) and not graph.has_edge(x, y)
        ]
        if options:
            x, y = options[int(rng.integers(len(options)))]
            graph.add_edge(x, y)

    return Graph(n, [canonical_edge(a, b) for a, b in graph.edges()])


def _draw_extremal(model: GenModel, rng: np.random.Generator) -> Graph:
    base, spec = gen_extremal(model.k)
    options = sorted(
        {canonical_edge(a, b) for a, b in itertools.combinations(spec.middle, 2)}
        | {(spec.v(i), spec.w(j)) for i in spec.middle for j in spec.middle if i != j}
    )
    count = min(model.extra_edges, len(options))
    chosen = rng.choice(len(options), size=count, replace=False)
    extra = [options[int(index)] for index in chosen]
    return Graph(base.n, list(base.edges) + extra)


def random_diam2_bridgeless(model: GenModel) -> Graph:
    """ Draw a connected, bridgeless graph of diameter exactly 2.

    Every draw is re-checked and rejected draws are redrawn from the same
    generator, so (model, n, seed) fixes the result.

    Arguments:
        model(GenModel): The model and its parameters

    Returns: Graph
    """
    if model.n < 4:
        raise GeneratorError(f'Need at least 4 vertices, got {model.n}')
    if model.name == GenModelName.EXTREMAL and model.k < 2:
        raise GeneratorError(f'extremal-perturbed needs n >= 5, got {model.n}')

    rng = np.random.Generator(np.random.PCG64(model.seed))
    for attempt in range(1, model.max_attempts + 1):
        if model.name == GenModelName.UNIFORM:
            g = _draw_uniform(model.n, rng)
        elif model.name == GenModelName.HUB:
            g = _draw_hub(model.n, rng)
        else:
            g = _draw_extremal(model, rng)

        if eligibility(g).eligible:
            log.debug('%s n=%s seed=%s accepted after %s draws',
                      model.name.value, model.n, model.seed, attempt)
            return g

    raise GeneratorError(
        f'No eligible graph after {model.max_attempts} draws of '
        f'{model.name.value} with n={model.n}; try a different model, a '
        f'smaller n or a larger --max-attempts'
    )
