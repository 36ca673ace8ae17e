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

The gen subcommand.
"""

from .. import util
from ..extremal import canonical_coloring, gen_extremal
from ..generate import GenModel, random_diam2_bridgeless
from ..util import ExitCode, GenModelName
from .command import Command, CommandError

EXTREMAL = 'extremal'
RANDOM = 'random'


class Gen(Command):
    """Gen subcommand

    Writes a graph file: either the sharpness graph G_k, optionally with
    its canonical 5-coloring, or a seeded random eligible graph.

    Options:
        kind (extremal|random)
        --k
        --with-coloring
        --model, --n, --seed, --max-attempts, --extra-edges
        --out, -o
    """

    @classmethod
    def init_options(cls, subparsers):
        """Sets up the argument parser for this command.

        Returns: argparse.subparser:
            This command's subparser
        """
        sub = subparsers.add_parser(
            'gen',
            help='Generate the sharpness graph G_k or a random eligible graph'
        )
        sub.add_argument(
            'kind',
            choices=[EXTREMAL, RANDOM],
            help='What to generate'
        )
        sub.add_argument(
            '--k',
            type=int,
            help='Number of paths of G_k (extremal)'
        )
        sub.add_argument(
            '--with-coloring',
            metavar='FILE',
            help='Also write the canonical 5-coloring of G_k to FILE (extremal)'
        )
        sub.add_argument(
            '--model',
            choices=[model.value for model in GenModelName],
            default=GenModelName.HUB.value,
            help='Random graph model (random)'
        )
        sub.add_argument(
            '--n',
            type=int,
            help='Vertex count (random)'
        )
        sub.add_argument(
            '--seed',
            type=int,
            default=0,
            help='Generator seed (random)'
        )
        sub.add_argument(
            '--max-attempts',
            type=int,
            default=util.DEFAULT_MAX_ATTEMPTS,
            help='Rejected draws allowed (random)'
        )
        sub.add_argument(
            '--extra-edges',
            type=int,
            default=2,
            help='Edges added to G_k by extremal-perturbed (random)'
        )
        sub.add_argument(
            '-o',
            '--out',
            metavar='FILE',
            help='Write the graph to FILE instead of standard output'
        )
        cls.add_common_options(sub)
        return sub

    def finalize_options(self, args):
        super().finalize_options(args)
        self.kind = args.kind
        self.k = args.k
        self.with_coloring = args.with_coloring
        self.model = args.model
        self.n = args.n
        self.seed = args.seed
        self.max_attempts = args.max_attempts
        self.extra_edges = args.extra_edges
        self.out = args.out

    def generate(self, report):
        if self.kind == EXTREMAL:
            if self.k is None:
                raise CommandError('gen extremal needs --k')
            g, spec = gen_extremal(self.k)
            for key, value in spec.deb822.items():
                report.put(key, value)
            if self.with_coloring:
                self.write_text(self.with_coloring, canonical_coloring(self.k).deb822)
                report.put('Coloring', self.with_coloring)
            return g

        if self.n is None:
            raise CommandError('gen random needs --n')
        model = GenModel(
            GenModelName(self.model), self.n, self.seed,
            self.max_attempts, self.extra_edges
        )
        for key, value in model.deb822.items():
            report.put(key, value)
        return random_diam2_bridgeless(model)

    def execute(self, report):
        g = self.generate(report)
        report.put('Vertices', g.n)
        report.put('Edges', g.m)
        if self.out:
            self.write_text(self.out, g.to_edge_list())
            report.put('Graph', self.out)
        else:
            print(g.to_edge_list(), end='')
        return ExitCode.OK
