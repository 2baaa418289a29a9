"""Block graphs, binomial edge ideals and their graded Betti tables.

Every function returns plain Python data decoded from the core's JSON output,
in the same shape the `blockbetti` command line tool prints.
"""

import json

from . import _core
from ._core import Graph, ParseError, PreconditionError, ResourceError

__all__ = ["Graph", "ParseError", "PreconditionError", "ResourceError", "analyze", "classify", "groebner",
           "betti", "verify", "known_checks", "initial_equals_buchberger"]


def _graph(g):
    if isinstance(g, Graph):
        return g
    if isinstance(g, str):
        return Graph.named(g)
    n, edges = g
    return Graph(n, [tuple(e) for e in edges])


def analyze(g):
    return json.loads(_core.analyze(_graph(g)))


def classify(g):
    return json.loads(_core.classify(_graph(g)))


def groebner(g):
    return json.loads(_core.groebner(_graph(g)))


def initial_equals_buchberger(g):
    return _core.initial_equals_buchberger(_graph(g))


def betti(g, side="both", p=2):
    return json.loads(_core.betti(_graph(g), side, p))


def verify(corpus, checks, seed=0, threads=1):
    """Report dicts, one per (instance, check), in the deterministic suite order."""
    return [json.loads(line) for line in _core.verify(corpus, list(checks), seed, threads)]


def known_checks():
    return list(_core.known_checks())
