"""Exact tools for generalized cut polytopes of simplicial complexes.

Complexes are given as family specs ("turtle:4,2", "dmn:2,2", ...), inline
JSON or a path to a JSON file with "ground_set" and "facets".
"""

import json

from . import _core
from ._core import GcutError

__all__ = ["GcutError", "vertices", "hrep", "degree", "volume", "run"]


def _spec(complex):
    if isinstance(complex, dict):
        return json.dumps(complex)
    return complex


def vertices(complex, polytope="gcut"):
    return json.loads(_core.vertices_json(_spec(complex), polytope))


def hrep(complex, method="auto"):
    return json.loads(_core.hrep_json(_spec(complex), method))


def degree(complex, check_volume=True):
    return json.loads(_core.degree_json(_spec(complex), check_volume))


def volume(complex):
    return int(_core.volume(_spec(complex)))


def run(*args):
    return _core.run([str(a) for a in args])
