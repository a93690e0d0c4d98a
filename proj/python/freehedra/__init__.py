"""Python bindings for the freehedra library.

Structured results (certificates, reports, series) come back as plain
dicts matching the JSON schemas shipped with the project.
"""

import json

from ._core import (
    Complex,
    DomainError,
    EncodingError,
    Error,
    LocatorError,
    ResourceError,
    excess,
    face_leq,
    is_augmented,
    is_chain,
    make_family,
)
from . import _core

__all__ = [
    "Complex", "Error", "LocatorError", "DomainError", "EncodingError", "ResourceError",
    "make_family", "freehedron", "cube", "simplex", "associahedron",
    "to_json", "from_json", "to_dot",
    "face_leq", "is_chain", "excess",
    "is_short", "check_supdim", "audit_chains", "hilbert", "residual", "is_augmented",
]


def freehedron(n):
    return make_family("freehedron", n)


def cube(d):
    return make_family("cube", d)


def simplex(d):
    return make_family("simplex", d)


def associahedron(leaves):
    return make_family("associahedron", leaves)


def to_json(c):
    return json.loads(c._json())


def from_json(doc):
    """Accepts a full complex document or a {family, n} request."""
    if not isinstance(doc, str):
        doc = json.dumps(doc)
    return _core._complex_from_json(doc)


def to_dot(c, graph="hasse"):
    if graph not in ("hasse", "skeleton"):
        raise ValueError("graph must be 'hasse' or 'skeleton'")
    return c._dot(graph == "skeleton")


def is_short(c):
    return json.loads(_core._is_short(c))


def check_supdim(c):
    return json.loads(_core._check_supdim(c))


def audit_chains(c, samples=None, seed=None):
    kw = {}
    if samples is not None:
        kw["samples"] = samples
    if seed is not None:
        kw["seed"] = seed
    return json.loads(_core._audit(c, **kw))


def hilbert(c, max_len=2, color=None, repeats=True):
    return json.loads(_core._hilbert(c, max_len, color, repeats))


def residual(c, max_len=3, color=None, repeats=True):
    return json.loads(_core._residual(c, max_len, color, repeats))
