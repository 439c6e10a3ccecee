"""Exact behavioural semantics for signal flow terms.

Terms are strings in the flowcat syntax, e.g.
``"copy ; (delay | id) ; add"``. Field names are ``"q"`` or ``"zp:<p>"``.
Scalars come back as exact strings such as ``"-3/2"``.
"""

import json

from . import _flowcat
from ._flowcat import ParseError, TermTypeError, axioms, equiv

__all__ = [
    "ParseError",
    "TermTypeError",
    "axioms",
    "controllable",
    "equiv",
    "normalize",
    "simulate",
    "window_compare",
]


def normalize(term, field="q"):
    """Canonical corelation as {"m", "n", "kernel_rep"}."""
    return json.loads(_flowcat.normalize_json(term, field))


def controllable(term, field="q"):
    return json.loads(_flowcat.controllable_json(term, field))


def simulate(term, init=(), u=(), v=(), steps=0, backward=False, field="q"):
    """Runs the step relation. u and v hold one list per tick (None = unknown).

    Returns the trace dict, or None when the given values are inconsistent.
    """
    return json.loads(
        _flowcat.simulate_json(term, field, list(init), [None if t is None else list(t) for t in u],
                               [None if t is None else list(t) for t in v], steps, backward))


def window_compare(term, length=6, field="q"):
    """(operational_dim, denotational_dim, equal) for windows of the given length."""
    return _flowcat.window_dims(term, length, field)
