"""Exact counts, bijections and uniform sampling for trees embedded in the integers."""

import json
from fractions import Fraction

from ._core import BudgetExceeded, EmbtreeError, HypothesisViolation, ParseError
from . import _core

__all__ = [
    "BudgetExceeded", "EmbtreeError", "HypothesisViolation", "ParseError",
    "count", "count_by", "oracle_count", "sample", "law", "phi_or_psi", "inverse", "set_max_steps",
]


def _steps(steps):
    return steps if isinstance(steps, str) else ",".join(str(s) for s in steps)


def count(kind, profile, steps="-1,1"):
    """Closed-form number of binary, cayley or sary trees with this vertical profile."""
    return int(_core.count(kind, _steps(steps), profile))


def count_by(kind, dist, by="out", steps="-1,1"):
    """Closed-form count for a type distribution given as a dict or JSON string."""
    text = dist if isinstance(dist, str) else json.dumps(dist)
    return int(_core.count_by(kind, _steps(steps), text, by))


def oracle_count(kind, profile, steps="-1,1"):
    """Brute-force count by exhaustive enumeration."""
    return int(_core.oracle_count(kind, _steps(steps), profile))


def sample(kind, profile, steps="-1,1", seed=1, n=1):
    """n uniform random cayley trees, sary trees or functions, as dicts."""
    return [json.loads(s) for s in _core.sample(kind, _steps(steps), profile, seed, n)]


def law(family, n, steps="-1,1"):
    """Exact law of the vertical profile over trees of size n: {profile: Fraction}."""
    d = json.loads(_core.law(family, n, _steps(steps)))
    total = int(d["total"])
    return {e["profile"]: Fraction(int(e["count"]), total) for e in d["law"]}


def phi_or_psi(function):
    """Run the bijection on a function dict; returns {'tree', 'trace', 'valid'}."""
    return json.loads(_core.bijection(json.dumps(function)))


def inverse(tree):
    """Marked tree dict back to its function dict."""
    return json.loads(_core.bijection_inverse(json.dumps(tree)))


def set_max_steps(steps):
    _core.set_max_steps(steps)
