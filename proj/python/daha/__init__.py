"""Exact computations in the regularized double affine Hecke algebra.

Documents are plain dicts in the JSON formats of docs/formats.md.
"""

import json

from . import _core
from ._core import (
    CapacityError,
    ConfigurationError,
    DahaError,
    DomainError,
    ExpansionDomainError,
    ParseError,
    RepresentationError,
)


def _dump(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def root_datum(label):
    return json.loads(_core.root_datum(label))


def weyl_ball(label, radius):
    return [json.loads(w) for w in _core.weyl_ball(label, radius)]


def multiply(a, b):
    return json.loads(_core.multiply(_dump(a), _dump(b)))


def add(a, b):
    return json.loads(_core.add(_dump(a), _dump(b)))


def check_membership(element, config="cherednik"):
    return json.loads(_core.check_membership(_dump(element), config))


def hecke_check(element):
    return json.loads(_core.hecke_check(_dump(element)))


def tau(label, i):
    return json.loads(_core.tau(label, i))


def tau_word(label, word):
    return json.loads(_core.tau_word(label, list(word)))


def hecke_T(label, i):
    return json.loads(_core.hecke_T(label, i))


def rho_shift(element):
    return json.loads(_core.rho_shift(_dump(element)))


def c_function(label, word):
    return json.loads(_core.c_function(label, list(word)))


def verify_relations(label, suite="bernstein"):
    """List of (relation, holds) pairs."""
    return _core.verify_relations(label, suite)


def rank1_oracle(q=2, depth=5, s=1):
    """Point count and closed form as fractions.Fraction values."""
    from fractions import Fraction

    oracle, closed = _core.rank1_oracle(q, depth, s)
    return Fraction(oracle), Fraction(closed)


def mellin_transform(fn):
    return json.loads(_core.mellin_transform(_dump(fn)))


def mellin_inverse(images):
    return json.loads(_core.mellin_inverse(_dump(images)))


def cone_expand(f, label, word=(), order=8):
    return json.loads(_core.cone_expand(_dump(f), label, list(word), order))


def cone_sum(series):
    return json.loads(_core.cone_sum(_dump(series)))


def run_suite(seed=0, criteria=()):
    return json.loads(_core.run_suite(seed, list(criteria)))


fixture_dir = _core.fixture_dir
