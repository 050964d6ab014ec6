"""Exact Chevalley-Eilenberg and relative Lie algebra cohomology.

Rationals are passed as strings, ints or Fractions and come back as Fractions.
"""

import json
from fractions import Fraction

try:
    from . import _koszul
except ImportError:  # build tree layout: the extension sits next to the package
    import _koszul

KoszulError = _koszul.KoszulError
LieAlgebra = _koszul.LieAlgebra
SubalgebraPair = _koszul.SubalgebraPair
builtin = _koszul.builtin
pair = _koszul.pair
direct_sum = _koszul.direct_sum
set_threads = _koszul.set_threads
betti = _koszul.betti
relative_betti = _koszul.relative_betti
ncz = _koszul.ncz
reductive = _koszul.reductive
direct_product_check = _koszul.direct_product_check

__all__ = [
    "KoszulError", "LieAlgebra", "SubalgebraPair", "builtin", "pair", "subalgebra", "direct_sum",
    "algebra_from_json", "set_threads", "betti", "relative_betti", "koszul", "ncz", "reductive",
    "classes", "direct_product_check", "functoriality", "trace_form", "pfaffian", "bracket",
]


def _q(x):
    return str(Fraction(x))


def _fractions(obj):
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except ValueError:
            return obj
    if isinstance(obj, list):
        return [_fractions(x) for x in obj]
    if isinstance(obj, dict):
        return {k: _fractions(v) for k, v in obj.items()}
    return obj


def algebra_from_json(data):
    return _koszul.algebra_from_json(data if isinstance(data, str) else json.dumps(data))


def subalgebra(g, vectors):
    return _koszul.subalgebra(g, [[_q(c) for c in v] for v in vectors])


def bracket(g, x, y):
    return [Fraction(c) for c in g.bracket([_q(c) for c in x], [_q(c) for c in y])]


def koszul(p, with_kernel=True):
    """Injectivity, Betti numbers, per-degree matrices and kernel forms of the induced map."""
    return _fractions(json.loads(_koszul.koszul_json(p, with_kernel)))


def classes(p):
    return _fractions(json.loads(_koszul.classes_json(p)))


def functoriality(morphism):
    return _koszul.functoriality(morphism if isinstance(morphism, str) else json.dumps(morphism))


def trace_form(n, k):
    return _fractions(json.loads(_koszul.trace_form_json(n, k)))


def pfaffian(rows):
    return Fraction(_koszul.pfaffian([[_q(c) for c in r] for r in rows]))
