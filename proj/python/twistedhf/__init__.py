"""Exact twisted Heegaard Floer computations for genus-one excision families.

Thin wrapper over the C++ core: each helper returns the parsed JSON report
that the command-line tool would print.
"""

import json

from . import _core

__all__ = [
    "run_family",
    "twist_knot",
    "whitehead",
    "borromean",
    "two_bridge",
    "snf",
    "complex_homology",
    "non_relatedness",
    "verify",
]


def run_family(spec_text, toml=True):
    return json.loads(_core.run_family(spec_text, toml))


def twist_knot(n, d="1"):
    return json.loads(_core.twist_knot(n, d))


def whitehead(n, d="1"):
    return json.loads(_core.whitehead(n, d))


def borromean(m, n, d="1"):
    return json.loads(_core.borromean(m, n, d))


def two_bridge(m, clasp, n, d="1"):
    return json.loads(_core.two_bridge(m, clasp, n, d))


def snf(matrix_doc):
    if not isinstance(matrix_doc, str):
        matrix_doc = json.dumps(matrix_doc)
    return json.loads(_core.snf(matrix_doc))


def complex_homology(complex_doc):
    if not isinstance(complex_doc, str):
        complex_doc = json.dumps(complex_doc)
    return json.loads(_core.complex_homology(complex_doc))


def non_relatedness(n, m):
    return json.loads(_core.non_relatedness(n, m))


def verify():
    return _core.verify()
