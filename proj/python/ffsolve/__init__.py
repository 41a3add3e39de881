"""Exact linear-system toolkit over commutative rings.

Thin wrappers over the compiled core: systems go in as the plain-text format
(see the README), reports come back as dicts.
"""

import json

try:
    from . import _core  # installed wheel layout
except ImportError:  # in-tree builds put the module next to the package
    import _core

__version__ = _core.__version__

count_formulas = _core.count_formulas
hadamard_bound = _core.hadamard_bound
modulus_count = _core.modulus_count
serialize = _core.serialize


def solve(text, alg="onepass", tableaux=False):
    """Solve one system; alg is dodgson|bareiss|fb|onepass|modular."""
    return json.loads(_core.solve_json(text, alg, tableaux))


def verify(text):
    """Run all applicable algorithms plus the determinant oracle."""
    return json.loads(_core.verify_json(text))


def verify_random(n, m=0, trials=100, seed=1):
    return json.loads(_core.verify_random_json(n, m, trials, seed))


def predict(n, m=0, ring="unit", r=0, p=1, l=1, tm=-1, td=-1, ta=-1, mbits=31):
    """Closed-form counts, predicted times, and ratio summaries."""
    return json.loads(_core.predict_json(n, m, ring, r, p, l, tm, td, ta, mbits))
