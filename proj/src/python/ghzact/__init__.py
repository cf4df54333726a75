"""Exact checks for GHZ-fidelity activation.

Matrices are nested lists of :class:`fractions.Fraction`; reports are dicts
with keys ``check``, ``params``, ``status``, ``details`` and ``version``.
"""

import json
from fractions import Fraction

import numpy as np

from . import _core

__version__ = _core.__version__

__all__ = [
    "catalog_names",
    "catalog_state",
    "delta_closed",
    "delta_coefficients",
    "delta_protocol",
    "ghz_projector",
    "is_psd",
    "seesaw",
    "verify",
    "witness_value",
]


def _to_text(m):
    return [[str(Fraction(x)) for x in row] for row in m]


def _from_text(m):
    return [[Fraction(x) for x in row] for row in m]


def catalog_names():
    return list(_core.catalog_names())


def catalog_state(name, n):
    return _from_text(_core.catalog_state(name, n))


def ghz_projector(n):
    return _from_text(_core.ghz_projector(n))


def delta_closed(rho, n):
    return _from_text(_core.delta_closed(_to_text(rho), n))


def delta_protocol(rho, n):
    return _from_text(_core.delta_protocol(_to_text(rho), n))


def delta_coefficients(rho, n):
    return [Fraction(q) for q in _core.delta_coefficients(_to_text(rho), n)]


def is_psd(a):
    return _core.is_psd(_to_text(a))


def witness_value(rho, sigma, h_dims, lam):
    """Returns (tr(σᵀW), tr[ρ(σᵀ⊗(λ𝕀−Φ))], premise_unrefuted)."""
    value, condition, valid = _core.witness_value(_to_text(rho), _to_text(sigma), list(h_dims), str(Fraction(lam)))
    return Fraction(value), Fraction(condition), valid


def seesaw(rho, dims=None, iters=50, restarts=8, seed=0):
    """Floating-point lower bound on E; never the exact value."""
    rho = np.asarray(rho, dtype=float)
    if dims is None:
        n = int(rho.shape[0]).bit_length() - 1
        dims = [2] * n
    return _core.seesaw(rho, list(dims), iters, restarts, seed)


_CHECKS = {
    "depolarization": lambda n=2, trials=25, seed=1: _core.report_depolarization(n, trials, seed),
    "ppt": lambda n=2, trials=50, seed=1: _core.report_ppt(n, trials, seed),
    "jamiolkowski": lambda n=2: _core.report_jamiolkowski(n),
    "lemma1": lambda n=3, lam="3/4": _core.report_lemma1(n, str(Fraction(lam))),
    "cone": lambda n=3: _core.report_cone(n),
    "filter-identity": lambda n=2, trials=20, z=10, seed=1: _core.report_filter_identity(n, trials, z, seed),
    "witness-consistency": lambda n=2, trials=20, seed=1: _core.report_witness_consistency(n, trials, seed),
    "shifts": lambda: _core.report_shifts(),
    "dominance": lambda n=2, trials=10, seed=1: _core.report_dominance(n, trials, seed),
}


def verify(check, **kwargs):
    """Runs a named check; `depolarization` returns a list of reports."""
    try:
        run = _CHECKS[check]
    except KeyError:
        raise ValueError(f"unknown check {check!r}; choose from {sorted(_CHECKS)}") from None
    return json.loads(run(**kwargs))
