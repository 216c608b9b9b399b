"""Exact graded and local invariants of hypersurfaces.

Thin wrapper over the compiled ``_core`` module: every function forwards to
the same engine as the ``hessalg`` command line, asks for json output, and
returns it parsed.  Bad configuration raises ``ValueError``; a computation
that fails (parse error, uncertified bound, degenerate input) raises
``RuntimeError``.  Both carry the engine's error object as the message.
"""

import json as _json

from hessalg import _core

__all__ = [
    "milnor",
    "series",
    "chi",
    "thresholds",
    "count_wh",
    "reconcile",
    "strata",
    "check",
]


def milnor(source, vars=None, m_max=0):
    """Hilbert function of the quotient by the partial derivatives."""
    return _json.loads(_core.milnor(source, list(vars or []), m_max))


def series(source, k, vars=None, m_max=0):
    """Hilbert function of the order-k quotient."""
    return _json.loads(_core.series(source, k, list(vars or []), m_max))


def chi(source="", vars=None, ade="", jet_bound=0, with_mu=False):
    """Local invariant ladder of a germ, explicit or by catalog name."""
    return _json.loads(_core.chi(source, list(vars or []), ade, jet_bound, with_mu))


def thresholds(source, vars=None, m_max=0):
    """Coincidence and stability degrees with the per-order bounds."""
    return _json.loads(_core.thresholds(source, list(vars or []), m_max))


def count_wh(source, vars=None, m_eval=None):
    """Number of weighted homogeneous singular points."""
    return _json.loads(_core.count_wh(source, list(vars or []), m_eval))


def reconcile(source, germs, mults, germ_vars=None, vars=None, m_max=0):
    """Global stable values against multiplicity-weighted local invariants."""
    return _json.loads(
        _core.reconcile(source, list(germs), list(mults), list(germ_vars or []),
                        list(vars or []), m_max)
    )


def strata(source, params, ks, compare_ks=None, vars=None, m_max=0, seed=1,
           generic_count=0, assignments_csv=""):
    """Series of a parameterized family, grouped into strata with their order diagram."""
    return _json.loads(
        _core.strata(source, list(params), list(ks), list(compare_ks or []),
                     list(vars or []), m_max, seed, generic_count, assignments_csv)
    )


def check(only=""):
    """Run the built-in fixture corpus, optionally restricted to an id prefix."""
    return _json.loads(_core.check(only))
