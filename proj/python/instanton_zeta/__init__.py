"""Exact q-series, Euler-number tables and numeric checks for rank 2 sheaf moduli on a rational elliptic surface.

Rational values are returned as fractions.Fraction; numeric values as decimal
strings at the requested precision.
"""

from fractions import Fraction

from . import _core
from ._core import ConvergenceError, DomainError, Error, NotInvertibleError, PoleError, TruncationError

__all__ = [
    "Error",
    "TruncationError",
    "DomainError",
    "PoleError",
    "ConvergenceError",
    "NotInvertibleError",
    "Series",
    "suite_names",
    "verify",
    "series",
    "ztilde",
    "euler_table",
    "evaluate",
    "sduality",
]


class Series:
    """A truncated q-series: exponent -> coefficient, known up to `trunc`."""

    def __init__(self, raw, label=None):
        self.trunc = Fraction(raw["trunc"])
        self.terms = {Fraction(e): Fraction(c) for e, c in raw["terms"]}
        self.label = label

    def __getitem__(self, exponent):
        e = Fraction(exponent)
        if e > self.trunc:
            raise TruncationError(f"q^{e} is beyond the truncation q^{self.trunc}")
        return self.terms.get(e, Fraction(0))

    def __repr__(self):
        head = " + ".join(f"({c})q^{e}" for e, c in list(self.terms.items())[:4])
        return f"Series({head} + ... O(q^>{self.trunc}))"


def _q(x):
    return str(Fraction(x))


def suite_names():
    return list(_core.suite_names())


def verify(suite="all", order=20, oracle_order=None):
    """Run one suite or all of them; returns a list of report dicts."""
    names = suite_names() if suite == "all" else [suite]
    oo = min(Fraction(6), Fraction(order)) if oracle_order is None else oracle_order
    return [_core.run_suite(n, _q(order), _q(oo)) for n in names]


def series(name, trunc=20, scaling=1):
    return Series(_core.series(name, _q(trunc), _q(scaling)))


def ztilde(c1, trunc=20):
    raw = _core.ztilde(c1, _q(trunc))
    return Series(raw, raw["label"])


def euler_table(cls, max_delta, order=20):
    rows = _core.euler_table(cls, _q(max_delta), _q(order))
    for r in rows:
        r["delta"] = Fraction(r["delta"])
        r["euler"] = Fraction(r["euler"])
    return rows


def evaluate(name, tau, digits=40, e2="hat"):
    """Numeric value at tau as a (real, imaginary) pair of decimal strings."""
    return _core.evaluate(name, tau, digits, e2)


def sduality(tau, digits=40, e2="hat"):
    return _core.sduality(tau, digits, e2)
