"""Torus-fixed-point data on Hilbert schemes of points in the plane.

Characters are Laurent polynomials in ``z1, z2``; a monomial ``x1^a x2^b`` of
``C[x1, x2]`` has weight ``z1^-a z2^-b``, so the tangent space at the origin
is ``z1 + z2``.  A character term ``z1^a z2^b`` contributes the equivariant
weight ``a*t1 + b*t2`` (plus ``m`` when the mass twist is on).
"""

from __future__ import annotations

from collections import Counter
from math import gcd

from sympy.polys.domains import QQ

from .algebra import (
    FIELD, RING, Laurent, QSeries, char_dual, laurent_extract, m, qseries_exp_log_pow,
    t1, t2, z1, z2,
)
from .partitions import Partition, arm, enumerate_partitions, leg


class ZeroWeightError(ZeroDivisionError):
    """Division by an Euler class that contains a zero weight."""


def ideal_character(mu):
    """[I_mu] = sum_i z1^-mu_i z2^(1-i) / (1 - z1^-1), including the row tail."""
    mu = Partition(mu)
    ell = mu.length
    rows = sum((z1 ** -p * z2 ** (1 - i) for i, p in enumerate(mu, 1)), FIELD.zero)
    tail = z2 ** -ell / (1 - 1 / z2)
    return (rows + tail) / (1 - 1 / z1)


def ideal_character_columns(lam):
    """The same module summed by columns: sum_j z2^-lam'_j z1^(1-j) / (1 - z2^-1)."""
    lt = Partition(lam).transpose()
    cols = sum((z2 ** -p * z1 ** (1 - j) for j, p in enumerate(lt, 1)), FIELD.zero)
    tail = z1 ** -lt.length / (1 - 1 / z1)
    return (cols + tail) / (1 - 1 / z2)


STRUCTURE_SHEAF = 1 / ((1 - 1 / z1) * (1 - 1 / z2))


def ext_character_ratfun(lam, mu) -> Laurent:
    """[E] = ([O][O]^v - [I_mu][I_lam]^v) / [O]^v, extracted as a Laurent polynomial."""
    o_dual = char_dual(STRUCTURE_SHEAF)
    chi = ideal_character(mu) * char_dual(ideal_character(lam)) / o_dual
    return laurent_extract(STRUCTURE_SHEAF - chi)


def ext_character_hooks(lam, mu) -> Laurent:
    """Hook-length form of the Ext character at the fixed pair (I_lam, I_mu)."""
    lam, mu = Partition(lam), Partition(mu)
    monos = [(-arm(mu, b), leg(lam, b) + 1) for b in mu.boxes()]
    monos += [(arm(lam, b) + 1, -leg(mu, b)) for b in lam.boxes()]
    return Laurent.from_monomials(monos)


def ext_character_hooks_swapped(lam, mu) -> Laurent:
    """Hook form with the two summation ranges interchanged (same character)."""
    lam, mu = Partition(lam), Partition(mu)
    monos = [(-arm(mu, b), leg(lam, b) + 1) for b in lam.boxes()]
    monos += [(arm(lam, b) + 1, -leg(mu, b)) for b in mu.boxes()]
    return Laurent.from_monomials(monos)


ext_character = ext_character_hooks


def serre_dual(c: Laurent) -> Laurent:
    """z1 z2 times the dual character."""
    return c.dual() * Laurent({(1, 1): 1})


class WeightProduct:
    """Product of integer linear forms ``cm*m + c1*t1 + c2*t2``."""

    __slots__ = ("factors",)

    def __init__(self, factors=()):
        self.factors = tuple(sorted(tuple(int(x) for x in f) for f in factors))

    @property
    def has_zero(self) -> bool:
        return (0, 0, 0) in self.factors

    @property
    def degree(self) -> int:
        return len(self.factors)

    def value(self):
        out = FIELD.one
        for cm, c1, c2 in self.factors:
            out *= cm * m + c1 * t1 + c2 * t2
        return out

    def require_nonzero(self):
        if self.has_zero:
            raise ZeroWeightError(f"Euler class has a zero weight: {self.factors}")
        return self

    def __truediv__(self, other):
        if isinstance(other, WeightProduct):
            other.require_nonzero()
            return self.value() / other.value()
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, WeightProduct) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def to_json(self):
        return [{"m": a, "t1": b, "t2": c} for a, b, c in self.factors]

    @classmethod
    def from_json(cls, data):
        return cls((d["m"], d["t1"], d["t2"]) for d in data)

    def __repr__(self):
        return f"WeightProduct({list(self.factors)})"


def euler_class(c: Laurent, mass_on: bool = True) -> WeightProduct:
    if not c.nonnegative():
        raise ValueError(f"Euler class needs nonnegative multiplicities: {c}")
    mass = 1 if mass_on else 0
    factors = []
    for (a, b), k in c.items():
        factors += [(mass, a, b)] * k
    return WeightProduct(factors)


def tangent_weights(lam) -> WeightProduct:
    w = euler_class(ext_character_hooks(lam, lam), mass_on=False)
    if w.has_zero:
        raise AssertionError(f"zero tangent weight at {Partition(lam)}")
    return w


def nekrasov_term(lam):
    """Mass-twisted Euler class over the tangent Euler class at one fixed point."""
    return euler_class(ext_character(lam, lam), True) / tangent_weights(lam)


def _primitive(f):
    g = gcd(*f)
    f = tuple(x // g for x in f)
    lead = next(x for x in f if x)
    if lead < 0:
        return tuple(-x for x in f), -g
    return f, g


def _split(w: WeightProduct):
    """Scalar and primitive-factor multiset of a weight product."""
    scalar, factors = 1, Counter()
    for f in w.factors:
        p, c = _primitive(f)
        scalar *= c
        factors[p] += 1
    return scalar, factors


def _form(f):
    return f[0] * m + f[1] * t1 + f[2] * t2


def sum_over_fixed_points(n: int, numerator=None, denominator=tangent_weights):
    """Sum over |lam| = n of numerator(lam) / denominator(lam).

    Denominators are merged into one factored common denominator, so a
    single rational-function normalization happens per degree.
    """
    if numerator is None:
        numerator = lambda lam: euler_class(ext_character(lam, lam), True)  # noqa: E731
    items = []
    lcm = Counter()
    for lam in enumerate_partitions(n):
        scalar, fac = _split(denominator(lam).require_nonzero())
        items.append((numerator(lam), scalar, fac))
        lcm |= fac
    num = RING.zero
    for w, scalar, fac in items:
        cofactor = RING.one
        for f, k in (lcm - fac).items():
            cofactor *= _form(f).numer ** k
        num += w.value().numer * cofactor * QQ(1, scalar)
    den = RING.one
    for f, k in lcm.items():
        den *= _form(f).numer ** k
    return FIELD(num) / FIELD(den)


def nekrasov_sum(order: int) -> QSeries:
    """Fixed-point sum of mass-twisted over tangent Euler classes, to q^order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return QSeries([sum_over_fixed_points(n) for n in range(order + 1)], order)


def nekrasov_exponent():
    """(L, K - L) - e(C^2) with the intersection number computed by localization."""
    return m * (-t1 - t2 - m) / (t1 * t2) - 1


def euler_function(order: int) -> QSeries:
    """prod_{n >= 1} (1 - q^n) truncated at q^order."""
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for n in range(1, order + 1):
        for k in range(order, n - 1, -1):
            coeffs[k] -= coeffs[k - n]
    return QSeries(coeffs, order)


def nekrasov_product(order: int) -> QSeries:
    if order < 0:
        raise ValueError("order must be nonnegative")
    return qseries_exp_log_pow(euler_function(order), nekrasov_exponent())
