"""Fock space of Hilb(C^2) and the vertex operator Gamma.

Fock vectors are :class:`SymFunc` objects: ``p_n`` is the Nakajima creation
operator ``alpha_{-n}(1)``.  The geometric pairing is

    <p_lam, p_mu> = delta (-1)^(|lam|-l(lam)) z_lam (t1 t2)^(-l(lam)),

so the adjoint of ``p_n`` is ``(-1)^(n-1) (n/(t1 t2)) d/dp_n``.  The sign is
the one for which fixed-point classes are orthogonal with norms equal to the
tangent Euler classes.

The formal variable z is only a grading: a :class:`ZGraded` maps each power
of z to its coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb

from .algebra import FIELD, QSeries, m, ratfun, t1, t2
from .partitions import Partition, enumerate_partitions, partitions_upto, z_factor
from .symfunc import SymFunc, jack

EQUIV = t1 * t2
CANONICAL = -t1 - t2


class ZGraded(dict):
    """Mapping z-power -> coefficient (SymFunc or RatFun)."""

    def add(self, power, value):
        if power in self:
            self[power] = self[power] + value
        else:
            self[power] = value

    def support(self):
        return sorted(k for k, v in self.items() if v)

    def at(self, power):
        return self.get(power, FIELD.zero)


def p_sign(lam) -> int:
    lam = Partition(lam)
    return -1 if (lam.size - lam.length) % 2 else 1


def geom_norm(lam):
    lam = Partition(lam)
    return ratfun(p_sign(lam) * z_factor(lam)) / EQUIV ** lam.length


def geom_pairing(f: SymFunc, g: SymFunc):
    out = FIELD.zero
    for lam, c in f.terms.items():
        d = g.terms.get(lam)
        if d is not None:
            out += c * d * geom_norm(lam)
    return out


def nakajima_adjoint(n: int, g: SymFunc) -> SymFunc:
    """Adjoint of multiplication by p_n under the geometric pairing."""
    c = ratfun((-1) ** (n - 1) * n) / EQUIV
    out = {}
    for lam, v in g.terms.items():
        k = lam.count(n)
        if k:
            rest = list(lam)
            rest.remove(n)
            out[Partition(rest)] = out.get(Partition(rest), FIELD.zero) + v * c * k
    return SymFunc(out)


def fixed_point_class(lam) -> SymFunc:
    """t2^|lam| J_lam with theta = -t2/t1 and p_i -> t1 p_i."""
    lam = Partition(lam)
    j = jack(lam).subs({"theta": -t2 / t1})
    return j.scale_variables(t1).scale(t2 ** lam.size)


def creation_leg(v: SymFunc, degree_cap: int, mass=m) -> ZGraded:
    """exp(-sum (-z)^n/n * mass * p_n) v, graded by the z-power added."""
    mass = ratfun(mass)
    out = ZGraded()
    for lam, c in v.terms.items():
        for rho in partitions_upto(degree_cap - lam.size):
            sign = -1 if (rho.size - rho.length) % 2 else 1
            coeff = c * mass ** rho.length * ratfun(Fraction(sign) / z_factor(rho))
            out.add(rho.size, SymFunc({Partition(sorted(lam + rho, reverse=True)): coeff}))
    return out


def annihilation_leg(v: SymFunc, mass=m) -> ZGraded:
    """exp(sum z^-n/n * alpha*_{-n}(L - K)) v.

    alpha_{-n}(L - K) is multiplication by (mass - c1(K)) p_n, so the
    exponent is the derivation sum_n z^-n (-1)^(n-1) (mass + t1 + t2)/(t1 t2) d/dp_n,
    which shifts p_n by that constant.
    """
    shift = (ratfun(mass) - CANONICAL) / EQUIV
    out = ZGraded()
    for lam, c in v.terms.items():
        mult = sorted(lam.multiplicities().items())
        for ks in product(*(range(k + 1) for _, k in mult)):
            coeff = c
            kept = []
            removed = 0
            for (n, k), r in zip(mult, ks):
                coeff = coeff * comb(k, r) * ((-1) ** (n - 1) * shift) ** r
                kept += [n] * (k - r)
                removed += n * r
            out.add(-removed, SymFunc({Partition(sorted(kept, reverse=True)): coeff}))
    return out


def gamma_apply(v: SymFunc, direction: str = "both", degree_cap: int | None = None, mass=m) -> ZGraded:
    """Gamma (or one of its two exponential legs) applied to a Fock vector.

    ``degree_cap`` bounds the degree of the output; it defaults to the
    highest degree of ``v``.
    """
    if degree_cap is None:
        degree_cap = max(v.degrees(), default=0)
    if direction == "creation":
        return creation_leg(v, degree_cap, mass)
    if direction == "annihilation":
        ann = annihilation_leg(v, mass)
        return ZGraded({k: x.truncate(degree_cap) for k, x in ann.items()})
    if direction != "both":
        raise ValueError(f"unknown direction {direction!r}")
    out = ZGraded()
    for zpow, w in annihilation_leg(v, mass).items():
        for zc, x in creation_leg(w, degree_cap, mass).items():
            out.add(zpow + zc, x)
    return out


def gamma_matrix_element(f: SymFunc, g: SymFunc, mass=m) -> ZGraded:
    """<Gamma f, g> as a z-graded rational function."""
    cap = max(g.degrees(), default=0)
    out = ZGraded()
    for zpow, w in gamma_apply(f, "both", cap, mass).items():
        val = geom_pairing(w, g)
        if val:
            out.add(zpow, val)
    return out


def w_matrix_element(lam, mu, mass=m) -> ZGraded:
    """<Gamma f_lam, f_mu> between fixed-point classes."""
    return gamma_matrix_element(fixed_point_class(lam), fixed_point_class(mu), mass)


def gamma_trace_coefficient(n: int, basis: str = "power"):
    """Coefficient of q^n in the trace of Gamma at z^0.

    ``basis`` is ``"power"`` (p_lam) or ``"fixed"`` (fixed-point classes);
    both are orthogonal, so the diagonal sum is the trace.
    """
    if basis not in ("power", "fixed"):
        raise ValueError(f"unknown basis {basis!r}")
    total = FIELD.zero
    for lam in enumerate_partitions(n):
        b = SymFunc({lam: 1}) if basis == "power" else fixed_point_class(lam)
        total += gamma_matrix_element(b, b).at(0) / geom_pairing(b, b)
    return total


def gamma_trace(order: int, basis: str = "power") -> QSeries:
    if order < 0:
        raise ValueError("order must be nonnegative")
    return QSeries([gamma_trace_coefficient(n, basis) for n in range(order + 1)], order)


def serre_partner(lam, mu):
    """(-1)^(|lam|+|mu|) <Gamma f_mu, f_lam> with the mass replaced by c1(K) - m."""
    lam, mu = Partition(lam), Partition(mu)
    w = w_matrix_element(mu, lam, mass=CANONICAL - m)
    sign = (-1) ** (lam.size + mu.size)
    return ZGraded({-k: v * sign for k, v in w.items()})


__all__ = [
    "ZGraded", "EQUIV", "CANONICAL", "geom_norm", "geom_pairing", "nakajima_adjoint",
    "fixed_point_class", "creation_leg", "annihilation_leg", "gamma_apply",
    "gamma_matrix_element", "w_matrix_element", "gamma_trace_coefficient", "gamma_trace", "serre_partner",
]
