"""Symmetric functions in the power-sum basis.

A :class:`SymFunc` is a finite combination of ``p_lam`` with rational-function
coefficients.  The Jack pairing is ``<p_lam, p_mu> = delta z_lam theta^-l(lam)``,
under which multiplication by ``p_k`` has adjoint ``(k/theta) d/dp_k``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .algebra import FIELD, m as M, ratfun, ratfun_equal, substitute, theta
from .cache import default_cache
from .partitions import (
    Partition, arm, enumerate_partitions, leg, partitions_upto, remove_parts, union, z_factor,
)


class SymFunc:
    """Finite linear combination of power-sum monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for lam, c in dict(terms or {}).items():
            c = ratfun(c)
            if c:
                out[Partition(lam)] = c
        self.terms = out

    @classmethod
    def p(cls, *parts, coeff=1):
        return cls({Partition(sorted(parts, reverse=True)): coeff})

    @classmethod
    def one(cls):
        return cls({Partition(): 1})

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, lam):
        return self.terms.get(Partition(lam), FIELD.zero)

    def degree_part(self, d: int) -> "SymFunc":
        return SymFunc({lam: c for lam, c in self.terms.items() if lam.size == d})

    def degrees(self):
        return sorted({lam.size for lam in self.terms})

    def truncate(self, cap: int) -> "SymFunc":
        return SymFunc({lam: c for lam, c in self.terms.items() if lam.size <= cap})

    def __add__(self, other):
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, FIELD.zero) + c
        return SymFunc(out)

    def __neg__(self):
        return SymFunc({lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        c = ratfun(c)
        return SymFunc({lam: c * v for lam, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            return self.scale(other)
        out = {}
        for a, u in self.terms.items():
            for b, v in other.terms.items():
                k = union(a, b)
                out[k] = out.get(k, FIELD.zero) + u * v
        return SymFunc(out)

    def __rmul__(self, other):
        return self.scale(other)

    def map_coeffs(self, fn) -> "SymFunc":
        return SymFunc({lam: fn(c) for lam, c in self.terms.items()})

    def subs(self, values: dict) -> "SymFunc":
        return self.map_coeffs(lambda c: substitute(c, values))

    def scale_variables(self, c) -> "SymFunc":
        """Apply p_i -> c * p_i."""
        c = ratfun(c)
        return SymFunc({lam: v * c ** lam.length for lam, v in self.terms.items()})

    def equals(self, other) -> bool:
        keys = set(self.terms) | set(other.terms)
        return all(ratfun_equal(self.coeff(k), other.coeff(k)) for k in keys)

    def __eq__(self, other):
        return isinstance(other, SymFunc) and self.equals(other)

    __hash__ = None

    def __repr__(self):
        return format_symfunc(self)


def _mono_str(lam):
    if not lam:
        return "1"
    out = []
    for k, e in sorted(lam.multiplicities().items()):
        out.append(f"p{k}" if e == 1 else f"p{k}^{e}")
    return "*".join(out)


def _plain_number(text):
    return text.replace("/", "", 1).lstrip("-").isdigit()


def format_symfunc(f: SymFunc, unicode=True) -> str:
    """Render ``p1^2 + (1/θ)·p2`` style text, longest monomials first within a degree."""
    if not f.terms:
        return "0"
    pieces = []
    keys = sorted(f.terms, key=lambda lam: (lam.size, -lam.length, lam))
    for lam in keys:
        c = f.terms[lam]
        cs = str(c)
        if unicode:
            cs = cs.replace("theta", "θ")
        mono = _mono_str(lam)
        neg = False
        if cs.startswith("-") and cs[1:].replace("/", "").isdigit():
            neg, cs = True, cs[1:]
        if cs == "1":
            body = mono
        elif _plain_number(cs):
            body = cs if mono == "1" else (f"{cs}·{mono}" if unicode else f"{cs}*{mono}")
        elif mono == "1":
            body = cs
        else:
            body = f"({cs})·{mono}" if unicode else f"({cs})*{mono}"
        pieces.append((neg, body))
    text = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        text += (" - " if neg else " + ") + body
    return text


# --------------------------------------------------------------------------
# pairing and adjoints
# --------------------------------------------------------------------------

def p_norm(lam, scale=None):
    """<p_lam, p_lam> for the pairing with <p_k, p_k> = k * scale."""
    lam = Partition(lam)
    s = (1 / theta) if scale is None else ratfun(scale)
    z = z_factor(lam)
    return ratfun(z) * s ** lam.length


def jack_inner(f: SymFunc, g: SymFunc):
    """Jack pairing of two symmetric functions."""
    out = FIELD.zero
    small, big = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    for lam, c in small.terms.items():
        d = big.terms.get(lam)
        if d is not None:
            out += c * d * p_norm(lam)
    return out


def _diff(lam: Partition, rho: Partition):
    """Coefficient and remainder of prod_k d^{a_k}/dp_k^{a_k} applied to p_lam."""
    rest = remove_parts(lam, rho)
    if rest is None:
        return 0, None
    mlam = lam.multiplicities()
    c = 1
    for k, a in rho.multiplicities().items():
        n = mlam[k]
        for i in range(a):
            c *= n - i
    return c, rest


def apply_dual(f: SymFunc, g: SymFunc, scale=None) -> SymFunc:
    """Adjoint of multiplication by ``f``, applied to ``g``.

    The adjoint of ``p_k`` is ``k * scale * d/dp_k``; ``scale`` defaults to
    ``1/theta`` (the Jack pairing).
    """
    s = (1 / theta) if scale is None else ratfun(scale)
    out = {}
    for rho, a in f.terms.items():
        w = a
        for k in rho:
            w = w * k * s
        for lam, b in g.terms.items():
            c, rest = _diff(lam, rho)
            if c:
                out[rest] = out.get(rest, FIELD.zero) + w * b * c
    return SymFunc(out)


# --------------------------------------------------------------------------
# monomial symmetric functions
# --------------------------------------------------------------------------

def _count_fillings(rho, lam):
    """Coefficient of x^lam in p_rho: maps parts of rho -> rows with row sums lam."""

    @lru_cache(maxsize=None)
    def rec(idx, rem):
        if idx == len(rho):
            return int(not any(rem))
        total = 0
        r = rho[idx]
        for i, cap in enumerate(rem):
            if cap >= r:
                total += rec(idx + 1, rem[:i] + (cap - r,) + rem[i + 1:])
        return total

    return rec(0, tuple(lam))


@lru_cache(maxsize=None)
def _monomial_table(n: int):
    parts = enumerate_partitions(n)
    size = len(parts)
    # p_rho = sum_lam R[rho][lam] m_lam; invert R
    mat = [[Fraction(_count_fillings(rho, lam)) for lam in parts] + [Fraction(int(i == r)) for i in range(size)]
           for r, rho in enumerate(parts)]
    for col in range(size):
        piv = next(r for r in range(col, size) if mat[r][col])
        mat[col], mat[piv] = mat[piv], mat[col]
        pv = mat[col][col]
        mat[col] = [x / pv for x in mat[col]]
        for r in range(size):
            if r != col and mat[r][col]:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
    # row col of R^{-1} transposed: m_lam = sum_rho Rinv[lam][rho] p_rho
    inv = [row[size:] for row in mat]
    return {lam: {rho: inv[j][i] for i, rho in enumerate(parts) if inv[j][i]}
            for j, lam in enumerate(parts)}


def monomial_sym(lam) -> SymFunc:
    """m_lam in the power-sum basis."""
    lam = Partition(lam)
    return SymFunc(_monomial_table(lam.size)[lam])


# --------------------------------------------------------------------------
# Jack polynomials
# --------------------------------------------------------------------------

def dominance_order(n: int):
    """Default Gram-Schmidt order: increasing, i.e. reversed reverse-lex."""
    return list(reversed(enumerate_partitions(n)))


def _gram_schmidt(n: int, order):
    basis = {}
    norms = {}
    for mu in order:
        v = monomial_sym(mu)
        for nu, b in basis.items():
            c = jack_inner(monomial_sym(mu), b)
            if c:
                v = v - b.scale(c / norms[nu])
        basis[mu] = v
        norms[mu] = jack_inner(v, v)
    return basis


def jack_p_basis(n: int, order=None) -> dict:
    """Monic (m_mu-leading) Jack functions of degree n by Gram-Schmidt."""
    order = dominance_order(n) if order is None else [Partition(x) for x in order]
    return _gram_schmidt(n, order)


def _normalize(v: SymFunc, n: int) -> SymFunc:
    lead = v.coeff(Partition([1] * n))
    return v.scale(1 / lead)


def jack(mu, order=None, cache=None) -> SymFunc:
    """Integral-form Jack function J_mu, p_1^|mu| coefficient equal to 1.

    Results for the default pivot order are memoized in the Jack cache.
    """
    mu = Partition(mu)
    if order is not None:
        return _normalize(jack_p_basis(mu.size, order)[mu], mu.size)
    cache = default_cache() if cache is None else cache
    hit = cache.get(mu)
    if hit is not None:
        return SymFunc(hit)
    for nu, v in jack_p_basis(mu.size).items():
        cache.put_if_absent(nu, _normalize(v, mu.size).terms)
    return SymFunc(cache.get(mu))


def to_monomial_basis(f: SymFunc) -> dict:
    """Expand a homogeneous-by-degree SymFunc into monomial functions."""
    out = {}
    for rho, c in f.terms.items():
        for lam in enumerate_partitions(rho.size):
            k = _count_fillings(rho, lam)
            if k:
                out[lam] = out.get(lam, FIELD.zero) + c * k
    return {lam: c for lam, c in out.items() if c}


# --------------------------------------------------------------------------
# the operator E
# --------------------------------------------------------------------------

def e_operator_power(s, degree_cap: int) -> SymFunc:
    """E^s = exp(s * sum_n (-1)^(n-1) p_n / n), all degrees <= degree_cap.

    The coefficient of p_rho is s^l(rho) (-1)^(|rho|-l(rho)) / z_rho.
    """
    s = ratfun(s)
    out = {}
    for rho in partitions_upto(degree_cap):
        sign = -1 if (rho.size - rho.length) % 2 else 1
        out[rho] = s ** rho.length * ratfun(Fraction(sign) / z_factor(rho))
    return SymFunc(out)


def elementary(d: int) -> SymFunc:
    """e_d via Newton's identities, d * e_d = sum_i (-1)^(i-1) e_(d-i) p_i."""
    es = [SymFunc.one()]
    for k in range(1, d + 1):
        acc = SymFunc()
        for i in range(1, k + 1):
            term = es[k - i] * SymFunc.p(i)
            acc = acc + (term if i % 2 else -term)
        es.append(acc.scale(ratfun(Fraction(1, k))))
    return es[d]


def pieri_lhs(lam, mu):
    """<E^m (E*)^(theta-m-1) J_lam, J_mu> with m, theta symbolic."""
    lam, mu = Partition(lam), Partition(mu)
    s = theta - M - 1
    h = apply_dual(e_operator_power(s, lam.size), jack(lam))
    em = e_operator_power(M, mu.size)
    jm = jack(mu)
    total = FIELD.zero
    for d in h.degrees():
        if d > mu.size:
            continue
        total += jack_inner(h.degree_part(d) * em.degree_part(mu.size - d), jm)
    return total


def pieri_rhs(lam, mu, swap_ranges=False):
    """Product side of the Jack Pieri-type identity.

    ``swap_ranges`` takes the first product over boxes of mu and the second
    over boxes of lam, which gives the same value.
    """
    lam, mu = Partition(lam), Partition(mu)
    first = mu if swap_ranges else lam
    second = lam if swap_ranges else mu
    val = ratfun((-1) ** lam.size) / theta ** (lam.size + mu.size)
    for b in first.boxes():
        val *= M + arm(lam, b) + 1 + theta * leg(mu, b)
    for b in second.boxes():
        val *= M - arm(mu, b) - theta * (leg(lam, b) + 1)
    return val


def base_case_closed_form(shape: str, size: int, with_p1: bool):
    """Closed forms of (E^m, J) and (E^m p_1, J) for a row (l) or column (1^k)."""
    if size < 1:
        raise ValueError("size must be >= 1")
    if shape == "row":
        factor = lambda i: M - i  # noqa: E731
    elif shape == "column":
        factor = lambda i: M + i * theta  # noqa: E731
    else:
        raise ValueError(f"shape must be 'row' or 'column', not {shape!r}")
    top = size - 1 - int(with_p1)
    val = ratfun(size if with_p1 else 1) / theta ** size
    for i in range(top + 1):
        val *= factor(i)
    return val


def base_case_brute_force(shape: str, size: int, with_p1: bool):
    mu = Partition([size]) if shape == "row" else Partition([1] * size)
    f = e_operator_power(M, size).degree_part(size - int(with_p1))
    if with_p1:
        f = f * SymFunc.p(1)
    return jack_inner(f, jack(mu))


# --------------------------------------------------------------------------
# Schur oracle for the theta = 1 degeneration
# --------------------------------------------------------------------------

def complete(d: int) -> SymFunc:
    if d < 0:
        return SymFunc()
    return SymFunc({rho: ratfun(1 / z_factor(rho)) for rho in enumerate_partitions(d)})


def schur_jacobi_trudi(lam) -> SymFunc:
    """s_lam = det(h_(lam_i - i + j)) expanded over permutations."""
    lam = Partition(lam)
    n = lam.length
    if n == 0:
        return SymFunc.one()
    hs = {}
    total = SymFunc()
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = SymFunc.one()
        for i in range(n):
            k = lam[i] - i + perm[i]
            if k not in hs:
                hs[k] = complete(k)
            term = term * hs[k]
            if not term:
                break
        if term:
            total = total + (term if sign > 0 else -term)
    return total


def hook_product(lam) -> int:
    out = 1
    for b in Partition(lam).boxes():
        out *= arm(lam, b) + leg(lam, b) + 1
    return out


__all__ = [
    "SymFunc", "format_symfunc", "p_norm", "jack_inner", "apply_dual", "monomial_sym",
    "dominance_order", "jack_p_basis", "jack", "to_monomial_basis", "e_operator_power",
    "elementary", "pieri_lhs", "pieri_rhs", "base_case_closed_form", "base_case_brute_force",
    "complete", "schur_jacobi_trudi", "hook_product",
]
