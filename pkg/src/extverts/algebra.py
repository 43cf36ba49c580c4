"""Exact arithmetic kernel.

Rational functions live in a single sparse field over QQ whose generators
are the indeterminates ``t1, t2, m, theta, q, z1, z2``.  The field is backed
by sympy's sparse ``FracField``; this module adds the pieces the rest of the
package needs on top of it: exact equality, Laurent extraction in ``z1, z2``,
torus-character duality, truncated q-series and JSON serialization.
"""

from __future__ import annotations

from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.fields import field

__all__ = [
    "FIELD", "RING", "VARS", "t1", "t2", "m", "theta", "q", "z1", "z2",
    "RatFun", "MPoly", "Laurent", "QSeries",
    "AlgebraError", "NotLaurentError",
    "ratfun", "ratfun_arith", "ratfun_equal", "is_zero", "substitute",
    "laurent_extract", "char_dual", "qseries_exp_log_pow",
    "rational_to_str", "rational_from_str",
    "mpoly_to_json", "mpoly_from_json", "ratfun_to_json", "ratfun_from_json",
    "ratfun_to_str",
]

VARS = ("t1", "t2", "m", "theta", "q", "z1", "z2")
FIELD, t1, t2, m, theta, q, z1, z2 = field(",".join(VARS), QQ)
RING = FIELD.ring
_IZ1, _IZ2 = VARS.index("z1"), VARS.index("z2")

RatFun = type(FIELD.one)
MPoly = type(RING.one)


class AlgebraError(ArithmeticError):
    pass


class NotLaurentError(AlgebraError):
    """Raised when a rational function is not a Laurent polynomial in z1, z2."""

    def __init__(self, value, remainder):
        self.value = value
        self.remainder = remainder
        super().__init__(f"not a Laurent polynomial: {value} (remainder {remainder})")


def ratfun(x) -> RatFun:
    """Coerce ints, Fractions, "p/q" strings and polynomials into the field."""
    if isinstance(x, RatFun):
        return x
    if isinstance(x, MPoly):
        return FIELD(x)
    if isinstance(x, str):
        x = rational_from_str(x)
    if isinstance(x, Fraction):
        return FIELD(QQ(x.numerator, x.denominator))
    return FIELD(x)


def ratfun_arith(a, b, op: str) -> RatFun:
    a, b = ratfun(a), ratfun(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("rational function division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def is_zero(a) -> bool:
    return not ratfun(a).numer


def ratfun_equal(a, b) -> bool:
    # cross-multiplication keeps equality exact regardless of normal form
    a, b = ratfun(a), ratfun(b)
    return a.numer * b.denom == b.numer * a.denom


def substitute(a, values: dict) -> RatFun:
    """Substitute exact values (or field elements) for named indeterminates."""
    a = ratfun(a)
    if not values:
        return a
    gens = dict(zip(VARS, FIELD.gens))
    images = [ratfun(values[v]) if v in values else gens[v] for v in VARS]

    def ev(p):
        out = FIELD.zero
        for exps, c in p.terms():
            t = FIELD(c)
            for img, e in zip(images, exps):
                if e:
                    t *= img ** e
            out += t
        return out

    den = ev(a.denom)
    if not den:
        raise ZeroDivisionError(f"substitution {values} annihilates the denominator of {a}")
    return ev(a.numer) / den


# --------------------------------------------------------------------------
# Laurent polynomials in z1, z2 (torus characters)
# --------------------------------------------------------------------------

class Laurent:
    """Finite Laurent polynomial in z1, z2 with integer coefficients.

    Stored as a mapping ``(e1, e2) -> int`` with no zero entries.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for k, v in dict(terms or {}).items():
            v = int(v)
            if v:
                clean[(int(k[0]), int(k[1]))] = v
        self._terms = clean

    @classmethod
    def from_monomials(cls, exps):
        out = {}
        for e in exps:
            e = tuple(e)
            out[e] = out.get(e, 0) + 1
        return cls(out)

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def mass(self) -> int:
        return sum(self._terms.values())

    def nonnegative(self) -> bool:
        return all(v > 0 for v in self._terms.values())

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        return isinstance(other, Laurent) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return Laurent(out)

    def __neg__(self):
        return Laurent({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Laurent({k: v * other for k, v in self._terms.items()})
        out = {}
        for (a1, a2), u in self._terms.items():
            for (b1, b2), v in other._terms.items():
                k = (a1 + b1, a2 + b2)
                out[k] = out.get(k, 0) + u * v
        return Laurent(out)

    __rmul__ = __mul__

    def dual(self) -> "Laurent":
        return Laurent({(-a, -b): v for (a, b), v in self._terms.items()})

    def swap(self) -> "Laurent":
        return Laurent({(b, a): v for (a, b), v in self._terms.items()})

    def to_ratfun(self) -> RatFun:
        out = FIELD.zero
        for (a, b), v in self._terms.items():
            out += v * z1 ** a * z2 ** b
        return out

    def to_json(self):
        return [{"e1": a, "e2": b, "mult": v} for (a, b), v in self.items()]

    @classmethod
    def from_json(cls, data):
        return cls({(d["e1"], d["e2"]): d["mult"] for d in data})

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for (a, b), v in sorted(self._terms.items(), key=lambda kv: (-kv[0][0] - kv[0][1], kv[0])):
            mono = "*".join(
                f"{n}^{e}" if e != 1 else n for n, e in (("z1", a), ("z2", b)) if e
            ) or "1"
            if mono == "1":
                parts.append(str(v))
                continue
            coeff = "" if v == 1 else "-" if v == -1 else f"{v}*"
            parts.append(f"{coeff}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _z_only(p: MPoly) -> bool:
    return all(not any(e for i, e in enumerate(exps) if i not in (_IZ1, _IZ2))
               for exps in p.monoms())


def laurent_extract(r) -> Laurent:
    """Return ``r`` as a Laurent polynomial in z1, z2.

    ``r`` must be a rational function of z1, z2 alone whose reduced
    denominator is a monomial.  Anything else raises
    :class:`NotLaurentError` carrying the division remainder.
    """
    r = ratfun(r)
    num, den = r.numer, r.denom
    if not (_z_only(num) and _z_only(den)):
        raise NotLaurentError(r, num)
    if len(den.terms()) != 1:
        _, rem = num.div(den)
        raise NotLaurentError(r, rem)
    (dexps, dc), = den.terms()
    out = {}
    for exps, c in num.terms():
        c = Fraction(int(c.numerator), int(c.denominator)) / Fraction(int(dc.numerator), int(dc.denominator))
        if c.denominator != 1:
            raise NotLaurentError(r, num)
        out[(exps[_IZ1] - dexps[_IZ1], exps[_IZ2] - dexps[_IZ2])] = int(c)
    result = Laurent(out)
    assert ratfun_equal(result.to_ratfun() * r.denom, r.numer)
    return result


def _poly_dual(p: MPoly):
    d1 = max((e[_IZ1] for e in p.monoms()), default=0)
    d2 = max((e[_IZ2] for e in p.monoms()), default=0)
    out = RING.zero
    for exps, c in p.terms():
        e = list(exps)
        e[_IZ1], e[_IZ2] = d1 - e[_IZ1], d2 - e[_IZ2]
        out += RING({tuple(e): c})
    return out, z1 ** d1 * z2 ** d2


def char_dual(r) -> RatFun:
    """The dual module character: substitute z_i -> 1/z_i."""
    r = ratfun(r)
    n, nshift = _poly_dual(r.numer)
    d, dshift = _poly_dual(r.denom)
    return FIELD(n) * dshift / (FIELD(d) * nshift)


# --------------------------------------------------------------------------
# truncated power series in q
# --------------------------------------------------------------------------

class QSeries:
    """Power series in q truncated after ``q**order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        coeffs = [ratfun(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [FIELD.zero] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def one(cls, order):
        return cls([1], order)

    def __getitem__(self, n):
        return self.coeffs[n]

    def _check(self, other):
        if not isinstance(other, QSeries):
            return QSeries([other], self.order)
        return other

    def __add__(self, other):
        other = self._check(other)
        n = min(self.order, other.order)
        return QSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            c = ratfun(other)
            return QSeries([a * c for a in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [FIELD.zero] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j in range(n + 1 - i):
                if other.coeffs[j]:
                    out[i + j] += a * other.coeffs[j]
        return QSeries(out, n)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(ratfun_equal(a, b) for a, b in zip(self.coeffs[: n + 1], other.coeffs))

    def log(self) -> "QSeries":
        if not ratfun_equal(self.coeffs[0], 1):
            raise AlgebraError("log needs constant term 1")
        s, n = self.coeffs, self.order
        f = [FIELD.zero] * (n + 1)
        for k in range(1, n + 1):
            acc = k * s[k]
            for j in range(1, k):
                if f[j] and s[k - j]:
                    acc -= j * f[j] * s[k - j]
            f[k] = acc / k
        return QSeries(f, n)

    def exp(self) -> "QSeries":
        if self.coeffs[0]:
            raise AlgebraError("exp needs zero constant term")
        f, n = self.coeffs, self.order
        g = [FIELD.one] + [FIELD.zero] * n
        for k in range(1, n + 1):
            acc = FIELD.zero
            for j in range(1, k + 1):
                if f[j] and g[k - j]:
                    acc += j * f[j] * g[k - j]
            g[k] = acc / k
        return QSeries(g, n)

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                cs = ratfun_to_str(c)
                if k == 0:
                    terms.append(cs)
                else:
                    mono = "q" if k == 1 else f"q^{k}"
                    plain = cs.replace("/", "", 1).lstrip("-").isdigit()
                    terms.append(mono if cs == "1" else f"{cs}*{mono}" if plain else f"({cs})*{mono}")
        return " + ".join(terms) if terms else "0"


def qseries_exp_log_pow(s: QSeries, exponent) -> QSeries:
    """``s ** exponent`` as ``exp(exponent * log(s))``; s must start with 1."""
    if not ratfun_equal(s[0], 1):
        raise AlgebraError(f"constant term must be 1, got {s[0]}")
    return (s.log() * ratfun(exponent)).exp()


# --------------------------------------------------------------------------
# serialization
# --------------------------------------------------------------------------

def rational_to_str(c) -> str:
    c = Fraction(int(c.numerator), int(c.denominator))
    return f"{c.numerator}/{c.denominator}"


def rational_from_str(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {s!r}") from exc


def mpoly_to_json(p: MPoly) -> dict:
    return {
        "vars": list(VARS),
        "terms": [{"exps": list(e), "coeff": rational_to_str(c)} for e, c in sorted(p.terms())],
    }


def mpoly_from_json(data: dict) -> MPoly:
    names = data.get("vars", list(VARS))
    index = [VARS.index(n) for n in names]
    out = {}
    for t in data["terms"]:
        e = [0] * len(VARS)
        for i, x in zip(index, t["exps"]):
            e[i] = x
        c = rational_from_str(t["coeff"])
        out[tuple(e)] = QQ(c.numerator, c.denominator)
    return RING(out)


def ratfun_to_json(r) -> dict:
    r = ratfun(r)
    return {"num": mpoly_to_json(r.numer), "den": mpoly_to_json(r.denom)}


def ratfun_from_json(data: dict) -> RatFun:
    return FIELD(mpoly_from_json(data["num"])) / FIELD(mpoly_from_json(data["den"]))


def ratfun_to_str(r) -> str:
    return str(ratfun(r))
