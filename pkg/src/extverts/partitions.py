"""Integer partitions and Young diagram combinatorics.

Boxes use the matrix convention: ``(i, j)`` with row ``i >= 1`` and column
``j >= 1`` lies in ``lam`` iff ``j <= lam[i-1]``.  Arm and leg lengths are
total functions, extended by zero outside the diagram, so they may be
negative.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,1"``; ``""`` and ``"0"`` give the empty partition."""
        text = text.strip()
        if text in ("", "0", "()", "[]"):
            return cls()
        try:
            parts = [int(x) for x in text.strip("()[]").split(",") if x.strip()]
        except ValueError as exc:
            raise ValueError(f"malformed partition {text!r}") from exc
        return cls(parts)

    def __str__(self):
        return ",".join(map(str, self))

    def __repr__(self):
        return f"Partition({list(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """lambda_i with 1-based ``i``, zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def transpose(self) -> "Partition":
        return transpose(self)

    def boxes(self):
        return [(i, j) for i, row in enumerate(self, 1) for j in range(1, row + 1)]

    def multiplicities(self) -> Counter:
        return Counter(self)


def transpose(lam) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def arm(lam, box) -> int:
    i, j = box
    return Partition(lam).part(i) - j


def leg(lam, box) -> int:
    i, j = box
    return transpose(lam).part(j) - i


def dominance_leq(lam, mu) -> bool:
    """True iff lam <= mu in dominance order (same size required)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return False
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam.part(k + 1)
        b += mu.part(k + 1)
        if a > b:
            return False
    return True


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple:
    """All partitions of ``n`` in reverse lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))


def partitions_upto(n: int):
    return [lam for k in range(n + 1) for lam in enumerate_partitions(k)]


def z_factor(lam) -> Fraction:
    """z_lam = prod_k k^{m_k} m_k!, the centralizer size."""
    out = 1
    for k, mk in Partition(lam).multiplicities().items():
        out *= k ** mk * factorial(mk)
    return Fraction(out)


def remove_parts(lam, parts):
    """lam with the multiset ``parts`` removed, or None if not contained."""
    c = Counter(lam)
    c.subtract(Counter(parts))
    if any(v < 0 for v in c.values()):
        return None
    return Partition(sorted(c.elements(), reverse=True))


def union(lam, mu) -> Partition:
    return Partition(sorted(tuple(lam) + tuple(mu), reverse=True))
