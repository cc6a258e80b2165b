"""Integer polynomials, cyclotomic polynomials, resultants and the norm |f(t)|_d.

Dense polynomials are plain lists of ints, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).  Laurent polynomials are
:class:`LaurentPolynomial` values, a canonical exponent -> coefficient map.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

__all__ = [
    "IntPolynomial",
    "LaurentPolynomial",
    "trim",
    "poly_mul",
    "poly_divmod_monic",
    "cyclotomic_poly",
    "resultant",
    "norm_d",
    "fig8_cover_norm",
    "norm_exceeds_4q2",
]

IntPolynomial = list  # list[int], lowest degree first


class LaurentPolynomial:
    """Integer Laurent polynomial in t; immutable, zero coefficients never stored."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for exp, c in items:
            acc[int(exp)] = acc.get(int(exp), 0) + int(c)
        self._coeffs = {e: c for e, c in sorted(acc.items()) if c != 0}

    @classmethod
    def from_dense(cls, coeffs: Iterable[int], shift: int = 0) -> "LaurentPolynomial":
        return cls((i + shift, c) for i, c in enumerate(coeffs))

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def min_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return min(self._coeffs)

    def max_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self._coeffs)

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by t^k."""
        return LaurentPolynomial({e + k: c for e, c in self._coeffs.items()})

    def to_dense(self) -> tuple[IntPolynomial, int]:
        """Return (dense coefficients, lowest exponent) with a nonzero constant term."""
        if not self._coeffs:
            return [], 0
        lo, hi = self.min_degree(), self.max_degree()
        return [self._coeffs.get(e, 0) for e in range(lo, hi + 1)], lo

    def __call__(self, x):
        return sum(c * x**e for e, c in self._coeffs.items())

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._coeffs.items()})

    def __add__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return LaurentPolynomial(list(self._coeffs.items()) + list(other._coeffs.items()))

    def __sub__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return LaurentPolynomial(
            (e1 + e2, c1 * c2)
            for e1, c1 in self._coeffs.items()
            for e2, c2 in other._coeffs.items()
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def __repr__(self):
        return f"LaurentPolynomial({self._coeffs!r})"


def trim(f: Iterable[int]) -> IntPolynomial:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mul(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def poly_divmod_monic(f: IntPolynomial, g: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Divide f by a monic g over the integers."""
    if not g or g[-1] != 1:
        raise ValueError("divisor must be monic")
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], trim(r)
    q = [0] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            q[i - dg] = c
            for j in range(dg + 1):
                r[i - dg + j] -= c * g[j]
    return trim(q), trim(r[:dg])


def _divisors(n: int) -> list[int]:
    return [e for e in range(1, n + 1) if n % e == 0]


@lru_cache(maxsize=None)
def _cyclotomic(d: int) -> tuple[int, ...]:
    num = [-1] + [0] * (d - 1) + [1]  # t^d - 1
    den = [1]
    for e in _divisors(d):
        if e < d:
            den = poly_mul(den, list(_cyclotomic(e)))
    quo, rem = poly_divmod_monic(num, den)
    assert not rem
    return tuple(quo)


def cyclotomic_poly(d: int) -> IntPolynomial:
    """Phi_d as a dense coefficient list: (t^d - 1) / prod_{e | d, e < d} Phi_e."""
    if d <= 0:
        raise ValueError(f"d must be positive, got d={d}")
    return list(_cyclotomic(d))


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """prem(a, b): remainder of lc(b)^(deg a - deg b + 1) * a divided by b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        r = trim(r)
        e -= 1
    return [lb**e * x for x in r]


def _content(f: IntPolynomial) -> int:
    g = 0
    for c in f:
        g = gcd(g, c)
    return g


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Res(f, g) by the subresultant PRS; exact integer arithmetic throughout.

    With f monic this is the product of g over the roots of f.
    """
    f, g = trim(f), trim(g)
    if not f:
        raise ValueError("resultant undefined for zero f")
    if not g:
        return 0
    a, b = f, g
    da, db = len(a) - 1, len(b) - 1
    sign = 1
    if da < db:
        a, b, da, db = b, a, db, da
        if da * db % 2:
            sign = -1
    if db == 0:
        return sign * b[0] ** da
    ca, cb = _content(a), _content(b)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    t = ca**db * cb**da
    g_, h = 1, 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = _pseudo_rem(a, b)
        if not r:
            return 0
        a = b
        den = g_ * h**delta
        b = [x // den for x in r]
        g_ = a[-1]
        if delta:
            h = g_**delta // h ** (delta - 1)
        if len(b) - 1 <= 0:
            break
    da = len(a) - 1
    h = b[0] ** da // h ** (da - 1)
    return sign * t * h


def norm_d(f: LaurentPolynomial, d: int) -> int:
    """|f(t)|_d = |prod over primitive d-th roots zeta of f(zeta)| = |Res(Phi_d, f)|.

    f is first multiplied by a power of t so that it is an ordinary
    polynomial with nonzero constant term; t is a unit at every root of
    unity, so this does not change the value.  For d = 1 this is |f(1)|.
    """
    if d <= 0:
        raise ValueError(f"d must be positive, got d={d}")
    if f.is_zero():
        raise ValueError("norm of the zero polynomial is undefined")
    dense, _ = f.to_dense()
    return abs(resultant(cyclotomic_poly(d), dense))


def fig8_cover_norm(q: int) -> int:
    """|K|_{(q,5)} = (5q^2 - 1)^2 for the figure-eight knot and odd q."""
    if q % 2 == 0:
        raise ValueError(f"surgery coefficient 2/q needs odd q, got q={q}")
    return (5 * q * q - 1) ** 2


def norm_exceeds_4q2(norm_value: int, q: int) -> bool:
    """sqrt(norm_value) > 4 q^2, decided as norm_value > 16 q^4."""
    if norm_value < 0:
        raise ValueError(f"norm value must be nonnegative, got {norm_value}")
    return norm_value > 16 * q**4
