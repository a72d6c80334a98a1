"""The coefficient ring: Laurent polynomials in v, s with quantum-integer denominators.

A :class:`Scalar` is stored as ``num / (k * prod Phi_d(s)^e_d * rest)`` where
``Phi_d`` are cyclotomic polynomials in ``s``. Every denominator of the form
``integer * prod (s^j - s^-j)`` factors this way, so for those values the
reduced representation is unique and equality is structural. Anything else
(only reachable by dividing by an arbitrary Scalar) lands in ``rest`` and is
compared by cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Union

from .laurent import (
    ONE as P_ONE,
    ZERO as P_ZERO,
    InexactDivisionError,
    LaurentPoly,
    cyclotomic,
)

__all__ = [
    "Scalar",
    "InexactDivisionError",
    "ScalarLike",
    "qint",
    "qfactorial",
    "delta",
    "z",
    "v",
    "s",
]

ScalarLike = Union["Scalar", LaurentPoly, int, Fraction]

_HASH_PRIME = (1 << 61) - 1
_HASH_V = 1_234_567
_HASH_S = 7_654_321


class Scalar:
    __slots__ = ("num", "cyc", "k", "rest", "_den")

    def __init__(self, num: LaurentPoly, cyc: tuple[tuple[int, int], ...] = (), k: int = 1,
                 rest: LaurentPoly | None = None):
        # Callers must pass an already reduced representation; use Scalar.make otherwise.
        self.num = num
        self.cyc = cyc
        self.k = k
        self.rest = rest
        self._den: LaurentPoly | None = None

    # construction

    @classmethod
    def make(cls, num: LaurentPoly, cyc: dict[int, int] | None = None, k: int = 1,
             rest: LaurentPoly | None = None) -> Scalar:
        """Reduce ``num / (k * prod Phi_d^e * rest)`` to canonical form."""
        if k == 0:
            raise ZeroDivisionError("zero integer denominator")
        if num.is_zero():
            return ZERO
        if k < 0:
            num, k = -num, -k
        kept: list[tuple[int, int]] = []
        if cyc:
            for d in sorted(cyc):
                e = cyc[d]
                if e <= 0:
                    continue
                phi = cyclotomic(d)
                while e:
                    q = num.try_div(phi)
                    if q is None:
                        break
                    num = q
                    e -= 1
                if e:
                    kept.append((d, e))
        if rest is not None:
            if rest.is_one():
                rest = None
            else:
                q = num.try_div(rest)
                if q is not None:
                    num, rest = q, None
        if k != 1:
            g = gcd(num.content(), k)
            if g != 1:
                num = num.div_int(g)
                k //= g
        return cls(num, tuple(kept), k, rest)

    @classmethod
    def coerce(cls, x: ScalarLike) -> Scalar:
        if isinstance(x, Scalar):
            return x
        if isinstance(x, LaurentPoly):
            return cls(x) if x.terms else ZERO
        if isinstance(x, int):
            return cls(LaurentPoly.const(x)) if x else ZERO
        if isinstance(x, Fraction):
            return cls.make(LaurentPoly.const(x.numerator), None, x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    # structure

    def is_zero(self) -> bool:
        return not self.num.terms

    def is_polynomial(self) -> bool:
        """True when the value lies in Z[v^+-1, s^+-1]."""
        return not self.cyc and self.k == 1 and self.rest is None

    @property
    def denominator(self) -> LaurentPoly:
        if self._den is None:
            den = LaurentPoly.const(self.k)
            for d, e in self.cyc:
                den = den * cyclotomic(d) ** e
            if self.rest is not None:
                den = den * self.rest
            self._den = den
        return self._den

    @property
    def numerator(self) -> LaurentPoly:
        return self.num

    def as_polynomial(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise InexactDivisionError(f"{self} is not a Laurent polynomial")
        return self.num

    # arithmetic

    def __add__(self, other: ScalarLike) -> Scalar:
        if not isinstance(other, Scalar):
            other = Scalar.coerce(other)
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self.cyc == other.cyc and self.k == other.k and self.rest is None and other.rest is None:
            if not self.cyc and self.k == 1:
                total = self.num + other.num
                return Scalar(total) if total.terms else ZERO
            return Scalar.make(self.num + other.num, dict(self.cyc), self.k)
        return _add_general(self, other)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        if not self.num.terms:
            return self
        return Scalar(-self.num, self.cyc, self.k, self.rest)

    def __sub__(self, other: ScalarLike) -> Scalar:
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other: ScalarLike) -> Scalar:
        return Scalar.coerce(other) + (-self)

    def __mul__(self, other: ScalarLike) -> Scalar:
        if not isinstance(other, Scalar):
            other = Scalar.coerce(other)
        if not self.num.terms or not other.num.terms:
            return ZERO
        if self.is_polynomial() and other.is_polynomial():
            return Scalar(self.num * other.num)
        cyc = dict(self.cyc)
        for d, e in other.cyc:
            cyc[d] = cyc.get(d, 0) + e
        rest = _mul_rest(self.rest, other.rest)
        return Scalar.make(self.num * other.num, cyc, self.k * other.k, rest)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("division by the zero Scalar")
        shift, content, cyc, residual = factor_denominator_candidate(self.num)
        num = self.denominator.shift(-shift[0], -shift[1])
        return Scalar.make(num, cyc, content, residual)

    def __truediv__(self, other: ScalarLike) -> Scalar:
        other = Scalar.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Scalar")
        return self * other.inverse()

    def __rtruediv__(self, other: ScalarLike) -> Scalar:
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, e: int) -> Scalar:
        if e < 0:
            return self.inverse() ** (-e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, other: ScalarLike) -> Scalar:
        """Quotient that must be a Laurent polynomial; raises otherwise."""
        q = self / other
        if not q.is_polynomial():
            raise InexactDivisionError(f"({self}) / ({Scalar.coerce(other)}) is not a Laurent polynomial")
        return q

    def bar(self) -> Scalar:
        """Mirror involution: invert v and s."""
        num = self.num.bar()
        # Phi_1(1/s) = -s^-1 Phi_1(s); Phi_d(1/s) = s^-phi(d) Phi_d(s) for d > 1.
        shift = 0
        sign = 1
        for d, e in self.cyc:
            deg = max(cyclotomic(d).s_exponents())
            shift += deg * e
            if d == 1 and e % 2:
                sign = -sign
        num = num.shift(0, shift)
        if sign < 0:
            num = -num
        rest = self.rest.bar() if self.rest is not None else None
        if rest is None:
            return Scalar(num, self.cyc, self.k, None)
        return Scalar.make(num, dict(self.cyc), self.k, None) / Scalar.coerce(rest)

    # comparison

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Scalar):
            if isinstance(other, (int, LaurentPoly, Fraction)):
                other = Scalar.coerce(other)
            else:
                return NotImplemented
        if self.rest is None and other.rest is None:
            return self.num == other.num and self.cyc == other.cyc and self.k == other.k
        return self.num * other.denominator == other.num * self.denominator

    def __hash__(self) -> int:
        den = self.denominator.evaluate_mod(_HASH_V, _HASH_S, _HASH_PRIME)
        if den == 0:
            return 0
        num = self.num.evaluate_mod(_HASH_V, _HASH_S, _HASH_PRIME)
        return hash(num * pow(den, -1, _HASH_PRIME) % _HASH_PRIME)

    def __bool__(self) -> bool:
        return bool(self.num.terms)

    def evaluate(self, v_val, s_val):
        """Numeric specialisation for debugging; not used by the library itself."""
        return self.num.evaluate(v_val, s_val) / self.denominator.evaluate(v_val, s_val)

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.denominator})"

    def __repr__(self) -> str:
        return f"Scalar({self})"


def _mul_rest(a: LaurentPoly | None, b: LaurentPoly | None) -> LaurentPoly | None:
    if a is None:
        return b
    if b is None:
        return a
    return a * b


def _add_general(x: Scalar, y: Scalar) -> Scalar:
    # common denominator: lcm on the cyclotomic and integer parts
    cx, cy = dict(x.cyc), dict(y.cyc)
    cyc = {d: max(cx.get(d, 0), cy.get(d, 0)) for d in cx.keys() | cy.keys()}
    k = x.k * y.k // gcd(x.k, y.k)

    def lift(t: Scalar, own: dict[int, int]) -> LaurentPoly:
        num = t.num * (k // t.k)
        for d, e in cyc.items():
            extra = e - own.get(d, 0)
            if extra:
                num = num * cyclotomic(d) ** extra
        return num

    nx, ny = lift(x, cx), lift(y, cy)
    if x.rest is None and y.rest is None:
        rest = None
    elif x.rest is not None and y.rest is not None and x.rest == y.rest:
        rest = x.rest
    else:
        if y.rest is not None:
            nx = nx * y.rest
        if x.rest is not None:
            ny = ny * x.rest
        rest = _mul_rest(x.rest, y.rest)
    return Scalar.make(nx + ny, cyc, k, rest)


def _s_span(p: LaurentPoly) -> int:
    bs = p.s_exponents()
    return max(bs) - min(bs)


def _totient(n: int) -> int:
    result, m, f = n, n, 2
    while f * f <= m:
        if m % f == 0:
            while m % f == 0:
                m //= f
            result -= result // f
        f += 1
    if m > 1:
        result -= result // m
    return result


def factor_denominator_candidate(p: LaurentPoly):
    """Split ``p`` as ``monomial * sign * content * prod Phi_d(s)^e * residual``.

    Returns ``(monomial_exponent, signed_content, cyc, residual)`` where the
    residual is primitive, monomial-free, has positive leading coefficient, and
    is None when it equals 1.
    """
    shift = p.min_exponents()
    q = p.shift(-shift[0], -shift[1])
    content = q.content()
    q = q.div_int(content)
    if q.leading()[1] < 0:
        q, content = -q, -content
    cyc: dict[int, int] = {}
    span = _s_span(q)
    d = 1
    while span > 0 and d <= 2 * span + 2:
        if _totient(d) <= span:
            phi = cyclotomic(d)
            while True:
                r = q.try_div(phi)
                if r is None:
                    break
                q = r
                cyc[d] = cyc.get(d, 0) + 1
                span = _s_span(q)
        d += 1
    if q.leading()[1] < 0:
        q, content = -q, -content
    residual = None if q.is_one() else q
    return shift, content, cyc, residual


ZERO = Scalar(P_ZERO)
ONE = Scalar(P_ONE)
v = Scalar(LaurentPoly.monomial(1, 0))
s = Scalar(LaurentPoly.monomial(0, 1))
v_inv = Scalar(LaurentPoly.monomial(-1, 0))
s_inv = Scalar(LaurentPoly.monomial(0, -1))
z = s - s_inv


def qint(m: int) -> Scalar:
    """Quantum integer [m] = (s^m - s^-m)/(s - s^-1)."""
    if m < 0:
        raise ValueError("quantum integer index must be non-negative")
    top = LaurentPoly({(0, m): 1, (0, -m): -1})
    return Scalar(top.exact_div(z.num)) if m else ZERO


def qfactorial(m: int) -> Scalar:
    out = ONE
    for i in range(1, m + 1):
        out = out * qint(i)
    return out


def delta() -> Scalar:
    """Framed Homfly value of the zero-framed unknot, (v^-1 - v)/(s - s^-1)."""
    return _DELTA


_DELTA = (v_inv - v) / z


def split_common(coeffs: list[Scalar]) -> tuple[dict[int, int], int, list[LaurentPoly]] | None:
    """Write every coefficient over one common denominator.

    Returns ``(cyc, k, numerators)`` with ``coeffs[i] = numerators[i] / (k * prod Phi_d^cyc[d])``,
    or None when some coefficient has a denominator outside the cyclotomic form.
    """
    cyc: dict[int, int] = {}
    k = 1
    for c in coeffs:
        if c.rest is not None:
            return None
        for d, e in c.cyc:
            if e > cyc.get(d, 0):
                cyc[d] = e
        if c.k != 1:
            k = k * c.k // gcd(k, c.k)
    if not cyc and k == 1:
        return cyc, k, [c.num for c in coeffs]
    nums = []
    for c in coeffs:
        num = c.num if c.k == k else c.num * (k // c.k)
        own = dict(c.cyc)
        for d, e in cyc.items():
            extra = e - own.get(d, 0)
            if extra:
                num = num * cyclotomic(d) ** extra
        nums.append(num)
    return cyc, k, nums


def join_common(num: LaurentPoly, cyc: dict[int, int], k: int) -> Scalar:
    if not cyc and k == 1:
        return Scalar(num) if num.terms else ZERO
    return Scalar.make(num, cyc, k)
