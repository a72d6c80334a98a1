"""Sparse integer Laurent polynomials in the two variables v and s.

Internally an exponent pair (a, b) is packed into the single integer
``a * 2**32 + b``. Multiplying monomials is then integer addition, and the
integer order on keys is lexicographic order on (a, b).
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterator, Mapping

Exponent = tuple[int, int]

_SHIFT = 32
_BASE = 1 << _SHIFT
_HALF = _BASE >> 1
# exponents must stay strictly inside this bound; exceeding it is an overflow error
EXPONENT_LIMIT = _HALF


class InexactDivisionError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


def pack(a: int, b: int) -> int:
    if abs(a) >= EXPONENT_LIMIT or abs(b) >= EXPONENT_LIMIT:
        raise OverflowError(f"exponent ({a}, {b}) out of range")
    return a * _BASE + b


def unpack(key: int) -> Exponent:
    b = (key + _HALF) % _BASE - _HALF
    return (key - b) >> _SHIFT, b


class LaurentPoly:
    """An element of Z[v, 1/v, s, 1/s]; immutable by convention."""

    __slots__ = ("terms", "_hash", "_reach")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        self.terms: dict[int, int] = {}
        if terms:
            for (a, b), c in terms.items():
                if c:
                    key = pack(int(a), int(b))
                    self.terms[key] = self.terms.get(key, 0) + int(c)
            self.terms = {k: c for k, c in self.terms.items() if c}
        self._hash: int | None = None
        self._reach: int | None = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPoly:
        out = cls.__new__(cls)
        out.terms = terms
        out._hash = None
        out._reach = None
        return out

    # construction

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, c: int = 1) -> LaurentPoly:
        return cls._raw({pack(a, b): c} if c else {})

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls._raw({0: c} if c else {})

    @classmethod
    def from_s(cls, coeffs: Mapping[int, int]) -> LaurentPoly:
        """Polynomial in s alone, given as ``{s_exponent: coefficient}``."""
        return cls({(0, b): c for b, c in coeffs.items()})

    # predicates and accessors

    def items(self) -> Iterator[tuple[Exponent, int]]:
        for key, c in self.terms.items():
            yield unpack(key), c

    def as_dict(self) -> dict[Exponent, int]:
        return dict(self.items())

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {0: 1}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_term(self) -> int:
        return self.terms.get(0, 0)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def leading(self) -> tuple[Exponent, int]:
        """Lexicographically largest term (v exponent first)."""
        key = max(self.terms)
        return unpack(key), self.terms[key]

    def leading_coefficient(self) -> int:
        return self.terms[max(self.terms)]

    def min_exponents(self) -> Exponent:
        pairs = [unpack(k) for k in self.terms]
        return min(a for a, _ in pairs), min(b for _, b in pairs)

    def s_exponents(self) -> list[int]:
        return [unpack(k)[1] for k in self.terms]

    def reach(self) -> int:
        """Largest absolute exponent occurring."""
        if self._reach is None:
            r = 0
            for k in self.terms:
                a, b = unpack(k)
                r = max(r, abs(a), abs(b))
            self._reach = r
        return self._reach

    # arithmetic

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for e, c in b.items():
            t = out.get(e, 0) + c
            if t:
                out[e] = t
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return LaurentPoly.const(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self.terms.items()})
        a_terms, b_terms = self.terms, other.terms
        if not a_terms or not b_terms:
            return ZERO
        if self.reach() + other.reach() >= EXPONENT_LIMIT:
            raise OverflowError("Laurent exponent overflow in product")
        if len(a_terms) < len(b_terms):
            a_terms, b_terms = b_terms, a_terms
        if len(b_terms) == 1:
            (k, m), = b_terms.items()
            if m == 1:
                return LaurentPoly._raw({e + k: c for e, c in a_terms.items()})
            return LaurentPoly._raw({e + k: c * m for e, c in a_terms.items()})
        out: dict[int, int] = {}
        get = out.get
        for e2, c2 in b_terms.items():
            for e1, c1 in a_terms.items():
                e = e1 + e2
                out[e] = get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (key, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            a, b = unpack(key)
            return LaurentPoly.monomial(a * k, b * k, c ** (-k))
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def div_int(self, k: int) -> LaurentPoly:
        """Exact division of every coefficient by the integer ``k``."""
        out = {}
        for e, c in self.terms.items():
            q, r = divmod(c, k)
            if r:
                raise InexactDivisionError(f"{c} is not divisible by {k}")
            out[e] = q
        return LaurentPoly._raw(out)

    def shift(self, a: int, b: int) -> LaurentPoly:
        """Multiply by the monomial v^a s^b."""
        if a == 0 and b == 0:
            return self
        if self.reach() + max(abs(a), abs(b)) >= EXPONENT_LIMIT:
            raise OverflowError("Laurent exponent overflow in shift")
        k = a * _BASE + b
        return LaurentPoly._raw({e + k: c for e, c in self.terms.items()})

    def bar(self) -> LaurentPoly:
        """The mirror involution v -> 1/v, s -> 1/s."""
        return LaurentPoly._raw({-e: c for e, c in self.terms.items()})

    def try_div(self, other: LaurentPoly) -> LaurentPoly | None:
        """Exact quotient ``self / other`` or None when it does not exist."""
        if not other.terms:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self.terms:
            return ZERO
        if len(other.terms) == 1:
            (key, c), = other.terms.items()
            out = {}
            for e, x in self.terms.items():
                q, r = divmod(x, c)
                if r:
                    return None
                out[e - key] = q
            return LaurentPoly._raw(out)
        if all(-_HALF < k < _HALF for k in other.terms):
            return _div_by_s_poly(self, other)
        return _div_general(self, other)

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        q = self.try_div(other)
        if q is None:
            raise InexactDivisionError(f"({self}) is not divisible by ({other})")
        return q

    def evaluate(self, v, s):
        """Numeric value at the given point; debugging aid only."""
        return sum(c * v**a * s**b for (a, b), c in self.items())

    def evaluate_mod(self, v: int, s: int, p: int) -> int:
        vi, si = pow(v, -1, p), pow(s, -1, p)
        total = 0
        for (a, b), c in self.items():
            total += c * pow(v if a >= 0 else vi, abs(a), p) * pow(s if b >= 0 else si, abs(b), p)
        return total % p

    # comparison and display

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, key in enumerate(sorted(self.terms)):
            c = self.terms[key]
            a, b = unpack(key)
            body = f"{abs(c)}*v^{a}*s^{b}"
            if i == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def _div_by_s_poly(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly | None:
    """Divide by a polynomial in s alone, one v-slice at a time with dense arithmetic."""
    dkeys = sorted(den.terms)
    dlow, dhigh = dkeys[0], dkeys[-1]
    dlen = dhigh - dlow + 1
    dense_den = [0] * dlen
    for k in dkeys:
        dense_den[k - dlow] = den.terms[k]
    lead = dense_den[-1]
    slices: dict[int, dict[int, int]] = {}
    for key, c in num.terms.items():
        a, b = unpack(key)
        slices.setdefault(a, {})[b] = c
    out: dict[int, int] = {}
    for a, sl in slices.items():
        low = min(sl)
        high = max(sl)
        width = high - low + 1
        if width < dlen:
            return None
        rem = [0] * width
        for b, c in sl.items():
            rem[b - low] = c
        qlen = width - dlen + 1
        quot = [0] * qlen
        for i in range(qlen - 1, -1, -1):
            top = rem[i + dlen - 1]
            if top:
                q, r = divmod(top, lead)
                if r:
                    return None
                quot[i] = q
                for j in range(dlen):
                    if dense_den[j]:
                        rem[i + j] -= q * dense_den[j]
        if any(rem[: dlen - 1]):
            return None
        base = a * _BASE + low - dlow
        for i, q in enumerate(quot):
            if q:
                out[base + i] = q
    return LaurentPoly._raw(out)


def _div_general(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly | None:
    # Normalise to honest polynomials; the divisor then has no monomial factor,
    # so any Laurent quotient is itself a polynomial.
    da, db = den.min_exponents()
    divisor = den.shift(-da, -db)
    na, nb = num.min_exponents()
    rem = dict(num.shift(-na, -nb).terms)
    lkey = max(divisor.terms)
    la, lb = unpack(lkey)
    lc = divisor.terms[lkey]
    div_terms = list(divisor.terms.items())
    quot: dict[int, int] = {}
    while rem:
        rkey = max(rem)
        ra, rb = unpack(rkey)
        if ra < la or rb < lb:
            return None
        q, r = divmod(rem[rkey], lc)
        if r:
            return None
        qkey = rkey - lkey
        quot[qkey] = q
        for xk, xc in div_terms:
            e = xk + qkey
            t = rem.get(e, 0) - q * xc
            if t:
                rem[e] = t
            else:
                rem.pop(e, None)
    return LaurentPoly._raw(quot).shift(na - da, nb - db)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
V = LaurentPoly.monomial(1, 0)
S = LaurentPoly.monomial(0, 1)


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> LaurentPoly:
    """The cyclotomic polynomial Phi_d evaluated at s."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = LaurentPoly.from_s({d: 1, 0: -1})
    for k in range(1, d):
        if d % k == 0:
            poly = poly.exact_div(cyclotomic(k))
    return poly
