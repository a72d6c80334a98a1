"""The positive annulus skein as the polynomial ring on h_1, h_2, ...

Closed braids enter this model only through generating series: A_m comes from
``A(t) = H(st)/H(t/s)``, the mixed braids A_{i,j} from the crossing-switch
recursion, and P_m from ``ln H(t)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .laurent import InexactDivisionError
from .scalars import ONE, ZERO, Scalar, ScalarLike, qint, s, s_inv, z

Monomial = tuple[int, ...]

DEFAULT_DEGREE = 8


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


def _mono_key(m: Monomial):
    # degree first, then larger parts first: h2 before h1^2
    return (sum(m), tuple(-i for i in sorted(m, reverse=True)))


def _mono_str(m: Monomial) -> str:
    if not m:
        return "1"
    parts = []
    for i in sorted(set(m)):
        k = m.count(i)
        parts.append(f"h{i}" if k == 1 else f"h{i}^{k}")
    return "*".join(parts)


class AnnulusElem:
    """Polynomial in h_1, h_2, ... with Scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Sequence[int], ScalarLike] | None = None):
        self.terms: dict[Monomial, Scalar] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(sorted(mono))
            if any(i < 1 for i in mono):
                raise ValueError(f"h-indices must be positive, got {mono}")
            c = Scalar.coerce(c)
            if c:
                self.terms[mono] = self.terms.get(mono, ZERO) + c
        self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def _raw(cls, terms: dict[Monomial, Scalar]) -> AnnulusElem:
        out = cls.__new__(cls)
        out.terms = terms
        return out

    @classmethod
    def one(cls) -> AnnulusElem:
        return cls._raw({(): ONE})

    @classmethod
    def zero(cls) -> AnnulusElem:
        return cls._raw({})

    @classmethod
    def h(cls, i: int) -> AnnulusElem:
        if i == 0:
            return cls.one()
        return cls({(i,): ONE})

    @classmethod
    def constant(cls, c: ScalarLike) -> AnnulusElem:
        return cls({(): c})

    # grading

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def top_degree(self) -> int:
        return max(self.degrees(), default=-1)

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(m) == degree for m in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # arithmetic

    def __add__(self, other: AnnulusElem) -> AnnulusElem:
        out = dict(self.terms)
        for m, c in other.terms.items():
            t = out[m] + c if m in out else c
            if t:
                out[m] = t
            else:
                del out[m]
        return AnnulusElem._raw(out)

    def __neg__(self) -> AnnulusElem:
        return AnnulusElem._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: AnnulusElem) -> AnnulusElem:
        return self + (-other)

    def scale(self, c: ScalarLike) -> AnnulusElem:
        c = Scalar.coerce(c)
        if not c:
            return AnnulusElem.zero()
        return AnnulusElem._raw({m: x * c for m, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AnnulusElem):
            return self.scale(other)
        out: dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                t = c1 * c2
                out[m] = out[m] + t if m in out else t
        return AnnulusElem._raw({m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> AnnulusElem:
        out = AnnulusElem.one()
        for _ in range(k):
            out = out * self
        return out

    def exact_div(self, c: ScalarLike) -> AnnulusElem:
        """Divide every coefficient by ``c``, insisting on Laurent-polynomial quotients."""
        return AnnulusElem._raw({m: x.exact_div(c) for m, x in self.terms.items()})

    def mirror(self) -> AnnulusElem:
        """Switch all crossings: bar on coefficients, each h_n fixed."""
        return AnnulusElem._raw({m: c.bar() for m, c in self.terms.items()})

    def coefficient(self, mono: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(sorted(mono)), ZERO)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AnnulusElem):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, m in enumerate(sorted(self.terms, key=_mono_key)):
            c = self.terms[m]
            out.append(_term_str(c, m, first=(i == 0)))
        return "".join(out)

    def __repr__(self) -> str:
        return f"AnnulusElem({self})"


def _term_str(c: Scalar, m: Monomial, first: bool) -> str:
    if c.is_polynomial() and c.num.is_constant():
        val = c.num.constant_term()
        body = f"{abs(val)}*{_mono_str(m)}" if m else str(abs(val))
        if first:
            return body if val > 0 else "-" + body
        return (" + " if val > 0 else " - ") + body
    body = f"({c})*{_mono_str(m)}" if m else f"({c})"
    return body if first else " + " + body


class SeriesC:
    """Power series in t with AnnulusElem coefficients, exact modulo t^(degree+1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[AnnulusElem]):
        self.coeffs = list(coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least its constant term")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, degree: int) -> SeriesC:
        return cls([AnnulusElem.one()] + [AnnulusElem.zero()] * degree)

    def __getitem__(self, k: int) -> AnnulusElem:
        return self.coeffs[k]

    def truncate(self, degree: int) -> SeriesC:
        if degree > self.degree:
            raise ValueError(f"series is only known to degree {self.degree}")
        return SeriesC(self.coeffs[: degree + 1])

    def __add__(self, other: SeriesC) -> SeriesC:
        d = min(self.degree, other.degree)
        return SeriesC(self.coeffs[k] + other.coeffs[k] for k in range(d + 1))

    def __sub__(self, other: SeriesC) -> SeriesC:
        d = min(self.degree, other.degree)
        return SeriesC(self.coeffs[k] - other.coeffs[k] for k in range(d + 1))

    def __mul__(self, other: SeriesC) -> SeriesC:
        return series_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesC):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def mirror(self) -> SeriesC:
        return SeriesC(c.mirror() for c in self.coeffs)

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            parts.append(f"[{c}]" + ("" if k == 0 else f"*t^{k}"))
        return (" + ".join(parts) or "0") + f" + O(t^{self.degree + 1})"


def series_H(degree: int) -> SeriesC:
    """H(t) = 1 + sum h_n t^n."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return SeriesC([AnnulusElem.one()] + [AnnulusElem.h(k) for k in range(1, degree + 1)])


def series_substitute_scale(series: SeriesC, c: ScalarLike) -> SeriesC:
    """Substitute t -> c*t."""
    c = Scalar.coerce(c)
    out = []
    power = ONE
    for coeff in series.coeffs:
        out.append(coeff.scale(power))
        power = power * c
    return SeriesC(out)


def series_mul(a: SeriesC, b: SeriesC) -> SeriesC:
    d = min(a.degree, b.degree)
    out = []
    for k in range(d + 1):
        acc = AnnulusElem.zero()
        for i in range(k + 1):
            if a.coeffs[i].terms and b.coeffs[k - i].terms:
                acc = acc + a.coeffs[i] * b.coeffs[k - i]
        out.append(acc)
    return SeriesC(out)


def _require_unit_constant(series: SeriesC, op: str) -> None:
    if series.coeffs[0] != AnnulusElem.one():
        raise ValueError(f"{op} needs a series with constant term 1")


def series_inverse(series: SeriesC) -> SeriesC:
    _require_unit_constant(series, "inverse")
    inv = [AnnulusElem.one()]
    for k in range(1, series.degree + 1):
        acc = AnnulusElem.zero()
        for i in range(1, k + 1):
            if series.coeffs[i].terms:
                acc = acc + series.coeffs[i] * inv[k - i]
        inv.append(-acc)
    return SeriesC(inv)


def series_derivative(series: SeriesC) -> SeriesC:
    """d/dt; the result is known to one degree less."""
    if series.degree == 0:
        return SeriesC([AnnulusElem.zero()])
    return SeriesC(series.coeffs[k].scale(k) for k in range(1, series.degree + 1))


def series_integrate(series: SeriesC) -> SeriesC:
    """Antiderivative with zero constant term."""
    return SeriesC(
        [AnnulusElem.zero()]
        + [c.scale(Fraction(1, k + 1)) for k, c in enumerate(series.coeffs)]
    )


def series_log(series: SeriesC) -> SeriesC:
    """ln S for S with constant term 1, as the integral of S'/S."""
    _require_unit_constant(series, "log")
    if series.degree == 0:
        return SeriesC([AnnulusElem.zero()])
    quotient = series_mul(series_derivative(series), series_inverse(series).truncate(series.degree - 1))
    return series_integrate(quotient)


def series_t_times(series: SeriesC) -> SeriesC:
    return SeriesC([AnnulusElem.zero()] + series.coeffs)


@lru_cache(maxsize=None)
def _quotient_series(degree: int) -> SeriesC:
    H = series_H(degree)
    return series_mul(series_substitute_scale(H, s), series_inverse(series_substitute_scale(H, s_inv)))


def braid_A(m: int, degree: int | None = None) -> AnnulusElem:
    """A_m, the closure of sigma_{m-1}...sigma_1, in h-coordinates."""
    if m < 1:
        raise ValueError("A_m needs m >= 1")
    if degree is not None and degree < m:
        raise ValueError(f"A_{m} is not determined modulo t^{degree + 1}")
    return _braid_A(m)


@lru_cache(maxsize=None)
def _braid_A(m: int) -> AnnulusElem:
    coeff = _quotient_series(m)[m]
    try:
        out = coeff.exact_div(z)
    except InexactDivisionError as exc:
        raise InexactDivisionError(f"coefficient of t^{m} in H(st)/H(t/s) is not divisible by z") from exc
    return out


def series_A(degree: int = DEFAULT_DEGREE) -> SeriesC:
    """A(t) = 1 + z sum A_m t^m, built from the A_m."""
    return SeriesC([AnnulusElem.one()] + [braid_A(m).scale(z) for m in range(1, degree + 1)])


def series_A_mirror(degree: int = DEFAULT_DEGREE) -> SeriesC:
    """Abar(t) = 1 - z sum mirror(A_m) t^m."""
    return SeriesC([AnnulusElem.one()] + [braid_A(m).mirror().scale(-z) for m in range(1, degree + 1)])


def mirror(x: AnnulusElem) -> AnnulusElem:
    return x.mirror()


@lru_cache(maxsize=None)
def _log_H(degree: int) -> SeriesC:
    return series_log(series_H(degree))


def power_sum(m: int) -> AnnulusElem:
    """P_m = m * [t^m] ln H(t)."""
    if m < 1:
        raise ValueError("P_m needs m >= 1")
    return _log_H(m)[m].scale(m)


@lru_cache(maxsize=None)
def mixed_chain(m: int) -> tuple[AnnulusElem, ...]:
    """(A_{0,m-1}, A_{1,m-2}, ..., A_{m-1,0}) by switching one crossing at a time."""
    if m < 1:
        raise ValueError("need m >= 1")
    chain = [braid_A(m).mirror()]
    for i in range(1, m):
        j = m - i
        chain.append(chain[-1] + (braid_A(i) * braid_A(j).mirror()).scale(z))
    if chain[-1] != braid_A(m):
        raise ArithmeticError(f"crossing-switch recursion does not return to A_{m}")
    return tuple(chain)


def a_ij(i: int, j: int) -> AnnulusElem:
    """A_{i,j}: closure of the (i+j+1)-braid with i positive then j negative crossings."""
    if i < 0 or j < 0:
        raise ValueError("A_{i,j} needs i, j >= 0")
    return mixed_chain(i + j + 1)[i]


def a_ij_word(i: int, j: int) -> list[int]:
    """sigma_{i+j}^-1 ... sigma_{i+1}^-1 sigma_i ... sigma_1 as a signed word."""
    return [-k for k in range(i + j, i, -1)] + list(range(i, 0, -1))


def pi_sum(m: int) -> AnnulusElem:
    """Pi_m: the sum of the m closed braids A_{i, m-1-i}."""
    total = AnnulusElem.zero()
    for x in mixed_chain(m):
        total = total + x
    return total


def braidsum_sides(m: int) -> tuple[AnnulusElem, AnnulusElem]:
    """([m] P_m, Pi_m)."""
    return power_sum(m).scale(qint(m)), pi_sum(m)


def evaluate(x: AnnulusElem) -> Scalar:
    """The evaluation map into the coefficient ring (framed Homfly of the diagram)."""
    from .threading_map import h_evaluation

    total = ZERO
    for mono, c in x.terms.items():
        val = c
        for i in mono:
            val = val * h_evaluation(i)
        total = total + val
    return total
