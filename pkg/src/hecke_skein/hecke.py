"""The Hecke algebra H_n on the positive permutation braid basis.

Permutations are tuples in one-line notation on ``1..n``. The basis element
indexed by ``perm`` is the positive permutation braid, and the generators
satisfy the quadratic relation ``sigma_i^2 = z sigma_i + 1`` with
``z = s - 1/s``.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator, Mapping, Sequence

from .scalars import ONE, ZERO, Scalar, ScalarLike, join_common, split_common, z

Permutation = tuple[int, ...]

_NEG_Z = -z
_Z_POLY = z.num
_NEG_Z_POLY = -z.num


def identity_perm(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def is_permutation(perm: Sequence[int]) -> bool:
    return sorted(perm) == list(range(1, len(perm) + 1))


def perm_length(perm: Permutation) -> int:
    """Number of inversions."""
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def perm_inverse(perm: Permutation) -> Permutation:
    out = [0] * len(perm)
    for pos, val in enumerate(perm, 1):
        out[val - 1] = pos
    return tuple(out)


def perm_compose(p: Permutation, q: Permutation) -> Permutation:
    """(p q)(i) = p(q(i))."""
    return tuple(p[j - 1] for j in q)


def right_swap(perm: Permutation, i: int) -> Permutation:
    """perm * s_i, i.e. swap positions i and i+1."""
    return perm[: i - 1] + (perm[i], perm[i - 1]) + perm[i + 1:]


def reduced_word(perm: Permutation) -> list[int]:
    """Reduced word obtained by repeatedly stripping the smallest right descent."""
    word: list[int] = []
    perm = tuple(perm)
    while True:
        for i in range(1, len(perm)):
            if perm[i - 1] > perm[i]:
                word.append(i)
                perm = right_swap(perm, i)
                break
        else:
            break
    word.reverse()
    return word


def all_permutations(n: int) -> Iterator[Permutation]:
    return (tuple(p) for p in permutations(range(1, n + 1)))


class HeckeElem:
    """A finitely supported linear combination of basis braids of H_n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Permutation, Scalar] | None = None):
        self.n = n
        self.terms: dict[Permutation, Scalar] = {}
        if terms:
            for perm, c in terms.items():
                c = Scalar.coerce(c)
                if c:
                    self.terms[tuple(perm)] = c

    @classmethod
    def _raw(cls, n: int, terms: dict[Permutation, Scalar]) -> HeckeElem:
        out = cls.__new__(cls)
        out.n = n
        out.terms = terms
        return out

    @classmethod
    def identity(cls, n: int) -> HeckeElem:
        return cls._raw(n, {identity_perm(n): ONE})

    @classmethod
    def zero(cls, n: int) -> HeckeElem:
        return cls._raw(n, {})

    @classmethod
    def basis(cls, perm: Sequence[int]) -> HeckeElem:
        perm = tuple(perm)
        if not is_permutation(perm):
            raise ValueError(f"{perm} is not a permutation")
        return cls._raw(len(perm), {perm: ONE})

    @classmethod
    def generator(cls, n: int, i: int, sign: int = 1) -> HeckeElem:
        return cls.identity(n).mul_generator(i, sign)

    # structure

    def coefficient(self, perm: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(perm), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[Permutation]:
        return sorted(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # linear structure

    def _check(self, other: HeckeElem) -> None:
        if self.n != other.n:
            raise ValueError(f"mismatched strand counts {self.n} and {other.n}")

    def __add__(self, other: HeckeElem) -> HeckeElem:
        self._check(other)
        out = dict(self.terms)
        for perm, c in other.terms.items():
            t = out[perm] + c if perm in out else c
            if t:
                out[perm] = t
            else:
                del out[perm]
        return HeckeElem._raw(self.n, out)

    def __neg__(self) -> HeckeElem:
        return HeckeElem._raw(self.n, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: HeckeElem) -> HeckeElem:
        return self + (-other)

    def scale(self, c: ScalarLike) -> HeckeElem:
        c = Scalar.coerce(c)
        if not c:
            return HeckeElem.zero(self.n)
        out = {}
        for p, x in self.terms.items():
            t = x * c
            if t:
                out[p] = t
        return HeckeElem._raw(self.n, out)

    def __mul__(self, other):
        if isinstance(other, HeckeElem):
            return self.mul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> HeckeElem:
        out = HeckeElem.identity(self.n)
        for _ in range(k):
            out = out.mul(self)
        return out

    # products

    def mul_generator(self, i: int, sign: int = 1) -> HeckeElem:
        """Right multiplication by sigma_i (sign=+1) or its inverse (sign=-1)."""
        return self.mul_word([i if sign > 0 else -i])

    def left_mul_generator(self, i: int, sign: int = 1) -> HeckeElem:
        """Left multiplication by sigma_i (sign=+1) or its inverse (sign=-1)."""
        self._check_letter(i)
        return self._transform(lambda terms, zs: _left_gen(terms, i, sign, *zs))

    def mul_word(self, letters: Iterable[int]) -> HeckeElem:
        """Right multiplication by a signed braid word."""
        letters = list(letters)
        for letter in letters:
            self._check_letter(abs(letter))

        def work(terms, zs):
            for letter in letters:
                terms = _right_gen(terms, abs(letter), 1 if letter > 0 else -1, *zs)
            return terms

        return self._transform(work)

    def _check_letter(self, i: int) -> None:
        if not 1 <= i < self.n:
            raise IndexError(f"generator index {i} out of range for H_{self.n}")

    def _transform(self, work) -> HeckeElem:
        """Apply a linear kernel over a common denominator, reducing once at the end."""
        parts = _split(self.terms)
        if parts is None:
            return HeckeElem._raw(self.n, work(self.terms, (z, _NEG_Z)))
        cyc, k, polys = parts
        return _join(self.n, work(polys, (_Z_POLY, _NEG_Z_POLY)), cyc, k)

    def mul(self, other: HeckeElem) -> HeckeElem:
        self._check(other)
        if not self.terms or not other.terms:
            return HeckeElem.zero(self.n)
        left, right = _split(self.terms), _split(other.terms)
        if left is None or right is None:
            return HeckeElem._raw(self.n, _mul_terms(self.n, self.terms, other.terms, (z, _NEG_Z)))
        cyc = dict(left[0])
        for d, e in right[0].items():
            cyc[d] = cyc.get(d, 0) + e
        product = _mul_terms(self.n, left[2], right[2], (_Z_POLY, _NEG_Z_POLY))
        return _join(self.n, product, cyc, left[1] * right[1])

    def commutes_with(self, other: HeckeElem) -> bool:
        return self.mul(other) == other.mul(self)

    def commutes_with_generators(self) -> bool:
        return all(
            self.mul_generator(i) == self.left_mul_generator(i) for i in range(1, self.n)
        )

    # embeddings

    def shift_up(self, offset: int) -> HeckeElem:
        """1_offset (x) self: place ``offset`` straight strands to the left."""
        head = tuple(range(1, offset + 1))
        return HeckeElem._raw(
            self.n + offset,
            {head + tuple(x + offset for x in p): c for p, c in self.terms.items()},
        )

    def extend(self, extra: int) -> HeckeElem:
        """self (x) 1_extra: add straight strands on the right."""
        tail = tuple(range(self.n + 1, self.n + extra + 1))
        return HeckeElem._raw(self.n + extra, {p + tail: c for p, c in self.terms.items()})

    def bar(self) -> HeckeElem:
        """Coefficient-wise bar; not the mirror of the braid, which needs inverse generators."""
        return HeckeElem._raw(self.n, {p: c.bar() for p, c in self.terms.items()})

    # comparison and display

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        raise TypeError("HeckeElem is not hashable")

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({self.terms[p]}) * [{' '.join(map(str, p))}]" for p in sorted(self.terms)
        )

    def __repr__(self) -> str:
        return f"HeckeElem(n={self.n}, {self})"


# Linear kernels shared by the polynomial fast path and the Scalar fallback.
# ``zs`` is the pair (z, -z) in whichever coefficient type is in use.


def _split(terms: dict[Permutation, Scalar]):
    perms = list(terms)
    parts = split_common([terms[p] for p in perms])
    if parts is None:
        return None
    cyc, k, nums = parts
    return cyc, k, dict(zip(perms, nums))


def _join(n: int, polys: dict, cyc: dict[int, int], k: int) -> HeckeElem:
    return HeckeElem._raw(n, {p: join_common(c, cyc, k) for p, c in polys.items()})


def _right_gen(terms: dict, i: int, sign: int, zc, nzc) -> dict:
    out: dict = {}
    get = out.get
    k = i - 1
    for perm, c in terms.items():
        a, b = perm[k], perm[i]
        swapped = perm[:k] + (b, a) + perm[i + 1:]
        prev = get(swapped)
        out[swapped] = c if prev is None else prev + c
        if a < b:
            if sign < 0:
                extra = nzc * c
                prev = get(perm)
                out[perm] = extra if prev is None else prev + extra
        elif sign > 0:
            extra = zc * c
            prev = get(perm)
            out[perm] = extra if prev is None else prev + extra
    return {p: c for p, c in out.items() if c}


def _left_gen(terms: dict, i: int, sign: int, zc, nzc) -> dict:
    out: dict = {}
    get = out.get
    for perm, c in terms.items():
        pi, pj = perm.index(i), perm.index(i + 1)
        swapped = list(perm)
        swapped[pi], swapped[pj] = i + 1, i
        swapped = tuple(swapped)
        prev = get(swapped)
        out[swapped] = c if prev is None else prev + c
        if pi < pj:
            if sign < 0:
                extra = nzc * c
                prev = get(perm)
                out[perm] = extra if prev is None else prev + extra
        elif sign > 0:
            extra = zc * c
            prev = get(perm)
            out[perm] = extra if prev is None else prev + extra
    return {p: c for p, c in out.items() if c}


def _mul_terms(n: int, x: dict, y: dict, zs) -> dict:
    memo: dict[Permutation, dict] = {identity_perm(n): x}

    def times_basis(perm: Permutation) -> dict:
        hit = memo.get(perm)
        if hit is not None:
            return hit
        for i in range(1, len(perm)):
            if perm[i - 1] > perm[i]:
                res = _right_gen(times_basis(right_swap(perm, i)), i, 1, *zs)
                memo[perm] = res
                return res
        raise AssertionError("unreachable")

    acc: dict = {}
    get = acc.get
    # shorter permutations first keeps the memo recursion shallow
    for perm in sorted(y, key=perm_length):
        coeff = y[perm]
        for p, c in times_basis(perm).items():
            t = c * coeff
            prev = get(p)
            acc[p] = t if prev is None else prev + t
    return {p: c for p, c in acc.items() if c}


def basis_of_perm(perm: Sequence[int]) -> HeckeElem:
    return HeckeElem.basis(perm)


def validate_word(n: int, letters: Sequence[int]) -> None:
    for letter in letters:
        if letter == 0 or abs(letter) >= n:
            raise ValueError(f"braid letter {letter} out of range for {n} strands")


def eval_word(letters: Sequence[int], n: int) -> HeckeElem:
    """Image in H_n of the braid word; negative letters denote inverse generators."""
    validate_word(n, letters)
    return HeckeElem.identity(n).mul_word(letters)


def murphy_word(j: int) -> list[int]:
    """String j passing once around strings 1..j-1 with positive crossings."""
    down = list(range(j - 1, 0, -1))
    return down + down[::-1]


def murphy(j: int, n: int) -> HeckeElem:
    if not 1 <= j <= n:
        raise IndexError(f"Murphy index {j} out of range for H_{n}")
    return eval_word(murphy_word(j), n)


def murphy_power_sum(m: int, n: int) -> HeckeElem:
    """Sum over j of T(j)^m in H_n."""
    total = HeckeElem.zero(n)
    for j in range(1, n + 1):
        t = murphy(j, n)
        total = total + (t ** m)
    return total


def elementary_symmetric_murphy(k: int, n: int) -> HeckeElem:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    # e[r] after processing T(1..j)
    e = [HeckeElem.identity(n)] + [HeckeElem.zero(n)] * k
    for j in range(1, n + 1):
        t = murphy(j, n)
        for r in range(min(j, k), 0, -1):
            e[r] = e[r] + e[r - 1].mul(t)
    return e[k]
