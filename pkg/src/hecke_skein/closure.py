"""Partial closure H_{n+1} -> H_n and the framed Homfly (Markov) trace.

Closing the last strand of a basis braid uses two rules: a straight last
strand becomes a factor delta, and ``x sigma_n y`` closes to ``v^-1 x y``.
A basis braid whose top value sits at position k factors as
``omega_alpha * sigma_n ... sigma_k`` with alpha fixing the last strand, which
puts it in the second pattern.
"""

from __future__ import annotations

from functools import lru_cache

from .hecke import HeckeElem, Permutation, _right_gen, _split, eval_word
from .laurent import LaurentPoly
from .scalars import Scalar, delta, join_common, v, z

_V_INV = LaurentPoly.monomial(-1, 0)
# delta = (v^-1 - v) s / (s^2 - 1); the closure kernels work over the denominator s^2 - 1
_DELTA_NUM = LaurentPoly({(-1, 1): 1, (1, 1): -1})
_S2_MINUS_1 = LaurentPoly({(0, 2): 1, (0, 0): -1})
_ZS = (z.num, -z.num)


@lru_cache(maxsize=300_000)
def _close_basis(perm: Permutation) -> tuple[bool, dict[Permutation, LaurentPoly]]:
    """(last strand straight?, polynomial image with delta stripped off)."""
    top = len(perm)
    if perm[-1] == top:
        return True, {perm[:-1]: LaurentPoly.const(1)}
    k = perm.index(top) + 1
    alpha = perm[: k - 1] + perm[k:]
    terms = {alpha: _V_INV}
    for i in range(top - 2, k - 1, -1):
        terms = _right_gen(terms, i, 1, *_ZS)
    return False, terms


def _close_poly(terms: dict[Permutation, LaurentPoly]) -> tuple[dict[Permutation, LaurentPoly], bool]:
    any_straight = any(p[-1] == len(p) for p in terms)
    acc: dict[Permutation, LaurentPoly] = {}
    get = acc.get
    for perm, c in terms.items():
        straight, image = _close_basis(perm)
        if any_straight:
            c = c * (_DELTA_NUM if straight else _S2_MINUS_1)
        for p, d in image.items():
            t = c * d
            prev = get(p)
            acc[p] = t if prev is None else prev + t
    return {p: c for p, c in acc.items() if c}, any_straight


def _close_scalar(terms: dict[Permutation, Scalar]) -> dict[Permutation, Scalar]:
    acc: dict[Permutation, Scalar] = {}
    for perm, c in terms.items():
        straight, image = _close_basis(perm)
        if straight:
            c = c * delta()
        for p, d in image.items():
            t = c * d
            acc[p] = acc[p] + t if p in acc else t
    return {p: c for p, c in acc.items() if c}


def close_strands(x: HeckeElem, count: int) -> HeckeElem:
    """Close the last ``count`` strands, one at a time."""
    if count > x.n:
        raise ValueError(f"cannot close {count} strands of H_{x.n}")
    if count == 0:
        return x
    n = x.n - count
    parts = _split(x.terms)
    if parts is None:
        terms = x.terms
        for _ in range(count):
            terms = _close_scalar(terms)
        return HeckeElem._raw(n, terms)
    cyc, k, polys = parts
    cyc = dict(cyc)
    for _ in range(count):
        polys, widened = _close_poly(polys)
        if widened:
            # s^2 - 1 = Phi_1(s) Phi_2(s)
            cyc[1] = cyc.get(1, 0) + 1
            cyc[2] = cyc.get(2, 0) + 1
    return HeckeElem._raw(n, {p: join_common(c, cyc, k) for p, c in polys.items()})


def partial_close(x: HeckeElem) -> HeckeElem:
    """Close the last strand of an element of H_{n+1}, giving an element of H_n."""
    if x.n < 1:
        raise ValueError("cannot close a strand of H_0")
    return close_strands(x, 1)


def markov_trace(x: HeckeElem) -> Scalar:
    """Framed Homfly polynomial of the closure, normalised to 1 on the empty diagram."""
    return close_strands(x, x.n).coefficient(())


def braid_trace(letters, strands: int) -> Scalar:
    return markov_trace(eval_word(letters, strands))


def writhe(letters) -> int:
    return sum(1 if x > 0 else -1 for x in letters)


def unframed_trace(letters, strands: int) -> Scalar:
    """Writhe-normalised value: each positive kink contributed v^-1 to the framed one."""
    return braid_trace(letters, strands) * v ** writhe(letters)
