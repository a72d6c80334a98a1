"""Threading annulus elements around n parallel strands: the map into the centre of H_n.

A closed braid on m strands is threaded by placing it beside the n through
strands, letting the m-block pass once around the n-block with positive
crossings, and then closing the m pattern strands.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping, Sequence

from .closure import close_strands, markov_trace
from .hecke import HeckeElem, all_permutations, eval_word, perm_length, validate_word
from .laurent import InexactDivisionError
from .scalars import ONE, Scalar, s


def threading_braid(n: int, m: int) -> list[int]:
    """Positive word on n+m strands for the m-block encircling the n-block."""
    if n < 0 or m < 0:
        raise ValueError("strand counts must be non-negative")
    if n == 0 or m == 0:
        return []
    there: list[int] = []
    for r in range(1, m + 1):
        there.extend(range(n + r - 1, r - 1, -1))
    return there + there[::-1]


def shift_word(letters: Sequence[int], offset: int) -> list[int]:
    return [x + offset if x > 0 else x - offset for x in letters]


def thread_braid(letters: Sequence[int], m: int, n: int, *, loop_first: bool = False) -> HeckeElem:
    """psi_n of the closure of an m-strand braid word.

    ``loop_first`` composes the encircling loop before the pattern; after
    closure both orders agree.
    """
    validate_word(max(m, 1), letters)
    if m == 0:
        return HeckeElem.identity(n)
    pattern = shift_word(letters, n)
    loop = threading_braid(n, m)
    word = loop + pattern if loop_first else pattern + loop
    return close_strands(eval_word(word, n + m), m)


def thread_pattern(pattern: HeckeElem, n: int) -> HeckeElem:
    """psi_n of the closure of an arbitrary element of H_m."""
    m = pattern.n
    if m == 0:
        return HeckeElem.identity(n).scale(pattern.coefficient(()))
    lifted = pattern.shift_up(n).mul_word(threading_braid(n, m))
    return close_strands(lifted, m)


def murphy_sum_element(n: int) -> HeckeElem:
    """T^(n): the core curve threaded around n strands."""
    return thread_braid([], 1, n)


@lru_cache(maxsize=None)
def symmetrizer(i: int) -> HeckeElem:
    """a_i = sum over S_i of s^length(perm) times the basis braid."""
    if i < 0:
        raise ValueError("symmetrizer needs i >= 0")
    terms = {}
    for perm in all_permutations(i):
        terms[perm] = Scalar.coerce(s.num ** perm_length(perm)) if perm_length(perm) else ONE
    return HeckeElem._raw(i, terms)


@lru_cache(maxsize=None)
def alpha(i: int) -> Scalar:
    """The scalar with a_i * a_i = alpha(i) * a_i, found by squaring."""
    a = symmetrizer(i)
    square = a.mul(a)
    ident = tuple(range(1, i + 1))
    factor = square.coefficient(ident)
    if square != a.scale(factor):
        raise InexactDivisionError(f"a_{i}^2 is not a multiple of a_{i}")
    return factor


def alpha_by_generators(i: int) -> Scalar:
    """alpha(i) from the eigenvector property a_i * sigma_j = s * a_i (independent of squaring)."""
    a = symmetrizer(i)
    for j in range(1, i):
        if a.mul_generator(j) != a.scale(s):
            raise InexactDivisionError(f"a_{i} is not an eigenvector of sigma_{j}")
    total = Scalar.coerce(0)
    for perm in all_permutations(i):
        total = total + Scalar.coerce(s.num ** (2 * perm_length(perm)))
    return total


@lru_cache(maxsize=None)
def thread_h(i: int, n: int) -> HeckeElem:
    """psi_n(h_i)."""
    if i == 0:
        return HeckeElem.identity(n)
    return thread_pattern(symmetrizer(i), n).scale(ONE / alpha(i))


@lru_cache(maxsize=None)
def thread_monomial(monomial: tuple[int, ...], n: int) -> HeckeElem:
    """psi_n of a product of h's; factors are central so order does not matter."""
    if not monomial:
        return HeckeElem.identity(n)
    if len(monomial) == 1:
        return thread_h(monomial[0], n)
    return thread_monomial(monomial[:-1], n).mul(thread_h(monomial[-1], n))


def thread_annulus(terms: Mapping[tuple[int, ...], Scalar] | object, n: int) -> HeckeElem:
    """psi_n of an AnnulusElem (or its raw term map), extended linearly."""
    terms = getattr(terms, "terms", terms)
    total = HeckeElem.zero(n)
    for mono, c in terms.items():
        total = total + thread_monomial(tuple(sorted(mono)), n).scale(c)
    return total


@lru_cache(maxsize=None)
def h_evaluation(i: int) -> Scalar:
    """<h_i>: Markov trace of the symmetrizer divided by alpha(i)."""
    if i == 0:
        return ONE
    return markov_trace(symmetrizer(i)) / alpha(i)
