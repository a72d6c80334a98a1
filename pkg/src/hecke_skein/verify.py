"""Batch verification of the skein identities, with structured reports.

Each check expands into independent cases. A case is a module-level function
plus its arguments, so a process pool can run cases in any order; results are
reassembled in plan order, which keeps reports reproducible.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable, Sequence

from . import __version__
from .annulus import (
    SeriesC,
    a_ij,
    a_ij_word,
    braid_A,
    braidsum_sides,
    evaluate,
    mixed_chain,
    power_sum,
    series_A,
    series_A_mirror,
    series_mul,
)
from .closure import braid_trace, markov_trace, partial_close
from .hecke import HeckeElem, elementary_symmetric_murphy, eval_word, murphy, murphy_power_sum
from .scalars import ONE, Scalar, delta, qfactorial, qint, s, v, z
from .threading_map import (
    alpha,
    murphy_sum_element,
    thread_annulus,
    thread_braid,
    thread_h,
)

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class VerificationReport:
    check: str
    params: dict[str, Any]
    status: str
    elapsed: float = 0.0
    lhs: str = ""
    rhs: str = ""
    note: str = ""
    version: str = __version__

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


Case = tuple[Callable[..., VerificationReport], tuple]


@dataclass
class _Timer:
    start: float = field(default_factory=time.perf_counter)

    def __call__(self) -> float:
        return round(time.perf_counter() - self.start, 4)


def _compare(check: str, params: dict, lhs, rhs, timer: _Timer, note: str = "") -> VerificationReport:
    status = PASS if lhs == rhs else FAIL
    return VerificationReport(check, params, status, timer(), str(lhs), str(rhs), note)


# individual cases


def braidsum_case(m: int) -> VerificationReport:
    timer = _Timer()
    lhs, rhs = braidsum_sides(m)
    return _compare("braidsum", {"m": m}, lhs, rhs, timer, "[m] P_m = Pi_m")


def mirror_inverse_case(degree: int) -> VerificationReport:
    timer = _Timer()
    product = series_mul(series_A(degree), series_A_mirror(degree))
    return _compare("mirror", {"M": degree}, product, SeriesC.one(degree), timer, "A(t) Abar(t) = 1")


def adiff_case(i: int, j: int) -> VerificationReport:
    timer = _Timer()
    lhs = a_ij(i, j - 1) - a_ij(i - 1, j)
    rhs = (braid_A(i) * braid_A(j).mirror()).scale(z)
    return _compare("adiff", {"i": i, "j": j}, lhs, rhs, timer, "A_{i,j-1} - A_{i-1,j} = z A_i Abar_j")


def endpoint_case(m: int) -> VerificationReport:
    timer = _Timer()
    try:
        chain = mixed_chain(m)
    except ArithmeticError as exc:
        return VerificationReport("adiff-endpoint", {"m": m}, FAIL, timer(), note=str(exc))
    return _compare("adiff-endpoint", {"m": m}, chain[-1], braid_A(m), timer, "A_{m-1,0} = A_m")


def murphy_sides(n: int, m: int) -> tuple[HeckeElem, HeckeElem, HeckeElem]:
    """(psi_n(P_m) - <P_m> Id, (s^m - s^-m) v^-m sum T(j)^m, psi_n(Pi_m)/[m])."""
    p_m = power_sum(m)
    via_h = thread_annulus(p_m, n)
    lhs = via_h - HeckeElem.identity(n).scale(evaluate(p_m))
    rhs = murphy_power_sum(m, n).scale((s ** m - s ** -m) * v ** -m)
    braids = HeckeElem.zero(n)
    for i in range(m):
        braids = braids + thread_braid(a_ij_word(i, m - 1 - i), m, n)
    via_braids = braids.scale(ONE / qint(m))
    return lhs, rhs, via_braids - via_h


def murphy_case(n: int, m: int) -> VerificationReport:
    timer = _Timer()
    params = {"n": n, "m": m}
    if n < 1 or m < 1:
        return VerificationReport("murphy", params, SKIP, timer(), note="degenerate parameters: need n >= 1 and m >= 1")
    lhs, rhs, route_gap = murphy_sides(n, m)
    report = _compare("murphy", params, lhs, rhs, timer,
                      "psi_n(P_m) - <P_m> Id = (s^m - s^-m) v^-m sum T(j)^m")
    if report.passed and not route_gap.is_zero():
        report.status = FAIL
        report.note += "; threading Pi_m/[m] disagrees with threading the h-polynomial of P_m"
    return report


def ah_case(n: int, m: int) -> VerificationReport:
    timer = _Timer()
    by_braid = thread_braid(list(range(m - 1, 0, -1)), m, n)
    by_series = thread_annulus(braid_A(m), n)
    return _compare("ah", {"n": n, "m": m}, by_braid, by_series, timer,
                    "psi_n(closure of sigma_{m-1}...sigma_1) = psi_n(A_m from H(st)/H(t/s))")


def _central(x: HeckeElem) -> bool:
    return x.commutes_with_generators()


def centrality_case(kind: str, n: int, k: int) -> VerificationReport:
    timer = _Timer()
    if kind == "P":
        x = thread_annulus(power_sum(k), n)
    elif kind == "h":
        x = thread_h(k, n)
    else:
        x = elementary_symmetric_murphy(k, n)
    ok = _central(x)
    return VerificationReport("centrality", {"element": kind, "n": n, "k": k}, PASS if ok else FAIL, timer(),
                              lhs=str(x) if not ok else "", note=f"{kind}_{k} commutes with every sigma_i in H_{n}")


def affine_relation(n: int) -> VerificationReport:
    """Solve T^(n) = a * sum T(j) + b * Id over the basis coefficients."""
    timer = _Timer()
    target = murphy_sum_element(n)
    jm = murphy_power_sum(1, n)
    ident = tuple(range(1, n + 1))
    a = None
    for perm, c in jm.terms.items():
        if perm != ident:
            a = target.coefficient(perm) / c
            break
    if a is None:
        # H_1: sum T(j) is the identity, so only a + b is determined
        a = Scalar.coerce(0)
    b = target.coefficient(ident) - a * jm.coefficient(ident)
    fitted = jm.scale(a) + HeckeElem.identity(n).scale(b)
    report = _compare("affine", {"n": n}, target, fitted, timer)
    report.note = f"a = {a}; b = {b}"
    return report


def alpha_case(i: int) -> VerificationReport:
    timer = _Timer()
    expected = s ** (i * (i - 1) // 2) * qfactorial(i)
    return _compare("alpha", {"i": i}, alpha(i), expected, timer, "a_i^2 = alpha_i a_i with alpha_i = s^{i(i-1)/2}[i]!")


def pm_evaluation_case(m: int) -> VerificationReport:
    timer = _Timer()
    oracle = Scalar.coerce(0)
    for i in range(m):
        oracle = oracle + braid_trace(a_ij_word(i, m - 1 - i), m)
    oracle = oracle / qint(m)
    via_h = evaluate(power_sum(m))
    closed_form = (v ** -m - v ** m) / (s ** m - s ** -m)
    report = _compare("pm-evaluation", {"m": m}, via_h, closed_form, timer,
                      "<P_m> = (v^-m - v^m)/(s^m - s^-m)")
    if oracle != closed_form:
        report.status = FAIL
        report.note += f"; trace oracle gave {oracle}"
    return report


def structure_case(name: str, seed: int, trials: int) -> VerificationReport:
    timer = _Timer()
    rng = random.Random(f"{seed}:{name}")
    failures = 0
    for _ in range(trials):
        if not STRUCTURE_PROPERTIES[name](rng):
            failures += 1
    return VerificationReport("structure", {"property": name, "seed": seed, "trials": trials},
                              PASS if failures == 0 else FAIL, timer(), note=f"{failures} failing instances")


# random instances for the structural suites


def random_word(rng: random.Random, n: int, length: int) -> list[int]:
    if n < 2:
        return []
    return [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)]


def random_hecke(rng: random.Random, n: int, terms: int = 3, length: int = 5) -> HeckeElem:
    total = HeckeElem.zero(n)
    for _ in range(terms):
        c = Scalar.coerce(rng.randint(-3, 3)) * v ** rng.randint(-2, 2) * s ** rng.randint(-2, 2)
        total = total + eval_word(random_word(rng, n, rng.randint(0, length)), n).scale(c)
    return total


def _prop_braid_relations(rng):
    n = rng.randint(3, 5)
    i = rng.randint(1, n - 2)
    j = rng.randint(1, n - 1)
    ok = eval_word([i, i + 1, i], n) == eval_word([i + 1, i, i + 1], n)
    if abs(i - j) >= 2:
        ok = ok and eval_word([i, j], n) == eval_word([j, i], n)
    return ok


def _prop_associativity(rng):
    n = rng.randint(2, 5)
    x, y, w = (random_hecke(rng, n, 2, 4) for _ in range(3))
    return x.mul(y).mul(w) == x.mul(y.mul(w))


def _prop_trace_symmetry(rng):
    n = rng.randint(1, 5)
    x, y = random_hecke(rng, n, 2, 5), random_hecke(rng, n, 2, 5)
    return markov_trace(x.mul(y)) == markov_trace(y.mul(x))


def _prop_conjugation(rng):
    n = rng.randint(2, 5)
    w = random_word(rng, n, rng.randint(0, 6))
    a = random_word(rng, n, rng.randint(1, 3))
    a_inv = [-x for x in reversed(a)]
    return braid_trace(a + w + a_inv, n) == braid_trace(w, n)


def _prop_stabilization(rng):
    n = rng.randint(1, 5)
    w = random_word(rng, n, rng.randint(0, 6))
    sign = rng.choice((1, -1))
    factor = v ** -1 if sign > 0 else v
    return braid_trace(w + [sign * n], n + 1) == braid_trace(w, n) * factor


def _prop_psi_homomorphism(rng):
    n = rng.randint(1, 4)
    x = tuple(sorted(rng.randint(1, 3) for _ in range(rng.randint(0, 2))))
    y = tuple(sorted(rng.randint(1, 3) for _ in range(rng.randint(0, 2))))
    from .threading_map import thread_monomial

    product = thread_annulus({tuple(sorted(x + y)): ONE}, n)
    return product == thread_monomial(x, n).mul(thread_monomial(y, n))


def _prop_mirror_involution(rng):
    from .annulus import AnnulusElem

    terms = {}
    for _ in range(rng.randint(1, 4)):
        mono = tuple(sorted(rng.randint(1, 4) for _ in range(rng.randint(0, 3))))
        terms[mono] = random_scalar(rng)
    x = AnnulusElem(terms)
    return x.mirror().mirror() == x


def _prop_bar_homomorphism(rng):
    x, y = random_scalar(rng), random_scalar(rng)
    return (x * y).bar() == x.bar() * y.bar() and (x + y).bar() == x.bar() + y.bar()


def random_scalar(rng: random.Random) -> Scalar:
    from .laurent import LaurentPoly

    num = LaurentPoly({(rng.randint(-3, 3), rng.randint(-3, 3)): rng.randint(-4, 4) for _ in range(rng.randint(1, 4))})
    out = Scalar.coerce(num)
    if rng.random() < 0.5:
        out = out / qint(rng.randint(1, 4))
    if rng.random() < 0.3:
        out = out * delta()
    if rng.random() < 0.2:
        out = out / rng.randint(1, 6)
    return out


STRUCTURE_PROPERTIES: dict[str, Callable[[random.Random], bool]] = {
    "braid-relations": _prop_braid_relations,
    "associativity": _prop_associativity,
    "trace-symmetry": _prop_trace_symmetry,
    "conjugation-invariance": _prop_conjugation,
    "framed-stabilization": _prop_stabilization,
    "psi-homomorphism": _prop_psi_homomorphism,
    "mirror-involution": _prop_mirror_involution,
    "bar-homomorphism": _prop_bar_homomorphism,
}


# plans


def plan_braidsum(m_max: int = 8) -> list[Case]:
    return [(braidsum_case, (m,)) for m in range(1, m_max + 1)]


def plan_mirror(degree: int = 8) -> list[Case]:
    return [(mirror_inverse_case, (degree,))]


def plan_adiff(degree: int = 8) -> list[Case]:
    cases: list[Case] = [(adiff_case, (i, j)) for i in range(1, degree) for j in range(1, degree - i + 1)]
    cases += [(endpoint_case, (m,)) for m in range(1, degree + 1)]
    return cases


def plan_murphy(bound: int = 7) -> list[Case]:
    return [(murphy_case, (n, m)) for n in range(1, bound) for m in range(1, bound - n + 1)]


def plan_ah(bound: int = 6) -> list[Case]:
    return [(ah_case, (n, m)) for n in range(0, bound) for m in range(1, bound - n + 1)]


def plan_centrality(bound: int = 6) -> list[Case]:
    cases: list[Case] = []
    for n in range(1, bound):
        cases += [(centrality_case, ("e", n, k)) for k in range(0, n + 1)]
        cases += [(centrality_case, ("h", n, i)) for i in range(1, bound - n + 1)]
        cases += [(centrality_case, ("P", n, i)) for i in range(1, bound - n + 1)]
    return cases


def plan_affine(n_max: int = 5) -> list[Case]:
    return [(affine_relation, (n,)) for n in range(1, n_max + 1)]


def plan_derived(alpha_max: int = 4, pm_max: int = 6) -> list[Case]:
    return [(alpha_case, (i,)) for i in range(1, alpha_max + 1)] + [
        (pm_evaluation_case, (m,)) for m in range(1, pm_max + 1)
    ]


def plan_structure(seed: int = 0, trials: int = 100) -> list[Case]:
    return [(structure_case, (name, seed, trials)) for name in STRUCTURE_PROPERTIES]


def plan_all(seed: int = 0) -> list[Case]:
    return (
        plan_braidsum()
        + plan_mirror()
        + plan_adiff()
        + plan_murphy()
        + plan_ah()
        + plan_centrality()
        + plan_affine()
        + plan_derived()
        + plan_structure(seed)
    )


def _run_case(case: Case) -> VerificationReport:
    fn, args = case
    return fn(*args)


def run_cases(cases: Sequence[Case], jobs: int = 1) -> list[VerificationReport]:
    if jobs <= 1 or len(cases) <= 1:
        return [_run_case(c) for c in cases]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_case, cases))


def check_braidsum(m_max: int = 8, jobs: int = 1) -> list[VerificationReport]:
    return run_cases(plan_braidsum(m_max), jobs)


def check_mirror_inverse(degree: int = 8, jobs: int = 1) -> list[VerificationReport]:
    return run_cases(plan_mirror(degree), jobs)


def check_adiff(degree: int = 8, jobs: int = 1) -> list[VerificationReport]:
    return run_cases(plan_adiff(degree), jobs)


def check_murphy(bound: int = 7, jobs: int = 1) -> list[VerificationReport]:
    return run_cases(plan_murphy(bound), jobs)


def check_ah_crosscheck(bound: int = 6, jobs: int = 1) -> list[VerificationReport]:
    return run_cases(plan_ah(bound), jobs)


def check_centrality(bound: int = 6, jobs: int = 1) -> list[VerificationReport]:
    return run_cases(plan_centrality(bound), jobs)


def write_report(reports: Iterable[VerificationReport], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for r in reports:
            fh.write(r.to_json() + "\n")


def summary_table(reports: Sequence[VerificationReport]) -> str:
    rows = [("check", "params", "status", "seconds")]
    for r in reports:
        params = " ".join(f"{k}={val}" for k, val in r.params.items())
        rows.append((r.check, params, r.status, f"{r.elapsed:.3f}"))
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    counts = {k: sum(1 for r in reports if r.status == k) for k in (PASS, FAIL, SKIP)}
    lines.append(f"\n{counts[PASS]} passed, {counts[FAIL]} failed, {counts[SKIP]} skipped")
    for r in reports:
        if r.status == FAIL:
            lines.append(f"\nFAILED {r.check} {r.params}: {r.note}\n  lhs: {r.lhs}\n  rhs: {r.rhs}")
    return "\n".join(lines)
