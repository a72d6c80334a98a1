"""One test per acceptance criterion, each running the full-scale verification plan.

A pass/fail line per criterion is printed at the end of the pytest run (see
conftest.py). Run this file directly to get the same lines without pytest.
"""

import time

import pytest

from hecke_skein import verify as V

CRITERIA = {
    1: ("[m] P_m equals the sum of mixed closed braids, m = 1..8", lambda: V.plan_braidsum(8)),
    2: ("A(t) Abar(t) = 1 modulo t^9", lambda: V.plan_mirror(8)),
    3: ("crossing-switch differences and recursion endpoints, i + j <= 8", lambda: V.plan_adiff(8)),
    4: ("Murphy power-sum identity for n + m <= 7", lambda: V.plan_murphy(7)),
    5: ("threaded A_m braids match the h-polynomial A_m for n + m <= 6", lambda: V.plan_ah(6)),
    6: ("threaded P_m, h_i and elementary symmetric T(j) are central, n <= 5", lambda: V.plan_centrality(6)),
    7: ("structural property suites, 100 seeded instances each", lambda: V.plan_structure(0, 100)),
    8: ("alpha_i, <P_m> and the affine span of T^(n)", lambda: V.plan_derived(4, 6) + V.plan_affine(5)),
}

# criterion -> (passed, summary); read by the terminal-summary hook
RESULTS: dict[int, tuple[bool, str]] = {}


def run_criterion(number: int) -> tuple[bool, str, list]:
    title, plan = CRITERIA[number]
    start = time.perf_counter()
    reports = V.run_cases(plan())
    elapsed = time.perf_counter() - start
    failed = [r for r in reports if r.status == V.FAIL]
    passed = not failed
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}  ({len(reports)} checks, {elapsed:.1f}s)"
    return passed, line, failed


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    passed, line, failed = run_criterion(number)
    RESULTS[number] = (passed, line)
    assert passed, "\n".join(f"{r.check} {r.params}: {r.note}\n  lhs: {r.lhs}\n  rhs: {r.rhs}" for r in failed)


if __name__ == "__main__":
    import sys

    ok = True
    for number in sorted(CRITERIA):
        passed, line, _ = run_criterion(number)
        ok &= passed
        print(line, flush=True)
    sys.exit(0 if ok else 1)
