"""Acceptance gate: nine criteria, each with its own time limit.

Every criterion prints one ``PASS``/``FAIL`` line (collected in the terminal
summary by ``conftest.py``).  Run alone with ``pytest tests/test_acceptance.py``.
"""
from __future__ import annotations

import random
import time
from contextlib import contextmanager

import pytest

from greenhv import oracle
from greenhv.decomposition import enumerate_decompositions, init_state, propagate
from greenhv.hvector import CharAssumption, HVector, SocleType, is_o_sequence
from greenhv.macaulay import binom, green_bound, macaulay_bound, mnz_h2_bound
from greenhv.prover import (
    FORCED_WLP,
    INCONCLUSIVE,
    NOT_GORENSTEIN,
    WLP_UNKNOWN,
    _symmetric_o_sequences,
    analyze_family_thm10,
    analyze_gorenstein,
    verify_certificate,
    wlp_analyze,
)

RESULTS: list[str] = []

ZERO = CharAssumption("zero")
NOT_TWO = CharAssumption("not-two")
ARBITRARY = CharAssumption("arbitrary")


@contextmanager
def criterion(number: int, title: str, limit: float):
    start = time.perf_counter()
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        ok = elapsed < limit
        if not ok:
            detail = f" (over the {limit:g}s limit)"
    except AssertionError as exc:
        elapsed = time.perf_counter() - start
        ok = False
        detail = f" ({exc})" if str(exc) else ""
        line = f"[criterion {number}] FAIL  {title}  {elapsed:.2f}s{detail}"
        RESULTS.append(line)
        print(line)
        raise
    line = f"[criterion {number}] {'PASS' if ok else 'FAIL'}  {title}  {elapsed:.2f}s{detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_criterion_1_operator_values():
    with criterion(1, "operator values", 1.0):
        assert green_bound(14, 4) == 4
        assert green_bound(18, 5) == 4
        for e in range(3, 13):
            assert green_bound(e, e - 1) == 1, e
        for m in range(2, 9):
            assert mnz_h2_bound(binom(m + 3, 3), 4) == (m + 1) ** 2, m
        for m in range(2, 21):
            assert macaulay_bound(binom(m + 1, 2) - 1, 2) == binom(m + 2, 3) - m, m


def test_criterion_2_smallest_cases():
    with criterion(2, "(1,10,9,10,1) not Gorenstein, (1,11,10,11,1) undecided", 1.0):
        first = analyze_gorenstein(HVector((1, 10, 9, 10, 1)), NOT_TWO)
        assert first.tag == NOT_GORENSTEIN
        verify_certificate(first.certificate)
        rules = [s.rule_id for s in first.certificate.steps]
        assert "GreenCap" in rules and "LinearSpaceRigidity" in rules
        second = analyze_gorenstein(HVector((1, 11, 10, 11, 1)), NOT_TWO)
        assert second.tag == INCONCLUSIVE
        assert second.witnesses
        # both sit exactly on the h_2 lower bound
        assert mnz_h2_bound(10, 4) == 9 and mnz_h2_bound(11, 4) == 10


def test_criterion_3_family_gating():
    with criterion(3, "family m=2..10: not-two decides, arbitrary does not", 5.0):
        for entry in analyze_family_thm10(10, NOT_TWO):
            assert entry.verdict.tag == NOT_GORENSTEIN, entry.h
            verify_certificate(entry.verdict.certificate)
        for entry in analyze_family_thm10(10, ARBITRARY):
            assert entry.verdict.tag == INCONCLUSIVE, entry.h


def test_criterion_4_codim14_and_codim18():
    with criterion(4, "(1,14,a,a,14,1) and (1,18,a,t,a,18,1) not Gorenstein", 30.0):
        five = 0
        for a in range(1, 14):
            h = (1, 14, a, a, 14, 1)
            if not is_o_sequence(h):
                continue
            five += 1
            v = analyze_gorenstein(HVector(h), ZERO)
            assert v.tag == NOT_GORENSTEIN, h
        assert five > 0
        six = 0
        for a in range(1, 18):
            for t in range(1, macaulay_bound(a, 2) + 1):
                h = (1, 18, a, t, a, 18, 1)
                if not is_o_sequence(h):
                    continue
                six += 1
                v = analyze_gorenstein(HVector(h), ZERO)
                assert v.tag == NOT_GORENSTEIN, h
        assert six > 0


def test_criterion_5_propagation_matches_enumerator():
    with criterion(5, "propagate-Empty == enumerator-empty, symmetric e<=5, entries<=20", 600.0):
        cases = 0
        for char in (ZERO, NOT_TWO, ARBITRARY, CharAssumption.parse("exactly:3")):
            for e in range(1, 6):
                for r in range(1, 21):
                    for h in _symmetric_o_sequences(r, e, 10**6):
                        if max(h) > 20:
                            continue
                        cases += 1
                        s = init_state(h, SocleType.gorenstein(), char)
                        empty = propagate(s).is_empty
                        found = enumerate_decompositions(s, cap=1)
                        assert empty == (not found), (str(h), str(char))
        assert cases > 1000


def test_criterion_6_wlp_ground_truth():
    with criterion(6, "WLP of (x^2,y^2,z^2) over F_2, F_101, Q and the prover", 5.0):
        ideal = oracle.parse_ideal("x^2, y^2, z^2", 3)
        f2 = oracle.wlp_test(oracle.QuotientAlgebra(ideal, oracle.FieldSpec(2)), trials=20)
        assert not f2.has_wlp and f2.exhaustive and f2.forms_tested == 7
        assert oracle.wlp_test(oracle.QuotientAlgebra(ideal, oracle.FieldSpec(101))).has_wlp
        assert oracle.wlp_test(oracle.QuotientAlgebra(ideal, oracle.FieldSpec(0))).has_wlp
        h = HVector((1, 3, 3, 1))
        assert wlp_analyze(h, SocleType.gorenstein(), NOT_TWO).tag == FORCED_WLP
        # the prover must not claim WLP where the oracle refutes it
        assert wlp_analyze(h, SocleType.gorenstein(), CharAssumption.parse("exactly:2")).tag == WLP_UNKNOWN
        assert wlp_analyze(h, SocleType.gorenstein(), ARBITRARY).tag == WLP_UNKNOWN


def test_criterion_7_positive_characteristic_counterexample():
    with criterion(7, "codim W and codim W_H for (2,2,0), (3,3,0), (2,3,1)", 5.0):
        for p, d, g in ((2, 2, 0), (3, 3, 0), (2, 3, 1)):
            rep = oracle.charp_theorem4_counterexample(p, d, g, seed=0, samples=20)
            assert rep.codim_W == binom(d + 2, 2) - 3, (p, d, g)
            assert len(rep.restrictions) == 20
            assert all(codim == d - 1 for _, _, codim in rep.restrictions), (p, d, g)


def test_criterion_8_macaulay_sharpness():
    with criterion(8, "lex growth attains the Macaulay bound", 60.0):
        for d in range(1, 5):
            for n in range(1, 61):
                assert oracle.lex_growth(n, d, n) == macaulay_bound(n, d), (n, d)
                for r in range(1, n):
                    if n <= binom(r + d - 1, d):
                        assert oracle.lex_growth(n, d, r) <= macaulay_bound(n, d), (n, d, r)


def test_criterion_9_green_bound_suite():
    with criterion(9, "restriction <= Green bound, 500 ideals x 20 forms, degrees <= 6", 300.0):
        rng = random.Random(2024)
        violations = []
        for ideal in oracle.ideal_catalog(500):
            A = oracle.QuotientAlgebra(ideal, oracle.FieldSpec(0), 6)
            for _ in range(20):
                L = oracle.random_linear_form(ideal.num_vars, 0, rng)
                for d in range(1, 7):
                    hd = len(A.basis(d))
                    if hd == 0:
                        break
                    got = oracle.restriction_dimension(A, L, d)
                    if got > green_bound(hd, d):
                        violations.append((ideal.format(), d))
        assert not violations, violations[:5]


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
