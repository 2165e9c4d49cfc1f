from __future__ import annotations

import json
import random

import pytest

from greenhv import oracle
from greenhv.decomposition import ReplayError
from greenhv.hvector import CharAssumption, HVector, SocleType, family_gorenstein_gap
from greenhv.prover import (
    BELOW_MNZ,
    FORCED_WLP,
    INCONCLUSIVE,
    NOT_GORENSTEIN,
    NOT_LEVEL,
    WLP_UNKNOWN,
    Certificate,
    analyze_family_thm10,
    analyze_gorenstein,
    analyze_socle5_cod14,
    analyze_socle6_cod18,
    enumerate_candidates,
    h2_lower_bound_check,
    verify_certificate,
    wlp_analyze,
)

NOT_TWO = CharAssumption("not-two")
ZERO = CharAssumption("zero")


def test_family_member_and_neighbour():
    v = analyze_gorenstein(HVector((1, 10, 9, 10, 1)), NOT_TWO)
    assert v.tag == NOT_GORENSTEIN and v.decided
    assert v.certificate.steps[-1].rule_id == "SymmetryLink"
    w = analyze_gorenstein(HVector((1, 11, 10, 11, 1)), NOT_TWO)
    assert w.tag == INCONCLUSIVE and not w.decided
    assert w.witnesses == [((1, 7, 7, 1), (1, 10, 3, 4, 0))]


def test_prechecks():
    v = analyze_gorenstein(HVector((1, 3, 7, 3, 1)))
    assert v.tag == NOT_GORENSTEIN and v.certificate.steps[0]["rule"] == "OSequence"
    v = analyze_gorenstein(HVector((1, 4, 3, 3, 1)))
    assert v.tag == NOT_GORENSTEIN and v.certificate.steps[0]["rule"] == "Symmetry"
    verify_certificate(v.certificate)
    forged = Certificate.from_dict({**v.certificate.to_dict(), "h": [1, 4, 6, 4, 1]})
    with pytest.raises(ReplayError):
        verify_certificate(forged)
    bogus = v.certificate.to_dict()
    bogus["steps"][0]["rule"] = "Vibes"
    with pytest.raises((ReplayError, KeyError)):
        verify_certificate(Certificate.from_dict(bogus))


def test_certificate_roundtrip_and_verification():
    v = analyze_gorenstein(HVector((1, 14, 13, 13, 14, 1)), ZERO)
    cert = v.certificate
    back = Certificate.from_json(cert.to_json())
    assert back.to_dict() == cert.to_dict()
    verify_certificate(back)
    data = json.loads(cert.to_json())
    data["steps"][2]["after"][1] -= 1
    with pytest.raises(ReplayError):
        verify_certificate(Certificate.from_dict(data))
    data = json.loads(cert.to_json())
    data["steps"] = data["steps"][:-1]
    with pytest.raises(ReplayError):
        verify_certificate(Certificate.from_dict(data))


def test_family_char_gating():
    entries = analyze_family_thm10(6, NOT_TWO)
    assert [e.h for e in entries] == [family_gorenstein_gap(m) for m in range(2, 7)]
    assert all(e.verdict.tag == NOT_GORENSTEIN for e in entries)
    arb = analyze_family_thm10(6, CharAssumption("arbitrary"))
    assert all(e.verdict.tag == INCONCLUSIVE for e in arb)


def test_socle5_and_socle6():
    for e in analyze_socle5_cod14():
        assert e.verdict.tag == NOT_GORENSTEIN, e.h
    six = analyze_socle6_cod18()
    assert len(six) > 50
    assert all(e.verdict.tag == NOT_GORENSTEIN for e in six)


def test_h2_bound():
    assert h2_lower_bound_check(HVector((1, 10, 9, 10, 1))).passed
    chk = h2_lower_bound_check(HVector((1, 10, 8, 10, 1)))
    assert not chk.passed and chk.bound == 9


def test_enumerate_candidates_codim10():
    rows = enumerate_candidates(10, 4)
    labels = {r.h[2]: r.label for r in rows}
    assert labels[6] == labels[7] == labels[8] == BELOW_MNZ
    assert labels[9] == NOT_GORENSTEIN
    assert labels[10] == INCONCLUSIVE
    # h_3 = 10 needs h_2 >= 6 by Macaulay growth
    assert min(labels) == 6 and max(labels) == 55


@pytest.mark.parametrize(
    "h,socle,char,tag,rule",
    [
        ((1, 3, 3, 1), "gorenstein", "not-two", FORCED_WLP, "W1"),
        ((1, 3, 3, 1), "gorenstein", "exactly:2", WLP_UNKNOWN, None),
        ((1, 4, 6, 4, 1), "gorenstein", "not-two", FORCED_WLP, "W3"),
        ((1, 3, 4, 4), "level", "zero", FORCED_WLP, "W2"),
        ((1, 4, 7, 11, 15), "level", "zero", FORCED_WLP, "W4"),
        ((1, 3, 3, 4), "level", "zero", NOT_LEVEL, None),
        ((1, 4, 3, 4, 1), "gorenstein", "zero", NOT_GORENSTEIN, None),
    ],
)
def test_wlp_analyze(h, socle, char, tag, rule):
    v = wlp_analyze(HVector(h), SocleType.parse(socle), CharAssumption.parse(char))
    assert v.tag == tag
    assert v.wlp_rule == rule


def test_w4_through_degree():
    v = wlp_analyze(HVector((1, 4, 7, 11, 15)), SocleType.level(), ZERO)
    assert v.wlp_through == 3


def test_wlp_prover_agrees_with_oracle():
    # (x^2, y^2, z^2) is Gorenstein with h = (1,3,3,1); WLP proved for char != 2, fails over F_2
    A2 = oracle.QuotientAlgebra(oracle.parse_ideal("x^2, y^2, z^2", 3), oracle.FieldSpec(2))
    A3 = oracle.QuotientAlgebra(oracle.parse_ideal("x^2, y^2, z^2", 3), oracle.FieldSpec(3))
    assert not oracle.wlp_test(A2).has_wlp
    assert oracle.wlp_test(A3, trials=40).has_wlp
    h = A2.hilbert.hvector
    assert wlp_analyze(h, SocleType.gorenstein(), CharAssumption.parse("exactly:2")).tag == WLP_UNKNOWN
    assert wlp_analyze(h, SocleType.gorenstein(), CharAssumption.parse("exactly:3")).tag == FORCED_WLP


def test_forced_wlp_is_never_contradicted_on_monomial_level_algebras():
    # every map the prover declares forced must have maximal rank for a general form
    rng = random.Random(1)
    checked = 0
    for ideal in oracle.ideal_catalog(300, seed=5):
        A = oracle.QuotientAlgebra(ideal, oracle.FieldSpec(0), 6)
        if not A.hilbert.artinian or len(A.hilbert.values) < 3:
            continue
        soc = oracle.socle_vector(A)
        if any(soc[:-1]):
            continue
        h = A.hilbert.hvector
        socle = SocleType.gorenstein() if soc[-1] == 1 else SocleType.level()
        v = wlp_analyze(h, socle, ZERO)
        assert v.tag not in (NOT_LEVEL, NOT_GORENSTEIN)
        if v.tag == FORCED_WLP:
            checked += 1
            L = oracle.random_linear_form(h.codim, 0, rng)
            for i in range(v.wlp_through + 1):
                assert oracle.multiplication_rank(A, L, i + 1) == min(h[i], h[i + 1]), (h, i)
    assert checked >= 1
