"""Verdicts and replayable certificates for Gorenstein and WLP questions.

The prover is sound only: ``inconclusive`` never claims that an h-vector is
Gorenstein, it only reports that the obstructions here do not rule it out.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .decomposition import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    DecompositionState,
    ReplayError,
    RuleApplication,
    enumerate_decompositions,
    init_state,
    propagate,
    replay,
)
from .hvector import (
    CharAssumption,
    HVector,
    SocleType,
    binomial_shape,
    family_gorenstein_gap,
    is_o_sequence,
    is_symmetric,
)
from .macaulay import binom, macaulay_bound, mnz_h2_bound

__all__ = [
    "NOT_GORENSTEIN",
    "INCONCLUSIVE",
    "FORCED_WLP",
    "WLP_UNKNOWN",
    "NOT_LEVEL",
    "Verdict",
    "Certificate",
    "H2Check",
    "analyze_gorenstein",
    "analyze_family_thm10",
    "analyze_socle5_cod14",
    "analyze_socle6_cod18",
    "wlp_analyze",
    "h2_lower_bound_check",
    "enumerate_candidates",
    "verify_certificate",
]

NOT_GORENSTEIN = "not-gorenstein"
INCONCLUSIVE = "inconclusive"
FORCED_WLP = "forced-wlp"
WLP_UNKNOWN = "wlp-unknown"
NOT_LEVEL = "not-level"
BELOW_MNZ = "below-mnz-bound"

PRECHECK_ANCHORS = {
    "OSequence": "Macaulay's theorem: h_{d+1} <= ((h_d)_(d))^1_1 for every Hilbert function",
    "Symmetry": "Gorenstein h-vectors are symmetric: h_i = h_{e-i}",
}

WLP_RULES = {
    "W1": "Gorenstein, char != 2, h_1 = e >= 3 and h_2 = e: then c = (1, e-1, 0, ..., 0) and WLP holds",
    "W2": "level, char != 2, codim >= 3, h_{d-1} <= h_d = d+1 in the socle degree d: WLP holds",
    "W3": "Gorenstein, char != 2, h = (1,4,a,4,1): WLP holds",
    "W4": "level, char != 2, h_d = C(m+d,d) and h_{d-1} = C(m+d-1,d-1)+1: injective up to degree d",
}


@dataclass
class Certificate:
    h: HVector
    char: CharAssumption
    socle: SocleType
    verdict: str
    steps: list = field(default_factory=list)  # RuleApplication, or dict for prechecks
    conclusion: str = ""
    plane_curve_gate: str = "appendix"
    wlp_rule: Optional[str] = None

    def to_dict(self) -> dict:
        steps = [s.to_dict() if isinstance(s, RuleApplication) else dict(s) for s in self.steps]
        out = {
            "h": list(self.h.entries),
            "char": str(self.char),
            "socle": str(self.socle),
            "verdict": self.verdict,
            "steps": steps,
            "conclusion": self.conclusion,
            "plane_curve_gate": self.plane_curve_gate,
        }
        if self.wlp_rule:
            out["wlp_rule"] = self.wlp_rule
        return out

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        steps = []
        for raw in data["steps"]:
            if raw["rule"] in PRECHECK_ANCHORS:
                steps.append(dict(raw))
            else:
                steps.append(RuleApplication.from_dict(raw))
        return cls(
            HVector(data["h"]),
            CharAssumption.parse(data["char"]),
            SocleType.parse(data.get("socle", "gorenstein")),
            data["verdict"],
            steps,
            data.get("conclusion", ""),
            data.get("plane_curve_gate", "appendix"),
            data.get("wlp_rule"),
        )

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))


@dataclass
class Verdict:
    tag: str
    certificate: Optional[Certificate] = None
    witnesses: Optional[list] = None
    wlp_rule: Optional[str] = None
    # last source degree i for which L: A_i -> A_{i+1} is forced to have maximal rank
    wlp_through: Optional[int] = None
    note: str = ""

    @property
    def decided(self) -> bool:
        return self.tag in (NOT_GORENSTEIN, FORCED_WLP, NOT_LEVEL)


# -- Gorenstein analysis ------------------------------------------------------


def _precheck(h: HVector, char: CharAssumption, gate: str) -> Optional[Verdict]:
    gor = SocleType.gorenstein()
    for d in range(1, h.socle_degree):
        bound = macaulay_bound(h[d], d)
        if h[d + 1] > bound:
            step = {
                "rule": "OSequence",
                "degree": d + 1,
                "before": None,
                "after": None,
                "anchor": PRECHECK_ANCHORS["OSequence"],
                "detail": f"h_{d + 1} = {h[d + 1]} > (({h[d]})_({d}))^1_1 = {bound}",
            }
            cert = Certificate(h, char, gor, NOT_GORENSTEIN, [step], "not an O-sequence, so not a Hilbert function", gate)
            return Verdict(NOT_GORENSTEIN, cert)
    if not is_symmetric(h):
        i = next(i for i in range(h.socle_degree + 1) if h[i] != h[h.socle_degree - i])
        step = {
            "rule": "Symmetry",
            "degree": i,
            "before": None,
            "after": None,
            "anchor": PRECHECK_ANCHORS["Symmetry"],
            "detail": f"h_{i} = {h[i]} but h_{h.socle_degree - i} = {h[h.socle_degree - i]}",
        }
        cert = Certificate(h, char, gor, NOT_GORENSTEIN, [step], "not symmetric, so not Gorenstein", gate)
        return Verdict(NOT_GORENSTEIN, cert)
    return None


def analyze_gorenstein(
    h: HVector,
    char: CharAssumption = CharAssumption("zero"),
    witnesses: int = 10,
    budget: int = DEFAULT_BUDGET,
    plane_curve_gate: str = "appendix",
) -> Verdict:
    """Try to prove that no Gorenstein algebra has h-vector ``h`` over the given characteristic."""
    if not isinstance(h, HVector):
        h = HVector(h)
    pre = _precheck(h, char, plane_curve_gate)
    if pre is not None:
        return pre
    state = propagate(init_state(h, SocleType.gorenstein(), char, plane_curve_gate))
    if state.is_empty:
        last = state.trace[-1]
        cert = Certificate(
            h,
            char,
            SocleType.gorenstein(),
            NOT_GORENSTEIN,
            list(state.trace),
            f"c_{last.degree} has no admissible value after {last.rule_id}: no decomposition h = b + c exists, "
            f"so {h} is not a Gorenstein h-vector ({char} characteristic)",
            plane_curve_gate,
        )
        return Verdict(NOT_GORENSTEIN, cert)
    found = None
    if witnesses:
        try:
            found = enumerate_decompositions(state, cap=witnesses, budget=budget)
        except BudgetExceeded:
            found = None
    return Verdict(INCONCLUSIVE, None, found, note=state.summary())


@dataclass
class FamilyEntry:
    params: dict
    h: HVector
    verdict: Verdict


def analyze_family_thm10(m_max: int, char: CharAssumption = CharAssumption("not-two")) -> list[FamilyEntry]:
    """``(1, C(m+3,3), (m+1)^2, C(m+3,3), 1)`` for m = 2..m_max."""
    if m_max < 2:
        raise ValueError(f"the family starts at m = 2, got m_max = {m_max}")
    out = []
    for m in range(2, m_max + 1):
        h = family_gorenstein_gap(m)
        out.append(FamilyEntry({"m": m}, h, analyze_gorenstein(h, char, witnesses=0)))
    return out


def analyze_socle5_cod14(
    char: CharAssumption = CharAssumption("zero"), a_values=range(1, 14)
) -> list[FamilyEntry]:
    """Non-unimodal ``(1,14,a,a,14,1)`` (a <= 13) that are O-sequences."""
    out = []
    for a in a_values:
        h = HVector((1, 14, a, a, 14, 1))
        if is_o_sequence(h):
            out.append(FamilyEntry({"a": a}, h, analyze_gorenstein(h, char, witnesses=0)))
    return out


def analyze_socle6_cod18(char: CharAssumption = CharAssumption("zero"), a_max: int = 17) -> list[FamilyEntry]:
    """``(1,18,a,t,a,18,1)`` with a <= a_max and every t keeping it an O-sequence."""
    out = []
    for a in range(1, a_max + 1):
        for t in range(1, macaulay_bound(a, 2) + 1):
            h = HVector((1, 18, a, t, a, 18, 1))
            if is_o_sequence(h):
                out.append(FamilyEntry({"a": a, "t": t}, h, analyze_gorenstein(h, char, witnesses=0)))
    return out


# -- certificate checking ------------------------------------------------------


def verify_certificate(cert: Certificate) -> DecompositionState | None:
    """Re-derive every step of ``cert``; raise ReplayError unless it proves the stated verdict."""
    h = cert.h
    if cert.steps and isinstance(cert.steps[0], dict):
        # precheck certificate
        step = cert.steps[0]
        if step["rule"] == "OSequence":
            d = step["degree"]
            if not (2 <= d <= h.socle_degree and h[d] > macaulay_bound(h[d - 1], d - 1)):
                raise ReplayError("O-sequence violation does not hold")
        elif step["rule"] == "Symmetry":
            i = step["degree"]
            if h[i] == h[h.socle_degree - i]:
                raise ReplayError("symmetry violation does not hold")
        else:
            raise ReplayError(f"unknown precheck {step['rule']!r}")
        if cert.verdict != NOT_GORENSTEIN:
            raise ReplayError("precheck certificates only prove not-gorenstein")
        return None
    start = init_state(h, cert.socle, cert.char, cert.plane_curve_gate)
    state = replay(start, cert.steps)
    if cert.verdict in (NOT_GORENSTEIN, NOT_LEVEL):
        if not state.is_empty:
            raise ReplayError("trace does not end in an empty state")
    elif cert.verdict == FORCED_WLP:
        if state.is_empty:
            raise ReplayError("trace is empty; the hypothesis is vacuous")
        through = _forced_through(state)
        if through is None or (cert.wlp_rule in ("W1", "W2", "W3") and through < h.socle_degree - 1):
            raise ReplayError("replayed state does not force maximal rank")
    else:
        raise ReplayError(f"verdict {cert.verdict!r} carries no certificate")
    return state


# -- weak Lefschetz -----------------------------------------------------------


def _forced_maps(state: DecompositionState) -> list[bool]:
    """forced[i]: L: A_i -> A_{i+1} has maximal rank for every admissible c."""
    h = state.h
    out = []
    for i in range(state.e):
        lo, hi = state.c[i + 1]
        # rank = h_{i+1} - c_{i+1} reaches min(h_i, h_{i+1}) iff c_{i+1} <= max(h_{i+1} - h_i, 0)
        out.append(hi <= max(h[i + 1] - h[i], 0))
    return out


def _forced_through(state: DecompositionState) -> Optional[int]:
    forced = _forced_maps(state)
    h = state.h
    zero_through = state.socle.zero_socle_through(state.e)
    # injectivity into degree j pulls back along zero socle in degrees below
    for j in range(len(forced) - 1, -1, -1):
        if forced[j] and h[j] <= h[j + 1]:
            for i in range(j - 1, -1, -1):
                if i <= zero_through:
                    forced[i] = True
                else:
                    break
            break
    through = None
    for i, ok in enumerate(forced):
        if not ok:
            break
        through = i
    return through


def _w1_applies(h: HVector) -> bool:
    e = h.socle_degree
    return e >= 3 and h[1] == e and h[2] == e


def _w3_applies(h: HVector) -> bool:
    return h.socle_degree == 4 and h[1] == 4 and h[3] == 4 and h[4] == 1


def _w2_applies(h: HVector) -> bool:
    e = h.socle_degree
    return e >= 2 and h[1] >= 3 and h[e] == e + 1 and h[e - 1] <= h[e]


def _w4_degree(h: HVector, zero_through: int) -> Optional[int]:
    for d in range(min(h.socle_degree, zero_through + 1), 1, -1):
        m = binomial_shape(h[d], d)
        if m is not None and h[d - 1] == binom(m + d - 1, d - 1) + 1:
            return d
    return None


def wlp_analyze(
    h: HVector,
    socle: SocleType = SocleType.gorenstein(),
    char: CharAssumption = CharAssumption("not-two"),
    plane_curve_gate: str = "appendix",
) -> Verdict:
    """Decide whether the WLP is forced for every algebra with h-vector ``h`` and this socle type."""
    if not isinstance(h, HVector):
        h = HVector(h)
    if not char.excludes_two():
        return Verdict(WLP_UNKNOWN, note="every WLP rule here needs char != 2")
    if not is_o_sequence(h):
        return Verdict(WLP_UNKNOWN, note=f"{h} is not an O-sequence")
    e = h.socle_degree
    if socle.is_gorenstein:
        g = analyze_gorenstein(h, char, witnesses=0, plane_curve_gate=plane_curve_gate)
        if g.tag == NOT_GORENSTEIN:
            g.note = "no Gorenstein algebra has this h-vector, so the WLP claim is vacuous"
            return g
        rule = "W1" if _w1_applies(h) else "W3" if _w3_applies(h) else None
        if rule is not None:
            state = propagate(init_state(h, socle, char, plane_curve_gate))
            through = _forced_through(state)
            if through == e - 1:
                cert = Certificate(
                    h, char, socle, FORCED_WLP, list(state.trace),
                    f"rule {rule}: {WLP_RULES[rule]}; forced c = {state.forced_c() or state.c}", plane_curve_gate, rule,
                )
                return Verdict(FORCED_WLP, cert, wlp_rule=rule, wlp_through=through)
    if not (socle.is_level or socle.tag == "zero-below"):
        return Verdict(WLP_UNKNOWN, note="W2 and W4 need a level or zero-socle hypothesis")
    zero_through = socle.zero_socle_through(e)
    level_socle = SocleType.level() if socle.is_level else socle
    state = propagate(init_state(h, level_socle, char, plane_curve_gate))
    if state.is_empty:
        cert = Certificate(
            h, char, level_socle, NOT_LEVEL, list(state.trace),
            f"no decomposition exists: no algebra with socle type {level_socle} has h-vector {h}", plane_curve_gate,
        )
        return Verdict(NOT_LEVEL, cert)
    candidates = []
    if socle.is_level and _w2_applies(h):
        candidates.append("W2")
    if _w4_degree(h, zero_through) is not None:
        candidates.append("W4")
    through = _forced_through(state)
    for rule in candidates:
        if rule == "W2" and through != e - 1:
            continue
        if rule == "W4" and (through is None or through < _w4_degree(h, zero_through) - 1):
            continue
        cert = Certificate(
            h, char, level_socle, FORCED_WLP, list(state.trace),
            f"rule {rule}: {WLP_RULES[rule]}; maximal rank forced from degree 0 through degree {through}",
            plane_curve_gate, rule,
        )
        return Verdict(FORCED_WLP, cert, wlp_rule=rule, wlp_through=through)
    return Verdict(WLP_UNKNOWN, note="no WLP rule applies")


# -- MNZ bound and batch enumeration ----------------------------------------


@dataclass(frozen=True)
class H2Check:
    passed: bool
    bound: int


def h2_lower_bound_check(h: HVector) -> H2Check:
    """Compare ``h_2`` with the lower bound every Gorenstein h-vector must meet."""
    if h.socle_degree < 2:
        raise ValueError("the h_2 bound needs socle degree e >= 2")
    bound = mnz_h2_bound(h[1], h.socle_degree)
    return H2Check(h[2] >= bound, bound)


@dataclass
class Candidate:
    h: HVector
    label: str
    verdict: Optional[Verdict] = None
    mnz_bound: Optional[int] = None


def _symmetric_o_sequences(r: int, e: int, budget: int):
    half = e // 2
    count = 0

    def grow(prefix):
        nonlocal count
        i = len(prefix)
        if i > half:
            mirror = prefix[: e + 1 - len(prefix)][::-1]
            h = tuple(prefix) + tuple(mirror)
            if is_o_sequence(h):
                count += 1
                if count > budget:
                    raise BudgetExceeded(f"more than {budget} candidates")
                yield HVector(h)
            return
        for v in range(1, macaulay_bound(prefix[-1], i - 1) + 1):
            yield from grow(prefix + [v])

    if e == 1:
        if r == 1:
            yield HVector((1, 1))
        return
    yield from grow([1, r])


def enumerate_candidates(
    r: int, e: int, char: CharAssumption = CharAssumption("zero"), budget: int = 100_000
) -> list[Candidate]:
    """Classify every symmetric O-sequence ``(1, r, ..., r, 1)`` of socle degree e."""
    if r < 1 or e < 1:
        raise ValueError("need codimension r >= 1 and socle degree e >= 1")
    out = []
    for h in _symmetric_o_sequences(r, e, budget):
        if e >= 2:
            check = h2_lower_bound_check(h)
            if not check.passed:
                out.append(Candidate(h, BELOW_MNZ, None, check.bound))
                continue
        v = analyze_gorenstein(h, char, witnesses=0)
        out.append(Candidate(h, v.tag, v, mnz_h2_bound(r, e) if e >= 2 else None))
    return out
