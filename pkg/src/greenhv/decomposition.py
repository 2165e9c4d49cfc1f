"""Stanley decomposition ``h = b + c`` as an interval constraint system.

For a general linear form L, ``c`` is the h-vector of ``A/(L)`` and ``b``
(indices shifted by one) that of ``R/(I:L)``.  Only the ``c`` intervals are
stored; ``b_i = h_i - c_i`` mirrors them.

Every constraint used here is closed under componentwise maximum of the
``c`` vector (caps, ``y <= f(x)`` and ``y >= g(x)`` with f, g nondecreasing,
and the symmetry equalities).  So once bounds propagation stops without an
empty interval, the vector of upper bounds is itself a solution: ``propagate``
reports Empty exactly when ``enumerate_decompositions`` finds nothing.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Optional

from .hvector import (
    CharAssumption,
    HVector,
    SocleType,
    binomial_shape,
    is_o_sequence,
    plane_curve_prefix,
    plane_curve_shape,
)
from .macaulay import binom, green_bound, inverse_macaulay, macaulay_bound

__all__ = [
    "Interval",
    "RuleApplication",
    "DecompositionState",
    "BudgetExceeded",
    "ReplayError",
    "RULE_ORDER",
    "ANCHORS",
    "init_state",
    "rule_nonnegativity",
    "rule_symmetry_link",
    "rule_green_cap",
    "rule_linear_space_rigidity",
    "rule_plane_curve_rigidity",
    "rule_macaulay_growth_c",
    "rule_macaulay_growth_b",
    "propagate",
    "replay",
    "enumerate_decompositions",
    "unary_caps",
    "trace_to_json",
]

Interval = tuple[int, int]

DEFAULT_BUDGET = 2_000_000

ANCHORS = {
    "NonNegativity": (
        "Stanley decomposition: b and c are h-vectors (c_i >= 0, b_i >= 1) and b_i, the rank of "
        "multiplication by L from degree i-1, is at most h_{i-1}"
    ),
    "SymmetryLink": "Stanley decomposition: b is the h-vector of the Gorenstein algebra R/(I:L), so b_i = b_{e+1-i}",
    "GreenCap": "Green's hyperplane restriction theorem: h'_d <= ((h_d)_(d))^{-1}_0",
    "LinearSpaceRigidity": (
        "Green's linear-space restriction theorem (char != 2): h_d = C(m+d,d), h'_d = C(m-1+d,d) "
        "and zero socle below d force h_i = C(m+i,i) for all i <= d"
    ),
    "PlaneCurveRigidity": (
        "Green's plane-curve restriction theorem (char 0 or large): h_d = C(d+2,2) - C(d-m+2,2), h'_d = m "
        "and zero socle below d force h_i = C(i+2,2) - C(i-m+2,2) for all i <= d"
    ),
    "MacaulayGrowthC": "Macaulay's theorem for c: c_{d+1} <= ((c_d)_(d))^1_1",
    "MacaulayGrowthB": "Macaulay's theorem for b (shifted by one): b_{i+1} <= ((b_i)_(i-1))^1_1",
}

RULE_ORDER = (
    "NonNegativity",
    "SymmetryLink",
    "GreenCap",
    "LinearSpaceRigidity",
    "PlaneCurveRigidity",
    "MacaulayGrowthC",
    "MacaulayGrowthB",
)

PLANE_CURVE_GATES = ("appendix", "footnote")


class BudgetExceeded(RuntimeError):
    """The exhaustive search space is larger than the configured budget."""


class ReplayError(ValueError):
    """A recorded trace does not reproduce."""


@dataclass(frozen=True)
class RuleApplication:
    rule_id: str
    degree: int
    before: Interval
    after: Interval
    detail: str = ""

    @property
    def anchor(self) -> str:
        return ANCHORS[self.rule_id]

    def to_dict(self) -> dict:
        return {
            "rule": self.rule_id,
            "degree": self.degree,
            "before": list(self.before),
            "after": list(self.after),
            "anchor": self.anchor,
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RuleApplication":
        if data["rule"] not in ANCHORS:
            raise ReplayError(f"unknown rule {data['rule']!r}")
        return cls(
            data["rule"],
            int(data["degree"]),
            tuple(data["before"]),
            tuple(data["after"]),
            data.get("detail", ""),
        )


@dataclass(frozen=True)
class DecompositionState:
    """Intervals for ``c_0..c_e``; ``lo > hi`` marks an empty interval."""

    h: HVector
    socle: SocleType
    char: CharAssumption
    c: tuple[Interval, ...]
    trace: tuple[RuleApplication, ...] = ()
    plane_curve_gate: str = "appendix"

    @property
    def e(self) -> int:
        return self.h.socle_degree

    @property
    def gorenstein(self) -> bool:
        return self.socle.is_gorenstein

    @property
    def is_empty(self) -> bool:
        return any(lo > hi for lo, hi in self.c)

    def c_interval(self, i: int) -> Interval:
        return self.c[i]

    def b_interval(self, i: int) -> Interval:
        """Interval for ``b_i`` (1 <= i <= e)."""
        lo, hi = self.c[i]
        return (self.h[i] - hi, self.h[i] - lo)

    @property
    def b_intervals(self) -> tuple[Interval, ...]:
        return tuple(self.b_interval(i) for i in range(1, self.e + 1))

    def width(self) -> int:
        return sum(max(hi - lo, 0) for lo, hi in self.c)

    def forced_c(self) -> Optional[tuple[int, ...]]:
        if self.is_empty or any(lo != hi for lo, hi in self.c):
            return None
        return tuple(lo for lo, _ in self.c)

    def summary(self) -> str:
        cs = " ".join(f"c{i}=[{lo},{hi}]" for i, (lo, hi) in enumerate(self.c))
        return f"h={self.h} {cs}" + (" EMPTY" if self.is_empty else "")


def init_state(
    h: HVector,
    socle: SocleType = SocleType.gorenstein(),
    char: CharAssumption = CharAssumption("zero"),
    plane_curve_gate: str = "appendix",
) -> DecompositionState:
    """Start from ``c_i in [0, h_i]`` with the endpoints fixed by the decomposition.

    ``c_0 = 1`` and ``c_1 = h_1 - 1`` always; in Gorenstein mode also
    ``b_e = 1``, i.e. ``c_e = h_e - 1``.
    """
    if not isinstance(h, HVector):
        h = HVector(h)
    if not is_o_sequence(h):
        raise ValueError(f"{h} is not an O-sequence (violates Macaulay's theorem), so no algebra has it")
    if plane_curve_gate not in PLANE_CURVE_GATES:
        raise ValueError(f"plane_curve_gate must be one of {PLANE_CURVE_GATES}")
    e = h.socle_degree
    c = [(0, h[i]) for i in range(e + 1)]
    c[0] = (1, 1)
    c[1] = (h[1] - 1, h[1] - 1)
    if socle.is_gorenstein:
        c[e] = (h[e] - 1, h[e] - 1)
    return DecompositionState(h, socle, char, tuple(c), (), plane_curve_gate)


# -- per-degree narrowing ---------------------------------------------------
# Each function returns (lo, hi, detail) for c_d, or None when the rule does
# not apply at d.  Propagation and replay share them.

Narrower = Callable[[DecompositionState, list, int], Optional[tuple]]


def _nn(s: DecompositionState, c: list, d: int):
    # b_d >= 1 (Gorenstein) and rank(L: A_{d-1} -> A_d) = h_d - c_d <= h_{d-1}
    lo, hi = c[d]
    upper = s.h[d] - 1 if (s.gorenstein and d >= 1) else s.h[d]
    lower = max(0, s.h[d] - s.h[d - 1]) if d >= 1 else 0
    return max(lo, lower), min(hi, upper), f"{lower} <= c_{d} <= {upper}"


def _sym(s: DecompositionState, c: list, d: int):
    if not s.gorenstein:
        return None
    e = s.e
    p = e + 1 - d
    if not (2 <= d <= e - 1) or p == d:
        return None
    k = s.h[d] - s.h[p]
    plo, phi = c[p]
    lo, hi = c[d]
    return max(lo, plo + k), min(hi, phi + k), f"b_{d} = b_{p} gives c_{d} = c_{p} + ({k})"


def _green(s: DecompositionState, c: list, d: int):
    if d < 1:
        return None
    cap = green_bound(s.h[d], d)
    lo, hi = c[d]
    return lo, min(hi, cap), f"c_{d} <= (({s.h[d]})_({d}))^-1_0 = {cap}"


def _zero_socle_ok(s: DecompositionState, d: int) -> bool:
    return d - 1 <= s.socle.zero_socle_through(s.e)


def linear_rigidity_cap(h: HVector, d: int) -> Optional[tuple[int, int]]:
    """(m, cap - 1) when linear-space rigidity excludes ``c_d = cap``."""
    m = binomial_shape(h[d], d)
    if m is None:
        return None
    cap = binom(m - 1 + d, d)
    if green_bound(h[d], d) != cap:
        return None
    if all(h[i] == binom(m + i, i) for i in range(d + 1)):
        return None
    return m, cap - 1


def plane_rigidity_cap(h: HVector, d: int) -> Optional[tuple[int, int]]:
    m = plane_curve_shape(h[d], d)
    if m is None or green_bound(h[d], d) != m:
        return None
    if tuple(h.entries[: d + 1]) == plane_curve_prefix(m, d):
        return None
    return m, m - 1


def linear_gate(char: CharAssumption) -> bool:
    return char.excludes_two()


def plane_gate(char: CharAssumption, d: int, m: int, gate: str) -> bool:
    if gate == "footnote":
        return char.at_least(m)
    return char.exceeds(d + 1)


def _lin(s: DecompositionState, c: list, d: int):
    if d < 2 or not linear_gate(s.char) or not _zero_socle_ok(s, d):
        return None
    hit = linear_rigidity_cap(s.h, d)
    if hit is None:
        return None
    m, cap = hit
    lo, hi = c[d]
    return lo, min(hi, cap), (
        f"h_{d} = C({m}+{d},{d}) but prefix {s.h.entries[: d + 1]} is not the linear-space one, so c_{d} <= {cap}"
    )


def _plane(s: DecompositionState, c: list, d: int):
    if d < 2 or not _zero_socle_ok(s, d):
        return None
    hit = plane_rigidity_cap(s.h, d)
    if hit is None:
        return None
    m, cap = hit
    if not plane_gate(s.char, d, m, s.plane_curve_gate):
        return None
    lo, hi = c[d]
    return lo, min(hi, cap), (
        f"h_{d} is the plane-curve value for m={m} but prefix {s.h.entries[: d + 1]} is not, so c_{d} <= {cap}"
    )


def _mac_c(s: DecompositionState, c: list, d: int):
    lo, hi = c[d]
    notes = []
    if d >= 2:
        bound = macaulay_bound(max(c[d - 1][1], 0), d - 1)
        if bound < hi:
            notes.append(f"c_{d} <= (({c[d - 1][1]})_({d - 1}))^1_1 = {bound}")
        hi = min(hi, bound)
    if 1 <= d < s.e:
        need = inverse_macaulay(c[d + 1][0], d)
        if need > lo:
            notes.append(f"c_{d + 1} >= {c[d + 1][0]} needs c_{d} >= {need}")
        lo = max(lo, need)
    return lo, hi, "; ".join(notes)


def _mac_b(s: DecompositionState, c: list, d: int):
    if not s.gorenstein:
        return None
    h, e = s.h, s.e
    lo, hi = c[d]
    notes = []
    if 3 <= d <= e:
        b_prev_hi = h[d - 1] - c[d - 1][0]
        bound = macaulay_bound(max(b_prev_hi, 0), d - 2)
        if h[d] - bound > lo:
            notes.append(f"b_{d} <= (({b_prev_hi})_({d - 2}))^1_1 = {bound}")
        lo = max(lo, h[d] - bound)
    if 2 <= d <= e - 1:
        b_next_lo = h[d + 1] - c[d + 1][1]
        need = inverse_macaulay(b_next_lo, d - 1)
        if h[d] - need < hi:
            notes.append(f"b_{d + 1} >= {b_next_lo} needs b_{d} >= {need}")
        hi = min(hi, h[d] - need)
    return lo, hi, "; ".join(notes)


_NARROWERS: dict[str, Narrower] = {
    "NonNegativity": _nn,
    "SymmetryLink": _sym,
    "GreenCap": _green,
    "LinearSpaceRigidity": _lin,
    "PlaneCurveRigidity": _plane,
    "MacaulayGrowthC": _mac_c,
    "MacaulayGrowthB": _mac_b,
}


def _apply(s: DecompositionState, rule: str) -> DecompositionState:
    if s.is_empty:
        return s
    narrow = _NARROWERS[rule]
    c = list(s.c)
    steps = []
    for d in range(s.e + 1):
        out = narrow(s, c, d)
        if out is None:
            continue
        lo, hi, detail = out
        before = c[d]
        if (lo, hi) != before:
            c[d] = (lo, hi)
            steps.append(RuleApplication(rule, d, before, (lo, hi), detail))
            if lo > hi:
                break
    if not steps:
        return s
    return replace(s, c=tuple(c), trace=s.trace + tuple(steps))


def rule_nonnegativity(s: DecompositionState) -> DecompositionState:
    return _apply(s, "NonNegativity")


def rule_symmetry_link(s: DecompositionState) -> DecompositionState:
    """Intersect ``c_i`` with ``c_{e+1-i} + (h_i - h_{e+1-i})`` (Gorenstein mode only)."""
    return _apply(s, "SymmetryLink")


def rule_green_cap(s: DecompositionState) -> DecompositionState:
    return _apply(s, "GreenCap")


def rule_linear_space_rigidity(s: DecompositionState) -> DecompositionState:
    """Cap ``c_d`` one below Green's bound when ``h_d = C(m+d,d)`` but the prefix is not linear-space.

    Needs char != 2 and zero socle below d.
    """
    return _apply(s, "LinearSpaceRigidity")


def rule_plane_curve_rigidity(s: DecompositionState) -> DecompositionState:
    return _apply(s, "PlaneCurveRigidity")


def rule_macaulay_growth_c(s: DecompositionState) -> DecompositionState:
    return _apply(s, "MacaulayGrowthC")


def rule_macaulay_growth_b(s: DecompositionState) -> DecompositionState:
    return _apply(s, "MacaulayGrowthB")


def propagate(s: DecompositionState, max_rounds: Optional[int] = None) -> DecompositionState:
    """Run every rule in ``RULE_ORDER`` until nothing changes or an interval empties."""
    rounds = 0
    while not s.is_empty:
        before = s.c
        for rule in RULE_ORDER:
            s = _apply(s, rule)
            if s.is_empty:
                return s
        if s.c == before:
            break
        rounds += 1
        if max_rounds is not None and rounds >= max_rounds:
            break
    return s


def replay(start: DecompositionState, steps: Iterable[RuleApplication]) -> DecompositionState:
    """Re-derive every recorded step from ``start``; raise ReplayError on any mismatch."""
    s = start
    for k, step in enumerate(steps):
        if step.rule_id not in _NARROWERS:
            raise ReplayError(f"step {k}: unknown rule {step.rule_id!r}")
        if not 0 <= step.degree <= s.e:
            raise ReplayError(f"step {k}: degree {step.degree} out of range")
        if s.is_empty:
            raise ReplayError(f"step {k}: state already empty")
        c = list(s.c)
        if c[step.degree] != tuple(step.before):
            raise ReplayError(f"step {k}: expected c_{step.degree} = {list(step.before)}, found {list(c[step.degree])}")
        out = _NARROWERS[step.rule_id](s, c, step.degree)
        if out is None or (out[0], out[1]) != tuple(step.after):
            raise ReplayError(f"step {k}: {step.rule_id} does not yield {list(step.after)} at degree {step.degree}")
        c[step.degree] = (out[0], out[1])
        s = replace(s, c=tuple(c), trace=s.trace + (step,))
    return s


def trace_to_json(s: DecompositionState) -> str:
    return json.dumps([step.to_dict() for step in s.trace], indent=2)


# -- exhaustive oracle --------------------------------------------------------


def unary_caps(
    h: HVector, socle: SocleType, char: CharAssumption, plane_curve_gate: str = "appendix"
) -> list[int]:
    """Pointwise upper bound on each ``c_d``: Green's cap minus any rigidity exclusion."""
    e = h.socle_degree
    zero_through = socle.zero_socle_through(e)
    caps = [h[0]] + [green_bound(h[d], d) for d in range(1, e + 1)]
    for d in range(2, e + 1):
        if d - 1 > zero_through:
            continue
        if linear_gate(char):
            hit = linear_rigidity_cap(h, d)
            if hit is not None:
                caps[d] = min(caps[d], hit[1])
        hit = plane_rigidity_cap(h, d)
        if hit is not None and plane_gate(char, d, hit[0], plane_curve_gate):
            caps[d] = min(caps[d], hit[1])
    return caps


def _admissible(h, c, gorenstein: bool, caps) -> Optional[tuple]:
    e = len(h) - 1
    for d in range(e + 1):
        if not 0 <= c[d] <= caps[d]:
            return None
        if d >= 1 and h[d] - c[d] > h[d - 1]:
            return None
    if not is_o_sequence(c):
        return None
    if not gorenstein:
        return ()
    b = tuple(h[i] - c[i] for i in range(1, e + 1))
    if b[0] != 1 or b[-1] != 1 or min(b) < 1:
        return None
    if b != b[::-1] or not is_o_sequence(b):
        return None
    return b


def enumerate_decompositions(
    s: DecompositionState, cap: Optional[int] = None, budget: int = DEFAULT_BUDGET
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All ``(b, c)`` satisfying the constraint set, by brute force.

    Uses only ``s.h``, ``s.socle`` and ``s.char``; the intervals and trace of
    ``s`` are ignored so the result is independent of propagation.  In
    Gorenstein mode ``b = (b_1, ..., b_e)``; in level mode ``b`` is empty.
    """
    h = s.h.entries
    e = len(h) - 1
    gorenstein = s.gorenstein
    caps = unary_caps(s.h, s.socle, s.char, s.plane_curve_gate)
    fixed = {0: 1, 1: h[1] - 1}
    if gorenstein:
        fixed[e] = h[e] - 1
    if gorenstein:
        free = [d for d in range(2, e) if d <= e + 1 - d]
    else:
        free = [d for d in range(2, e + 1)]
    ranges = [range(0, min(caps[d], h[d]) + 1) for d in free]
    size = 1
    for r in ranges:
        size *= max(len(r), 1)
    if size > budget:
        raise BudgetExceeded(f"search space {size} exceeds budget {budget}")
    out = []
    for values in itertools.product(*ranges):
        c = [0] * (e + 1)
        for d, v in fixed.items():
            c[d] = v
        for d, v in zip(free, values):
            c[d] = v
        if gorenstein:
            for d in free:
                p = e + 1 - d
                if p != d:
                    # b_d = b_p
                    c[p] = h[p] - (h[d] - c[d])
        b = _admissible(h, c, gorenstein, caps)
        if b is None:
            continue
        out.append((b, tuple(c)))
        if cap is not None and len(out) >= cap:
            break
    return out
