"""h-vectors, socle types and characteristic assumptions."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional

from .macaulay import binom, macaulay_bound

__all__ = [
    "HVector",
    "SocleType",
    "CharAssumption",
    "is_o_sequence",
    "is_symmetric",
    "family_gorenstein_gap",
    "binomial_shape",
    "plane_curve_shape",
    "plane_curve_prefix",
    "parse_hvector",
    "is_prime",
]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    q = 3
    while q * q <= p:
        if p % q == 0:
            return False
        q += 2
    return True


@dataclass(frozen=True)
class HVector:
    """Hilbert function ``(h_0, ..., h_e)`` of a graded artinian algebra."""

    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        values = tuple(int(v) for v in entries)
        if len(values) < 2:
            raise ValueError("an h-vector needs socle degree e >= 1")
        if values[0] != 1:
            raise ValueError(f"h_0 must be 1, got {values[0]}")
        for i, v in enumerate(values):
            if v < 1:
                raise ValueError(f"entry h_{i} = {v} is not positive")
        object.__setattr__(self, "entries", values)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def socle_degree(self) -> int:
        return len(self.entries) - 1

    @property
    def codim(self) -> int:
        return self.entries[1]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"

    def to_json(self) -> str:
        return json.dumps({"h": list(self.entries)})


def parse_hvector(text: str) -> HVector:
    """Accept ``"1,10,9,10,1"``, ``"(1,10,9,10,1)"`` or ``{"h": [...]}``."""
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        if not isinstance(data, dict) or "h" not in data:
            raise ValueError('JSON h-vector must be an object with key "h"')
        return HVector(data["h"])
    text = text.strip("()[] ")
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"malformed h-vector {text!r}: expected comma-separated integers") from None
    return HVector(values)


@dataclass(frozen=True)
class SocleType:
    """``level``, ``gorenstein``, ``zero-below`` (zero socle in degrees < ``degree``) or ``unspecified``."""

    tag: str
    degree: Optional[int] = None

    TAGS = ("level", "gorenstein", "zero-below", "unspecified")

    def __post_init__(self) -> None:
        if self.tag not in self.TAGS:
            raise ValueError(f"unknown socle type {self.tag!r}")
        if (self.tag == "zero-below") != (self.degree is not None):
            raise ValueError("zero-below takes a degree, other socle types do not")

    @classmethod
    def level(cls) -> "SocleType":
        return cls("level")

    @classmethod
    def gorenstein(cls) -> "SocleType":
        return cls("gorenstein")

    @classmethod
    def zero_below(cls, d: int) -> "SocleType":
        return cls("zero-below", d)

    @classmethod
    def unspecified(cls) -> "SocleType":
        return cls("unspecified")

    @classmethod
    def parse(cls, text: str) -> "SocleType":
        text = text.strip().lower()
        if text.startswith("zero-below:"):
            return cls.zero_below(int(text.split(":", 1)[1]))
        return cls(text)

    @property
    def is_gorenstein(self) -> bool:
        return self.tag == "gorenstein"

    @property
    def is_level(self) -> bool:
        return self.tag in ("level", "gorenstein")

    def zero_socle_through(self, e: int) -> int:
        """Largest degree in which the socle is known to vanish (-1 if none)."""
        if self.is_level:
            return e - 1
        if self.tag == "zero-below":
            return self.degree - 1
        return -1

    def __str__(self) -> str:
        return self.tag if self.degree is None else f"{self.tag}:{self.degree}"


@dataclass(frozen=True)
class CharAssumption:
    """What is known about the characteristic of the base field.

    ``zero``, ``not-two``, ``at-least:p`` (zero or at least p),
    ``exactly:p`` or ``arbitrary``.
    """

    tag: str
    p: Optional[int] = None

    TAGS = ("zero", "not-two", "at-least", "exactly", "arbitrary")

    def __post_init__(self) -> None:
        if self.tag not in self.TAGS:
            raise ValueError(f"unknown characteristic tag {self.tag!r}")
        if self.tag in ("at-least", "exactly"):
            if self.p is None or self.p < 1:
                raise ValueError(f"{self.tag} needs a positive integer")
            if self.tag == "exactly" and not is_prime(self.p):
                raise ValueError(f"characteristic {self.p} is not prime")
        elif self.p is not None:
            raise ValueError(f"{self.tag} takes no parameter")

    @classmethod
    def parse(cls, text: str) -> "CharAssumption":
        text = text.strip().lower()
        if ":" in text:
            tag, _, num = text.partition(":")
            try:
                return cls(tag, int(num))
            except ValueError as exc:
                raise ValueError(f"invalid characteristic {text!r}: {exc}") from None
        if text == "0":
            return cls("zero")
        return cls(text)

    def _smallest_possible(self) -> Optional[int]:
        # smallest positive characteristic allowed; None means only char 0
        if self.tag == "zero":
            return None
        if self.tag == "not-two":
            return 3
        if self.tag == "arbitrary":
            return 2
        return max(self.p, 2)

    def exceeds(self, bound: int) -> bool:
        """True when every allowed characteristic is 0 or strictly greater than ``bound``."""
        low = self._smallest_possible()
        return low is None or low > bound

    def excludes_two(self) -> bool:
        return self.exceeds(2)

    def at_least(self, bound: int) -> bool:
        return self.exceeds(bound - 1)

    def __str__(self) -> str:
        return self.tag if self.p is None else f"{self.tag}:{self.p}"


def is_o_sequence(h: Iterable[int]) -> bool:
    """Macaulay growth between every consecutive pair from degree 1 on.

    Works on any nonnegative sequence starting with 1; zeros propagate.
    """
    h = tuple(h)
    if not h or h[0] != 1:
        return False
    for d in range(1, len(h) - 1):
        if h[d + 1] > macaulay_bound(h[d], d):
            return False
    return all(v >= 0 for v in h)


def is_symmetric(h: Iterable[int]) -> bool:
    h = tuple(h)
    return h == h[::-1]


def family_gorenstein_gap(m: int) -> HVector:
    """``(1, C(m+3,3), (m+1)^2, C(m+3,3), 1)``: symmetric O-sequences that are not Gorenstein."""
    if m < 2:
        raise ValueError(f"the family starts at m = 2, got m = {m}")
    r = binom(m + 3, 3)
    return HVector((1, r, (m + 1) ** 2, r, 1))


def binomial_shape(n: int, d: int) -> Optional[int]:
    """m >= 1 with ``n == C(m+d, d)``, or None."""
    if n < 1 or d < 1:
        return None
    lo, hi = 1, max(n, 1)  # C(m+d, d) >= m + 1 > m
    while lo <= hi:
        mid = (lo + hi) // 2
        v = binom(mid + d, d)
        if v == n:
            return mid
        if v < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def _plane_curve_value(m: int, d: int) -> int:
    return binom(d + 2, 2) - binom(d - m + 2, 2)


def plane_curve_shape(n: int, d: int) -> Optional[int]:
    """m in [1, d] with ``n`` equal to the degree-d Hilbert function of a plane curve of degree m."""
    if n < 1 or d < 1:
        return None
    lo, hi = 1, d
    while lo <= hi:
        mid = (lo + hi) // 2
        v = _plane_curve_value(mid, d)
        if v == n:
            # second closed form: md + 1 - C(m-1, 2)
            assert mid * d + 1 - binom(mid - 1, 2) == n
            return mid
        if v < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def plane_curve_prefix(m: int, d: int) -> tuple[int, ...]:
    if not 1 <= m <= d:
        raise ValueError(f"plane_curve_prefix needs 1 <= m <= d, got m={m}, d={d}")
    return tuple(binom(i + 2, 2) - binom(i - m + 2, 2) for i in range(d + 1))
