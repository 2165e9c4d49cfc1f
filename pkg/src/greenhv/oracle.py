"""Brute-force ground truth on monomial quotient algebras.

Quotients ``R/I`` of ``R = k[x_1, ..., x_r]`` by monomial ideals, over Q
(characteristic 0) or a prime field.  Lex order puts ``x_1 > ... > x_r``.
"""
from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Iterable, Optional, Sequence, Union

from .hvector import HVector, is_prime
from .linalg import rank

__all__ = [
    "FieldSpec",
    "MonomialIdeal",
    "QuotientAlgebra",
    "LinearForm",
    "HilbertFunction",
    "WLPResult",
    "CharPReport",
    "SplitResult",
    "NotArtinianError",
    "parse_ideal",
    "monomials",
    "hilbert_function",
    "socle_vector",
    "multiplication_matrix",
    "restriction_dimension",
    "random_linear_form",
    "wlp_test",
    "lex_growth",
    "charp_theorem4_counterexample",
    "stanley_split",
    "ideal_catalog",
]

Monomial = tuple[int, ...]

COEFF_RANGE = 10**6


class NotArtinianError(ValueError):
    pass


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise ValueError(f"characteristic must be 0 or a prime, got {self.characteristic}")

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"F_{self.characteristic}"


def monomials(r: int, d: int) -> list[Monomial]:
    """Exponent vectors of degree d in r variables, lex-descending."""
    if d < 0:
        return []
    out = []
    for combo in itertools.combinations_with_replacement(range(r), d):
        exps = [0] * r
        for v in combo:
            exps[v] += 1
        out.append(tuple(exps))
    return out


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialIdeal:
    num_vars: int
    generators: tuple[Monomial, ...]

    def __init__(self, num_vars: int, generators: Iterable[Sequence[int]]):
        gens = {tuple(int(x) for x in g) for g in generators}
        for g in gens:
            if len(g) != num_vars or min(g, default=0) < 0:
                raise ValueError(f"generator {g} does not fit {num_vars} variables")
            if sum(g) == 0:
                raise ValueError("the unit ideal has no artinian quotient of interest")
        minimal = sorted(
            (g for g in gens if not any(h != g and _divides(h, g) for h in gens)),
            key=lambda g: (sum(g), tuple(-x for x in g)),
        )
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "generators", tuple(minimal))

    def contains(self, m: Monomial) -> bool:
        return any(_divides(g, m) for g in self.generators)

    def colon_variable(self, v: int) -> "MonomialIdeal":
        """``(I : x_v)``, again monomial: decrement the x_v exponent."""
        gens = []
        for g in self.generators:
            g = list(g)
            g[v] = max(g[v] - 1, 0)
            gens.append(g)
        if any(sum(g) == 0 for g in gens):
            raise ValueError(f"x_{v + 1} lies in the ideal; the colon is the unit ideal")
        return MonomialIdeal(self.num_vars, gens)

    def plus_variable(self, v: int) -> "MonomialIdeal":
        unit = [0] * self.num_vars
        unit[v] = 1
        return MonomialIdeal(self.num_vars, list(self.generators) + [unit])

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        names = names or _default_names(self.num_vars)
        return ", ".join(format_monomial(g, names) for g in self.generators)


def _default_names(r: int) -> list[str]:
    return list("xyzw"[:r]) if r <= 4 else [f"x{i + 1}" for i in range(r)]


def format_monomial(m: Monomial, names: Optional[Sequence[str]] = None) -> str:
    names = names or _default_names(len(m))
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
    return "*".join(parts) or "1"


_FACTOR = re.compile(r"\s*(x(\d+)|[xyzw])\s*(?:\^\s*(\d+))?\s*\*?")


def parse_ideal(text: str, num_vars: int) -> MonomialIdeal:
    """Parse ``"x^2, y^2, z^2"`` or ``"x1^2, x1*x2"`` into a monomial ideal."""
    letters = "xyzw"
    gens = []
    for raw in text.split(","):
        raw = raw.strip()
        if not raw:
            continue
        exps = [0] * num_vars
        pos = 0
        while pos < len(raw):
            match = _FACTOR.match(raw, pos)
            if not match or match.end() == pos:
                raise ValueError(f"cannot parse monomial {raw!r} near {raw[pos:]!r}")
            if match.group(2):
                idx = int(match.group(2)) - 1
            else:
                idx = letters.index(match.group(1))
            if not 0 <= idx < num_vars:
                raise ValueError(f"variable {match.group(1)} not among {num_vars} variables")
            exps[idx] += int(match.group(3) or 1)
            pos = match.end()
        gens.append(exps)
    if not gens and text.strip():
        raise ValueError(f"no generators in {text!r}")
    return MonomialIdeal(num_vars, gens)


@dataclass(frozen=True)
class LinearForm:
    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Iterable[int]):
        coeffs = tuple(int(c) for c in coefficients)
        if not any(coeffs):
            raise ValueError("a linear form must be nonzero")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def variable(cls, v: int, r: int) -> "LinearForm":
        return cls(1 if i == v else 0 for i in range(r))

    def __str__(self) -> str:
        names = _default_names(len(self.coefficients))
        return " + ".join(f"{c}*{n}" for c, n in zip(self.coefficients, names) if c)


def random_linear_form(r: int, characteristic: int, rng: random.Random) -> LinearForm:
    while True:
        if characteristic:
            coeffs = [rng.randrange(characteristic) for _ in range(r)]
        else:
            coeffs = [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(r)]
        if any(coeffs):
            return LinearForm(coeffs)


@dataclass(frozen=True)
class HilbertFunction:
    values: tuple[int, ...]
    artinian: bool

    @property
    def hvector(self) -> HVector:
        if not self.artinian:
            raise NotArtinianError(f"Hilbert function {self.values} has not vanished by the cap")
        return HVector(self.values)


class QuotientAlgebra:
    """``R/I`` for a monomial ideal I, graded by degree."""

    def __init__(
        self,
        ideal: MonomialIdeal,
        field: FieldSpec = FieldSpec(0),
        degree_cap: Optional[int] = None,
    ):
        self.ideal = ideal
        self.field = field
        self.num_vars = ideal.num_vars
        natural = self._artinian_cap()
        if degree_cap is None:
            if natural is None:
                raise NotArtinianError("ideal is not artinian; pass degree_cap")
            degree_cap = natural
        self.degree_cap = degree_cap
        self._basis: dict[int, list[Monomial]] = {}
        self._index: dict[int, dict[Monomial, int]] = {}

    def _artinian_cap(self) -> Optional[int]:
        powers = [None] * self.num_vars
        for g in self.ideal.generators:
            support = [i for i, x in enumerate(g) if x]
            if len(support) == 1:
                i = support[0]
                powers[i] = g[i] if powers[i] is None else min(powers[i], g[i])
        if any(p is None for p in powers):
            return None
        return sum(p - 1 for p in powers)

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    def basis(self, d: int) -> list[Monomial]:
        """Standard monomials of degree d."""
        if d not in self._basis:
            self._basis[d] = [m for m in monomials(self.num_vars, d) if not self.ideal.contains(m)]
            self._index[d] = {m: k for k, m in enumerate(self._basis[d])}
        return self._basis[d]

    def index(self, d: int) -> dict[Monomial, int]:
        self.basis(d)
        return self._index[d]

    @cached_property
    def hilbert(self) -> HilbertFunction:
        values = [len(self.basis(d)) for d in range(self.degree_cap + 1)]
        natural = self._artinian_cap()
        artinian = values[-1] == 0 or (natural is not None and self.degree_cap >= natural)
        if artinian:
            while len(values) > 1 and values[-1] == 0:
                values.pop()
        return HilbertFunction(tuple(values), artinian)

    @property
    def socle_degree(self) -> int:
        return len(self.hilbert.values) - 1

    def __repr__(self) -> str:
        return f"QuotientAlgebra(({self.ideal.format()}), {self.field})"


def hilbert_function(A: QuotientAlgebra) -> HilbertFunction:
    return A.hilbert


def socle_vector(A: QuotientAlgebra) -> tuple[int, ...]:
    """Per-degree socle dimensions; for monomial ideals the socle is spanned by monomials."""
    if not A.hilbert.artinian:
        raise NotArtinianError("socle_vector needs an artinian algebra")
    r = A.num_vars
    out = []
    for d in range(A.socle_degree + 1):
        count = 0
        for m in A.basis(d):
            ok = True
            for v in range(r):
                up = list(m)
                up[v] += 1
                if not A.ideal.contains(tuple(up)):
                    ok = False
                    break
            count += ok
        out.append(count)
    return tuple(out)


def multiplication_matrix(A: QuotientAlgebra, L: LinearForm, d: int) -> list[list[int]]:
    """Rows: standard monomials of degree d-1; columns: those of degree d."""
    src = A.basis(d - 1)
    tgt = A.index(d)
    p = A.characteristic
    rows = []
    for m in src:
        row = [0] * len(tgt)
        for v, a in enumerate(L.coefficients):
            if not a:
                continue
            up = list(m)
            up[v] += 1
            k = tgt.get(tuple(up))
            if k is not None:
                row[k] += a
        if p:
            row = [x % p for x in row]
        rows.append(row)
    return rows


def multiplication_rank(A: QuotientAlgebra, L: LinearForm, d: int) -> int:
    if d < 1 or not A.basis(d - 1) or not A.basis(d):
        return 0
    return rank(multiplication_matrix(A, L, d), A.characteristic)


def restriction_dimension(A: QuotientAlgebra, L: LinearForm, d: int) -> int:
    """``dim (A/(L))_d = h_d - rank(L: A_{d-1} -> A_d)``."""
    if d < 1:
        raise ValueError("restriction_dimension needs d >= 1")
    return len(A.basis(d)) - multiplication_rank(A, L, d)


@dataclass
class WLPResult:
    has_wlp: bool
    witness: Optional[LinearForm]
    exhaustive: bool
    forms_tested: int
    # (source degree i, achieved rank, required rank) for the best form seen
    ranks: list[tuple[int, int, int]] = field(default_factory=list)

    def describe(self) -> str:
        if self.has_wlp:
            return f"WLP holds (witness L = {self.witness})"
        scope = (
            "exhaustive over all linear forms up to scaling"
            if self.exhaustive
            else f"for all {self.forms_tested} sampled forms"
        )
        return f"WLP fails ({scope})"


def _projective_forms(r: int, p: int):
    # one representative per line: first nonzero coordinate equal to 1
    for lead in range(r):
        for tail in itertools.product(range(p), repeat=r - lead - 1):
            yield LinearForm([0] * lead + [1] + list(tail))


def _rank_profile(A: QuotientAlgebra, L: LinearForm) -> list[tuple[int, int, int]]:
    h = A.hilbert.values
    prof = []
    for i in range(len(h) - 1):
        got = multiplication_rank(A, L, i + 1)
        prof.append((i, got, min(h[i], h[i + 1])))
    return prof


def wlp_test(A: QuotientAlgebra, trials: int = 20, seed: int = 0) -> WLPResult:
    """Look for a linear form with maximal-rank multiplication in every degree.

    Over F_p, when the number of forms up to scaling is at most ``trials``,
    all of them are tried and a failure is a proof.  Otherwise the all-ones
    form plus ``trials`` random forms are tried and a failure is Monte Carlo.
    """
    if not A.hilbert.artinian:
        raise NotArtinianError("wlp_test needs an artinian algebra")
    r, p = A.num_vars, A.characteristic
    exhaustive = bool(p) and (p**r - 1) // (p - 1) <= trials
    if exhaustive:
        candidates: Iterable[LinearForm] = _projective_forms(r, p)
    else:
        rng = random.Random(seed)
        candidates = itertools.chain(
            [LinearForm([1] * r)], (random_linear_form(r, p, rng) for _ in range(trials))
        )
    best = None
    best_score = -1
    tested = 0
    for L in candidates:
        tested += 1
        prof = _rank_profile(A, L)
        if all(got == need for _, got, need in prof):
            return WLPResult(True, L, exhaustive, tested, prof)
        score = sum(got for _, got, _ in prof)
        if score > best_score:
            best, best_score = prof, score
    return WLPResult(False, None, exhaustive, tested, best or [])


def lex_growth(n: int, d: int, r: int) -> int:
    """Degree-(d+1) standard monomials when the degree-d standard set is the n lex-smallest monomials."""
    if d < 1 or r < 1 or n < 0:
        raise ValueError("lex_growth needs d >= 1, r >= 1, n >= 0")
    total = comb(r + d - 1, d)
    if n > total:
        raise ValueError(f"n = {n} exceeds the {total} monomials of degree {d} in {r} variables")

    def ascending(nv: int, deg: int):
        if nv == 1:
            yield (deg,)
            return
        for a in range(deg + 1):
            for rest in ascending(nv - 1, deg - a):
                yield (a,) + rest

    std = set(itertools.islice(ascending(r, d), n))
    candidates = set()
    for m in std:
        for v in range(r):
            up = list(m)
            up[v] += 1
            candidates.add(tuple(up))
    count = 0
    for m in candidates:
        ok = True
        for v in range(r):
            if m[v]:
                down = list(m)
                down[v] -= 1
                if tuple(down) not in std:
                    ok = False
                    break
        count += ok
    return count


# -- positive-characteristic counterexample ----------------------------------

Poly = dict  # Monomial -> coefficient mod p


def _poly_mul_monomial(f: Poly, m: Monomial, p: int) -> Poly:
    return {tuple(a + b for a, b in zip(k, m)): c for k, c in f.items() if c % p}


def _restrict_to_plane(f: Poly, lam: int, mu: int, p: int) -> Poly:
    """Substitute ``z = lam*x + mu*y`` and return a polynomial in (x, y)."""
    out: dict[tuple[int, int], int] = {}
    for (a, b, k), coeff in f.items():
        for j in range(k + 1):
            c = coeff * comb(k, j) * pow(lam, j, p) * pow(mu, k - j, p) % p
            if c:
                key = (a + j, b + k - j)
                out[key] = (out.get(key, 0) + c) % p
    return {k: c for k, c in out.items() if c}


def _rank_of_polys(polys: Sequence[Poly], basis: Sequence[Monomial], p: int) -> int:
    rows = [[f.get(m, 0) for m in basis] for f in polys]
    return rank(rows, p)


@dataclass
class CharPReport:
    p: int
    d: int
    g_degree: int
    G: str
    dim_W: int
    codim_W: int
    expected_codim_W: int
    restrictions: list[tuple[tuple[int, int, int], int, int]]  # (H, dim W_H, codim W_H)
    expected_codim_WH: int
    resamples: int

    @property
    def ok(self) -> bool:
        return self.codim_W == self.expected_codim_W and all(
            codim == self.expected_codim_WH for _, _, codim in self.restrictions
        )


def charp_theorem4_counterexample(
    p: int, d: int, g_degree: int, seed: int = 0, samples: int = 20
) -> CharPReport:
    """``W = <x^p G, y^p G, z^p G>`` in degree d of ``F_p[x,y,z]``, cut by random hyperplanes.

    Expect codim W = C(d+2,2) - 3 and codim W_H = d - 1: after restriction the
    Frobenius makes the p-th power of the eliminated variable a combination of
    the other two.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if d != p + g_degree:
        raise ValueError(f"need d = p + deg G, got d={d}, p={p}, deg G={g_degree}")
    rng = random.Random(seed)
    g_monos = monomials(3, g_degree)
    while True:
        G = {m: rng.randrange(p) for m in g_monos}
        G = {m: c for m, c in G.items() if c}
        if G:
            break
    gens = [_poly_mul_monomial(G, tuple(p if i == v else 0 for i in range(3)), p) for v in range(3)]
    dim_W = _rank_of_polys(gens, monomials(3, d), p)
    codim_W = comb(d + 2, 2) - dim_W
    plane_basis = [(d - j, j) for j in range(d + 1)]
    restrictions = []
    resamples = 0
    while len(restrictions) < samples:
        alpha, beta, gamma = (rng.randrange(p) for _ in range(3))
        if gamma == 0:
            resamples += 1
            continue
        inv = pow(gamma, p - 2, p)
        lam, mu = (-alpha * inv) % p, (-beta * inv) % p
        # a hyperplane dividing G kills every generator; skip it
        if not _restrict_to_plane(G, lam, mu, p):
            resamples += 1
            continue
        images = [_restrict_to_plane(f, lam, mu, p) for f in gens]
        dim_WH = _rank_of_polys(images, plane_basis, p)
        restrictions.append(((alpha, beta, gamma), dim_WH, d + 1 - dim_WH))
    names = ("x", "y", "z")
    g_text = " + ".join(
        f"{c}*{format_monomial(m, names)}" if any(m) else str(c) for m, c in sorted(G.items(), reverse=True)
    )
    return CharPReport(p, d, g_degree, g_text, dim_W, codim_W, comb(d + 2, 2) - 3, restrictions, d - 1, resamples)


# -- Stanley decomposition on actual algebras --------------------------------


@dataclass
class SplitResult:
    h: tuple[int, ...]
    b: tuple[int, ...]  # b_i for i = 0..e, b_0 = 0 (the shifted colon algebra)
    c: tuple[int, ...]

    @property
    def exact(self) -> bool:
        return all(x == y + z for x, y, z in zip(self.h, self.b, self.c))

    @property
    def b_vector(self) -> tuple[int, ...]:
        """b as an h-vector, indices shifted back down by one."""
        vals = list(self.b[1:])
        while vals and vals[-1] == 0:
            vals.pop()
        return tuple(vals)


def stanley_split(A: QuotientAlgebra, L: Union[LinearForm, int]) -> SplitResult:
    """Observed ``h = b + c`` for ``0 -> R/(I:L)(-1) -> R/I -> R/(I,L) -> 0``.

    An integer ``L`` names a variable; then both colon and quotient are monomial
    and counted directly.  For a general form only c is computed (by rank)
    and b is read off as ``h - c``.
    """
    h = A.hilbert.values
    e = len(h) - 1
    if isinstance(L, int):
        v = L
        cut = QuotientAlgebra(A.ideal.plus_variable(v), A.field, A.degree_cap)
        if any(sum(g) == 1 and g[v] == 1 for g in A.ideal.generators):
            b = (0,) * (e + 1)  # x_v in I: the colon is the unit ideal
        else:
            colon = QuotientAlgebra(A.ideal.colon_variable(v), A.field, A.degree_cap)
            b = (0,) + tuple(len(colon.basis(i - 1)) for i in range(1, e + 1))
        c = tuple(len(cut.basis(i)) for i in range(e + 1))
        return SplitResult(h, b, c)
    c = (1,) + tuple(restriction_dimension(A, L, d) for d in range(1, e + 1))
    b = tuple(x - y for x, y in zip(h, c))
    return SplitResult(h, b, c)


def ideal_catalog(
    count: int = 500, max_vars: int = 3, max_degree: int = 3, seed: int = 2024
) -> list[MonomialIdeal]:
    """Deterministic sample of distinct monomial ideals with generators of degree <= max_degree."""
    rng = random.Random(seed)
    seen = set()
    out = []
    pools = {r: [m for d in range(1, max_degree + 1) for m in monomials(r, d)] for r in range(1, max_vars + 1)}
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 100 * count:
            break
        r = rng.choice(range(1, max_vars + 1))
        pool = pools[r]
        k = rng.randint(1, min(6, len(pool)))
        ideal = MonomialIdeal(r, rng.sample(pool, k))
        key = (r, ideal.generators)
        if key in seen:
            continue
        seen.add(key)
        out.append(ideal)
    return out
