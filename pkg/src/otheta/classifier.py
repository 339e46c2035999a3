"""Factor type of the GNS von Neumann algebra of omega, at formula level.

If m and n are multiplicatively independent the type is III_1.  Otherwise
m^a = n^b with gcd(a, b) = 1, so m = r^b and n = r^a for an integer r, and
the type is III_lambda with lambda = m^{-1/b} = 1/r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import GenPair
from .graph import ThetaSpec
from .periodicity import mult_dependent, prime_factorization

__all__ = ["FactorTypeReport", "classify", "modular_eigenvalue", "spectrum_grid", "connes_T",
           "lambda_exponent", "integer_root"]


@dataclass(frozen=True)
class FactorTypeReport:
    m: int
    n: int
    kind: str  # "III_1" or "III_lambda"
    a: int | None = None
    b: int | None = None

    @property
    def lambda_exact(self) -> str | None:
        return None if self.b is None else f"{self.m}^(-1/{self.b})"

    @property
    def lambda_float(self) -> float | None:
        return None if self.b is None else self.m ** (-1 / self.b)

    @property
    def t_generator(self) -> float | None:
        return None if self.b is None else 2 * math.pi * self.b / math.log(self.m)

    @property
    def spectrum_desc(self) -> str:
        if self.kind == "III_1":
            return "{0} ∪ R_+"
        return "{0} ∪ {lambda^N : N in Z}"

    @property
    def caveat(self) -> str | None:
        if self.kind == "III_lambda":
            return "assumes the sigma-fixed-point algebra has a unique tracial state"
        return None

    def lines(self) -> list[str]:
        def fmt(v):
            return "none" if v is None else repr(v) if isinstance(v, float) else str(v)
        rows = [
            ("kind", self.kind),
            ("a", fmt(self.a)),
            ("b", fmt(self.b)),
            ("lambda_exact", fmt(self.lambda_exact)),
            ("lambda_float", fmt(self.lambda_float)),
            ("t_generator", fmt(self.t_generator)),
            ("spectrum_desc", self.spectrum_desc),
        ]
        if self.caveat:
            rows.append(("caveat", self.caveat))
        return [f"{k}={v}" for k, v in rows]


def classify(m: int, n: int) -> FactorTypeReport:
    ab = mult_dependent(m, n)
    if ab is None:
        return FactorTypeReport(m, n, "III_1")
    return FactorTypeReport(m, n, "III_lambda", *ab)


def modular_eigenvalue(g: GenPair, theta: ThetaSpec) -> Fraction:
    """Eigenvalue of the modular operator on s_u s_v^*: m^x n^y, (x, y) = d(v) - d(u)."""
    dx, dy = g.degree_diff
    return Fraction(theta.m) ** (-dx) * Fraction(theta.n) ** (-dy)


def spectrum_grid(m: int, n: int, K: int) -> list[Fraction]:
    if K < 0:
        raise ValueError("K must be >= 0")
    values = {Fraction(m) ** x * Fraction(n) ** y for x in range(-K, K + 1) for y in range(-K, K + 1)}
    return sorted(values)


def connes_T(m: int, n: int) -> float | None:
    """Positive generator of (2pi/ln m)Z ∩ (2pi/ln n)Z, if nontrivial."""
    return classify(m, n).t_generator


def integer_root(m: int, n: int) -> int | None:
    """r with m = r^b, n = r^a when m^a = n^b; None otherwise."""
    ab = mult_dependent(m, n)
    if ab is None:
        return None
    a, b = ab
    fm = prime_factorization(m)
    r = 1
    for p, e in fm.items():
        assert e % b == 0
        r *= p ** (e // b)
    return r


def lambda_exponent(value: Fraction, r: int) -> int | None:
    """N with value = r^N, decided on prime exponent vectors; None if no such N."""
    fr = prime_factorization(r)
    num, den = value.numerator, value.denominator
    vec: dict[int, int] = {}
    for p, e in prime_factorization(num).items():
        vec[p] = vec.get(p, 0) + e
    for p, e in prime_factorization(den).items():
        vec[p] = vec.get(p, 0) - e
    vec = {p: e for p, e in vec.items() if e}
    if not vec:
        return 0
    if vec.keys() - fr.keys():
        return None
    ratios = {Fraction(vec.get(p, 0), e) for p, e in fr.items()}
    if len(ratios) != 1:
        return None
    N = ratios.pop()
    return int(N) if N.denominator == 1 else None
