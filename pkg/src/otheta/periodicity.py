"""Periodicity search for F_theta^+.

A candidate period is a pair (a, b) with m^a = n^b.  The candidate is
accepted when commutation e_u f_v = f_v' e_u' (|u| = a, |v| = b) yields a
red prefix v' = gamma(u) that does not depend on v, and the flip unitary
W = sum_u s_{e_u} s_{f_gamma(u)}^* commutes with every s_{e_i} and s_{f_j}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, GenPair, equals, mul, s
from .graph import ThetaSpec, Word, enumerate_words, factor
from .scalars import ONE

__all__ = [
    "FACTOR_CAP", "prime_factorization", "mult_dependent", "derive_gamma", "induced_blue_map",
    "flip_element", "check_period", "find_period", "PeriodReport", "DEFAULT_BOUND",
]

FACTOR_CAP = 10 ** 6
DEFAULT_BOUND = 4


def prime_factorization(n: int) -> dict[int, int]:
    """Trial division; n must lie in [1, FACTOR_CAP]."""
    if not 1 <= n <= FACTOR_CAP:
        raise ValueError(f"factorization supports 1 <= n <= {FACTOR_CAP}, got {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mult_dependent(m: int, n: int) -> tuple[int, int] | None:
    """Minimal coprime (a, b) with m^a = n^b, or None if m, n are multiplicatively independent."""
    if m < 2 or n < 2:
        raise ValueError(f"need m, n >= 2, got m={m}, n={n}")
    fm, fn = prime_factorization(m), prime_factorization(n)
    if fm.keys() != fn.keys():
        return None
    ratios = {Fraction(fn[p], fm[p]) for p in fm}
    if len(ratios) != 1:
        return None
    r = ratios.pop()  # a / b
    a, b = r.numerator, r.denominator
    assert m ** a == n ** b
    return a, b


def _blue(u: tuple[int, ...]) -> Word:
    return Word(u, ())


def derive_gamma(a: int, b: int, theta: ThetaSpec) -> dict[Word, Word] | None:
    """Blue words of length a -> red words of length b, or None if the candidate fails."""
    if theta.m ** a != theta.n ** b:
        raise ValueError(f"m^a != n^b for m={theta.m}, n={theta.n}, a={a}, b={b}")
    gamma: dict[Word, Word] = {}
    reds = enumerate_words((0, b), theta)
    for u in enumerate_words((a, 0), theta):
        prefix = None
        for v in reds:
            head, _ = factor(Word(u.blues, v.reds), (0, b), theta)
            if prefix is None:
                prefix = head
            elif head != prefix:
                return None
        gamma[u] = prefix
    if len(set(gamma.values())) != len(gamma):
        return None
    return gamma


def induced_blue_map(a: int, b: int, theta: ThetaSpec) -> dict[Word, Word] | None:
    """v -> u' where e_u f_v = f_v' e_u', provided u' does not depend on u."""
    out: dict[Word, Word] = {}
    blues = enumerate_words((a, 0), theta)
    for v in enumerate_words((0, b), theta):
        tail = None
        for u in blues:
            _, rest = factor(Word(u.blues, v.reds), (0, b), theta)
            if tail is None:
                tail = rest
            elif rest != tail:
                return None
        out[v] = tail
    return out


def flip_element(mapping: dict[Word, Word], theta: ThetaSpec) -> Element:
    """sum_u s_{e_u} s_{f_mapping(u)}^*."""
    return Element._trusted(theta, {GenPair(u, v): ONE for u, v in mapping.items()}, True)


def check_period(a: int, b: int, theta: ThetaSpec) -> bool:
    gamma = derive_gamma(a, b, theta)
    if gamma is None:
        return False
    W = flip_element(gamma, theta)
    gens = [s(theta, Word((i,), ())) for i in range(1, theta.m + 1)]
    gens += [s(theta, Word((), (j,))) for j in range(1, theta.n + 1)]
    return all(equals(mul(W, g), mul(g, W)) for g in gens)


@dataclass(frozen=True)
class PeriodReport:
    periodic: bool
    bound: int
    unconditional: bool = False
    a: int | None = None
    b: int | None = None
    gamma: dict | None = None

    @property
    def verdict(self) -> str:
        if self.periodic:
            return f"periodic ({self.a},-{self.b})"
        if self.unconditional:
            return "aperiodic (unconditional)"
        return f"aperiodic up to bound {self.bound}"


def find_period(theta: ThetaSpec, bound: int = DEFAULT_BOUND) -> PeriodReport:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    ab = mult_dependent(theta.m, theta.n)
    if ab is None:
        return PeriodReport(periodic=False, bound=bound, unconditional=True)
    a, b = ab
    for k in range(1, bound + 1):
        if check_period(k * a, k * b, theta):
            return PeriodReport(True, bound, a=k * a, b=k * b, gamma=derive_gamma(k * a, k * b, theta))
    return PeriodReport(periodic=False, bound=bound)
