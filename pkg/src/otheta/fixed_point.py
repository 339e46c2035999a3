"""The sigma-fixed-point algebra as F x_rho Z.

When m^a = n^b, a bijection jmath from blue words of length a to red words
of length b gives the unitary U = sum_u s_{e_u} s_{f_jmath(u)}^*.  Every
element whose terms have degree-diff in Z(a, -b) splits uniquely as
sum_k A_k U^k with A_k in F.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .algebra import Element, adjoint, equals, identity, mul, zero
from .graph import ThetaSpec, Word, enumerate_words
from .periodicity import flip_element

__all__ = ["FlipUnitary", "Decomposition", "default_jmath", "build_U", "rho",
           "in_fixed_algebra", "decompose", "Psi", "NotFixedError"]


class NotFixedError(ValueError):
    pass


def default_jmath(a: int, b: int, theta: ThetaSpec) -> dict[Word, Word]:
    """Lexicographic order-isomorphism between blue a-words and red b-words."""
    return dict(zip(enumerate_words((a, 0), theta), enumerate_words((0, b), theta)))


@dataclass(eq=False)
class FlipUnitary:
    a: int
    b: int
    jmath: Mapping[Word, Word]
    element: Element
    _powers: dict = field(default_factory=dict, repr=False)

    @property
    def theta(self) -> ThetaSpec:
        return self.element.theta

    def power(self, k: int) -> Element:
        """U^k for any integer k (U^{-1} = U^*)."""
        if k not in self._powers:
            if k == 0:
                self._powers[0] = identity(self.theta)
            elif k == 1:
                self._powers[1] = self.element
            elif k == -1:
                self._powers[-1] = adjoint(self.element)
            else:
                step = 1 if k > 0 else -1
                self._powers[k] = mul(self.power(k - step), self.power(step))
        return self._powers[k]


def build_U(a: int, b: int, theta: ThetaSpec, jmath: Mapping[Word, Word] | None = None,
            verify: bool = True) -> FlipUnitary:
    if a < 1 or b < 1 or theta.m ** a != theta.n ** b:
        raise ValueError(f"need m^a = n^b with a, b >= 1 (m={theta.m}, n={theta.n}, a={a}, b={b})")
    if jmath is None:
        jmath = default_jmath(a, b, theta)
    blues = set(enumerate_words((a, 0), theta))
    reds = set(enumerate_words((0, b), theta))
    if set(jmath) != blues or set(jmath.values()) != reds or len(set(jmath.values())) != len(jmath):
        raise ValueError("jmath must be a bijection from blue words of length a onto red words of length b")
    U = FlipUnitary(a, b, dict(jmath), flip_element(dict(jmath), theta))
    if verify:
        I = identity(theta)
        if not (equals(mul(U.element, adjoint(U.element)), I) and equals(mul(adjoint(U.element), U.element), I)):
            raise ArithmeticError("U failed the unitarity check")
    return U


def _require_F(X: Element):
    for key in X.terms:
        if key.u.degree != key.v.degree:
            raise ValueError("argument must lie in the gauge-fixed algebra F")


def rho(U: FlipUnitary, X: Element) -> Element:
    """rho(X) = U X U^* for X in F."""
    _require_F(X)
    return mul(mul(U.element, X), U.power(-1))


def _grade(key, a: int, b: int) -> int | None:
    x, y = key.degree_diff
    if x % a or -y % b:
        return None
    k = x // a
    return k if -y // b == k else None


def in_fixed_algebra(X: Element, a: int, b: int) -> bool:
    """True iff every degree-diff lies in Z(a, -b)."""
    return all(_grade(key, a, b) is not None for key in X.terms)


@dataclass(eq=False)
class Decomposition:
    parts: dict[int, Element]

    def reassemble(self, U: FlipUnitary) -> Element:
        out = zero(U.theta)
        for k, A in self.parts.items():
            out = out + mul(A, U.power(k))
        return out

    def __getitem__(self, k: int) -> Element:
        return self.parts[k]


def decompose(X: Element, U: FlipUnitary) -> Decomposition:
    """X = sum_k A_k U^k with A_k = X_k (U^*)^k, X_k the degree-diff k(a, -b) part."""
    graded: dict[int, dict] = {}
    for key, c in X.terms.items():
        k = _grade(key, U.a, U.b)
        if k is None:
            raise NotFixedError(f"term with degree-diff {tuple(key.degree_diff)} is not sigma-fixed")
        graded.setdefault(k, {})[key] = c
    parts = {}
    for k in sorted(graded):
        Xk = Element._trusted(X.theta, graded[k], X.exact)
        Ak = mul(Xk, U.power(-k))
        if not Ak.is_zero():
            parts[k] = Ak
    return Decomposition(parts)


def Psi(X: Element, U: FlipUnitary) -> Element:
    """Expectation of the fixed algebra onto F: the k = 0 part."""
    return decompose(X, U).parts.get(0, zero(X.theta, X.exact))
