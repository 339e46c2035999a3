"""Symbolic arithmetic in O_theta on finite sums of s_u s_v^*.

An :class:`Element` is a finite map ``GenPair(u, v) -> coefficient`` bound to
a :class:`~otheta.graph.ThetaSpec`.  Exact elements carry :class:`QI`
coefficients; real-time flows produce float elements with ``complex``
coefficients.

Products use the defect-free resolution

    s_v^* s_w = sum of s_alpha s_beta^*  over  v alpha = w beta,
                d(v alpha) = d(v) v d(w)

so no relation beyond normal forms of words is ever needed.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Mapping, NamedTuple

from .graph import EMPTY, Degree, DegreeDiff, ThetaSpec, Word, concat, enumerate_words, factor, word
from .scalars import ONE, QI, as_exact, is_exact_scalar

__all__ = [
    "GenPair", "Element", "ThetaMismatch", "LevelError", "DEFAULT_TOL",
    "gen", "identity", "zero", "s", "s_star",
    "mul", "adjoint", "level", "equals", "gauge", "Phi", "omega", "tau",
    "sigma_real", "sigma_imag", "E_fixed", "omega_inner", "lambda_min",
    "left_level", "simplify",
]

DEFAULT_TOL = 1e-9


class ThetaMismatch(ValueError):
    pass


class LevelError(ValueError):
    pass


class GenPair(NamedTuple):
    """The standard generator s_u s_v^*."""

    u: Word
    v: Word

    @property
    def degree_diff(self) -> DegreeDiff:
        return DegreeDiff(len(self.u.blues) - len(self.v.blues), len(self.u.reds) - len(self.v.reds))

    def star(self) -> "GenPair":
        return GenPair(self.v, self.u)


def _sort_key(item):
    (u, v), _ = item
    return (u.blues, u.reds, v.blues, v.reds)


class Element:
    """An immutable finite linear combination of standard generators."""

    __slots__ = ("theta", "terms", "exact")

    def __init__(self, theta: ThetaSpec, terms: Mapping[GenPair, object] | None = None, exact: bool = True):
        self.theta = theta
        self.exact = exact
        clean = {}
        for key, c in (terms or {}).items():
            if exact:
                c = as_exact(c)
            else:
                c = complex(c)
            if c:
                clean[key if type(key) is GenPair else GenPair(*key)] = c
        self.terms = dict(sorted(clean.items(), key=_sort_key))

    @classmethod
    def _trusted(cls, theta, terms: dict, exact: bool) -> "Element":
        obj = object.__new__(cls)
        obj.theta = theta
        obj.exact = exact
        obj.terms = dict(sorted(((k, c) for k, c in terms.items() if c), key=_sort_key))
        return obj

    # conversions ------------------------------------------------------------

    def to_float(self) -> "Element":
        if not self.exact:
            return self
        return Element._trusted(self.theta, {k: complex(c) for k, c in self.terms.items()}, False)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coefficient(self, u: Word, v: Word):
        return self.terms.get(GenPair(u, v), ONE * 0 if self.exact else 0j)

    # arithmetic ---------------------------------------------------------------

    def _coerce(self, other: "Element") -> tuple["Element", "Element"]:
        if self.theta != other.theta:
            raise ThetaMismatch(f"elements over different theta: {self.theta} vs {other.theta}")
        if self.exact == other.exact:
            return self, other
        return self.to_float(), other.to_float()

    def __add__(self, other):
        if not isinstance(other, Element):
            if _is_scalar(other):
                return self + identity(self.theta) * other
            return NotImplemented
        a, b = self._coerce(other)
        out = dict(a.terms)
        for k, c in b.terms.items():
            out[k] = out[k] + c if k in out else c
        return Element._trusted(a.theta, out, a.exact)

    def __radd__(self, other):
        if _is_scalar(other):
            return self + other
        return NotImplemented

    def __neg__(self):
        return Element._trusted(self.theta, {k: -c for k, c in self.terms.items()}, self.exact)

    def __sub__(self, other):
        if isinstance(other, Element) or _is_scalar(other):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Element":
        if self.exact and is_exact_scalar(c):
            c = as_exact(c)
            return Element._trusted(self.theta, {k: c * x for k, x in self.terms.items()}, True)
        c = complex(c)
        return Element._trusted(self.theta, {k: c * complex(x) for k, x in self.terms.items()}, False)

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = identity(self.theta) if self.exact else identity(self.theta).to_float()
        for _ in range(k):
            out = mul(out, self)
        return out

    def star(self) -> "Element":
        return adjoint(self)

    def __eq__(self, other):
        if isinstance(other, Element):
            return equals(self, other)
        if _is_scalar(other):
            return equals(self, identity(self.theta) * other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        from .expr import format_element
        return f"Element({format_element(self, simplify=False)})"

    def __str__(self):
        from .expr import format_element
        return format_element(self)


def _is_scalar(x) -> bool:
    return isinstance(x, (QI, Rational, float, complex))


# constructors -------------------------------------------------------------

def _as_word(w, theta: ThetaSpec) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return word(w, theta)
    raise TypeError(f"expected Word or letter string, got {w!r}")


def gen(theta: ThetaSpec, u="", v="", coeff=1) -> Element:
    """coeff * s_u s_v^*; words may be given as letter strings like ``"e1 f2"``."""
    key = GenPair(_as_word(u, theta), _as_word(v, theta))
    if is_exact_scalar(coeff):
        return Element._trusted(theta, {key: as_exact(coeff)}, True)
    return Element._trusted(theta, {key: complex(coeff)}, False)


def identity(theta: ThetaSpec) -> Element:
    return Element._trusted(theta, {GenPair(EMPTY, EMPTY): ONE}, True)


def zero(theta: ThetaSpec, exact: bool = True) -> Element:
    return Element._trusted(theta, {}, exact)


def s(theta: ThetaSpec, w) -> Element:
    """The isometry s_w."""
    return gen(theta, w, EMPTY)


def s_star(theta: ThetaSpec, w) -> Element:
    return gen(theta, EMPTY, w)


# product ------------------------------------------------------------------

@lru_cache(maxsize=1 << 18)
def lambda_min(v: Word, w: Word, theta: ThetaSpec) -> tuple[tuple[Word, Word], ...]:
    """Pairs (alpha, beta) with v alpha = w beta of degree d(v) v d(w)."""
    if v == w:
        return ((EMPTY, EMPTY),)
    dv, dw = v.degree, w.degree
    if dv == dw:
        return ()
    p = dv.join(dw)
    out = []
    for alpha in enumerate_words(p.minus(dv), theta):
        z = concat(v, alpha, theta)
        head, beta = factor(z, dw, theta)
        if head == w:
            out.append((alpha, beta))
    return tuple(out)


def mul(X: Element, Y: Element, theta: ThetaSpec | None = None) -> Element:
    X, Y = X._coerce(Y)
    th = X.theta
    if theta is not None and theta != th:
        raise ThetaMismatch("theta argument does not match the elements")
    out: dict = {}
    for (u, v), c1 in X.terms.items():
        for (w, x), c2 in Y.terms.items():
            pairs = lambda_min(v, w, th)
            if not pairs:
                continue
            c = c1 * c2
            for alpha, beta in pairs:
                key = GenPair(concat(u, alpha, th), concat(x, beta, th))
                out[key] = out[key] + c if key in out else c
    return Element._trusted(th, out, X.exact)


def adjoint(X: Element) -> Element:
    return Element._trusted(X.theta, {GenPair(v, u): c.conjugate() for (u, v), c in X.terms.items()}, X.exact)


# levelling and equality ---------------------------------------------------

def left_level(X: Element) -> Degree:
    """Componentwise maximum of the left degrees d(u) over all terms."""
    k = l = 0
    for u, _ in X.terms:
        k = max(k, len(u.blues))
        l = max(l, len(u.reds))
    return Degree(k, l)


def level(X: Element, K) -> Element:
    """Rewrite every term with left degree K (an int means (K, K)).

    Each s_u s_v^* becomes the sum over alpha of degree K - d(u) of
    s_{u alpha} s_{v alpha}^*.
    """
    target = Degree(K, K) if isinstance(K, int) else Degree(*K)
    th = X.theta
    out: dict = {}
    for (u, v), c in X.terms.items():
        q = target.minus(u.degree)
        if q.blue < 0 or q.red < 0:
            raise LevelError(f"term with left degree {tuple(u.degree)} cannot be levelled to {tuple(target)}")
        if not q.blue and not q.red:
            key = GenPair(u, v)
            out[key] = out[key] + c if key in out else c
            continue
        for alpha in enumerate_words(q, th):
            key = GenPair(concat(u, alpha, th), concat(v, alpha, th))
            out[key] = out[key] + c if key in out else c
    return Element._trusted(th, out, X.exact)


def equals(X: Element, Y: Element, tol: float = DEFAULT_TOL) -> bool:
    """Value equality in O_theta, decided on a common left level."""
    D = X - Y
    if D.is_zero():
        return True
    L = level(D, left_level(D))
    if D.exact:
        return L.is_zero()
    return all(abs(c) <= tol for c in L.terms.values())


# gauge action, expectations, states ----------------------------------------

def _unit_power(t, k: int):
    if k >= 0:
        return t ** k
    return t.conjugate() ** (-k) if hasattr(t, "conjugate") else (1 / t) ** (-k)


def gauge(X: Element, t, tol: float = DEFAULT_TOL) -> Element:
    """gamma_t: multiply the coefficient of s_u s_v^* by t^{d(u) - d(v)}."""
    t1, t2 = t
    exact = X.exact and is_exact_scalar(t1) and is_exact_scalar(t2)
    if exact:
        t1, t2 = as_exact(t1), as_exact(t2)
        if t1.norm2() != 1 or t2.norm2() != 1:
            raise ValueError("gauge parameters must have modulus 1")
    else:
        t1, t2 = complex(t1), complex(t2)
        if abs(abs(t1) - 1) > tol or abs(abs(t2) - 1) > tol:
            raise ValueError("gauge parameters must have modulus 1")
        X = X.to_float()
    out = {}
    for key, c in X.terms.items():
        x, y = key.degree_diff
        out[key] = c * _unit_power(t1, x) * _unit_power(t2, y)
    return Element._trusted(X.theta, out, exact)


def Phi(X: Element) -> Element:
    """Gauge expectation onto the fixed-point algebra F."""
    return Element._trusted(X.theta, {k: c for k, c in X.terms.items() if k.u.degree == k.v.degree}, X.exact)


def _weight(u: Word, theta: ThetaSpec) -> Fraction:
    return Fraction(1, theta.m ** len(u.blues) * theta.n ** len(u.reds))


def omega(X: Element):
    """omega = tau o Phi; exact QI in exact mode, complex otherwise."""
    total = QI(0) if X.exact else 0j
    th = X.theta
    for (u, v), c in X.terms.items():
        if u == v:
            w = _weight(u, th)
            total = total + (c * w if X.exact else c * float(w))
    return total


def tau(X: Element):
    """The trace on F; X must be gauge invariant."""
    for key in X.terms:
        if key.u.degree != key.v.degree:
            raise ValueError(f"tau is defined on F only; term with degree-diff {tuple(key.degree_diff)}")
    return omega(X)


def omega_inner(X: Element, Y: Element):
    """<X, Y>_omega = omega(Y^* X)."""
    return omega(mul(adjoint(Y), X))


# modular flow -------------------------------------------------------------

def sigma_real(X: Element, t: float) -> Element:
    """sigma_t(s_u s_v^*) = m^{itx} n^{ity} s_u s_v^* with (x, y) = d(v) - d(u)."""
    th = X.theta
    lm, ln = math.log(th.m), math.log(th.n)
    Xf = X.to_float()
    out = {}
    for key, c in Xf.terms.items():
        dx, dy = key.degree_diff
        out[key] = c * cmath.exp(1j * t * (-dx * lm - dy * ln))
    return Element._trusted(th, out, False)


def modular_factor(key: GenPair, theta: ThetaSpec, beta) -> Fraction:
    """m^{-beta x} n^{-beta y}, (x, y) = d(v) - d(u), for integral beta."""
    dx, dy = key.degree_diff
    e1, e2 = beta * dx, beta * dy  # -beta * (d(v) - d(u)) = beta * (d(u) - d(v))
    return Fraction(theta.m) ** e1 * Fraction(theta.n) ** e2


def sigma_imag(X: Element, beta) -> Element:
    """Analytic continuation sigma_{i beta}; exact for integral beta."""
    th = X.theta
    beta = Fraction(beta)
    if beta.denominator == 1 and X.exact:
        b = int(beta)
        return Element._trusted(th, {k: c * modular_factor(k, th, b) for k, c in X.terms.items()}, True)
    Xf = X.to_float()
    out = {}
    for key, c in Xf.terms.items():
        dx, dy = key.degree_diff
        out[key] = c * (th.m ** float(beta * dx)) * (th.n ** float(beta * dy))
    return Element._trusted(th, out, False)


def E_fixed(X: Element, a: int, b: int) -> Element:
    """Expectation onto the sigma-fixed algebra: keep terms with b x + a y = 0."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    keep = {}
    for key, c in X.terms.items():
        x, y = key.degree_diff
        if b * x + a * y == 0:
            keep[key] = c
    return Element._trusted(X.theta, keep, X.exact)


# display helper -----------------------------------------------------------

def simplify(X: Element) -> Element:
    """Contract complete families sum_alpha c s_{u alpha} s_{v alpha}^* into c s_u s_v^*.

    The value is unchanged; this only shortens the term list for display.
    """
    th = X.theta
    terms = dict(X.terms)
    changed = True
    while changed:
        changed = False
        for key in sorted(terms, key=lambda k: (-k.u.length - k.v.length, k.u, k.v)):
            if key not in terms:
                continue
            c = terms[key]
            u, v = key
            for delta in ((0, 1), (1, 0)):
                du, dv = u.degree, v.degree
                if du.blue < delta[0] or du.red < delta[1] or dv.blue < delta[0] or dv.red < delta[1]:
                    continue
                u0, a1 = factor(u, du.minus(delta), th)
                v0, a2 = factor(v, dv.minus(delta), th)
                if a1 != a2:
                    continue
                family = [GenPair(concat(u0, al, th), concat(v0, al, th)) for al in enumerate_words(delta, th)]
                if all(f in terms and _close(terms[f], c, X.exact) for f in family):
                    for f in family:
                        del terms[f]
                    target = GenPair(u0, v0)
                    terms[target] = terms[target] + c if target in terms else c
                    if not terms[target]:
                        del terms[target]
                    changed = True
                    break
    return Element._trusted(th, terms, X.exact)


def _close(a, b, exact: bool) -> bool:
    return a == b if exact else abs(a - b) <= DEFAULT_TOL
