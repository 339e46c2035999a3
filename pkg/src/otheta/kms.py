"""KMS checks for the distinguished state omega.

omega is sigma-KMS at beta = -1:  omega(AB) = omega(B sigma_{-i}(A)).
:func:`kms_check` evaluates the residual symbolically for one pair.
:func:`kms_suite` covers every pair of standard generators s_u s_v^* with
d(u), d(v) <= (D, D) by tabulating the support of (A, B) -> omega(AB)
exactly: a pair outside the support has omega(AB) = omega(BA) = 0.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .algebra import Element, GenPair, gen, modular_factor, mul, omega, sigma_imag
from .graph import EMPTY, Degree, ThetaSpec, Word, concat, enumerate_words, factor, words_up_to
from .scalars import QI

__all__ = ["KmsResidual", "kms_residual", "kms_check", "beta_scan", "omega_product_table",
           "KmsSuiteResult", "kms_suite", "id_vanishing_check", "tensor_split_check",
           "vanishing_failures", "tensor_split_failures", "report_line"]


@dataclass(frozen=True)
class KmsResidual:
    A: Element
    B: Element
    beta: Fraction
    residual: object


def kms_residual(A: Element, B: Element, beta) -> object:
    """omega(AB) - omega(B sigma_{i beta}(A))."""
    return omega(mul(A, B)) - omega(mul(B, sigma_imag(A, beta)))


def kms_check(A: Element, B: Element):
    if not (A.exact and B.exact):
        raise ValueError("kms_check needs exact elements")
    return kms_residual(A, B, -1)


def beta_scan(A: Element, B: Element, betas: Iterable) -> list[KmsResidual]:
    return [KmsResidual(A, B, Fraction(b), kms_residual(A, B, b)) for b in betas]


# exhaustive pair table ------------------------------------------------------

def omega_product_table(theta: ThetaSpec, maxdeg: int = 2) -> dict[tuple[GenPair, GenPair], Fraction]:
    """All nonzero omega(s_u s_v^* s_w s_x^*) for words of degree <= (maxdeg, maxdeg).

    s_v^* s_w is resolved by enumerating z of degree d(v) v d(w): z = v alpha =
    w beta.  The product term s_{u alpha} s_{x beta}^* survives omega iff
    u alpha = x beta =: y, contributing m^{-k} n^{-l} for d(y) = (k, l).
    """
    D = Degree(maxdeg, maxdeg)
    words = words_up_to(D, theta)
    degrees = [Degree(k, l) for k in range(maxdeg + 1) for l in range(maxdeg + 1)]
    weights: dict = {}

    def weight(d):
        if d not in weights:
            weights[d] = Fraction(1, theta.m ** d[0] * theta.n ** d[1])
        return weights[d]

    table: dict = defaultdict(Fraction)
    for dv in degrees:
        for dw in degrees:
            p = dv.join(dw)
            for z in enumerate_words(p, theta):
                v, alpha = factor(z, dv, theta)
                w, beta = factor(z, dw, theta)
                db = beta.degree
                for u in words:
                    y = concat(u, alpha, theta)
                    dy = y.degree
                    dx = (dy[0] - db[0], dy[1] - db[1])
                    if dx[0] < 0 or dx[1] < 0 or dx[0] > maxdeg or dx[1] > maxdeg:
                        continue
                    x, tail = factor(y, dx, theta)
                    if tail == beta:
                        table[(GenPair(u, v), GenPair(w, x))] += weight(dy)
    return {k: val for k, val in table.items() if val}


@dataclass
class KmsSuiteResult:
    theta: ThetaSpec
    maxdeg: int
    generators: int
    support: int
    failures: list = field(default_factory=list)

    @property
    def pairs(self) -> int:
        return self.generators ** 2

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def max_residual(self) -> Fraction:
        return max((abs(r) for _, _, r in self.failures), default=Fraction(0))


def kms_suite(theta: ThetaSpec, maxdeg: int = 2, table: dict | None = None) -> KmsSuiteResult:
    """Residual omega(AB) - m^x n^y omega(BA) over all generator pairs (A, B).

    ``table`` may be passed in when the caller already built it for the same (theta, maxdeg).
    """
    if table is None:
        table = omega_product_table(theta, maxdeg)
    ngen = len(words_up_to((maxdeg, maxdeg), theta)) ** 2
    result = KmsSuiteResult(theta, maxdeg, ngen, len(table))
    seen = set()
    factors: dict = {}  # modular factor depends on the degree-diff only
    for A, B in list(table):
        for pair in ((A, B), (B, A)):
            if pair in seen:
                continue
            seen.add(pair)
            X, Y = pair
            dd = X.degree_diff
            if dd not in factors:
                factors[dd] = modular_factor(X, theta, -1)
            r = table.get((X, Y), 0) - factors[dd] * table.get((Y, X), 0)
            if r:
                result.failures.append((X, Y, r))
    return result


# theta = id identities ---------------------------------------------------------

def _pm(theta: ThetaSpec, w: Word, sign: int) -> Element:
    return gen(theta, w, EMPTY) if sign > 0 else gen(theta, EMPTY, w)


def vanishing_failures(m: int, n: int, maxlen: int = 2) -> list[str]:
    theta = ThetaSpec.identity(m, n)
    bad = []
    blues = [u for k in range(1, maxlen + 1) for u in enumerate_words((k, 0), theta)]
    reds = [v for l in range(1, maxlen + 1) for v in enumerate_words((0, l), theta)]
    for u in blues:
        for v in reds:
            for su in (1, -1):
                for sv in (1, -1):
                    val = omega(mul(_pm(theta, v, sv), _pm(theta, u, su)))
                    if val:
                        bad.append(f"omega(s_f{v}^{sv} s_e{u}^{su}) = {val}")
    # case |v| = 0 (and symmetrically |u| = 0): resolve the identity on the other colour
    for w, other in [(u, (0, 1)) for u in blues] + [(v, (1, 0)) for v in reds]:
        for sg in (1, -1):
            X = _pm(theta, w, sg)
            total = QI(0)
            for z in enumerate_words(other, theta):
                total = total + omega(mul(X, gen(theta, z, z)))
            direct = omega(X)
            if total != direct or direct:
                bad.append(f"resolution check failed for {w}^{sg}: {total} vs {direct}")
    return bad


def id_vanishing_check(m: int, n: int, maxlen: int = 2) -> bool:
    return not vanishing_failures(m, n, maxlen)


def tensor_split_failures(m: int, n: int, maxdeg: int = 2) -> list[str]:
    theta = ThetaSpec.identity(m, n)
    blues = [w.blues for k in range(maxdeg + 1) for w in enumerate_words((k, 0), theta)]
    reds = [w.reds for l in range(maxdeg + 1) for w in enumerate_words((0, l), theta)]
    om_m = {}
    for u1 in blues:
        for u2 in blues:
            om_m[u1, u2] = omega(gen(theta, Word(u1, ()), Word(u2, ())))
    om_n = {}
    for v1 in reds:
        for v2 in reds:
            om_n[v1, v2] = omega(gen(theta, Word((), v1), Word((), v2)))
    bad = []
    for u1 in blues:
        for u2 in blues:
            for v1 in reds:
                for v2 in reds:
                    lhs = omega(gen(theta, Word(u1, v1), Word(u2, v2)))
                    rhs = om_m[u1, u2] * om_n[v1, v2]
                    closed = Fraction(1, m ** len(u1) * n ** len(v1)) if (u1 == u2 and v1 == v2) else 0
                    if not (lhs == rhs == closed):
                        bad.append(f"{u1},{v1};{u2},{v2}: {lhs} vs {rhs} vs {closed}")
    return bad


def tensor_split_check(m: int, n: int, maxdeg: int = 2) -> bool:
    return not tensor_split_failures(m, n, maxdeg)


def report_line(ok: bool, name: str, residual) -> str:
    return f"{'PASS' if ok else 'FAIL'} {name} {residual}"
