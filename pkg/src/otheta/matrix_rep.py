"""Matrix realisation of the UHF filtration F_k = M_{(mn)^k}.

s_u s_v^* with d(u) = d(v) = (k, k) maps to the matrix unit E_{u,v}, with
rows and columns indexed by the lexicographic list of words of degree
(k, k).  Matrices are exact (object arrays of QI) and serve as an oracle
for the symbolic product, adjoint and trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .algebra import Element, GenPair, level, mul
from .graph import ThetaSpec, Word, concat, enumerate_words
from .scalars import QI

__all__ = ["LevelBasis", "DenseMatrix", "MAX_DIM", "level_basis", "rep", "oracle_mul_check",
           "embed_check", "refine", "from_matrix"]

MAX_DIM = 4096


@dataclass(frozen=True)
class LevelBasis:
    k: int
    words: tuple[Word, ...]
    index: dict

    def __len__(self):
        return len(self.words)


@lru_cache(maxsize=64)
def level_basis(theta: ThetaSpec, k: int, max_dim: int = MAX_DIM) -> LevelBasis:
    dim = (theta.m * theta.n) ** k
    if dim > max_dim:
        raise ValueError(f"level {k} has dimension {dim} > cap {max_dim}")
    words = enumerate_words((k, k), theta)
    return LevelBasis(k, words, {w: i for i, w in enumerate(words)})


_Q0 = QI(0)
_SMALL = 1 << 20  # keeps int64 products exact for dim <= MAX_DIM


class DenseMatrix:
    """Square matrix with exact QI entries."""

    __slots__ = ("entries",)

    def __init__(self, entries: np.ndarray):
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError("matrix must be square")
        self.entries = entries

    @classmethod
    def zeros(cls, dim: int) -> "DenseMatrix":
        a = np.empty((dim, dim), dtype=object)
        a.fill(_Q0)
        return cls(a)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def _small_integral(self) -> bool:
        return all(not c.im and c.re.denominator == 1 and abs(c.re.numerator) < _SMALL for c in self.entries.flat)

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        if self._small_integral() and other._small_integral():
            a = np.array([[int(c.re) for c in row] for row in self.entries], dtype=np.int64)
            b = np.array([[int(c.re) for c in row] for row in other.entries], dtype=np.int64)
            prod = a @ b
            out = np.empty(prod.shape, dtype=object)
            for idx, v in np.ndenumerate(prod):
                out[idx] = QI(int(v))
            return DenseMatrix(out)
        out = DenseMatrix.zeros(self.dim)
        A, B = self.entries, other.entries
        nz_cols = [[(j, B[i, j]) for j in range(self.dim) if B[i, j]] for i in range(self.dim)]
        for r in range(self.dim):
            row = out.entries[r]
            for i in range(self.dim):
                a = A[r, i]
                if not a:
                    continue
                for j, b in nz_cols[i]:
                    row[j] = row[j] + a * b
        return out

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        return DenseMatrix(self.entries + other.entries)

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.dim == other.dim and all(a == b for a, b in zip(self.entries.flat, other.entries.flat))

    __hash__ = None  # type: ignore[assignment]

    def conj_transpose(self) -> "DenseMatrix":
        out = np.empty_like(self.entries)
        for (i, j), c in np.ndenumerate(self.entries):
            out[j, i] = c.conjugate()
        return DenseMatrix(out)

    def trace(self) -> QI:
        total = QI(0)
        for i in range(self.dim):
            total = total + self.entries[i, i]
        return total

    def is_zero(self) -> bool:
        return not any(self.entries.flat)

    def to_complex(self) -> np.ndarray:
        return np.array([[complex(c) for c in row] for row in self.entries], dtype=complex)

    def power_traces(self, count: int | None = None) -> list[QI]:
        """tr(M^j), j = 1..count (default dim); equal lists mean equal char. polynomials."""
        count = self.dim if count is None else count
        out, P = [], self
        for j in range(count):
            if j:
                P = P @ self
            out.append(P.trace())
        return out

    def dump(self) -> str:
        """Row-major plain text; entries written as p/q (complex as (p/q + r/s*i))."""
        return "\n".join(" ".join(str(c) for c in row) for row in self.entries) + "\n"


def rep(X: Element, k: int, max_dim: int = MAX_DIM) -> DenseMatrix:
    if not X.exact:
        raise ValueError("the matrix oracle works in exact mode only")
    if any(key.u.degree != key.v.degree for key in X.terms):
        raise ValueError("rep is defined on the gauge-fixed algebra F only")
    basis = level_basis(X.theta, k, max_dim)
    L = level(X, k)
    M = DenseMatrix.zeros(len(basis))
    for (u, v), c in L.terms.items():
        M.entries[basis.index[u], basis.index[v]] = c
    return M


def from_matrix(M: DenseMatrix, theta: ThetaSpec, k: int) -> Element:
    """Inverse of rep at level k."""
    basis = level_basis(theta, k)
    terms = {}
    for (i, j), c in np.ndenumerate(M.entries):
        if c:
            terms[GenPair(basis.words[i], basis.words[j])] = c
    return Element(theta, terms)


def oracle_mul_check(X: Element, Y: Element, k: int) -> bool:
    return rep(mul(X, Y), k) == rep(X, k) @ rep(Y, k)


def refine(M: DenseMatrix, theta: ThetaSpec, k: int) -> DenseMatrix:
    """Image of M under E_{u,v} -> sum_w E_{uw, vw}, w of degree (1, 1)."""
    small, big = level_basis(theta, k), level_basis(theta, k + 1)
    ext = enumerate_words((1, 1), theta)
    out = DenseMatrix.zeros(len(big))
    for (i, j), c in np.ndenumerate(M.entries):
        if not c:
            continue
        u, v = small.words[i], small.words[j]
        for w in ext:
            out.entries[big.index[concat(u, w, theta)], big.index[concat(v, w, theta)]] = c
    return out


def embed_check(X: Element, k: int) -> bool:
    return rep(X, k + 1) == refine(rep(X, k), X.theta, k)


def normalized_trace(M: DenseMatrix) -> QI:
    return M.trace() * Fraction(1, M.dim)
