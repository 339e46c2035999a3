import random
from fractions import Fraction

import pytest

from otheta.algebra import adjoint, gen, identity, s, tau, zero
from otheta.fixed_point import build_U, rho
from otheta.graph import ThetaSpec, enumerate_words, theta_family
from otheta.matrix_rep import (DenseMatrix, embed_check, from_matrix, level_basis, normalized_trace,
                               oracle_mul_check, refine, rep)
from otheta.scalars import QI


def _unit(dim, i, j):
    M = DenseMatrix.zeros(dim)
    M.entries[i, j] = QI(1)
    return M


def _random_F(theta, rng, k=1, terms=4, complex_coeffs=True):
    ws = enumerate_words((k, k), theta)
    out = zero(theta)
    for _ in range(terms):
        c = QI(Fraction(rng.randint(-5, 5), rng.randint(1, 4)), rng.randint(-2, 2) if complex_coeffs else 0)
        out = out + gen(theta, rng.choice(ws), rng.choice(ws), c)
    return out


def test_basis(id22):
    b = level_basis(id22, 2)
    assert len(b) == 16 and b.index[b.words[5]] == 5
    with pytest.raises(ValueError):
        level_basis(ThetaSpec.identity(3, 3), 4)


def test_rep_examples(id22):
    I4 = rep(identity(id22), 1)
    assert I4 == DenseMatrix(I4.entries) and all(I4.entries[i, i] == 1 for i in range(4))
    assert I4.trace() == 4
    assert rep(gen(id22, "e1 f1", "e1 f1"), 1) == _unit(4, 0, 0)
    with pytest.raises(ValueError):
        rep(s(id22, "e1"), 1)
    with pytest.raises(ValueError):
        rep(gen(id22, "e1", "e1", 0.5), 1)


def test_rep_unit_composition(id22):
    X = gen(id22, "e1 f1", "e1 f2")
    Y = gen(id22, "e1 f2", "e2 f1")
    assert oracle_mul_check(X, Y, 1)
    b = level_basis(id22, 1)
    P = rep(X, 1) @ rep(Y, 1)
    assert P == _unit(4, b.index[next(iter(X.terms)).u], b.index[next(iter(Y.terms)).v])


def test_oracle_identity(id22):
    I = identity(id22)
    assert oracle_mul_check(I, I, 1)


@pytest.mark.parametrize("theta", [ThetaSpec.flip(2), ThetaSpec.identity(2, 3), ThetaSpec.random(3, 2, random.Random(1))],
                         ids=str)
def test_oracle_exhaustive_k1(theta):
    ws = enumerate_words((1, 1), theta)
    gens = [gen(theta, u, v) for u in ws for v in ws]
    for X in gens:
        for Y in gens:
            assert oracle_mul_check(X, Y, 1)


def test_star_iso_and_injective():
    rng = random.Random(3)
    for theta in theta_family(2, 2, 2) + theta_family(2, 3, 1):
        for k in (1, 2):
            for _ in range(5):
                X = _random_F(theta, rng, k)
                Y = _random_F(theta, rng, k)
                assert rep(adjoint(X), k) == rep(X, k).conj_transpose()
                assert rep(X + Y, k) == rep(X, k) + rep(Y, k)
                assert oracle_mul_check(X, Y, k)
                assert from_matrix(rep(X, k), theta, k) == X
                assert rep(X, k).is_zero() == (X == 0)


def test_embed_examples(id22):
    assert embed_check(identity(id22), 1)
    X = gen(id22, "e1 f1", "e1 f1")
    M2 = rep(X, 2)
    rank = sum(1 for c in M2.entries.flat if c)  # a diagonal projection: rank = number of ones
    assert rank == 4 and M2 == refine(rep(X, 1), id22, 1)
    assert normalized_trace(rep(X, 1)) == normalized_trace(M2) == Fraction(1, 4)


def test_normalized_trace_is_tau():
    rng = random.Random(8)
    for theta in theta_family(2, 3, 2) + theta_family(3, 3, 1):
        for k in (1, 2) if theta.m * theta.n <= 6 else (1,):
            X = _random_F(theta, rng, k, terms=6)
            assert normalized_trace(rep(X, k)) == tau(X)
            assert embed_check(X, k)


def test_from_matrix_coefficient_types(id22):
    M = DenseMatrix.zeros(4)
    M.entries[1, 2] = QI(0, 1)
    X = from_matrix(M, id22, 1)
    assert X.exact and len(X) == 1


@pytest.mark.parametrize("m", [2, 3])
def test_rho_preserves_trace_and_spectrum(m):
    rng = random.Random(30 + m)
    for theta in theta_family(m, m, 2):
        U = build_U(1, 1, theta)
        for _ in range(3):
            X = _random_F(theta, rng, 1, terms=4, complex_coeffs=False)
            R = rho(U, X)
            A, B = rep(X, 2), rep(R, 2)
            # all dim power traces fix the characteristic polynomial (Newton identities);
            # for m = 3 (dim 81) only a prefix is compared to keep the run short
            count = A.dim if m == 2 else 12
            assert A.power_traces(count) == B.power_traces(count)
            assert A.trace() == B.trace()
