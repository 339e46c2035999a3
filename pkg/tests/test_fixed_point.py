import random
import time
from fractions import Fraction

import pytest

from otheta.algebra import Phi, adjoint, equals, gen, identity, mul, omega, s, tau, zero
from otheta.fixed_point import NotFixedError, Psi, build_U, decompose, in_fixed_algebra, rho
from otheta.graph import ThetaSpec, Word, enumerate_words, theta_family



def _fam(m):
    return theta_family(m, m, 3)


def test_build_U_example(id22):
    U = build_U(1, 1, id22)
    assert U.element == gen(id22, "e1", "f1") + gen(id22, "e2", "f2")
    assert U.jmath == {Word((1,), ()): Word((), (1,)), Word((2,), ()): Word((), (2,))}


def test_build_U_errors(id22):
    with pytest.raises(ValueError):
        build_U(1, 1, ThetaSpec.identity(2, 3))
    bad = {Word((1,), ()): Word((), (1,)), Word((2,), ()): Word((), (1,))}
    with pytest.raises(ValueError):
        build_U(1, 1, id22, bad)


@pytest.mark.parametrize("m", [2, 3])
def test_U_powers_unitary(m):
    for theta in _fam(m):
        U = build_U(1, 1, theta)
        I = identity(theta)
        Ustar = adjoint(U.element)
        assert equals(mul(U.element, Ustar), I) and equals(mul(Ustar, U.element), I)
        star_k = I
        for k in (1, 2, 3):
            star_k = mul(star_k, Ustar)
            assert equals(mul(U.power(k), star_k), I)
            assert equals(star_k, U.power(-k))


def test_U_for_4_8_fast():
    t0 = time.perf_counter()
    U = build_U(3, 2, ThetaSpec.identity(4, 8))
    assert len(U.element) == 64
    assert time.perf_counter() - t0 < 60


def test_in_fixed_algebra_examples(id22):
    assert in_fixed_algebra(identity(id22), 1, 1)
    assert not in_fixed_algebra(s(id22, "e1"), 1, 1)
    assert in_fixed_algebra(gen(id22, "e1", "f1"), 1, 1)
    t48 = ThetaSpec.identity(4, 8)
    assert in_fixed_algebra(gen(t48, "e1 e2 e3", "f1 f2"), 3, 2)
    assert not in_fixed_algebra(gen(t48, "e1", "f1"), 3, 2)


def test_decompose_examples(id22):
    U = build_U(1, 1, id22)
    d = decompose(gen(id22, "e1", "f1"), U)
    assert set(d.parts) == {1} and d[1] == gen(id22, "e1", "e1")
    assert set(decompose(U.element, U).parts) == {1} and decompose(U.element, U)[1] == identity(id22)
    X = gen(id22, "e1 f2", "e2 f2", Fraction(2, 3))
    d = decompose(X, U)
    assert set(d.parts) == {0} and d[0] == X
    with pytest.raises(NotFixedError):
        decompose(s(id22, "e1"), U)


def test_psi_examples(id22):
    U = build_U(1, 1, id22)
    assert Psi(U.element, U).is_zero()
    X = gen(id22, "e1", "e2")
    assert Psi(X, U) == X


def _random_F(theta, rng, k=1, terms=3):
    ws = enumerate_words((k, k), theta)
    return sum((gen(theta, rng.choice(ws), rng.choice(ws), Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
                for _ in range(terms)), zero(theta))


@pytest.mark.parametrize("m", [2, 3])
def test_decompose_reassemble_roundtrip(m):
    rng = random.Random(m)
    for theta in _fam(m):
        U = build_U(1, 1, theta)
        for _ in range(8):
            parts = {k: _random_F(theta, rng, terms=2) for k in rng.sample(range(-2, 3), 2)}
            X = sum((mul(A, U.power(k)) for k, A in parts.items()), zero(theta))
            assert in_fixed_algebra(X, 1, 1)
            d = decompose(X, U)
            for k, A in d.parts.items():
                assert Phi(A) == A
                assert equals(A, parts.get(k, zero(theta)))
            assert equals(d.reassemble(U), X)
            assert omega(Psi(X, U)) == omega(X)
            assert equals(Psi(X, U), Phi(X))


def test_decompose_4_8():
    theta = ThetaSpec.identity(4, 8)
    U = build_U(3, 2, theta)
    X = gen(theta, "e1 e2 e3", "f1 f2") + gen(theta, "f1 f1", "e4 e4 e4", 3) + gen(theta, "e1", "e2")
    d = decompose(X, U)
    assert set(d.parts) == {-1, 0, 1}
    assert equals(d.reassemble(U), X)


@pytest.mark.parametrize("m", [2, 3])
def test_choice_of_jmath_not_essential(m):
    rng = random.Random(10 + m)
    theta = ThetaSpec.identity(m, m)
    U = build_U(1, 1, theta)
    blues, reds = enumerate_words((1, 0), theta), enumerate_words((0, 1), theta)
    for _ in range(4):
        perm = list(reds)
        rng.shuffle(perm)
        V = build_U(1, 1, theta, dict(zip(blues, perm)))
        W = mul(adjoint(U.element), V.element)
        assert equals(Phi(W), W)
        assert equals(V.element, mul(U.element, W))


@pytest.mark.parametrize("m", [2, 3])
def test_rho_is_star_endomorphism_of_F1(m):
    rng = random.Random(20 + m)
    for theta in _fam(m):
        U = build_U(1, 1, theta)
        assert equals(rho(U, identity(theta)), identity(theta))
        for _ in range(6):
            X, Y = _random_F(theta, rng), _random_F(theta, rng)
            rX = rho(U, X)
            assert equals(Phi(rX), rX)
            assert equals(rho(U, mul(X, Y)), mul(rX, rho(U, Y)))
            assert equals(rho(U, adjoint(X)), adjoint(rX))
            assert tau(rX) == tau(X)


def test_rho_rejects_non_F(id22):
    with pytest.raises(ValueError):
        rho(build_U(1, 1, id22), s(id22, "e1"))


def test_rho_trace_invariance_2x2():
    rng = random.Random(5)
    for theta in _fam(2):
        U = build_U(1, 1, theta)
        for _ in range(10):
            X = _random_F(theta, rng, terms=4)
            assert tau(rho(U, X)) == tau(X)
